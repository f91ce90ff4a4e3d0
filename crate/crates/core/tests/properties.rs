use proptest::prelude::*;

use involutive_upsilon::complex::validate;
use involutive_upsilon::pl::{parse_rational, Line, PlFunction};
use involutive_upsilon::reduction::{
    closed_form_cone_reduction, essential_profile, is_reduced, materialize_closed_form,
};
use involutive_upsilon::upsilon::{nu_function_with, upsilon_of_class, NuEngine};
use involutive_upsilon::{fold, reduce_bifiltered, staircase_from_steps, Knot, Rational, Sign, StaircaseSpec};

fn sign() -> impl Strategy<Value = Sign> {
    prop_oneof![Just(Sign::Positive), Just(Sign::Negative)]
}

/// Even-length step lists; odd lengths end in a connector and are acyclic.
fn even_steps() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec((1u32..4, 1u32..4), 1..5)
        .prop_map(|v| v.into_iter().flat_map(|(a, b)| [a, b]).collect())
}

fn lines() -> impl Strategy<Value = Vec<Line>> {
    prop::collection::vec((-12i64..=12, -8i64..=8), 1..6)
        .prop_map(|v| v.into_iter().map(|(a, b)| Line::new(a, b)).collect())
}

fn t_value() -> impl Strategy<Value = Rational> {
    (1i64..=24).prop_flat_map(|d| (0..=2 * d).prop_map(move |n| Rational::new(n, d)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn staircases_are_valid(steps in prop::collection::vec(1u32..4, 1..9), s in sign()) {
        let n = steps.len();
        let spec = StaircaseSpec::new(steps, s).unwrap();
        let c = staircase_from_steps(&spec);
        prop_assert!(validate(&c).ok);
        let ranks = c.homology_ranks();
        prop_assert_eq!(ranks, if n % 2 == 0 { [1, 0] } else { [0, 0] });
    }

    #[test]
    fn symmetric_cones_match_closed_form(half in prop::collection::vec(1u32..5, 0..6), s in sign()) {
        let spec = StaircaseSpec::symmetric_from_half(&half, s).unwrap();
        let knot = Knot::from_staircase(&spec);
        let cone = knot.cone().unwrap();
        prop_assert!(validate(&cone).ok);
        prop_assert_eq!(cone.homology_ranks(), [1, 1]);
        let red = reduce_bifiltered(&cone).reduced;
        prop_assert!(is_reduced(&red));
        let closed = materialize_closed_form(&closed_form_cone_reduction(&spec).unwrap());
        prop_assert_eq!(essential_profile(&red), essential_profile(&closed));
        for h in [0, 1] {
            prop_assert_eq!(
                upsilon_of_class(&red, h, NuEngine::Sweep).unwrap(),
                upsilon_of_class(&closed, h, NuEngine::default()).unwrap()
            );
        }
    }

    #[test]
    fn folded_nu_engines_agree(steps in even_steps(), s in sign()) {
        let spec = StaircaseSpec::new(steps, s).unwrap();
        let c = fold(&staircase_from_steps(&spec)).unwrap();
        prop_assert_eq!(
            nu_function_with(&c, 0, NuEngine::Sweep).unwrap(),
            nu_function_with(&c, 0, NuEngine::default()).unwrap()
        );
    }

    #[test]
    fn envelope_is_pointwise_min(ls in lines(), t in t_value()) {
        let f = PlFunction::lower_envelope(&ls);
        let direct = ls.iter().map(|l| l.eval(t)).min().unwrap();
        prop_assert_eq!(f.eval(t).unwrap(), direct);
        prop_assert_eq!(f.normalized(), f.clone());
    }

    #[test]
    fn max_and_min_are_pointwise(a in lines(), b in lines(), t in t_value()) {
        let f = PlFunction::lower_envelope(&a);
        let g = PlFunction::lower_envelope(&b);
        prop_assert_eq!(f.max(&g).eval(t).unwrap(), f.eval(t).unwrap().max(g.eval(t).unwrap()));
        prop_assert_eq!(f.min(&g).eval(t).unwrap(), f.eval(t).unwrap().min(g.eval(t).unwrap()));
        prop_assert_eq!(f.max(&g), g.max(&f));
    }

    #[test]
    fn csv_round_trip(a in lines(), b in lines()) {
        let f = PlFunction::lower_envelope(&a).max(&PlFunction::lower_envelope(&b));
        prop_assert_eq!(PlFunction::from_csv(&f.to_csv()).unwrap(), f);
    }

    #[test]
    fn rational_parsing(n in -1000i64..1000, d in 1i64..100) {
        let r = Rational::new(n, d);
        prop_assert_eq!(parse_rational(&format!("{}/{}", r.numer(), r.denom())).unwrap(), r);
    }
}
