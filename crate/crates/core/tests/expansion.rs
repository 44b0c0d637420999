mod common;

use common::{ideal_strategy, q};
use proptest::prelude::*;
use rp_core::expansion::expansion_rational_refined;
use rp_core::{
    expansion_integer, expansion_rational, external_sum, integral_closure_power,
    nu_star_integrality, rational_power, symbolic_power_squarefree, verify_integer_expansion,
    verify_rational_expansion, MonomialIdeal, VariableContext,
};

const X: &[&str] = &["x"];
const XY: &[&str] = &["x", "y"];
const UV: &[&str] = &["u", "v"];

fn u_strategy() -> impl Strategy<Value = rp_core::Rational> {
    (0i64..=7, 1i64..=3).prop_map(|(n, d)| q(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn rational_expansion_equals_power_of_sum(
        i in ideal_strategy(XY, 2, 3),
        j in ideal_strategy(UV, 2, 2),
        u in u_strategy(),
    ) {
        let report = verify_rational_expansion(&i, &j, &u).unwrap();
        prop_assert!(report.right_in_left);
        prop_assert!(report.equal, "missing {:?}", report.missing_strings());
    }

    #[test]
    fn refined_grid_changes_nothing(
        i in ideal_strategy(X, 2, 3),
        j in ideal_strategy(UV, 2, 3),
        u in u_strategy(),
    ) {
        prop_assert_eq!(
            expansion_rational(&i, &j, &u).unwrap(),
            expansion_rational_refined(&i, &j, &u, 2).unwrap()
        );
    }

    #[test]
    fn expansions_lie_inside_closures(
        i in ideal_strategy(XY, 2, 3),
        j in ideal_strategy(UV, 2, 3),
        k in 1u32..=3,
    ) {
        let (sum, _) = external_sum(&i, &j).unwrap();
        let closure = integral_closure_power(&sum, k).unwrap();
        prop_assert!(closure.contains(&expansion_integer(&i, &j, k).unwrap()).unwrap());
        let u = q(2 * k as i64 - 1, 2);
        let power = rational_power(&sum, &u).unwrap().result;
        prop_assert!(power.contains(&expansion_rational(&i, &j, &u).unwrap()).unwrap());
    }

    #[test]
    fn integer_expansion_under_integrality(
        i in ideal_strategy(XY, 3, 2),
        j in ideal_strategy(UV, 2, 3),
        k in 1u32..=3,
    ) {
        let report = verify_integer_expansion(&i, &j, k).unwrap();
        prop_assert!(report.right_in_left);
        if nu_star_integrality(&i).unwrap().integral {
            prop_assert!(report.equal, "missing {:?}", report.missing_strings());
        }
        prop_assert!(!report.theorem_violated());
    }

    #[test]
    fn symbolic_power_containments(
        gens in proptest::collection::vec(proptest::collection::vec(0u32..=1, 4), 1..=4),
        k in 1u32..=3,
    ) {
        prop_assume!(gens.iter().all(|g| g.iter().any(|&e| e > 0)));
        let ctx = VariableContext::new(["a", "b", "c", "d"]).unwrap();
        let i = MonomialIdeal::minimalize(ctx, gens.into_iter().map(rp_core::ExponentVector::new)).unwrap();
        let symbolic = symbolic_power_squarefree(&i, k).unwrap();
        prop_assert!(symbolic.contains(&i.power(k)).unwrap());
        prop_assert!(symbolic.contains(&integral_closure_power(&i, k).unwrap()).unwrap());
    }
}
