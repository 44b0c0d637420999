mod common;

use common::{ideal_strategy, is_antichain};
use proptest::prelude::*;
use rp_core::{parse_ideal, ExponentVector, MonomialIdeal};

const XYZ: &[&str] = &["x", "y", "z"];

fn all_monomials(n: usize, max_degree: u32) -> Vec<ExponentVector> {
    common::box_points(&vec![max_degree; n])
        .into_iter()
        .filter(|a| a.degree() <= max_degree)
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn operations_return_antichains(i in ideal_strategy(XYZ, 4, 3), j in ideal_strategy(XYZ, 4, 3)) {
        prop_assert!(is_antichain(&i));
        prop_assert!(is_antichain(&i.sum(&j).unwrap()));
        prop_assert!(is_antichain(&i.product(&j).unwrap()));
        prop_assert!(is_antichain(&i.intersection(&j).unwrap()));
        prop_assert!(is_antichain(&i.power(2)));
        prop_assert!(is_antichain(&i.delta_star().unwrap()));
    }

    #[test]
    fn sum_and_product_laws(
        i in ideal_strategy(XYZ, 3, 3),
        j in ideal_strategy(XYZ, 3, 3),
        k in ideal_strategy(XYZ, 3, 3),
    ) {
        prop_assert_eq!(i.sum(&j).unwrap(), j.sum(&i).unwrap());
        prop_assert_eq!(i.product(&j).unwrap(), j.product(&i).unwrap());
        prop_assert_eq!(
            i.sum(&j).unwrap().sum(&k).unwrap(),
            i.sum(&j.sum(&k).unwrap()).unwrap()
        );
        prop_assert_eq!(
            i.product(&j).unwrap().product(&k).unwrap(),
            i.product(&j.product(&k).unwrap()).unwrap()
        );
        let unit = MonomialIdeal::unit(i.context().clone());
        prop_assert_eq!(&i.product(&unit).unwrap(), &i);
        prop_assert!(i.contains(&i.product(&j).unwrap()).unwrap());
    }

    #[test]
    fn membership_matches_divisibility_scan(i in ideal_strategy(XYZ, 4, 3)) {
        for a in all_monomials(3, 6) {
            let scan = i.generators().iter().any(|g| a.divisible_by(g));
            prop_assert_eq!(i.contains_monomial(&a).unwrap(), scan);
        }
    }

    #[test]
    fn delta_star_of_principal(g in proptest::collection::vec(0u32..=3, 3)) {
        prop_assume!(g.iter().any(|&e| e > 0));
        let ctx = rp_core::VariableContext::new(XYZ.iter().copied()).unwrap();
        let f = ExponentVector::new(g.clone());
        let i = MonomialIdeal::minimalize(ctx.clone(), [f]).unwrap();
        let expected = MonomialIdeal::minimalize(
            ctx,
            (0..3).filter(|&v| g[v] > 0).map(|v| {
                let mut h = g.clone();
                h[v] -= 1;
                ExponentVector::new(h)
            }),
        )
        .unwrap();
        let support = g.iter().filter(|&&e| e > 0).count();
        let got = i.delta_star().unwrap();
        prop_assert_eq!(got.generators().len(), support);
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn text_round_trip(i in ideal_strategy(XYZ, 4, 4)) {
        let text = i.to_text();
        let parsed = parse_ideal(&text).unwrap();
        prop_assert!(parsed.redundant.is_empty());
        prop_assert_eq!(&parsed.ideal, &i);
        prop_assert_eq!(parsed.ideal.to_text(), text);
    }
}
