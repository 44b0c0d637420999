//! Seeded random monomial ideals shared by the integration suites.

#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rp_core::homology::multigraded_betti;
use rp_core::{ExponentVector, MonomialIdeal, Rational, VariableContext};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// A nonzero proper ideal with at most `max_gens` generators and exponents
/// at most `max_exp`.
pub fn random_ideal<R: Rng>(rng: &mut R, names: &[&str], max_gens: usize, max_exp: u32) -> MonomialIdeal {
    let ctx = VariableContext::new(names.iter().copied()).unwrap();
    let n = names.len();
    let count = rng.gen_range(1..=max_gens);
    let gens: Vec<ExponentVector> = (0..count)
        .map(|_| loop {
            let v: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max_exp)).collect();
            if v.iter().any(|&e| e > 0) {
                break ExponentVector::new(v);
            }
        })
        .collect();
    MonomialIdeal::minimalize(ctx, gens).unwrap()
}

pub fn max_exponent(i: &MonomialIdeal) -> u32 {
    i.generators()
        .iter()
        .flat_map(|g| g.as_slice().iter().copied())
        .max()
        .unwrap_or(0)
}

/// All points of `[0, bounds]`.
pub fn box_points(bounds: &[u32]) -> Vec<ExponentVector> {
    let mut points = vec![Vec::new()];
    for &b in bounds {
        points = points
            .into_iter()
            .flat_map(|p: Vec<u32>| {
                (0..=b).map(move |v| {
                    let mut p = p.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    points.into_iter().map(ExponentVector::new).collect()
}

/// Multigraded K-polynomial of `I` from its Taylor complex:
/// `sum_{S != {}} (-1)^(|S|-1) x^lcm(S)`, with cancelled terms removed.
pub fn taylor_k_polynomial(i: &MonomialIdeal) -> BTreeMap<ExponentVector, i64> {
    let gens = i.generators();
    let mut poly = BTreeMap::new();
    for mask in 1u32..(1 << gens.len()) {
        let chosen: Vec<&ExponentVector> = (0..gens.len())
            .filter(|&b| mask & (1 << b) != 0)
            .map(|b| &gens[b])
            .collect();
        let lcm = chosen[1..].iter().fold(chosen[0].clone(), |acc, g| acc.lcm(g));
        let sign = if chosen.len() % 2 == 1 { 1 } else { -1 };
        *poly.entry(lcm).or_insert(0) += sign;
    }
    poly.retain(|_, c| *c != 0);
    poly
}

/// The same polynomial from the multigraded Betti numbers.
pub fn betti_k_polynomial(i: &MonomialIdeal) -> BTreeMap<ExponentVector, i64> {
    let mut poly = BTreeMap::new();
    for ((hd, a), b) in multigraded_betti(i) {
        let sign = if hd % 2 == 0 { 1 } else { -1 };
        *poly.entry(a).or_insert(0) += sign * b as i64;
    }
    poly.retain(|_, c| *c != 0);
    poly
}

/// Smallest number of variables meeting every generator support.
pub fn height(i: &MonomialIdeal) -> usize {
    let n = i.num_vars();
    let supports: Vec<u32> = i
        .generators()
        .iter()
        .map(|g| (0..n).filter(|&v| g[v] > 0).fold(0, |m, v| m | (1 << v)))
        .collect();
    (0u32..(1 << n))
        .filter(|&c| supports.iter().all(|&s| s & c != 0))
        .map(|c| c.count_ones() as usize)
        .min()
        .unwrap()
}

/// Proptest strategy for nonzero proper ideals over `names`.
pub fn ideal_strategy(
    names: &'static [&'static str],
    max_gens: usize,
    max_exp: u32,
) -> impl proptest::strategy::Strategy<Value = MonomialIdeal> {
    use proptest::prelude::*;
    let n = names.len();
    proptest::collection::vec(proptest::collection::vec(0..=max_exp, n), 1..=max_gens).prop_filter_map(
        "zero generator",
        move |gens| {
            if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
                return None;
            }
            let ctx = VariableContext::new(names.iter().copied()).unwrap();
            Some(MonomialIdeal::minimalize(ctx, gens.into_iter().map(ExponentVector::new)).unwrap())
        },
    )
}

pub fn is_antichain(i: &MonomialIdeal) -> bool {
    let g = i.generators();
    (0..g.len()).all(|a| (0..g.len()).all(|b| a == b || !g[a].divisible_by(&g[b])))
}
