//! Integral closures of powers and rational powers of monomial ideals.
//!
//! Membership is decided by the LP criterion: `x^a` lies in `I_u` exactly
//! when `nu*_a(I) >= u`. Minimal generators of `I_u` satisfy
//! `a_i <= ceil(u * max_j M_ij)`: if `a_i` exceeded that bound, an optimal
//! `y` scaled to `1.y = u` would still fit under `a - e_i`. The generator
//! search therefore scans that box.

use itertools::Itertools;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lp::{self, is_integral};
use crate::monomial::{ExponentVector, MonomialIdeal};
use crate::Rational;

/// Integer `e` with `nu*_a(I) in (1/e)Z` for every integer vector `a`, so
/// that `I_u = I_{ceil(ue)/e}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct JumpingDenominator(pub u64);

impl JumpingDenominator {
    pub fn value(self) -> u64 {
        self.0
    }

    /// Rounds `u` up to the grid `(1/e)Z`.
    pub fn round_up(self, u: &Rational) -> Rational {
        let e = Rational::from_integer(self.0.into());
        (u * &e).ceil() / e
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RationalPowerIdeal {
    pub base: MonomialIdeal,
    #[serde(serialize_with = "crate::serde_rational::one")]
    pub exponent: Rational,
    pub result: MonomialIdeal,
}

/// Whether `nu*_a(I)` is an integer for every integer `a`. On failure the
/// certificate carries a non-integral vertex of the dual polyhedron.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntegralityCertificate {
    pub integral: bool,
    #[serde(serialize_with = "crate::serde_rational::optional_vec")]
    pub witness: Option<Vec<Rational>>,
}

fn check_exponent(u: &Rational) -> Result<()> {
    if u.is_negative() {
        return Err(Error::NegativeExponent(u.clone()));
    }
    Ok(())
}

fn check_proper_base(i: &MonomialIdeal, what: &'static str) -> Result<()> {
    if i.is_zero() {
        return Err(Error::ZeroIdeal(what));
    }
    if i.is_unit() {
        return Err(Error::UnitIdeal(what));
    }
    Ok(())
}

/// Whether `x^a` lies in `I_u`.
pub fn monomial_in_rational_power(
    i: &MonomialIdeal,
    a: &ExponentVector,
    u: &Rational,
) -> Result<bool> {
    check_exponent(u)?;
    if a.len() != i.num_vars() {
        return Err(Error::DimensionMismatch {
            expected: i.num_vars(),
            found: a.len(),
        });
    }
    if u.is_zero() || i.is_unit() {
        return Ok(true);
    }
    if i.is_zero() {
        return Ok(false);
    }
    Ok(lp::nu_star(&i.exponent_matrix(), a)?.value >= *u)
}

/// Per-coordinate upper bounds on the minimal generators of `I_u`.
pub fn generator_bounds(i: &MonomialIdeal, u: &Rational) -> Vec<u32> {
    let m = i.exponent_matrix();
    (0..i.num_vars())
        .map(|row| {
            let b = (u * Rational::from_integer(m.row_max(row).into())).ceil();
            b.to_integer().to_u32().expect("generator bound fits in u32")
        })
        .collect()
}

/// Minimal generators of `I_u` among the points of the box `[0, bounds]`.
///
/// For each prefix `(a_1, .., a_{n-1})` the smallest admissible last
/// coordinate is found by bisection (membership is monotone); every minimal
/// generator is among these candidates.
pub fn rational_power_within(
    i: &MonomialIdeal,
    u: &Rational,
    bounds: &[u32],
) -> Result<MonomialIdeal> {
    check_exponent(u)?;
    if u.is_zero() || i.is_unit() {
        return Ok(MonomialIdeal::unit(i.context().clone()));
    }
    if i.is_zero() {
        return Ok(MonomialIdeal::zero(i.context().clone()));
    }
    let n = i.num_vars();
    if bounds.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: bounds.len(),
        });
    }
    let matrix = i.exponent_matrix();
    matrix.check_no_zero_column()?;
    let member = |v: &[u32]| -> bool {
        let a = ExponentVector::new(v.to_vec());
        lp::nu_star(&matrix, &a).expect("validated matrix").value >= *u
    };
    let last = bounds[n - 1];
    let prefixes: Vec<Vec<u32>> = bounds[..n - 1]
        .iter()
        .map(|&b| 0..=b)
        .multi_cartesian_product()
        .collect();
    let prefixes = if prefixes.is_empty() { vec![Vec::new()] } else { prefixes };

    let candidates: Vec<ExponentVector> = prefixes
        .into_par_iter()
        .filter_map(|prefix| {
            let mut point = prefix;
            point.push(last);
            if !member(&point) {
                return None;
            }
            let (mut lo, mut hi) = (0u32, last);
            while lo < hi {
                let mid = lo + (hi - lo) / 2;
                point[n - 1] = mid;
                if member(&point) {
                    hi = mid;
                } else {
                    lo = mid + 1;
                }
            }
            point[n - 1] = lo;
            Some(ExponentVector::new(point))
        })
        .collect();
    MonomialIdeal::minimalize(i.context().clone(), candidates)
}

/// The rational power `I_u = { x^a : nu*_a(I) >= u }`.
pub fn rational_power(i: &MonomialIdeal, u: &Rational) -> Result<RationalPowerIdeal> {
    check_exponent(u)?;
    let bounds = generator_bounds(i, u);
    let result = rational_power_within(i, u, &bounds)?;
    Ok(RationalPowerIdeal {
        base: i.clone(),
        exponent: u.clone(),
        result,
    })
}

/// Minimal generators of the integral closure of `I^k`.
pub fn integral_closure_power(i: &MonomialIdeal, k: u32) -> Result<MonomialIdeal> {
    Ok(rational_power(i, &Rational::from_integer(k.into()))?.result)
}

/// Least common denominator of all dual vertex coordinates.
pub fn jumping_denominator(i: &MonomialIdeal) -> Result<JumpingDenominator> {
    check_proper_base(i, "jumping denominator")?;
    let vertices = lp::dual_vertices(&i.exponent_matrix())?;
    let e = vertices
        .vertices()
        .iter()
        .flatten()
        .fold(num_bigint::BigInt::from(1), |acc, q| acc.lcm(q.denom()));
    Ok(JumpingDenominator(
        e.to_u64().expect("jumping denominator fits in u64"),
    ))
}

/// Decides whether `nu*_a(I)` is integral for all integer `a` by checking
/// that every vertex of the dual polyhedron is integral.
pub fn nu_star_integrality(i: &MonomialIdeal) -> Result<IntegralityCertificate> {
    check_proper_base(i, "integrality check")?;
    let vertices = lp::dual_vertices(&i.exponent_matrix())?;
    let witness = vertices.vertices().iter().find(|z| !is_integral(z)).cloned();
    Ok(IntegralityCertificate {
        integral: witness.is_none(),
        witness,
    })
}

pub fn is_integrally_closed(i: &MonomialIdeal) -> Result<bool> {
    if i.is_zero() || i.is_unit() {
        return Ok(true);
    }
    Ok(integral_closure_power(i, 1)? == *i)
}
