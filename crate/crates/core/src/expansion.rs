//! Binomial expansions of rational powers and integral closures of powers
//! of `I + J` for ideals `I`, `J` in disjoint sets of variables, and
//! symbolic powers of squarefree monomial ideals.

use std::collections::HashMap;

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::closure::{
    integral_closure_power, jumping_denominator, nu_star_integrality, rational_power,
    IntegralityCertificate, JumpingDenominator,
};
use crate::error::{Error, Result};
use crate::monomial::{external_sum, ExponentVector, MonomialIdeal, VariableContext};
use crate::Rational;

/// One summand `I_omega * J_complement` of an expansion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpansionTerm {
    #[serde(serialize_with = "crate::serde_rational::one")]
    pub omega: Rational,
    #[serde(serialize_with = "crate::serde_rational::one")]
    pub complement: Rational,
    pub term: MonomialIdeal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpansionReport {
    /// The power of `I + J` computed directly.
    pub left: MonomialIdeal,
    /// The sum of products of powers of `I` and `J`.
    pub right: MonomialIdeal,
    pub equal: bool,
    /// Minimal generators of `left` not in `right`.
    pub missing_from_right: Vec<ExponentVector>,
    /// `right` is always contained in `left`; `false` means a defect.
    pub right_in_left: bool,
    pub terms: Vec<ExpansionTerm>,
    /// Integrality certificates for `I` and `J` (integer expansions only).
    pub integrality: Option<(IntegralityCertificate, IntegralityCertificate)>,
}

impl ExpansionReport {
    fn new(
        left: MonomialIdeal,
        right: MonomialIdeal,
        terms: Vec<ExpansionTerm>,
        integrality: Option<(IntegralityCertificate, IntegralityCertificate)>,
    ) -> Result<Self> {
        let right_in_left = left.contains(&right)?;
        let missing_from_right = left
            .generators()
            .iter()
            .filter(|g| !right.contains_monomial(g).unwrap_or(false))
            .cloned()
            .collect::<Vec<_>>();
        Ok(ExpansionReport {
            equal: missing_from_right.is_empty() && right_in_left,
            left,
            right,
            missing_from_right,
            right_in_left,
            terms,
            integrality,
        })
    }

    /// Whether the computation contradicts a theorem: the unconditional
    /// inclusion failed, or equality failed although one side satisfies the
    /// integrality hypothesis (rational expansions must always be equal).
    pub fn theorem_violated(&self) -> bool {
        if !self.right_in_left {
            return true;
        }
        match &self.integrality {
            None => !self.equal,
            Some((ci, cj)) => !self.equal && (ci.integral || cj.integral),
        }
    }

    pub fn missing_strings(&self) -> Vec<String> {
        self.missing_from_right
            .iter()
            .map(|g| self.left.format_monomial(g))
            .collect()
    }
}

fn denominator_of(i: &MonomialIdeal) -> Result<JumpingDenominator> {
    if i.is_zero() || i.is_unit() {
        Ok(JumpingDenominator(1))
    } else {
        jumping_denominator(i)
    }
}

/// Memoized `I_w` keyed by the grid point `ceil(w e) / e` it equals.
struct PowerCache<'a> {
    ideal: &'a MonomialIdeal,
    denominator: JumpingDenominator,
    cache: HashMap<Rational, MonomialIdeal>,
}

impl<'a> PowerCache<'a> {
    fn new(ideal: &'a MonomialIdeal) -> Result<Self> {
        Ok(PowerCache {
            ideal,
            denominator: denominator_of(ideal)?,
            cache: HashMap::new(),
        })
    }

    fn get(&mut self, w: &Rational) -> Result<MonomialIdeal> {
        let key = self.denominator.round_up(w);
        if let Some(hit) = self.cache.get(&key) {
            return Ok(hit.clone());
        }
        let value = rational_power(self.ideal, &key)?.result;
        self.cache.insert(key, value.clone());
        Ok(value)
    }
}

fn juxtaposed(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<std::sync::Arc<VariableContext>> {
    VariableContext::juxtapose(i.context(), j.context())
}

fn check_exponent(u: &Rational) -> Result<()> {
    if u < &Rational::zero() {
        return Err(Error::NegativeExponent(u.clone()));
    }
    Ok(())
}

/// The terms `I_w * J_{u-w}` for `w` on the grid `(1/L)Z`, where `L` is the
/// least common multiple of the jumping denominators of `I`, `J` and the
/// denominator of `u`, multiplied by `refine`.
pub fn expansion_terms(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    u: &Rational,
    refine: u32,
) -> Result<Vec<ExpansionTerm>> {
    check_exponent(u)?;
    if refine == 0 {
        return Err(Error::Precondition("grid refinement must be positive".into()));
    }
    let ctx = juxtaposed(i, j)?;
    let mut left = PowerCache::new(i)?;
    let mut right = PowerCache::new(j)?;
    let grid = num_bigint::BigInt::from(left.denominator.value())
        .lcm(&right.denominator.value().into())
        .lcm(u.denom())
        * num_bigint::BigInt::from(refine);
    let steps = (u * Rational::from_integer(grid.clone()))
        .to_integer()
        .to_u64()
        .ok_or_else(|| Error::Precondition("exponent too large".into()))?;
    let r = i.num_vars();
    let mut terms = Vec::new();
    for t in 0..=steps {
        let omega = Rational::new(t.into(), grid.clone());
        let complement = u - &omega;
        let a = left.get(&omega)?.embed(&ctx, 0)?;
        let b = right.get(&complement)?.embed(&ctx, r)?;
        terms.push(ExpansionTerm {
            omega,
            complement,
            term: a.product(&b)?,
        });
    }
    Ok(terms)
}

fn sum_terms(ctx: std::sync::Arc<VariableContext>, terms: &[ExpansionTerm]) -> Result<MonomialIdeal> {
    terms
        .iter()
        .try_fold(MonomialIdeal::zero(ctx), |acc, t| acc.sum(&t.term))
}

/// `sum_{0 <= w <= u} I_w * J_{u-w}` in the juxtaposed context.
pub fn expansion_rational(i: &MonomialIdeal, j: &MonomialIdeal, u: &Rational) -> Result<MonomialIdeal> {
    expansion_rational_refined(i, j, u, 1)
}

pub fn expansion_rational_refined(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    u: &Rational,
    refine: u32,
) -> Result<MonomialIdeal> {
    let terms = expansion_terms(i, j, u, refine)?;
    sum_terms(juxtaposed(i, j)?, &terms)
}

/// Compares `(I + J)_u`, computed from the block exponent matrix, with the
/// finite sum of products of rational powers.
pub fn verify_rational_expansion(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    u: &Rational,
) -> Result<ExpansionReport> {
    verify_rational_expansion_refined(i, j, u, 1)
}

pub fn verify_rational_expansion_refined(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    u: &Rational,
    refine: u32,
) -> Result<ExpansionReport> {
    let (sum, _) = external_sum(i, j)?;
    let left = rational_power(&sum, u)?.result;
    let terms = expansion_terms(i, j, u, refine)?;
    let right = sum_terms(left.context().clone(), &terms)?;
    ExpansionReport::new(left, right, terms, None)
}

fn integer_terms(i: &MonomialIdeal, j: &MonomialIdeal, k: u32) -> Result<Vec<ExpansionTerm>> {
    let ctx = juxtaposed(i, j)?;
    let r = i.num_vars();
    (0..=k)
        .map(|l| {
            let a = integral_closure_power(i, l)?.embed(&ctx, 0)?;
            let b = integral_closure_power(j, k - l)?.embed(&ctx, r)?;
            Ok(ExpansionTerm {
                omega: Rational::from_integer(l.into()),
                complement: Rational::from_integer((k - l).into()),
                term: a.product(&b)?,
            })
        })
        .collect()
}

/// `sum_{l=0}^{k} closure(I^l) * closure(J^(k-l))`.
pub fn expansion_integer(i: &MonomialIdeal, j: &MonomialIdeal, k: u32) -> Result<MonomialIdeal> {
    let terms = integer_terms(i, j, k)?;
    sum_terms(juxtaposed(i, j)?, &terms)
}

fn integrality_or_trivial(i: &MonomialIdeal) -> Result<IntegralityCertificate> {
    if i.is_zero() || i.is_unit() {
        return Ok(IntegralityCertificate {
            integral: true,
            witness: None,
        });
    }
    nu_star_integrality(i)
}

/// Compares `closure((I + J)^k)` with the integer-power expansion and
/// records whether `I` and `J` satisfy the integrality hypothesis.
pub fn verify_integer_expansion(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    k: u32,
) -> Result<ExpansionReport> {
    let (sum, _) = external_sum(i, j)?;
    let left = integral_closure_power(&sum, k)?;
    let terms = integer_terms(i, j, k)?;
    let right = sum_terms(left.context().clone(), &terms)?;
    let integrality = (integrality_or_trivial(i)?, integrality_or_trivial(j)?);
    ExpansionReport::new(left, right, terms, Some(integrality))
}

fn require_squarefree(i: &MonomialIdeal) -> Result<()> {
    if i.is_squarefree() {
        Ok(())
    } else {
        Err(Error::NotSquarefree)
    }
}

/// Minimal vertex covers of the hypergraph of generator supports, as sorted
/// lists of variable indices. Each cover `C` is the minimal prime
/// `(x_i : i in C)`.
pub fn minimal_primes_squarefree(i: &MonomialIdeal) -> Result<Vec<Vec<usize>>> {
    require_squarefree(i)?;
    let n = i.num_vars();
    if n > 24 {
        return Err(Error::Precondition("too many variables for cover enumeration".into()));
    }
    let supports: Vec<u32> = i
        .generators()
        .iter()
        .map(|g| (0..n).filter(|&v| g[v] > 0).fold(0u32, |m, v| m | (1 << v)))
        .collect();
    let mut covers: Vec<u32> = (0u32..(1 << n))
        .filter(|&c| supports.iter().all(|&s| s & c != 0))
        .collect();
    covers.sort_by_key(|c| (c.count_ones(), *c));
    let mut minimal: Vec<u32> = Vec::new();
    for c in covers {
        if !minimal.iter().any(|&m| m & !c == 0) {
            minimal.push(c);
        }
    }
    let mut primes: Vec<Vec<usize>> = minimal
        .into_iter()
        .map(|c| (0..n).filter(|&v| c & (1 << v) != 0).collect())
        .collect();
    primes.sort();
    Ok(primes)
}

/// `I^(k)`: the intersection of the `k`-th powers of the minimal primes.
pub fn symbolic_power_squarefree(i: &MonomialIdeal, k: u32) -> Result<MonomialIdeal> {
    let primes = minimal_primes_squarefree(i)?;
    let ctx = i.context().clone();
    let n = i.num_vars();
    primes.iter().try_fold(MonomialIdeal::unit(ctx.clone()), |acc, p| {
        let prime = MonomialIdeal::minimalize(
            ctx.clone(),
            p.iter().map(|&v| ExponentVector::unit(n, v)),
        )?;
        acc.intersection(&prime.power(k))
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorollaryRow {
    pub k: u32,
    pub symbolic_equals_closure: bool,
    pub power_equals_symbolic: bool,
}

/// Bounded certificate: the equalities are checked for `k <= verified_up_to`
/// only and say nothing about larger `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorollaryReport {
    pub squarefree: bool,
    pub verified_up_to: u32,
    pub rows: Vec<CorollaryRow>,
}

impl CorollaryReport {
    pub fn symbolic_equals_closure(&self) -> bool {
        self.squarefree && self.rows.iter().all(|r| r.symbolic_equals_closure)
    }

    pub fn powers_equal_symbolic(&self) -> bool {
        self.squarefree && self.rows.iter().all(|r| r.power_equals_symbolic)
    }
}

pub fn check_corollary_hypotheses(i: &MonomialIdeal, bound: u32) -> Result<CorollaryReport> {
    if bound == 0 {
        return Err(Error::Precondition("bound must be at least 1".into()));
    }
    if !i.is_squarefree() {
        return Ok(CorollaryReport {
            squarefree: false,
            verified_up_to: bound,
            rows: Vec::new(),
        });
    }
    let rows = (1..=bound)
        .map(|k| {
            let symbolic = symbolic_power_squarefree(i, k)?;
            Ok(CorollaryRow {
                k,
                symbolic_equals_closure: symbolic == integral_closure_power(i, k)?,
                power_equals_symbolic: symbolic == i.power(k),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CorollaryReport {
        squarefree: true,
        verified_up_to: bound,
        rows,
    })
}
