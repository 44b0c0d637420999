//! Rational powers and integral closures of powers of monomial ideals,
//! computed exactly through the linear programs attached to exponent
//! matrices, together with binomial expansions for sums of ideals in
//! disjoint sets of variables and the depth and regularity of the
//! resulting quotients.

pub mod closure;
pub mod error;
pub mod expansion;
pub mod homology;
pub mod linalg;
pub mod lp;
pub mod monomial;
mod serde_rational;
pub mod text;

/// Arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;

pub use closure::{
    integral_closure_power, is_integrally_closed, jumping_denominator,
    monomial_in_rational_power, nu_star_integrality, rational_power, IntegralityCertificate,
    JumpingDenominator, RationalPowerIdeal,
};
pub use error::{Error, Result};
pub use expansion::{
    check_corollary_hypotheses, expansion_integer, expansion_rational, minimal_primes_squarefree,
    symbolic_power_squarefree, verify_integer_expansion, verify_rational_expansion,
    CorollaryReport, ExpansionReport, ExpansionTerm,
};
pub use homology::{
    betti_table, check_tor_vanishing_certificates, depth_and_reg, is_betti_splitting,
    partial_sum_ideal, verify_depth_reg_theorem, verify_filtration_identities, BettiTable,
    DepthRegReport, FiltrationReport, InvariantReport, TorCertificates,
};
pub use lp::{dual_vertices, fm_membership_oracle, nu_star, DualVertexSet, LpSolution};
pub use monomial::{external_sum, ExponentMatrix, ExponentVector, MonomialIdeal, VariableContext};
pub use text::{parse_ideal, ParsedIdeal};

/// Parses `p/q` or an integer into a rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::InvalidRational(s.to_string());
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: num_bigint::BigInt = p.parse().map_err(|_| bad())?;
    let q: num_bigint::BigInt = q.parse().map_err(|_| bad())?;
    if num_traits::Zero::is_zero(&q) {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}
