//! Exact rational linear programming for the primal/dual pair
//!
//! ```text
//! (primal) maximize 1.y  subject to  M y <= a,    y >= 0
//! (dual)   minimize a.z  subject to  M^T z >= 1,  z >= 0
//! ```
//!
//! whose common optimum is `nu*_a`. Three independent routes are provided:
//! a tableau simplex with Bland's rule, exhaustive vertex enumeration of the
//! dual polyhedron, and a Fourier-Motzkin feasibility oracle.

mod fourier_motzkin;
mod simplex;
mod vertices;

use num_traits::{One, Signed};
use serde::Serialize;

pub use vertices::DualVertexSet;

use crate::error::{Error, Result};
use crate::monomial::{ExponentMatrix, ExponentVector};
use crate::Rational;

/// Optimum of the LP pair with primal point `y` and dual point `z`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LpSolution {
    #[serde(serialize_with = "crate::serde_rational::one")]
    pub value: Rational,
    #[serde(serialize_with = "crate::serde_rational::vec")]
    pub primal: Vec<Rational>,
    #[serde(serialize_with = "crate::serde_rational::vec")]
    pub dual: Vec<Rational>,
}

impl LpSolution {
    /// Checks primal feasibility, dual feasibility and equality of both
    /// objectives, which together certify optimality.
    pub fn certifies(&self, matrix: &ExponentMatrix, a: &ExponentVector) -> bool {
        let (n, m) = (matrix.rows(), matrix.cols());
        let int = |v: u32| Rational::from_integer(v.into());
        if self.primal.len() != m || self.dual.len() != n {
            return false;
        }
        if self.primal.iter().chain(&self.dual).any(Signed::is_negative) {
            return false;
        }
        let primal_ok = (0..n).all(|i| {
            let lhs: Rational = (0..m).map(|j| int(matrix.get(i, j)) * &self.primal[j]).sum();
            lhs <= int(a[i])
        });
        let dual_ok = (0..m).all(|j| {
            let lhs: Rational = (0..n).map(|i| int(matrix.get(i, j)) * &self.dual[i]).sum();
            lhs >= Rational::one()
        });
        let primal_value: Rational = self.primal.iter().sum();
        let dual_value: Rational = (0..n).map(|i| int(a[i]) * &self.dual[i]).sum();
        primal_ok && dual_ok && primal_value == self.value && dual_value == self.value
    }
}

fn check_dims(matrix: &ExponentMatrix, a: &ExponentVector) -> Result<()> {
    if a.len() != matrix.rows() {
        return Err(Error::DimensionMismatch {
            expected: matrix.rows(),
            found: a.len(),
        });
    }
    Ok(())
}

/// Computes `nu*_a` with mutually certifying primal and dual optima.
pub fn nu_star(matrix: &ExponentMatrix, a: &ExponentVector) -> Result<LpSolution> {
    matrix.check_no_zero_column()?;
    check_dims(matrix, a)?;
    let solution = simplex::solve(matrix, a)?;
    debug_assert!(solution.certifies(matrix, a));
    Ok(solution)
}

/// All vertices of `{ z >= 0 : M^T z >= 1 }`.
pub fn dual_vertices(matrix: &ExponentMatrix) -> Result<DualVertexSet> {
    vertices::enumerate(matrix)
}

/// Whether `{ M y <= a, y >= 0, 1.y >= threshold }` is feasible, decided by
/// Fourier-Motzkin elimination. Shares no code with [`nu_star`].
pub fn fm_membership_oracle(
    matrix: &ExponentMatrix,
    a: &ExponentVector,
    threshold: &Rational,
) -> Result<bool> {
    check_dims(matrix, a)?;
    fourier_motzkin::feasible(matrix, a, threshold)
}

pub(crate) fn is_integral(v: &[Rational]) -> bool {
    v.iter().all(|q| q.is_integer())
}
