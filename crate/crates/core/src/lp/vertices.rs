use std::collections::BTreeSet;

use itertools::Itertools;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::Result;
use crate::linalg::solve_square;
use crate::monomial::ExponentMatrix;
use crate::Rational;

/// Vertices of `Q(M) = { z >= 0 : M^T z >= 1 }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualVertexSet {
    #[serde(serialize_with = "crate::serde_rational::nested")]
    vertices: Vec<Vec<Rational>>,
}

impl DualVertexSet {
    pub fn vertices(&self) -> &[Vec<Rational>] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// `min_z a.z` over the vertices.
    pub fn min_dot(&self, a: &[u32]) -> Option<Rational> {
        self.vertices
            .iter()
            .map(|z| {
                z.iter()
                    .zip(a)
                    .filter(|(_, &ai)| ai != 0)
                    .map(|(zi, &ai)| zi * Rational::from_integer(ai.into()))
                    .fold(Rational::zero(), |s, t| s + t)
            })
            .min()
    }
}

/// Row `k` of the constraint system: `k < m` is `(column k of M) . z >= 1`,
/// `k >= m` is `z_{k-m} >= 0`.
fn constraint(matrix: &ExponentMatrix, k: usize) -> (Vec<Rational>, Rational) {
    let (n, m) = (matrix.rows(), matrix.cols());
    if k < m {
        let row = (0..n)
            .map(|i| Rational::from_integer(matrix.get(i, k).into()))
            .collect();
        (row, Rational::one())
    } else {
        let row = (0..n)
            .map(|i| if i == k - m { Rational::one() } else { Rational::zero() })
            .collect();
        (row, Rational::zero())
    }
}

pub(super) fn enumerate(matrix: &ExponentMatrix) -> Result<DualVertexSet> {
    matrix.check_no_zero_column()?;
    let (n, m) = (matrix.rows(), matrix.cols());
    let constraints: Vec<_> = (0..n + m).map(|k| constraint(matrix, k)).collect();
    let feasible = |z: &[Rational]| {
        constraints.iter().all(|(row, rhs)| {
            let lhs = row
                .iter()
                .zip(z)
                .fold(Rational::zero(), |s, (c, v)| s + c * v);
            lhs >= *rhs
        })
    };
    let mut found = BTreeSet::new();
    for subset in (0..n + m).combinations(n) {
        let a = subset.iter().map(|&k| constraints[k].0.clone()).collect();
        let b = subset.iter().map(|&k| constraints[k].1.clone()).collect();
        if let Some(z) = solve_square(a, b) {
            if z.iter().all(|v| !v.is_negative()) && feasible(&z) {
                found.insert(z);
            }
        }
    }
    Ok(DualVertexSet {
        vertices: found.into_iter().collect(),
    })
}
