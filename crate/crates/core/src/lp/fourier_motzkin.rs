use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use crate::error::Result;
use crate::monomial::{ExponentMatrix, ExponentVector};
use crate::Rational;

/// `coeffs . y <= rhs`
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Inequality {
    coeffs: Vec<Rational>,
    rhs: Rational,
}

impl Inequality {
    /// Scales so the first nonzero coefficient has absolute value one.
    fn normalized(mut self) -> Self {
        if let Some(lead) = self.coeffs.iter().find(|c| !c.is_zero()).map(|c| c.abs()) {
            for c in &mut self.coeffs {
                *c /= &lead;
            }
            self.rhs /= &lead;
        }
        self
    }
}

/// Decides feasibility of `{ M y <= a, y >= 0, 1.y >= threshold }` by
/// eliminating the `y` variables one at a time.
pub(super) fn feasible(
    matrix: &ExponentMatrix,
    a: &ExponentVector,
    threshold: &Rational,
) -> Result<bool> {
    matrix.check_no_zero_column()?;
    let (n, m) = (matrix.rows(), matrix.cols());
    let int = |v: u32| Rational::from_integer(v.into());
    let neg_one = -Rational::from_integer(1.into());

    let mut system: BTreeSet<Inequality> = BTreeSet::new();
    for i in 0..n {
        system.insert(
            Inequality {
                coeffs: (0..m).map(|j| int(matrix.get(i, j))).collect(),
                rhs: int(a[i]),
            }
            .normalized(),
        );
    }
    for j in 0..m {
        let coeffs = (0..m)
            .map(|k| if k == j { neg_one.clone() } else { Rational::zero() })
            .collect();
        system.insert(Inequality { coeffs, rhs: Rational::zero() });
    }
    system.insert(Inequality {
        coeffs: vec![neg_one.clone(); m],
        rhs: -threshold.clone(),
    });

    for var in 0..m {
        let (mut upper, mut lower, mut rest) = (Vec::new(), Vec::new(), BTreeSet::new());
        for ineq in system {
            if ineq.coeffs[var].is_positive() {
                upper.push(ineq);
            } else if ineq.coeffs[var].is_negative() {
                lower.push(ineq);
            } else {
                rest.insert(ineq);
            }
        }
        for u in &upper {
            for l in &lower {
                // scale so the coefficients of `var` cancel
                let cu = l.coeffs[var].abs();
                let cl = u.coeffs[var].clone();
                let coeffs = u
                    .coeffs
                    .iter()
                    .zip(&l.coeffs)
                    .map(|(x, y)| x * &cu + y * &cl)
                    .collect();
                let rhs = &u.rhs * &cu + &l.rhs * &cl;
                rest.insert(Inequality { coeffs, rhs }.normalized());
            }
        }
        system = rest;
        // constraints `0 <= rhs` can be decided immediately
        if system
            .iter()
            .any(|q| q.coeffs.iter().all(Zero::is_zero) && q.rhs.is_negative())
        {
            return Ok(false);
        }
    }
    Ok(system.iter().all(|q| !q.rhs.is_negative()))
}
