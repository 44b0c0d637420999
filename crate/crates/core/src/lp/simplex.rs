use log::trace;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::{ExponentMatrix, ExponentVector};
use crate::Rational;

use super::LpSolution;

/// Dense tableau for `max 1.y  s.t.  M y + s = a,  y, s >= 0`.
///
/// Columns `0..m` are the structural variables `y`, columns `m..m+n` the
/// slacks. `reduced[j]` holds `c_j - c_B B^-1 A_j`.
struct Tableau {
    m: usize,
    n: usize,
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    reduced: Vec<Rational>,
    objective: Rational,
    basis: Vec<usize>,
}

impl Tableau {
    fn new(matrix: &ExponentMatrix, a: &ExponentVector) -> Self {
        let (n, m) = (matrix.rows(), matrix.cols());
        let rows = (0..n)
            .map(|i| {
                (0..m)
                    .map(|j| Rational::from_integer(matrix.get(i, j).into()))
                    .chain((0..n).map(|k| if k == i { Rational::one() } else { Rational::zero() }))
                    .collect()
            })
            .collect();
        let rhs = a
            .as_slice()
            .iter()
            .map(|&v| Rational::from_integer(v.into()))
            .collect();
        let reduced = (0..m + n)
            .map(|j| if j < m { Rational::one() } else { Rational::zero() })
            .collect();
        Tableau {
            m,
            n,
            rows,
            rhs,
            reduced,
            objective: Rational::zero(),
            basis: (m..m + n).collect(),
        }
    }

    /// Bland's rule: lowest-index improving column.
    fn entering(&self) -> Option<usize> {
        self.reduced.iter().position(|r| r.is_positive())
    }

    /// Minimum-ratio row, ties broken by lowest basic variable index.
    fn leaving(&self, col: usize) -> Option<usize> {
        let mut best: Option<(usize, Rational)> = None;
        for (r, row) in self.rows.iter().enumerate() {
            if !row[col].is_positive() {
                continue;
            }
            let ratio = &self.rhs[r] / &row[col];
            let better = match &best {
                None => true,
                Some((b, q)) => ratio < *q || (ratio == *q && self.basis[r] < self.basis[*b]),
            };
            if better {
                best = Some((r, ratio));
            }
        }
        best.map(|(r, _)| r)
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let inv = self.rows[row][col].recip();
        for v in self.rows[row].iter_mut() {
            *v *= &inv;
        }
        self.rhs[row] *= &inv;
        let pivot_row = self.rows[row].clone();
        let pivot_rhs = self.rhs[row].clone();
        for r in 0..self.n {
            if r == row || self.rows[r][col].is_zero() {
                continue;
            }
            let f = self.rows[r][col].clone();
            for (v, p) in self.rows[r].iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
            self.rhs[r] -= &f * &pivot_rhs;
        }
        let f = self.reduced[col].clone();
        for (v, p) in self.reduced.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *v -= &f * p;
            }
        }
        self.objective += &f * &pivot_rhs;
        self.basis[row] = col;
    }

    fn dump(&self) {
        if log::log_enabled!(log::Level::Trace) {
            trace!("basis {:?} objective {}", self.basis, self.objective);
            for (row, rhs) in self.rows.iter().zip(&self.rhs) {
                let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                trace!("  [{}] | {}", cells.join(" "), rhs);
            }
            let cells: Vec<String> = self.reduced.iter().map(ToString::to_string).collect();
            trace!("  reduced [{}]", cells.join(" "));
        }
    }
}

pub(super) fn solve(matrix: &ExponentMatrix, a: &ExponentVector) -> Result<LpSolution> {
    let mut t = Tableau::new(matrix, a);
    t.dump();
    while let Some(col) = t.entering() {
        // every column of M is nonzero and nonnegative, so some row qualifies
        let row = t.leaving(col).ok_or(Error::ZeroColumn(col))?;
        t.pivot(row, col);
        t.dump();
    }
    let mut primal = vec![Rational::zero(); t.m];
    for (r, &b) in t.basis.iter().enumerate() {
        if b < t.m {
            primal[b] = t.rhs[r].clone();
        }
    }
    let dual = (0..t.n).map(|i| -&t.reduced[t.m + i]).collect();
    Ok(LpSolution {
        value: t.objective,
        primal,
        dual,
    })
}
