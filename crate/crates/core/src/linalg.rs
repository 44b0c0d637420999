//! Small dense exact linear algebra.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::Rational;

/// Solves the square system `a * x = b` over the rationals. Returns `None`
/// when `a` is singular.
pub fn solve_square(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = a.len();
    debug_assert!(a.iter().all(|row| row.len() == n) && b.len() == n);
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].recip();
        for entry in &mut a[col][col..] {
            *entry *= &inv;
        }
        b[col] = &b[col] * &inv;
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            let (pivot_row, target) = if r < col {
                let (head, tail) = a.split_at_mut(col);
                (&tail[0], &mut head[r])
            } else {
                let (head, tail) = a.split_at_mut(r);
                (&head[col], &mut tail[0])
            };
            for (t, p) in target[col..].iter_mut().zip(&pivot_row[col..]) {
                *t -= &factor * p;
            }
            let delta = &factor * &b[col];
            b[r] -= delta;
        }
    }
    Some(b)
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn rank(matrix: &[Vec<i64>]) -> usize {
    let rows = matrix.len();
    if rows == 0 {
        return 0;
    }
    let cols = matrix[0].len();
    let mut m: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = (&m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c]) / &prev;
                m[r][c] = v;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn solves_small_system() {
        let a = vec![vec![q(2, 1), q(1, 1)], vec![q(0, 1), q(1, 1)]];
        let x = solve_square(a, vec![q(1, 1), q(1, 1)]).unwrap();
        assert_eq!(x, vec![q(0, 1), q(1, 1)]);
    }

    #[test]
    fn singular_system() {
        let a = vec![vec![q(1, 1), q(2, 1)], vec![q(2, 1), q(4, 1)]];
        assert!(solve_square(a, vec![q(1, 1), q(1, 1)]).is_none());
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(&[vec![1, -1, 0], vec![0, 1, -1], vec![1, 0, -1]]), 2);
        assert_eq!(rank(&[vec![0, 1], vec![1, 0], vec![1, 1]]), 2);
        // needs a row swap past a zero pivot
        assert_eq!(rank(&[vec![0, 0, 1], vec![0, 2, 0], vec![3, 0, 0]]), 3);
    }
}
