//! Subspace arithmetic over the rationals.

use super::Rational;
use crate::error::{Error, Result};

/// Rank of the span of `vectors`, all of length `n`.
pub fn q_rank(vectors: &[Vec<Rational>], n: usize) -> Result<usize> {
    for v in vectors {
        if v.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: v.len() });
        }
    }
    let mut m: Vec<Vec<Rational>> = vectors.to_vec();
    let mut rank = 0;
    for c in 0..n {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        let prow = m[rank].clone();
        for row in m.iter_mut().skip(rank + 1) {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] / &pivot;
            for (x, y) in row.iter_mut().zip(&prow) {
                *x -= &(&f * y);
            }
        }
        rank += 1;
    }
    Ok(rank)
}

/// `dim(A ∩ B)` for subspaces given by spanning vectors.
pub fn intersection_dim(a: &[Vec<Rational>], b: &[Vec<Rational>], n: usize) -> Result<usize> {
    let ra = q_rank(a, n)?;
    let rb = q_rank(b, n)?;
    let both: Vec<Vec<Rational>> = a.iter().chain(b).cloned().collect();
    Ok(ra + rb - q_rank(&both, n)?)
}

/// True when `a ⊆ b`.
pub fn is_subspace(a: &[Vec<Rational>], b: &[Vec<Rational>], n: usize) -> Result<bool> {
    Ok(intersection_dim(a, b, n)? == q_rank(a, n)?)
}

/// Standard basis vector `e_i` of length `n`.
pub fn unit_vector(i: usize, n: usize) -> Vec<Rational> {
    (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| Rational::integer(x)).collect()
    }

    #[test]
    fn rank_with_dependency() {
        let vs = vec![v(&[1, 2, 3]), v(&[2, 4, 6]), v(&[0, 1, 1])];
        assert_eq!(q_rank(&vs, 3).unwrap(), 2);
    }

    #[test]
    fn diagonal_line_meets_axes_trivially() {
        let diag = vec![v(&[1, 1])];
        let x = vec![v(&[1, 0])];
        assert_eq!(intersection_dim(&diag, &x, 2).unwrap(), 0);
        assert_eq!(intersection_dim(&diag, &diag, 2).unwrap(), 1);
    }
}
