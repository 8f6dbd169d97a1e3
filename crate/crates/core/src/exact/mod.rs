//! Exact arithmetic: big rationals, linear algebra over Z/2 and over Q.

mod qlinalg;
mod rational;
mod z2;

pub use qlinalg::{intersection_dim, is_subspace, q_rank, unit_vector};
pub use rational::{rational_sum, Rational};
pub use z2::{all_bit_vectors, Bits, Z2Matrix};

use crate::error::{Error, Result};

/// `2^e` as a `u128`, failing instead of wrapping.
pub fn pow2(e: i64) -> Result<u128> {
    if !(0..128).contains(&e) {
        return Err(Error::Overflow(format!("2^{e}")));
    }
    Ok(1u128 << e)
}

/// Nontrivial invariant factors (`> 1`) of the abelian group `Z^cols / rowspace(m)`, together
/// with the free rank.
pub fn smith_invariant_factors(m: &[Vec<i128>], cols: usize) -> (Vec<i128>, usize) {
    let mut a: Vec<Vec<i128>> = m.to_vec();
    let rows = a.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // Pick the smallest nonzero entry in the remaining block as pivot.
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        let mut clean = true;
        for i in t + 1..rows {
            let q = a[i][t] / a[t][t];
            if q != 0 {
                for j in t..cols {
                    a[i][j] -= q * a[t][j];
                }
            }
            clean &= a[i][t] == 0;
        }
        for j in t + 1..cols {
            let q = a[t][j] / a[t][t];
            if q != 0 {
                for row in a.iter_mut() {
                    row[j] -= q * row[t];
                }
            }
            clean &= a[t][j] == 0;
        }
        if !clean {
            continue;
        }
        // Keep divisibility: fold any block entry not divisible by the pivot into row t.
        let p = a[t][t];
        if let Some(i) = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % p != 0)) {
            for j in t..cols {
                a[t][j] += a[i][j];
            }
            continue;
        }
        diag.push(p.abs());
        t += 1;
    }
    let free = cols - diag.len();
    (diag.into_iter().filter(|&d| d > 1).collect(), free)
}

#[cfg(test)]
mod smith_tests {
    use super::*;

    #[test]
    fn cyclic_quotients() {
        // Z^2 / <(2,0),(0,2),(1,1)> = Z_2
        let m = vec![vec![2, 0], vec![0, 2], vec![1, 1]];
        assert_eq!(smith_invariant_factors(&m, 2), (vec![2], 0));
        // Z^2 / <(2,0),(0,3),(1,1)> is trivial
        let m = vec![vec![2, 0], vec![0, 3], vec![1, 1]];
        assert_eq!(smith_invariant_factors(&m, 2), (vec![], 0));
        let m = vec![vec![4, 6]];
        assert_eq!(smith_invariant_factors(&m, 2), (vec![2], 1));
    }
}
