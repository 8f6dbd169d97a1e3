use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exact::{pow2, smith_invariant_factors, Bits, Z2Matrix};
use crate::surface::MarkedSurface;

/// A homomorphism from the orbifold fundamental group to `Z_2`, recorded by its values on the
/// generators `a_1, b_1, ..., a_g, b_g` and on the loops `σ_x` around the orbifold points.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Z2Character {
    pub a: Bits,
    pub b: Bits,
    pub sigma: Bits,
}

impl Z2Character {
    /// Values in generator order `a_1, b_1, ..., a_g, b_g, σ_1, ..., σ_s`.
    pub fn flat(&self) -> Bits {
        let mut v: Bits = self.a.iter().zip(&self.b).flat_map(|(&x, &y)| [x, y]).collect();
        v.extend(&self.sigma);
        v
    }
}

/// Relations of the abelianised orbifold group mod 2: `k_x σ_x = 0` (so `σ_x = 0` when `k_x`
/// is odd) and `Σ σ_x = 0` from the surface relation.
pub fn z2_relation_matrix(surf: &MarkedSurface) -> Z2Matrix {
    let g2 = 2 * surf.genus as usize;
    let cols = g2 + surf.s();
    let mut rows = Vec::new();
    for (i, p) in surf.points.iter().enumerate() {
        if p.order % 2 == 1 {
            let mut r = vec![0u8; cols];
            r[g2 + i] = 1;
            rows.push(r);
        }
    }
    let mut sum = vec![0u8; cols];
    for i in 0..surf.s() {
        sum[g2 + i] = 1;
    }
    rows.push(sum);
    Z2Matrix::from_rows(rows, cols).expect("rows have the right width")
}

/// Every `Z_2`-character, in lexicographic order of the generator values.
pub fn z2_character_enumerate(surf: &MarkedSurface) -> Result<Vec<Z2Character>> {
    let m = z2_relation_matrix(surf);
    let g = surf.genus as usize;
    let sols = m.solution_set(&vec![0u8; m.rows()])?;
    Ok(sols
        .into_iter()
        .map(|v| Z2Character {
            a: (0..g).map(|i| v[2 * i]).collect(),
            b: (0..g).map(|i| v[2 * i + 1]).collect(),
            sigma: v[2 * g..].to_vec(),
        })
        .collect())
}

/// Number of `Z_2`-characters, from the rank of the relation matrix.
pub fn z2_character_count(surf: &MarkedSurface) -> Result<u128> {
    let m = z2_relation_matrix(surf);
    pow2((m.cols() - m.rank()) as i64)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PicVDescriptor {
    /// Orders `k_x` of the isotropy groups; `Pic_V = Pic(X) ⊕ ⊕ Z_{k_x}` as a set of Seifert data.
    pub isotropy_orders: Vec<u32>,
    /// `2g`: the identity component contains `(S^1)^{2g}`.
    pub circle_factors: u32,
    /// Invariant factors of the finite part `(⊕ Z_{k_x}) / (1, ..., 1)` of `Pic⁰_V`.
    pub finite_part: Vec<u64>,
    pub finite_order: u128,
    pub description: String,
}

fn group_string(factors: &[u64]) -> String {
    let mut parts = Vec::new();
    let mut i = 0;
    while i < factors.len() {
        let k = factors[i];
        let run = factors[i..].iter().take_while(|&&x| x == k).count();
        parts.push(if run == 1 { format!("Z_{k}") } else { format!("Z_{k}^{run}") });
        i += run;
    }
    parts.join(" ⊕ ")
}

pub fn pic_v_structure(surf: &MarkedSurface) -> PicVDescriptor {
    let s = surf.s();
    let mut rel: Vec<Vec<i128>> = (0..s)
        .map(|i| (0..s).map(|j| if i == j { surf.points[i].order as i128 } else { 0 }).collect())
        .collect();
    if s > 0 {
        rel.push(vec![1; s]);
    }
    let (factors, _) = smith_invariant_factors(&rel, s);
    let finite: Vec<u64> = factors.iter().map(|&f| f as u64).collect();
    let finite_order = finite.iter().map(|&f| f as u128).product();
    let mut description = format!("(S^1)^{}", 2 * surf.genus);
    if !finite.is_empty() {
        description.push_str(" ⊕ ");
        description.push_str(&group_string(&finite));
    }
    PicVDescriptor {
        isotropy_orders: surf.points.iter().map(|p| p.order).collect(),
        circle_factors: 2 * surf.genus,
        finite_part: finite,
        finite_order,
        description,
    }
}
