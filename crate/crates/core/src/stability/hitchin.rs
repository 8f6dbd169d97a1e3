//! Models of the parabolic Hitchin section for `SL(k)`.

use super::model::DecomposableHiggsModel;
use super::sp::SpTripleModel;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::parbun::ParabolicLineBundle;
use crate::surface::MarkedSurface;

/// Twist exponent `m(k)` of `ξ = O(D)` and the weight carried at every marked point.
fn twist_and_weight(k: u32) -> (i64, Rational) {
    if k % 2 == 0 {
        (k as i64 / 2 - 1, Rational::half())
    } else {
        ((k as i64 - 1) / 2, Rational::zero())
    }
}

/// Summands of `S^{k-1}E ⊗ ξ^{m(k)}` where `E = (L ⊗ ξ)^∨ ⊕ L` and `L² = K`, in increasing
/// parabolic degree. Summand `i` is `(L ⊗ ξ)^{-(k-1-i)} ⊗ L^i ⊗ ξ^{m(k)}`.
pub fn hitchin_summands(k: u32, g: u32, s: usize) -> Result<Vec<ParabolicLineBundle>> {
    if k < 2 {
        return Err(Error::InvalidInput("the Hitchin model needs k >= 2".into()));
    }
    let surf = MarkedSurface::with_order_two(g, s);
    surf.require_hyperbolic()?;
    let (m, w) = twist_and_weight(k);
    let (g, s) = (g as i64, s as i64);
    let k = k as i64;
    (0..k)
        .map(|i| {
            let degree = -(k - 1 - i) * (g - 1 + s) + i * (g - 1) + m * s;
            ParabolicLineBundle::uniform(&surf, degree, w.clone())
        })
        .collect()
}

/// Decomposable model of the Hitchin section: constant superdiagonal components
/// `L_{i+1} -> L_i ⊗ K(D)` and the bottom row `a_2, ..., a_k` mapping into the top summand.
pub fn hitchin_model(k: u32, g: u32, s: usize) -> Result<DecomposableHiggsModel> {
    let summands = hitchin_summands(k, g, s)?;
    let k = k as usize;
    let mut arrows: Vec<(usize, usize)> = (0..k - 1).map(|i| (i, i + 1)).collect();
    arrows.extend((0..k - 1).map(|j| (k - 1, j)));
    DecomposableHiggsModel::new(MarkedSurface::with_order_two(g, s), summands, arrows)
}

/// For even `k = 2n`, the Hitchin model as an `Sp(2n, R)` triple. `V` consists of the summands
/// with odd index; the odd differentials `a_3, a_5, ...` vanish.
pub fn hitchin_sp_triple(k: u32, g: u32, s: usize) -> Result<SpTripleModel> {
    if k % 2 != 0 {
        return Err(Error::InvalidInput("the symplectic Hitchin model needs even k".into()));
    }
    let all = hitchin_summands(k, g, s)?;
    let k = k as usize;
    let n = k / 2;
    // V_t is summand 2t+1; its dual is summand k-2-2t.
    let v: Vec<ParabolicLineBundle> = (0..n).map(|t| all[2 * t + 1].clone()).collect();
    let dual_index = |even: usize| (k - 2 - even) / 2;
    let mut beta = Vec::new();
    let mut gamma = Vec::new();
    for i in 0..k - 1 {
        if i % 2 == 0 {
            // V_{(i+1)/2} -> (V_{dual_index(i)})^∨
            gamma.push((dual_index(i), i / 2));
        } else {
            // (V_{dual_index(i+1)})^∨ -> V_{(i-1)/2}
            beta.push(((i - 1) / 2, dual_index(i + 1)));
        }
    }
    for j in (0..k - 1).step_by(2) {
        beta.push((n - 1, dual_index(j)));
    }
    SpTripleModel::new(MarkedSurface::with_order_two(g as u32, s), v, beta, gamma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stability::{is_maximal, stability_verdict, Verdict};

    #[test]
    fn rank_two_pardegs() {
        let m = hitchin_model(2, 2, 1).unwrap();
        assert_eq!(m.pardegs(), &[Rational::new(-3, 2), Rational::new(3, 2)]);
    }

    #[test]
    fn rank_three_pardegs() {
        let m = hitchin_model(3, 2, 1).unwrap();
        let ints: Vec<Rational> = [-3, 0, 3].iter().map(|&x| Rational::integer(x)).collect();
        assert_eq!(m.pardegs(), ints.as_slice());
    }

    #[test]
    fn symplectic_form_is_maximal_and_stable() {
        for k in [2, 4, 6] {
            let t = hitchin_sp_triple(k, 2, 1).unwrap();
            assert!(is_maximal(&t), "k={k}");
            assert_eq!(stability_verdict(&t.to_higgs_model().unwrap()).verdict, Verdict::Stable);
        }
    }

    #[test]
    fn rejects_non_hyperbolic() {
        assert!(matches!(hitchin_model(2, 1, 0), Err(Error::NotHyperbolic { .. })));
    }
}
