use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::model::DecomposableHiggsModel;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::parbun::ParabolicLineBundle;
use crate::surface::MarkedSurface;

/// Wire form of an `Sp(2n, R)` triple `(V, β, γ)` with `V = ⊕ L_i`.
///
/// `beta` lists unordered pairs `[i, j]` with a nonzero component of `β ∈ Sym²V ⊗ K(D)` on
/// `e_i e_j`; `gamma` does the same for `γ ∈ Sym²V^∨ ⊗ K(D)`. Indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpTripleSpec {
    pub v: Vec<ParabolicLineBundle>,
    #[serde(default)]
    pub beta: Vec<[usize; 2]>,
    #[serde(default)]
    pub gamma: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpTripleModel {
    surface: MarkedSurface,
    v: Vec<ParabolicLineBundle>,
    beta: BTreeSet<(usize, usize)>,
    gamma: BTreeSet<(usize, usize)>,
}

fn normalise(pairs: impl IntoIterator<Item = (usize, usize)>, n: usize, what: &str) -> Result<BTreeSet<(usize, usize)>> {
    let mut out = BTreeSet::new();
    for (i, j) in pairs {
        if i >= n || j >= n {
            return Err(Error::InvalidInput(format!("{what} component ({i}, {j}) refers to a missing summand")));
        }
        out.insert((i.min(j), i.max(j)));
    }
    Ok(out)
}

impl SpTripleModel {
    pub fn new(
        surface: MarkedSurface,
        v: Vec<ParabolicLineBundle>,
        beta: impl IntoIterator<Item = (usize, usize)>,
        gamma: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        if v.is_empty() {
            return Err(Error::InvalidInput("V needs at least one summand".into()));
        }
        for l in &v {
            l.check(&surface)?;
        }
        let n = v.len();
        let beta = normalise(beta, n, "beta")?;
        let gamma = normalise(gamma, n, "gamma")?;
        Ok(SpTripleModel { surface, v, beta, gamma })
    }

    pub fn from_spec(surface: MarkedSurface, spec: &SpTripleSpec) -> Result<Self> {
        Self::new(
            surface,
            spec.v.clone(),
            spec.beta.iter().map(|p| (p[0], p[1])),
            spec.gamma.iter().map(|p| (p[0], p[1])),
        )
    }

    pub fn to_spec(&self) -> SpTripleSpec {
        SpTripleSpec {
            v: self.v.clone(),
            beta: self.beta.iter().map(|&(i, j)| [i, j]).collect(),
            gamma: self.gamma.iter().map(|&(i, j)| [i, j]).collect(),
        }
    }

    pub fn surface(&self) -> &MarkedSurface {
        &self.surface
    }

    pub fn v(&self) -> &[ParabolicLineBundle] {
        &self.v
    }

    pub fn beta(&self) -> &BTreeSet<(usize, usize)> {
        &self.beta
    }

    pub fn gamma(&self) -> &BTreeSet<(usize, usize)> {
        &self.gamma
    }

    pub fn n(&self) -> usize {
        self.v.len()
    }

    pub fn v_pardegs(&self) -> Vec<Rational> {
        self.v.iter().map(|l| l.pardeg(&self.surface).expect("checked at construction")).collect()
    }

    /// The underlying `GL(2n)` model on `V ⊕ V^∨`: summand `i < n` is `L_i`, summand `n + i`
    /// is the parabolic dual of `L_i`.
    pub fn to_higgs_model(&self) -> Result<DecomposableHiggsModel> {
        let n = self.n();
        let mut summands = self.v.clone();
        summands.extend(self.v.iter().map(ParabolicLineBundle::dual));
        let mut arrows = Vec::new();
        for &(i, j) in &self.beta {
            // β: L_j^∨ -> L_i and L_i^∨ -> L_j
            arrows.push((i, n + j));
            arrows.push((j, n + i));
        }
        for &(i, j) in &self.gamma {
            // γ: L_j -> L_i^∨ and L_i -> L_j^∨
            arrows.push((n + i, j));
            arrows.push((n + j, i));
        }
        DecomposableHiggsModel::new(self.surface.clone(), summands, arrows)
    }

    /// Dual triple `(V^∨, γ, β)`. Its Toledo invariant is the negative of this one's.
    pub fn dual_triple(&self) -> Self {
        SpTripleModel {
            surface: self.surface.clone(),
            v: self.v.iter().map(ParabolicLineBundle::dual).collect(),
            beta: self.gamma.clone(),
            gamma: self.beta.clone(),
        }
    }

    /// True when every component of β and γ is monomial: each index meets at most one pair.
    /// For such patterns kernels and images of the Higgs field are coordinate subbundles.
    pub fn is_monomial(&self) -> bool {
        let ok = |pairs: &BTreeSet<(usize, usize)>| {
            let mut seen = BTreeSet::new();
            pairs.iter().all(|&(i, j)| if i == j { seen.insert(i) } else { seen.insert(i) && seen.insert(j) })
        };
        ok(&self.beta) && ok(&self.gamma)
    }
}

/// Toledo invariant `τ = pardeg V`.
pub fn toledo(model: &SpTripleModel) -> Rational {
    model.v_pardegs().iter().sum()
}

/// `n (g - 1 + s/2)`.
pub fn milnor_wood_bound(n: usize, g: u32, s: usize) -> Rational {
    Rational::integer(n as i64) * (Rational::integer(g as i64 - 1) + Rational::new(s as i64, 2))
}

/// `[-rk(W⁺)(2g-2+s), rk(W⁻)(2g-2+s)]`.
pub fn general_mw_interval(rk_plus: usize, rk_minus: usize, g: u32, s: usize) -> (Rational, Rational) {
    let c = 2 * g as i64 - 2 + s as i64;
    (Rational::integer(-(rk_plus as i64) * c), Rational::integer(rk_minus as i64 * c))
}

pub fn is_maximal(model: &SpTripleModel) -> bool {
    toledo(model) == milnor_wood_bound(model.n(), model.surface().genus, model.surface().s())
}
