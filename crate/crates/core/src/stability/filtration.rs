//! Weighted filtrations, degrees of parabolic reductions and the α-stability test.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::model::{invariant_subsets, DecomposableHiggsModel};
use super::sp::SpTripleModel;
use crate::error::{Error, Result};
use crate::exact::{intersection_dim, is_subspace, q_rank, unit_vector, Rational};

/// Strictly increasing chain of subspaces of `Q^n` ending at `Q^n`, each with a weight.
/// Subspaces are given by spanning vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedFiltration {
    n: usize,
    subspaces: Vec<Vec<Vec<Rational>>>,
    weights: Vec<Rational>,
}

impl WeightedFiltration {
    /// Filtration with strictly increasing weights, the shape attached to an antidominant
    /// character.
    pub fn new(n: usize, subspaces: Vec<Vec<Vec<Rational>>>, weights: Vec<Rational>) -> Result<Self> {
        if weights.windows(2).any(|p| p[0] >= p[1]) {
            return Err(Error::FiltrationViolation("weights must increase strictly".into()));
        }
        Self::build(n, subspaces, weights)
    }

    /// Increasing chain built from a parabolic flag: the deepest flag subspace comes first and
    /// the weights therefore decrease strictly.
    pub fn from_flag(n: usize, subspaces: Vec<Vec<Vec<Rational>>>, weights: Vec<Rational>) -> Result<Self> {
        if weights.windows(2).any(|p| p[0] <= p[1]) {
            return Err(Error::FiltrationViolation("flag weights must decrease along the chain".into()));
        }
        Self::build(n, subspaces, weights)
    }

    fn build(n: usize, subspaces: Vec<Vec<Vec<Rational>>>, weights: Vec<Rational>) -> Result<Self> {
        if subspaces.len() != weights.len() || subspaces.is_empty() {
            return Err(Error::FiltrationViolation("one weight per subspace, at least one subspace".into()));
        }
        let mut prev = 0;
        for (k, w) in subspaces.iter().enumerate() {
            let r = q_rank(w, n)?;
            if r <= prev {
                return Err(Error::FiltrationViolation("dimensions must increase strictly".into()));
            }
            if k > 0 && !is_subspace(&subspaces[k - 1], w, n)? {
                return Err(Error::FiltrationViolation("subspaces must be nested".into()));
            }
            prev = r;
        }
        if prev != n {
            return Err(Error::FiltrationViolation(format!("last subspace has dimension {prev}, not {n}")));
        }
        Ok(WeightedFiltration { n, subspaces, weights })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn subspaces(&self) -> &[Vec<Vec<Rational>>] {
        &self.subspaces
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }
}

/// Consecutive weight differences `λ_i - λ_{i+1}` with `λ_{k+1} = 0`.
fn steps(weights: &[Rational]) -> Vec<Rational> {
    (0..weights.len())
        .map(|i| {
            let next = weights.get(i + 1).cloned().unwrap_or_else(Rational::zero);
            &weights[i] - next
        })
        .collect()
}

/// `Σ_i Σ_j (λ_i - λ_{i+1})(μ_j - μ_{j+1}) dim(W_i ∩ B_j)`, dimensions computed over Q.
pub fn relative_degree(a: &WeightedFiltration, b: &WeightedFiltration) -> Result<Rational> {
    if a.n != b.n {
        return Err(Error::DimensionMismatch { expected: a.n, found: b.n });
    }
    let (da, db) = (steps(&a.weights), steps(&b.weights));
    let mut total = Rational::zero();
    for (wi, li) in a.subspaces.iter().zip(&da) {
        for (bj, mj) in b.subspaces.iter().zip(&db) {
            let d = intersection_dim(wi, bj, a.n)?;
            total += li * mj * Rational::integer(d as i64);
        }
    }
    Ok(total)
}

/// Filtration by coordinate subspaces of a decomposable bundle: `steps[k]` lists the summand
/// indices spanning `W_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoordinateFiltration {
    pub steps: Vec<Vec<usize>>,
    pub weights: Vec<Rational>,
}

impl CoordinateFiltration {
    pub fn new(steps: Vec<Vec<usize>>, weights: Vec<Rational>) -> Self {
        let steps = steps
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s.dedup();
                s
            })
            .collect();
        CoordinateFiltration { steps, weights }
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        self.to_weighted(n).map(|_| ())
    }

    pub fn to_weighted(&self, n: usize) -> Result<WeightedFiltration> {
        for s in &self.steps {
            if let Some(&bad) = s.iter().find(|&&i| i >= n) {
                return Err(Error::FiltrationViolation(format!("index {bad} out of range for rank {n}")));
            }
        }
        let spaces = self.steps.iter().map(|s| s.iter().map(|&i| unit_vector(i, n)).collect()).collect();
        WeightedFiltration::new(n, spaces, self.weights.clone())
    }

    /// Reads off a coordinate filtration, failing when some subspace is not spanned by
    /// standard basis vectors.
    pub fn from_weighted(f: &WeightedFiltration) -> Result<Self> {
        let n = f.n;
        let mut steps = Vec::new();
        for w in &f.subspaces {
            let coords: Vec<usize> =
                (0..n).filter(|&i| is_subspace(&[unit_vector(i, n)], w, n).unwrap_or(false)).collect();
            if coords.len() != q_rank(w, n)? {
                return Err(Error::FiltrationViolation("non-coordinate subspace".into()));
            }
            steps.push(coords);
        }
        Ok(CoordinateFiltration { steps, weights: f.weights.clone() })
    }

    /// Step at which summand `i` first appears.
    fn step_of(&self, i: usize) -> Option<usize> {
        self.steps.iter().position(|s| s.contains(&i))
    }
}

/// The flag at `label` written as an increasing chain with decreasing weights.
fn flag_filtration(model: &DecomposableHiggsModel, label: &str) -> Result<WeightedFiltration> {
    let n = model.len();
    let ws: Vec<Rational> = model.summands().iter().map(|l| l.weight(label)).collect();
    let distinct: BTreeSet<Rational> = ws.iter().cloned().collect();
    let mut spaces = Vec::new();
    let mut weights = Vec::new();
    for a in distinct.iter().rev() {
        spaces.push((0..n).filter(|&i| ws[i] >= *a).map(|i| unit_vector(i, n)).collect());
        weights.push(a.clone());
    }
    WeightedFiltration::from_flag(n, spaces, weights)
}

/// Parabolic degree of the reduction of a decomposable `GL(n)` bundle given by a coordinate
/// filtration: `λ_r deg W + Σ (λ_i - λ_{i+1}) deg W_i` plus, at every marked point, the
/// relative degree of the filtration against the weighted flag.
pub fn pardeg_of_reduction_gl(model: &DecomposableHiggsModel, filt: &CoordinateFiltration) -> Result<Rational> {
    let n = model.len();
    let wf = filt.to_weighted(n)?;
    let mut total = Rational::zero();
    for (s, d) in filt.steps.iter().zip(steps(&filt.weights)) {
        let deg: i64 = s.iter().map(|&i| model.summands()[i].degree).sum();
        total += d * Rational::integer(deg);
    }
    for label in model.surface().labels() {
        total += relative_degree(&wf, &flag_filtration(model, label)?)?;
    }
    Ok(total)
}

/// `λ_r (pardeg W - α rk W) + Σ_{k<r} (λ_k - λ_{k+1})(pardeg W_k - α rk W_k)`.
pub fn alpha_pairing(model: &DecomposableHiggsModel, filt: &CoordinateFiltration, alpha: &Rational) -> Result<Rational> {
    filt.validate(model.len())?;
    let mut total = Rational::zero();
    for (s, d) in filt.steps.iter().zip(steps(&filt.weights)) {
        let v = model.subset_pardeg(s) - alpha * Rational::integer(s.len() as i64);
        total += d * v;
    }
    Ok(total)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaCheck {
    pub semistable: bool,
    pub witness: Option<CoordinateFiltration>,
    pub witness_value: Option<Rational>,
}

/// α-semistability of a decomposable `GL(n)` model over Higgs-invariant coordinate filtrations.
///
/// The pairing is linear in the weight vector, so it is enough to test the extreme rays of the
/// weight cone: `±(1, ..., 1)` on the trivial filtration and `(0, 1)` on each two-step
/// filtration `W_1 ⊂ E` with `W_1` invariant.
pub fn alpha_stability_check_gl(model: &DecomposableHiggsModel, alpha: &Rational) -> AlphaCheck {
    let n = model.len();
    let all: Vec<usize> = (0..n).collect();
    let mut candidates = vec![
        CoordinateFiltration::new(vec![all.clone()], vec![Rational::one()]),
        CoordinateFiltration::new(vec![all.clone()], vec![-Rational::one()]),
    ];
    for s in invariant_subsets(model) {
        candidates.push(CoordinateFiltration::new(vec![s, all.clone()], vec![Rational::zero(), Rational::one()]));
    }
    for f in candidates {
        let v = alpha_pairing(model, &f, alpha).expect("candidate filtrations are valid");
        if v.is_negative() {
            return AlphaCheck { semistable: false, witness: Some(f), witness_value: Some(v) };
        }
    }
    AlphaCheck { semistable: true, witness: None, witness_value: None }
}

/// `Σ_j (λ_j - λ_{j+1})(pardeg V_j - α rk V_j)` for a coordinate filtration of `V`.
pub fn sp_filtration_degree(model: &SpTripleModel, filt: &CoordinateFiltration, alpha: &Rational) -> Result<Rational> {
    filt.validate(model.n())?;
    let pd = model.v_pardegs();
    let mut total = Rational::zero();
    for (s, d) in filt.steps.iter().zip(steps(&filt.weights)) {
        let p: Rational = s.iter().map(|&i| &pd[i]).sum();
        total += d * (p - alpha * Rational::integer(s.len() as i64));
    }
    Ok(total)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportCheck {
    pub beta_ok: bool,
    pub gamma_ok: bool,
    pub violations: Vec<String>,
}

/// Whether β and γ lie in the subspaces cut out by the filtration: a β component on
/// `e_i e_j` needs `λ_i + λ_j <= 0`, a γ component needs `λ_i + λ_j >= 0`, where each index
/// reads the weight of the first step containing it.
pub fn sp_support_membership(model: &SpTripleModel, filt: &CoordinateFiltration) -> Result<SupportCheck> {
    filt.validate(model.n())?;
    let lam = |i: usize| filt.weights[filt.step_of(i).expect("last step contains every index")].clone();
    let mut out = SupportCheck { beta_ok: true, gamma_ok: true, violations: Vec::new() };
    for &(i, j) in model.beta() {
        let s = lam(i) + lam(j);
        if s > Rational::zero() {
            out.beta_ok = false;
            out.violations.push(format!("beta component ({i}, {j}) has weight sum {s} > 0"));
        }
    }
    for &(i, j) in model.gamma() {
        let s = lam(i) + lam(j);
        if s.is_negative() {
            out.gamma_ok = false;
            out.violations.push(format!("gamma component ({i}, {j}) has weight sum {s} < 0"));
        }
    }
    Ok(out)
}
