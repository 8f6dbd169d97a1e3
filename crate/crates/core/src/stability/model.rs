use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::parbun::ParabolicLineBundle;
use crate::surface::MarkedSurface;

/// Wire form of a decomposable model: `arrows` holds pairs `[i, j]` for a nonzero component
/// `L_j -> L_i ⊗ K(D)`. Indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelSpec {
    pub summands: Vec<ParabolicLineBundle>,
    #[serde(default)]
    pub arrows: Vec<[usize; 2]>,
}

/// Higgs bundle `E = ⊕ L_i` whose Higgs field has a prescribed set of nonzero components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecomposableHiggsModel {
    surface: MarkedSurface,
    summands: Vec<ParabolicLineBundle>,
    arrows: BTreeSet<(usize, usize)>,
    pardegs: Vec<Rational>,
}

/// Largest model for which invariant subsets are enumerated.
pub const MAX_SUMMANDS: usize = 24;

impl DecomposableHiggsModel {
    pub fn new(
        surface: MarkedSurface,
        summands: Vec<ParabolicLineBundle>,
        arrows: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let n = summands.len();
        if n == 0 {
            return Err(Error::InvalidInput("a model needs at least one summand".into()));
        }
        if n > MAX_SUMMANDS {
            return Err(Error::InvalidInput(format!("at most {MAX_SUMMANDS} summands are supported")));
        }
        let arrows: BTreeSet<(usize, usize)> = arrows.into_iter().collect();
        for &(i, j) in &arrows {
            if i >= n || j >= n {
                return Err(Error::InvalidInput(format!("arrow ({i}, {j}) refers to a missing summand")));
            }
        }
        let pardegs = summands.iter().map(|l| l.pardeg(&surface)).collect::<Result<Vec<_>>>()?;
        Ok(DecomposableHiggsModel { surface, summands, arrows, pardegs })
    }

    pub fn from_spec(surface: MarkedSurface, spec: &ModelSpec) -> Result<Self> {
        Self::new(surface, spec.summands.clone(), spec.arrows.iter().map(|a| (a[0], a[1])))
    }

    pub fn to_spec(&self) -> ModelSpec {
        ModelSpec { summands: self.summands.clone(), arrows: self.arrows.iter().map(|&(i, j)| [i, j]).collect() }
    }

    pub fn surface(&self) -> &MarkedSurface {
        &self.surface
    }

    pub fn summands(&self) -> &[ParabolicLineBundle] {
        &self.summands
    }

    pub fn arrows(&self) -> &BTreeSet<(usize, usize)> {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn pardegs(&self) -> &[Rational] {
        &self.pardegs
    }

    pub fn total_pardeg(&self) -> Rational {
        self.pardegs.iter().sum()
    }

    pub fn parslope(&self) -> Rational {
        self.total_pardeg() / Rational::integer(self.len() as i64)
    }

    pub fn subset_pardeg(&self, s: &[usize]) -> Rational {
        s.iter().map(|&i| &self.pardegs[i]).sum()
    }

    pub fn subset_slope(&self, s: &[usize]) -> Rational {
        self.subset_pardeg(s) / Rational::integer(s.len() as i64)
    }

    /// True when `s` is closed under the Higgs field: `j ∈ s` and `L_j -> L_i` force `i ∈ s`.
    pub fn is_invariant(&self, s: &[usize]) -> bool {
        let set: BTreeSet<usize> = s.iter().copied().collect();
        self.arrows.iter().all(|(i, j)| !set.contains(j) || set.contains(i))
    }

    /// Arrows whose line-bundle hom space has negative parabolic degree, so the component
    /// would have to vanish. Only a necessary condition is checked.
    pub fn feasibility_warnings(&self) -> Vec<String> {
        let c = Rational::integer(self.surface.deg_kd());
        self.arrows
            .iter()
            .filter(|&&(i, j)| &self.pardegs[i] + &c - &self.pardegs[j] < Rational::zero())
            .map(|&(i, j)| {
                format!(
                    "arrow L{j} -> L{i} ⊗ K(D) has negative parabolic degree {}",
                    &self.pardegs[i] + &c - &self.pardegs[j]
                )
            })
            .collect()
    }

    /// Restriction to the summands in `keep` (sorted), with arrows among them.
    pub fn restrict(&self, keep: &[usize]) -> Result<Self> {
        let pos = |x: usize| keep.iter().position(|&k| k == x);
        let arrows: Vec<(usize, usize)> = self
            .arrows
            .iter()
            .filter_map(|&(i, j)| Some((pos(i)?, pos(j)?)))
            .collect();
        Self::new(self.surface.clone(), keep.iter().map(|&k| self.summands[k].clone()).collect(), arrows)
    }

    /// Connected components of the arrow graph with directions forgotten.
    pub fn arrow_components(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for &(i, j) in &self.arrows {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            parent[a.max(b)] = a.min(b);
        }
        let mut comps: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for x in 0..n {
            let r = find(&mut parent, x);
            comps.entry(r).or_default().push(x);
        }
        comps.into_values().collect()
    }
}

/// All proper nonempty invariant subsets, ordered by size and then lexicographically.
pub fn invariant_subsets(model: &DecomposableHiggsModel) -> Vec<Vec<usize>> {
    let n = model.len();
    // `need[j]` is the mask of summands that `j` maps into.
    let mut need = vec![0u32; n];
    for &(i, j) in model.arrows() {
        need[j] |= 1 << i;
    }
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut out: Vec<Vec<usize>> = (1..full)
        .filter(|&mask| (0..n).all(|j| mask >> j & 1 == 0 || need[j] & !mask == 0))
        .map(|mask| (0..n).filter(|&j| mask >> j & 1 == 1).collect())
        .collect();
    out.sort_by(|a: &Vec<usize>, b: &Vec<usize>| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Stable,
    StrictlySemistable,
    Unstable,
    Polystable,
}

impl Verdict {
    pub fn is_semistable(self) -> bool {
        self != Verdict::Unstable
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityVerdict {
    pub verdict: Verdict,
    pub slope: Rational,
    /// For `unstable`, the invariant subset of maximal slope; for `strictly_semistable`, one of
    /// slope equal to the total slope.
    pub witness: Option<Vec<usize>>,
    pub witness_slope: Option<Rational>,
    pub warnings: Vec<String>,
}

/// Slope stability of a decomposable model, tested on coordinate invariant subbundles.
pub fn stability_verdict(model: &DecomposableHiggsModel) -> StabilityVerdict {
    let mu = model.parslope();
    let subsets = invariant_subsets(model);
    let warnings = model.feasibility_warnings();
    let mut best: Option<(Rational, &Vec<usize>)> = None;
    for s in &subsets {
        let sl = model.subset_slope(s);
        if best.as_ref().is_none_or(|(b, _)| sl > *b) {
            best = Some((sl, s));
        }
    }
    let Some((max_slope, max_set)) = best else {
        return StabilityVerdict { verdict: Verdict::Stable, slope: mu, witness: None, witness_slope: None, warnings };
    };
    if max_slope > mu {
        return StabilityVerdict {
            verdict: Verdict::Unstable,
            slope: mu,
            witness: Some(max_set.clone()),
            witness_slope: Some(max_slope),
            warnings,
        };
    }
    if max_slope < mu {
        return StabilityVerdict { verdict: Verdict::Stable, slope: mu, witness: None, witness_slope: None, warnings };
    }
    let equal = subsets.iter().find(|s| model.subset_slope(s) == mu).cloned();
    let verdict = if is_polystable_split(model, &mu) { Verdict::Polystable } else { Verdict::StrictlySemistable };
    StabilityVerdict { verdict, slope: mu.clone(), witness: equal, witness_slope: Some(mu), warnings }
}

/// A semistable model is polystable when its arrow components all have the total slope and
/// are stable on their own.
fn is_polystable_split(model: &DecomposableHiggsModel, mu: &Rational) -> bool {
    let comps = model.arrow_components();
    if comps.len() < 2 {
        return false;
    }
    comps.iter().all(|c| {
        model.subset_slope(c) == *mu
            && model.restrict(c).map(|m| stability_verdict(&m).verdict == Verdict::Stable).unwrap_or(false)
    })
}
