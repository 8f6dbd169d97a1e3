//! Parabolic vector bundles described by discrete data: rank, degree and weighted flags.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::surface::MarkedSurface;

/// Weighted flag at one point. Step `i` has dimension `mult[i]` and weight `weights[i]`;
/// weights increase strictly and lie in `[0, 1)`.
///
/// Step 0 is the top of the flag (the whole fiber modulo the next subspace); later steps are
/// deeper subspaces carrying larger weights.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawFlag")]
pub struct ParabolicFlag {
    pub mult: Vec<u32>,
    pub weights: Vec<Rational>,
}

#[derive(Deserialize)]
struct RawFlag {
    mult: Vec<u32>,
    weights: Vec<Rational>,
}

impl TryFrom<RawFlag> for ParabolicFlag {
    type Error = Error;
    fn try_from(r: RawFlag) -> Result<Self> {
        ParabolicFlag::new(r.mult, r.weights)
    }
}

impl ParabolicFlag {
    pub fn new(mult: Vec<u32>, weights: Vec<Rational>) -> Result<Self> {
        if mult.len() != weights.len() {
            return Err(Error::InvalidFlag(format!(
                "{} multiplicities but {} weights",
                mult.len(),
                weights.len()
            )));
        }
        if mult.iter().any(|&k| k == 0) {
            return Err(Error::InvalidFlag("zero multiplicity".into()));
        }
        for w in &weights {
            if !w.in_unit_interval() {
                return Err(Error::InvalidWeight(format!("weight {w} outside [0,1)")));
            }
        }
        if weights.windows(2).any(|p| p[0] >= p[1]) {
            return Err(Error::InvalidFlag("weights must increase strictly".into()));
        }
        Ok(ParabolicFlag { mult, weights })
    }

    /// Single step of dimension `rank` with weight zero (empty for rank 0).
    pub fn trivial(rank: u32) -> Self {
        if rank == 0 {
            return ParabolicFlag { mult: vec![], weights: vec![] };
        }
        ParabolicFlag { mult: vec![rank], weights: vec![Rational::zero()] }
    }

    /// Flag whose per-direction weights are `ws` (any order, repeats allowed).
    pub fn from_directions(ws: &[Rational]) -> Result<Self> {
        let mut sorted = ws.to_vec();
        sorted.sort();
        let mut mult = Vec::new();
        let mut weights: Vec<Rational> = Vec::new();
        for w in sorted {
            match weights.last() {
                Some(last) if *last == w => *mult.last_mut().unwrap() += 1,
                _ => {
                    weights.push(w);
                    mult.push(1);
                }
            }
        }
        Self::new(mult, weights)
    }

    /// Weight of every direction, nondecreasing.
    pub fn directions(&self) -> Vec<Rational> {
        self.mult
            .iter()
            .zip(&self.weights)
            .flat_map(|(&k, w)| std::iter::repeat(w.clone()).take(k as usize))
            .collect()
    }

    pub fn rank(&self) -> u32 {
        self.mult.iter().sum()
    }

    pub fn steps(&self) -> usize {
        self.mult.len()
    }

    /// `Σ k_i α_i`.
    pub fn weight_sum(&self) -> Rational {
        self.mult.iter().zip(&self.weights).map(|(&k, w)| Rational::integer(k as i64) * w).sum()
    }

    /// Number of directions carrying a nonzero weight.
    pub fn nonzero_directions(&self) -> u32 {
        self.mult.iter().zip(&self.weights).filter(|(_, w)| !w.is_zero()).map(|(&k, _)| k).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParabolicBundle {
    pub rank: u32,
    pub degree: i64,
    pub flags: BTreeMap<String, ParabolicFlag>,
}

impl ParabolicBundle {
    /// Bundle with the trivial weight-zero flag at every marked point.
    pub fn with_trivial_flags(surf: &MarkedSurface, rank: u32, degree: i64) -> Self {
        let flags = surf.labels().map(|l| (l.to_string(), ParabolicFlag::trivial(rank))).collect();
        ParabolicBundle { rank, degree, flags }
    }

    /// Rank-zero bundle, the unit for [`par_direct_sum`].
    pub fn zero(surf: &MarkedSurface) -> Self {
        Self::with_trivial_flags(surf, 0, 0)
    }

    pub fn from_line(l: &ParabolicLineBundle, surf: &MarkedSurface) -> Result<Self> {
        l.check(surf)?;
        let flags = surf
            .labels()
            .map(|x| (x.to_string(), ParabolicFlag { mult: vec![1], weights: vec![l.weight(x)] }))
            .collect();
        Ok(ParabolicBundle { rank: 1, degree: l.degree, flags })
    }

    /// Checks that flags sit exactly on the marked points and have the right rank.
    pub fn check(&self, surf: &MarkedSurface) -> Result<()> {
        for label in self.flags.keys() {
            if surf.point(label).is_none() {
                return Err(Error::FlagMismatch(format!("flag at unknown point {label:?}")));
            }
        }
        for label in surf.labels() {
            let Some(f) = self.flags.get(label) else {
                return Err(Error::FlagMismatch(format!("no flag at point {label:?}")));
            };
            if f.rank() != self.rank {
                return Err(Error::FlagMismatch(format!(
                    "flag at {label:?} has rank {} but the bundle has rank {}",
                    f.rank(),
                    self.rank
                )));
            }
        }
        Ok(())
    }
}

/// Line bundle with one weight per marked point; absent labels carry weight zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParabolicLineBundle {
    pub degree: i64,
    #[serde(default)]
    pub weights: BTreeMap<String, Rational>,
}

impl ParabolicLineBundle {
    pub fn new(degree: i64, weights: BTreeMap<String, Rational>) -> Result<Self> {
        for (x, w) in &weights {
            if !w.in_unit_interval() {
                return Err(Error::InvalidWeight(format!("weight {w} at {x:?} outside [0,1)")));
            }
        }
        Ok(ParabolicLineBundle { degree, weights })
    }

    /// Same weight `w` at every point of `surf`.
    pub fn uniform(surf: &MarkedSurface, degree: i64, w: Rational) -> Result<Self> {
        Self::new(degree, surf.labels().map(|l| (l.to_string(), w.clone())).collect())
    }

    pub fn weight(&self, label: &str) -> Rational {
        self.weights.get(label).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn check(&self, surf: &MarkedSurface) -> Result<()> {
        for (x, w) in &self.weights {
            if surf.point(x).is_none() {
                return Err(Error::FlagMismatch(format!("weight at unknown point {x:?}")));
            }
            if !w.in_unit_interval() {
                return Err(Error::InvalidWeight(format!("weight {w} at {x:?} outside [0,1)")));
            }
        }
        Ok(())
    }

    pub fn pardeg(&self, surf: &MarkedSurface) -> Result<Rational> {
        self.check(surf)?;
        Ok(Rational::integer(self.degree) + self.weights.values().sum::<Rational>())
    }

    /// Parabolic dual: nonzero weights `a` become `1 - a` and the degree absorbs the shift.
    pub fn dual(&self) -> Self {
        let mut degree = -self.degree;
        let mut weights = BTreeMap::new();
        for (x, w) in &self.weights {
            if w.is_zero() {
                weights.insert(x.clone(), Rational::zero());
            } else {
                degree -= 1;
                weights.insert(x.clone(), Rational::one() - w);
            }
        }
        ParabolicLineBundle { degree, weights }
    }

    pub fn tensor(&self, other: &Self) -> Self {
        let mut degree = self.degree + other.degree;
        let mut weights = BTreeMap::new();
        let labels: std::collections::BTreeSet<&String> = self.weights.keys().chain(other.weights.keys()).collect();
        for x in labels {
            let mut w = self.weight(x) + other.weight(x);
            if w >= Rational::one() {
                w = w - Rational::one();
                degree += 1;
            }
            weights.insert(x.clone(), w);
        }
        ParabolicLineBundle { degree, weights }
    }

    /// The line bundle `O(D)` of the reduced divisor of marked points, with zero weights.
    pub fn xi(surf: &MarkedSurface) -> Self {
        ParabolicLineBundle { degree: surf.s() as i64, weights: BTreeMap::new() }
    }
}

/// `deg E + Σ_x Σ_i k_i α_i`.
pub fn pardeg(b: &ParabolicBundle, surf: &MarkedSurface) -> Result<Rational> {
    b.check(surf)?;
    Ok(Rational::integer(b.degree) + b.flags.values().map(ParabolicFlag::weight_sum).sum::<Rational>())
}

pub fn parslope(b: &ParabolicBundle, surf: &MarkedSurface) -> Result<Rational> {
    if b.rank == 0 {
        return Err(Error::InvalidInput("slope of a rank-zero bundle".into()));
    }
    Ok(pardeg(b, surf)? / Rational::integer(b.rank as i64))
}

/// Parabolic dual, normalised so that `pardeg(dual) = -pardeg(b)`.
pub fn par_dual(b: &ParabolicBundle) -> ParabolicBundle {
    let mut degree = -b.degree;
    let mut flags = BTreeMap::new();
    for (x, f) in &b.flags {
        degree -= f.nonzero_directions() as i64;
        let dirs: Vec<Rational> =
            f.directions().into_iter().map(|w| if w.is_zero() { w } else { Rational::one() - w }).collect();
        flags.insert(x.clone(), ParabolicFlag::from_directions(&dirs).expect("dual weights stay in [0,1)"));
    }
    ParabolicBundle { rank: b.rank, degree, flags }
}

/// Tensor product with a parabolic line bundle: weights add modulo one and every wrap moves
/// into the degree.
pub fn par_tensor_line(b: &ParabolicBundle, l: &ParabolicLineBundle, surf: &MarkedSurface) -> Result<ParabolicBundle> {
    b.check(surf)?;
    l.check(surf)?;
    let mut degree = b.degree + l.degree * b.rank as i64;
    let mut flags = BTreeMap::new();
    for (x, f) in &b.flags {
        let beta = l.weight(x);
        let mut dirs = Vec::with_capacity(f.rank() as usize);
        for w in f.directions() {
            let mut t = w + &beta;
            if t >= Rational::one() {
                t = t - Rational::one();
                degree += 1;
            }
            dirs.push(t);
        }
        flags.insert(x.clone(), ParabolicFlag::from_directions(&dirs)?);
    }
    Ok(ParabolicBundle { rank: b.rank, degree, flags })
}

pub fn par_direct_sum(a: &ParabolicBundle, b: &ParabolicBundle, surf: &MarkedSurface) -> Result<ParabolicBundle> {
    a.check(surf)?;
    b.check(surf)?;
    let mut flags = BTreeMap::new();
    for x in surf.labels() {
        let mut dirs = a.flags[x].directions();
        dirs.extend(b.flags[x].directions());
        flags.insert(x.to_string(), ParabolicFlag::from_directions(&dirs)?);
    }
    Ok(ParabolicBundle { rank: a.rank + b.rank, degree: a.degree + b.degree, flags })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ResidueClass {
    StronglyParabolic,
    Parabolic,
    Neither,
}

/// Classifies a residue by which blocks may be nonzero. `pattern[i][j]` says whether the block
/// sending flag step `j` into flag step `i` can be nonzero; step order follows the flag.
pub fn residue_class(flag: &ParabolicFlag, pattern: &[Vec<bool>]) -> Result<ResidueClass> {
    let r = flag.steps();
    if pattern.len() != r || pattern.iter().any(|row| row.len() != r) {
        return Err(Error::ShapeMismatch(format!("residue pattern must be {r}x{r} for this flag")));
    }
    let mut strictly = true;
    for (i, row) in pattern.iter().enumerate() {
        for (j, &nz) in row.iter().enumerate() {
            if !nz {
                continue;
            }
            if i < j {
                return Ok(ResidueClass::Neither);
            }
            if i == j {
                strictly = false;
            }
        }
    }
    Ok(if strictly { ResidueClass::StronglyParabolic } else { ResidueClass::Parabolic })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapClass {
    pub parabolic: bool,
    pub strongly_parabolic: bool,
}

/// Decides whether a map with the given block support is (strongly) parabolic.
///
/// `blocks[x][j][i]` says whether the map may send step `i` of `src` at `x` into step `j` of
/// `dst`. A block is admissible when `α_i <= α'_j`, or `α_i < α'_j` in the strong case.
pub fn is_parabolic_map(
    src: &ParabolicBundle,
    dst: &ParabolicBundle,
    blocks: &BTreeMap<String, Vec<Vec<bool>>>,
    surf: &MarkedSurface,
) -> Result<MapClass> {
    src.check(surf)?;
    dst.check(surf)?;
    let mut class = MapClass { parabolic: true, strongly_parabolic: true };
    for (x, pat) in blocks {
        let (Some(fs), Some(fd)) = (src.flags.get(x), dst.flags.get(x)) else {
            return Err(Error::FlagMismatch(format!("no flags at {x:?}")));
        };
        if pat.len() != fd.steps() || pat.iter().any(|row| row.len() != fs.steps()) {
            return Err(Error::ShapeMismatch(format!(
                "block pattern at {x:?} must be {}x{}",
                fd.steps(),
                fs.steps()
            )));
        }
        for (j, row) in pat.iter().enumerate() {
            for (i, &nz) in row.iter().enumerate() {
                if !nz {
                    continue;
                }
                if fs.weights[i] > fd.weights[j] {
                    class.parabolic = false;
                }
                if fs.weights[i] >= fd.weights[j] {
                    class.strongly_parabolic = false;
                }
            }
        }
    }
    Ok(class)
}
