//! Local correspondence between parabolic and orbifold Higgs fields near one marked point.
//!
//! On the parabolic side the coordinate is `w`; on the orbifold chart it is `z` with `w = z^m`.
//! A parabolic Higgs field is given by Laurent coefficients of `dw`, and the orbifold Higgs
//! field by Laurent coefficients of `dz/z`. The gauge change `diag(z^{k_i})` relates the two.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub deg: i64,
    pub coef: Rational,
}

/// Truncated Laurent polynomial: nonzero coefficients keyed by degree.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(from = "Vec<Term>", into = "Vec<Term>")]
pub struct LaurentPoly(BTreeMap<i64, Rational>);

impl From<Vec<Term>> for LaurentPoly {
    fn from(ts: Vec<Term>) -> Self {
        let mut p = LaurentPoly::default();
        for t in ts {
            p.add_term(t.deg, t.coef);
        }
        p
    }
}

impl From<LaurentPoly> for Vec<Term> {
    fn from(p: LaurentPoly) -> Self {
        p.0.into_iter().map(|(deg, coef)| Term { deg, coef }).collect()
    }
}

impl LaurentPoly {
    pub fn add_term(&mut self, deg: i64, coef: Rational) {
        let e = self.0.entry(deg).or_insert_with(Rational::zero);
        *e += coef;
        if e.is_zero() {
            self.0.remove(&deg);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.0.iter().map(|(&d, c)| (d, c))
    }

    pub fn min_deg(&self) -> Option<i64> {
        self.0.keys().next().copied()
    }

    pub fn max_deg(&self) -> Option<i64> {
        self.0.keys().next_back().copied()
    }

    /// Value at a nonzero rational point.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.0.iter().map(|(&d, c)| c * &rpow(x, d)).sum()
    }
}

pub(crate) fn rpow(x: &Rational, e: i64) -> Rational {
    let mut out = Rational::one();
    for _ in 0..e.unsigned_abs() {
        out = out * x;
    }
    if e < 0 {
        Rational::one() / out
    } else {
        out
    }
}

/// Which differential the entries multiply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Form {
    /// Entries are coefficients of `dz` (or `dw`).
    #[serde(rename = "dz")]
    Plain,
    /// Entries are coefficients of `dz/z` (or `dw/w`).
    #[serde(rename = "dz/z")]
    Log,
}

/// Square matrix of truncated Laurent polynomials. All exponents must lie in `window`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentMatrix {
    pub entries: Vec<Vec<LaurentPoly>>,
    pub window: (i64, i64),
    pub form: Form,
}

impl LaurentMatrix {
    pub fn zero(n: usize, window: (i64, i64), form: Form) -> Self {
        LaurentMatrix { entries: vec![vec![LaurentPoly::default(); n]; n], window, form }
    }

    /// Default truncation window `[-1, 8m]`, wide enough to show the simple pole.
    pub fn default_window(m: u32) -> (i64, i64) {
        (-1, 8 * m as i64)
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        if self.entries.iter().any(|r| r.len() != n) {
            return Err(Error::ShapeMismatch("Laurent matrix must be square".into()));
        }
        if self.window.0 > self.window.1 {
            return Err(Error::InvalidInput("empty truncation window".into()));
        }
        for (i, row) in self.entries.iter().enumerate() {
            for (j, p) in row.iter().enumerate() {
                let out = p.min_deg().is_some_and(|d| d < self.window.0) || p.max_deg().is_some_and(|d| d > self.window.1);
                if out {
                    return Err(Error::InvalidInput(format!("entry ({i}, {j}) leaves the window {:?}", self.window)));
                }
            }
        }
        Ok(())
    }

    /// Same field written against the other differential.
    pub fn with_form(&self, form: Form) -> Self {
        let shift = match (self.form, form) {
            (Form::Plain, Form::Log) => 1,
            (Form::Log, Form::Plain) => -1,
            _ => 0,
        };
        let entries = self
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|p| LaurentPoly(p.0.iter().map(|(&d, c)| (d + shift, c.clone())).collect()))
                    .collect()
            })
            .collect();
        LaurentMatrix { entries, window: (self.window.0 + shift, self.window.1 + shift), form }
    }
}

/// Orbifold chart of order `m` with the exponents `k_i` of the adapted frame.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalChart {
    pub m: u32,
    pub exponents: Vec<u32>,
}

impl LocalChart {
    pub fn new(m: u32, exponents: Vec<u32>) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidInput("chart order must be positive".into()));
        }
        if exponents.windows(2).any(|p| p[0] > p[1]) || exponents.iter().any(|&k| k > m) {
            return Err(Error::InvalidInput("exponents must be nondecreasing in [0, m]".into()));
        }
        Ok(LocalChart { m, exponents })
    }

    pub fn weights(&self) -> Vec<Rational> {
        self.exponents.iter().map(|&k| Rational::new(k as i64, self.m as i64)).collect()
    }
}

fn chart_from_weights(m: u32, weights: &[Rational]) -> Result<LocalChart> {
    let mut ks = Vec::with_capacity(weights.len());
    for w in weights {
        if !w.in_unit_interval() {
            return Err(Error::InvalidWeight(format!("weight {w} outside [0,1)")));
        }
        let k = (w * &Rational::integer(m as i64))
            .to_i64()
            .ok_or_else(|| Error::InvalidWeight(format!("weight {w} does not have denominator dividing {m}")))?;
        ks.push(k as u32);
    }
    LocalChart::new(m, ks)
}

/// Parabolic Higgs field `Σ c w^d dw` with weights `k_i/m` to the orbifold field in `dz/z`.
///
/// Entry `(i, j)` becomes `z^{k_i - k_j} φ̂_ij(z^m) dz/z` where `φ̂_ij(w) = m w ψ_ij(w)`; entries
/// with `k_i < k_j` must vanish.
pub fn par_to_orb_local(m: u32, weights: &[Rational], higgs: &LaurentMatrix) -> Result<(LocalChart, LaurentMatrix)> {
    let chart = chart_from_weights(m, weights)?;
    let h = higgs.with_form(Form::Plain);
    h.validate()?;
    if h.n() != chart.exponents.len() {
        return Err(Error::DimensionMismatch { expected: chart.exponents.len(), found: h.n() });
    }
    let ks = &chart.exponents;
    let mi = m as i64;
    let window = (mi * (h.window.0 + 1), mi * (h.window.1 + 1) + mi - 1);
    let mut out = LaurentMatrix::zero(h.n(), window, Form::Log);
    for (i, row) in h.entries.iter().enumerate() {
        for (j, p) in row.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            if ks[i] < ks[j] {
                return Err(Error::FiltrationViolation(format!(
                    "entry ({i}, {j}) maps weight {} into weight {}",
                    Rational::new(ks[j] as i64, mi),
                    Rational::new(ks[i] as i64, mi)
                )));
            }
            let shift = ks[i] as i64 - ks[j] as i64;
            for (d, c) in p.terms() {
                out.entries[i][j].add_term(shift + mi * (d + 1), c * &Rational::integer(mi));
            }
        }
    }
    Ok((chart, out))
}

/// Inverse of [`par_to_orb_local`]. The orbifold field must be equivariant for the chart.
pub fn orb_to_par_local(chart: &LocalChart, orb: &LaurentMatrix) -> Result<(Vec<Rational>, LaurentMatrix)> {
    let o = orb.with_form(Form::Log);
    o.validate()?;
    let n = chart.exponents.len();
    if o.n() != n {
        return Err(Error::DimensionMismatch { expected: n, found: o.n() });
    }
    if let Some(msg) = equivariance_violation(&o, chart) {
        return Err(Error::NotEquivariant(msg));
    }
    let weights = chart.weights();
    if let Some(w) = weights.iter().find(|w| !w.in_unit_interval()) {
        return Err(Error::InvalidWeight(format!("weight {w} outside [0,1)")));
    }
    let mi = chart.m as i64;
    let window = (o.window.0.div_euclid(mi) + if o.window.0.rem_euclid(mi) == 0 { 0 } else { 1 } - 1, o.window.1.div_euclid(mi) - 1);
    let mut out = LaurentMatrix::zero(n, window, Form::Plain);
    for (i, row) in o.entries.iter().enumerate() {
        for (j, p) in row.iter().enumerate() {
            let shift = chart.exponents[i] as i64 - chart.exponents[j] as i64;
            for (e, c) in p.terms() {
                let d = (e - shift) / mi - 1;
                out.entries[i][j].add_term(d, c / &Rational::integer(mi));
            }
        }
    }
    Ok((weights, out))
}

fn equivariance_violation(o: &LaurentMatrix, chart: &LocalChart) -> Option<String> {
    let mi = chart.m as i64;
    let ks = &chart.exponents;
    for (i, row) in o.entries.iter().enumerate() {
        for (j, p) in row.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            if ks[i] < ks[j] {
                return Some(format!("entry ({i}, {j}) must vanish since k_{i} < k_{j}"));
            }
            let shift = ks[i] as i64 - ks[j] as i64;
            if let Some((e, _)) = p.terms().find(|(e, _)| (e - shift).rem_euclid(mi) != 0) {
                return Some(format!("entry ({i}, {j}) has exponent {e}, not congruent to {shift} mod {mi}"));
            }
        }
    }
    None
}

/// True when entry `(i, j)` (read against `dz/z`) only involves exponents `≡ k_i - k_j (mod m)`
/// and entries with `k_i < k_j` vanish.
pub fn equivariance_check(orb: &LaurentMatrix, chart: &LocalChart) -> bool {
    orb.n() == chart.exponents.len() && equivariance_violation(&orb.with_form(Form::Log), chart).is_none()
}
