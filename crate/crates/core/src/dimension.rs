//! Expected dimensions of moduli spaces and of Teichmüller components.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::surface::MarkedSurface;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LieGroupData {
    pub name: String,
    /// Real dimension; for complex groups twice the complex dimension.
    pub real_dimension: i64,
    pub rank: u32,
    pub exponents: Vec<u32>,
    pub is_split: bool,
    pub is_complex: bool,
    pub is_hermitian_tube: bool,
}

impl LieGroupData {
    pub fn complex_dimension(&self) -> Result<i64> {
        if !self.is_complex {
            return Err(Error::IncompatibleMode(format!("{} is not a complex group", self.name)));
        }
        Ok(self.real_dimension / 2)
    }

    /// `dim g^C = l + 2 Σ m_i`.
    pub fn check_exponents(&self) -> bool {
        let lie_dim = self.rank as i64 + 2 * self.exponents.iter().map(|&m| m as i64).sum::<i64>();
        let expected = if self.is_complex { self.real_dimension / 2 } else { self.real_dimension };
        self.exponents.len() == self.rank as usize && lie_dim == expected
    }
}

fn exps_odd(n: u32) -> Vec<u32> {
    (0..n).map(|i| 2 * i + 1).collect()
}

fn exps_sl(n: u32) -> Vec<u32> {
    (1..n).collect()
}

fn exps_so_even(n: u32) -> Vec<u32> {
    let mut e: Vec<u32> = (0..n - 1).map(|i| 2 * i + 1).collect();
    e.push(n - 1);
    e
}

#[derive(Debug, Clone, Copy)]
enum Family {
    Sl,
    Sp,
    SoOdd,
    SoEven,
}

fn entry(family: Family, param: u32, complex: bool) -> Result<LieGroupData> {
    let (name, dim, rank, exponents) = match family {
        Family::Sl if param >= 2 => {
            (if complex { format!("SL({param},C)") } else { format!("SL({param},R)") }, param * param - 1, param - 1, exps_sl(param))
        }
        Family::Sp if param >= 1 => (
            if complex { format!("Sp({},C)", 2 * param) } else { format!("Sp({},R)", 2 * param) },
            param * (2 * param + 1),
            param,
            exps_odd(param),
        ),
        Family::SoOdd if param >= 1 => (
            if complex { format!("SO({},C)", 2 * param + 1) } else { format!("SO({},{})", param + 1, param) },
            param * (2 * param + 1),
            param,
            exps_odd(param),
        ),
        Family::SoEven if param >= 3 => (
            if complex { format!("SO({},C)", 2 * param) } else { format!("SO({param},{param})") },
            param * (2 * param - 1),
            param,
            exps_so_even(param),
        ),
        _ => return Err(Error::UnknownGroup(format!("parameter {param} out of range"))),
    };
    let tube = !complex && matches!((family, param), (Family::Sp, _) | (Family::Sl, 2) | (Family::SoOdd, 2));
    Ok(LieGroupData {
        name,
        real_dimension: if complex { 2 * dim as i64 } else { dim as i64 },
        rank,
        exponents,
        is_split: !complex,
        is_complex: complex,
        is_hermitian_tube: tube,
    })
}

fn num(s: &str, raw: &str) -> Result<u32> {
    s.parse().map_err(|_| Error::UnknownGroup(format!("cannot read {raw:?}")))
}

/// Look up `SL(n,R)`, `Sp(2n,R)`, `SO(n+1,n)`, `SO(n,n)` and the complex groups `SL(n,C)`,
/// `Sp(2n,C)`, `SO(m,C)`. Spaces and case are ignored.
pub fn lie_catalog(name: &str) -> Result<LieGroupData> {
    let s: String = name.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_ascii_uppercase();
    let inner = |prefix: &str| s.strip_prefix(prefix).and_then(|r| r.strip_suffix(')')).map(|r| r.split(',').collect::<Vec<_>>());
    let unknown = || Error::UnknownGroup(format!("not in the catalog: {name:?}"));
    if let Some(args) = inner("SL(") {
        let [n, field] = args[..] else { return Err(unknown()) };
        if !(field == "R" || field == "C") {
            return Err(unknown());
        }
        return entry(Family::Sl, num(n, name)?, field == "C");
    }
    if let Some(args) = inner("SP(") {
        let [two_n, field] = args[..] else { return Err(unknown()) };
        let two_n = num(two_n, name)?;
        if two_n % 2 != 0 || !(field == "R" || field == "C") {
            return Err(unknown());
        }
        return entry(Family::Sp, two_n / 2, field == "C");
    }
    if let Some(args) = inner("SO(") {
        let [a, b] = args[..] else { return Err(unknown()) };
        if b == "C" {
            let m = num(a, name)?;
            return if m % 2 == 1 { entry(Family::SoOdd, m / 2, true) } else { entry(Family::SoEven, m / 2, true) };
        }
        let (a, b) = (num(a, name)?, num(b, name)?);
        return if a == b + 1 {
            entry(Family::SoOdd, b, false)
        } else if a == b {
            entry(Family::SoEven, a, false)
        } else {
            Err(unknown())
        };
    }
    Err(unknown())
}

/// Every entry with parameter up to `max`, used for exhaustive checks.
pub fn catalog_entries(max: u32) -> Vec<LieGroupData> {
    let mut out = Vec::new();
    for complex in [false, true] {
        for p in 1..=max {
            for fam in [Family::Sl, Family::Sp, Family::SoOdd, Family::SoEven] {
                if let Ok(e) = entry(fam, p, complex) {
                    out.push(e);
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summand {
    pub label: String,
    pub complex_dimension: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimReport {
    pub formula: String,
    pub complex_dimension: Option<i64>,
    pub real_dimension: Option<i64>,
    pub summands: Vec<Summand>,
    /// Real dimension with the `s`-term read as `2s · rk E(m^C)`, when a rank was supplied.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alternative_real_dimension: Option<i64>,
    pub notes: Vec<String>,
}

fn hyperbolic(g: u32, s: usize) -> Result<MarkedSurface> {
    let surf = MarkedSurface::with_order_two(g, s);
    surf.require_hyperbolic()?;
    Ok(surf)
}

/// `(2g-2+s) n² + 1`, parabolic `GL(n,C)`-Higgs bundles.
pub fn dim_parabolic_gl(n: u32, g: u32, s: usize) -> Result<i64> {
    let surf = hyperbolic(g, s)?;
    let n = n as i64;
    Ok(surf.deg_kd() * n * n + 1)
}

/// `2(g-1)n² + 2 + 2Σ f_x` with `f_x = (n² - Σ k_i(x)²)/2` the flag-variety dimension.
pub fn dim_strongly_parabolic_gl(n: u32, g: u32, s: usize, mults: &[Vec<u32>]) -> Result<i64> {
    hyperbolic(g, s)?;
    if mults.len() != s {
        return Err(Error::DimensionMismatch { expected: s, found: mults.len() });
    }
    let n2 = (n as i64) * (n as i64);
    let mut twice_f = 0;
    for (i, k) in mults.iter().enumerate() {
        if k.iter().any(|&x| x == 0) || k.iter().sum::<u32>() != n {
            return Err(Error::InvalidFlag(format!("multiplicities {k:?} at point {i} do not partition {n}")));
        }
        twice_f += n2 - k.iter().map(|&x| (x as i64) * (x as i64)).sum::<i64>();
    }
    Ok(2 * (g as i64 - 1) * n2 + 2 + twice_f)
}

pub fn full_flags(n: u32, s: usize) -> Vec<Vec<u32>> {
    vec![vec![1; n as usize]; s]
}

/// `2(g-1) dim_C G + s dim_C G` for a complex group.
pub fn dim_complex_group(data: &LieGroupData, g: u32, s: usize) -> Result<DimReport> {
    hyperbolic(g, s)?;
    let d = data.complex_dimension()?;
    let c = 2 * (g as i64 - 1) * d + s as i64 * d;
    Ok(DimReport {
        formula: "2(g-1)dim_C G + s dim_C G".into(),
        complex_dimension: Some(c),
        real_dimension: Some(2 * c),
        summands: Vec::new(),
        alternative_real_dimension: None,
        notes: Vec::new(),
    })
}

/// Real dimension of the Teichmüller component of a split group: the Riemann–Roch total
/// `2 Σ h^0(K^{m_i+1} ξ^{m_i})`, which equals `2(g-1) dim G + 2s Σ m_i`.
pub fn teichmuller_dimension(data: &LieGroupData, g: u32, s: usize, rk_e_m: Option<i64>) -> Result<DimReport> {
    if !data.is_split {
        return Err(Error::NotSplit(format!("{} is not a split real form", data.name)));
    }
    let surf = hyperbolic(g, s)?;
    let mut summands = Vec::new();
    for &m in &data.exponents {
        summands.push(Summand { label: format!("m = {m}"), complex_dimension: surf.h0_twisted_power(m)? });
    }
    let complex: i64 = summands.iter().map(|x| x.complex_dimension).sum();
    let gm1 = g as i64 - 1;
    let sum_m: i64 = data.exponents.iter().map(|&m| m as i64).sum();
    let closed = 2 * gm1 * data.real_dimension + 2 * s as i64 * sum_m;
    let mut notes = Vec::new();
    if closed != 2 * complex {
        notes.push(format!("Riemann–Roch total {} differs from the closed form {closed}", 2 * complex));
    }
    let alternative = rk_e_m.map(|r| 2 * gm1 * data.real_dimension + 2 * s as i64 * r);
    if alternative.is_some_and(|a| a != 2 * complex) {
        notes.push("the rk E(m^C) reading of the s-term gives a different value".into());
    }
    Ok(DimReport {
        formula: "2(g-1)dim_R G + 2s Σ m_i".into(),
        complex_dimension: Some(complex),
        real_dimension: Some(2 * complex),
        summands,
        alternative_real_dimension: alternative,
        notes,
    })
}

/// `2(g-1)(k²-1) + s(k²-k)`.
pub fn sl_k_teichmuller_formula(k: u32, g: u32, s: usize) -> Result<i64> {
    hyperbolic(g, s)?;
    let k = k as i64;
    Ok(2 * (g as i64 - 1) * (k * k - 1) + s as i64 * (k * k - k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_examples() {
        let sp4 = lie_catalog("Sp(4,R)").unwrap();
        assert_eq!((sp4.real_dimension, sp4.rank, sp4.exponents.clone()), (10, 2, vec![1, 3]));
        let so33 = lie_catalog("SO(3,3)").unwrap();
        assert_eq!((so33.real_dimension, so33.exponents.clone()), (15, vec![1, 3, 2]));
        assert_eq!(lie_catalog("sl(2, r)").unwrap().exponents, vec![1]);
        assert_eq!(lie_catalog("SO(5,C)").unwrap().complex_dimension().unwrap(), 10);
        assert!(lie_catalog("SO(4,2)").is_err());
        assert!(lie_catalog("G2").is_err());
        assert!(catalog_entries(6).iter().all(LieGroupData::check_exponents));
    }

    #[test]
    fn gl_formulas() {
        assert_eq!(dim_parabolic_gl(2, 2, 1).unwrap(), 13);
        assert_eq!(dim_parabolic_gl(1, 2, 0).unwrap(), 3);
        assert_eq!(dim_parabolic_gl(3, 1, 2).unwrap(), 19);
        assert_eq!(dim_strongly_parabolic_gl(2, 2, 1, &full_flags(2, 1)).unwrap(), 12);
        assert_eq!(dim_strongly_parabolic_gl(3, 2, 2, &full_flags(3, 2)).unwrap(), 32);
        assert_eq!(dim_strongly_parabolic_gl(2, 2, 1, &[vec![2]]).unwrap(), 2 * 4 + 2);
        assert!(dim_strongly_parabolic_gl(2, 2, 1, &[vec![1]]).is_err());
    }

    #[test]
    fn complex_and_teichmuller() {
        let sl2c = lie_catalog("SL(2,C)").unwrap();
        assert_eq!(dim_complex_group(&sl2c, 2, 1).unwrap().complex_dimension, Some(9));
        assert_eq!(dim_complex_group(&sl2c, 1, 1).unwrap().complex_dimension, Some(3));
        let sl2 = lie_catalog("SL(2,R)").unwrap();
        let r = teichmuller_dimension(&sl2, 2, 1, Some(2)).unwrap();
        assert_eq!((r.real_dimension, r.summands[0].complex_dimension), (Some(8), 4));
        assert_eq!(r.alternative_real_dimension, Some(10));
        let sp6 = lie_catalog("Sp(6,R)").unwrap();
        assert_eq!(teichmuller_dimension(&sp6, 2, 0, None).unwrap().real_dimension, Some(42));
        assert!(teichmuller_dimension(&sl2c, 2, 1, None).is_err());
        assert_eq!(sl_k_teichmuller_formula(2, 2, 1).unwrap(), 8);
    }
}
