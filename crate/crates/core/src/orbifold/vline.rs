use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{all_bit_vectors, pow2, Rational};
use crate::parbun::ParabolicLineBundle;
use crate::surface::MarkedSurface;

/// Line V-bundle in Seifert form: the degree of its desingularisation and an isotropy residue
/// `β_x mod k_x` at each orbifold point. Absent labels carry residue zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VLineBundle {
    pub desing: i64,
    #[serde(default)]
    pub isotropy: BTreeMap<String, u32>,
}

impl VLineBundle {
    pub fn new(desing: i64, isotropy: BTreeMap<String, u32>) -> Self {
        VLineBundle { desing, isotropy }
    }

    pub fn pullback(desing: i64) -> Self {
        VLineBundle { desing, isotropy: BTreeMap::new() }
    }

    pub fn residue(&self, label: &str) -> u32 {
        self.isotropy.get(label).copied().unwrap_or(0)
    }

    pub fn check(&self, surf: &MarkedSurface) -> Result<()> {
        for (x, &b) in &self.isotropy {
            let k = surf.order_of(x)?;
            if b >= k {
                return Err(Error::InvalidInput(format!("residue {b} at {x:?} is not below the order {k}")));
            }
        }
        Ok(())
    }
}

/// `desing + Σ β_x / k_x`.
pub fn vline_degree(l: &VLineBundle, surf: &MarkedSurface) -> Result<Rational> {
    l.check(surf)?;
    let mut d = Rational::integer(l.desing);
    for (x, &b) in &l.isotropy {
        d += Rational::new(b as i64, surf.order_of(x)? as i64);
    }
    Ok(d)
}

/// Residues add modulo the order; every wrap raises the desingularised degree by one.
pub fn vline_tensor(a: &VLineBundle, b: &VLineBundle, surf: &MarkedSurface) -> Result<VLineBundle> {
    a.check(surf)?;
    b.check(surf)?;
    let mut desing = a.desing + b.desing;
    let mut isotropy = BTreeMap::new();
    for p in &surf.points {
        let t = a.residue(&p.label) + b.residue(&p.label);
        if t >= p.order {
            desing += 1;
        }
        let r = t % p.order;
        if r != 0 || a.isotropy.contains_key(&p.label) || b.isotropy.contains_key(&p.label) {
            isotropy.insert(p.label.clone(), r);
        }
    }
    Ok(VLineBundle { desing, isotropy })
}

/// Parabolic line bundle with the same degree: degree `desing`, weight `β_x / k_x`.
pub fn vline_to_parabolic(l: &VLineBundle, surf: &MarkedSurface) -> Result<ParabolicLineBundle> {
    l.check(surf)?;
    let mut weights = BTreeMap::new();
    for p in &surf.points {
        weights.insert(p.label.clone(), Rational::new(l.residue(&p.label) as i64, p.order as i64));
    }
    ParabolicLineBundle::new(l.desing, weights)
}

/// Inverse of [`vline_to_parabolic`]; weights must have denominators dividing the orders.
pub fn parabolic_to_vline(l: &ParabolicLineBundle, surf: &MarkedSurface) -> Result<VLineBundle> {
    l.check(surf)?;
    let mut isotropy = BTreeMap::new();
    for (x, w) in &l.weights {
        let k = surf.order_of(x)?;
        let scaled = w * &Rational::integer(k as i64);
        let Some(b) = scaled.to_i64() else {
            return Err(Error::InvalidWeight(format!("weight {w} at {x:?} is not a multiple of 1/{k}")));
        };
        isotropy.insert(x.clone(), b as u32);
    }
    Ok(VLineBundle { desing: l.degree, isotropy })
}

/// Holomorphic Euler characteristic `1 - g + desing`. Always an integer.
pub fn kawasaki_euler(l: &VLineBundle, surf: &MarkedSurface) -> Result<i64> {
    let deg = vline_degree(l, surf)?;
    let mut correction = Rational::zero();
    for (x, &b) in &l.isotropy {
        correction += Rational::new(b as i64, surf.order_of(x)? as i64);
    }
    let chi = Rational::integer(1 - surf.genus as i64) + deg - correction;
    Ok(chi.to_i64().expect("isotropy corrections cancel the fractional part"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareRoots {
    /// Seifert types `(e, ρ)` with `(e, ρ)² = l`, ordered by `ρ`.
    pub types: Vec<VLineBundle>,
    /// Each type comes with this many holomorphic choices (2-torsion of the Jacobian).
    pub jacobian_multiplicity: u128,
    pub total: u128,
}

/// Square roots of a line V-bundle on a surface whose orbifold points all have order 2.
///
/// A root has residues `ρ_x ∈ {0, 1}` and desingularised degree `e` with `2e + Σ ρ_x` equal to
/// `l.desing`. Roots exist only when `l` has trivial isotropy.
pub fn square_root_types(l: &VLineBundle, surf: &MarkedSurface) -> Result<SquareRoots> {
    if !surf.all_order_two() {
        return Err(Error::Unsupported("square roots are computed for order-2 points only".into()));
    }
    l.check(surf)?;
    let jac = pow2(2 * surf.genus as i64)?;
    if l.isotropy.values().any(|&b| b != 0) {
        return Ok(SquareRoots { types: Vec::new(), jacobian_multiplicity: jac, total: 0 });
    }
    if surf.s() == 0 && l.desing % 2 != 0 {
        return Err(Error::NoSquareRoot(format!("degree {} is odd and there are no orbifold points", l.desing)));
    }
    let mut types = Vec::new();
    for rho in all_bit_vectors(surf.s()) {
        let odd: i64 = rho.iter().map(|&b| b as i64).sum();
        if (l.desing - odd) % 2 != 0 {
            continue;
        }
        let isotropy = surf.points.iter().zip(&rho).map(|(p, &b)| (p.label.clone(), b as u32)).collect();
        types.push(VLineBundle { desing: (l.desing - odd) / 2, isotropy });
    }
    let total = (types.len() as u128)
        .checked_mul(jac)
        .ok_or_else(|| Error::Overflow("square-root count".into()))?;
    Ok(SquareRoots { types, jacobian_multiplicity: jac, total })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Even,
    Odd,
}

/// Parity of the number of points with weight `1/2`. Every weight must be `0` or `1/2`.
pub fn parity(alpha: &BTreeMap<String, Rational>) -> Result<Parity> {
    let half = Rational::half();
    let mut count = 0;
    for (x, w) in alpha {
        if *w == half {
            count += 1;
        } else if !w.is_zero() {
            return Err(Error::InvalidWeight(format!("weight {w} at {x:?} is neither 0 nor 1/2")));
        }
    }
    Ok(if count % 2 == 0 { Parity::Even } else { Parity::Odd })
}
