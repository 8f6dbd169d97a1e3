//! Compact Riemann surfaces with marked points and the divisor bookkeeping around `K(D)`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

fn default_order() -> u32 {
    2
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkedPoint {
    pub label: String,
    /// Isotropy order when the point is viewed as an orbifold point.
    #[serde(default = "default_order")]
    pub order: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSurface")]
pub struct MarkedSurface {
    pub genus: u32,
    pub points: Vec<MarkedPoint>,
}

#[derive(Deserialize)]
struct RawSurface {
    genus: u32,
    #[serde(default)]
    points: Vec<MarkedPoint>,
}

impl TryFrom<RawSurface> for MarkedSurface {
    type Error = Error;
    fn try_from(r: RawSurface) -> Result<Self> {
        MarkedSurface::new(r.genus, r.points)
    }
}

impl MarkedSurface {
    pub fn new(genus: u32, points: Vec<MarkedPoint>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for p in &points {
            if !seen.insert(p.label.as_str()) {
                return Err(Error::InvalidInput(format!("duplicate point label {:?}", p.label)));
            }
            if p.order == 0 {
                return Err(Error::InvalidInput(format!("point {:?} has order 0", p.label)));
            }
        }
        Ok(MarkedSurface { genus, points })
    }

    /// Genus `g` with `s` points labelled `x1..xs`, all of order 2.
    pub fn with_order_two(genus: u32, s: usize) -> Self {
        Self::with_orders(genus, &vec![2; s])
    }

    /// Genus `g` with one point per entry of `orders`, labelled `x1, x2, ...`.
    pub fn with_orders(genus: u32, orders: &[u32]) -> Self {
        let points = orders
            .iter()
            .enumerate()
            .map(|(i, &k)| MarkedPoint { label: format!("x{}", i + 1), order: k.max(1) })
            .collect();
        MarkedSurface { genus, points }
    }

    pub fn s(&self) -> usize {
        self.points.len()
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.points.iter().map(|p| p.label.as_str())
    }

    pub fn point(&self, label: &str) -> Option<&MarkedPoint> {
        self.points.iter().find(|p| p.label == label)
    }

    pub fn order_of(&self, label: &str) -> Result<u32> {
        self.point(label)
            .map(|p| p.order)
            .ok_or_else(|| Error::FlagMismatch(format!("no marked point {label:?}")))
    }

    /// `deg K(D) = 2g - 2 + s`.
    pub fn deg_kd(&self) -> i64 {
        2 * self.genus as i64 - 2 + self.s() as i64
    }

    pub fn deg_k(&self) -> i64 {
        2 * self.genus as i64 - 2
    }

    pub fn is_hyperbolic(&self) -> bool {
        self.deg_kd() > 0
    }

    pub fn require_hyperbolic(&self) -> Result<()> {
        if self.is_hyperbolic() {
            Ok(())
        } else {
            Err(Error::NotHyperbolic { g: self.genus, s: self.s() })
        }
    }

    /// `dim H^0(K^m (D)^(m-1)) = (2m+1)(g-1) + m s` for `m >= 1` on a hyperbolic surface.
    pub fn h0_twisted_power(&self, m: u32) -> Result<i64> {
        if m == 0 {
            return Err(Error::InvalidInput("twisted power requires m >= 1".into()));
        }
        self.require_hyperbolic()?;
        let (g, s, m) = (self.genus as i64, self.s() as i64, m as i64);
        Ok((2 * m + 1) * (g - 1) + m * s)
    }

    /// Number of points whose isotropy order is even.
    pub fn even_order_points(&self) -> usize {
        self.points.iter().filter(|p| p.order % 2 == 0).count()
    }

    pub fn all_order_two(&self) -> bool {
        self.points.iter().all(|p| p.order == 2)
    }
}
