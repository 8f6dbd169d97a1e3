//! Dense matrices over the field with two elements.

use std::fmt;

use crate::error::{Error, Result};

/// Bit vector with entries in `{0, 1}`.
pub type Bits = Vec<u8>;

#[derive(Clone, PartialEq, Eq)]
pub struct Z2Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<u8>>,
}

impl Z2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Z2Matrix { rows, cols, data: vec![vec![0; cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = 1;
        }
        m
    }

    /// Builds a matrix from rows of equal length. Entries are reduced mod 2.
    pub fn from_rows(rows: Vec<Vec<u8>>, cols: usize) -> Result<Self> {
        for r in &rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: r.len() });
            }
        }
        let data: Vec<Vec<u8>> = rows.into_iter().map(|r| r.into_iter().map(|x| x & 1).collect()).collect();
        Ok(Z2Matrix { rows: data.len(), cols, data })
    }

    /// Parses rows written as strings of `0`/`1`, e.g. `["110", "011"]`.
    pub fn parse_rows(rows: &[&str]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut out = Vec::with_capacity(rows.len());
        for r in rows {
            let mut row = Vec::with_capacity(r.len());
            for c in r.chars() {
                match c {
                    '0' => row.push(0),
                    '1' => row.push(1),
                    _ => return Err(Error::InvalidInput(format!("not a bit: {c:?}"))),
                }
            }
            out.push(row);
        }
        Self::from_rows(out, cols)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u8) {
        self.data[r][c] = v & 1;
    }

    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c][r] = self.data[r][c];
            }
        }
        t
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hconcat(&self, other: &Z2Matrix) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: other.rows });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.iter().chain(b).copied().collect())
            .collect();
        Ok(Z2Matrix { rows: self.rows, cols: self.cols + other.cols, data })
    }

    pub fn mul_vec(&self, x: &[u8]) -> Result<Bits> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: x.len() });
        }
        Ok(self
            .data
            .iter()
            .map(|row| row.iter().zip(x).fold(0u8, |acc, (a, b)| acc ^ (a & b)))
            .collect())
    }

    /// Reduced row echelon form, returning the pivot columns.
    fn rref(&self) -> (Vec<Vec<u8>>, Vec<usize>) {
        let mut m = self.data.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| m[i][c] == 1) else { continue };
            m.swap(r, p);
            for i in 0..self.rows {
                if i != r && m[i][c] == 1 {
                    let (src, dst) = if i < r {
                        let (a, b) = m.split_at_mut(r);
                        (&b[0], &mut a[i])
                    } else {
                        let (a, b) = m.split_at_mut(i);
                        (&a[r], &mut b[0])
                    };
                    for (d, s) in dst.iter_mut().zip(src.iter()) {
                        *d ^= s;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the kernel, one vector per free column, in column order.
    pub fn kernel_basis(&self) -> Vec<Bits> {
        let (m, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0u8; self.cols];
                v[f] = 1;
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = m[r][f];
                }
                v
            })
            .collect()
    }

    /// All solutions of `self * x = b`, sorted lexicographically (index 0 most significant).
    ///
    /// The result has either zero or `2^(cols - rank)` elements.
    pub fn solution_set(&self, b: &[u8]) -> Result<Vec<Bits>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: b.len() });
        }
        let aug = self.hconcat(&Z2Matrix::from_rows(b.iter().map(|&x| vec![x & 1]).collect(), 1)?)?;
        let (m, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(Vec::new());
        }
        let mut particular = vec![0u8; self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            particular[p] = m[r][self.cols];
        }
        let basis = self.kernel_basis();
        if basis.len() >= usize::BITS as usize - 1 {
            return Err(Error::Overflow(format!("2^{} solutions", basis.len())));
        }
        let mut out = Vec::with_capacity(1usize << basis.len());
        for mask in 0usize..(1usize << basis.len()) {
            let mut v = particular.clone();
            for (i, k) in basis.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    for (a, b) in v.iter_mut().zip(k) {
                        *a ^= b;
                    }
                }
            }
            out.push(v);
        }
        out.sort();
        Ok(out)
    }
}

impl fmt::Debug for Z2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.data.iter().map(|r| r.iter().map(|b| if *b == 1 { '1' } else { '0' }).collect()).collect();
        write!(f, "Z2Matrix{rows:?}")
    }
}

/// Every bit vector of length `n`, in lexicographic order.
pub fn all_bit_vectors(n: usize) -> Vec<Bits> {
    (0u64..(1u64 << n))
        .map(|m| (0..n).map(|i| ((m >> (n - 1 - i)) & 1) as u8).collect())
        .collect()
}
