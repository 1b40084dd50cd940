//! Exact rational linear algebra: reduced row echelon form and canonical
//! bases of spans of integer matrices.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

/// Arbitrary-precision rational, always reduced with positive denominator.
pub type Rational = num_rational::BigRational;

/// Square integer matrix, row-major.
pub type IntMatrix = Vec<Vec<i64>>;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("entry count {got} does not match {rows}x{cols}")]
    Shape { rows: usize, cols: usize, got: usize },
    #[error("matrix {index} is not {n}x{n}")]
    NotSquare { index: usize, n: usize },
    #[error("ambient dimensions differ: {0} vs {1}")]
    Ambient(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::Shape { rows, cols, got: entries.len() });
        }
        Ok(RatMatrix { rows, cols, entries })
    }

    /// Rows of integers; all rows must have length `cols`.
    pub fn from_int_rows(cols: usize, rows: &[Vec<i64>]) -> Result<Self, LinalgError> {
        let entries: Vec<Rational> = rows
            .iter()
            .flat_map(|r| r.iter().map(|&x| Rational::from_integer(BigInt::from(x))))
            .collect();
        RatMatrix::new(rows.len(), cols, entries)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, entries: (0..rows * cols).map(|_| Rational::zero()).collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    fn row_is_zero(&self, r: usize) -> bool {
        self.row(r).iter().all(Zero::is_zero)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.entries.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    /// Rank, i.e. number of nonzero rows after elimination.
    pub fn rank(&self) -> usize {
        let r = rref(self);
        (0..r.rows).filter(|&i| !r.row_is_zero(i)).count()
    }
}

/// Reduced row echelon form by Gauss-Jordan elimination. Zero rows end up
/// at the bottom; the shape is unchanged.
pub fn rref(m: &RatMatrix) -> RatMatrix {
    let mut m = m.clone();
    let cols = m.cols;
    let mut r = 0;
    for c in 0..cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
            continue;
        };
        m.swap_rows(r, p);
        let inv = m.get(r, c).recip();
        for k in c..cols {
            let v = &m.entries[r * cols + k] * &inv;
            m.entries[r * cols + k] = v;
        }
        for i in 0..m.rows {
            if i == r || m.get(i, c).is_zero() {
                continue;
            }
            let f = m.get(i, c).clone();
            for k in c..cols {
                let v = &m.entries[i * cols + k] - &f * &m.entries[r * cols + k];
                m.entries[i * cols + k] = v;
            }
        }
        r += 1;
    }
    m
}

/// Canonical basis of a span of `n x n` matrices flattened row-major into
/// vectors of length `n^2`. Equal spans give equal keys.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpanKey {
    ambient_dim: usize,
    basis: RatMatrix,
}

impl SpanKey {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn basis(&self) -> &RatMatrix {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    /// Stable textual encoding: `dim:rows;` then rows of `num/den` joined by
    /// commas, rows separated by `;`.
    pub fn encode(&self) -> String {
        let mut s = String::new();
        let _ = write!(s, "{}:{}", self.ambient_dim, self.basis.rows);
        for r in 0..self.basis.rows {
            s.push(';');
            for (k, x) in self.basis.row(r).iter().enumerate() {
                if k > 0 {
                    s.push(',');
                }
                let _ = write!(s, "{}/{}", x.numer(), x.denom());
            }
        }
        s
    }

    /// Whether `v` (length `ambient_dim`) lies in the span.
    pub fn contains(&self, v: &[Rational]) -> bool {
        let mut rest: Vec<Rational> = v.to_vec();
        for r in 0..self.basis.rows {
            let row = self.basis.row(r);
            let pivot = row.iter().position(|x| !x.is_zero()).expect("nonzero row");
            let f = rest[pivot].clone();
            if f.is_zero() {
                continue;
            }
            for (x, b) in rest.iter_mut().zip(row) {
                *x -= &f * b;
            }
        }
        rest.iter().all(Zero::is_zero)
    }
}

impl fmt::Display for SpanKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encode())
    }
}

/// Key of the span of the given `n x n` matrices.
pub fn span_key(mats: &[IntMatrix]) -> Result<SpanKey, LinalgError> {
    let n = mats.first().map_or(0, |m| m.len());
    for (index, m) in mats.iter().enumerate() {
        if m.len() != n || m.iter().any(|r| r.len() != n) {
            return Err(LinalgError::NotSquare { index, n });
        }
    }
    let flat: Vec<Vec<i64>> = mats.iter().map(|m| m.concat()).collect();
    let r = rref(&RatMatrix::from_int_rows(n * n, &flat)?);
    let keep = (0..r.rows).filter(|&i| !r.row_is_zero(i)).count();
    let entries = r.entries[..keep * r.cols].to_vec();
    Ok(SpanKey { ambient_dim: n * n, basis: RatMatrix { rows: keep, cols: n * n, entries } })
}

pub fn row_space_equal(a: &SpanKey, b: &SpanKey) -> Result<bool, LinalgError> {
    if a.ambient_dim != b.ambient_dim {
        return Err(LinalgError::Ambient(a.ambient_dim, b.ambient_dim));
    }
    Ok(a == b)
}

/// `Rational` from a plain integer.
pub fn rat(x: i64) -> Rational {
    Rational::from_integer(BigInt::from(x))
}
