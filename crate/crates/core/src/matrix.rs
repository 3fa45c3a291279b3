//! Square matrices over `Z[t, t^-1]`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<LaurentPoly>>", into = "Vec<Vec<LaurentPoly>>")]
pub struct LaurentMatrix {
    n: usize,
    entries: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn zero(n: usize) -> Self {
        LaurentMatrix { n, entries: vec![LaurentPoly::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.set(i, i, LaurentPoly::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::NotSquare { rows: n, cols: bad.len() });
        }
        Ok(LaurentMatrix { n, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> LaurentPoly) -> Self {
        LaurentMatrix {
            n,
            entries: (0..n * n).map(|k| f(k / n, k % n)).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: LaurentPoly) {
        self.entries[i * self.n + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<LaurentPoly>> {
        self.entries.chunks(self.n.max(1)).take(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    /// Conjugate transpose `A★`, with conjugation `t -> t^-1`.
    pub fn star(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).conjugate())
    }

    /// Square submatrix on the given row and column ranges.
    pub fn block(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        assert_eq!(rows.len(), cols.len());
        Self::from_fn(rows.len(), |i, j| self.get(rows.start + i, cols.start + j).clone())
    }

    /// `[[a, b], [c, d]]` from four equally sized square blocks.
    pub fn from_blocks(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        let k = a.n;
        assert!(b.n == k && c.n == k && d.n == k);
        Self::from_fn(2 * k, |i, j| {
            let blk = match (i < k, j < k) {
                (true, true) => a,
                (true, false) => b,
                (false, true) => c,
                (false, false) => d,
            };
            blk.get(i % k, j % k).clone()
        })
    }

    /// Determinant by fraction-free (Bareiss) elimination; every division
    /// is exact in the Laurent ring.
    pub fn det(&self) -> LaurentPoly {
        let n = self.n;
        if n == 0 {
            return LaurentPoly::one();
        }
        let mut a = self.entries.clone();
        let idx = |i: usize, j: usize| i * n + j;
        let mut prev = LaurentPoly::one();
        let mut negate = false;
        for k in 0..n - 1 {
            if a[idx(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[idx(i, k)].is_zero()) else {
                    return LaurentPoly::zero();
                };
                for j in 0..n {
                    a.swap(idx(k, j), idx(p, j));
                }
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[idx(i, j)] * &a[idx(k, k)]) - &(&a[idx(i, k)] * &a[idx(k, j)]);
                    a[idx(i, j)] = num.exact_div(&prev).expect("Bareiss quotients are exact");
                }
            }
            prev = a[idx(k, k)].clone();
        }
        let d = a[idx(n - 1, n - 1)].clone();
        if negate {
            -d
        } else {
            d
        }
    }
}

/// Determinant of a square Laurent matrix.
pub fn laurent_det(m: &LaurentMatrix) -> LaurentPoly {
    m.det()
}

impl TryFrom<Vec<Vec<LaurentPoly>>> for LaurentMatrix {
    type Error = Error;

    fn try_from(rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        Self::from_rows(rows)
    }
}

impl From<LaurentMatrix> for Vec<Vec<LaurentPoly>> {
    fn from(m: LaurentMatrix) -> Self {
        m.rows()
    }
}

impl fmt::Display for LaurentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        let width = cells.iter().map(|c| c.chars().count()).max().unwrap_or(1);
        for i in 0..self.n {
            f.write_str("[ ")?;
            for j in 0..self.n {
                write!(f, "{:>width$}", cells[i * self.n + j])?;
                if j + 1 < self.n {
                    f.write_str("  ")?;
                }
            }
            f.write_str(" ]")?;
            if i + 1 < self.n {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}
