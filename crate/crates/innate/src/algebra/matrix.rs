use super::field::{Elem, FiniteField};
use super::AlgebraError;

/// A square matrix over a finite field, row-major. Vectors are rows and act on the left.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    dim: usize,
    entries: Vec<Elem>,
}

impl Matrix {
    pub fn identity(dim: usize) -> Self {
        Self::diagonal(&vec![1; dim])
    }

    pub fn diagonal(diag: &[Elem]) -> Self {
        let dim = diag.len();
        let mut entries = vec![0; dim * dim];
        for (i, &x) in diag.iter().enumerate() {
            entries[i * dim + i] = x;
        }
        Matrix { dim, entries }
    }

    pub fn from_rows(rows: &[Vec<Elem>]) -> Result<Self, AlgebraError> {
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(AlgebraError::DimensionMismatch);
        }
        Ok(Matrix {
            dim,
            entries: rows.concat(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Elem) {
        self.entries[i * self.dim + j] = x;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Elem]> {
        self.entries.chunks(self.dim)
    }

    pub fn mul(&self, f: &FiniteField, other: &Matrix) -> Matrix {
        let n = self.dim;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let e = &mut entries[i * n + j];
                    *e = f.add(*e, f.mul(a, other.get(k, j)));
                }
            }
        }
        Matrix { dim: n, entries }
    }

    pub fn transpose(&self) -> Matrix {
        let n = self.dim;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.get(i, j);
            }
        }
        Matrix { dim: n, entries }
    }

    /// Entrywise `x -> x^(p^i)`.
    pub fn frobenius(&self, f: &FiniteField, i: u32) -> Matrix {
        Matrix {
            dim: self.dim,
            entries: self.entries.iter().map(|&x| f.frobenius(x, i)).collect(),
        }
    }

    /// Entrywise power map `x -> x^e`.
    pub fn entry_power(&self, f: &FiniteField, e: u64) -> Matrix {
        Matrix {
            dim: self.dim,
            entries: self.entries.iter().map(|&x| f.pow(x, e)).collect(),
        }
    }

    pub fn scale(&self, f: &FiniteField, c: Elem) -> Matrix {
        Matrix {
            dim: self.dim,
            entries: self.entries.iter().map(|&x| f.mul(x, c)).collect(),
        }
    }

    /// The row vector `v * self`.
    pub fn apply(&self, f: &FiniteField, v: &[Elem]) -> Vec<Elem> {
        let n = self.dim;
        let mut out = vec![0; n];
        for (i, &vi) in v.iter().enumerate() {
            if vi == 0 {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = f.add(*o, f.mul(vi, self.get(i, j)));
            }
        }
        out
    }

    /// Row echelon form, returning the rank and the determinant (zero when singular).
    fn eliminate(&self, f: &FiniteField) -> (usize, Elem) {
        let n = self.dim;
        let mut m = self.entries.clone();
        let mut det = 1;
        let mut rank = 0;
        for col in 0..n {
            let Some(piv) = (rank..n).find(|&r| m[r * n + col] != 0) else {
                det = 0;
                continue;
            };
            if piv != rank {
                for j in 0..n {
                    m.swap(piv * n + j, rank * n + j);
                }
                det = f.neg(det);
            }
            let pv = m[rank * n + col];
            det = f.mul(det, pv);
            let pinv = f.inv(pv).expect("pivot nonzero");
            for r in rank + 1..n {
                let c = f.mul(m[r * n + col], pinv);
                if c == 0 {
                    continue;
                }
                for j in col..n {
                    m[r * n + j] = f.sub(m[r * n + j], f.mul(c, m[rank * n + j]));
                }
            }
            rank += 1;
        }
        (rank, det)
    }

    pub fn determinant(&self, f: &FiniteField) -> Elem {
        self.eliminate(f).1
    }

    pub fn rank(&self, f: &FiniteField) -> usize {
        self.eliminate(f).0
    }

    pub fn inverse(&self, f: &FiniteField) -> Result<Matrix, AlgebraError> {
        let n = self.dim;
        let mut m = self.entries.clone();
        let mut inv = Matrix::identity(n).entries;
        for col in 0..n {
            let piv = (col..n).find(|&r| m[r * n + col] != 0).ok_or(AlgebraError::Singular)?;
            for j in 0..n {
                m.swap(piv * n + j, col * n + j);
                inv.swap(piv * n + j, col * n + j);
            }
            let pinv = f.inv(m[col * n + col]).expect("pivot nonzero");
            for j in 0..n {
                m[col * n + j] = f.mul(m[col * n + j], pinv);
                inv[col * n + j] = f.mul(inv[col * n + j], pinv);
            }
            for r in 0..n {
                let c = m[r * n + col];
                if r == col || c == 0 {
                    continue;
                }
                for j in 0..n {
                    m[r * n + j] = f.sub(m[r * n + j], f.mul(c, m[col * n + j]));
                    inv[r * n + j] = f.sub(inv[r * n + j], f.mul(c, inv[col * n + j]));
                }
            }
        }
        Ok(Matrix { dim: n, entries: inv })
    }

    pub fn sub(&self, f: &FiniteField, other: &Matrix) -> Matrix {
        Matrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&other.entries).map(|(&x, &y)| f.sub(x, y)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.dim)
    }

    /// Entries as discrete logs, `-1` for zero.
    pub fn dlog_rows(&self, f: &FiniteField) -> Vec<Vec<i64>> {
        self.rows()
            .map(|r| r.iter().map(|&x| f.dlog(x).map_or(-1, i64::from)).collect())
            .collect()
    }
}

/// Scales a nonzero vector so its first nonzero entry is 1; returns the scalar removed.
pub fn normalize(f: &FiniteField, v: &mut [Elem]) -> Option<Elem> {
    let lead = *v.iter().find(|&&x| x != 0)?;
    let inv = f.inv(lead)?;
    for x in v.iter_mut() {
        *x = f.mul(*x, inv);
    }
    Some(lead)
}
