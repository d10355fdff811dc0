use std::fmt;

use num_traits::{One, Zero};

use super::{int, rref, zero_vector, Scalar, Subspace, Vector};
use crate::error::{Error, Result};

/// Dense rational matrix acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearMap {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl LinearMap {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        LinearMap {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    /// Diagonal matrix with the given entries.
    pub fn diagonal(diag: &[Scalar]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        m
    }

    /// Builds a matrix from rows; `cols` is needed only when `rows` is empty.
    pub fn from_rows(rows: Vec<Vector>, cols: usize) -> Result<Self> {
        let n = rows.len();
        let cols = rows.first().map_or(cols, Vec::len);
        let mut entries = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            entries.extend(r);
        }
        Ok(LinearMap {
            rows: n,
            cols,
            entries,
        })
    }

    /// Convenience constructor for integer matrices. Panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect(),
            cols,
        )
        .expect("ragged integer matrix")
    }

    /// Matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns(columns: &[Vector], rows: usize) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    found: c.len(),
                });
            }
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        self.entries[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "vector length does not match matrix");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| !a.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn try_apply(&self, v: &[Scalar]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok(self.apply(v))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.entries[idx] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Result<LinearMap> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut out = Self::identity(self.rows);
        for _ in 0..e {
            out = self.compose(&out)?;
        }
        Ok(out)
    }

    pub fn add(&self, other: &LinearMap) -> Result<LinearMap> {
        self.check_same_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(LinearMap { entries, ..*self })
    }

    pub fn sub(&self, other: &LinearMap) -> Result<LinearMap> {
        self.check_same_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        Ok(LinearMap { entries, ..*self })
    }

    pub fn scale(&self, c: &Scalar) -> LinearMap {
        LinearMap {
            entries: self.entries.iter().map(|a| a * c).collect(),
            ..*self
        }
    }

    pub fn transpose(&self) -> LinearMap {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Kronecker product; index `(i, j)` of `a ⊗ b` is `i * b.rows + j`.
    pub fn kronecker(&self, other: &LinearMap) -> LinearMap {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.get(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..other.rows {
                    for j2 in 0..other.cols {
                        let b = other.get(i2, j2);
                        if !b.is_zero() {
                            out.set(i1 * other.rows + i2, j1 * other.cols + j2, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        rref(self.to_rows(), self.cols).0.len()
    }

    pub fn inverse(&self) -> Result<LinearMap> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let augmented = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend(zero_vector(n));
                r[n + i] = Scalar::one();
                r
            })
            .collect();
        let (reduced, pivots) = rref(augmented, 2 * n);
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular);
        }
        LinearMap::from_rows(reduced.into_iter().map(|r| r[n..].to_vec()).collect(), n)
    }

    /// `ker f`.
    pub fn kernel(&self) -> Subspace {
        Subspace::from_rref_unchecked(self.cols, super::nullspace(self.to_rows(), self.cols))
    }

    /// `f(s)` for `s` in the domain.
    pub fn image_of(&self, s: &Subspace) -> Result<Subspace> {
        if s.ambient() != self.cols {
            return Err(Error::AmbientMismatch {
                left: self.cols,
                right: s.ambient(),
            });
        }
        Ok(Subspace::span_unchecked(
            self.rows,
            s.basis().iter().map(|b| self.apply(b)).collect(),
        ))
    }

    /// `im f`.
    pub fn image(&self) -> Subspace {
        Subspace::span_unchecked(self.rows, self.transpose().to_rows())
    }

    /// `f⁻¹(s)` for `s` in the codomain.
    pub fn preimage(&self, s: &Subspace) -> Result<Subspace> {
        if s.ambient() != self.rows {
            return Err(Error::AmbientMismatch {
                left: self.rows,
                right: s.ambient(),
            });
        }
        // x ∈ f⁻¹(s) iff every functional vanishing on s vanishes on f(x)
        let functionals = s.annihilator();
        let constraints = functionals
            .basis()
            .iter()
            .map(|alpha| self.transpose().apply(alpha))
            .collect();
        Ok(Subspace::from_rref_unchecked(
            self.cols,
            super::nullspace(constraints, self.cols),
        ))
    }

    /// Whether `f(s) ⊆ t`.
    pub fn maps_into(&self, s: &Subspace, t: &Subspace) -> bool {
        s.basis().iter().all(|b| t.contains(&self.apply(b)))
    }

    fn check_same_shape(&self, other: &LinearMap) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        Ok(())
    }
}

impl fmt::Display for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(super::format_scalar).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int_vector;

    #[test]
    fn compose_and_pow() {
        let j = LinearMap::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert!(!j.pow(2).unwrap().is_zero());
        assert!(j.pow(3).unwrap().is_zero());
        assert_eq!(j.pow(0).unwrap(), LinearMap::identity(3));
    }

    #[test]
    fn inverse_roundtrip() {
        let a = LinearMap::from_i64(&[&[2, 1], &[7, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.compose(&inv).unwrap(), LinearMap::identity(2));
        assert_eq!(
            LinearMap::from_i64(&[&[1, 2], &[2, 4]]).inverse(),
            Err(Error::Singular)
        );
    }

    #[test]
    fn kronecker_indexing() {
        let a = LinearMap::from_i64(&[&[1, 2], &[3, 4]]);
        let b = LinearMap::identity(2);
        let k = a.kronecker(&b);
        assert_eq!(k.get(2, 0), &int(3));
        assert_eq!(k.get(3, 1), &int(3));
        assert_eq!(k.get(1, 3), &int(2));
    }

    #[test]
    fn ragged_rows_rejected() {
        let err = LinearMap::from_rows(vec![int_vector(&[1, 2]), int_vector(&[1])], 2);
        assert!(matches!(err, Err(Error::DimensionMismatch { .. })));
    }
}
