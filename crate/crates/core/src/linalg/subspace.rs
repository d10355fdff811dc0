use std::cmp::Ordering;

use num_traits::Zero;

use super::{is_zero_vector, nullspace, rref, unit_vector, LinearMap, Scalar, Vector};
use crate::error::{Error, Result};

/// A subspace of `ℚ^ambient`, stored as its reduced row-echelon basis.
///
/// The echelon form is canonical, so structural equality is subspace equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(|i| unit_vector(ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of a list of equal-length vectors. An empty list spans the zero
    /// subspace of `ℚ^0`.
    pub fn echelonize(vectors: Vec<Vector>) -> Result<Self> {
        let ambient = vectors.first().map_or(0, Vec::len);
        Self::span(ambient, vectors)
    }

    /// Span of `vectors` inside `ℚ^ambient`.
    pub fn span(ambient: usize, vectors: Vec<Vector>) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(Error::DimensionMismatch {
                expected: ambient,
                found: v.len(),
            });
        }
        Ok(Self::span_unchecked(ambient, vectors))
    }

    /// Span of a single vector.
    pub fn line(v: Vector) -> Self {
        let n = v.len();
        Self::span_unchecked(n, vec![v])
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        Self::span_unchecked(
            ambient,
            indices
                .into_iter()
                .map(|i| unit_vector(ambient, i))
                .collect(),
        )
    }

    pub(crate) fn span_unchecked(ambient: usize, vectors: Vec<Vector>) -> Self {
        let (basis, pivots) = rref(vectors, ambient);
        Subspace {
            ambient,
            basis,
            pivots,
        }
    }

    /// Wraps vectors that are already known to be independent; they are still
    /// brought into echelon form.
    pub(crate) fn from_rref_unchecked(ambient: usize, vectors: Vec<Vector>) -> Self {
        Self::span_unchecked(ambient, vectors)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    /// `v` minus its echelon-basis component: the entries at pivot columns of
    /// the result are zero.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut out = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let c = out[p].clone();
            for (x, y) in out.iter_mut().zip(b).skip(p) {
                if !y.is_zero() {
                    *x -= &c * y;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        v.len() == self.ambient && is_zero_vector(&self.reduce(v))
    }

    /// Coordinates of `v` with respect to the echelon basis.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        self.contains(v)
            .then(|| self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|b| other.contains(b))
    }

    /// Functionals (in the standard dual basis) vanishing on `self`.
    pub fn annihilator(&self) -> Subspace {
        Subspace::span_unchecked(self.ambient, nullspace(self.basis.clone(), self.ambient))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Ok(Subspace::span_unchecked(self.ambient, vs))
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.is_subspace_of(other) {
            return Ok(self.clone());
        }
        if other.is_subspace_of(self) {
            return Ok(other.clone());
        }
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    /// Span of all `u ⊗ v`, with `u ⊗ v` indexed as `i * other.ambient + j`.
    pub fn tensor(&self, other: &Subspace) -> Subspace {
        let n = self.ambient * other.ambient;
        let mut vs = Vec::with_capacity(self.dim() * other.dim());
        for u in &self.basis {
            for v in &other.basis {
                let mut w = Vec::with_capacity(n);
                for x in u {
                    for y in v {
                        w.push(x * y);
                    }
                }
                vs.push(w);
            }
        }
        Subspace::span_unchecked(n, vs)
    }

    pub(crate) fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: by ambient dimension, then dimension, then echelon basis.
impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ambient
            .cmp(&other.ambient)
            .then(self.dim().cmp(&other.dim()))
            .then_with(|| self.basis.cmp(&other.basis))
    }
}

/// `(a ∩ b, a + b)`.
pub fn meet_join(a: &Subspace, b: &Subspace) -> Result<(Subspace, Subspace)> {
    Ok((a.intersection(b)?, a.sum(b)?))
}

/// `(f(s), ker f, f⁻¹(s))` for a square map `f`.
pub fn image_kernel_preimage(
    f: &LinearMap,
    s: &Subspace,
) -> Result<(Subspace, Subspace, Subspace)> {
    if !f.is_square() {
        return Err(Error::NotSquare {
            rows: f.rows(),
            cols: f.cols(),
        });
    }
    Ok((f.image_of(s)?, f.kernel(), f.preimage(s)?))
}
