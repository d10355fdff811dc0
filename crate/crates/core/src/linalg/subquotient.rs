use super::{is_zero_vector, rref, LinearMap, Scalar, Subspace, Vector};
use crate::error::{Error, Result};

/// Coordinates on a subquotient `sub / smaller`.
///
/// The basis of the quotient is fixed by the pivot-complement convention:
/// each vector of `sub` is reduced modulo the echelon basis of `smaller`, and
/// the echelon basis of the reduced vectors gives the lifts. Coordinates of a
/// vector are read off at the pivot columns of the lifts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subquotient {
    sub: Subspace,
    smaller: Subspace,
    lifts: Vec<Vector>,
    lift_pivots: Vec<usize>,
}

impl Subquotient {
    pub fn new(sub: &Subspace, smaller: &Subspace) -> Result<Self> {
        sub.check_ambient(smaller)?;
        if !smaller.is_subspace_of(sub) {
            return Err(Error::Precondition(
                "subquotient requires smaller ⊆ sub".into(),
            ));
        }
        let reduced = sub.basis().iter().map(|b| smaller.reduce(b)).collect();
        let (lifts, lift_pivots) = rref(reduced, sub.ambient());
        Ok(Subquotient {
            sub: sub.clone(),
            smaller: smaller.clone(),
            lifts,
            lift_pivots,
        })
    }

    /// `ℚ^n / u`.
    pub fn quotient(u: &Subspace) -> Self {
        Self::new(&Subspace::full(u.ambient()), u).expect("u is inside the full space")
    }

    pub fn dim(&self) -> usize {
        self.lifts.len()
    }

    pub fn sub(&self) -> &Subspace {
        &self.sub
    }

    pub fn smaller(&self) -> &Subspace {
        &self.smaller
    }

    /// Representatives in `sub` of the quotient basis.
    pub fn lifts(&self) -> &[Vector] {
        &self.lifts
    }

    /// Class of `v ∈ sub` in quotient coordinates.
    pub fn coords(&self, v: &[Scalar]) -> Result<Vector> {
        self.try_coords(v).ok_or_else(|| {
            Error::NotInvariant("vector does not lie in the subquotient's ambient subspace".into())
        })
    }

    fn try_coords(&self, v: &[Scalar]) -> Option<Vector> {
        if v.len() != self.sub.ambient() {
            return None;
        }
        let mut r = self.smaller.reduce(v);
        let c: Vector = self.lift_pivots.iter().map(|&p| r[p].clone()).collect();
        for (l, x) in self.lifts.iter().zip(&c) {
            for (ri, li) in r.iter_mut().zip(l) {
                *ri -= x * li;
            }
        }
        is_zero_vector(&r).then_some(c)
    }

    /// A representative in `sub` of the class with the given coordinates.
    pub fn lift(&self, coords: &[Scalar]) -> Vector {
        let mut v = super::zero_vector(self.sub.ambient());
        for (l, c) in self.lifts.iter().zip(coords) {
            for (vi, li) in v.iter_mut().zip(l) {
                *vi += c * li;
            }
        }
        v
    }

    /// Image in the quotient of a subspace of `sub`.
    pub fn image_of(&self, s: &Subspace) -> Result<Subspace> {
        let vs = s
            .basis()
            .iter()
            .map(|b| self.coords(b))
            .collect::<Result<Vec<_>>>()?;
        Subspace::span(self.dim(), vs)
    }

    /// Image in the quotient of `s ∩ sub`, for any `s` in the ambient space.
    pub fn image_of_meet(&self, s: &Subspace) -> Result<Subspace> {
        self.image_of(&s.intersection(&self.sub)?)
    }

    /// Preimage in the ambient space of a quotient subspace; always contains
    /// `smaller` and lies in `sub`.
    pub fn pullback(&self, t: &Subspace) -> Result<Subspace> {
        if t.ambient() != self.dim() {
            return Err(Error::AmbientMismatch {
                left: self.dim(),
                right: t.ambient(),
            });
        }
        let mut vs: Vec<Vector> = self.smaller.basis().to_vec();
        vs.extend(t.basis().iter().map(|c| self.lift(c)));
        Subspace::span(self.sub.ambient(), vs)
    }

    /// Matrix of the map induced by `f` on the subquotient.
    pub fn induce(&self, f: &LinearMap) -> Result<LinearMap> {
        let n = self.sub.ambient();
        if f.rows() != n || f.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: f.cols(),
            });
        }
        if !f.maps_into(&self.smaller, &self.smaller) {
            return Err(Error::NotInvariant("f(smaller) ⊄ smaller".into()));
        }
        let columns = self
            .lifts
            .iter()
            .map(|l| {
                self.try_coords(&f.apply(l))
                    .ok_or_else(|| Error::NotInvariant("f(sub) ⊄ sub".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        LinearMap::from_columns(&columns, self.dim())
    }
}

/// The map induced by `f` on `sub / smaller`, in the pivot-complement basis.
pub fn induce_on_subquotient(
    f: &LinearMap,
    sub: &Subspace,
    smaller: &Subspace,
) -> Result<LinearMap> {
    Subquotient::new(sub, smaller)?.induce(f)
}
