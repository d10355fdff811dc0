//! Increasing filtrations of finite-dimensional rational vector spaces.
//!
//! A [`Filtration`] records only the weights where the step changes. Below
//! the lowest recorded weight the step is zero; at and above the highest it
//! is the whole space. This module also implements the natural filtrations on
//! tensor products, `Hom` spaces, duals, subspaces and quotients, strictness
//! of filtered maps, and the bigrading of a space carrying two filtrations.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{LinearMap, Subquotient, Subspace, Vector};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Filtration {
    ambient: usize,
    jumps: BTreeMap<i64, Subspace>,
}

impl Filtration {
    /// Builds a filtration from `(weight, step)` pairs. A weight not listed
    /// takes the step of the nearest listed weight below it (zero if none).
    /// Steps must be nested and the highest must be the whole space.
    pub fn new(ambient: usize, steps: impl IntoIterator<Item = (i64, Subspace)>) -> Result<Self> {
        let steps: BTreeMap<i64, Subspace> = steps.into_iter().collect();
        let mut jumps = BTreeMap::new();
        let mut prev = Subspace::zero(ambient);
        for (m, s) in steps {
            if s.ambient() != ambient {
                return Err(Error::AmbientMismatch {
                    left: ambient,
                    right: s.ambient(),
                });
            }
            if !prev.is_subspace_of(&s) {
                return Err(Error::NotMonotone(m));
            }
            if s != prev {
                prev = s.clone();
                jumps.insert(m, s);
            }
        }
        if !prev.is_full() {
            return Err(Error::NotExhaustive);
        }
        Ok(Filtration { ambient, jumps })
    }

    /// The filtration with a single jump at `weight`.
    pub fn concentrated(ambient: usize, weight: i64) -> Self {
        Filtration::new(ambient, [(weight, Subspace::full(ambient))])
            .expect("a single full step is a valid filtration")
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Weights where the step changes, with the new step.
    pub fn jumps(&self) -> &BTreeMap<i64, Subspace> {
        &self.jumps
    }

    pub fn lowest(&self) -> Option<i64> {
        self.jumps.keys().next().copied()
    }

    pub fn highest(&self) -> Option<i64> {
        self.jumps.keys().next_back().copied()
    }

    /// `(lowest, highest)` jump weights; `None` for the zero space.
    pub fn window(&self) -> Option<(i64, i64)> {
        Some((self.lowest()?, self.highest()?))
    }

    pub fn step(&self, m: i64) -> Subspace {
        self.jumps
            .range(..=m)
            .next_back()
            .map_or_else(|| Subspace::zero(self.ambient), |(_, s)| s.clone())
    }

    pub fn gr_dim(&self, m: i64) -> usize {
        self.step(m).dim() - self.step(m - 1).dim()
    }

    /// Nonzero graded dimensions.
    pub fn gr_dims(&self) -> BTreeMap<i64, usize> {
        let mut prev = 0;
        self.jumps
            .iter()
            .map(|(&m, s)| {
                let d = s.dim() - prev;
                prev = s.dim();
                (m, d)
            })
            .collect()
    }

    /// Reindexes so that the old step `m` becomes step `m + by`.
    pub fn shifted(&self, by: i64) -> Filtration {
        Filtration {
            ambient: self.ambient,
            jumps: self
                .jumps
                .iter()
                .map(|(m, s)| (m + by, s.clone()))
                .collect(),
        }
    }

    /// Whether `f(F_m) ⊆ F_{m + shift}` for every `m`; on failure, the first
    /// offending `m`.
    pub fn check_preserved(&self, f: &LinearMap, shift: i64) -> Result<(), i64> {
        check_map_preserves(f, self, self, shift)
    }

    /// Steps listed at every integer weight of `lo..=hi`.
    pub fn steps_in(&self, lo: i64, hi: i64) -> impl Iterator<Item = (i64, Subspace)> + '_ {
        (lo..=hi).map(move |m| (m, self.step(m)))
    }
}

fn check_map_preserves(
    f: &LinearMap,
    source: &Filtration,
    target: &Filtration,
    shift: i64,
) -> Result<(), i64> {
    for (&m, s) in source.jumps() {
        // Each source step is constant up to the next jump, where the target
        // step is smallest.
        if !f.maps_into(s, &target.step(m + shift)) {
            return Err(m);
        }
    }
    Ok(())
}

/// A vector space with an increasing filtration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilteredSpace {
    dim: usize,
    filtration: Filtration,
}

/// `Gr_m` with representatives of its basis in the ambient space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPiece {
    pub weight: i64,
    pub dim: usize,
    pub basis: Vec<Vector>,
}

impl FilteredSpace {
    pub fn new(filtration: Filtration) -> Self {
        FilteredSpace {
            dim: filtration.ambient(),
            filtration,
        }
    }

    /// The zero-dimensional space.
    pub fn zero() -> Self {
        Self::new(Filtration::new(0, []).expect("empty filtration of the zero space"))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn filtration(&self) -> &Filtration {
        &self.filtration
    }

    pub fn gr(&self, m: i64) -> GradedPiece {
        let q = Subquotient::new(&self.filtration.step(m), &self.filtration.step(m - 1))
            .expect("filtration steps are nested");
        GradedPiece {
            weight: m,
            dim: q.dim(),
            basis: q.lifts().to_vec(),
        }
    }

    pub fn gr_dims(&self) -> BTreeMap<i64, usize> {
        self.filtration.gr_dims()
    }
}

impl From<Filtration> for FilteredSpace {
    fn from(f: Filtration) -> Self {
        FilteredSpace::new(f)
    }
}

pub fn gr(fs: &FilteredSpace, m: i64) -> GradedPiece {
    fs.gr(m)
}

/// `F_m(V ⊗ W) = Σ_{j+k=m} F_j V ⊗ F_k W`, with `v ⊗ w` indexed as
/// `i * dim W + j`.
pub fn tensor_filtration(a: &FilteredSpace, b: &FilteredSpace) -> FilteredSpace {
    let n = a.dim() * b.dim();
    let (Some((lo_a, hi_a)), Some((lo_b, hi_b))) = (a.filtration.window(), b.filtration.window())
    else {
        return FilteredSpace::zero();
    };
    let steps = (lo_a + lo_b..=hi_a + hi_b).map(|m| {
        let mut acc = Subspace::zero(n);
        for (&j, fa) in a.filtration.jumps() {
            let fb = b.filtration.step(m - j);
            if !fb.is_zero() {
                acc = acc.sum(&fa.tensor(&fb)).expect("same ambient");
            }
        }
        (m, acc)
    });
    FilteredSpace::new(Filtration::new(n, steps).expect("tensor steps are nested"))
}

/// `F_m Hom(V, W) = {φ : φ(F_k V) ⊆ F_{m+k} W for all k}`.
///
/// `φ` is a `dim W × dim V` matrix flattened row-major: entry `(i, j)` sits
/// at index `i * dim V + j`.
pub fn hom_filtration(a: &FilteredSpace, b: &FilteredSpace) -> FilteredSpace {
    let (dv, dw) = (a.dim(), b.dim());
    let n = dv * dw;
    let (Some((lo_a, hi_a)), Some((lo_b, hi_b))) = (a.filtration.window(), b.filtration.window())
    else {
        return FilteredSpace::zero();
    };
    let steps = (lo_b - hi_a - 1..=hi_b - lo_a).map(|m| {
        let mut constraints = Vec::new();
        for (&k, fk) in a.filtration.jumps() {
            let ann = b.filtration.step(m + k).annihilator();
            for v in fk.basis() {
                for alpha in ann.basis() {
                    let mut row = crate::linalg::zero_vector(n);
                    for (i, ai) in alpha.iter().enumerate() {
                        for (j, vj) in v.iter().enumerate() {
                            row[i * dv + j] = ai * vj;
                        }
                    }
                    constraints.push(row);
                }
            }
        }
        (
            m,
            Subspace::from_rref_unchecked(n, crate::linalg::nullspace(constraints, n)),
        )
    });
    FilteredSpace::new(Filtration::new(n, steps).expect("Hom steps are nested"))
}

/// `F_m V* = {φ : φ(F_{-m-1} V) = 0}`, i.e. `Hom(V, ℚ)` with `ℚ` pure of
/// weight zero.
pub fn dual_filtration(a: &FilteredSpace) -> FilteredSpace {
    hom_filtration(a, &FilteredSpace::new(Filtration::concentrated(1, 0)))
}

/// Filtrations induced on a subspace (by intersection) and on the quotient
/// (by projection), each in its own coordinates.
#[derive(Clone, Debug)]
pub struct InducedFiltrations {
    pub on_sub: FilteredSpace,
    pub on_quotient: FilteredSpace,
    /// Coordinates on the subspace (echelon basis).
    pub sub_coords: Subquotient,
    /// Coordinates on the quotient (pivot-complement basis).
    pub quotient_coords: Subquotient,
}

impl InducedFiltrations {
    /// Whether `dim Gr_m(sub) + dim Gr_m(quotient) = dim Gr_m(V)` for every
    /// `m`, returning the first weight where it fails.
    pub fn check_graded_exactness(&self, fs: &FilteredSpace) -> Result<(), i64> {
        let Some((lo, hi)) = fs.filtration().window() else {
            return Ok(());
        };
        for m in lo..=hi {
            let lhs = self.on_sub.filtration().gr_dim(m) + self.on_quotient.filtration().gr_dim(m);
            if lhs != fs.filtration().gr_dim(m) {
                return Err(m);
            }
        }
        Ok(())
    }
}

pub fn induced_filtrations(fs: &FilteredSpace, sub: &Subspace) -> Result<InducedFiltrations> {
    if sub.ambient() != fs.dim() {
        return Err(Error::AmbientMismatch {
            left: fs.dim(),
            right: sub.ambient(),
        });
    }
    let sub_coords = Subquotient::new(sub, &Subspace::zero(fs.dim()))?;
    let quotient_coords = Subquotient::quotient(sub);
    let mut on_sub = Vec::new();
    let mut on_quotient = Vec::new();
    for (&m, s) in fs.filtration().jumps() {
        on_sub.push((m, sub_coords.image_of_meet(s)?));
        on_quotient.push((m, quotient_coords.image_of(s)?));
    }
    Ok(InducedFiltrations {
        on_sub: Filtration::new(sub_coords.dim(), on_sub)?.into(),
        on_quotient: Filtration::new(quotient_coords.dim(), on_quotient)?.into(),
        sub_coords,
        quotient_coords,
    })
}

/// Compares the two ways of filtering the image `p(w)` of `w` in `V/u`:
/// restricting the quotient filtration of `V/u` to `p(w)`, and taking the
/// image of the filtration induced on `w`. They agree when `u ⊆ w`; for
/// other configurations the honest comparison is returned.
pub fn subquotient_agreement(fs: &FilteredSpace, u: &Subspace, w: &Subspace) -> Result<bool> {
    u.check_ambient(w)?;
    if u.ambient() != fs.dim() {
        return Err(Error::AmbientMismatch {
            left: fs.dim(),
            right: u.ambient(),
        });
    }
    let p = Subquotient::quotient(u);
    let pw = p.image_of(w)?;
    for s in fs.filtration().jumps().values() {
        let restricted = pw.intersection(&p.image_of(s)?)?;
        let imaged = p.image_of(&w.intersection(s)?)?;
        if restricted != imaged {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A linear map with `map(F_m source) ⊆ F_{m+shift} target`.
#[derive(Clone, Debug)]
pub struct FilteredMap {
    map: LinearMap,
    source: FilteredSpace,
    target: FilteredSpace,
    shift: i64,
}

impl FilteredMap {
    pub fn new(
        map: LinearMap,
        source: FilteredSpace,
        target: FilteredSpace,
        shift: i64,
    ) -> Result<Self> {
        if map.cols() != source.dim() || map.rows() != target.dim() {
            return Err(Error::DimensionMismatch {
                expected: source.dim() * target.dim(),
                found: map.rows() * map.cols(),
            });
        }
        check_map_preserves(&map, source.filtration(), target.filtration(), shift)
            .map_err(Error::NotFiltrationPreserving)?;
        Ok(FilteredMap {
            map,
            source,
            target,
            shift,
        })
    }

    pub fn map(&self) -> &LinearMap {
        &self.map
    }

    pub fn source(&self) -> &FilteredSpace {
        &self.source
    }

    pub fn target(&self) -> &FilteredSpace {
        &self.target
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }
}

/// Strictness computed two ways. `first_violation` is the first source
/// weight where the defining identity fails, and `first_inexact` the first
/// where the four-term graded sequence is not exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strictness {
    pub first_violation: Option<i64>,
    pub first_inexact: Option<i64>,
}

impl Strictness {
    pub fn is_strict(&self) -> bool {
        self.first_violation.is_none()
    }

    pub fn routes_agree(&self) -> bool {
        self.first_violation.is_none() == self.first_inexact.is_none()
    }
}

pub fn strictness(f: &FilteredMap) -> Result<Strictness> {
    let (w1, w2, s) = (f.source.filtration(), f.target.filtration(), f.shift);
    let window = |w: &Filtration, off: i64| w.window().map(|(lo, hi)| (lo - off, hi - off));
    let bounds: Vec<(i64, i64)> = [window(w1, 0), window(w2, s)]
        .into_iter()
        .flatten()
        .collect();
    let lo = bounds.iter().map(|b| b.0).min().unwrap_or(0) - 1;
    let hi = bounds.iter().map(|b| b.1).max().unwrap_or(0) + 1;

    let image = f.map.image();
    let kernel = f.map.kernel();
    let mut report = Strictness {
        first_violation: None,
        first_inexact: None,
    };
    for m in lo..=hi {
        let src = w1.step(m);
        let src_below = w1.step(m - 1);
        let tgt = w2.step(m + s);
        let tgt_below = w2.step(m + s - 1);
        let f_src = f.map.image_of(&src)?;

        if report.first_violation.is_none() && tgt.intersection(&image)? != f_src {
            report.first_violation = Some(m);
        }

        // exact at Gr V1: ker Gr_m f = image of Gr_m ker f
        let ker_gr = src.intersection(&f.map.preimage(&tgt_below)?)?;
        let from_ker = kernel.intersection(&src)?.sum(&src_below)?;
        // exact at Gr V2: im Gr_m f = ker(Gr V2 → Gr coker)
        let im_gr = f_src.sum(&tgt_below)?;
        let to_coker = tgt.intersection(&tgt_below.sum(&image)?)?;
        if report.first_inexact.is_none() && (ker_gr != from_ker || im_gr != to_coker) {
            report.first_inexact = Some(m);
        }
    }
    Ok(report)
}

/// `dim Gr^F_m Gr^G_n V`, keyed by `(m, n)`, computed in both orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bigraded {
    /// `F` induced on each `Gr^G_n`, then graded.
    pub first_on_second: BTreeMap<(i64, i64), usize>,
    /// `G` induced on each `Gr^F_m`, then graded.
    pub second_on_first: BTreeMap<(i64, i64), usize>,
}

impl Bigraded {
    pub fn agrees(&self) -> bool {
        self.first_on_second == self.second_on_first
    }

    pub fn table(&self) -> &BTreeMap<(i64, i64), usize> {
        &self.first_on_second
    }
}

pub fn bigraded_dims(fs: &FilteredSpace, second: &Filtration) -> Result<Bigraded> {
    if second.ambient() != fs.dim() {
        return Err(Error::AmbientMismatch {
            left: fs.dim(),
            right: second.ambient(),
        });
    }
    let first = fs.filtration();
    Ok(Bigraded {
        first_on_second: graded_of_induced(first, second, false)?,
        second_on_first: graded_of_induced(second, first, true)?,
    })
}

/// Induces `outer` on each graded piece of `inner` and records graded
/// dimensions keyed `(outer weight, inner weight)`, or swapped.
fn graded_of_induced(
    outer: &Filtration,
    inner: &Filtration,
    swap: bool,
) -> Result<BTreeMap<(i64, i64), usize>> {
    let mut table = BTreeMap::new();
    let Some((lo, hi)) = outer.window() else {
        return Ok(table);
    };
    for &n in inner.jumps().keys() {
        let q = Subquotient::new(&inner.step(n), &inner.step(n - 1))?;
        let mut prev = 0;
        for m in lo..=hi {
            let d = q.image_of_meet(&outer.step(m))?.dim();
            if d > prev {
                let key = if swap { (n, m) } else { (m, n) };
                table.insert(key, d - prev);
            }
            prev = d;
        }
    }
    Ok(table)
}
