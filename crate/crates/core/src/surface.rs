//! Homology of punctured surfaces, curve systems and Picard–Lefschetz
//! operators.
//!
//! Coordinates on `H_1` of a genus-`g` surface with `n` punctures are
//! `(a_1, b_1, ..., a_g, b_g, e_1, ..., e_{n-1})`. The `e_j` span the reduced
//! `H_0` of the puncture set and pair to zero with everything; on the first
//! `2g` coordinates the pairing is the standard symplectic form with
//! `⟨a_i, b_i⟩ = 1`.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::filtered::{
    hom_filtration, induced_filtrations, tensor_filtration, FilteredSpace, Filtration,
};
use crate::linalg::{
    int, int_vector, unit_vector, LinearMap, Scalar, Subquotient, Subspace, Vector,
};
use crate::nilwf::{monodromy_filtration, NilpotentOperator};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceModel {
    genus: usize,
    punctures: usize,
    form: LinearMap,
}

impl SurfaceModel {
    pub fn new(genus: usize, punctures: usize) -> Self {
        let dim = 2 * genus + punctures.saturating_sub(1);
        let mut form = LinearMap::zeros(dim, dim);
        for i in 0..genus {
            form.set(2 * i, 2 * i + 1, int(1));
            form.set(2 * i + 1, 2 * i, int(-1));
        }
        SurfaceModel {
            genus,
            punctures,
            form,
        }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn punctures(&self) -> usize {
        self.punctures
    }

    pub fn dim(&self) -> usize {
        self.form.rows()
    }

    /// Dimension of the closed-surface part, `2g`.
    pub fn h_dim(&self) -> usize {
        2 * self.genus
    }

    /// `2 - 2g - n < 0`.
    pub fn is_stable(&self) -> bool {
        2 * self.genus + self.punctures > 2
    }

    /// The intersection form `J`, with `⟨x, y⟩ = xᵀ J y`.
    pub fn form(&self) -> &LinearMap {
        &self.form
    }

    pub fn pairing(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        crate::linalg::dot(x, &self.form.apply(y))
    }

    /// `a_i` for `1 ≤ i ≤ g`.
    pub fn a(&self, i: usize) -> Vector {
        assert!((1..=self.genus).contains(&i), "a_{i} out of range");
        unit_vector(self.dim(), 2 * (i - 1))
    }

    /// `b_i` for `1 ≤ i ≤ g`.
    pub fn b(&self, i: usize) -> Vector {
        assert!((1..=self.genus).contains(&i), "b_{i} out of range");
        unit_vector(self.dim(), 2 * i - 1)
    }

    /// The puncture class `e_j` for `1 ≤ j < n`.
    pub fn e(&self, j: usize) -> Vector {
        assert!((1..self.punctures).contains(&j), "e_{j} out of range");
        unit_vector(self.dim(), self.h_dim() + j - 1)
    }

    /// `W_{-2}`: the span of the puncture classes.
    pub fn puncture_part(&self) -> Subspace {
        Subspace::coordinate(self.dim(), self.h_dim()..self.dim())
    }

    /// The weight filtration: `W_{-2}` the puncture classes, `W_{-1}` all.
    pub fn filtration(&self) -> Filtration {
        Filtration::new(
            self.dim(),
            [(-2, self.puncture_part()), (-1, Subspace::full(self.dim()))],
        )
        .expect("puncture classes form a subspace")
    }

    /// The first `2g` coordinates of `v`.
    pub fn h_part(&self, v: &[Scalar]) -> Vector {
        v[..self.h_dim()].to_vec()
    }

    /// The model with the punctures forgotten.
    pub fn closed(&self) -> SurfaceModel {
        SurfaceModel::new(self.genus, 0)
    }
}

/// `H_1` of a genus-`g` surface with `n` punctures and its weight filtration.
pub fn punctured_homology(g: usize, n: usize) -> Result<FilteredSpace> {
    let s = SurfaceModel::new(g, n);
    if n > 0 && !s.is_stable() {
        return Err(Error::Precondition(format!(
            "surface of genus {g} with {n} punctures is not stable"
        )));
    }
    Ok(s.filtration().into())
}

/// Integer homology classes of a family of disjoint curves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveSystem {
    labels: Vec<String>,
    classes: Vec<Vec<i64>>,
}

impl CurveSystem {
    pub fn new(curves: impl IntoIterator<Item = (String, Vec<i64>)>) -> Self {
        let (labels, classes) = curves.into_iter().unzip();
        CurveSystem { labels, classes }
    }

    pub fn empty() -> Self {
        Self::new([])
    }

    /// Curves with the given closed-surface classes, lifted with zero
    /// puncture component.
    pub fn from_h_classes(s: &SurfaceModel, classes: &[Vec<i64>]) -> Self {
        Self::new(classes.iter().enumerate().map(|(i, c)| {
            let mut v = c.clone();
            v.resize(s.dim(), 0);
            (format!("c{i}"), v)
        }))
    }

    /// The curves `a_i` for the given `i` (1-based).
    pub fn a_curves(s: &SurfaceModel, indices: &[usize]) -> Self {
        Self::new(indices.iter().map(|&i| {
            let mut v = vec![0; s.dim()];
            v[2 * (i - 1)] = 1;
            (format!("a{i}"), v)
        }))
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn classes(&self) -> &[Vec<i64>] {
        &self.classes
    }

    pub fn vectors(&self) -> Vec<Vector> {
        self.classes.iter().map(|c| int_vector(c)).collect()
    }

    /// Checks the homological conditions for disjoint curves: every class is
    /// primitive or zero, and all pairings vanish.
    pub fn validate(&self, s: &SurfaceModel) -> Result<()> {
        let invalid = |msg: String| Err(Error::InvalidCurveSystem(msg));
        for (label, c) in self.labels.iter().zip(&self.classes) {
            if c.len() != s.dim() {
                return invalid(format!(
                    "class of {label} has length {}, expected {}",
                    c.len(),
                    s.dim()
                ));
            }
            let g = c.iter().fold(0i64, |g, x| g.gcd(x));
            if g > 1 {
                return invalid(format!("class of {label} is divisible by {g}"));
            }
        }
        let vs = self.vectors();
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                if !s.pairing(&vs[i], &vs[j]).is_zero() {
                    return invalid(format!(
                        "{} and {} intersect",
                        self.labels[i], self.labels[j]
                    ));
                }
            }
        }
        Ok(())
    }
}

/// `x ↦ Σ ⟨c, x⟩ c` over the given classes.
fn pl_matrix(form: &LinearMap, classes: &[Vector]) -> LinearMap {
    let dim = form.rows();
    let jt = form.transpose();
    let mut m = LinearMap::zeros(dim, dim);
    for c in classes {
        // row functional x ↦ cᵀ J x
        let functional = jt.apply(c);
        for (i, ci) in c.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (k, fk) in functional.iter().enumerate() {
                if !fk.is_zero() {
                    let x = m.get(i, k) + ci * fk;
                    m.set(i, k, x);
                }
            }
        }
    }
    m
}

/// The Picard–Lefschetz operator `N_γ x = Σ_j ⟨c_j, x⟩ c_j`.
pub fn picard_lefschetz(s: &SurfaceModel, cs: &CurveSystem) -> Result<NilpotentOperator> {
    cs.validate(s)?;
    let n = NilpotentOperator::new(pl_matrix(s.form(), &cs.vectors()))?;
    debug_assert!(n.nilpotency_index() <= 1);
    Ok(n)
}

/// The span of a curve system in `H_1` of the closed surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanInfo {
    pub span: Subspace,
    pub isotropic: bool,
    pub lagrangian: bool,
}

pub fn span_and_isotropy(s: &SurfaceModel, cs: &CurveSystem) -> Result<SpanInfo> {
    cs.validate(s)?;
    let closed = s.closed();
    let span = Subspace::span(
        s.h_dim(),
        cs.vectors().iter().map(|c| s.h_part(c)).collect(),
    )?;
    let isotropic = span
        .basis()
        .iter()
        .all(|x| span.basis().iter().all(|y| closed.pairing(x, y).is_zero()));
    Ok(SpanInfo {
        lagrangian: isotropic && span.dim() == s.genus(),
        isotropic,
        span,
    })
}

/// A bounding pair `{c_0, c_1}` separating two punctures, with classes
/// `a_1` and `a_1 + e`, and the logarithm `N = N_{c_1} - N_{c_0}` of the
/// bounding pair map. `N x = ⟨a_1, x⟩ e`.
#[derive(Clone, Debug)]
pub struct BoundingPair {
    pub model: SurfaceModel,
    pub space: FilteredSpace,
    pub operator: NilpotentOperator,
    pub curves: [Vector; 2],
}

pub fn bounding_pair_model(g: usize) -> Result<BoundingPair> {
    if g == 0 {
        return Err(Error::Precondition(
            "a bounding pair needs genus ≥ 1".into(),
        ));
    }
    let model = SurfaceModel::new(g, 2);
    let c0 = model.a(1);
    let c1: Vector = c0.iter().zip(&model.e(1)).map(|(x, y)| x + y).collect();
    let operator = NilpotentOperator::new(
        pl_matrix(model.form(), std::slice::from_ref(&c1))
            .sub(&pl_matrix(model.form(), std::slice::from_ref(&c0)))?,
    )?;
    Ok(BoundingPair {
        space: model.filtration().into(),
        model,
        operator,
        curves: [c0, c1],
    })
}

/// The decomposition `H = A ⊕ H_0 ⊕ B` of the closed-surface homology
/// determined by the monodromy filtration `M` of `N_γ` centered at `-1`, and
/// the element `ξ` acting by `+1`, `0`, `-1` on the three pieces.
#[derive(Clone, Debug)]
pub struct ABDecomposition {
    pub genus: usize,
    /// `M` on `H`, with steps at `-2`, `-1`, `0`.
    pub m: Filtration,
    /// Complement of `M_{-1}` in `H`, lifting `Gr^M_0`.
    pub a: Subspace,
    /// Complement of `M_{-2}` in `M_{-1}`, lifting `Gr^M_{-1}`.
    pub h0: Subspace,
    /// `M_{-2}`.
    pub b: Subspace,
    pub xi: LinearMap,
}

pub fn ab_decomposition(s: &SurfaceModel, cs: &CurveSystem) -> Result<ABDecomposition> {
    cs.validate(s)?;
    let h = s.h_dim();
    let classes: Vec<Vector> = cs.vectors().iter().map(|c| s.h_part(c)).collect();
    let n_h = NilpotentOperator::new(pl_matrix(s.closed().form(), &classes))?;
    let m = monodromy_filtration(&n_h, -1);
    let b = m.step(-2);
    let h0_lifts = Subquotient::new(&m.step(-1), &b)?.lifts().to_vec();
    let a_lifts = Subquotient::new(&Subspace::full(h), &m.step(-1))?
        .lifts()
        .to_vec();

    let mut columns = a_lifts.clone();
    columns.extend(h0_lifts.iter().cloned());
    columns.extend(b.basis().iter().cloned());
    let p = LinearMap::from_columns(&columns, h)?;
    let diag: Vec<Scalar> = std::iter::repeat_n(int(1), a_lifts.len())
        .chain(std::iter::repeat_n(int(0), h0_lifts.len()))
        .chain(std::iter::repeat_n(int(-1), b.dim()))
        .collect();
    let xi = p
        .compose(&LinearMap::diagonal(&diag))?
        .compose(&p.inverse()?)?;

    Ok(ABDecomposition {
        genus: s.genus(),
        a: Subspace::span(h, a_lifts)?,
        h0: Subspace::span(h, h0_lifts)?,
        b,
        m,
        xi,
    })
}

/// Eigenvalues of `ξ` on the graded pieces of `H^{⊗n}` with the tensor
/// `M`-filtration. `None` marks a piece where `ξ` is not scalar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiSpectrum {
    pub power: usize,
    pub eigenvalues: BTreeMap<i64, Option<Scalar>>,
}

impl XiSpectrum {
    pub fn all_scalar(&self) -> bool {
        self.eigenvalues.values().all(Option::is_some)
    }

    /// Scalar on every piece, acting on `Gr_k` by `k + n`.
    pub fn holds(&self) -> bool {
        self.eigenvalues
            .iter()
            .all(|(&k, e)| e.as_ref() == Some(&int(k + self.power as i64)))
    }
}

pub const MAX_XI_POWER: usize = 3;

pub fn xi_eigenvalue_check(dec: &ABDecomposition, n: usize) -> Result<XiSpectrum> {
    if n == 0 || n > MAX_XI_POWER {
        return Err(Error::Precondition(format!(
            "tensor power must be between 1 and {MAX_XI_POWER}"
        )));
    }
    let h = FilteredSpace::new(dec.m.clone());
    let dim = dec.xi.rows();
    let mut space = h.clone();
    let mut xi = dec.xi.clone();
    let mut identity = LinearMap::identity(dim);
    for _ in 1..n {
        space = tensor_filtration(&space, &h);
        xi = xi
            .kronecker(&LinearMap::identity(dim))
            .add(&identity.kronecker(&dec.xi))?;
        identity = identity.kronecker(&LinearMap::identity(dim));
    }
    let mut eigenvalues = BTreeMap::new();
    for &k in space.filtration().jumps().keys() {
        let f = space.filtration();
        let on_gr = Subquotient::new(&f.step(k), &f.step(k - 1))?.induce(&xi)?;
        eigenvalues.insert(k, scalar_value(&on_gr));
    }
    Ok(XiSpectrum {
        power: n,
        eigenvalues,
    })
}

fn scalar_value(m: &LinearMap) -> Option<Scalar> {
    let c = if m.rows() == 0 {
        return None;
    } else {
        m.get(0, 0).clone()
    };
    let scalar = (0..m.rows()).all(|i| {
        (0..m.cols()).all(|j| *m.get(i, j) == if i == j { c.clone() } else { Scalar::zero() })
    });
    scalar.then_some(c)
}

/// The symplectic Lie algebra of `H` inside `End(H)`, flattened row-major.
pub fn symplectic_algebra(g: usize) -> Subspace {
    let s = SurfaceModel::new(g, 0);
    let h = 2 * g;
    let j = s.form();
    // JX + XᵀJ = 0, entry (a, b)
    let mut constraints = Vec::new();
    for a in 0..h {
        for b in a..h {
            let mut row = crate::linalg::zero_vector(h * h);
            for c in 0..h {
                row[c * h + b] += j.get(a, c);
                row[c * h + a] += j.get(c, b);
            }
            constraints.push(row);
        }
    }
    Subspace::from_rref_unchecked(h * h, crate::linalg::nullspace(constraints, h * h))
}

/// Graded dimensions of `sp(H)` for the filtration induced from the
/// `M`-filtration of `End(H)`.
pub fn sp_graded_dims(s: &SurfaceModel, cs: &CurveSystem) -> Result<BTreeMap<i64, usize>> {
    let dec = ab_decomposition(s, cs)?;
    let h = FilteredSpace::new(dec.m);
    let end = hom_filtration(&h, &h);
    let sp = symplectic_algebra(s.genus());
    Ok(induced_filtrations(&end, &sp)?.on_sub.gr_dims())
}

/// Whether `x` is a nonzero multiple of a primitive integer vector with
/// `gcd = 1`, or zero.
pub fn is_primitive_or_zero(v: &[i64]) -> bool {
    v.iter().fold(0i64, |g, x| g.gcd(x)) <= 1
}

/// Rescales a rational vector to a primitive integer vector with positive
/// first nonzero entry.
pub fn primitive_integer(v: &[Scalar]) -> Option<Vec<i64>> {
    use num_bigint::BigInt;
    let lcm = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * Scalar::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return Some(vec![0; v.len()]);
    }
    let sign = if ints
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x < &BigInt::zero())
    {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    ints.iter()
        .map(|x| i64::try_from(x / &g * &sign).ok())
        .collect()
}
