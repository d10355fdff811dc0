//! Weight filtrations of nilpotent operators and relative weight filtrations.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::filtered::{FilteredSpace, Filtration};
use crate::linalg::{LinearMap, Subquotient, Subspace, Vector};

/// Cap on the number of subspaces generated by the lattice search.
pub const LATTICE_CAP: usize = 512;

pub const DEFAULT_SEARCH_DEPTH: usize = 3;

/// A nilpotent endomorphism together with its nilpotency index, the least
/// `m` with `N^{m+1} = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotentOperator {
    matrix: LinearMap,
    index: u32,
}

impl NilpotentOperator {
    pub fn new(matrix: LinearMap) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        let mut power = LinearMap::identity(matrix.rows());
        for m in 0..=matrix.rows() as u32 {
            let next = matrix.compose(&power)?;
            if next.is_zero() {
                return Ok(NilpotentOperator { matrix, index: m });
            }
            power = next;
        }
        Err(Error::NotNilpotent)
    }

    pub fn zero(dim: usize) -> Self {
        NilpotentOperator {
            matrix: LinearMap::zeros(dim, dim),
            index: 0,
        }
    }

    pub fn matrix(&self) -> &LinearMap {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn nilpotency_index(&self) -> u32 {
        self.index
    }

    pub fn is_zero(&self) -> bool {
        self.index == 0
    }

    pub fn pow(&self, k: u32) -> LinearMap {
        self.matrix.pow(k).expect("square")
    }

    fn check_dim(&self, ambient: usize) -> Result<()> {
        if ambient != self.dim() {
            return Err(Error::AmbientMismatch {
                left: self.dim(),
                right: ambient,
            });
        }
        Ok(())
    }
}

/// The weight filtration `W(N)` centered at 0.
///
/// With `m` the nilpotency index, `W_m = V`, `W_{m-1} = ker N^m` and
/// `W_{-m} = im N^m`; the steps in between are pulled back from the weight
/// filtration of the operator induced on `ker N^m / im N^m`.
pub fn weight_filtration(n: &NilpotentOperator) -> Filtration {
    let dim = n.dim();
    if dim == 0 {
        return Filtration::new(0, []).expect("zero space");
    }
    let m = n.index;
    if m == 0 {
        return Filtration::concentrated(dim, 0);
    }
    let nm = n.pow(m);
    let sq = Subquotient::new(&nm.kernel(), &nm.image()).expect("im N^m ⊆ ker N^m");
    let induced = sq
        .induce(&n.matrix)
        .expect("ker and im of N^m are N-stable");
    let inner =
        weight_filtration(&NilpotentOperator::new(induced).expect("induced operator is nilpotent"));
    let m = m as i64;
    let mut steps: Vec<(i64, Subspace)> = (-m..m)
        .map(|k| (k, sq.pullback(&inner.step(k)).expect("same ambient")))
        .collect();
    steps.push((m, Subspace::full(dim)));
    Filtration::new(dim, steps).expect("pullbacks of a filtration are nested")
}

/// `W(N)` reindexed so that it is centered at `center`.
pub fn monodromy_filtration(n: &NilpotentOperator, center: i64) -> Filtration {
    weight_filtration(n).shifted(center)
}

/// The operators `Gr^W_m N` on the nonzero graded pieces of `w`.
pub fn graded_operators(
    n: &NilpotentOperator,
    w: &Filtration,
) -> Result<BTreeMap<i64, NilpotentOperator>> {
    n.check_dim(w.ambient())?;
    w.check_preserved(&n.matrix, 0)
        .map_err(|m| Error::NotInvariant(format!("N(W_{m}) ⊄ W_{m}")))?;
    w.jumps()
        .keys()
        .map(|&m| {
            let sq = Subquotient::new(&w.step(m), &w.step(m - 1))?;
            Ok((m, NilpotentOperator::new(sq.induce(&n.matrix)?)?))
        })
        .collect()
}

/// The two defining properties of a weight filtration centered at `center`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomFailure {
    /// `N W_k ⊄ W_{k-2}`.
    Shift { k: i64 },
    /// `N^k: Gr_{center+k} → Gr_{center-k}` is not an isomorphism.
    Symmetry { k: i64 },
}

/// Checks directly that `w` is the weight filtration of `n` centered at
/// `center`, without reference to how it was produced.
pub fn check_weight_axioms(
    n: &NilpotentOperator,
    w: &Filtration,
    center: i64,
) -> Result<Result<(), AxiomFailure>> {
    n.check_dim(w.ambient())?;
    if let Err(k) = w.check_preserved(&n.matrix, -2) {
        return Ok(Err(AxiomFailure::Shift { k }));
    }
    let Some((lo, hi)) = w.window() else {
        return Ok(Ok(()));
    };
    let reach = (hi - center).max(center - lo).max(0) + 1;
    for k in 0..=reach {
        let (up, down) = (center + k, center - k);
        if w.gr_dim(up) != w.gr_dim(down) {
            return Ok(Err(AxiomFailure::Symmetry { k }));
        }
        // injective on Gr_{center+k}: nothing new in W_{center+k} is sent
        // below W_{center-k}
        let nk = n.pow(k as u32);
        let dies = w.step(up).intersection(&nk.preimage(&w.step(down - 1))?)?;
        if dies != w.step(up - 1) {
            return Ok(Err(AxiomFailure::Symmetry { k }));
        }
    }
    Ok(Ok(()))
}

/// The first failure found by [`verify_relative`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RelativeViolation {
    /// `N M_k ⊄ M_{k-2}`; `witness` is a basis vector of `M_k` with
    /// `N witness ∉ M_{k-2}`.
    Shift { k: i64, witness: Vector },
    /// On `Gr^W_weight`, the filtration induced by `M` differs from the
    /// monodromy filtration of `Gr^W_weight N` centered at `weight`, first at
    /// step `k`.
    Graded { weight: i64, k: i64 },
}

impl RelativeViolation {
    pub fn clause(&self) -> u8 {
        match self {
            RelativeViolation::Shift { .. } => 1,
            RelativeViolation::Graded { .. } => 2,
        }
    }
}

/// Checks whether `m` is the relative weight filtration of `(n, w)`.
/// `Ok(Err(_))` names the first violated clause.
pub fn verify_relative(
    n: &NilpotentOperator,
    w: &Filtration,
    m: &Filtration,
) -> Result<Result<(), RelativeViolation>> {
    let graded = graded_operators(n, w)?;
    n.check_dim(m.ambient())?;

    for (&k, step) in m.jumps() {
        let below = m.step(k - 2);
        if let Some(v) = step
            .basis()
            .iter()
            .find(|v| !below.contains(&n.matrix.apply(v)))
        {
            return Ok(Err(RelativeViolation::Shift {
                k,
                witness: v.clone(),
            }));
        }
    }

    for (&weight, nm) in &graded {
        let sq = Subquotient::new(&w.step(weight), &w.step(weight - 1))?;
        let local = monodromy_filtration(nm, weight);
        let (lo, hi) = span_of([m.window(), local.window()]);
        for k in lo - 1..=hi {
            let induced = m.step(k).intersection(sq.sub())?.sum(sq.smaller())?;
            if induced != sq.pullback(&local.step(k))? {
                return Ok(Err(RelativeViolation::Graded { weight, k }));
            }
        }
    }
    Ok(Ok(()))
}

fn span_of(windows: impl IntoIterator<Item = Option<(i64, i64)>>) -> (i64, i64) {
    windows
        .into_iter()
        .flatten()
        .reduce(|a, b| (a.0.min(b.0), a.1.max(b.1)))
        .unwrap_or((0, 0))
}

/// Which case of [`construct_relative`] produced the filtration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// `N W_m ⊆ W_{m-2}` for all `m`, so `M = W`.
    Strict,
    /// `W` has a single jump, so `M` is a monodromy filtration.
    SingleWeight,
    /// Every `Gr^W_m N` vanishes, which forces `M = W`.
    Forced,
    /// Found by the bounded lattice search.
    Search,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RelativeWFOutcome {
    Exists {
        filtration: Filtration,
        route: Route,
    },
    /// The only possible candidate fails `N M_k ⊆ M_{k-2}` at `witness`.
    CertifiedNonexistent {
        k: i64,
        witness: Vector,
        candidate: Filtration,
    },
    /// The lattice search to this depth found no valid filtration.
    Inconclusive { depth: usize },
}

impl RelativeWFOutcome {
    pub fn filtration(&self) -> Option<&Filtration> {
        match self {
            RelativeWFOutcome::Exists { filtration, .. } => Some(filtration),
            _ => None,
        }
    }
}

/// Decides existence of the relative weight filtration where possible.
///
/// Non-existence is only ever certified when the candidate is forced;
/// exhausting the search returns [`RelativeWFOutcome::Inconclusive`].
pub fn construct_relative(
    n: &NilpotentOperator,
    w: &Filtration,
    depth: usize,
) -> Result<RelativeWFOutcome> {
    let graded = graded_operators(n, w)?;

    if w.check_preserved(&n.matrix, -2).is_ok() {
        return Ok(RelativeWFOutcome::Exists {
            filtration: w.clone(),
            route: Route::Strict,
        });
    }
    if w.jumps().len() == 1 {
        let (&m, _) = w.jumps().iter().next().expect("one jump");
        return Ok(RelativeWFOutcome::Exists {
            filtration: monodromy_filtration(n, m),
            route: Route::SingleWeight,
        });
    }
    if graded.values().all(NilpotentOperator::is_zero) {
        match verify_relative(n, w, w)? {
            Ok(()) => {
                return Ok(RelativeWFOutcome::Exists {
                    filtration: w.clone(),
                    route: Route::Forced,
                })
            }
            Err(RelativeViolation::Shift { k, witness }) => {
                return Ok(RelativeWFOutcome::CertifiedNonexistent {
                    k,
                    witness,
                    candidate: w.clone(),
                })
            }
            // M = W always satisfies the graded clause here.
            Err(RelativeViolation::Graded { .. }) => {}
        }
    }
    search(n, w, &graded, depth)
}

/// Pullbacks to `W_m` of the local monodromy filtrations on each `Gr^W_m`.
struct LocalTargets {
    pieces: Vec<(Subquotient, Filtration)>,
    lo: i64,
    hi: i64,
}

impl LocalTargets {
    fn new(w: &Filtration, graded: &BTreeMap<i64, NilpotentOperator>) -> Result<Self> {
        let mut pieces = Vec::new();
        for (&weight, nm) in graded {
            let sq = Subquotient::new(&w.step(weight), &w.step(weight - 1))?;
            pieces.push((sq, monodromy_filtration(nm, weight)));
        }
        let (lo, hi) = span_of(pieces.iter().map(|(_, f)| f.window()));
        Ok(LocalTargets { pieces, lo, hi })
    }

    /// Whether `x` induces the required step `k` on every graded piece.
    fn matches(&self, x: &Subspace, k: i64) -> Result<bool> {
        for (sq, local) in &self.pieces {
            let induced = x.intersection(sq.sub())?.sum(sq.smaller())?;
            if induced != sq.pullback(&local.step(k))? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn search(
    n: &NilpotentOperator,
    w: &Filtration,
    graded: &BTreeMap<i64, NilpotentOperator>,
    depth: usize,
) -> Result<RelativeWFOutcome> {
    let dim = n.dim();
    let targets = LocalTargets::new(w, graded)?;

    let mut lattice: BTreeSet<Subspace> = BTreeSet::new();
    lattice.insert(Subspace::zero(dim));
    lattice.insert(Subspace::full(dim));
    lattice.extend(w.jumps().values().cloned());
    for (sq, local) in &targets.pieces {
        for s in local.jumps().values() {
            lattice.insert(sq.pullback(s)?);
        }
    }
    for _ in 0..depth {
        let current: Vec<Subspace> = lattice.iter().cloned().collect();
        let mut next = lattice.clone();
        for (i, a) in current.iter().enumerate() {
            next.insert(n.matrix.image_of(a)?);
            next.insert(n.matrix.preimage(a)?);
            for b in &current[i + 1..] {
                next.insert(a.sum(b)?);
                next.insert(a.intersection(b)?);
            }
            if next.len() > LATTICE_CAP {
                return Err(Error::LatticeOverflow(LATTICE_CAP));
            }
        }
        if next.len() == lattice.len() {
            break;
        }
        lattice = next;
    }

    // Below `lo` every step is 0 and from `hi` on every step is V.
    let (lo, hi) = (targets.lo, targets.hi);
    let mut options: Vec<Vec<&Subspace>> = Vec::new();
    for k in lo..hi {
        let mut fits = Vec::new();
        for x in &lattice {
            if targets.matches(x, k)? {
                fits.push(x);
            }
        }
        options.push(fits);
    }

    let mut chain: Vec<Subspace> = Vec::new();
    if let Some(found) = extend_chain(n, w, lo, hi, &options, &mut chain)? {
        return Ok(RelativeWFOutcome::Exists {
            filtration: found,
            route: Route::Search,
        });
    }
    Ok(RelativeWFOutcome::Inconclusive { depth })
}

fn extend_chain(
    n: &NilpotentOperator,
    w: &Filtration,
    lo: i64,
    hi: i64,
    options: &[Vec<&Subspace>],
    chain: &mut Vec<Subspace>,
) -> Result<Option<Filtration>> {
    let dim = n.dim();
    let i = chain.len();
    if i == options.len() {
        let steps = chain
            .iter()
            .cloned()
            .enumerate()
            .map(|(j, s)| (lo + j as i64, s))
            .chain([(hi, Subspace::full(dim))]);
        let candidate = Filtration::new(dim, steps)?;
        return Ok(verify_relative(n, w, &candidate)?
            .is_ok()
            .then_some(candidate));
    }
    for &x in &options[i] {
        if chain.last().is_some_and(|prev| !prev.is_subspace_of(x)) {
            continue;
        }
        let two_below = if i >= 2 {
            chain[i - 2].clone()
        } else {
            Subspace::zero(dim)
        };
        if !n.matrix.maps_into(x, &two_below) {
            continue;
        }
        chain.push(x.clone());
        if let Some(found) = extend_chain(n, w, lo, hi, options, chain)? {
            return Ok(Some(found));
        }
        chain.pop();
    }
    Ok(None)
}

/// `M_{-2} = im N + W_{-2}`, `M_{-1} = ker N + W_{-2}`, `M_0 = V` for `W`
/// with steps only at weights `-2` and `-1`, `N(W_{-2}) = 0` and `N² = 0`.
pub fn relative_wf_curve_formula(v: &FilteredSpace, n: &NilpotentOperator) -> Result<Filtration> {
    let w = v.filtration();
    n.check_dim(v.dim())?;
    if w.jumps().keys().any(|&k| k != -2 && k != -1) || (v.dim() > 0 && w.highest() != Some(-1)) {
        return Err(Error::Precondition(
            "W must have jumps only at -2 and -1, with W_{-1} = V".into(),
        ));
    }
    let bottom = w.step(-2);
    if !n.matrix.maps_into(&bottom, &Subspace::zero(v.dim())) {
        return Err(Error::Precondition("N must vanish on W_{-2}".into()));
    }
    if n.index > 1 {
        return Err(Error::Precondition("N must square to zero".into()));
    }
    Filtration::new(
        v.dim(),
        [
            (-2, n.matrix.image().sum(&bottom)?),
            (-1, n.matrix.kernel().sum(&bottom)?),
            (0, Subspace::full(v.dim())),
        ],
    )
}
