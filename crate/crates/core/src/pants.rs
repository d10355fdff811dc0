//! Pants decompositions as bipartite graphs, A-moves, and the homological
//! invariant of the handlebody a pants decomposition determines.
//!
//! Black vertices are pairs of pants and white vertices are curves (internal
//! whites) or boundary components (boundary whites). Each internal white
//! carries the class of its curve in `H_1` of the closed surface, a vector of
//! length `2g` in the coordinates `(a_1, b_1, ..., a_g, b_g)`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use itertools::Itertools;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::filtered::Filtration;
use crate::linalg::{int_vector, Subspace};
use crate::nilwf::monodromy_filtration;
use crate::surface::{picard_lefschetz, span_and_isotropy, CurveSystem, SurfaceModel};

use WhiteKind::{Boundary, Internal};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WhiteKind {
    Internal,
    Boundary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct White {
    pub id: String,
    pub kind: WhiteKind,
    /// Homology class; empty means zero.
    #[serde(default)]
    pub class: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PantsGraph {
    pub genus: usize,
    #[serde(default)]
    pub boundary: usize,
    pub blacks: Vec<String>,
    pub whites: Vec<White>,
    /// `(black, white)` pairs.
    pub edges: Vec<(String, String)>,
}

fn sign_normalize(mut v: Vec<i64>) -> Vec<i64> {
    if v.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
        v.iter_mut().for_each(|x| *x = -*x);
    }
    v
}

fn pants_relation_holds(classes: [&[i64]; 3]) -> bool {
    (0..8).any(|signs: u8| {
        (0..classes[0].len()).all(|i| {
            (0..3)
                .map(|j| {
                    let c = classes[j][i];
                    if signs >> j & 1 == 1 {
                        -c
                    } else {
                        c
                    }
                })
                .sum::<i64>()
                == 0
        })
    })
}

impl PantsGraph {
    pub fn surface(&self) -> SurfaceModel {
        SurfaceModel::new(self.genus, 0)
    }

    fn white_index(&self, id: &str) -> Option<usize> {
        self.whites.iter().position(|w| w.id == id)
    }

    fn black_index(&self, id: &str) -> Option<usize> {
        self.blacks.iter().position(|b| b == id)
    }

    /// The class of a white, with an empty class read as zero.
    pub fn class_of(&self, white: usize) -> Vec<i64> {
        let c = &self.whites[white].class;
        if c.is_empty() {
            vec![0; 2 * self.genus]
        } else {
            c.clone()
        }
    }

    /// Edge indices at each black, in edge order.
    fn half_edges_at(&self) -> Vec<Vec<usize>> {
        let mut at = vec![Vec::new(); self.blacks.len()];
        for (i, (b, _)) in self.edges.iter().enumerate() {
            if let Some(bi) = self.black_index(b) {
                at[bi].push(i);
            }
        }
        at
    }

    /// First Betti number `E - V + 1` of the graph.
    pub fn betti(&self) -> i64 {
        self.edges.len() as i64 - (self.blacks.len() + self.whites.len()) as i64 + 1
    }

    /// Internal whites as a curve system on the closed surface.
    pub fn curve_system(&self) -> CurveSystem {
        CurveSystem::new(
            self.whites
                .iter()
                .enumerate()
                .filter(|(_, w)| w.kind == WhiteKind::Internal)
                .map(|(i, w)| (w.id.clone(), self.class_of(i))),
        )
    }

    /// Checks every structural condition, reporting the first that fails.
    pub fn validate(&self) -> Result<()> {
        fn bad<T>(msg: String) -> Result<T> {
            Err(Error::InvalidPantsGraph(msg))
        }
        let (g, n) = (self.genus, self.boundary);

        let mut seen = BTreeSet::new();
        for id in self.blacks.iter().chain(self.whites.iter().map(|w| &w.id)) {
            if !seen.insert(id) {
                return bad(format!("duplicate vertex id {id:?}"));
            }
        }
        for (b, w) in &self.edges {
            if self.black_index(b).is_none() {
                return bad(format!("edge refers to unknown black {b:?}"));
            }
            if self.white_index(w).is_none() {
                return bad(format!("edge refers to unknown white {w:?}"));
            }
        }
        for (bi, at) in self.half_edges_at().iter().enumerate() {
            if at.len() != 3 {
                return bad(format!(
                    "black {:?} has valence {}, expected 3",
                    self.blacks[bi],
                    at.len()
                ));
            }
        }
        for w in &self.whites {
            let valence = self.edges.iter().filter(|(_, x)| *x == w.id).count();
            let expected = match w.kind {
                WhiteKind::Internal => 2,
                WhiteKind::Boundary => 1,
            };
            if valence != expected {
                return bad(format!(
                    "white {:?} has valence {valence}, expected {expected}",
                    w.id
                ));
            }
        }

        let internal = self
            .whites
            .iter()
            .filter(|w| w.kind == WhiteKind::Internal)
            .count();
        let boundary = self.whites.len() - internal;
        let (blacks, expect_internal) = ((2 * g + n) as i64 - 2, (3 * g + n) as i64 - 3);
        if self.blacks.len() as i64 != blacks || internal as i64 != expect_internal || boundary != n
        {
            return bad(format!(
                "counts (blacks {}, internal {internal}, boundary {boundary}) do not match \
                 genus {g} with {n} boundary components",
                self.blacks.len()
            ));
        }
        if !self.is_connected() {
            return bad("graph is not connected".into());
        }
        if self.betti() != g as i64 {
            return bad(format!(
                "first Betti number {} differs from genus {g}",
                self.betti()
            ));
        }

        for (i, w) in self.whites.iter().enumerate() {
            if !w.class.is_empty() && w.class.len() != 2 * g {
                return bad(format!(
                    "class of {:?} has length {}, expected {}",
                    w.id,
                    w.class.len(),
                    2 * g
                ));
            }
            if w.kind == WhiteKind::Boundary && self.class_of(i).iter().any(|&x| x != 0) {
                return bad(format!("boundary white {:?} has a nonzero class", w.id));
            }
        }
        let s = self.surface();
        self.curve_system()
            .validate(&s)
            .or_else(|e| bad(e.to_string()))?;

        for (bi, at) in self.half_edges_at().iter().enumerate() {
            let whites: Vec<usize> = at
                .iter()
                .map(|&e| self.white_index(&self.edges[e].1).expect("checked"))
                .collect();
            let classes: Vec<Vec<i64>> = whites.iter().map(|&w| self.class_of(w)).collect();
            if !pants_relation_holds([&classes[0], &classes[1], &classes[2]]) {
                return bad(format!(
                    "classes around black {:?} do not satisfy the pants relation",
                    self.blacks[bi]
                ));
            }
        }

        let info = span_and_isotropy(&s, &self.curve_system()).or_else(|e| bad(e.to_string()))?;
        if info.span.dim() != g {
            return bad(format!(
                "curve classes span a subspace of dimension {}, not a Lagrangian",
                info.span.dim()
            ));
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    fn is_connected(&self) -> bool {
        let total = self.blacks.len() + self.whites.len();
        if total == 0 {
            return true;
        }
        let index = |id: &str| {
            self.black_index(id)
                .or_else(|| self.white_index(id).map(|w| self.blacks.len() + w))
        };
        let mut adj = vec![Vec::new(); total];
        for (b, w) in &self.edges {
            let (Some(x), Some(y)) = (index(b), index(w)) else {
                continue;
            };
            adj[x].push(y);
            adj[y].push(x);
        }
        let mut seen = vec![false; total];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Labeled-isomorphism class: white ids are forgotten, classes are
    /// compared up to sign, and black labels are canonicalized.
    pub fn canonical_form(&self) -> CanonicalForm {
        let at_white: Vec<Vec<usize>> = self
            .whites
            .iter()
            .map(|w| {
                self.edges
                    .iter()
                    .filter(|(_, x)| *x == w.id)
                    .filter_map(|(b, _)| self.black_index(b))
                    .collect()
            })
            .collect();
        let classes: Vec<Vec<i64>> = (0..self.whites.len())
            .map(|i| sign_normalize(self.class_of(i)))
            .collect();
        (0..self.blacks.len())
            .permutations(self.blacks.len())
            .map(|perm| {
                let mut whites: Vec<(WhiteKind, Vec<i64>, Vec<usize>)> = self
                    .whites
                    .iter()
                    .enumerate()
                    .map(|(i, w)| {
                        let mut ends: Vec<usize> = at_white[i].iter().map(|&b| perm[b]).collect();
                        ends.sort_unstable();
                        (w.kind, classes[i].clone(), ends)
                    })
                    .collect();
                whites.sort();
                whites
            })
            .min()
            .map(|whites| CanonicalForm {
                genus: self.genus,
                whites,
            })
            .unwrap_or(CanonicalForm {
                genus: self.genus,
                whites: Vec::new(),
            })
    }

    pub fn is_isomorphic(&self, other: &PantsGraph) -> bool {
        self.canonical_form() == other.canonical_form()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    genus: usize,
    whites: Vec<(WhiteKind, Vec<i64>, Vec<usize>)>,
}

/// How the four legs around an internal white are re-paired. The white's
/// first edge goes to black `B1` with legs `x1, x2`, its second to `B2` with
/// legs `y1, y2`, each in edge order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pairing {
    /// `{x1, y1} | {x2, y2}`.
    Cross,
    /// `{x1, y2} | {x2, y1}`.
    Twist,
}

impl Pairing {
    pub const ALL: [Pairing; 2] = [Pairing::Cross, Pairing::Twist];
}

/// The white being replaced, the leg reassignments, and the legs (edge
/// indices) that end up next to `B1` after the re-pairing.
struct MoveSite {
    white: usize,
    /// `(edge, new black)` reassignments.
    moves: [(usize, String); 2],
    /// Legs at `B1` after the move.
    new_legs_b1: [usize; 2],
}

fn move_site(pg: &PantsGraph, white: &str, pairing: Pairing) -> Result<MoveSite> {
    let illegal = |msg: String| Err(Error::IllegalMove(msg));
    let Some(wi) = pg.white_index(white) else {
        return illegal(format!("no white {white:?}"));
    };
    if pg.whites[wi].kind != WhiteKind::Internal {
        return illegal(format!("{white:?} is a boundary white"));
    }
    let ends: Vec<usize> = (0..pg.edges.len())
        .filter(|&e| pg.edges[e].1 == white)
        .collect();
    if ends.len() != 2 {
        return illegal(format!("{white:?} does not have valence 2"));
    }
    let (b1, b2) = (pg.edges[ends[0]].0.clone(), pg.edges[ends[1]].0.clone());
    if b1 == b2 {
        return illegal(format!(
            "{white:?} is a loop at {b1:?}; there is no four-holed sphere to move in"
        ));
    }
    let legs = |b: &str, own: usize| -> Vec<usize> {
        (0..pg.edges.len())
            .filter(|&e| e != own && pg.edges[e].0 == b)
            .collect()
    };
    let (xs, ys) = (legs(&b1, ends[0]), legs(&b2, ends[1]));
    if xs.len() != 2 || ys.len() != 2 {
        return illegal("endpoints of the white are not trivalent".into());
    }
    let to_b1 = match pairing {
        Pairing::Cross => ys[0],
        Pairing::Twist => ys[1],
    };
    Ok(MoveSite {
        white: wi,
        moves: [(to_b1, b1), (xs[1], b2)],
        new_legs_b1: [xs[0], to_b1],
    })
}

/// Replaces the curve `white` inside the four-holed sphere formed by its two
/// pairs of pants, re-pairing the four legs and giving the new curve
/// `new_class`.
pub fn a_move(
    pg: &PantsGraph,
    white: &str,
    pairing: Pairing,
    new_class: &[i64],
) -> Result<PantsGraph> {
    pg.validate()?;
    let site = move_site(pg, white, pairing)?;
    if new_class.len() != 2 * pg.genus {
        return Err(Error::IllegalMove(format!(
            "new class has length {}, expected {}",
            new_class.len(),
            2 * pg.genus
        )));
    }
    let s = pg.surface();
    let new_vec = int_vector(new_class);
    for (i, _) in pg
        .whites
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != site.white)
    {
        if !s.pairing(&int_vector(&pg.class_of(i)), &new_vec).is_zero() {
            return Err(Error::IllegalMove(format!(
                "new class meets the class of {:?}",
                pg.whites[i].id
            )));
        }
    }
    let old_span = span_and_isotropy(&s, &pg.curve_system())?.span;
    if !old_span.contains(&new_vec) {
        return Err(Error::IllegalMove(
            "new class is not in the span of the old classes".into(),
        ));
    }

    let mut out = pg.clone();
    for (e, black) in &site.moves {
        out.edges[*e].0 = black.clone();
    }
    out.whites[site.white].class = new_class.to_vec();
    out.validate()
        .map_err(|e| Error::IllegalMove(format!("result is not a pants graph: {e}")))?;
    Ok(out)
}

/// Classes the new curve can take so that the pants relation holds at `B1`.
pub fn candidate_classes(pg: &PantsGraph, white: &str, pairing: Pairing) -> Result<Vec<Vec<i64>>> {
    let site = move_site(pg, white, pairing)?;
    let class_of_edge = |e: usize| {
        let wi = pg.white_index(&pg.edges[e].1).expect("validated edge");
        pg.class_of(wi)
    };
    let (p, q) = (
        class_of_edge(site.new_legs_b1[0]),
        class_of_edge(site.new_legs_b1[1]),
    );
    let sum: Vec<i64> = p.iter().zip(&q).map(|(a, b)| a + b).collect();
    let diff: Vec<i64> = p.iter().zip(&q).map(|(a, b)| a - b).collect();
    let mut out: Vec<Vec<i64>> = [sum, diff].into_iter().map(sign_normalize).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Every valid A-move out of `pg`, in a deterministic order.
pub fn a_move_neighbors(pg: &PantsGraph) -> Vec<PantsGraph> {
    let mut out = Vec::new();
    for w in pg.whites.iter().filter(|w| w.kind == WhiteKind::Internal) {
        for pairing in Pairing::ALL {
            let Ok(cands) = candidate_classes(pg, &w.id, pairing) else {
                continue;
            };
            for c in cands {
                if let Ok(next) = a_move(pg, &w.id, pairing, &c) {
                    out.push(next);
                }
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reachability {
    Reachable { moves: usize },
    NotWithinBound,
}

/// Breadth-first search over A-moves, comparing graphs up to labeled
/// isomorphism.
pub fn a_move_reachable(pg1: &PantsGraph, pg2: &PantsGraph, bound: usize) -> Result<Reachability> {
    pg1.validate()?;
    pg2.validate()?;
    if (pg1.genus, pg1.boundary) != (pg2.genus, pg2.boundary) {
        return Err(Error::Precondition(
            "graphs describe different surfaces".into(),
        ));
    }
    let target = pg2.canonical_form();
    let mut frontier: BTreeMap<CanonicalForm, PantsGraph> =
        BTreeMap::from([(pg1.canonical_form(), pg1.clone())]);
    let mut visited: BTreeSet<CanonicalForm> = frontier.keys().cloned().collect();
    for moves in 0..=bound {
        if frontier.contains_key(&target) {
            return Ok(Reachability::Reachable { moves });
        }
        if moves == bound {
            break;
        }
        let mut next = BTreeMap::new();
        for pg in frontier.values() {
            for n in a_move_neighbors(pg) {
                let key = n.canonical_form();
                if visited.insert(key.clone()) {
                    next.insert(key, n);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    Ok(Reachability::NotWithinBound)
}

/// The span of the curve classes together with the monodromy filtration of
/// their Picard–Lefschetz operator on `H_1`, centered at `-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HandlebodyInvariant {
    pub span: Subspace,
    pub filtration: Filtration,
}

pub fn handlebody_invariant(pg: &PantsGraph) -> Result<HandlebodyInvariant> {
    pg.validate()?;
    let s = pg.surface();
    let cs = pg.curve_system();
    let n = picard_lefschetz(&s, &cs)?;
    Ok(HandlebodyInvariant {
        span: span_and_isotropy(&s, &cs)?.span,
        filtration: monodromy_filtration(&n, -1),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Edit {
    Insert { label: String, class: Vec<i64> },
    Delete { label: String },
}

/// Inserts or deletes a curve, rejecting edits that change the span of the
/// classes in `H_1` of the closed surface.
pub fn homology_neutral_edit(
    s: &SurfaceModel,
    cs: &CurveSystem,
    edit: &Edit,
) -> Result<CurveSystem> {
    let before = span_and_isotropy(s, cs)?.span;
    let mut curves: Vec<(String, Vec<i64>)> = cs
        .labels()
        .iter()
        .cloned()
        .zip(cs.classes().iter().cloned())
        .collect();
    match edit {
        Edit::Insert { label, class } => curves.push((label.clone(), class.clone())),
        Edit::Delete { label } => {
            let Some(i) = curves.iter().position(|(l, _)| l == label) else {
                return Err(Error::Precondition(format!("no curve labelled {label:?}")));
            };
            curves.remove(i);
        }
    }
    let edited = CurveSystem::new(curves);
    if span_and_isotropy(s, &edited)?.span != before {
        return Err(Error::SpanChanged);
    }
    Ok(edited)
}

/// Elementary moves between pants decompositions. Only A-moves are
/// implemented; an S-move is recorded as the move that changes the
/// handlebody.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ElementaryMove {
    A,
    S,
}

impl ElementaryMove {
    pub fn preserves_handlebody(self) -> bool {
        matches!(self, ElementaryMove::A)
    }
}

fn graph(
    genus: usize,
    blacks: &[&str],
    whites: &[(&str, WhiteKind, Vec<i64>)],
    edges: &[(&str, &str)],
) -> PantsGraph {
    PantsGraph {
        genus,
        boundary: whites.iter().filter(|w| w.1 == WhiteKind::Boundary).count(),
        blacks: blacks.iter().map(|b| b.to_string()).collect(),
        whites: whites
            .iter()
            .map(|(id, kind, class)| White {
                id: id.to_string(),
                kind: *kind,
                class: class.clone(),
            })
            .collect(),
        edges: edges
            .iter()
            .map(|(b, w)| (b.to_string(), w.to_string()))
            .collect(),
    }
}

/// Unit vector for `a_i` (`b = false`) or `b_i` (`b = true`) in genus `g`,
/// summed over the given terms with coefficients.
fn class(g: usize, terms: &[(i64, char, usize)]) -> Vec<i64> {
    let mut v = vec![0; 2 * g];
    for &(c, kind, i) in terms {
        let idx = 2 * (i - 1) + usize::from(kind == 'b');
        v[idx] += c;
    }
    v
}

/// Genus 2: two pants glued along three curves.
pub fn theta(classes: [Vec<i64>; 3]) -> PantsGraph {
    let [u, v, w] = classes;
    graph(
        2,
        &["p", "q"],
        &[("u", Internal, u), ("v", Internal, v), ("w", Internal, w)],
        &[
            ("p", "u"),
            ("q", "u"),
            ("p", "v"),
            ("q", "v"),
            ("p", "w"),
            ("q", "w"),
        ],
    )
}

/// Genus 2: a loop at each pair of pants and a separating curve between.
pub fn dumbbell(left: Vec<i64>, right: Vec<i64>) -> PantsGraph {
    graph(
        2,
        &["p", "q"],
        &[
            ("l", Internal, left),
            ("s", Internal, vec![0; 4]),
            ("r", Internal, right),
        ],
        &[
            ("p", "l"),
            ("p", "l"),
            ("p", "s"),
            ("q", "s"),
            ("q", "r"),
            ("q", "r"),
        ],
    )
}

/// Genus 3: loop, separating curve, a pair of parallel curves, separating
/// curve, loop.
pub fn genus3_chain(c1: Vec<i64>, c2: Vec<i64>, c3: Vec<i64>) -> PantsGraph {
    graph(
        3,
        &["p", "q", "r", "t"],
        &[
            ("l", Internal, c1),
            ("s1", Internal, vec![0; 6]),
            ("x", Internal, c2.clone()),
            ("y", Internal, c2),
            ("s2", Internal, vec![0; 6]),
            ("m", Internal, c3),
        ],
        &[
            ("p", "l"),
            ("p", "l"),
            ("p", "s1"),
            ("q", "s1"),
            ("q", "x"),
            ("q", "y"),
            ("r", "x"),
            ("r", "y"),
            ("r", "s2"),
            ("t", "s2"),
            ("t", "m"),
            ("t", "m"),
        ],
    )
}

/// Genus 3: a central pair of pants joined by separating curves to three
/// pants each carrying a loop.
pub fn genus3_tripod(c1: Vec<i64>, c2: Vec<i64>, c3: Vec<i64>) -> PantsGraph {
    let z = vec![0; 6];
    graph(
        3,
        &["o", "p", "q", "r"],
        &[
            ("s1", Internal, z.clone()),
            ("s2", Internal, z.clone()),
            ("s3", Internal, z),
            ("l1", Internal, c1),
            ("l2", Internal, c2),
            ("l3", Internal, c3),
        ],
        &[
            ("o", "s1"),
            ("o", "s2"),
            ("o", "s3"),
            ("p", "s1"),
            ("p", "l1"),
            ("p", "l1"),
            ("q", "s2"),
            ("q", "l2"),
            ("q", "l2"),
            ("r", "s3"),
            ("r", "l3"),
            ("r", "l3"),
        ],
    )
}

/// Genus 3: four pants glued along the six edges of a tetrahedron. The
/// chords `23`, `34`, `42` carry `c1`, `c2`, `c3`; the spokes from pants 1
/// carry the differences forced by the pants relations.
pub fn genus3_tetrahedron(c1: Vec<i64>, c2: Vec<i64>, c3: Vec<i64>) -> PantsGraph {
    let diff = |x: &[i64], y: &[i64]| x.iter().zip(y).map(|(a, b)| a - b).collect::<Vec<_>>();
    graph(
        3,
        &["1", "2", "3", "4"],
        &[
            ("e12", Internal, diff(&c1, &c3)),
            ("e13", Internal, diff(&c2, &c1)),
            ("e14", Internal, diff(&c3, &c2)),
            ("e23", Internal, c1),
            ("e34", Internal, c2),
            ("e42", Internal, c3),
        ],
        &[
            ("1", "e12"),
            ("2", "e12"),
            ("1", "e13"),
            ("3", "e13"),
            ("1", "e14"),
            ("4", "e14"),
            ("2", "e23"),
            ("3", "e23"),
            ("3", "e34"),
            ("4", "e34"),
            ("4", "e42"),
            ("2", "e42"),
        ],
    )
}

/// Genus 2 with one boundary component: the dumbbell with a pair of pants
/// containing the boundary inserted on the separating curve.
pub fn dumbbell_with_boundary(left: Vec<i64>, right: Vec<i64>) -> PantsGraph {
    let z = vec![0; 4];
    graph(
        2,
        &["p", "q", "m"],
        &[
            ("l", Internal, left),
            ("s1", Internal, z.clone()),
            ("s2", Internal, z),
            ("r", Internal, right),
            ("d", Boundary, vec![]),
        ],
        &[
            ("p", "l"),
            ("p", "l"),
            ("p", "s1"),
            ("m", "s1"),
            ("m", "d"),
            ("m", "s2"),
            ("q", "s2"),
            ("q", "r"),
            ("q", "r"),
        ],
    )
}

/// A named collection of valid genus-2 and genus-3 pants graphs.
pub fn catalog() -> Vec<(&'static str, PantsGraph)> {
    let c2 = |t: &[(i64, char, usize)]| class(2, t);
    let c3 = |t: &[(i64, char, usize)]| class(3, t);
    vec![
        (
            "theta-a",
            theta([
                c2(&[(1, 'a', 1)]),
                c2(&[(1, 'a', 2)]),
                c2(&[(1, 'a', 1), (1, 'a', 2)]),
            ]),
        ),
        (
            "theta-a-difference",
            theta([
                c2(&[(1, 'a', 1)]),
                c2(&[(1, 'a', 2)]),
                c2(&[(1, 'a', 1), (-1, 'a', 2)]),
            ]),
        ),
        (
            "theta-a-skew",
            theta([
                c2(&[(1, 'a', 1), (1, 'a', 2)]),
                c2(&[(1, 'a', 2)]),
                c2(&[(1, 'a', 1), (2, 'a', 2)]),
            ]),
        ),
        (
            "theta-b",
            theta([
                c2(&[(1, 'b', 1)]),
                c2(&[(1, 'b', 2)]),
                c2(&[(1, 'b', 1), (1, 'b', 2)]),
            ]),
        ),
        (
            "dumbbell-a",
            dumbbell(c2(&[(1, 'a', 1)]), c2(&[(1, 'a', 2)])),
        ),
        (
            "dumbbell-b",
            dumbbell(c2(&[(1, 'b', 1)]), c2(&[(1, 'b', 2)])),
        ),
        (
            "dumbbell-mixed",
            dumbbell(c2(&[(1, 'a', 1)]), c2(&[(1, 'b', 2)])),
        ),
        (
            "dumbbell-boundary",
            dumbbell_with_boundary(c2(&[(1, 'a', 1)]), c2(&[(1, 'a', 2)])),
        ),
        (
            "chain-a",
            genus3_chain(c3(&[(1, 'a', 1)]), c3(&[(1, 'a', 2)]), c3(&[(1, 'a', 3)])),
        ),
        (
            "chain-b",
            genus3_chain(c3(&[(1, 'b', 1)]), c3(&[(1, 'b', 2)]), c3(&[(1, 'b', 3)])),
        ),
        (
            "tripod-a",
            genus3_tripod(c3(&[(1, 'a', 1)]), c3(&[(1, 'a', 2)]), c3(&[(1, 'a', 3)])),
        ),
        (
            "tetrahedron-a",
            genus3_tetrahedron(c3(&[(1, 'a', 1)]), c3(&[(1, 'a', 2)]), c3(&[(1, 'a', 3)])),
        ),
        (
            "tetrahedron-mixed",
            genus3_tetrahedron(c3(&[(1, 'a', 1)]), c3(&[(1, 'b', 2)]), c3(&[(1, 'a', 3)])),
        ),
    ]
}
