//! Random generators and independent oracles shared by the integration tests.
//! Nothing here calls into the library's elimination routines.
#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeMap;

use nilweight::filtered::{FilteredSpace, Filtration};
use nilweight::linalg::{int_vector, LinearMap, Scalar, Subspace};
use nilweight::nilwf::NilpotentOperator;
use nilweight::surface::{CurveSystem, SurfaceModel};
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type Mat = Vec<Vec<i64>>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn to_map(m: &Mat) -> LinearMap {
    let rows: Vec<&[i64]> = m.iter().map(|r| r.as_slice()).collect();
    LinearMap::from_i64(&rows)
}

fn identity(d: usize) -> Mat {
    (0..d)
        .map(|i| (0..d).map(|j| i64::from(i == j)).collect())
        .collect()
}

fn mul(a: &Mat, b: &Mat) -> Mat {
    let d = b[0].len();
    a.iter()
        .map(|r| {
            (0..d)
                .map(|j| r.iter().zip(b).map(|(x, row)| x * row[j]).sum())
                .collect()
        })
        .collect()
}

/// A random unimodular matrix together with its inverse, built from
/// elementary row operations and a permutation.
pub fn unimodular(rng: &mut ChaCha8Rng, d: usize) -> (Mat, Mat) {
    let mut p = identity(d);
    let mut q = identity(d);
    if d < 2 {
        return (p, q);
    }
    for _ in 0..2 * d {
        let i = rng.gen_range(0..d);
        let mut j = rng.gen_range(0..d - 1);
        if j >= i {
            j += 1;
        }
        let c = [-1, 1, 2, -2][rng.gen_range(0..4)];
        // p ← E p with E = I + c e_ij; q ← q E⁻¹
        for k in 0..d {
            p[i][k] += c * p[j][k];
        }
        for row in q.iter_mut() {
            row[j] -= c * row[i];
        }
    }
    let mut perm: Vec<usize> = (0..d).collect();
    perm.shuffle(rng);
    let p: Mat = perm.iter().map(|&i| p[i].clone()).collect();
    let q: Mat = q
        .iter()
        .map(|r| perm.iter().map(|&i| r[i]).collect())
        .collect();
    (p, q)
}

/// `P U P⁻¹` for a random strictly upper-triangular `U`.
pub fn random_nilpotent(rng: &mut ChaCha8Rng, d: usize) -> NilpotentOperator {
    let density = rng.gen_range(0.15..0.9);
    let mut u = vec![vec![0i64; d]; d];
    for (i, row) in u.iter_mut().enumerate() {
        for x in row.iter_mut().skip(i + 1) {
            if rng.gen_bool(density) {
                *x = rng.gen_range(-2..=2);
            }
        }
    }
    let (p, q) = unimodular(rng, d);
    NilpotentOperator::new(to_map(&mul(&mul(&p, &u), &q))).unwrap()
}

/// A filtration given by an adapted basis (columns of a unimodular matrix)
/// with nondecreasing weights.
pub struct AdaptedFlag {
    pub basis: Mat,
    pub inverse: Mat,
    pub weights: Vec<i64>,
}

impl AdaptedFlag {
    pub fn random(rng: &mut ChaCha8Rng, d: usize, spread: i64) -> Self {
        let (basis, inverse) = unimodular(rng, d);
        let mut weights: Vec<i64> = (0..d).map(|_| rng.gen_range(-spread..=spread)).collect();
        weights.sort();
        AdaptedFlag {
            basis,
            inverse,
            weights,
        }
    }

    pub fn column(&self, i: usize) -> Vec<i64> {
        self.basis.iter().map(|r| r[i]).collect()
    }

    pub fn filtration(&self) -> Filtration {
        let d = self.weights.len();
        let mut steps = Vec::new();
        let mut distinct = self.weights.clone();
        distinct.dedup();
        for &w in &distinct {
            let cols = (0..d)
                .filter(|&i| self.weights[i] <= w)
                .map(|i| int_vector(&self.column(i)))
                .collect();
            steps.push((w, Subspace::span(d, cols).unwrap()));
        }
        if d == 0 {
            return Filtration::concentrated(0, 0);
        }
        Filtration::new(d, steps).unwrap()
    }

    /// A random operator with `N v_i ∈ span{v_j : w_j ≤ w_i - drop}`.
    pub fn lowering_operator(&self, rng: &mut ChaCha8Rng, drop: i64) -> LinearMap {
        let d = self.weights.len();
        let mut u = vec![vec![0i64; d]; d];
        for i in 0..d {
            for j in 0..d {
                if self.weights[j] <= self.weights[i] - drop && rng.gen_bool(0.6) {
                    u[j][i] = rng.gen_range(-2..=2);
                }
            }
        }
        to_map(&mul(&mul(&self.basis, &u), &self.inverse))
    }

    /// A random operator that is strictly upper triangular in the adapted
    /// basis, hence nilpotent and preserving the filtration.
    pub fn preserving_nilpotent(&self, rng: &mut ChaCha8Rng) -> NilpotentOperator {
        let d = self.weights.len();
        let mut u = vec![vec![0i64; d]; d];
        for (j, row) in u.iter_mut().enumerate() {
            for x in row.iter_mut().skip(j + 1) {
                if rng.gen_bool(0.5) {
                    *x = rng.gen_range(-2..=2);
                }
            }
        }
        NilpotentOperator::new(to_map(&mul(&mul(&self.basis, &u), &self.inverse))).unwrap()
    }
}

pub fn random_filtered_space(rng: &mut ChaCha8Rng, dmax: usize) -> FilteredSpace {
    let d = rng.gen_range(1..=dmax);
    FilteredSpace::new(AdaptedFlag::random(rng, d, 2).filtration())
}

/// Rank over ℚ by plain Gaussian elimination on rationals.
pub fn rank(rows: &[Vec<Scalar>]) -> usize {
    let mut m: Vec<Vec<Scalar>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in r + 1..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &pivot;
            for k in c..cols {
                let t = &f * &m[r][k];
                m[i][k] -= t;
            }
        }
        r += 1;
    }
    r
}

pub fn map_rank(m: &LinearMap) -> usize {
    rank(&m.to_rows())
}

/// `dim(A ∩ B) = dim A + dim B - dim(A + B)`.
pub fn meet_dim(a: &Subspace, b: &Subspace) -> usize {
    let stacked: Vec<Vec<Scalar>> = a.basis().iter().chain(b.basis()).cloned().collect();
    a.dim() + b.dim() - rank(&stacked)
}

/// Gr dims of the weight filtration predicted from ranks of powers: with
/// `r_k = rank N^k`, there are `r_{k-1} - 2 r_k + r_{k+1}` Jordan blocks of
/// size `k`, each contributing weights `1-k, 3-k, ..., k-1`.
pub fn jordan_gr_dims(n: &LinearMap) -> BTreeMap<i64, usize> {
    let d = n.rows();
    let mut ranks = vec![d as i64];
    let mut power = LinearMap::identity(d);
    while *ranks.last().unwrap() > 0 {
        power = power.compose(n).unwrap();
        ranks.push(map_rank(&power) as i64);
    }
    ranks.push(0);
    let mut dims = BTreeMap::new();
    for k in 1..ranks.len() - 1 {
        let blocks = ranks[k - 1] - 2 * ranks[k] + ranks[k + 1];
        for step in 0..k as i64 {
            let w = 1 - k as i64 + 2 * step;
            *dims.entry(w).or_insert(0) += blocks as usize;
        }
    }
    dims.retain(|_, v| *v > 0);
    dims
}

pub fn convolve(a: &BTreeMap<i64, usize>, b: &BTreeMap<i64, usize>) -> BTreeMap<i64, usize> {
    let mut out = BTreeMap::new();
    for (i, x) in a {
        for (j, y) in b {
            *out.entry(i + j).or_insert(0) += x * y;
        }
    }
    out
}

pub fn negate(a: &BTreeMap<i64, usize>) -> BTreeMap<i64, usize> {
    a.iter().map(|(k, v)| (-k, *v)).collect()
}

/// `dim Gr^F_a Gr^G_b` from intersection dimensions.
pub fn bigraded_oracle(f: &Filtration, g: &Filtration) -> BTreeMap<(i64, i64), usize> {
    let d = |a: i64, b: i64| meet_dim(&f.step(a), &g.step(b)) as i64;
    let mut out = BTreeMap::new();
    let (flo, fhi) = f.window().unwrap();
    let (glo, ghi) = g.window().unwrap();
    for a in flo..=fhi {
        for b in glo..=ghi {
            let v = d(a, b) - d(a - 1, b) - d(a, b - 1) + d(a - 1, b - 1);
            if v != 0 {
                out.insert((a, b), v as usize);
            }
        }
    }
    out
}

/// Number of semistandard tableaux of the given shape with entries in
/// `1..=g`, by enumerating rows.
pub fn ssyt_count(shape: &[usize], g: usize) -> u64 {
    fn rows(len: usize, g: usize) -> Vec<Vec<usize>> {
        fn go(len: usize, lo: usize, g: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == len {
                out.push(cur.clone());
                return;
            }
            for x in lo..=g {
                cur.push(x);
                go(len, x, g, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(len, 1, g, &mut Vec::new(), &mut out);
        out
    }
    fn count(shape: &[usize], above: Option<&[usize]>, table: &[Vec<Vec<usize>>]) -> u64 {
        let Some((_, rest)) = shape.split_first() else {
            return 1;
        };
        let candidates = &table[0];
        let mut total = 0;
        for row in candidates {
            if let Some(up) = above {
                if row.iter().zip(up).any(|(x, y)| x <= y) {
                    continue;
                }
            }
            total += count(rest, Some(row), &table[1..]);
        }
        total
    }
    let table: Vec<Vec<Vec<usize>>> = shape.iter().map(|&l| rows(l, g)).collect();
    count(shape, None, &table)
}

/// Lyndon words of length exactly `m` over `r` letters, by Duval's
/// generation algorithm.
pub fn lyndon_count(r: usize, m: usize) -> u64 {
    let mut w: Vec<usize> = vec![0];
    let mut count = 0;
    loop {
        if w.len() == m {
            count += 1;
        }
        let base = w.clone();
        while w.len() < m {
            w.push(base[w.len() % base.len()]);
        }
        while w.last() == Some(&(r - 1)) {
            w.pop();
        }
        let Some(last) = w.last_mut() else {
            return count;
        };
        *last += 1;
    }
}

pub fn pair(s: &SurfaceModel, x: &[i64], y: &[i64]) -> i64 {
    let p = s.pairing(&int_vector(x), &int_vector(y));
    assert!(p.is_integer());
    i64::try_from(p.to_integer()).unwrap()
}

/// Stable `(g, n)` with `1 ≤ g ≤ 3`, `n ≤ 3`, and a random valid curve
/// system on it.
pub fn random_curve_system(rng: &mut ChaCha8Rng) -> (SurfaceModel, CurveSystem) {
    let (g, n) = loop {
        let g = rng.gen_range(1..=3usize);
        let n = rng.gen_range(0..=3usize);
        if SurfaceModel::new(g, n).is_stable() {
            break (g, n);
        }
    };
    let s = SurfaceModel::new(g, n);
    let cs = random_classes(rng, &s);
    (s, cs)
}

/// Integer combinations of the `a_i` plus puncture parts, moved by a few
/// symplectic transvections `x ↦ x + ⟨v, x⟩ v`.
pub fn random_classes(rng: &mut ChaCha8Rng, s: &SurfaceModel) -> CurveSystem {
    let (g, d) = (s.genus(), s.dim());
    let count = rng.gen_range(1..=g + 1);
    let mut classes: Vec<Vec<i64>> = Vec::new();
    while classes.len() < count {
        let mut c = vec![0i64; d];
        for i in 0..g {
            c[2 * i] = rng.gen_range(-2..=2);
        }
        for x in c.iter_mut().skip(2 * g) {
            *x = rng.gen_range(-1..=1);
        }
        let gcd = c.iter().fold(0i64, |a, &b| num_integer::gcd(a, b));
        if gcd == 0 {
            continue;
        }
        classes.push(c.iter().map(|x| x / gcd).collect());
    }
    for _ in 0..rng.gen_range(0..=3) {
        let v: Vec<i64> = (0..d).map(|_| rng.gen_range(-1..=1)).collect();
        for c in classes.iter_mut() {
            let t = pair(s, &v, c);
            for (x, y) in c.iter_mut().zip(&v) {
                *x += t * y;
            }
        }
    }
    CurveSystem::new(
        classes
            .into_iter()
            .enumerate()
            .map(|(i, c)| (format!("c{i}"), c)),
    )
}
