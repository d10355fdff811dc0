//! Exact linear algebra over the rationals.
//!
//! Vectors are plain `Vec<Scalar>`; matrices act on column vectors. Subspaces
//! are stored as reduced row-echelon bases, so two subspaces are equal exactly
//! when their stored bases are equal.

mod matrix;
mod subquotient;
mod subspace;

pub use matrix::LinearMap;
pub use subquotient::{induce_on_subquotient, Subquotient};
pub use subspace::{image_kernel_preimage, meet_join, Subspace};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// An exact rational number. `BigRational` keeps numerator and denominator
/// coprime with a positive denominator.
pub type Scalar = num_rational::BigRational;

pub type Vector = Vec<Scalar>;

pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

pub fn zero_vector(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Scalar::one();
    v
}

pub fn int_vector(v: &[i64]) -> Vector {
    v.iter().map(|&x| int(x)).collect()
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Scalar::new(p, q))
        }
        None => Ok(Scalar::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Formats as `"p"` for integers, `"p/q"` otherwise.
pub fn format_scalar(x: &Scalar) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Reduced row-echelon form of `rows` (each of length `ncols`). Zero rows are
/// dropped; the second component lists the pivot column of each returned row.
pub(crate) fn rref(mut rows: Vec<Vector>, ncols: usize) -> (Vec<Vector>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, found);
        let inv = rows[r][col].recip();
        if !inv.is_one() {
            for x in rows[r].iter_mut().skip(col) {
                *x *= &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Basis of `{x : row · x = 0 for every row}`.
pub(crate) fn nullspace(rows: Vec<Vector>, ncols: usize) -> Vec<Vector> {
    let (reduced, pivots) = rref(rows, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = zero_vector(ncols);
            v[free] = Scalar::one();
            for (row, &p) in reduced.iter().zip(&pivots) {
                v[p] = -row[free].clone();
            }
            v
        })
        .collect()
}
