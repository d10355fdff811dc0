//! Dimension arithmetic for free Lie algebras and `gl_g` representations.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// A partition with weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Precondition(format!(
                "{parts:?} is not a partition: parts must be positive and weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    /// `[k, k]`.
    pub fn kk(k: u32) -> Self {
        Partition(vec![k, k])
    }

    /// `[k, k, 1]`.
    pub fn kk1(k: u32) -> Self {
        Partition(vec![k, k, 1])
    }

    /// The partition whose module appears in degree `m`: `[k, k]` for
    /// `m = 2k`, `[k, k, 1]` for `m = 2k - 1`.
    pub fn for_degree(m: u32) -> Self {
        if m.is_multiple_of(2) {
            Self::kk(m / 2)
        } else {
            Self::kk1(m.div_ceil(2))
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Column lengths.
    pub fn conjugate(&self) -> Vec<u32> {
        let width = self.0.first().copied().unwrap_or(0);
        (0..width)
            .map(|j| self.0.iter().filter(|&&p| p > j).count() as u32)
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

fn to_u128(x: BigUint) -> Result<u128> {
    x.to_u128().ok_or(Error::Overflow)
}

fn mobius(mut n: u32) -> i32 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Dimension of the degree-`m` part of the free Lie algebra on `r`
/// generators: `(1/m) Σ_{d | m} μ(d) r^{m/d}`.
pub fn witt_dim(r: u32, m: u32) -> Result<u128> {
    if r == 0 || m == 0 {
        return Err(Error::Precondition(
            "rank and degree must be positive".into(),
        ));
    }
    let mut total: i128 = 0;
    for d in (1..=m).filter(|d| m.is_multiple_of(*d)) {
        let mu = mobius(d);
        if mu == 0 {
            continue;
        }
        let term = (r as i128).checked_pow(m / d).ok_or(Error::Overflow)?;
        total = total
            .checked_add(mu as i128 * term)
            .ok_or(Error::Overflow)?;
    }
    Ok((total / m as i128) as u128)
}

/// Dimension of the irreducible `gl_g` module with highest weight `λ`, by the
/// hook-content formula.
pub fn gl_irrep_dim(lambda: &Partition, g: u32) -> Result<u128> {
    if lambda.len() > g as usize {
        return Err(Error::PartitionTooLong {
            len: lambda.len(),
            g: g as usize,
        });
    }
    let cols = lambda.conjugate();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            let content = g as i64 + j as i64 - i as i64;
            let hook = (row - j) + (cols[j as usize] - i as u32) - 1;
            num *= content as u64;
            den *= hook;
        }
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    to_u128(q)
}

fn factorial(n: u32) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

fn square_product(g: u32, k: u32) -> BigUint {
    // ∏_{j=0}^{k-2} (g+j)², empty for k = 1
    (0..k.saturating_sub(1)).fold(BigUint::one(), |acc, j| {
        let x = BigUint::from(g + j);
        acc * &x * &x
    })
}

/// `dim V_{[k,k]} = (g-1)(g+k-1) ∏_{j=0}^{k-2} (g+j)² / (k! (k+1)!)`.
pub fn dim_kk(g: u32, k: u32) -> Result<u128> {
    if g < 1 || k < 1 {
        return Err(Error::Precondition("need g ≥ 1 and k ≥ 1".into()));
    }
    let num = BigUint::from(g - 1) * (g + k - 1) * square_product(g, k);
    let den = factorial(k) * factorial(k + 1);
    to_u128(num / den)
}

/// `dim V_{[k,k,1]} = (g-1)(g-2)(g+k-1) ∏_{j=0}^{k-2} (g+j)² / ((k-1)! (k+2)!)`.
pub fn dim_kk1(g: u32, k: u32) -> Result<u128> {
    if g < 2 || k < 1 {
        return Err(Error::Precondition("need g ≥ 2 and k ≥ 1".into()));
    }
    let num = BigUint::from(g - 1) * (g - 2) * (g + k - 1) * square_product(g, k);
    let den = factorial(k - 1) * factorial(k + 2);
    to_u128(num / den)
}

/// `dim V_{λ(m)} - g(g+1)/2`, where `λ(m)` is [`Partition::for_degree`].
///
/// This is a lower bound from a single irreducible summand, not the full
/// codimension.
pub fn codim_bound(g: u32, m: u32) -> Result<i128> {
    if g < 3 || m < 1 {
        return Err(Error::Precondition("need g ≥ 3 and m ≥ 1".into()));
    }
    let k = m.div_ceil(2);
    let dim = if m.is_multiple_of(2) {
        dim_kk(g, k)?
    } else {
        dim_kk1(g, k)?
    };
    Ok(dim as i128 - (g as i128 * (g as i128 + 1)) / 2)
}

/// Least `m` from which the properness theorem applies in genus `g`.
pub fn theorem_threshold(g: u32) -> Option<u32> {
    match g {
        0..=2 => None,
        3 => Some(4),
        4..=6 => Some(2),
        _ => Some(1),
    }
}

/// One row of the dimension table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimsRow {
    pub g: u32,
    pub m: u32,
    pub partition: String,
    pub dim: u128,
    pub bound: i128,
}

pub fn dims_row(g: u32, m: u32) -> Result<DimsRow> {
    let lambda = Partition::for_degree(m);
    Ok(DimsRow {
        g,
        m,
        dim: gl_irrep_dim(&lambda, g)?,
        partition: lambda.to_string(),
        bound: codim_bound(g, m)?,
    })
}

/// Pairs `(g, m)` covered by the theorem, `3 ≤ g ≤ g_max`,
/// `threshold ≤ m ≤ m_max`, where the single-irreducible bound is not
/// positive.
pub fn single_irrep_insufficient(g_max: u32, m_max: u32) -> Result<Vec<(u32, u32)>> {
    let mut out = Vec::new();
    for g in 3..=g_max {
        let Some(lo) = theorem_threshold(g) else {
            continue;
        };
        for m in lo..=m_max {
            if codim_bound(g, m)? <= 0 {
                out.push((g, m));
            }
        }
    }
    Ok(out)
}

/// Dimensions of the modules appearing in the structure of the low-degree
/// graded pieces, for `H` of rank `2g`, `A` of rank `g`, and a free group of
/// rank `g`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructuralDims {
    pub g: u32,
    /// `Λ³ H`.
    pub lambda3_h: u128,
    /// `Hom(A, L_2(A))`.
    pub hom_a_l2: u128,
    /// `Hom(A, L_3(A))`.
    pub hom_a_l3: u128,
    /// `Hom(V, Λ² V)`.
    pub hom_v_lambda2_v: u128,
    /// `Λ² Hom(A, L_2(A))`.
    pub lambda2_hom_a_l2: u128,
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn structural_dims(g: u32) -> Result<StructuralDims> {
    if g < 2 {
        return Err(Error::Precondition("need g ≥ 2".into()));
    }
    let gg = g as u128;
    let hom_a_l2 = gg * witt_dim(g, 2)?;
    Ok(StructuralDims {
        g,
        lambda3_h: binomial(2 * gg, 3),
        hom_a_l2,
        hom_a_l3: gg * witt_dim(g, 3)?,
        hom_v_lambda2_v: gg * binomial(gg, 2),
        lambda2_hom_a_l2: binomial(hom_a_l2, 2),
    })
}
