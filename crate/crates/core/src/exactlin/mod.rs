//! Exact linear algebra over ℚ.
//!
//! Scalars are arbitrary-precision rationals, always kept in lowest terms with
//! a positive denominator, so equality is decided structurally. Vectors come in
//! two flavours: dense `Vec<Q>` for algebra elements and [`SparseVec`] for the
//! large tensor-power coordinate spaces of the chain complex.

mod echelon;
mod matrix;
mod subspace;

pub use echelon::Echelon;
pub use matrix::Matrix;
pub use subspace::{
    extend_linear_map, image_basis, inverse, kernel_basis, quotient_dim, rank, solve, Quotient,
    Subspace,
};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// The ground field.
pub type Q = BigRational;

/// Sorted `(index, value)` pairs with no explicit zeros.
pub type SparseVec = Vec<(usize, Q)>;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// Canonical text form `"num/den"`, denominator always present.
pub fn format_q(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses `"num/den"` or a bare integer.
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Format(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Format(format!("zero denominator in {s:?}")));
            }
            Ok(Q::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Q::from_integer(n))
        }
    }
}

pub fn zeros(n: usize) -> Vec<Q> {
    vec![Q::zero(); n]
}

pub fn unit(n: usize, i: usize) -> Vec<Q> {
    let mut v = zeros(n);
    v[i] = Q::one();
    v
}

pub fn is_zero_vec(v: &[Q]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn sparse_from_dense(v: &[Q]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn dense_from_sparse(v: &[(usize, Q)], dim: usize) -> Vec<Q> {
    let mut out = zeros(dim);
    for (i, x) in v {
        out[*i] += x;
    }
    out
}

/// `acc += coef * v`.
pub fn axpy(acc: &mut [Q], coef: &Q, v: &[(usize, Q)]) {
    if coef.is_zero() {
        return;
    }
    for (i, x) in v {
        acc[*i] += coef * x;
    }
}

/// `acc += coef * v` for dense `v`.
pub fn axpy_dense(acc: &mut [Q], coef: &Q, v: &[Q]) {
    if coef.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += coef * x;
        }
    }
}

pub fn scale(v: &[Q], c: &Q) -> Vec<Q> {
    v.iter().map(|x| x * c).collect()
}

pub fn add(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Sorts, merges duplicates and drops zeros.
pub fn normalize_sparse(mut v: Vec<(usize, Q)>) -> SparseVec {
    v.sort_by_key(|(i, _)| *i);
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (i, x) in v {
        match out.last_mut() {
            Some((j, y)) if *j == i => *y += x,
            _ => out.push((i, x)),
        }
    }
    out.retain(|(_, x)| !x.is_zero());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_text_is_canonical() {
        assert_eq!(format_q(&q_frac(6, -4)), "-3/2");
        assert_eq!(format_q(&q(5)), "5/1");
        assert_eq!(parse_q("-3/2").unwrap(), q_frac(-3, 2));
        assert_eq!(parse_q("4/8").unwrap(), q_frac(1, 2));
        assert_eq!(parse_q(" 7 ").unwrap(), q(7));
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
    }

    #[test]
    fn normalize_merges_and_drops_zeros() {
        let v = normalize_sparse(vec![(3, q(1)), (1, q(2)), (3, q(-1)), (1, q(1))]);
        assert_eq!(v, vec![(1, q(3))]);
    }
}
