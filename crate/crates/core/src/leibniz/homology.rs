//! The Leibniz boundary complex on tensor powers and its homology.
//!
//! A basis tensor `b_{i1} ⊗ ⋯ ⊗ b_{in}` has coordinate `i1·dⁿ⁻¹ + ⋯ + in`.
//! The image of `δ_{n+1}` is accumulated column by column into one echelon
//! form. Columns only mix coordinates that are linked through their supports,
//! so the coordinates split into blocks that can be saturated independently:
//! once the image inside a block reaches the dimension of the cycles there,
//! the block's remaining columns are skipped without being evaluated.

use num_traits::One;

use crate::error::{Error, Result};
use crate::exactlin::{kernel_basis, normalize_sparse, Echelon, Matrix, SparseVec, Q};
use crate::table::Table;

use super::LeibnizAlgebra;

/// Default cap on the number of tensor coordinates a boundary may touch.
pub const DEFAULT_CAP: usize = 10_000_000;

#[derive(Debug, Clone)]
pub struct ChainComplexSlice {
    pub n: usize,
    /// `dⁿ⁻¹ × dⁿ` (or `1 × d` for `n = 1`).
    pub delta: Matrix,
}

pub fn tensor_index(digits: &[usize], d: usize) -> usize {
    digits.iter().fold(0, |acc, &x| acc * d + x)
}

pub fn tensor_digits(mut index: usize, d: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for slot in out.iter_mut().rev() {
        *slot = index % d;
        index /= d;
    }
    out
}

fn power(d: usize, n: usize, cap: usize) -> Result<usize> {
    match d.checked_pow(n as u32) {
        Some(p) if p <= cap => Ok(p),
        p => Err(Error::DegreeTooLarge {
            degree: n,
            coords: p.unwrap_or(usize::MAX),
            cap,
        }),
    }
}

/// Index of the tuple obtained from `digits` by putting `k` at position `i`
/// and deleting position `j`.
fn contracted_index(digits: &[usize], i: usize, j: usize, k: usize, d: usize) -> usize {
    let mut acc = 0;
    for (p, &x) in digits.iter().enumerate() {
        if p == j {
            continue;
        }
        acc = acc * d + if p == i { k } else { x };
    }
    acc
}

/// `δ_n` applied to one basis tensor. `flip` negates a single `(i, j)` term
/// and exists only to demonstrate that the complex check catches sign slips.
fn boundary_column(t: &Table, digits: &[usize], flip: Option<(usize, usize)>) -> SparseVec {
    let d = t.dim();
    let n = digits.len();
    let mut out = Vec::new();
    for j in 1..n {
        // (−1)^{j+1} with j counted from 1 is (−1)^j counted from 0.
        let base = if j % 2 == 0 { Q::one() } else { -Q::one() };
        for i in 0..j {
            let sign = if flip == Some((i, j)) { -base.clone() } else { base.clone() };
            for (k, c) in t.get(digits[i], digits[j]) {
                out.push((contracted_index(digits, i, j, *k, d), &sign * c));
            }
        }
    }
    normalize_sparse(out)
}

fn support_of_column(t: &Table, digits: &[usize], out: &mut Vec<usize>) {
    let d = t.dim();
    out.clear();
    for j in 1..digits.len() {
        for i in 0..j {
            for (k, _) in t.get(digits[i], digits[j]) {
                out.push(contracted_index(digits, i, j, *k, d));
            }
        }
    }
}

fn build_boundary(
    l: &LeibnizAlgebra,
    n: usize,
    cap: usize,
    flip: Option<(usize, usize)>,
) -> Result<ChainComplexSlice> {
    assert!(n >= 1, "boundary degree starts at 1");
    let d = l.dim();
    let cols = power(d, n, cap)?;
    if n == 1 {
        return Ok(ChainComplexSlice {
            n,
            delta: Matrix::zeros(1, d),
        });
    }
    let rows = d.pow(n as u32 - 1);
    let columns: Vec<SparseVec> = (0..cols)
        .map(|c| boundary_column(l.table(), &tensor_digits(c, d, n), flip))
        .collect();
    Ok(ChainComplexSlice {
        n,
        delta: Matrix::from_columns(rows, &columns),
    })
}

/// The matrix of `δ_n`, with `δ₁ = 0`.
pub fn boundary(l: &LeibnizAlgebra, n: usize, cap: usize) -> Result<ChainComplexSlice> {
    build_boundary(l, n, cap, None)
}

/// `δ_n` with the sign of the `(i, j)` term (0-based positions) reversed.
#[doc(hidden)]
pub fn boundary_with_sign_error(
    l: &LeibnizAlgebra,
    n: usize,
    cap: usize,
    term: (usize, usize),
) -> Result<ChainComplexSlice> {
    build_boundary(l, n, cap, Some(term))
}

struct UnionFind(Vec<u32>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n as u32).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] as usize != x {
            let p = self.0[x] as usize;
            self.0[x] = self.0[p];
            x = p;
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo as u32;
        }
    }
}

/// Echelon basis of `im δ_{n+1}` inside the `dⁿ` tensor coordinates.
#[derive(Debug, Clone)]
pub struct BoundaryImage {
    pub n: usize,
    pub d: usize,
    pub echelon: Echelon,
    /// Non-pivot coordinates; every class of `L^{⊗n} / im δ_{n+1}` has a
    /// unique representative supported here.
    pub free: Vec<usize>,
    position: Vec<u32>,
}

impl BoundaryImage {
    /// Position of a free coordinate in [`BoundaryImage::free`].
    pub fn position(&self, coord: usize) -> Option<usize> {
        let p = self.position[coord];
        (p != u32::MAX).then_some(p as usize)
    }

    /// Class of a tensor, in coordinates indexed by the free coordinates.
    pub fn class(&self, v: &[(usize, Q)]) -> SparseVec {
        self.echelon
            .reduce(v)
            .into_iter()
            .map(|(c, a)| (self.position[c] as usize, a))
            .collect()
    }

    /// Class of `x ⊗ y` for `n = 2`.
    pub fn class_of_pair(&self, x: &[(usize, Q)], y: &[(usize, Q)]) -> SparseVec {
        debug_assert_eq!(self.n, 2);
        let mut t = Vec::with_capacity(x.len() * y.len());
        for (i, a) in x {
            for (j, b) in y {
                t.push((i * self.d + j, a * b));
            }
        }
        self.class(&normalize_sparse(t))
    }
}

pub fn boundary_image(l: &LeibnizAlgebra, n: usize, cap: usize) -> Result<BoundaryImage> {
    assert!(n >= 1);
    let d = l.dim();
    let t = l.table();
    let coords = power(d, n, cap)?;
    let columns = power(d, n + 1, cap)?;

    let mut uf = UnionFind::new(coords);
    let mut support = Vec::new();
    for c in 0..columns {
        support_of_column(t, &tensor_digits(c, d, n + 1), &mut support);
        for w in support.windows(2) {
            uf.union(w[0], w[1]);
        }
    }
    let block: Vec<usize> = (0..coords).map(|c| uf.find(c)).collect();

    // Within a block the image is at most the cycles supported there.
    let mut size = vec![0usize; coords];
    for &b in &block {
        size[b] += 1;
    }
    let mut bound = size.clone();
    if n >= 2 {
        let lower = d.pow(n as u32 - 1);
        let mut members: Vec<Vec<usize>> = vec![Vec::new(); coords];
        for (c, &b) in block.iter().enumerate() {
            members[b].push(c);
        }
        for (b, cs) in members.iter().enumerate() {
            if cs.len() < 2 {
                if cs.len() == 1 {
                    let col = boundary_column(t, &tensor_digits(cs[0], d, n), None);
                    bound[b] = usize::from(col.is_empty());
                }
                continue;
            }
            let mut e = Echelon::new(lower);
            for &c in cs {
                e.insert(&boundary_column(t, &tensor_digits(c, d, n), None));
            }
            bound[b] = cs.len() - e.rank();
        }
    }

    let mut rank = vec![0usize; coords];
    let mut echelon = Echelon::new(coords);
    for c in 0..columns {
        let digits = tensor_digits(c, d, n + 1);
        support_of_column(t, &digits, &mut support);
        let Some(&first) = support.first() else { continue };
        let b = block[first];
        if rank[b] >= bound[b] {
            continue;
        }
        if echelon.insert(&boundary_column(t, &digits, None)) {
            rank[b] += 1;
        }
    }

    let free = echelon.free_columns();
    let mut position = vec![u32::MAX; coords];
    for (p, &f) in free.iter().enumerate() {
        position[f] = p as u32;
    }
    Ok(BoundaryImage {
        n,
        d,
        echelon,
        free,
        position,
    })
}

/// `HLₙ = ker δₙ / im δₙ₊₁` with representative cycles.
#[derive(Debug, Clone)]
pub struct Homology {
    pub n: usize,
    pub dim: usize,
    pub cycles_dim: usize,
    pub boundaries_dim: usize,
    /// Cycles in `dⁿ` tensor coordinates whose classes form a basis.
    pub representatives: Vec<SparseVec>,
}

pub fn homology(l: &LeibnizAlgebra, n: usize, cap: usize) -> Result<Homology> {
    let image = boundary_image(l, n, cap)?;
    Ok(homology_from_image(l, &image))
}

pub(crate) fn homology_from_image(l: &LeibnizAlgebra, image: &BoundaryImage) -> Homology {
    let (d, n) = (l.dim(), image.n);
    let coords = d.pow(n as u32);
    let boundaries_dim = image.echelon.rank();
    // A class is represented on the free coordinates; it is a cycle iff δₙ
    // kills that representative.
    let reps: Vec<SparseVec> = if n == 1 {
        image.free.iter().map(|&f| vec![(f, Q::one())]).collect()
    } else {
        let lower = d.pow(n as u32 - 1);
        let cols: Vec<SparseVec> = image
            .free
            .iter()
            .map(|&f| boundary_column(l.table(), &tensor_digits(f, d, n), None))
            .collect();
        let k = kernel_basis(&Matrix::from_columns(lower, &cols));
        k.basis()
            .iter()
            .map(|v| v.iter().map(|(p, a)| (image.free[*p], a.clone())).collect())
            .collect()
    };
    let dim = reps.len();
    Homology {
        n,
        dim,
        cycles_dim: dim + boundaries_dim,
        boundaries_dim,
        representatives: {
            debug_assert!(reps.iter().all(|r| r.iter().all(|(c, _)| *c < coords)));
            reps
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::q;
    use crate::leibniz::{abelian, sl2};

    #[test]
    fn digits_round_trip() {
        for i in 0..27 {
            assert_eq!(tensor_index(&tensor_digits(i, 3, 3), 3), i);
        }
    }

    #[test]
    fn low_degree_signs() {
        let l = sl2();
        // δ₂(e ⊗ f) = −[e, f] = −h.
        let d2 = boundary(&l, 2, DEFAULT_CAP).unwrap();
        assert_eq!(d2.delta.get(1, tensor_index(&[0, 2], 3)), q(-1));
        // δ₃(e ⊗ f ⊗ h) = −[e,f]⊗h + [e,h]⊗f + e⊗[f,h].
        let d3 = boundary(&l, 3, DEFAULT_CAP).unwrap();
        let col = d3.delta.column_dense(tensor_index(&[0, 2, 1], 3));
        let mut expected = crate::exactlin::zeros(9);
        expected[tensor_index(&[1, 1], 3)] += q(-1);
        expected[tensor_index(&[0, 2], 3)] += q(-2);
        expected[tensor_index(&[0, 2], 3)] += q(2);
        assert_eq!(col, expected);
    }

    #[test]
    fn delta_one_is_zero_and_abelian_delta_two_is_zero() {
        assert!(boundary(&sl2(), 1, DEFAULT_CAP).unwrap().delta.is_zero());
        assert!(boundary(&abelian(2), 2, DEFAULT_CAP).unwrap().delta.is_zero());
    }

    #[test]
    fn complex_squares_to_zero_on_sl2() {
        let l = sl2();
        for n in 2..=3 {
            let a = boundary(&l, n, DEFAULT_CAP).unwrap().delta;
            let b = boundary(&l, n + 1, DEFAULT_CAP).unwrap().delta;
            assert!(a.mul(&b).is_zero(), "δ{n}∘δ{}", n + 1);
        }
    }

    #[test]
    fn sign_error_is_detected() {
        let l = sl2();
        let a = boundary(&l, 2, DEFAULT_CAP).unwrap().delta;
        let b = boundary_with_sign_error(&l, 3, DEFAULT_CAP, (0, 2)).unwrap().delta;
        assert!(!a.mul(&b).is_zero());
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            boundary(&sl2(), 3, 10),
            Err(Error::DegreeTooLarge { degree: 3, coords: 27, cap: 10 })
        ));
    }

    #[test]
    fn sl2_low_homology() {
        let l = sl2();
        assert_eq!(homology(&l, 1, DEFAULT_CAP).unwrap().dim, 0);
        assert_eq!(homology(&l, 2, DEFAULT_CAP).unwrap().dim, 0);
    }

    #[test]
    fn abelian_homology_is_the_tensor_power() {
        let a = abelian(2);
        assert_eq!(homology(&a, 1, DEFAULT_CAP).unwrap().dim, 2);
        assert_eq!(homology(&a, 2, DEFAULT_CAP).unwrap().dim, 4);
    }

    #[test]
    fn blockwise_image_matches_full_rank() {
        // The saturation shortcut must agree with plain elimination.
        let l = sl2();
        for n in 1..=2 {
            let img = boundary_image(&l, n, DEFAULT_CAP).unwrap();
            let full = boundary(&l, n + 1, DEFAULT_CAP).unwrap().delta;
            assert_eq!(img.echelon.rank(), crate::exactlin::rank(&full.transpose()));
        }
    }
}
