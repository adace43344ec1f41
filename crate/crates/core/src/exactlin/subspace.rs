use num_traits::{One, Zero};

use super::{dense_from_sparse, sparse_from_dense, Echelon, Matrix, SparseVec, Q};
use crate::error::{Error, Result};

/// A subspace of ℚⁿ held in reduced row echelon form.
///
/// The RREF basis is unique, so two `Subspace`s are equal exactly when their
/// fields are. Coordinates of a member with respect to the basis are its
/// entries at the pivot columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<SparseVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(|i| vec![(i, Q::one())]).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn from_echelon(e: &Echelon) -> Self {
        let basis = e.to_rref();
        let pivots = basis.iter().map(|r| r[0].0).collect();
        Subspace {
            ambient: e.ambient(),
            basis,
            pivots,
        }
    }

    pub fn span<I, V>(ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = V>,
        V: AsRef<[(usize, Q)]>,
    {
        let mut e = Echelon::new(ambient);
        for v in vectors {
            e.insert(v.as_ref());
            if e.rank() == ambient {
                break;
            }
        }
        Subspace::from_echelon(&e)
    }

    pub fn span_dense<'a, I>(ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = &'a Vec<Q>>,
    {
        Subspace::span(ambient, vectors.into_iter().map(|v| sparse_from_dense(v)))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn basis_dense(&self) -> Vec<Vec<Q>> {
        self.basis
            .iter()
            .map(|b| dense_from_sparse(b, self.ambient))
            .collect()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.ambient);
        for b in &self.basis {
            e.push_reduced(b.clone());
        }
        e
    }

    /// Coordinates of `v` in the RREF basis, or `None` if `v` is outside.
    pub fn coords(&self, v: &[Q]) -> Option<Vec<Q>> {
        let c: Vec<Q> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut r = v.to_vec();
        for (coef, b) in c.iter().zip(&self.basis) {
            if !coef.is_zero() {
                for (i, x) in b {
                    r[*i] -= coef * x;
                }
            }
        }
        r.iter().all(Zero::is_zero).then_some(c)
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.coords(v).is_some()
    }

    pub fn contains_sparse(&self, v: &[(usize, Q)]) -> bool {
        self.echelon().contains(v)
    }

    /// Linear combination of the basis with the given coordinates.
    pub fn element(&self, coords: &[Q]) -> Vec<Q> {
        let mut out = super::zeros(self.ambient);
        for (c, b) in coords.iter().zip(&self.basis) {
            super::axpy(&mut out, c, b);
        }
        out
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        let e = other.echelon();
        self.basis.iter().all(|b| e.contains(b))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::span(self.ambient, self.basis.iter().chain(other.basis.iter()))
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // Solve a·A = b·B via the kernel of [A; -B] taken as columns.
        let mut cols: Vec<SparseVec> = self.basis.clone();
        cols.extend(
            other
                .basis
                .iter()
                .map(|b| b.iter().map(|(i, x)| (*i, -x)).collect()),
        );
        let m = Matrix::from_columns(self.ambient, &cols);
        let k = kernel_basis(&m);
        let vecs: Vec<Vec<Q>> = k
            .basis
            .iter()
            .map(|kv| {
                let mut out = super::zeros(self.ambient);
                for (j, c) in kv {
                    if *j < self.basis.len() {
                        super::axpy(&mut out, c, &self.basis[*j]);
                    }
                }
                out
            })
            .collect();
        Subspace::span_dense(self.ambient, vecs.iter())
    }
}

/// Rank via exact elimination of the rows.
pub fn rank(m: &Matrix) -> usize {
    let mut e = Echelon::new(m.cols());
    for r in m.row_vecs() {
        e.insert(r);
    }
    e.rank()
}

/// Basis of `{v : m·v = 0}`.
pub fn kernel_basis(m: &Matrix) -> Subspace {
    let mut e = Echelon::new(m.cols());
    for r in m.row_vecs() {
        e.insert(r);
        if e.rank() == m.cols() {
            break;
        }
    }
    let rref = e.to_rref();
    let pivots: Vec<usize> = rref.iter().map(|r| r[0].0).collect();
    let mut is_pivot = vec![false; m.cols()];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut kernel: Vec<Vec<(usize, Q)>> = vec![Vec::new(); m.cols()];
    for (f, slot) in kernel.iter_mut().enumerate() {
        if !is_pivot[f] {
            slot.push((f, Q::one()));
        }
    }
    for row in &rref {
        let p = row[0].0;
        for (c, x) in &row[1..] {
            kernel[*c].push((p, -x));
        }
    }
    let vecs = kernel
        .into_iter()
        .enumerate()
        .filter(|(f, _)| !is_pivot[*f])
        .map(|(_, v)| super::normalize_sparse(v));
    let k = Subspace::span(m.cols(), vecs);
    debug_assert_eq!(k.dim() + pivots.len(), m.cols(), "rank-nullity");
    k
}

/// Basis of the column space.
pub fn image_basis(m: &Matrix) -> Subspace {
    Subspace::span(m.rows(), m.columns())
}

/// Some `x` with `m·x = b`.
pub fn solve(m: &Matrix, b: &[Q]) -> Result<Vec<Q>> {
    assert_eq!(m.rows(), b.len(), "right-hand side length");
    let n = m.cols();
    let mut e = Echelon::new(n + 1);
    for (i, r) in m.row_vecs().iter().enumerate() {
        let mut row = r.clone();
        if !b[i].is_zero() {
            row.push((n, b[i].clone()));
        }
        e.insert(&row);
    }
    if e.is_pivot(n) {
        return Err(Error::NoSolution {
            context: format!("right-hand side outside the column space of a {}x{} matrix", m.rows(), n),
        });
    }
    let mut x = super::zeros(n);
    for row in e.to_rref() {
        let p = row[0].0;
        if let Some((_, v)) = row.iter().find(|(c, _)| *c == n) {
            x[p] = v.clone();
        }
    }
    Ok(x)
}

/// Exact inverse of a square matrix.
pub fn inverse(m: &Matrix) -> Result<Matrix> {
    let n = m.rows();
    if m.cols() != n {
        return Err(Error::Singular {
            context: format!("{}x{} matrix is not square", n, m.cols()),
        });
    }
    let mut e = Echelon::new(2 * n);
    for (i, r) in m.row_vecs().iter().enumerate() {
        let mut row = r.clone();
        row.push((n + i, Q::one()));
        e.insert(&row);
    }
    let rref = e.to_rref();
    if rref.len() != n || rref.iter().enumerate().any(|(i, r)| r[0].0 != i) {
        return Err(Error::Singular {
            context: format!("{n}x{n} matrix has rank below {n}"),
        });
    }
    let rows = rref
        .into_iter()
        .map(|r| {
            r.into_iter()
                .filter(|(c, _)| *c >= n)
                .map(|(c, x)| (c - n, x))
                .collect()
        })
        .collect();
    Ok(Matrix::from_rows(n, rows))
}

/// `big / small`: its dimension and lifted representatives of a basis.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub dim: usize,
    pub representatives: Vec<SparseVec>,
}

pub fn quotient_dim(big: &Subspace, small: &Subspace) -> Result<Quotient> {
    let big_e = big.echelon();
    if let Some(index) = small.basis.iter().position(|b| !big_e.contains(b)) {
        return Err(Error::NotContained { index });
    }
    let mut e = small.echelon();
    let mut reps = Vec::new();
    for b in &big.basis {
        if e.insert(b) {
            reps.push(b.clone());
        }
    }
    Ok(Quotient {
        dim: big.dim() - small.dim(),
        representatives: reps,
    })
}

/// The linear map sending each `sources[k]` to `targets[k]`.
///
/// Fails with the offending combination when some linear relation among the
/// sources is not respected by the targets, or when the sources do not span
/// the domain.
pub fn extend_linear_map(
    domain: usize,
    codomain: usize,
    sources: &[Vec<Q>],
    targets: &[Vec<Q>],
) -> std::result::Result<Matrix, String> {
    assert_eq!(sources.len(), targets.len());
    let s = Matrix::from_dense_columns(domain, sources);
    let t = Matrix::from_dense_columns(codomain, targets);
    let rel = kernel_basis(&s);
    for k in rel.basis() {
        let img = t.mul_sparse(k);
        if !super::is_zero_vec(&img) {
            return Err(format!(
                "relation among sources {:?} maps to a nonzero target",
                k.iter().map(|(i, _)| *i).collect::<Vec<_>>()
            ));
        }
    }
    // Pick an independent subset spanning the domain.
    let mut e = Echelon::new(domain);
    let mut chosen = Vec::new();
    for (k, v) in sources.iter().enumerate() {
        if e.insert(&sparse_from_dense(v)) {
            chosen.push(k);
        }
        if e.rank() == domain {
            break;
        }
    }
    if e.rank() < domain {
        return Err(format!(
            "sources span only {} of {} dimensions",
            e.rank(),
            domain
        ));
    }
    let basis: Vec<Vec<Q>> = chosen.iter().map(|&k| sources[k].clone()).collect();
    let images: Vec<Vec<Q>> = chosen.iter().map(|&k| targets[k].clone()).collect();
    let b = Matrix::from_dense_columns(domain, &basis);
    let binv = inverse(&b).map_err(|e| e.to_string())?;
    let img = Matrix::from_dense_columns(codomain, &images);
    Ok(img.mul(&binv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{q, q_frac};

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_dense(
            &rows
                .iter()
                .map(|r| r.iter().map(|&x| q(x)).collect())
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&Matrix::identity(3)), 3);
        assert_eq!(rank(&Matrix::zeros(2, 2)), 0);
        assert_eq!(rank(&m(&[&[1, 2], &[2, 4]])), 1);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&Matrix::identity(3)).dim(), 0);
        assert_eq!(kernel_basis(&Matrix::zeros(2, 3)), Subspace::full(3));
        let k = kernel_basis(&m(&[&[1, 1]]));
        assert_eq!(k.basis(), &[vec![(0, q(1)), (1, q(-1))]]);
    }

    #[test]
    fn image_examples() {
        assert_eq!(image_basis(&Matrix::identity(2)), Subspace::full(2));
        assert_eq!(image_basis(&Matrix::zeros(2, 2)).dim(), 0);
        let im = image_basis(&m(&[&[1, 2], &[2, 4]]));
        assert_eq!(im.basis(), &[vec![(0, q(1)), (1, q(2))]]);
    }

    #[test]
    fn quotient_examples() {
        let full2 = Subspace::full(2);
        assert_eq!(quotient_dim(&full2, &full2).unwrap().dim, 0);
        assert_eq!(quotient_dim(&full2, &Subspace::zero(2)).unwrap().dim, 2);
        let line = Subspace::span(3, [vec![(0, q(1))]]);
        let quo = quotient_dim(&Subspace::full(3), &line).unwrap();
        assert_eq!(quo.dim, 2);
        assert_eq!(quo.representatives.len(), 2);
        let other = Subspace::span(3, [vec![(1, q(1))]]);
        assert!(matches!(
            quotient_dim(&line, &other),
            Err(Error::NotContained { index: 0 })
        ));
    }

    #[test]
    fn solve_examples() {
        let b = vec![q(4), q(-2)];
        assert_eq!(solve(&Matrix::identity(2), &b).unwrap(), b);
        assert!(matches!(
            solve(&Matrix::zeros(1, 1), &[q(1)]),
            Err(Error::NoSolution { .. })
        ));
        assert_eq!(solve(&m(&[&[2]]), &[q(3)]).unwrap(), vec![q_frac(3, 2)]);
    }

    #[test]
    fn inverse_of_upper_triangular() {
        let a = m(&[&[1, 2], &[0, 2]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        assert!(inverse(&m(&[&[1, 2], &[2, 4]])).is_err());
    }

    #[test]
    fn intersection_of_planes() {
        let xy = Subspace::span(3, [vec![(0, q(1))], vec![(1, q(1))]]);
        let yz = Subspace::span(3, [vec![(1, q(1))], vec![(2, q(1))]]);
        assert_eq!(xy.intersection(&yz), Subspace::span(3, [vec![(1, q(1))]]));
    }

    #[test]
    fn linear_map_from_spanning_set() {
        // Sources e0, e1, e0+e1 with consistent targets.
        let src = vec![vec![q(1), q(0)], vec![q(0), q(1)], vec![q(1), q(1)]];
        let tgt = vec![vec![q(2)], vec![q(3)], vec![q(5)]];
        let map = extend_linear_map(2, 1, &src, &tgt).unwrap();
        assert_eq!(map.to_dense(), vec![vec![q(2), q(3)]]);
        let bad = vec![vec![q(2)], vec![q(3)], vec![q(4)]];
        assert!(extend_linear_map(2, 1, &src, &bad).is_err());
    }
}
