//! Leibniz algebras given by structure constants.
//!
//! The bracket is right-Leibniz in the form `[x,[y,z]] = [[x,y],z] − [[x,z],y]`
//! and `ad z` acts by `x ↦ −[x, z]`.

mod homology;
mod uce;

pub use homology::{
    boundary, boundary_with_sign_error, boundary_image, homology, tensor_digits, tensor_index,
    BoundaryImage, ChainComplexSlice, Homology, DEFAULT_CAP,
};
pub use uce::{universal_central_extension, CentralExtension, Uce};

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::chevalley::AlgebraOperator;
use crate::error::{Error, Result};
use crate::exactlin::{
    kernel_basis, normalize_sparse, sparse_from_dense, unit, Echelon, Matrix, SparseVec, Subspace, Q,
};
use crate::table::{Table, Triple};
use crate::witness::{first_failing_pair, first_failing_triple, AxiomReport, Witness};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeibnizAlgebra {
    basis: Vec<String>,
    table: Table,
}

fn default_names(dim: usize) -> Vec<String> {
    (0..dim).map(|i| format!("b{i}")).collect()
}

impl LeibnizAlgebra {
    /// Validates the Leibniz identity on all basis triples.
    pub fn new(basis: Vec<String>, table: Table) -> Result<Self> {
        assert_eq!(basis.len(), table.dim(), "one name per basis vector");
        if let Some(w) = leibniz_failure(&table) {
            return Err(Error::LeibnizIdentityFailure(w));
        }
        Ok(LeibnizAlgebra { basis, table })
    }

    pub fn from_table(table: Table) -> Result<Self> {
        LeibnizAlgebra::new(default_names(table.dim()), table)
    }

    /// For tables whose identity has already been established by other means.
    pub(crate) fn trusted(basis: Vec<String>, table: Table) -> Self {
        debug_assert_eq!(basis.len(), table.dim());
        LeibnizAlgebra { basis, table }
    }

    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn table(&self) -> &Table {
        &self.table
    }

    pub fn bracket(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        self.table.mul(x, y)
    }

    pub fn bracket_sparse(&self, x: &[(usize, Q)], y: &[(usize, Q)]) -> SparseVec {
        self.table.mul_sparse(x, y)
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Q> {
        unit(self.dim(), i)
    }

    pub fn to_json(&self) -> LeibnizJson {
        LeibnizJson {
            dim: self.dim(),
            basis: self.basis.clone(),
            bracket: self.table.to_triples(),
        }
    }

    pub fn from_json(json: &LeibnizJson) -> Result<Self> {
        if json.basis.len() != json.dim {
            return Err(Error::Format(format!(
                "basis: {} names for dimension {}",
                json.basis.len(),
                json.dim
            )));
        }
        let table = Table::from_triples(json.dim, &json.bracket, "bracket")?;
        LeibnizAlgebra::new(json.basis.clone(), table)
    }
}

/// Wire form: `{"dim": n, "basis": [...], "bracket": [[i, j, k, "num/den"], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeibnizJson {
    pub dim: usize,
    pub basis: Vec<String>,
    pub bracket: Vec<Triple>,
}

fn bracket_basis_left(t: &Table, x: usize, v: &[(usize, Q)]) -> Vec<(usize, Q)> {
    let mut out = Vec::new();
    for (k, c) in v {
        out.extend(t.get(x, *k).iter().map(|(m, a)| (*m, c * a)));
    }
    out
}

fn bracket_basis_right(t: &Table, v: &[(usize, Q)], z: usize) -> Vec<(usize, Q)> {
    let mut out = Vec::new();
    for (k, c) in v {
        out.extend(t.get(*k, z).iter().map(|(m, a)| (*m, c * a)));
    }
    out
}

fn dense(v: &[(usize, Q)], n: usize) -> Vec<Q> {
    crate::exactlin::dense_from_sparse(v, n)
}

/// First basis triple violating `[x,[y,z]] = [[x,y],z] − [[x,z],y]`.
pub fn leibniz_failure(t: &Table) -> Option<Witness> {
    let n = t.dim();
    first_failing_triple(n, |x, y, z| {
        let lhs = normalize_sparse(bracket_basis_left(t, x, t.get(y, z)));
        let mut rhs = bracket_basis_right(t, t.get(x, y), z);
        rhs.extend(
            bracket_basis_right(t, t.get(x, z), y)
                .into_iter()
                .map(|(m, a)| (m, -a)),
        );
        let rhs = normalize_sparse(rhs);
        (lhs != rhs).then(|| {
            Witness::new(vec![x, y, z], &dense(&lhs, n), &dense(&rhs, n))
                .with_note("[x,[y,z]] vs [[x,y],z] - [[x,z],y]")
        })
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeibnizCheck {
    pub identity: AxiomReport,
    /// Antisymmetry on basis pairs, which with bilinearity gives `[x,x] = 0`
    /// for every element.
    pub lie: AxiomReport,
}

impl LeibnizCheck {
    pub fn is_lie(&self) -> bool {
        self.lie.holds
    }
}

pub fn lie_failure(t: &Table) -> Option<Witness> {
    let n = t.dim();
    first_failing_pair(n, |x, y| {
        if y < x {
            return None;
        }
        let lhs = t.get(x, y);
        let rhs: SparseVec = t.get(y, x).iter().map(|(k, a)| (*k, -a)).collect();
        (*lhs != rhs).then(|| {
            Witness::new(vec![x, y], &dense(lhs, n), &dense(&rhs, n)).with_note("[x,y] vs -[y,x]")
        })
    })
}

pub fn check_leibniz(t: &Table) -> LeibnizCheck {
    LeibnizCheck {
        identity: AxiomReport::from_search("leibniz identity", leibniz_failure(t)),
        lie: AxiomReport::from_search("antisymmetry", lie_failure(t)),
    }
}

/// The operator `x ↦ −[x, z]`.
pub fn ad(l: &LeibnizAlgebra, z: &[Q]) -> AlgebraOperator {
    let zs = sparse_from_dense(z);
    let cols: Vec<SparseVec> = (0..l.dim())
        .map(|j| {
            l.table
                .mul_sparse(&[(j, Q::one())], &zs)
                .into_iter()
                .map(|(k, a)| (k, -a))
                .collect()
        })
        .collect();
    let op = AlgebraOperator::new(Matrix::from_columns(l.dim(), &cols), "ad");
    debug_assert!(
        derivation_failure(l, op.matrix()).is_none(),
        "ad z must be a derivation"
    );
    op
}

/// First basis pair where `ρ[x,y] ≠ [ρx,y] + [x,ρy]`.
pub fn derivation_failure(l: &LeibnizAlgebra, rho: &Matrix) -> Option<Witness> {
    let n = l.dim();
    let images: Vec<Vec<Q>> = (0..n).map(|j| rho.column_dense(j)).collect();
    first_failing_pair(n, |x, y| {
        let lhs = rho.mul_sparse(l.table.get(x, y));
        let a = l.table.mul_basis_right(&images[x], y);
        let b = l.table.mul_basis_left(x, &images[y]);
        let rhs = crate::exactlin::add(&a, &b);
        (lhs != rhs).then(|| Witness::new(vec![x, y], &lhs, &rhs).with_note("derivation rule"))
    })
}

/// Derivations and inner derivations as subspaces of the operator space,
/// with an operator flattened row-major (`ρ[m][k]` at `m * dim + k`).
#[derive(Debug, Clone)]
pub struct Derivations {
    pub der: Subspace,
    pub inn: Subspace,
}

pub fn derivations(l: &LeibnizAlgebra) -> Derivations {
    let n = l.dim();
    let var = |m: usize, k: usize| m * n + k;
    let mut rows: Vec<SparseVec> = Vec::new();
    for x in 0..n {
        for y in 0..n {
            // Coefficient of b_m in ρ[x,y] − [ρx,y] − [x,ρy].
            let mut eqs: Vec<Vec<(usize, Q)>> = vec![Vec::new(); n];
            for (k, c) in l.table.get(x, y) {
                for (m, eq) in eqs.iter_mut().enumerate() {
                    eq.push((var(m, *k), c.clone()));
                }
            }
            for k in 0..n {
                for (m, c) in l.table.get(k, y) {
                    eqs[*m].push((var(k, x), -c));
                }
                for (m, c) in l.table.get(x, k) {
                    eqs[*m].push((var(k, y), -c));
                }
            }
            rows.extend(eqs.into_iter().map(normalize_sparse).filter(|r| !r.is_empty()));
        }
    }
    let der = kernel_basis(&Matrix::from_rows(n * n, rows));
    let flat = |op: &AlgebraOperator| -> SparseVec {
        op.matrix()
            .triplets()
            .map(|(i, j, x)| (var(i, j), x.clone()))
            .collect::<Vec<_>>()
    };
    let inn = Subspace::span(
        n * n,
        (0..n).map(|z| normalize_sparse(flat(&ad(l, &l.basis_vec(z))))),
    );
    assert!(inn.is_subspace_of(&der), "inner derivations are derivations");
    Derivations { der, inn }
}

/// `span{[bᵢ, bⱼ]}`.
pub fn derived_subalgebra(l: &LeibnizAlgebra) -> Subspace {
    let n = l.dim();
    let mut e = Echelon::new(n);
    for x in 0..n {
        for y in 0..n {
            e.insert(l.table.get(x, y));
            if e.rank() == n {
                return Subspace::full(n);
            }
        }
    }
    Subspace::from_echelon(&e)
}

pub fn is_perfect(l: &LeibnizAlgebra) -> bool {
    derived_subalgebra(l).dim() == l.dim()
}

/// `{z : [x, z] = 0 = [z, x] for all x}`.
pub fn center(l: &LeibnizAlgebra) -> Subspace {
    let n = l.dim();
    // Row (x, side, k) reads coordinate k of [b_x, z] or [z, b_x].
    let mut rows: Vec<Vec<(usize, Q)>> = vec![Vec::new(); 2 * n * n];
    for x in 0..n {
        for j in 0..n {
            for (k, c) in l.table.get(x, j) {
                rows[(x * 2) * n + k].push((j, c.clone()));
            }
            for (k, c) in l.table.get(j, x) {
                rows[(x * 2 + 1) * n + k].push((j, c.clone()));
            }
        }
    }
    kernel_basis(&Matrix::from_rows(n, rows))
}

pub fn is_central(l: &LeibnizAlgebra, z: &[Q]) -> bool {
    (0..l.dim()).all(|x| {
        let b = l.basis_vec(x);
        crate::exactlin::is_zero_vec(&l.bracket(&b, z))
            && crate::exactlin::is_zero_vec(&l.bracket(z, &b))
    })
}

/// Smallest two-sided ideal containing `seed`.
pub fn ideal_closure(l: &LeibnizAlgebra, seed: impl IntoIterator<Item = SparseVec>) -> Subspace {
    let n = l.dim();
    let mut e = Echelon::new(n);
    let mut frontier: Vec<SparseVec> = Vec::new();
    for v in seed {
        let r = e.reduce(&v);
        if e.push_reduced(r) {
            frontier.push(v);
        }
    }
    while let Some(v) = frontier.pop() {
        for x in 0..n {
            let bx = [(x, Q::one())];
            for w in [l.bracket_sparse(&v, &bx), l.bracket_sparse(&bx, &v)] {
                let r = e.reduce(&w);
                if e.push_reduced(r) {
                    frontier.push(w);
                }
            }
        }
    }
    Subspace::from_echelon(&e)
}

/// `L / I` for a two-sided ideal `I`, with the projection matrix.
///
/// The quotient basis is the image of the basis vectors at the non-pivot
/// columns of `I`, so coordinates are read off after canonical reduction.
pub fn quotient(l: &LeibnizAlgebra, ideal: &Subspace) -> Result<(LeibnizAlgebra, Matrix)> {
    let n = l.dim();
    let mut e = Echelon::new(n);
    for b in ideal.basis() {
        e.insert(b);
    }
    let free = e.free_columns();
    let mut pos = vec![usize::MAX; n];
    for (p, f) in free.iter().enumerate() {
        pos[*f] = p;
    }
    let read = |v: &[(usize, Q)]| -> SparseVec {
        e.reduce(v).into_iter().map(|(k, a)| (pos[k], a)).collect()
    };
    let table = Table::from_fn(free.len(), |i, j| read(l.table.get(free[i], free[j])));
    let projection = Matrix::from_columns(
        free.len(),
        &(0..n).map(|x| read(&[(x, Q::one())])).collect::<Vec<_>>(),
    );
    let names = free.iter().map(|f| l.basis[*f].clone()).collect();
    let q = LeibnizAlgebra::new(names, table)?;
    if let Some(w) = homomorphism_failure(l, &q, &projection) {
        return Err(Error::ConstructionFailure(format!(
            "subspace is not an ideal; projection fails to respect brackets {w}"
        )));
    }
    Ok((q, projection))
}

/// `L_Lie`: the quotient by the ideal generated by all `[x,y] + [y,x]`.
pub fn lie_quotient(l: &LeibnizAlgebra) -> Result<(LeibnizAlgebra, Matrix)> {
    let n = l.dim();
    let mut seeds = Vec::new();
    for x in 0..n {
        for y in x..n {
            let mut v = l.table.get(x, y).clone();
            v.extend(l.table.get(y, x).iter().cloned());
            let v = normalize_sparse(v);
            if !v.is_empty() {
                seeds.push(v);
            }
        }
    }
    let ideal = ideal_closure(l, seeds);
    let (q, p) = quotient(l, &ideal)?;
    debug_assert!(lie_failure(q.table()).is_none());
    Ok((q, p))
}

/// Induced algebra on a subalgebra given by a basis in ambient coordinates.
pub fn restrict(l: &LeibnizAlgebra, sub: &Subspace) -> Result<LeibnizAlgebra> {
    let basis = sub.basis_dense();
    let table = l.table.restrict(&basis, |v| sub.coords(v)).ok_or_else(|| {
        Error::NotASubalgebra(Witness::message("bracket of two basis vectors leaves the subspace"))
    })?;
    let names = (0..sub.dim()).map(|i| format!("s{i}")).collect();
    Ok(LeibnizAlgebra::trusted(names, table))
}

/// First basis pair with `φ[x,y] ≠ [φx, φy]`; `map` has the images as columns.
pub fn homomorphism_failure(
    src: &LeibnizAlgebra,
    dst: &LeibnizAlgebra,
    map: &Matrix,
) -> Option<Witness> {
    assert_eq!((map.rows(), map.cols()), (dst.dim(), src.dim()));
    let images: Vec<SparseVec> = map.columns();
    first_failing_pair(src.dim(), |x, y| {
        let lhs = map.mul_sparse(src.table.get(x, y));
        let rhs = crate::exactlin::dense_from_sparse(
            &dst.bracket_sparse(&images[x], &images[y]),
            dst.dim(),
        );
        (lhs != rhs).then(|| Witness::new(vec![x, y], &lhs, &rhs).with_note("phi[x,y] vs [phi x, phi y]"))
    })
}

/// A bilinear action `M × L → M`, `entries[m * algebra_dim + x] = [m, x]`.
#[derive(Debug, Clone)]
pub struct RightAction {
    pub module_dim: usize,
    pub algebra_dim: usize,
    pub entries: Vec<SparseVec>,
}

impl RightAction {
    pub fn adjoint(l: &LeibnizAlgebra) -> Self {
        let n = l.dim();
        RightAction {
            module_dim: n,
            algebra_dim: n,
            entries: (0..n * n).map(|ij| l.table.get(ij / n, ij % n).clone()).collect(),
        }
    }

    pub fn zero(module_dim: usize, algebra_dim: usize) -> Self {
        RightAction {
            module_dim,
            algebra_dim,
            entries: vec![Vec::new(); module_dim * algebra_dim],
        }
    }

    /// `[m, x] := [x, m]`: the left regular action read as a right one.
    pub fn transposed(l: &LeibnizAlgebra) -> Self {
        let n = l.dim();
        RightAction {
            module_dim: n,
            algebra_dim: n,
            entries: (0..n * n).map(|ij| l.table.get(ij % n, ij / n).clone()).collect(),
        }
    }

    fn act(&self, m: &[(usize, Q)], x: usize) -> Vec<(usize, Q)> {
        let mut out = Vec::new();
        for (i, c) in m {
            out.extend(self.entries[i * self.algebra_dim + x].iter().map(|(k, a)| (*k, c * a)));
        }
        out
    }
}

/// Checks `[m,[x,y]] = [[m,x],y] − [[m,y],x]` on basis elements.
pub fn check_right_module(l: &LeibnizAlgebra, action: &RightAction) -> AxiomReport {
    assert_eq!(action.algebra_dim, l.dim());
    let n = l.dim();
    let md = action.module_dim;
    let found = (0..md).find_map(|m| {
        let bm = [(m, Q::one())];
        for x in 0..n {
            for y in 0..n {
                let mut lhs = Vec::new();
                for (k, c) in l.table.get(x, y) {
                    lhs.extend(action.act(&bm, *k).into_iter().map(|(i, a)| (i, c * a)));
                }
                let lhs = normalize_sparse(lhs);
                let mut rhs = action.act(&normalize_sparse(action.act(&bm, x)), y);
                rhs.extend(
                    action
                        .act(&normalize_sparse(action.act(&bm, y)), x)
                        .into_iter()
                        .map(|(i, a)| (i, -a)),
                );
                let rhs = normalize_sparse(rhs);
                if lhs != rhs {
                    return Some(
                        Witness::new(vec![m, x, y], &dense(&lhs, md), &dense(&rhs, md))
                            .with_note("[m,[x,y]] vs [[m,x],y] - [[m,y],x]"),
                    );
                }
            }
        }
        None
    });
    AxiomReport::from_search("right module", found)
}

/// A zero-bracket algebra of the given dimension.
pub fn abelian(dim: usize) -> LeibnizAlgebra {
    LeibnizAlgebra::trusted(default_names(dim), Table::zero(dim))
}

/// sl₂ in the basis (e, h, f) with `[h,e] = 2e`, `[h,f] = −2f`, `[e,f] = h`.
pub fn sl2() -> LeibnizAlgebra {
    use crate::exactlin::q;
    let t = Table::from_fn(3, |i, j| match (i, j) {
        (0, 2) => vec![(1, q(1))],
        (2, 0) => vec![(1, q(-1))],
        (1, 0) => vec![(0, q(2))],
        (0, 1) => vec![(0, q(-2))],
        (1, 2) => vec![(2, q(-2))],
        (2, 1) => vec![(2, q(2))],
        _ => vec![],
    });
    LeibnizAlgebra::new(vec!["e".into(), "h".into(), "f".into()], t).expect("sl2 is a Lie algebra")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::q;

    #[test]
    fn sl2_is_lie_and_perfect() {
        let l = sl2();
        let c = check_leibniz(l.table());
        assert!(c.identity.holds && c.is_lie());
        assert!(is_perfect(&l));
        assert_eq!(center(&l).dim(), 0);
    }

    #[test]
    fn perturbed_table_fails_with_witness() {
        let mut t = sl2().table().clone();
        t.set(0, 2, vec![(1, q(2))]);
        let c = check_leibniz(&t);
        assert!(!c.identity.holds);
        let w = c.identity.counterexample.unwrap();
        assert_eq!(w.tuple.len(), 3);
        assert_ne!(w.lhs, w.rhs);
    }

    #[test]
    fn one_dim_square_is_rejected() {
        let t = Table::from_fn(1, |_, _| vec![(0, q(1))]);
        assert!(matches!(
            LeibnizAlgebra::from_table(t),
            Err(Error::LeibnizIdentityFailure(_))
        ));
    }

    #[test]
    fn ad_of_h_in_sl2() {
        let l = sl2();
        let op = ad(&l, &l.basis_vec(1));
        // ad h (x) = −[x, h] = [h, x]: e ↦ 2e, h ↦ 0, f ↦ −2f.
        assert_eq!(
            op.matrix().to_dense(),
            vec![
                vec![q(2), q(0), q(0)],
                vec![q(0), q(0), q(0)],
                vec![q(0), q(0), q(-2)]
            ]
        );
        let central = ad(&abelian(2), &[q(1), q(1)]);
        assert!(central.matrix().is_zero());
    }

    #[test]
    fn derivation_counts() {
        let d = derivations(&sl2());
        assert_eq!((d.der.dim(), d.inn.dim()), (3, 3));
        let a = derivations(&abelian(2));
        assert_eq!((a.der.dim(), a.inn.dim()), (4, 0));
    }

    #[test]
    fn abelian_center_and_derived() {
        let a = abelian(3);
        assert_eq!(center(&a).dim(), 3);
        assert!(!is_perfect(&a));
        assert_eq!(derived_subalgebra(&a).dim(), 0);
    }

    #[test]
    fn lie_quotient_of_lie_algebra_is_itself() {
        let (q, p) = lie_quotient(&sl2()).unwrap();
        assert_eq!(q.dim(), 3);
        assert_eq!(p, Matrix::identity(3));
    }

    #[test]
    fn adjoint_and_zero_actions_are_modules() {
        let l = sl2();
        assert!(check_right_module(&l, &RightAction::adjoint(&l)).holds);
        assert!(check_right_module(&l, &RightAction::zero(2, 3)).holds);
    }

    #[test]
    fn json_round_trip() {
        let l = sl2();
        let text = serde_json::to_string(&l.to_json()).unwrap();
        let back = LeibnizAlgebra::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, l);
        let mut bad = l.to_json();
        bad.bracket.push((0, 0, 9, "1/1".into()));
        assert!(LeibnizAlgebra::from_json(&bad).is_err());
    }
}
