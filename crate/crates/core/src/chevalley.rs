//! Split simple Lie algebras with a Chevalley basis, and the operators
//! `exp ad`, `n_α(t)`, `h_α(t)` acting on any Leibniz algebra containing one.
//!
//! Basis order: `e_α` for every root in [`RootSystem`] order, then `H_1..H_l`.
//! Type A uses matrix units; types D and E use a sign cocycle on the root
//! lattice.

use num_traits::{One, Zero};
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::exactlin::{inverse, q, sparse_from_dense, Matrix, SparseVec, Q};
use crate::leibniz::{ad, LeibnizAlgebra};
use crate::rootsys::{Root, RootKind, RootSystem};
use crate::table::Table;

/// A linear operator on the coordinate space of an algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraOperator {
    matrix: Matrix,
    note: String,
}

impl AlgebraOperator {
    pub fn new(matrix: Matrix, note: impl Into<String>) -> Self {
        assert_eq!(matrix.rows(), matrix.cols(), "operators are square");
        AlgebraOperator {
            matrix,
            note: note.into(),
        }
    }

    pub fn identity(dim: usize) -> Self {
        AlgebraOperator::new(Matrix::identity(dim), "id")
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn note(&self) -> &str {
        &self.note
    }

    pub fn apply(&self, v: &[Q]) -> Vec<Q> {
        self.matrix.mul_vec(v)
    }

    /// `self ∘ other`.
    pub fn after(&self, other: &AlgebraOperator) -> AlgebraOperator {
        AlgebraOperator::new(
            self.matrix.mul(&other.matrix),
            format!("{} {}", self.note, other.note),
        )
    }

    pub fn inverse(&self) -> Result<AlgebraOperator> {
        Ok(AlgebraOperator::new(
            inverse(&self.matrix)?,
            format!("({})^-1", self.note),
        ))
    }

    /// First basis pair where the operator fails to respect the bracket.
    pub fn automorphism_failure(&self, l: &LeibnizAlgebra) -> Option<crate::Witness> {
        crate::leibniz::homomorphism_failure(l, l, &self.matrix)
    }
}

/// `exp(t · ad x) = Σ (t · ad x)^k / k!`.
pub fn exp_ad(l: &LeibnizAlgebra, x: &[Q], t: &Q) -> Result<AlgebraOperator> {
    let n = l.dim();
    let note = "exp ad".to_string();
    if t.is_zero() {
        return Ok(AlgebraOperator::new(Matrix::identity(n), note));
    }
    let adx = ad(l, x);
    let m = adx.matrix();
    let mut cols: Vec<SparseVec> = Vec::with_capacity(n);
    for j in 0..n {
        let mut term: SparseVec = vec![(j, Q::one())];
        let mut acc = term.clone();
        let mut k = 0usize;
        loop {
            k += 1;
            let next = sparse_from_dense(&m.mul_sparse(&term));
            if next.is_empty() {
                break;
            }
            if k > n {
                return Err(Error::NotNilpotent { bound: n + 1 });
            }
            let scale = t / Q::from_integer(k.into());
            term = next.into_iter().map(|(i, a)| (i, a * &scale)).collect();
            acc.extend(term.iter().cloned());
            acc = crate::exactlin::normalize_sparse(acc);
        }
        cols.push(acc);
    }
    let op = AlgebraOperator::new(Matrix::from_columns(n, &cols), note);
    debug_assert!(op.automorphism_failure(l).is_none(), "exp ad is an automorphism");
    Ok(op)
}

/// `n(t) = exp(t ad e) exp(−t⁻¹ ad f) exp(t ad e)` for designated `e = e_α`,
/// `f = e_{−α}` given in the coordinates of `l`.
pub fn n_operator(l: &LeibnizAlgebra, e: &[Q], f: &[Q], t: &Q) -> Result<AlgebraOperator> {
    if t.is_zero() {
        return Err(Error::ZeroParameter);
    }
    let a = exp_ad(l, e, t)?;
    let b = exp_ad(l, f, &(-t.recip()))?;
    let m = a.matrix().mul(b.matrix()).mul(a.matrix());
    Ok(AlgebraOperator::new(m, format!("n({t})")))
}

/// `h(t) = n(t) n(1)⁻¹`, using `n(1)⁻¹ = n(−1)`.
pub fn h_operator(l: &LeibnizAlgebra, e: &[Q], f: &[Q], t: &Q) -> Result<AlgebraOperator> {
    let nt = n_operator(l, e, f, t)?;
    let n1 = n_operator(l, e, f, &Q::one())?;
    let ninv = n_operator(l, e, f, &-Q::one())?;
    debug_assert_eq!(n1.matrix().mul(ninv.matrix()), Matrix::identity(l.dim()));
    Ok(AlgebraOperator::new(
        nt.matrix().mul(ninv.matrix()),
        format!("h({t})"),
    ))
}

/// The split simple Lie algebra of a root system.
#[derive(Debug, Clone)]
pub struct ChevalleyAlgebra {
    rs: RootSystem,
    /// Integer structure constants, `ints[i * dim + j] = [b_i, b_j]`.
    ints: Vec<Vec<(usize, i64)>>,
    algebra: LeibnizAlgebra,
}

type IntVec = Vec<(usize, i64)>;

fn int_normalize(mut v: IntVec) -> IntVec {
    v.sort_by_key(|(i, _)| *i);
    let mut out: IntVec = Vec::with_capacity(v.len());
    for (i, x) in v {
        match out.last_mut() {
            Some((j, y)) if *j == i => *y += x,
            _ => out.push((i, x)),
        }
    }
    out.retain(|(_, x)| *x != 0);
    out
}

/// Sign cocycle on the root lattice: bimultiplicative, with
/// ε(αᵢ, αᵢ) = −1, ε(αᵢ, αⱼ) = (−1)^{(αᵢ, αⱼ)} for i < j and 1 for i > j.
pub fn cocycle(rs: &RootSystem, a: &[i64], b: &[i64]) -> i64 {
    let c = rs.cartan();
    let mut parity = 0i64;
    for i in 0..a.len() {
        parity += a[i] * b[i];
        for j in i + 1..b.len() {
            if c[i][j] % 2 != 0 {
                parity += a[i] * b[j];
            }
        }
    }
    if parity.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

impl ChevalleyAlgebra {
    pub fn build(rs: &RootSystem) -> Result<Self> {
        let nr = rs.len();
        let l = rs.rank();
        let dim = nr + l;
        let sign = |r: Root| if rs.is_positive(r) { 1 } else { -1 };
        let structure = |a: Root, b: Root, s: Root| -> i64 {
            match rs.kind() {
                RootKind::A => {
                    // e_a = E_ij, e_b = E_kl: +1 when j = k, −1 when i = l.
                    let (xa, xb) = (rs.ambient(a), rs.ambient(b));
                    let j = xa.iter().position(|&v| v == -1).unwrap();
                    let k = xb.iter().position(|&v| v == 1).unwrap();
                    if j == k {
                        1
                    } else {
                        -1
                    }
                }
                RootKind::D | RootKind::E => {
                    sign(a) * sign(b) * sign(s) * cocycle(rs, rs.coeffs(a), rs.coeffs(b))
                }
            }
        };
        let mut ints: Vec<IntVec> = vec![Vec::new(); dim * dim];
        for a in rs.roots() {
            for b in rs.roots() {
                let entry = &mut ints[a * dim + b];
                if b == rs.negative(a) {
                    // [e_α, e_−α] = α∨ = Σ kᵢ Hᵢ.
                    *entry = rs
                        .coeffs(a)
                        .iter()
                        .enumerate()
                        .filter(|(_, &k)| k != 0)
                        .map(|(i, &k)| (nr + i, k))
                        .collect();
                } else if let Some(s) = rs.sum(a, b) {
                    *entry = vec![(s, structure(a, b, s))];
                }
            }
            for i in 0..l {
                let p = rs.pairing_simple(rs.coeffs(a), i);
                if p != 0 {
                    ints[(nr + i) * dim + a] = vec![(a, p)];
                    ints[a * dim + nr + i] = vec![(a, -p)];
                }
            }
        }
        let g = ChevalleyAlgebra {
            rs: rs.clone(),
            algebra: LeibnizAlgebra::trusted(Vec::new(), Table::zero(0)),
            ints,
        };
        g.verify()?;
        let table = Table::from_fn(dim, |i, j| {
            g.ints[i * dim + j].iter().map(|&(k, v)| (k, q(v))).collect()
        });
        let names = (0..dim).map(|i| g.basis_name(i)).collect();
        Ok(ChevalleyAlgebra {
            algebra: LeibnizAlgebra::trusted(names, table),
            ..g
        })
    }

    pub fn from_label(label: &str) -> Result<Self> {
        ChevalleyAlgebra::build(&RootSystem::from_label(label)?)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn dim(&self) -> usize {
        self.rs.len() + self.rs.rank()
    }

    pub fn algebra(&self) -> &LeibnizAlgebra {
        &self.algebra
    }

    /// Basis index of `e_α`.
    pub fn e(&self, r: Root) -> usize {
        r
    }

    /// Basis index of `Hᵢ`, 0-based.
    pub fn h(&self, i: usize) -> usize {
        self.rs.len() + i
    }

    pub fn basis_name(&self, i: usize) -> String {
        if i < self.rs.len() {
            format!("e({})", self.rs.name(i))
        } else {
            format!("h{}", i - self.rs.len() + 1)
        }
    }

    pub fn int_bracket(&self, i: usize, j: usize) -> &[(usize, i64)] {
        &self.ints[i * self.dim() + j]
    }

    /// The constant `c` in `[e_α, e_β] = c e_{α+β}`, or 0.
    pub fn structure_constant(&self, a: Root, b: Root) -> i64 {
        match self.rs.sum(a, b) {
            Some(s) => self
                .int_bracket(a, b)
                .iter()
                .find(|(k, _)| *k == s)
                .map_or(0, |(_, v)| *v),
            None => 0,
        }
    }

    /// Coordinates of α∨ in the `Hᵢ`.
    pub fn coroot(&self, r: Root) -> &[i64] {
        self.rs.coeffs(r)
    }

    fn int_br_left(&self, x: usize, v: &[(usize, i64)]) -> IntVec {
        let mut out = Vec::new();
        for &(k, c) in v {
            out.extend(self.int_bracket(x, k).iter().map(|&(m, a)| (m, c * a)));
        }
        int_normalize(out)
    }

    fn int_br_right(&self, v: &[(usize, i64)], z: usize) -> IntVec {
        let mut out = Vec::new();
        for &(k, c) in v {
            out.extend(self.int_bracket(k, z).iter().map(|&(m, a)| (m, c * a)));
        }
        int_normalize(out)
    }

    /// The Jacobi identity in Leibniz form on one basis triple.
    pub fn jacobi_holds(&self, x: usize, y: usize, z: usize) -> bool {
        let lhs = self.int_br_left(x, self.int_bracket(y, z));
        let mut rhs = self.int_br_right(self.int_bracket(x, y), z);
        rhs.extend(
            self.int_br_right(self.int_bracket(x, z), y)
                .into_iter()
                .map(|(m, a)| (m, -a)),
        );
        lhs == int_normalize(rhs)
    }

    fn verify(&self) -> Result<()> {
        let rs = &self.rs;
        let dim = self.dim();
        let fail = |msg: String| Err(Error::ConstructionFailure(msg));
        for i in 0..dim {
            for j in 0..dim {
                let a = int_normalize(self.int_bracket(i, j).to_vec());
                let b: IntVec = self.int_bracket(j, i).iter().map(|&(k, v)| (k, -v)).collect();
                if a != b {
                    return fail(format!("antisymmetry fails at ({i}, {j})"));
                }
            }
        }
        for a in rs.roots() {
            if self.int_bracket(a, rs.negative(a)).len() != rs.coeffs(a).iter().filter(|&&k| k != 0).count() {
                return fail(format!("[e_a, e_-a] is not the coroot for {}", rs.name(a)));
            }
            for b in rs.roots() {
                let c = self.structure_constant(a, b);
                let expected_nonzero = rs.sum(a, b).is_some();
                if expected_nonzero != (c == 1 || c == -1) {
                    return fail(format!("[e_a, e_b] malformed for ({}, {})", rs.name(a), rs.name(b)));
                }
            }
        }
        let bad = (0..dim).into_par_iter().find_map_first(|x| {
            for y in 0..dim {
                for z in 0..dim {
                    if !self.jacobi_holds(x, y, z) {
                        return Some((x, y, z));
                    }
                }
            }
            None
        });
        if let Some((x, y, z)) = bad {
            return fail(format!("Jacobi identity fails at ({x}, {y}, {z})"));
        }
        Ok(())
    }

    /// SHA-256 of the canonical structure-constant serialization.
    pub fn digest(&self) -> String {
        let mut h = Sha256::new();
        h.update(self.rs.label().as_bytes());
        for (i, e) in self.ints.iter().enumerate() {
            for (k, v) in e {
                h.update(format!("{},{},{},{};", i / self.dim(), i % self.dim(), k, v).as_bytes());
            }
        }
        hex::encode(h.finalize())
    }

    pub fn n(&self, r: Root, t: &Q) -> Result<AlgebraOperator> {
        let l = &self.algebra;
        n_operator(l, &l.basis_vec(r), &l.basis_vec(self.rs.negative(r)), t)
    }

    pub fn h_op(&self, r: Root, t: &Q) -> Result<AlgebraOperator> {
        let l = &self.algebra;
        h_operator(l, &l.basis_vec(r), &l.basis_vec(self.rs.negative(r)), t)
    }
}

/// Coordinates of the Chevalley basis `e_α`, `Hᵢ` inside some algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub e: Vec<Vec<Q>>,
    pub h: Vec<Vec<Q>>,
}

/// Wire form: `{"e": {"root name": [coords]}, "H": [[coords], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct EmbeddingJson {
    pub e: std::collections::BTreeMap<String, Vec<String>>,
    #[serde(rename = "H")]
    pub h: Vec<Vec<String>>,
}

impl Embedding {
    /// Image of Chevalley basis vector `i` (roots first, then the `Hᵢ`).
    pub fn basis_image(&self, i: usize) -> &[Q] {
        if i < self.e.len() {
            &self.e[i]
        } else {
            &self.h[i - self.e.len()]
        }
    }

    pub fn target_dim(&self) -> usize {
        self.h.first().map_or(0, Vec::len)
    }

    /// Image of an element of 𝔤̇ given in Chevalley coordinates.
    pub fn apply(&self, x: &[Q]) -> Vec<Q> {
        let mut out = crate::exactlin::zeros(self.target_dim());
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                crate::exactlin::axpy_dense(&mut out, c, self.basis_image(i));
            }
        }
        out
    }

    /// Transports every image through a linear map.
    pub fn map(&self, m: &Matrix) -> Embedding {
        Embedding {
            e: self.e.iter().map(|v| m.mul_vec(v)).collect(),
            h: self.h.iter().map(|v| m.mul_vec(v)).collect(),
        }
    }

    pub fn identity(g: &ChevalleyAlgebra) -> Embedding {
        let l = g.algebra();
        Embedding {
            e: g.root_system().roots().map(|r| l.basis_vec(g.e(r))).collect(),
            h: (0..g.root_system().rank()).map(|i| l.basis_vec(g.h(i))).collect(),
        }
    }

    pub fn to_json(&self, rs: &RootSystem) -> EmbeddingJson {
        let fmt = |v: &Vec<Q>| v.iter().map(crate::exactlin::format_q).collect();
        EmbeddingJson {
            e: rs.roots().map(|r| (rs.name(r), fmt(&self.e[r]))).collect(),
            h: self.h.iter().map(fmt).collect(),
        }
    }

    pub fn from_json(json: &EmbeddingJson, rs: &RootSystem, dim: usize) -> Result<Embedding> {
        let parse = |what: String, v: &[String]| -> Result<Vec<Q>> {
            if v.len() != dim {
                return Err(Error::Format(format!("{what}: {} coordinates, expected {dim}", v.len())));
            }
            v.iter()
                .enumerate()
                .map(|(i, s)| crate::exactlin::parse_q(s).map_err(|e| Error::Format(format!("{what}[{i}]: {e}"))))
                .collect()
        };
        let mut e = Vec::with_capacity(rs.len());
        for r in rs.roots() {
            let name = rs.name(r);
            let v = json
                .e
                .get(&name)
                .ok_or_else(|| Error::Format(format!("e: missing root \"{name}\"")))?;
            e.push(parse(format!("e[\"{name}\"]"), v)?);
        }
        if let Some(extra) = json.e.keys().find(|k| rs.by_name(k).is_none()) {
            return Err(Error::Format(format!("e: \"{extra}\" is not a root of {}", rs.label())));
        }
        if json.h.len() != rs.rank() {
            return Err(Error::Format(format!("H: {} entries, expected {}", json.h.len(), rs.rank())));
        }
        let h = json
            .h
            .iter()
            .enumerate()
            .map(|(i, v)| parse(format!("H[{i}]"), v))
            .collect::<Result<_>>()?;
        Ok(Embedding { e, h })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{q_frac, scale};

    fn g(label: &str) -> ChevalleyAlgebra {
        ChevalleyAlgebra::from_label(label).unwrap()
    }

    #[test]
    fn dimensions() {
        assert_eq!(g("A2").dim(), 8);
        assert_eq!(g("A3").dim(), 15);
        assert_eq!(g("D4").dim(), 28);
        assert_eq!(g("E6").dim(), 78);
    }

    #[test]
    fn a2_matrix_units() {
        let g = g("A2");
        // [E12, E23] = E13.
        assert_eq!(g.structure_constant(0, 1), 1);
        assert_eq!(g.structure_constant(1, 0), -1);
    }

    #[test]
    fn cocycle_is_skew_up_to_pairing() {
        let rs = RootSystem::from_label("E6").unwrap();
        for a in rs.roots() {
            for b in rs.roots() {
                let p = rs.pairing(a, b);
                let s = cocycle(&rs, rs.coeffs(a), rs.coeffs(b)) * cocycle(&rs, rs.coeffs(b), rs.coeffs(a));
                assert_eq!(s, if p % 2 == 0 { 1 } else { -1 });
            }
        }
    }

    #[test]
    fn exp_ad_basics() {
        let g = g("A2");
        let l = g.algebra();
        let x = l.basis_vec(0);
        assert_eq!(exp_ad(l, &x, &q(0)).unwrap().matrix(), &Matrix::identity(8));
        let op = exp_ad(l, &x, &q(1)).unwrap();
        let allowed = [q(0), q(1), q(-1), q_frac(1, 2), q_frac(-1, 2), q(2), q(-2)];
        assert!(op.matrix().triplets().all(|(_, _, v)| allowed.contains(v)));
        // (ad e_α)³ = 0.
        let m = ad(l, &x).matrix().clone();
        assert!(m.mul(&m).mul(&m).is_zero());
        assert!(!m.mul(&m).is_zero());
    }

    #[test]
    fn exp_ad_rejects_non_nilpotent() {
        let g = g("A2");
        let l = g.algebra();
        let h = l.basis_vec(g.h(0));
        assert!(matches!(exp_ad(l, &h, &q(1)), Err(Error::NotNilpotent { .. })));
    }

    #[test]
    fn n_beta_on_e_alpha() {
        let g = g("A2");
        let l = g.algebra();
        let (a, b) = (0, 1);
        let nb = g.n(b, &q(1)).unwrap();
        let lhs = nb.apply(&l.basis_vec(a));
        let rhs: Vec<Q> = l.bracket(&l.basis_vec(a), &l.basis_vec(b)).iter().map(|x| -x).collect();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn n_beta_on_e_alpha_for_every_a2_pair_of_a3() {
        let g = g("A3");
        let rs = g.root_system();
        let l = g.algebra();
        for p in rs.enumerate_a2_pairs().unwrap() {
            let lhs = g.n(p.second, &q(1)).unwrap().apply(&l.basis_vec(p.first));
            let rhs = scale(&l.bracket(&l.basis_vec(p.first), &l.basis_vec(p.second)), &q(-1));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn n_squared_is_a_sign_on_root_vectors() {
        for label in ["A2", "A3", "D4"] {
            let g = g(label);
            let rs = g.root_system();
            let l = g.algebra();
            for a in rs.roots() {
                let n = g.n(a, &q(1)).unwrap();
                for b in 0..g.dim() {
                    let v = l.basis_vec(b);
                    let twice = n.apply(&n.apply(&v));
                    let sign = if b < rs.len() && rs.pairing(b, a) % 2 != 0 { -1 } else { 1 };
                    assert_eq!(twice, scale(&v, &q(sign)), "{label}: n_{a}(1)^2 on {}", g.basis_name(b));
                }
            }
        }
    }

    #[test]
    fn orthogonal_root_operators_fix_root_vectors() {
        let g = g("D4");
        let rs = g.root_system();
        let l = g.algebra();
        for c in rs.roots() {
            let n = g.n(c, &q(1)).unwrap();
            for a in rs.roots().filter(|&a| rs.pairing(c, a) == 0) {
                assert_eq!(n.apply(&l.basis_vec(a)), l.basis_vec(a));
            }
        }
    }

    #[test]
    fn operators_are_automorphisms() {
        for label in ["A2", "A3", "D4"] {
            let g = g(label);
            for r in g.root_system().roots() {
                for t in [q(1), q(2), q_frac(-1, 3)] {
                    assert!(g.n(r, &t).unwrap().automorphism_failure(g.algebra()).is_none());
                    assert!(g.h_op(r, &t).unwrap().automorphism_failure(g.algebra()).is_none());
                }
            }
        }
    }

    #[test]
    fn h_is_identity_at_one_and_t_squared_on_its_root() {
        let g = g("A2");
        let l = g.algebra();
        assert_eq!(g.h_op(0, &q(1)).unwrap().matrix(), &Matrix::identity(8));
        let t = q(3);
        let v = g.h_op(0, &t).unwrap().apply(&l.basis_vec(0));
        assert_eq!(v, crate::exactlin::scale(&l.basis_vec(0), &q(9)));
        let h = l.basis_vec(g.h(1));
        assert_eq!(g.h_op(0, &t).unwrap().apply(&h), h);
    }

    #[test]
    fn digest_is_stable() {
        assert_eq!(g("A2").digest(), g("A2").digest());
        assert_ne!(g("A2").digest(), g("A3").digest());
    }

    #[test]
    fn zero_parameter() {
        assert!(matches!(g("A2").n(0, &q(0)), Err(Error::ZeroParameter)));
    }
}
