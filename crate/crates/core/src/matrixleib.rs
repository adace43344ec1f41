//! Matrix Leibniz algebras over a dialgebra, the Steinberg model, and the
//! current algebras `𝔤̇ ⊗ R`.

use num_traits::Zero;

use crate::chevalley::{ChevalleyAlgebra, Embedding};
use crate::dialg::{check_alternative, check_associative, is_commutative, Dialgebra};
use crate::error::{Error, Result};
use crate::exactlin::{
    axpy_dense, format_q, is_zero_vec, normalize_sparse, sparse_from_dense, unit, zeros, SparseVec,
    Subspace, Q,
};
use crate::leibniz::{derived_subalgebra, is_perfect, universal_central_extension, LeibnizAlgebra, Uce};
use crate::rootsys::{Root, RootSystem};
use crate::table::Table;
use crate::witness::{AxiomReport, Witness};

/// `gl(n, D)` or `sl(n, D)` realized on an explicit basis.
///
/// Coordinates of `gl` are `(i·n + j)·dim D + a` for `E_ij(b_a)`. For `sl`
/// the carrier basis is every off-diagonal `E_ij(b_a)` in that order,
/// followed by a basis of the diagonal part.
#[derive(Debug, Clone)]
pub struct MatrixLeibnizAlgebra {
    n: usize,
    d: Dialgebra,
    carrier: LeibnizAlgebra,
    special: bool,
    /// Diagonal part of `sl` in `gl` coordinates (unused for `gl`).
    diagonal: Subspace,
}

fn gl_index(n: usize, m: usize, i: usize, j: usize, a: usize) -> usize {
    (i * n + j) * m + a
}

fn gl_table(n: usize, d: &Dialgebra) -> Table {
    let m = d.dim();
    Table::from_fn(n * n * m, |x, y| {
        let (ij, a) = (x / m, x % m);
        let (kl, b) = (y / m, y % m);
        let (i, j, k, l) = (ij / n, ij % n, kl / n, kl % n);
        let mut out = Vec::new();
        if j == k {
            out.extend(d.left_table().get(a, b).iter().map(|(c, v)| (gl_index(n, m, i, l, *c), v.clone())));
        }
        if i == l {
            out.extend(d.right_table().get(b, a).iter().map(|(c, v)| (gl_index(n, m, k, j, *c), -v)));
        }
        normalize_sparse(out)
    })
}

fn gl_names(n: usize, d: &Dialgebra) -> Vec<String> {
    let mut names = Vec::with_capacity(n * n * d.dim());
    for i in 0..n {
        for j in 0..n {
            for a in d.basis_names() {
                names.push(format!("E{}{}({a})", i + 1, j + 1));
            }
        }
    }
    names
}

fn require_associative(d: &Dialgebra) -> Result<()> {
    match check_associative(d).into_iter().find(|r| !r.holds) {
        Some(r) => Err(Error::NotAssociative(r.counterexample.expect("failing report carries a witness"))),
        None => Ok(()),
    }
}

fn require_alternative(d: &Dialgebra) -> Result<()> {
    match check_alternative(d).into_iter().find(|r| !r.holds) {
        Some(r) => Err(Error::NotAlternative(r.counterexample.expect("failing report carries a witness"))),
        None => Ok(()),
    }
}

fn gl_unchecked(n: usize, d: &Dialgebra) -> Result<MatrixLeibnizAlgebra> {
    if n < 2 {
        return Err(Error::ConstructionFailure(format!("matrix size must be at least 2, got {n}")));
    }
    let carrier = LeibnizAlgebra::new(gl_names(n, d), gl_table(n, d))?;
    Ok(MatrixLeibnizAlgebra {
        n,
        d: d.clone(),
        carrier,
        special: false,
        diagonal: Subspace::zero(n * n * d.dim()),
    })
}

pub fn build_gl(n: usize, d: &Dialgebra) -> Result<MatrixLeibnizAlgebra> {
    require_associative(d)?;
    gl_unchecked(n, d)
}

pub fn build_sl(n: usize, d: &Dialgebra) -> Result<MatrixLeibnizAlgebra> {
    require_associative(d)?;
    sl_from_gl(&gl_unchecked(n, d)?)
}

fn render(v: &SparseVec, names: &[String]) -> String {
    let mut s = String::new();
    for (k, (i, c)) in v.iter().enumerate() {
        let coef = format_q(c);
        let coef = coef.strip_suffix("/1").unwrap_or(&coef);
        match (k, coef) {
            (0, "1") => {}
            (0, "-1") => s.push('-'),
            (_, "1") => s.push('+'),
            (_, "-1") => s.push('-'),
            (0, c) => s.push_str(&format!("{c}*")),
            (_, c) if c.starts_with('-') => s.push_str(&format!("{c}*")),
            (_, c) => s.push_str(&format!("+{c}*")),
        }
        s.push_str(&names[*i]);
    }
    s
}

fn sl_from_gl(gl: &MatrixLeibnizAlgebra) -> Result<MatrixLeibnizAlgebra> {
    let (n, m) = (gl.n, gl.d.dim());
    let total = n * n * m;
    let derived = derived_subalgebra(&gl.carrier);
    let mut basis: Vec<Vec<Q>> = Vec::new();
    let mut names = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            for a in 0..m {
                let v = unit(total, gl_index(n, m, i, j, a));
                if !derived.contains(&v) {
                    return Err(Error::ConstructionFailure(format!(
                        "{} is not a commutator",
                        gl.carrier.basis_names()[gl_index(n, m, i, j, a)]
                    )));
                }
                basis.push(v);
                names.push(gl.carrier.basis_names()[gl_index(n, m, i, j, a)].clone());
            }
        }
    }
    let diag_coords: Vec<SparseVec> = (0..n)
        .flat_map(|i| (0..m).map(move |a| vec![(gl_index(n, m, i, i, a), num_traits::One::one())]))
        .collect();
    let diagonal = derived.intersection(&Subspace::span(total, &diag_coords));
    for v in diagonal.basis() {
        basis.push(crate::exactlin::dense_from_sparse(v, total));
        names.push(render(v, gl.carrier.basis_names()));
    }
    if basis.len() != derived.dim() {
        return Err(Error::ConstructionFailure(format!(
            "off-diagonal plus diagonal parts have dimension {} but the derived algebra has {}",
            basis.len(),
            derived.dim()
        )));
    }
    let off = n * (n - 1) * m;
    let coords = |x: &[Q]| -> Option<Vec<Q>> {
        let mut out = Vec::with_capacity(basis.len());
        let mut diag = zeros(total);
        for i in 0..n {
            for j in 0..n {
                for a in 0..m {
                    let c = &x[gl_index(n, m, i, j, a)];
                    if i == j {
                        diag[gl_index(n, m, i, j, a)] = c.clone();
                    } else {
                        out.push(c.clone());
                    }
                }
            }
        }
        out.extend(diagonal.coords(&diag)?);
        Some(out)
    };
    let table = gl
        .carrier
        .table()
        .restrict(&basis, coords)
        .ok_or_else(|| Error::ConstructionFailure("sl is not closed under the bracket".into()))?;
    debug_assert_eq!(off + diagonal.dim(), table.dim());
    let sl = MatrixLeibnizAlgebra {
        n,
        d: gl.d.clone(),
        carrier: LeibnizAlgebra::new(names, table)?,
        special: true,
        diagonal,
    };
    if let Some(w) = sl.generator_relation_failure() {
        return Err(Error::ConstructionFailure(format!("generator relation fails: {w}")));
    }
    if !is_perfect(&sl.carrier) {
        return Err(Error::NotPerfect {
            derived: derived_subalgebra(&sl.carrier).dim(),
            dim: sl.dim(),
        });
    }
    Ok(sl)
}

impl MatrixLeibnizAlgebra {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dialgebra(&self) -> &Dialgebra {
        &self.d
    }

    pub fn carrier(&self) -> &LeibnizAlgebra {
        &self.carrier
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn is_special(&self) -> bool {
        self.special
    }

    fn gl_dim(&self) -> usize {
        self.n * self.n * self.d.dim()
    }

    /// Carrier coordinates of an element given in `gl` coordinates.
    pub fn from_gl(&self, x: &[Q]) -> Option<Vec<Q>> {
        if !self.special {
            return Some(x.to_vec());
        }
        let (n, m) = (self.n, self.d.dim());
        let mut out = Vec::with_capacity(self.dim());
        let mut diag = zeros(self.gl_dim());
        for i in 0..n {
            for j in 0..n {
                for a in 0..m {
                    let k = gl_index(n, m, i, j, a);
                    if i == j {
                        diag[k] = x[k].clone();
                    } else {
                        out.push(x[k].clone());
                    }
                }
            }
        }
        out.extend(self.diagonal.coords(&diag)?);
        Some(out)
    }

    /// `gl` coordinates of a carrier element.
    pub fn to_gl(&self, x: &[Q]) -> Vec<Q> {
        if !self.special {
            return x.to_vec();
        }
        let (n, m) = (self.n, self.d.dim());
        let mut out = zeros(self.gl_dim());
        let mut p = 0;
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                for a in 0..m {
                    out[gl_index(n, m, i, j, a)] = x[p].clone();
                    p += 1;
                }
            }
        }
        for (c, v) in x[p..].iter().zip(self.diagonal.basis()) {
            if !c.is_zero() {
                crate::exactlin::axpy(&mut out, c, v);
            }
        }
        out
    }

    /// `E_ij(a)` in `gl` coordinates.
    pub fn gl_elem(&self, i: usize, j: usize, a: &[Q]) -> Vec<Q> {
        let m = self.d.dim();
        let mut out = zeros(self.gl_dim());
        for (b, c) in a.iter().enumerate() {
            out[gl_index(self.n, m, i, j, b)] = c.clone();
        }
        out
    }

    /// `E_ij(a)` in carrier coordinates; diagonal entries must lie in `sl`.
    pub fn elem(&self, i: usize, j: usize, a: &[Q]) -> Option<Vec<Q>> {
        self.from_gl(&self.gl_elem(i, j, a))
    }

    /// `E_ij(a)` for `i ≠ j`, which always lies in the carrier.
    pub fn off(&self, i: usize, j: usize, a: &[Q]) -> Vec<Q> {
        assert_ne!(i, j);
        self.elem(i, j, a).expect("off-diagonal elements lie in sl")
    }

    /// The part of a carrier element in the `(i, j)` slot, as an element of `D`.
    pub fn entry(&self, x: &[Q], i: usize, j: usize) -> Vec<Q> {
        let g = self.to_gl(x);
        let m = self.d.dim();
        (0..m).map(|a| g[gl_index(self.n, m, i, j, a)].clone()).collect()
    }

    pub fn is_diagonal(&self, x: &[Q]) -> bool {
        let g = self.to_gl(x);
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || is_zero_vec(&self.entry_gl(&g, i, j))))
    }

    fn entry_gl(&self, g: &[Q], i: usize, j: usize) -> Vec<Q> {
        let m = self.d.dim();
        (0..m).map(|a| g[gl_index(self.n, m, i, j, a)].clone()).collect()
    }

    /// The three bracket rules on off-diagonal generators.
    pub fn generator_relation_failure(&self) -> Option<Witness> {
        let (n, m) = (self.n, self.d.dim());
        let l = &self.carrier;
        let quads = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|(i, j)| i != j);
        let pairs: Vec<(usize, usize)> = quads.collect();
        for &(i, j) in &pairs {
            for &(k, ll) in &pairs {
                for a in 0..m {
                    for b in 0..m {
                        let (ua, ub) = (unit(m, a), unit(m, b));
                        let lhs = l.bracket(&self.off(i, j, &ua), &self.off(k, ll, &ub));
                        let rhs = if i != ll && j == k {
                            self.off(i, ll, &self.d.left_mul(&ua, &ub))
                        } else if i == ll && j != k {
                            self.off(k, j, &self.d.right_mul(&ub, &ua)).into_iter().map(|x| -x).collect()
                        } else if i != ll && j != k {
                            zeros(self.dim())
                        } else {
                            continue;
                        };
                        if lhs != rhs {
                            return Some(Witness::new(vec![i, j, k, ll, a, b], &lhs, &rhs));
                        }
                    }
                }
            }
        }
        None
    }

    /// Chevalley basis of `sl(n, K)` placed at the bar-unit: `e_{εᵢ−εⱼ} = E_ij(1)`
    /// and `Hᵢ = [e_{αᵢ}, e_{−αᵢ}]`.
    pub fn chevalley_embedding(&self, g: &ChevalleyAlgebra) -> Result<Embedding> {
        let u = self.d.require_bar_unit()?.to_vec();
        let rs = g.root_system();
        if rs.rank() + 1 != self.n || rs.kind() != crate::rootsys::RootKind::A {
            return Err(Error::DimensionMismatch(format!(
                "{} does not match {}x{} matrices",
                rs.label(),
                self.n,
                self.n
            )));
        }
        let e: Vec<Vec<Q>> = rs
            .roots()
            .map(|r| {
                let (i, j) = type_a_indices(rs, r);
                self.off(i, j, &u)
            })
            .collect();
        let h = (0..rs.rank())
            .map(|i| {
                let a = rs.simple(i);
                self.carrier.bracket(&e[a], &e[rs.negative(a)])
            })
            .collect();
        Ok(Embedding { e, h })
    }
}

/// `(i, j)` with `α = εᵢ − εⱼ`, 0-based.
pub fn type_a_indices(rs: &RootSystem, r: Root) -> (usize, usize) {
    let x = rs.ambient(r);
    let s = rs.ambient_scale();
    let i = x.iter().position(|&v| v == s).expect("type A root has a +1 entry");
    let j = x.iter().position(|&v| v == -s).expect("type A root has a -1 entry");
    (i, j)
}

/// `stl(n, D)` realized as the universal central extension of `sl(n, D)`.
#[derive(Debug, Clone)]
pub struct SteinbergModel {
    base: MatrixLeibnizAlgebra,
    uce: Uce,
    unit: Vec<Q>,
    /// `v_ij(b_a)` in model coordinates at `(i·n + j)·dim D + a`.
    lifts: Vec<Vec<Q>>,
}

pub fn build_steinberg_model(n: usize, d: &Dialgebra, cap: usize) -> Result<SteinbergModel> {
    if n < 3 {
        return Err(Error::ConstructionFailure(format!("the Steinberg model needs n >= 3, got {n}")));
    }
    let u = d.require_bar_unit()?.to_vec();
    if n >= 4 {
        require_associative(d)?;
    } else {
        require_alternative(d)?;
    }
    let base = sl_from_gl(&gl_unchecked(n, d)?)?;
    let uce = universal_central_extension(base.carrier(), cap)?;
    let m = d.dim();
    let mut model = SteinbergModel {
        base,
        uce,
        unit: u,
        lifts: Vec::new(),
    };
    let mut lifts = vec![Vec::new(); n * n * m];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let k = (0..n).find(|k| *k != i && *k != j).expect("n >= 3");
            for a in 0..m {
                lifts[gl_index(n, m, i, j, a)] = model.lift_via(i, j, k, &unit(m, a));
            }
        }
    }
    model.lifts = lifts;
    model.verify_lifts()?;
    if !is_perfect(model.algebra()) {
        return Err(Error::ConstructionFailure("the Steinberg model is not perfect".into()));
    }
    Ok(model)
}

impl SteinbergModel {
    pub fn base(&self) -> &MatrixLeibnizAlgebra {
        &self.base
    }

    pub fn uce(&self) -> &Uce {
        &self.uce
    }

    pub fn algebra(&self) -> &LeibnizAlgebra {
        &self.uce.extension.total
    }

    pub fn dim(&self) -> usize {
        self.algebra().dim()
    }

    pub fn kernel_dim(&self) -> usize {
        self.uce.extension.kernel.dim()
    }

    /// `ψ`, from model coordinates to `sl` carrier coordinates.
    pub fn psi(&self, x: &[Q]) -> Vec<Q> {
        self.uce.extension.projection.mul_vec(x)
    }

    /// `cls(E_ik(a) ⊗ E_kj(1))`.
    pub fn lift_via(&self, i: usize, j: usize, k: usize, a: &[Q]) -> Vec<Q> {
        let x = self.base.off(i, k, a);
        let y = self.base.off(k, j, &self.unit);
        self.uce.class_of(&x, &y)
    }

    /// `v_ij(a)`.
    pub fn v(&self, i: usize, j: usize, a: &[Q]) -> Vec<Q> {
        let (n, m) = (self.base.n, self.base.d.dim());
        let mut out = zeros(self.dim());
        for (b, c) in a.iter().enumerate() {
            if !c.is_zero() {
                axpy_dense(&mut out, c, &self.lifts[gl_index(n, m, i, j, b)]);
            }
        }
        out
    }

    fn verify_lifts(&self) -> Result<()> {
        let (n, m) = (self.base.n, self.base.d.dim());
        for i in 0..n {
            for j in 0..n {
                for a in 0..m {
                    if i == j {
                        continue;
                    }
                    let ua = unit(m, a);
                    if self.psi(&self.v(i, j, &ua)) != self.base.off(i, j, &ua) {
                        return Err(Error::ConstructionFailure(format!(
                            "psi(v_{}{}(b{a})) is not E_{}{}(b{a})",
                            i + 1,
                            j + 1,
                            i + 1,
                            j + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The defining relations, lift independence, and the diagonal image of
    /// the `H_ij(a, b)`, each checked on basis elements.
    pub fn relation_reports(&self) -> Vec<AxiomReport> {
        let (n, m) = (self.base.n, self.base.d.dim());
        let l = self.algebra();
        let d = &self.base.d;
        let idx: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|(i, j)| i != j)
            .collect();
        let neg = |v: Vec<Q>| -> Vec<Q> { v.into_iter().map(|x| -x).collect() };

        let mut linear = None;
        'lin: for &(i, j) in &idx {
            for a in 0..m {
                for b in 0..m {
                    let s = crate::exactlin::add(&unit(m, a), &crate::exactlin::scale(&unit(m, b), &Q::from_integer(2.into())));
                    let lhs = self.v(i, j, &s);
                    let k = (0..n).find(|k| *k != i && *k != j).unwrap();
                    let rhs = crate::exactlin::add(
                        &self.lift_via(i, j, k, &unit(m, a)),
                        &crate::exactlin::scale(&self.lift_via(i, j, k, &unit(m, b)), &Q::from_integer(2.into())),
                    );
                    if lhs != rhs {
                        linear = Some(Witness::new(vec![i, j, a, b], &lhs, &rhs));
                        break 'lin;
                    }
                }
            }
        }

        let mut zero = None;
        let mut chain = None;
        let mut twist = None;
        'rel: for &(i, j) in &idx {
            for &(k, ll) in &idx {
                for a in 0..m {
                    for b in 0..m {
                        let (ua, ub) = (unit(m, a), unit(m, b));
                        let lhs = l.bracket(&self.v(i, j, &ua), &self.v(k, ll, &ub));
                        let tuple = vec![i, j, k, ll, a, b];
                        if i != ll && j != k && zero.is_none() && !is_zero_vec(&lhs) {
                            zero = Some(Witness::new(tuple, &lhs, &zeros(l.dim())));
                        } else if i != ll && j == k && chain.is_none() {
                            let rhs = self.v(i, ll, &d.left_mul(&ua, &ub));
                            if lhs != rhs {
                                chain = Some(Witness::new(tuple, &lhs, &rhs));
                            }
                        } else if i == ll && j != k && twist.is_none() {
                            let rhs = neg(self.v(k, j, &d.right_mul(&ub, &ua)));
                            if lhs != rhs {
                                twist = Some(Witness::new(tuple, &lhs, &rhs));
                            }
                        }
                        if zero.is_some() && chain.is_some() && twist.is_some() {
                            break 'rel;
                        }
                    }
                }
            }
        }

        let mut independent = None;
        'ind: for &(i, j) in &idx {
            for a in 0..m {
                let ua = unit(m, a);
                let v0 = self.v(i, j, &ua);
                for k in (0..n).filter(|k| *k != i && *k != j) {
                    let vk = self.lift_via(i, j, k, &ua);
                    if vk != v0 {
                        independent = Some(Witness::new(vec![i, j, k, a], &vk, &v0));
                        break 'ind;
                    }
                }
            }
        }

        let mut diagonal = None;
        'diag: for &(i, j) in &idx {
            for a in 0..m {
                for b in 0..m {
                    let h = l.bracket(&self.v(i, j, &unit(m, a)), &self.v(j, i, &unit(m, b)));
                    let p = self.psi(&h);
                    if !self.base.is_diagonal(&p) {
                        diagonal = Some(Witness::new(vec![i, j, a, b], &p, &zeros(p.len())).with_note("not diagonal"));
                        break 'diag;
                    }
                }
            }
        }

        let mut psi = None;
        'psi: for &(i, j) in &idx {
            for a in 0..m {
                let ua = unit(m, a);
                let (lhs, rhs) = (self.psi(&self.v(i, j, &ua)), self.base.off(i, j, &ua));
                if lhs != rhs {
                    psi = Some(Witness::new(vec![i, j, a], &lhs, &rhs));
                    break 'psi;
                }
            }
        }

        vec![
            AxiomReport::from_search("v_ij(a + 2b) = v_ij(a) + 2 v_ij(b)", linear),
            AxiomReport::from_search("[v_ij(a), v_kl(b)] = 0 for i≠l, j≠k", zero),
            AxiomReport::from_search("[v_ij(a), v_jl(b)] = v_il(a⊣b) for i≠l", chain),
            AxiomReport::from_search("[v_ij(a), v_ki(b)] = -v_kj(b⊢a) for j≠k", twist),
            AxiomReport::from_search("v_ij(a) independent of the auxiliary index", independent),
            AxiomReport::from_search("psi(v_ij(a)) = E_ij(a)", psi),
            AxiomReport::from_search("psi(H_ij(a, b)) is diagonal", diagonal),
        ]
    }

    /// Chevalley basis of `sl(n, K)` at the bar-unit inside the model:
    /// `e_{εᵢ−εⱼ} = v_ij(1)` and `Hᵢ = [e_{αᵢ}, e_{−αᵢ}]`.
    pub fn chevalley_embedding(&self, g: &ChevalleyAlgebra) -> Result<Embedding> {
        let rs = g.root_system();
        if rs.rank() + 1 != self.base.n || rs.kind() != crate::rootsys::RootKind::A {
            return Err(Error::DimensionMismatch(format!(
                "{} does not match the Steinberg model of size {}",
                rs.label(),
                self.base.n
            )));
        }
        let e: Vec<Vec<Q>> = rs
            .roots()
            .map(|r| {
                let (i, j) = type_a_indices(rs, r);
                self.v(i, j, &self.unit)
            })
            .collect();
        let h = (0..rs.rank())
            .map(|i| {
                let a = rs.simple(i);
                self.algebra().bracket(&e[a], &e[rs.negative(a)])
            })
            .collect();
        Ok(Embedding { e, h })
    }
}

/// `𝔤̇ ⊗ R` with `[x⊗a, y⊗b] = [x, y] ⊗ (a⊣b)`; coordinate `(x, a)` at
/// `x·dim R + a`.
#[derive(Debug, Clone)]
pub struct TensorAlgebra {
    g: ChevalleyAlgebra,
    r: Dialgebra,
    carrier: LeibnizAlgebra,
}

pub fn build_tensor_algebra(g: &ChevalleyAlgebra, r: &Dialgebra) -> Result<TensorAlgebra> {
    r.require_bar_unit()?;
    require_associative(r)?;
    let [sym, _] = is_commutative(r);
    if let Some(w) = sym.counterexample {
        return Err(Error::NotCommutative(w));
    }
    let (dg, m) = (g.dim(), r.dim());
    let gt = g.algebra().table();
    let table = Table::from_fn(dg * m, |u, v| {
        let (x, a, y, b) = (u / m, u % m, v / m, v % m);
        let mut out = Vec::new();
        for (z, c) in gt.get(x, y) {
            for (k, w) in r.left_table().get(a, b) {
                out.push((z * m + k, c * w));
            }
        }
        normalize_sparse(out)
    });
    let names = (0..dg * m)
        .map(|u| format!("{}⊗{}", g.basis_name(u / m), r.basis_names()[u % m]))
        .collect();
    let carrier = LeibnizAlgebra::new(names, table)?;
    Ok(TensorAlgebra {
        g: g.clone(),
        r: r.clone(),
        carrier,
    })
}

impl TensorAlgebra {
    pub fn chevalley(&self) -> &ChevalleyAlgebra {
        &self.g
    }

    pub fn ring(&self) -> &Dialgebra {
        &self.r
    }

    pub fn carrier(&self) -> &LeibnizAlgebra {
        &self.carrier
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    /// `x ⊗ a` for `x` in Chevalley coordinates.
    pub fn elem(&self, x: &[Q], a: &[Q]) -> Vec<Q> {
        let m = self.r.dim();
        let mut out = zeros(self.dim());
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, w) in a.iter().enumerate() {
                out[i * m + k] = c * w;
            }
        }
        out
    }

    pub fn basis_elem(&self, i: usize, a: &[Q]) -> Vec<Q> {
        self.elem(&unit(self.g.dim(), i), a)
    }

    /// `x ↦ x ⊗ 1`.
    pub fn chevalley_embedding(&self) -> Embedding {
        let u = self.r.bar_unit().expect("checked at construction").to_vec();
        let rs = self.g.root_system();
        Embedding {
            e: rs.roots().map(|r| self.basis_elem(self.g.e(r), &u)).collect(),
            h: (0..rs.rank()).map(|i| self.basis_elem(self.g.h(i), &u)).collect(),
        }
    }
}

/// Matrix commutator table of `gl(n, D)` for `⊣ = ⊢`, built independently
/// of the Leibniz bracket formula.
pub fn commutator_table(n: usize, d: &Dialgebra) -> Table {
    let m = d.dim();
    let dimg = n * n * m;
    Table::from_fn(dimg, |x, y| {
        let (ij, a) = (x / m, x % m);
        let (kl, b) = (y / m, y % m);
        let (i, j, k, l) = (ij / n, ij % n, kl / n, kl % n);
        let mut out = zeros(dimg);
        if j == k {
            for (c, v) in d.left_table().get(a, b) {
                out[gl_index(n, m, i, l, *c)] += v;
            }
        }
        if l == i {
            for (c, v) in d.left_table().get(b, a) {
                out[gl_index(n, m, k, j, *c)] -= v;
            }
        }
        sparse_from_dense(&out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dialg::examples::*;
    use crate::exactlin::{q, sub};
    use crate::leibniz::{check_leibniz, DEFAULT_CAP};

    #[test]
    fn gl_over_k_is_the_commutator_algebra() {
        let gl = build_gl(3, &k()).unwrap();
        assert!(check_leibniz(gl.carrier().table()).is_lie());
        assert_eq!(gl.carrier().table(), &commutator_table(3, &k()));
        let gl = build_gl(2, &matrix_algebra(2)).unwrap();
        assert_eq!(gl.carrier().table(), &commutator_table(2, &matrix_algebra(2)));
    }

    #[test]
    fn gl_over_k2_is_not_lie() {
        let gl = build_gl(3, &k2()).unwrap();
        assert_eq!(gl.dim(), 18);
        let c = check_leibniz(gl.carrier().table());
        assert!(c.identity.holds && !c.lie.holds);
    }

    #[test]
    fn gl_bracket_of_opposite_units() {
        let d = k2();
        let gl = build_gl(3, &d).unwrap();
        let (a, b) = (vec![q(1), q(0)], vec![q(0), q(1)]);
        let lhs = gl.carrier().bracket(&gl.off(0, 1, &a), &gl.off(1, 0, &b));
        let rhs = sub(
            &gl.elem(0, 0, &d.left_mul(&a, &b)).unwrap(),
            &gl.elem(1, 1, &d.right_mul(&b, &a)).unwrap(),
        );
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn sl_dimensions() {
        assert_eq!(build_sl(3, &k()).unwrap().dim(), 8);
        let sl = build_sl(3, &k2()).unwrap();
        assert_eq!(sl.dim(), 16);
        assert_eq!(build_sl(4, &k2()).unwrap().dim(), 30);
        assert!(is_perfect(sl.carrier()));
        for x in 0..sl.dim() {
            let v = sl.carrier().basis_vec(x);
            assert_eq!(sl.from_gl(&sl.to_gl(&v)).unwrap(), v);
        }
    }

    #[test]
    fn steinberg_over_k_is_sl3() {
        let m = build_steinberg_model(3, &k(), DEFAULT_CAP).unwrap();
        assert_eq!(m.kernel_dim(), 0);
        assert_eq!(m.dim(), 8);
        assert!(m.relation_reports().iter().all(|r| r.holds));
    }

    #[test]
    fn steinberg_needs_a_bar_unit() {
        assert!(matches!(build_steinberg_model(3, &diff3(), DEFAULT_CAP), Err(Error::MissingBarUnit)));
    }

    #[test]
    fn tensor_algebra() {
        let g = ChevalleyAlgebra::from_label("A2").unwrap();
        let t = build_tensor_algebra(&g, &k()).unwrap();
        assert_eq!(t.carrier().table(), g.algebra().table());
        assert!(matches!(build_tensor_algebra(&g, &k2()), Err(Error::NotCommutative(_))));
        let t = build_tensor_algebra(&g, &dual_numbers()).unwrap();
        assert_eq!(t.dim(), 16);
    }
}
