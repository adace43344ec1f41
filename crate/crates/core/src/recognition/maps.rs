use num_traits::{One, Zero};
use rayon::prelude::*;

use super::{build_chart, recover_products, verify_grading, CoordinateChart, GradedDecomposition, RecoveredDialgebra};
use crate::chevalley::{n_operator, Embedding};
use crate::dialg;
use crate::error::{Error, Result};
use crate::exactlin::{
    dense_from_sparse, extend_linear_map, kernel_basis, q, q_frac, rank, scale, solve, sparse_from_dense, unit, Matrix,
    Subspace, Q,
};
use crate::leibniz::{center, homomorphism_failure, is_central, CentralExtension, LeibnizAlgebra};
use crate::matrixleib::{build_steinberg_model, build_tensor_algebra, type_a_indices, TensorAlgebra};
use crate::rootsys::{Root, RootKind};
use crate::witness::{AxiomReport, Witness};

fn first<T: Send>(items: Vec<Option<T>>) -> Option<T> {
    items.into_iter().flatten().next()
}

/// `ρ(e_β(t)) = ⟨β, α∨⟩ e_β((t⊣r)⊣s)` with `ρ = ad [e_α(r), e_{−α}(s)]`,
/// over all roots and basis vectors of `R`.
pub fn check_cartan_action(gd: &GradedDecomposition, chart: &CoordinateChart, rd: &RecoveredDialgebra) -> AxiomReport {
    let rs = gd.root_system();
    let l = gd.algebra();
    let d = &rd.dialgebra;
    let n = chart.r_dim();
    let found = rs
        .roots()
        .into_par_iter()
        .map(|a| {
            let na = rs.negative(a);
            for r in 0..n {
                let x = chart.element(a, &unit(n, r));
                for s in 0..n {
                    let h = l.bracket(&x, &chart.element(na, &unit(n, s)));
                    for b in rs.roots() {
                        let pairing = q(rs.pairing(b, a));
                        for t in 0..n {
                            let lhs = scale(&l.bracket(&chart.element(b, &unit(n, t)), &h), &-Q::one());
                            let prod = d.left_mul(&d.left_mul(&unit(n, t), &unit(n, r)), &unit(n, s));
                            let rhs = scale(&chart.element(b, &prod), &pairing);
                            if lhs != rhs {
                                return Some(Witness::new(vec![a, b, r, s, t], &lhs, &rhs));
                            }
                        }
                    }
                }
            }
            None
        })
        .collect();
    AxiomReport::from_search("ad[e_α(r), e_-α(s)] e_β(t) = ⟨β,α∨⟩ e_β((t⊣r)⊣s)", first(found))
}

/// The map `L → 𝔤̇ ⊗ R`, `e_β(r) ↦ e_β ⊗ r`, with its checks.
#[derive(Debug, Clone)]
pub struct TensorMapReport {
    pub target: TensorAlgebra,
    /// `dim(𝔤̇⊗R) × dim L`.
    pub map: Matrix,
    pub kernel: Subspace,
    pub checks: Vec<AxiomReport>,
}

impl TensorMapReport {
    pub fn kernel_dim(&self) -> usize {
        self.kernel.dim()
    }
}

/// Defines `φ` on root spaces by `e_β(r) ↦ e_β ⊗ r` and on the zero space
/// by `[e_α(r), e_{−α}(s)] ↦ α∨ ⊗ (r⊣s)`, failing when the second rule
/// is inconsistent.
pub fn build_tensor_map(gd: &GradedDecomposition, chart: &CoordinateChart, rd: &RecoveredDialgebra) -> Result<TensorMapReport> {
    let g = gd.chevalley();
    let rs = gd.root_system();
    let l = gd.algebra();
    let target = build_tensor_algebra(g, &rd.dialgebra)?;
    let n = chart.r_dim();
    let dg = g.dim();

    let mut sources = Vec::new();
    let mut targets = Vec::new();
    for b in rs.roots() {
        for k in 0..n {
            sources.push(chart.element(b, &unit(n, k)));
            targets.push(target.basis_elem(g.e(b), &unit(n, k)));
        }
    }
    for a in rs.roots() {
        let coroot = dense_from_sparse(g.algebra().table().get(g.e(a), g.e(rs.negative(a))), dg);
        for r in 0..n {
            let x = chart.element(a, &unit(n, r));
            for s in 0..n {
                sources.push(l.bracket(&x, &chart.element(rs.negative(a), &unit(n, s))));
                let prod = rd.dialgebra.left_mul(&unit(n, r), &unit(n, s));
                targets.push(target.elem(&coroot, &prod));
            }
        }
    }
    let map = extend_linear_map(l.dim(), target.dim(), &sources, &targets).map_err(Error::L0IllDefined)?;

    let hom = homomorphism_failure(l, target.carrier(), &map);
    let surjective = rank(&map) == target.dim();
    let kernel = kernel_basis(&map);
    let central = kernel
        .basis_dense()
        .into_iter()
        .enumerate()
        .find(|(_, z)| !is_central(l, z))
        .map(|(k, z)| Witness::new(vec![k], &z, &z).with_note("kernel vector is not central"));
    let temb = target.chevalley_embedding();
    let fixes = (0..dg).find_map(|i| {
        let lhs = map.mul_vec(gd.embedding().basis_image(i));
        let rhs = temb.basis_image(i);
        (lhs != rhs).then(|| Witness::new(vec![i], &lhs, rhs))
    });
    Ok(TensorMapReport {
        checks: vec![
            AxiomReport::from_search("φ restricts to the identity on 𝔤̇", fixes),
            AxiomReport::from_search("φ[x,y] = [φx, φy]", hom),
            surjectivity_report(surjective, rank(&map), target.dim()),
            AxiomReport::from_search("ker φ is central", central),
        ],
        target,
        map,
        kernel,
    })
}

fn surjectivity_report(ok: bool, rank: usize, dim: usize) -> AxiomReport {
    AxiomReport::from_search(
        "φ is surjective",
        (!ok).then(|| Witness::message(format!("image has dimension {rank} of {dim}"))),
    )
}

/// The type A relations among the `e_ij(r)` and the map from the Steinberg
/// model over `R`.
#[derive(Debug, Clone)]
pub struct TypeAReport {
    pub relations: Vec<AxiomReport>,
    pub model_dim: usize,
    /// `dim L × dim stl(n, R)`, `v_ij(r) ↦ e_ij(r)`.
    pub map: Matrix,
    pub kernel: Subspace,
    pub checks: Vec<AxiomReport>,
}

impl TypeAReport {
    pub fn kernel_dim(&self) -> usize {
        self.kernel.dim()
    }

    pub fn all_hold(&self) -> bool {
        self.relations.iter().chain(&self.checks).all(|r| r.holds)
    }
}

pub fn check_type_a_relations(
    gd: &GradedDecomposition,
    chart: &CoordinateChart,
    rd: &RecoveredDialgebra,
    cap: usize,
) -> Result<TypeAReport> {
    let rs = gd.root_system();
    if rs.kind() != RootKind::A {
        return Err(Error::UnsupportedType {
            kind: rs.kind().to_string(),
            rank: rs.rank(),
        });
    }
    let l = gd.algebra();
    let d = &rd.dialgebra;
    let size = rs.rank() + 1;
    let m = chart.r_dim();
    let mut pos = vec![vec![None; size]; size];
    for r in rs.roots() {
        let (i, j) = type_a_indices(rs, r);
        pos[i][j] = Some(r);
    }
    let root = |i: usize, j: usize| -> Root { pos[i][j].expect("i ≠ j") };
    let e = |i: usize, j: usize, a: &[Q]| chart.element(root(i, j), a);
    let pairs: Vec<(usize, usize)> = (0..size)
        .flat_map(|i| (0..size).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();

    let spans = pairs.iter().find_map(|&(i, j)| {
        let images: Vec<Vec<Q>> = (0..m).map(|a| e(i, j, &unit(m, a))).collect();
        let s = Subspace::span_dense(l.dim(), images.iter());
        (&s != gd.space(root(i, j)))
            .then(|| Witness::message(format!("e_{}{}(R) has dimension {} of {}", i + 1, j + 1, s.dim(), gd.space(root(i, j)).dim())))
    });

    let (k1, k2) = (q(2), q_frac(-1, 3));
    let linear = pairs.iter().find_map(|&(i, j)| {
        for a in 0..m {
            for b in 0..m {
                let mut comb = scale(&unit(m, a), &k1);
                crate::exactlin::axpy_dense(&mut comb, &k2, &unit(m, b));
                let lhs = e(i, j, &comb);
                let mut rhs = scale(&e(i, j, &unit(m, a)), &k1);
                crate::exactlin::axpy_dense(&mut rhs, &k2, &e(i, j, &unit(m, b)));
                if lhs != rhs {
                    return Some(Witness::new(vec![i, j, a, b], &lhs, &rhs));
                }
            }
        }
        None
    });

    // Slots: 0 for the zero case, 1 for i ≠ l, j = k, 2 for i = l, j ≠ k.
    let results: Vec<[Option<Witness>; 3]> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let mut out: [Option<Witness>; 3] = [None, None, None];
            for &(k, ll) in &pairs {
                let slot = match (i != ll, j == k) {
                    (true, false) => 0,
                    (true, true) => 1,
                    (false, false) => 2,
                    (false, true) => continue,
                };
                if out[slot].is_some() {
                    continue;
                }
                for r in 0..m {
                    for s in 0..m {
                        let (ur, us) = (unit(m, r), unit(m, s));
                        let lhs = l.bracket(&e(i, j, &ur), &e(k, ll, &us));
                        let rhs = match slot {
                            0 => vec![Q::zero(); l.dim()],
                            1 => e(i, ll, &d.left_mul(&ur, &us)),
                            _ => scale(&e(k, j, &d.right_mul(&us, &ur)), &-Q::one()),
                        };
                        if lhs != rhs && out[slot].is_none() {
                            out[slot] = Some(Witness::new(vec![i, j, k, ll, r, s], &lhs, &rhs));
                        }
                    }
                }
            }
            out
        })
        .collect();
    let mut slots: [Option<Witness>; 3] = [None, None, None];
    for row in results {
        for (k, w) in row.into_iter().enumerate() {
            if slots[k].is_none() {
                slots[k] = w;
            }
        }
    }
    let [zero_case, chain_case, twist_case] = slots;
    let relations = vec![
        AxiomReport::from_search("L_ij = e_ij(R)", spans),
        AxiomReport::from_search("e_ij(k1 r + k2 s) = k1 e_ij(r) + k2 e_ij(s)", linear),
        AxiomReport::from_search("[e_ij(r), e_kl(s)] = 0 if i ≠ l, j ≠ k", zero_case),
        AxiomReport::from_search("[e_ij(r), e_jl(s)] = e_il(r⊣s) if i ≠ l", chain_case),
        AxiomReport::from_search("[e_ij(r), e_ki(s)] = -e_kj(s⊢r) if j ≠ k", twist_case),
    ];
    if let Some(bad) = relations.iter().find(|r| !r.holds) {
        return Err(Error::RelationFailure {
            relation: bad.axiom.clone(),
            witness: bad.counterexample.clone().expect("failing report has a witness"),
        });
    }

    let g = gd.chevalley();
    let model = build_steinberg_model(size, d, cap)?;
    let model_gd = verify_grading(model.algebra(), g, &model.chevalley_embedding(g)?)?;
    let mut sources = Vec::new();
    let mut targets = Vec::new();
    for &(i, j) in &pairs {
        for a in 0..m {
            sources.push(model.v(i, j, &unit(m, a)));
            targets.push(e(i, j, &unit(m, a)));
        }
    }
    for &(i, j) in &pairs {
        for a in 0..m {
            for b in 0..m {
                sources.push(model.algebra().bracket(&model.v(i, j, &unit(m, a)), &model.v(j, i, &unit(m, b))));
                targets.push(l.bracket(&e(i, j, &unit(m, a)), &e(j, i, &unit(m, b))));
            }
        }
    }
    let map = extend_linear_map(model.dim(), l.dim(), &sources, &targets).map_err(|msg| Error::RelationFailure {
        relation: "v_ij(r) ↦ e_ij(r) extends linearly".into(),
        witness: Witness::message(msg),
    })?;
    let hom = homomorphism_failure(model.algebra(), l, &map);
    let kernel = kernel_basis(&map);
    let in_zero = kernel
        .basis_dense()
        .into_iter()
        .enumerate()
        .find(|(_, z)| !model_gd.zero_space().contains(z))
        .map(|(k, _)| Witness::message(format!("kernel basis vector {k} has nonzero root components")));
    let central = kernel
        .basis_dense()
        .into_iter()
        .enumerate()
        .find(|(_, z)| !is_central(model.algebra(), z))
        .map(|(k, _)| Witness::message(format!("kernel basis vector {k} is not central")));
    let rk = rank(&map);
    Ok(TypeAReport {
        relations,
        model_dim: model.dim(),
        checks: vec![
            AxiomReport::from_search("φ[x,y] = [φx, φy] on stl(n, R)", hom),
            surjectivity_report(rk == l.dim(), rk, l.dim()),
            AxiomReport::from_search("ker φ lies in the zero weight space", in_zero),
            AxiomReport::from_search("ker φ is central", central),
        ],
        map,
        kernel,
    })
}

/// Outcome of a successful Δ-homomorphism check.
#[derive(Debug, Clone)]
pub struct DeltaHomReport {
    /// `φ̄: R → R'`; entry `k` is the image of basis vector `k`.
    pub phibar: Vec<Vec<Q>>,
    pub bijective: bool,
    pub kernel_dim: usize,
    pub checks: Vec<AxiomReport>,
}

fn phibar_at(
    src: &GradedDecomposition,
    c1: &CoordinateChart,
    dst: &GradedDecomposition,
    c2: &CoordinateChart,
    phi: &Matrix,
    beta: Root,
) -> Result<Vec<Vec<Q>>> {
    let n = c1.r_dim();
    (0..n)
        .map(|k| {
            let img = phi.mul_vec(&c1.element(beta, &unit(n, k)));
            c2.coords(dst, beta, &img).ok_or_else(|| {
                Error::NotDeltaHom(format!(
                    "φ maps L_{} outside L'_{}",
                    src.root_system().name(beta),
                    src.root_system().name(beta)
                ))
            })
        })
        .collect()
}

/// Checks that `phi: src → dst` fixes `𝔤̇`, preserves root spaces and
/// induces one dialgebra homomorphism `R → R'` for every root.
pub fn check_delta_homomorphism(
    src: &GradedDecomposition,
    dst: &GradedDecomposition,
    phi: &Matrix,
) -> Result<DeltaHomReport> {
    let rs = src.root_system();
    if rs.label() != dst.root_system().label() {
        return Err(Error::NotDeltaHom(format!(
            "graded by {} and {}",
            rs.label(),
            dst.root_system().label()
        )));
    }
    let (l1, l2) = (src.algebra(), dst.algebra());
    if (phi.rows(), phi.cols()) != (l2.dim(), l1.dim()) {
        return Err(Error::DimensionMismatch(format!(
            "map is {}x{}, algebras have dimensions {} and {}",
            phi.rows(),
            phi.cols(),
            l1.dim(),
            l2.dim()
        )));
    }
    let dg = src.chevalley().dim();
    for i in 0..dg {
        if phi.mul_vec(src.embedding().basis_image(i)) != dst.embedding().basis_image(i) {
            return Err(Error::NotDeltaHom(format!(
                "φ moves the embedded {}",
                src.chevalley().basis_name(i)
            )));
        }
    }
    if let Some(w) = homomorphism_failure(l1, l2, phi) {
        return Err(Error::NotDeltaHom(format!("not a homomorphism: {w}")));
    }
    for b in rs.roots() {
        for v in src.space(b).basis_dense() {
            if !dst.space(b).contains(&phi.mul_vec(&v)) {
                return Err(Error::NotDeltaHom(format!("φ maps L_{} outside L'_{}", rs.name(b), rs.name(b))));
            }
        }
    }

    let base = rs.simple(0);
    let (c1, c2) = (build_chart(src, base)?, build_chart(dst, base)?);
    let phibar = phibar_at(src, &c1, dst, &c2, phi, base)?;
    for b in rs.roots() {
        if phibar_at(src, &c1, dst, &c2, phi, b)? != phibar {
            return Err(Error::NotDeltaHom(format!(
                "the map induced on R through L_{} differs from the one through L_{}",
                rs.name(b),
                rs.name(base)
            )));
        }
    }
    let (rd1, rd2) = (recover_products(src, &c1)?, recover_products(dst, &c2)?);
    if let Some(w) = dialg::homomorphism_failure(&rd1.dialgebra, &rd2.dialgebra, &phibar) {
        return Err(Error::NotDeltaHom(format!("induced map is not a dialgebra homomorphism: {w}")));
    }

    let n1 = c1.r_dim();
    let bijective = n1 == c2.r_dim() && rank(&Matrix::from_dense_columns(c2.r_dim(), &phibar)) == n1;
    let kernel = kernel_basis(phi);
    if bijective {
        if let Some(k) = kernel.basis_dense().iter().position(|z| !is_central(l1, z)) {
            return Err(Error::NotDeltaHom(format!("kernel basis vector {k} is not central")));
        }
    }
    let z = center(l1);
    if !z.is_subspace_of(src.zero_space()) {
        return Err(Error::NotDeltaHom("the center is not contained in L_0".into()));
    }

    let mut checks = vec![
        AxiomReport::pass("φ restricts to the identity on 𝔤̇"),
        AxiomReport::pass("φ[x,y] = [φx, φy]"),
        AxiomReport::pass("φ(L_α) ⊆ L'_α"),
        AxiomReport::pass("induced map R → R' independent of the root"),
        AxiomReport::pass("induced map is a dialgebra homomorphism"),
    ];
    if bijective {
        checks.push(AxiomReport::pass("ker φ is central"));
    }
    checks.push(AxiomReport::pass("center ⊆ L_0"));
    Ok(DeltaHomReport {
        phibar,
        bijective,
        kernel_dim: kernel.dim(),
        checks,
    })
}

/// Lifts the copy of `𝔤̇` given by `emb` in the base of `ext` to the total
/// algebra: the lift is the derived algebra of its preimage.
pub fn lift_embedding(ext: &CentralExtension, emb: &Embedding) -> Result<Embedding> {
    let total = &ext.total;
    let pi = &ext.projection;
    let n = total.dim();
    let images: Vec<&[Q]> = (0..emb.e.len() + emb.h.len()).map(|i| emb.basis_image(i)).collect();
    let mut pre: Vec<Vec<Q>> = images.iter().map(|y| solve(pi, y)).collect::<Result<_>>()?;
    pre.extend(ext.kernel.basis_dense());
    let gens: Vec<_> = pre
        .par_iter()
        .flat_map_iter(|x| pre.iter().map(move |y| sparse_from_dense(&total.bracket(x, y))))
        .collect();
    let derived = Subspace::span(n, &gens);
    let basis = derived.basis_dense();
    if basis.len() != images.len() {
        return Err(Error::ConstructionFailure(format!(
            "derived algebra of the preimage has dimension {}, expected {}",
            basis.len(),
            images.len()
        )));
    }
    let projected: Vec<Vec<Q>> = basis.iter().map(|b| pi.mul_vec(b)).collect();
    let m = Matrix::from_dense_columns(pi.rows(), &projected);
    let lift = |y: &[Q]| -> Result<Vec<Q>> {
        let c = solve(&m, y)?;
        Ok(derived.element(&c))
    };
    Ok(Embedding {
        e: emb.e.iter().map(|y| lift(y)).collect::<Result<_>>()?,
        h: emb.h.iter().map(|y| lift(y)).collect::<Result<_>>()?,
    })
}

/// `n_α(t) L_λ = L_{r_α λ}` and `h_α(t)|L_λ = t^⟨λ,α∨⟩` for every root `α`,
/// every weight `λ ∈ Δ ∪ {0}` and every `t` in `ts`.
pub fn check_operator_laws(gd: &GradedDecomposition, ts: &[Q]) -> Result<Vec<AxiomReport>> {
    let rs = gd.root_system();
    let l: &LeibnizAlgebra = gd.algebra();
    let zero = vec![0i64; rs.rank()];
    let mut weights: Vec<Vec<i64>> = rs.roots().map(|r| rs.coeffs(r).to_vec()).collect();
    weights.push(zero);
    let per_root: Vec<(Option<Witness>, Option<Witness>)> = rs
        .roots()
        .into_par_iter()
        .map(|a| -> Result<(Option<Witness>, Option<Witness>)> {
            let (e, f) = (gd.e(a), gd.e(rs.negative(a)));
            let mut moves = None;
            let mut scales = None;
            // h_α(t) = n_α(t) n_α(−1).
            let n_minus = n_operator(l, e, f, &-Q::one())?;
            for (ti, t) in ts.iter().enumerate() {
                let n = n_operator(l, e, f, t)?;
                let h = n.after(&n_minus);
                for (wi, w) in weights.iter().enumerate() {
                    let space = gd.weight_space(w).expect("listed weights have spaces");
                    let reflected = rs.reflect_by(a, w);
                    let target = gd.weight_space(&reflected).expect("reflection permutes Δ ∪ {0}");
                    let power = rs.form(w, rs.coeffs(a));
                    let factor = t.pow(power as i32);
                    for v in space.basis_dense() {
                        let img = n.apply(&v);
                        if moves.is_none() && !target.contains(&img) {
                            moves = Some(Witness::new(vec![a, wi, ti], &img, &v).with_note("image outside the reflected space"));
                        }
                        let hv = h.apply(&v);
                        let expect = scale(&v, &factor);
                        if scales.is_none() && hv != expect {
                            scales = Some(Witness::new(vec![a, wi, ti], &hv, &expect));
                        }
                    }
                    if moves.is_none() && space.dim() != target.dim() {
                        moves = Some(Witness::message(format!(
                            "dim L_λ = {} but dim L_rλ = {}",
                            space.dim(),
                            target.dim()
                        )));
                    }
                }
            }
            Ok((moves, scales))
        })
        .collect::<Result<_>>()?;
    let (moves, scales): (Vec<_>, Vec<_>) = per_root.into_iter().unzip();
    Ok(vec![
        AxiomReport::from_search("n_α(t) L_λ = L_(r_α λ)", first(moves)),
        AxiomReport::from_search("h_α(t) acts on L_λ as t^⟨λ,α∨⟩", first(scales)),
    ])
}
