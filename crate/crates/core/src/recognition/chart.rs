use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::GradedDecomposition;
use crate::chevalley::{n_operator, AlgebraOperator};
use crate::error::{Error, Result};
use crate::exactlin::{axpy_dense, format_q, inverse, scale, zeros, Matrix, Q};
use crate::rootsys::{Root, WeylWord};
use crate::witness::{AxiomReport, Witness};

/// How much of the independence and coherence claims to spot-check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChartOptions {
    /// Alternative Weyl words tried per root.
    pub alternative_words: usize,
    /// Roots `γ` per root `β` for which `λ_{γ,β} λ_{β,α} = λ_{γ,α}` is checked.
    pub coherence_samples: usize,
    pub seed: u64,
}

impl Default for ChartOptions {
    fn default() -> Self {
        ChartOptions {
            alternative_words: 3,
            coherence_samples: 3,
            seed: 0,
        }
    }
}

/// Identification of every root space with `R = L_α`.
///
/// `R` carries the coordinates of the basis of `L_α` held by the
/// decomposition; `element(β, r)` is `e_β(r) = λ_{β,α}(r)`.
#[derive(Debug, Clone)]
pub struct CoordinateChart {
    base: Root,
    r_dim: usize,
    /// `lam[β][k]` is `λ_{β,α}` applied to basis vector `k` of `R`.
    lam: Vec<Vec<Vec<Q>>>,
    /// From coordinates in the basis of `L_β` to coordinates in `R`.
    inv: Vec<Matrix>,
    unit: Vec<Q>,
    signs: Vec<i64>,
    words: Vec<WeylWord>,
    checks: Vec<AxiomReport>,
}

impl CoordinateChart {
    pub fn base(&self) -> Root {
        self.base
    }

    pub fn r_dim(&self) -> usize {
        self.r_dim
    }

    /// Coordinates of `e_α` in `R`.
    pub fn unit(&self) -> &[Q] {
        &self.unit
    }

    pub fn sign(&self, beta: Root) -> i64 {
        self.signs[beta]
    }

    pub fn word(&self, beta: Root) -> &WeylWord {
        &self.words[beta]
    }

    pub fn checks(&self) -> &[AxiomReport] {
        &self.checks
    }

    /// `e_β(r)`.
    pub fn element(&self, beta: Root, r: &[Q]) -> Vec<Q> {
        let mut out = zeros(self.lam[beta][0].len());
        for (k, c) in r.iter().enumerate() {
            if !c.is_zero() {
                axpy_dense(&mut out, c, &self.lam[beta][k]);
            }
        }
        out
    }

    /// `r` with `x = e_β(r)`, or `None` when `x ∉ L_β`.
    pub fn coords(&self, gd: &GradedDecomposition, beta: Root, x: &[Q]) -> Option<Vec<Q>> {
        let c = gd.space(beta).coords(x)?;
        Some(self.inv[beta].mul_vec(&c))
    }

    /// `λ_{β,α}` as a matrix in the bases of `L_α` and `L_β`.
    pub fn lambda_matrix(&self, gd: &GradedDecomposition, beta: Root) -> Matrix {
        let cols: Vec<Vec<Q>> = self.lam[beta]
            .iter()
            .map(|v| gd.space(beta).coords(v).expect("chart images lie in their root space"))
            .collect();
        Matrix::from_dense_columns(self.r_dim, &cols)
    }
}

/// The operators `n_{αᵢ}(1)` for the simple roots.
pub(crate) fn simple_operators(gd: &GradedDecomposition) -> Result<Vec<AlgebraOperator>> {
    let rs = gd.root_system();
    (0..rs.rank())
        .into_par_iter()
        .map(|i| {
            let a = rs.simple(i);
            n_operator(gd.algebra(), gd.e(a), gd.e(rs.negative(a)), &Q::one())
        })
        .collect()
}

/// Applies `n_w` (rightmost letter first).
pub(crate) fn transport(ops: &[AlgebraOperator], word: &WeylWord, x: &[Q]) -> Vec<Q> {
    let mut v = x.to_vec();
    for &letter in word.0.iter().rev() {
        v = ops[letter - 1].apply(&v);
    }
    v
}

/// The scalar `ε` with `y = ε e`, if any.
pub(crate) fn proportionality(y: &[Q], e: &[Q]) -> Option<Q> {
    let k = e.iter().position(|c| !c.is_zero())?;
    let eps = &y[k] / &e[k];
    (scale(e, &eps) == y).then_some(eps)
}

/// `λ_{to,from}` on the basis of `L_from`, computed along `word`:
/// `ε⁻¹ n_w` restricted, with `n_w e_from = ε e_to`.
pub(crate) fn transport_map(
    gd: &GradedDecomposition,
    ops: &[AlgebraOperator],
    from: Root,
    to: Root,
    word: &WeylWord,
) -> Result<(i64, Vec<Vec<Q>>)> {
    let rs = gd.root_system();
    let image = transport(ops, word, gd.e(from));
    let eps = proportionality(&image, gd.e(to)).ok_or_else(|| Error::SignNotUnit {
        root: rs.name(to),
        value: "not a multiple of e".into(),
    })?;
    let sign = if eps == Q::one() {
        1
    } else if eps == -Q::one() {
        -1
    } else {
        return Err(Error::SignNotUnit {
            root: rs.name(to),
            value: format_q(&eps),
        });
    };
    let s = Q::from_integer(sign.into());
    let imgs: Vec<Vec<Q>> = gd
        .space(from)
        .basis_dense()
        .iter()
        .map(|v| scale(&transport(ops, word, v), &s))
        .collect();
    Ok((sign, imgs))
}

fn matrix_in(gd: &GradedDecomposition, root: Root, vs: &[Vec<Q>]) -> Result<Matrix> {
    let rs = gd.root_system();
    let cols = vs
        .iter()
        .map(|v| gd.space(root).coords(v))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::NonInvertibleRestriction { root: rs.name(root) })?;
    Ok(Matrix::from_dense_columns(gd.space(root).dim(), &cols))
}

pub fn build_chart(gd: &GradedDecomposition, alpha: Root) -> Result<CoordinateChart> {
    build_chart_with(gd, alpha, ChartOptions::default())
}

pub fn build_chart_with(gd: &GradedDecomposition, alpha: Root, opts: ChartOptions) -> Result<CoordinateChart> {
    let rs = gd.root_system();
    let ops = simple_operators(gd)?;
    let r_dim = gd.space(alpha).dim();
    let words: Vec<WeylWord> = rs.roots().map(|b| rs.word_mapping_root(alpha, b)).collect();

    let built: Vec<(i64, Vec<Vec<Q>>, Matrix)> = rs
        .roots()
        .into_par_iter()
        .map(|b| {
            let (sign, lam) = transport_map(gd, &ops, alpha, b, &words[b])?;
            if gd.space(b).dim() != r_dim {
                return Err(Error::NonInvertibleRestriction { root: rs.name(b) });
            }
            let m = matrix_in(gd, b, &lam)?;
            let inv = inverse(&m).map_err(|_| Error::NonInvertibleRestriction { root: rs.name(b) })?;
            Ok((sign, lam, inv))
        })
        .collect::<Result<_>>()?;
    let mut signs = Vec::with_capacity(rs.len());
    let mut lam = Vec::with_capacity(rs.len());
    let mut inv = Vec::with_capacity(rs.len());
    for (s, l, i) in built {
        signs.push(s);
        lam.push(l);
        inv.push(i);
    }
    let unit = gd
        .space(alpha)
        .coords(gd.e(alpha))
        .expect("e_α lies in L_α by verify_grading");
    let mut chart = CoordinateChart {
        base: alpha,
        r_dim,
        lam,
        inv,
        unit,
        signs,
        words,
        checks: Vec::new(),
    };
    chart.checks = chart_checks(gd, &chart, &ops, opts)?;
    Ok(chart)
}

fn compare(tuple: Vec<usize>, lhs: &Matrix, rhs: &Matrix) -> Option<Witness> {
    (lhs != rhs).then(|| {
        let flat = |m: &Matrix| m.to_dense().concat();
        Witness::new(tuple, &flat(lhs), &flat(rhs))
    })
}

fn chart_checks(
    gd: &GradedDecomposition,
    chart: &CoordinateChart,
    ops: &[AlgebraOperator],
    opts: ChartOptions,
) -> Result<Vec<AxiomReport>> {
    let rs = gd.root_system();
    let alpha = chart.base;
    let n = chart.r_dim;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);

    let id = chart.lambda_matrix(gd, alpha);
    let base_identity = compare(vec![alpha], &id, &Matrix::identity(n));

    let units = rs.roots().find_map(|b| {
        let e = chart.element(b, &chart.unit);
        (e != gd.e(b)).then(|| Witness::new(vec![b], &e, gd.e(b)))
    });

    // λ_{α,β} computed from its own word is the inverse of λ_{β,α}.
    let mut inverse_pairs = None;
    for b in rs.roots() {
        let back = rs.word_mapping_root(b, alpha);
        let (_, imgs) = transport_map(gd, ops, b, alpha, &back)?;
        let m_back = matrix_in(gd, alpha, &imgs)?;
        let composed = m_back.mul(&chart.lambda_matrix(gd, b));
        if let Some(w) = compare(vec![b], &composed, &Matrix::identity(n)) {
            inverse_pairs = Some(w.with_note(format!("λ(α,β) λ(β,α) ≠ 1 at β = {}", rs.name(b))));
            break;
        }
    }

    let mut coherence = None;
    'coh: for b in rs.roots() {
        for _ in 0..opts.coherence_samples {
            let c = rng.gen_range(0..rs.len());
            let w = rs.word_mapping_root(b, c);
            let (_, imgs) = transport_map(gd, ops, b, c, &w)?;
            let m_cb = matrix_in(gd, c, &imgs)?;
            // Express λ_{γ,β} ∘ λ_{β,α} in the basis of L_γ and compare.
            let lhs = m_cb.mul(&chart.lambda_matrix(gd, b));
            let rhs = chart.lambda_matrix(gd, c);
            if let Some(wit) = compare(vec![b, c], &lhs, &rhs) {
                coherence = Some(wit.with_note(format!("at β = {}, γ = {}", rs.name(b), rs.name(c))));
                break 'coh;
            }
        }
    }

    let mut alternative = None;
    'alt: for b in rs.roots() {
        for _ in 0..opts.alternative_words {
            let j = rng.gen_range(0..rs.rank());
            let first = rs.simple_reflection(j, alpha);
            let w = rs.word_mapping_root(first, b).compose(&WeylWord(vec![j + 1]));
            debug_assert_eq!(w.apply(rs, alpha), b);
            let (_, imgs) = transport_map(gd, ops, alpha, b, &w)?;
            let m = matrix_in(gd, b, &imgs)?;
            if let Some(wit) = compare(vec![b, j], &m, &chart.lambda_matrix(gd, b)) {
                alternative = Some(wit.with_note(format!("word {:?} for {}", w.0, rs.name(b))));
                break 'alt;
            }
        }
    }

    // (Ad n)(e_β(r)) = ((Ad n) e_β)(r) for n = n_{αᵢ}(1).
    let mut equivariance = None;
    'eq: for (i, op) in ops.iter().enumerate() {
        for b in rs.roots() {
            let target = rs.simple_reflection(i, b);
            let eps = match proportionality(&op.apply(gd.e(b)), gd.e(target)) {
                Some(e) => e,
                None => {
                    equivariance = Some(Witness::message(format!(
                        "n_{}(1) e({}) is not a multiple of e({})",
                        i + 1,
                        rs.name(b),
                        rs.name(target)
                    )));
                    break 'eq;
                }
            };
            for k in 0..n {
                let r = crate::exactlin::unit(n, k);
                let lhs = op.apply(&chart.element(b, &r));
                let rhs = scale(&chart.element(target, &r), &eps);
                if lhs != rhs {
                    equivariance = Some(Witness::new(vec![i, b, k], &lhs, &rhs));
                    break 'eq;
                }
            }
        }
    }

    Ok(vec![
        AxiomReport::from_search("λ(α,α) = 1", base_identity),
        AxiomReport::from_search("λ(β,α) e_α = e_β", units),
        AxiomReport::from_search("λ(α,β) = λ(β,α)^-1", inverse_pairs),
        AxiomReport::from_search("λ(γ,β) λ(β,α) = λ(γ,α)", coherence),
        AxiomReport::from_search("λ(β,α) independent of the Weyl word", alternative),
        AxiomReport::from_search("(Ad n)(e_β(r)) = ((Ad n) e_β)(r)", equivariance),
    ])
}
