//! Recognition of root-graded Leibniz algebras: weight-space decomposition,
//! coordinatization of root spaces by a single space `R`, recovery of the
//! dialgebra structure on `R`, and the homomorphisms back to model algebras.

mod chart;
mod maps;
mod products;

pub use chart::{build_chart, build_chart_with, ChartOptions, CoordinateChart};
pub use maps::{
    build_tensor_map, check_delta_homomorphism, check_cartan_action, check_operator_laws, check_type_a_relations,
    lift_embedding, DeltaHomReport, TensorMapReport, TypeAReport,
};
pub use products::{recover_products, verify_recovered_identities, RecoveredDialgebra};

use rayon::prelude::*;

use crate::chevalley::{ChevalleyAlgebra, Embedding};
use crate::error::{Error, Result};
use crate::exactlin::{kernel_basis, Matrix, SparseVec, Subspace, Q};
use crate::leibniz::{ad, derived_subalgebra, LeibnizAlgebra};
use crate::rootsys::{Root, RootSystem};
use crate::witness::Witness;

/// A Leibniz algebra with an embedded Chevalley basis and its weight spaces.
#[derive(Debug, Clone)]
pub struct GradedDecomposition {
    algebra: LeibnizAlgebra,
    g: ChevalleyAlgebra,
    embedding: Embedding,
    /// Root spaces in root order, then the zero weight space.
    spaces: Vec<Subspace>,
}

impl GradedDecomposition {
    pub fn algebra(&self) -> &LeibnizAlgebra {
        &self.algebra
    }

    pub fn chevalley(&self) -> &ChevalleyAlgebra {
        &self.g
    }

    pub fn root_system(&self) -> &RootSystem {
        self.g.root_system()
    }

    pub fn embedding(&self) -> &Embedding {
        &self.embedding
    }

    pub fn space(&self, r: Root) -> &Subspace {
        &self.spaces[r]
    }

    pub fn zero_space(&self) -> &Subspace {
        &self.spaces[self.root_system().len()]
    }

    /// Weight space of `λ` (simple-root coefficients), `None` when `λ` is
    /// neither a root nor zero.
    pub fn weight_space(&self, lambda: &[i64]) -> Option<&Subspace> {
        if lambda.iter().all(|&x| x == 0) {
            return Some(self.zero_space());
        }
        self.root_system().find(lambda).map(|r| self.space(r))
    }

    /// `e_α` in the coordinates of the algebra.
    pub fn e(&self, r: Root) -> &[Q] {
        &self.embedding.e[r]
    }

    pub fn root_space_dims(&self) -> Vec<usize> {
        self.spaces.iter().map(Subspace::dim).collect()
    }
}

fn weight_values(rs: &RootSystem, lambda: &[i64]) -> Vec<i64> {
    (0..rs.rank()).map(|i| rs.pairing_simple(lambda, i)).collect()
}

/// `{x : −[x, Hᵢ] = λ(Hᵢ) x for all i}`.
fn eigenspace(actions: &[Matrix], values: &[i64], n: usize) -> Subspace {
    let mut rows: Vec<SparseVec> = Vec::with_capacity(actions.len() * n);
    for (a, &v) in actions.iter().zip(values) {
        for i in 0..n {
            let mut row = a.row(i).clone();
            row.push((i, -Q::from_integer(v.into())));
            rows.push(crate::exactlin::normalize_sparse(row));
        }
    }
    kernel_basis(&Matrix::from_rows(n, rows))
}

/// Checks that `emb` places a copy of `g` inside `l` and that `l` decomposes
/// into root spaces for it, with the zero weight space generated by
/// brackets of opposite root spaces.
pub fn verify_grading(l: &LeibnizAlgebra, g: &ChevalleyAlgebra, emb: &Embedding) -> Result<GradedDecomposition> {
    let rs = g.root_system();
    let n = l.dim();
    if emb.e.len() != rs.len() || emb.h.len() != rs.rank() {
        return Err(Error::DimensionMismatch(format!(
            "embedding lists {} root vectors and {} Cartan vectors for {}",
            emb.e.len(),
            emb.h.len(),
            rs.label()
        )));
    }
    if let Some(v) = emb.e.iter().chain(&emb.h).find(|v| v.len() != n) {
        return Err(Error::DimensionMismatch(format!(
            "embedding vector has {} coordinates, algebra has dimension {n}",
            v.len()
        )));
    }

    let dg = g.dim();
    let closure = crate::witness::first_failing_pair(dg, |i, j| {
        let lhs = l.bracket(emb.basis_image(i), emb.basis_image(j));
        let br = crate::exactlin::dense_from_sparse(g.algebra().table().get(i, j), dg);
        let rhs = emb.apply(&br);
        (lhs != rhs).then(|| {
            Witness::new(vec![i, j], &lhs, &rhs).with_note(format!(
                "[{}, {}]",
                g.basis_name(i),
                g.basis_name(j)
            ))
        })
    });
    if let Some(w) = closure {
        return Err(Error::NotASubalgebra(w));
    }

    let actions: Vec<Matrix> = emb.h.iter().map(|h| ad(l, h).matrix().clone()).collect();
    let mut weights: Vec<Vec<i64>> = rs.roots().map(|r| rs.coeffs(r).to_vec()).collect();
    weights.push(vec![0; rs.rank()]);
    let spaces: Vec<Subspace> = weights
        .par_iter()
        .map(|w| eigenspace(&actions, &weight_values(rs, w), n))
        .collect();

    for r in rs.roots() {
        if !spaces[r].contains(&emb.e[r]) {
            return Err(Error::EigenspaceMismatch(format!(
                "e({}) is not in its own root space",
                rs.name(r)
            )));
        }
    }
    let total: usize = spaces.iter().map(Subspace::dim).sum();
    let sum = spaces.iter().fold(Subspace::zero(n), |acc, s| acc.sum(s));
    if sum.dim() != total {
        return Err(Error::EigenspaceMismatch(format!(
            "weight spaces are not independent: dimensions add to {total} but span {}",
            sum.dim()
        )));
    }
    if total != n {
        return Err(Error::EigenspaceMismatch(format!(
            "weight spaces for roots and zero span {total} of {n} dimensions"
        )));
    }

    let zero = &spaces[rs.len()];
    let mut gens: Vec<SparseVec> = Vec::new();
    for r in rs.positive_count()..rs.len() {
        let p = rs.negative(r);
        for x in spaces[p].basis_dense() {
            for y in spaces[r].basis_dense() {
                gens.push(crate::exactlin::sparse_from_dense(&l.bracket(&x, &y)));
                gens.push(crate::exactlin::sparse_from_dense(&l.bracket(&y, &x)));
            }
        }
    }
    let generated = Subspace::span(n, &gens);
    if &generated != zero {
        return Err(Error::ZeroConditionFailure(format!(
            "brackets of opposite root spaces span {} dimensions; the zero weight space has {}",
            generated.dim(),
            zero.dim()
        )));
    }

    let derived = derived_subalgebra(l).dim();
    if derived != n {
        return Err(Error::NotPerfect { derived, dim: n });
    }

    Ok(GradedDecomposition {
        algebra: l.clone(),
        g: g.clone(),
        embedding: emb.clone(),
        spaces,
    })
}

#[cfg(test)]
mod tests;
