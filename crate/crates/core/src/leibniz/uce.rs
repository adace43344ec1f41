use crate::error::{Error, Result};
use crate::exactlin::{kernel_basis, rank, Matrix, SparseVec, Subspace, Q};
use crate::table::Table;

use super::homology::{boundary_image, homology_from_image, BoundaryImage};
use super::{derived_subalgebra, homomorphism_failure, is_central, LeibnizAlgebra};

/// A surjection `total → base` whose kernel is central.
#[derive(Debug, Clone)]
pub struct CentralExtension {
    pub total: LeibnizAlgebra,
    /// `dim base × dim total`.
    pub projection: Matrix,
    pub kernel: Subspace,
}

impl CentralExtension {
    /// Re-verifies the defining properties.
    pub fn verify(&self, base: &LeibnizAlgebra) -> Result<()> {
        if let Some(w) = homomorphism_failure(&self.total, base, &self.projection) {
            return Err(Error::ConstructionFailure(format!("projection is not a homomorphism: {w}")));
        }
        if rank(&self.projection) != base.dim() {
            return Err(Error::ConstructionFailure("projection is not surjective".into()));
        }
        if self.kernel != kernel_basis(&self.projection) {
            return Err(Error::ConstructionFailure("recorded kernel is not ker π".into()));
        }
        for z in self.kernel.basis_dense() {
            if !is_central(&self.total, &z) {
                return Err(Error::ConstructionFailure("kernel is not central".into()));
            }
        }
        Ok(())
    }
}

/// `(L ⊗ L) / im δ₃` with its projection onto `L`.
#[derive(Debug, Clone)]
pub struct Uce {
    pub extension: CentralExtension,
    /// Tensor coordinates and the image of `δ₃`; basis vector `p` of the
    /// total algebra is the class of tensor coordinate `quotient.free[p]`.
    pub quotient: BoundaryImage,
    pub hl2: usize,
}

impl Uce {
    /// `cls(x ⊗ y)` in the coordinates of the total algebra.
    pub fn class_of(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let xs = crate::exactlin::sparse_from_dense(x);
        let ys = crate::exactlin::sparse_from_dense(y);
        crate::exactlin::dense_from_sparse(
            &self.quotient.class_of_pair(&xs, &ys),
            self.extension.total.dim(),
        )
    }
}

pub fn universal_central_extension(l: &LeibnizAlgebra, cap: usize) -> Result<Uce> {
    let d = l.dim();
    let derived = derived_subalgebra(l).dim();
    if derived != d {
        return Err(Error::NotPerfect { derived, dim: d });
    }
    let image = boundary_image(l, 2, cap)?;

    // The bracket only sees [x, y] = −δ₂(x ⊗ y), so it is well defined on the
    // quotient exactly when every boundary is a cycle.
    for row in image.echelon.rows() {
        let mut acc = Vec::new();
        for (c, a) in row {
            let (x, y) = (c / d, c % d);
            acc.extend(l.table().get(x, y).iter().map(|(k, v)| (*k, a * v)));
        }
        if !crate::exactlin::normalize_sparse(acc).is_empty() {
            return Err(Error::ConstructionFailure(
                "im δ₃ is not contained in ker δ₂".into(),
            ));
        }
    }

    let free = &image.free;
    let m = free.len();
    let brackets: Vec<&SparseVec> = free.iter().map(|&c| l.table().get(c / d, c % d)).collect();
    let table = Table::from_fn(m, |f, g| image.class_of_pair(brackets[f], brackets[g]));
    let names: Vec<String> = free
        .iter()
        .map(|&c| format!("{}*{}", l.basis_names()[c / d], l.basis_names()[c % d]))
        .collect();
    let total = LeibnizAlgebra::new(names, table)?;
    let projection = Matrix::from_columns(d, &brackets.iter().map(|b| (*b).clone()).collect::<Vec<_>>());
    let kernel = kernel_basis(&projection);
    let hl2 = homology_from_image(l, &image).dim;
    if kernel.dim() != hl2 {
        return Err(Error::ConstructionFailure(format!(
            "kernel of the projection has dimension {} but HL2 has dimension {hl2}",
            kernel.dim()
        )));
    }
    let ext = CentralExtension {
        total,
        projection,
        kernel,
    };
    ext.verify(l)?;
    Ok(Uce {
        extension: ext,
        quotient: image,
        hl2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::leibniz::{abelian, is_perfect, sl2, DEFAULT_CAP};

    #[test]
    fn sl2_is_centrally_closed() {
        let u = universal_central_extension(&sl2(), DEFAULT_CAP).unwrap();
        assert_eq!(u.hl2, 0);
        assert_eq!(u.extension.total.dim(), 3);
        assert!(is_perfect(&u.extension.total));
    }

    #[test]
    fn abelian_has_no_uce() {
        assert!(matches!(
            universal_central_extension(&abelian(2), DEFAULT_CAP),
            Err(Error::NotPerfect { .. })
        ));
    }
}
