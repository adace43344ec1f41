//! Bilinear products given by structure constants.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactlin::{format_q, normalize_sparse, parse_q, zeros, SparseVec, Q};

/// `entries[i * dim + j]` is the product of basis vectors `i` and `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    dim: usize,
    entries: Vec<SparseVec>,
}

/// Wire form of one structure constant: `[i, j, k, "num/den"]`.
pub type Triple = (usize, usize, usize, String);

impl Table {
    pub fn zero(dim: usize) -> Self {
        Table {
            dim,
            entries: vec![Vec::new(); dim * dim],
        }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> SparseVec) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(normalize_sparse(f(i, j)));
            }
        }
        Table { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &SparseVec {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: SparseVec) {
        self.entries[i * self.dim + j] = normalize_sparse(v);
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Vec::is_empty)
    }

    /// Bilinear extension to dense operands.
    pub fn mul(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let mut out = zeros(self.dim);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let e = self.get(i, j);
                if e.is_empty() {
                    continue;
                }
                let c = a * b;
                for (k, v) in e {
                    out[*k] += &c * v;
                }
            }
        }
        out
    }

    /// Bilinear extension to sparse operands.
    pub fn mul_sparse(&self, x: &[(usize, Q)], y: &[(usize, Q)]) -> SparseVec {
        let mut acc = Vec::new();
        for (i, a) in x {
            for (j, b) in y {
                let e = self.get(*i, *j);
                if e.is_empty() {
                    continue;
                }
                let c = a * b;
                acc.extend(e.iter().map(|(k, v)| (*k, &c * v)));
            }
        }
        normalize_sparse(acc)
    }

    /// Product of basis vector `i` with a dense element.
    pub fn mul_basis_left(&self, i: usize, y: &[Q]) -> Vec<Q> {
        let mut out = zeros(self.dim);
        for (j, b) in y.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            for (k, v) in self.get(i, j) {
                out[*k] += b * v;
            }
        }
        out
    }

    /// Product of a dense element with basis vector `j`.
    pub fn mul_basis_right(&self, x: &[Q], j: usize) -> Vec<Q> {
        let mut out = zeros(self.dim);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, v) in self.get(i, j) {
                out[*k] += a * v;
            }
        }
        out
    }

    /// Nonzero constants as `(i, j, k, value)` in lexicographic order.
    pub fn constants(&self) -> impl Iterator<Item = (usize, usize, usize, &Q)> + '_ {
        self.entries.iter().enumerate().flat_map(move |(ij, e)| {
            let (i, j) = (ij / self.dim, ij % self.dim);
            e.iter().map(move |(k, v)| (i, j, *k, v))
        })
    }

    pub fn to_triples(&self) -> Vec<Triple> {
        self.constants()
            .map(|(i, j, k, v)| (i, j, k, format_q(v)))
            .collect()
    }

    pub fn from_triples(dim: usize, triples: &[Triple], what: &str) -> Result<Self> {
        let mut raw: Vec<Vec<(usize, Q)>> = vec![Vec::new(); dim * dim];
        for (n, (i, j, k, s)) in triples.iter().enumerate() {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(Error::Format(format!(
                    "{what}[{n}]: index ({i}, {j}, {k}) out of range for dimension {dim}"
                )));
            }
            let v = parse_q(s).map_err(|e| Error::Format(format!("{what}[{n}]: {e}")))?;
            raw[i * dim + j].push((*k, v));
        }
        Ok(Table {
            dim,
            entries: raw.into_iter().map(normalize_sparse).collect(),
        })
    }

    /// Pulls the table back along an injective change of basis: `basis` holds
    /// the new basis vectors in old coordinates and `coords` reads an old
    /// vector back in the new basis (returning `None` when it falls outside).
    pub fn restrict(
        &self,
        basis: &[Vec<Q>],
        mut coords: impl FnMut(&[Q]) -> Option<Vec<Q>>,
    ) -> Option<Table> {
        let n = basis.len();
        let mut entries = Vec::with_capacity(n * n);
        for x in basis {
            for y in basis {
                let p = self.mul(x, y);
                let c = coords(&p)?;
                entries.push(crate::exactlin::sparse_from_dense(&c));
            }
        }
        Some(Table { dim: n, entries })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::q;

    #[test]
    fn bilinear_extension() {
        // Truncated polynomials K[x]/(x^2): 1*1 = 1, 1*x = x*1 = x.
        let t = Table::from_fn(2, |i, j| match (i, j) {
            (0, 0) => vec![(0, q(1))],
            (0, 1) | (1, 0) => vec![(1, q(1))],
            _ => vec![],
        });
        let x = vec![q(2), q(3)];
        let y = vec![q(1), q(-1)];
        assert_eq!(t.mul(&x, &y), vec![q(2), q(1)]);
        let xs = crate::exactlin::sparse_from_dense(&x);
        let ys = crate::exactlin::sparse_from_dense(&y);
        assert_eq!(t.mul_sparse(&xs, &ys), vec![(0, q(2)), (1, q(1))]);
        assert_eq!(t.mul_basis_left(0, &y), y);
        assert_eq!(t.mul_basis_right(&x, 0), x);
    }

    #[test]
    fn triples_round_trip() {
        let t = Table::from_fn(2, |i, j| if i == j { vec![(i, q(i as i64 + 1))] } else { vec![] });
        let back = Table::from_triples(2, &t.to_triples(), "table").unwrap();
        assert_eq!(back, t);
        assert!(Table::from_triples(1, &[(0, 0, 1, "1".into())], "table").is_err());
    }
}
