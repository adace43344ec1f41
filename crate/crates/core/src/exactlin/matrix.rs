use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{format_q, normalize_sparse, parse_q, zeros, SparseVec, Q};
use crate::error::{Error, Result};

/// Sparse row-major matrix over ℚ. Absent entries are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Matrix {
            rows: n,
            cols: n,
            data: (0..n).map(|i| vec![(i, Q::one())]).collect(),
        }
    }

    /// Builds from sparse rows; each row is normalized.
    pub fn from_rows(cols: usize, rows: Vec<SparseVec>) -> Self {
        let data: Vec<SparseVec> = rows.into_iter().map(normalize_sparse).collect();
        debug_assert!(data.iter().flatten().all(|(j, _)| *j < cols));
        Matrix {
            rows: data.len(),
            cols,
            data,
        }
    }

    pub fn from_columns(rows: usize, columns: &[SparseVec]) -> Self {
        let mut data: Vec<SparseVec> = vec![Vec::new(); rows];
        for (j, col) in columns.iter().enumerate() {
            for (i, x) in col {
                if !x.is_zero() {
                    data[*i].push((j, x.clone()));
                }
            }
        }
        Matrix {
            rows,
            cols: columns.len(),
            data,
        }
    }

    pub fn from_dense(rows: &[Vec<Q>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Matrix::from_rows(cols, rows.iter().map(|r| super::sparse_from_dense(r)).collect())
    }

    pub fn from_dense_columns(rows: usize, columns: &[Vec<Q>]) -> Self {
        let cols: Vec<SparseVec> = columns.iter().map(|c| super::sparse_from_dense(c)).collect();
        Matrix::from_columns(rows, &cols)
    }

    pub fn from_triplets(rows: usize, cols: usize, entries: Vec<(usize, usize, Q)>) -> Result<Self> {
        let mut data: Vec<SparseVec> = vec![Vec::new(); rows];
        for (i, j, x) in entries {
            if i >= rows || j >= cols {
                return Err(Error::Format(format!(
                    "matrix entry ({i}, {j}) out of range for {rows}x{cols}"
                )));
            }
            data[i].push((j, x));
        }
        Ok(Matrix {
            rows,
            cols,
            data: data.into_iter().map(normalize_sparse).collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.data[i]
    }

    pub fn row_vecs(&self) -> &[SparseVec] {
        &self.data
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> Q {
        match self.data[i].binary_search_by_key(&j, |(c, _)| *c) {
            Ok(k) => self.data[i][k].1.clone(),
            Err(_) => Q::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &Q)> + '_ {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, x)| (i, *j, x)))
    }

    pub fn transpose(&self) -> Matrix {
        let mut data: Vec<SparseVec> = vec![Vec::new(); self.cols];
        for (i, j, x) in self.triplets() {
            data[j].push((i, x.clone()));
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn columns(&self) -> Vec<SparseVec> {
        self.transpose().data
    }

    pub fn column_dense(&self, j: usize) -> Vec<Q> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn to_dense(&self) -> Vec<Vec<Q>> {
        self.data
            .iter()
            .map(|r| super::dense_from_sparse(r, self.cols))
            .collect()
    }

    pub fn scaled(&self, c: &Q) -> Matrix {
        if c.is_zero() {
            return Matrix::zeros(self.rows, self.cols);
        }
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|r| r.iter().map(|(j, x)| (*j, x * c)).collect())
                .collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| normalize_sparse(a.iter().chain(b.iter()).cloned().collect()))
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// `self * other`.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut acc = zeros(other.cols);
        let mut touched: Vec<usize> = Vec::new();
        let mut seen = vec![false; other.cols];
        let mut data = Vec::with_capacity(self.rows);
        for row in &self.data {
            for (k, a) in row {
                for (j, b) in &other.data[*k] {
                    if !seen[*j] {
                        seen[*j] = true;
                        touched.push(*j);
                    }
                    acc[*j] += a * b;
                }
            }
            touched.sort_unstable();
            let mut out = Vec::with_capacity(touched.len());
            for &j in &touched {
                seen[j] = false;
                let x = std::mem::replace(&mut acc[j], Q::zero());
                if !x.is_zero() {
                    out.push((j, x));
                }
            }
            touched.clear();
            data.push(out);
        }
        Matrix {
            rows: self.rows,
            cols: other.cols,
            data,
        }
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        self.data
            .iter()
            .map(|row| {
                let mut s = Q::zero();
                for (j, x) in row {
                    if !v[*j].is_zero() {
                        s += x * &v[*j];
                    }
                }
                s
            })
            .collect()
    }

    /// `self * v` for sparse `v`, returned dense.
    pub fn mul_sparse(&self, v: &[(usize, Q)]) -> Vec<Q> {
        self.data
            .iter()
            .map(|row| {
                let mut s = Q::zero();
                let (mut a, mut b) = (0, 0);
                while a < row.len() && b < v.len() {
                    match row[a].0.cmp(&v[b].0) {
                        std::cmp::Ordering::Less => a += 1,
                        std::cmp::Ordering::Greater => b += 1,
                        std::cmp::Ordering::Equal => {
                            s += &row[a].1 * &v[b].1;
                            a += 1;
                            b += 1;
                        }
                    }
                }
                s
            })
            .collect()
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .triplets()
                .map(|(i, j, x)| (i, j, format_q(x)))
                .collect(),
        }
    }

    pub fn from_json(json: &MatrixJson) -> Result<Matrix> {
        let mut entries = Vec::with_capacity(json.entries.len());
        for (i, j, s) in &json.entries {
            entries.push((*i, *j, parse_q(s)?));
        }
        Matrix::from_triplets(json.rows, json.cols, entries)
    }
}

/// Wire form: `{"rows": R, "cols": C, "entries": [[i, j, "num/den"], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, String)>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{q, q_frac};

    #[test]
    fn product_and_transpose() {
        let a = Matrix::from_dense(&[vec![q(1), q(2)], vec![q(0), q(3)]]);
        let b = Matrix::from_dense(&[vec![q(4), q(0)], vec![q(-1), q(1)]]);
        let ab = a.mul(&b);
        assert_eq!(ab.to_dense(), vec![vec![q(2), q(2)], vec![q(-3), q(3)]]);
        assert_eq!(a.transpose().get(1, 0), q(2));
        assert_eq!(a.mul_vec(&[q(1), q(1)]), vec![q(3), q(3)]);
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        let m = Matrix::from_triplets(
            2,
            3,
            vec![(0, 2, q_frac(-7, 3)), (1, 0, q(5)), (0, 0, q_frac(1, 2))],
        )
        .unwrap();
        let text = serde_json::to_string(&m.to_json()).unwrap();
        assert_eq!(
            text,
            r#"{"rows":2,"cols":3,"entries":[[0,0,"1/2"],[0,2,"-7/3"],[1,0,"5/1"]]}"#
        );
        let back = Matrix::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, m);
        assert_eq!(serde_json::to_string(&back.to_json()).unwrap(), text);
    }

    #[test]
    fn out_of_range_entries_are_rejected() {
        assert!(Matrix::from_triplets(1, 1, vec![(0, 1, q(1))]).is_err());
    }
}
