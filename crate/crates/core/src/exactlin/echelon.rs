use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{SparseVec, Q};

const NO_ROW: u32 = u32::MAX;

/// Incremental row echelon form over sparse vectors.
///
/// Every stored row has its pivot as its smallest column with coefficient 1,
/// and no two rows share a pivot. Reducing a vector clears all pivot columns;
/// the remainder is canonical (it does not depend on insertion order of an
/// equal span), which is what quotient coordinates rely on.
#[derive(Debug, Clone)]
pub struct Echelon {
    ambient: usize,
    rows: Vec<SparseVec>,
    pivot_row: Vec<u32>,
}

impl Echelon {
    pub fn new(ambient: usize) -> Self {
        Echelon {
            ambient,
            rows: Vec::new(),
            pivot_row: vec![NO_ROW; ambient],
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col] != NO_ROW
    }

    pub fn pivots(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.rows.iter().map(|r| r[0].0).collect();
        p.sort_unstable();
        p
    }

    /// Columns that are not pivots, in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ambient).filter(|&c| !self.is_pivot(c)).collect()
    }

    fn reduce_map(&self, v: &mut BTreeMap<usize, Q>) {
        let mut cursor = 0usize;
        loop {
            let next = v
                .range(cursor..)
                .find(|(c, _)| self.pivot_row[**c] != NO_ROW)
                .map(|(c, _)| *c);
            let Some(col) = next else { break };
            let coef = v.remove(&col).expect("present");
            let row = &self.rows[self.pivot_row[col] as usize];
            for (c, x) in &row[1..] {
                let entry = v.entry(*c).or_insert_with(Q::zero);
                *entry -= &coef * x;
                if entry.is_zero() {
                    v.remove(c);
                }
            }
            cursor = col + 1;
        }
    }

    /// Remainder of `v` modulo the row span; supported on free columns only.
    pub fn reduce(&self, v: &[(usize, Q)]) -> SparseVec {
        if self.rows.is_empty() {
            return v.iter().filter(|(_, x)| !x.is_zero()).cloned().collect();
        }
        let mut map: BTreeMap<usize, Q> = BTreeMap::new();
        for (c, x) in v {
            if !x.is_zero() {
                *map.entry(*c).or_insert_with(Q::zero) += x;
            }
        }
        map.retain(|_, x| !x.is_zero());
        self.reduce_map(&mut map);
        map.into_iter().collect()
    }

    pub fn contains(&self, v: &[(usize, Q)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span. Returns `true` when it was independent.
    pub fn insert(&mut self, v: &[(usize, Q)]) -> bool {
        let rem = self.reduce(v);
        self.push_reduced(rem)
    }

    /// Adds a vector that is already reduced against this echelon.
    pub fn push_reduced(&mut self, mut rem: SparseVec) -> bool {
        if rem.is_empty() {
            return false;
        }
        let lead = rem[0].1.clone();
        if !lead.is_one() {
            let inv = lead.recip();
            for (_, x) in rem.iter_mut() {
                *x *= &inv;
            }
        }
        let pivot = rem[0].0;
        self.pivot_row[pivot] = self.rows.len() as u32;
        self.rows.push(rem);
        true
    }

    /// Reduced row echelon form: rows sorted by pivot, each pivot column zero
    /// in every other row.
    pub fn to_rref(&self) -> Vec<SparseVec> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(self.rows[i][0].0));
        let mut done = Echelon::new(self.ambient);
        let mut out: Vec<SparseVec> = Vec::with_capacity(self.rows.len());
        for i in order {
            let row = &self.rows[i];
            let pivot = row[0].0;
            // Finished rows all have larger pivots, so the leading entry survives.
            let mut map: BTreeMap<usize, Q> = row.iter().cloned().collect();
            done.reduce_map(&mut map);
            let reduced: SparseVec = map.into_iter().collect();
            debug_assert_eq!(reduced[0].0, pivot);
            done.pivot_row[pivot] = done.rows.len() as u32;
            done.rows.push(reduced.clone());
            out.push(reduced);
        }
        out.reverse();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::q;

    #[test]
    fn reduce_is_canonical_across_insertion_orders() {
        let a: SparseVec = vec![(0, q(1)), (1, q(2)), (3, q(1))];
        let b: SparseVec = vec![(1, q(1)), (2, q(-1))];
        let c: SparseVec = vec![(0, q(1)), (1, q(3)), (2, q(-1)), (3, q(1))];
        let mut e1 = Echelon::new(4);
        e1.insert(&a);
        e1.insert(&b);
        let mut e2 = Echelon::new(4);
        e2.insert(&c);
        e2.insert(&b);
        let v: SparseVec = vec![(0, q(5)), (2, q(7)), (3, q(1))];
        assert_eq!(e1.reduce(&v), e2.reduce(&v));
        assert_eq!(e1.to_rref(), e2.to_rref());
        assert!(!e2.insert(&a));
    }

    #[test]
    fn rref_clears_pivot_columns() {
        let mut e = Echelon::new(3);
        e.insert(&[(0, q(1)), (1, q(1)), (2, q(1))]);
        e.insert(&[(1, q(2)), (2, q(4))]);
        let rref = e.to_rref();
        assert_eq!(rref[0], vec![(0, q(1)), (2, q(-1))]);
        assert_eq!(rref[1], vec![(1, q(1)), (2, q(2))]);
    }
}
