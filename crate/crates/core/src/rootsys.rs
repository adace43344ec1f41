//! Simply-laced root systems of types A, D and E.
//!
//! Roots are stored by their coefficients in the simple roots, which keeps
//! every computation in the integers. Ambient coordinates are kept alongside
//! for display: the εᵢ model for A and D, and for E the even lattice in ℝ⁸
//! with every coordinate doubled so that the half-integral roots stay integral.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Index into [`RootSystem::roots`].
pub type Root = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RootKind {
    A,
    D,
    E,
}

impl fmt::Display for RootKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            RootKind::A => "A",
            RootKind::D => "D",
            RootKind::E => "E",
        };
        f.write_str(c)
    }
}

impl FromStr for RootKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(RootKind::A),
            "D" | "d" => Ok(RootKind::D),
            "E" | "e" => Ok(RootKind::E),
            other => Err(Error::UnsupportedType {
                kind: other.to_string(),
                rank: 0,
            }),
        }
    }
}

/// Parses a type-and-rank label such as `A3` or `E8`.
pub fn parse_label(label: &str) -> Result<(RootKind, usize)> {
    let label = label.trim();
    let bad = || Error::UnsupportedType {
        kind: label.to_string(),
        rank: 0,
    };
    let (k, r) = label.split_at(label.char_indices().nth(1).map_or(label.len(), |(i, _)| i));
    let kind: RootKind = k.parse().map_err(|_| bad())?;
    let rank: usize = r.parse().map_err(|_| bad())?;
    Ok((kind, rank))
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    kind: RootKind,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    coeffs: Vec<Vec<i64>>,
    ambient: Vec<Vec<i64>>,
    ambient_scale: i64,
    lookup: HashMap<Vec<i64>, Root>,
    positive: usize,
    /// `reflections[i][r]` is the index of `s_i(r)`.
    reflections: Vec<Vec<Root>>,
}

fn simple_ambient(kind: RootKind, rank: usize) -> (Vec<Vec<i64>>, i64) {
    let unit = |n: usize, i: usize| {
        let mut v = vec![0i64; n];
        v[i] = 1;
        v
    };
    let diff = |a: Vec<i64>, b: Vec<i64>| a.iter().zip(&b).map(|(x, y)| x - y).collect::<Vec<_>>();
    match kind {
        RootKind::A => {
            let n = rank + 1;
            ((0..rank).map(|i| diff(unit(n, i), unit(n, i + 1))).collect(), 1)
        }
        RootKind::D => {
            let n = rank;
            let mut s: Vec<Vec<i64>> = (0..rank - 1).map(|i| diff(unit(n, i), unit(n, i + 1))).collect();
            let mut last = unit(n, rank - 2);
            last[rank - 1] = 1;
            s.push(last);
            (s, 1)
        }
        RootKind::E => {
            let mut s = vec![vec![1, -1, -1, -1, -1, -1, -1, 1]];
            let mut a2 = vec![0i64; 8];
            a2[0] = 2;
            a2[1] = 2;
            s.push(a2);
            for i in 0..6 {
                let mut v = vec![0i64; 8];
                v[i] = -2;
                v[i + 1] = 2;
                s.push(v);
            }
            s.truncate(rank);
            (s, 4)
        }
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl RootSystem {
    pub fn build(kind: RootKind, rank: usize) -> Result<Self> {
        let supported = match kind {
            RootKind::A => rank >= 2,
            RootKind::D => rank >= 4,
            RootKind::E => (6..=8).contains(&rank),
        };
        if !supported {
            return Err(Error::UnsupportedType {
                kind: kind.to_string(),
                rank,
            });
        }
        let (simple, scale) = simple_ambient(kind, rank);
        let cartan: Vec<Vec<i64>> = simple
            .iter()
            .map(|a| simple.iter().map(|b| dot(a, b) / scale).collect())
            .collect();

        // Closure of the simple roots under simple reflections.
        let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..rank {
            let mut c = vec![0i64; rank];
            c[i] = 1;
            seen.insert(c.clone(), ());
            queue.push_back(c);
        }
        while let Some(c) = queue.pop_front() {
            for i in 0..rank {
                let p: i64 = (0..rank).map(|j| c[j] * cartan[j][i]).sum();
                let mut r = c.clone();
                r[i] -= p;
                if !seen.contains_key(&r) {
                    seen.insert(r.clone(), ());
                    queue.push_back(r);
                }
            }
        }
        let mut pos: Vec<Vec<i64>> = seen.into_keys().filter(|c| c.iter().all(|&x| x >= 0)).collect();
        pos.sort_by_key(|c| (c.iter().sum::<i64>(), std::cmp::Reverse(c.clone())));
        let positive = pos.len();
        let mut coeffs = pos.clone();
        coeffs.extend(pos.iter().map(|c| c.iter().map(|x| -x).collect::<Vec<_>>()));

        let ambient_dim = simple[0].len();
        let ambient: Vec<Vec<i64>> = coeffs
            .iter()
            .map(|c| {
                let mut v = vec![0i64; ambient_dim];
                for (k, s) in c.iter().zip(&simple) {
                    for (x, y) in v.iter_mut().zip(s) {
                        *x += k * y;
                    }
                }
                v
            })
            .collect();
        let lookup: HashMap<Vec<i64>, Root> =
            coeffs.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        let mut rs = RootSystem {
            kind,
            rank,
            cartan,
            coeffs,
            ambient,
            ambient_scale: scale,
            lookup,
            positive,
            reflections: Vec::new(),
        };
        rs.reflections = (0..rank)
            .map(|i| {
                (0..rs.len())
                    .map(|r| {
                        let v = rs.reflect(i, rs.coeffs(r));
                        rs.find(&v).expect("root set is closed under reflections")
                    })
                    .collect()
            })
            .collect();
        let expected = match kind {
            RootKind::A => rank * (rank + 1),
            RootKind::D => 2 * rank * (rank - 1),
            RootKind::E => [72, 126, 240][rank - 6],
        };
        if rs.len() != expected {
            return Err(Error::ConstructionFailure(format!(
                "{kind}{rank} closure produced {} roots, expected {expected}",
                rs.len()
            )));
        }
        Ok(rs)
    }

    pub fn from_label(label: &str) -> Result<Self> {
        let (k, r) = parse_label(label)?;
        RootSystem::build(k, r)
    }

    pub fn kind(&self) -> RootKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.kind, self.rank)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn positive_count(&self) -> usize {
        self.positive
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn roots(&self) -> std::ops::Range<Root> {
        0..self.len()
    }

    /// The simple root αᵢ, with `i` counted from 0.
    pub fn simple(&self, i: usize) -> Root {
        debug_assert_eq!(self.coeffs[i].iter().sum::<i64>(), 1);
        i
    }

    pub fn coeffs(&self, r: Root) -> &[i64] {
        &self.coeffs[r]
    }

    /// Integer ambient coordinates (doubled for type E).
    pub fn ambient(&self, r: Root) -> &[i64] {
        &self.ambient[r]
    }

    pub fn ambient_scale(&self) -> i64 {
        self.ambient_scale
    }

    pub fn name(&self, r: Root) -> String {
        self.coeffs[r]
            .iter()
            .map(i64::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn by_name(&self, name: &str) -> Option<Root> {
        let c: std::result::Result<Vec<i64>, _> = name.split(',').map(|t| t.trim().parse()).collect();
        self.find(&c.ok()?)
    }

    pub fn find(&self, coeffs: &[i64]) -> Option<Root> {
        self.lookup.get(coeffs).copied()
    }

    pub fn is_positive(&self, r: Root) -> bool {
        r < self.positive
    }

    pub fn height(&self, r: Root) -> i64 {
        self.coeffs[r].iter().sum()
    }

    pub fn negative(&self, r: Root) -> Root {
        if r < self.positive {
            r + self.positive
        } else {
            r - self.positive
        }
    }

    /// The root `a + b`, if it is one.
    pub fn sum(&self, a: Root, b: Root) -> Option<Root> {
        let c: Vec<i64> = self.coeffs[a].iter().zip(&self.coeffs[b]).map(|(x, y)| x + y).collect();
        self.find(&c)
    }

    /// The invariant form on coefficient vectors, normalized to (α, α) = 2.
    pub fn form(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut s = 0;
        for (i, a) in x.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                s += a * self.cartan[i][j] * b;
            }
        }
        s
    }

    /// (β, α), which equals ⟨β, α∨⟩ in the simply-laced normalization.
    pub fn pairing(&self, beta: Root, alpha: Root) -> i64 {
        self.form(&self.coeffs[beta], &self.coeffs[alpha])
    }

    /// (λ, αᵢ) for a weight λ in simple-root coordinates.
    pub fn pairing_simple(&self, lambda: &[i64], i: usize) -> i64 {
        (0..self.rank).map(|j| lambda[j] * self.cartan[j][i]).sum()
    }

    /// The simple reflection sᵢ applied to λ.
    pub fn reflect(&self, i: usize, lambda: &[i64]) -> Vec<i64> {
        let p = self.pairing_simple(lambda, i);
        let mut out = lambda.to_vec();
        out[i] -= p;
        out
    }

    /// r_α λ = λ − (λ, α) α.
    pub fn reflect_by(&self, alpha: Root, lambda: &[i64]) -> Vec<i64> {
        let a = &self.coeffs[alpha];
        let p = self.form(lambda, a);
        lambda.iter().zip(a).map(|(l, x)| l - p * x).collect()
    }

    pub fn simple_reflection(&self, i: usize, r: Root) -> Root {
        self.reflections[i][r]
    }

    /// Shortest word `w` with `w(alpha) = beta`; among shortest words the
    /// search prefers smaller simple-root indices at each step.
    pub fn word_mapping_root(&self, alpha: Root, beta: Root) -> WeylWord {
        if alpha == beta {
            return WeylWord(Vec::new());
        }
        let mut parent: Vec<Option<(Root, usize)>> = vec![None; self.len()];
        let mut visited = vec![false; self.len()];
        visited[alpha] = true;
        let mut queue = VecDeque::from([alpha]);
        while let Some(r) = queue.pop_front() {
            for i in 0..self.rank {
                let s = self.reflections[i][r];
                if visited[s] {
                    continue;
                }
                visited[s] = true;
                parent[s] = Some((r, i));
                if s == beta {
                    // Walk back: the step taken first ends up rightmost.
                    let mut word = Vec::new();
                    let mut cur = beta;
                    while let Some((p, i)) = parent[cur] {
                        word.push(i + 1);
                        cur = p;
                    }
                    return WeylWord(word);
                }
                queue.push_back(s);
            }
        }
        unreachable!("the Weyl group acts transitively on the roots of an irreducible simply-laced system")
    }

    /// First adjacent pair of simple roots, in lexicographic order.
    pub fn seed_pair(&self) -> (Root, Root) {
        for i in 0..self.rank {
            for j in 0..self.rank {
                if self.cartan[i][j] == -1 {
                    return (i, j);
                }
            }
        }
        unreachable!("a connected Dynkin diagram of rank ≥ 2 has an edge")
    }

    /// Every ordered pair with pairing −1, grouped into Weyl orbits.
    pub fn a2_orbits(&self) -> Vec<Vec<(Root, Root)>> {
        let mut index: HashMap<(Root, Root), usize> = HashMap::new();
        let mut pairs = Vec::new();
        for b in self.roots() {
            for c in self.roots() {
                if self.pairing(b, c) == -1 {
                    index.insert((b, c), pairs.len());
                    pairs.push((b, c));
                }
            }
        }
        let mut orbit_of = vec![usize::MAX; pairs.len()];
        let mut orbits = Vec::new();
        for start in 0..pairs.len() {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            let mut members = vec![pairs[start]];
            orbit_of[start] = id;
            let mut queue = VecDeque::from([pairs[start]]);
            while let Some((b, c)) = queue.pop_front() {
                for i in 0..self.rank {
                    let img = (self.reflections[i][b], self.reflections[i][c]);
                    let k = index[&img];
                    if orbit_of[k] == usize::MAX {
                        orbit_of[k] = id;
                        members.push(img);
                        queue.push_back(img);
                    }
                }
            }
            members.sort_unstable();
            orbits.push(members);
        }
        orbits
    }

    /// All A₂-pairs tagged by class. The orbit of the seed pair is the
    /// positive class and the orbit of its reverse the negative one; in types
    /// D and E the two orbits coincide and every pair is tagged positive.
    pub fn enumerate_a2_pairs(&self) -> Result<Vec<A2Pair>> {
        let orbits = self.a2_orbits();
        let (a, b) = self.seed_pair();
        let find = |p: (Root, Root)| orbits.iter().position(|o| o.binary_search(&p).is_ok());
        let pos = find((a, b)).expect("seed pair is an A2-pair");
        let neg = find((b, a)).expect("reversed seed pair is an A2-pair");
        if orbits.len() > 2 || (orbits.len() == 2 && pos == neg) {
            return Err(Error::ConstructionFailure(format!(
                "{} has {} classes of A2-pairs",
                self.label(),
                orbits.len()
            )));
        }
        let mut out = Vec::new();
        for (k, o) in orbits.iter().enumerate() {
            let class = if k == pos { PairClass::Positive } else { PairClass::Negative };
            debug_assert!(k == pos || k == neg);
            out.extend(o.iter().map(|&(first, second)| A2Pair { first, second, class }));
        }
        out.sort_by_key(|p| (p.first, p.second));
        Ok(out)
    }
}

/// A product sᵢ₁ ⋯ sᵢₖ of simple reflections with 1-based indices; the
/// rightmost letter acts first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylWord(pub Vec<usize>);

impl WeylWord {
    pub fn apply(&self, rs: &RootSystem, r: Root) -> Root {
        self.0.iter().rev().fold(r, |acc, &i| rs.simple_reflection(i - 1, acc))
    }

    pub fn apply_weight(&self, rs: &RootSystem, lambda: &[i64]) -> Vec<i64> {
        self.0
            .iter()
            .rev()
            .fold(lambda.to_vec(), |acc, &i| rs.reflect(i - 1, &acc))
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &WeylWord) -> WeylWord {
        let mut w = self.0.clone();
        w.extend_from_slice(&other.0);
        WeylWord(w)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PairClass {
    Positive,
    Negative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct A2Pair {
    pub first: Root,
    pub second: Root,
    pub class: PairClass,
}

/// Looks up the class of an ordered pair in the output of
/// [`RootSystem::enumerate_a2_pairs`].
pub fn class_of(pairs: &[A2Pair], first: Root, second: Root) -> Option<PairClass> {
    pairs
        .binary_search_by_key(&(first, second), |p| (p.first, p.second))
        .ok()
        .map(|k| pairs[k].class)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn census(rs: &RootSystem) -> (usize, usize, usize) {
        let pairs = rs.enumerate_a2_pairs().unwrap();
        let p = pairs.iter().filter(|p| p.class == PairClass::Positive).count();
        (pairs.len(), p, pairs.len() - p)
    }

    #[test]
    fn root_counts() {
        for (k, r, n) in [
            (RootKind::A, 2, 6),
            (RootKind::A, 3, 12),
            (RootKind::A, 5, 30),
            (RootKind::D, 4, 24),
            (RootKind::D, 5, 40),
            (RootKind::E, 6, 72),
            (RootKind::E, 7, 126),
            (RootKind::E, 8, 240),
        ] {
            assert_eq!(RootSystem::build(k, r).unwrap().len(), n, "{k}{r}");
        }
    }

    #[test]
    fn unsupported_types() {
        assert!(RootSystem::build(RootKind::A, 1).is_err());
        assert!(RootSystem::build(RootKind::D, 3).is_err());
        assert!(RootSystem::build(RootKind::E, 5).is_err());
        assert!(RootSystem::build(RootKind::E, 9).is_err());
        assert!(RootSystem::from_label("B3").is_err());
    }

    #[test]
    fn type_a_uses_epsilon_differences() {
        let rs = RootSystem::build(RootKind::A, 2).unwrap();
        assert_eq!(rs.ambient(0), &[1, -1, 0]);
        assert_eq!(rs.ambient(1), &[0, 1, -1]);
        let mut amb: Vec<Vec<i64>> = rs.roots().map(|r| rs.ambient(r).to_vec()).collect();
        amb.sort();
        let mut expected = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    let mut v = vec![0; 3];
                    v[i] = 1;
                    v[j] = -1;
                    expected.push(v);
                }
            }
        }
        expected.sort();
        assert_eq!(amb, expected);
    }

    #[test]
    fn pairing_values() {
        let rs = RootSystem::build(RootKind::A, 2).unwrap();
        assert_eq!(rs.pairing(0, 0), 2);
        assert_eq!(rs.pairing(0, 1), -1);
        assert_eq!(rs.pairing(0, rs.negative(0)), -2);
        let d4 = RootSystem::build(RootKind::D, 4).unwrap();
        assert_eq!(d4.pairing(0, 2), 0);
        for rs in [rs, d4, RootSystem::build(RootKind::E, 6).unwrap()] {
            for a in rs.roots() {
                for b in rs.roots() {
                    let p = rs.pairing(a, b);
                    assert_eq!(p == 2, a == b);
                    assert_eq!(p == -2, b == rs.negative(a));
                    assert!((-2..=2).contains(&p));
                    let amb = crate::rootsys::dot(rs.ambient(a), rs.ambient(b));
                    assert_eq!(amb, p * rs.ambient_scale());
                }
            }
        }
    }

    #[test]
    fn reflection_examples() {
        let rs = RootSystem::build(RootKind::A, 2).unwrap();
        assert_eq!(rs.reflect_by(0, rs.coeffs(0)), vec![-1, 0]);
        assert_eq!(rs.reflect_by(0, rs.coeffs(1)), vec![1, 1]);
        let d4 = RootSystem::build(RootKind::D, 4).unwrap();
        assert_eq!(d4.reflect_by(0, d4.coeffs(2)), d4.coeffs(2).to_vec());
    }

    #[test]
    fn a2_census() {
        let a2 = RootSystem::build(RootKind::A, 2).unwrap();
        assert_eq!(census(&a2), (12, 6, 6));
        assert_eq!(a2.a2_orbits().len(), 2);
        let a3 = RootSystem::build(RootKind::A, 3).unwrap();
        assert_eq!(a3.a2_orbits().len(), 2);
        let d4 = RootSystem::build(RootKind::D, 4).unwrap();
        assert_eq!(d4.a2_orbits().len(), 1);
        let (n, p, _) = census(&d4);
        assert_eq!(n, p);
    }

    #[test]
    fn e_types_have_one_class() {
        for r in 6..=8 {
            let rs = RootSystem::build(RootKind::E, r).unwrap();
            assert_eq!(rs.a2_orbits().len(), 1, "E{r}");
        }
    }

    #[test]
    fn type_a_positive_class_is_head_to_tail() {
        // (εi−εj, εj−εk) is positive, (εi−εj, εk−εi) is negative.
        let rs = RootSystem::build(RootKind::A, 3).unwrap();
        for p in rs.enumerate_a2_pairs().unwrap() {
            let a = rs.ambient(p.first);
            let b = rs.ambient(p.second);
            let head_to_tail = (0..4).any(|j| a[j] == -1 && b[j] == 1);
            assert_eq!(head_to_tail, p.class == PairClass::Positive);
        }
    }

    #[test]
    fn pair_symmetries_type_a() {
        for r in [2, 3] {
            let rs = RootSystem::build(RootKind::A, r).unwrap();
            let pairs = rs.enumerate_a2_pairs().unwrap();
            for p in &pairs {
                let flipped = class_of(&pairs, rs.negative(p.second), rs.negative(p.first));
                assert_eq!(flipped, Some(p.class));
                let swapped = class_of(&pairs, p.second, p.first).unwrap();
                assert_ne!(swapped, p.class);
            }
        }
    }

    #[test]
    fn chains_share_a_class() {
        for rs in [
            RootSystem::build(RootKind::A, 3).unwrap(),
            RootSystem::build(RootKind::D, 4).unwrap(),
        ] {
            let pairs = rs.enumerate_a2_pairs().unwrap();
            let mut chains = 0;
            for p in &pairs {
                for q in pairs.iter().filter(|q| q.first == p.second) {
                    let (b, g, d) = (p.first, p.second, q.second);
                    if rs.pairing(b, d) != 0 {
                        continue;
                    }
                    chains += 1;
                    let gd = rs.sum(g, d).unwrap();
                    let bg = rs.sum(b, g).unwrap();
                    assert_eq!(class_of(&pairs, b, gd), Some(p.class));
                    assert_eq!(class_of(&pairs, bg, d), Some(p.class));
                    assert_eq!(q.class, p.class);
                }
            }
            assert!(chains > 0);
        }
    }

    #[test]
    fn words_replay() {
        for rs in [
            RootSystem::build(RootKind::A, 2).unwrap(),
            RootSystem::build(RootKind::D, 4).unwrap(),
            RootSystem::build(RootKind::E, 6).unwrap(),
        ] {
            for a in rs.roots() {
                for b in rs.roots() {
                    let w = rs.word_mapping_root(a, b);
                    assert_eq!(w.apply(&rs, a), b);
                    assert_eq!(w.apply_weight(&rs, rs.coeffs(a)), rs.coeffs(b));
                    assert_eq!(a == b, w.is_empty());
                }
            }
        }
        let a2 = RootSystem::build(RootKind::A, 2).unwrap();
        // s1 s2 (α1) = s1(α1 + α2) = α2.
        assert_eq!(a2.word_mapping_root(0, 1), WeylWord(vec![1, 2]));
    }

    #[test]
    fn roots_are_sign_coherent() {
        let rs = RootSystem::build(RootKind::E, 8).unwrap();
        for r in rs.roots() {
            let c = rs.coeffs(r);
            assert!(c.iter().all(|&x| x >= 0) || c.iter().all(|&x| x <= 0));
            assert_eq!(rs.form(c, c), 2);
        }
    }

    fn systems() -> Vec<RootSystem> {
        vec![
            RootSystem::build(RootKind::A, 3).unwrap(),
            RootSystem::build(RootKind::D, 4).unwrap(),
            RootSystem::build(RootKind::E, 6).unwrap(),
        ]
    }

    proptest! {
        #[test]
        fn reflection_is_an_isometric_involution(
            which in 0usize..3,
            root in 0usize..24,
            lam in proptest::collection::vec(-5i64..5, 6),
            mu in proptest::collection::vec(-5i64..5, 6),
        ) {
            let rs = &systems()[which];
            let l = &lam[..rs.rank()];
            let m = &mu[..rs.rank()];
            let a = root % rs.len();
            let rl = rs.reflect_by(a, l);
            prop_assert_eq!(rs.reflect_by(a, &rl), l.to_vec());
            prop_assert_eq!(rs.form(&rl, &rs.reflect_by(a, m)), rs.form(l, m));
        }
    }
}
