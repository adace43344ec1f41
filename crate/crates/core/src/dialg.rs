//! Finite-dimensional dialgebras given by structure constants.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{add, format_q, is_zero_vec, parse_q, q, sub, unit, zeros, Matrix, Q};
use crate::leibniz::LeibnizAlgebra;
use crate::table::{Table, Triple};
use crate::witness::{first_failing_pair, first_failing_triple, AxiomReport, Witness};

/// A vector space with a left product `⊣` and a right product `⊢`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dialgebra {
    basis: Vec<String>,
    left: Table,
    right: Table,
    bar_unit: Option<Vec<Q>>,
}

impl Dialgebra {
    /// Assembles a dialgebra, checking only that the bar-unit (if any) acts
    /// as one.
    pub fn new(
        basis: Vec<String>,
        left: Table,
        right: Table,
        bar_unit: Option<Vec<Q>>,
    ) -> Result<Self> {
        let n = basis.len();
        if left.dim() != n || right.dim() != n {
            return Err(Error::DimensionMismatch(format!(
                "{n} basis names but tables of dimension {} and {}",
                left.dim(),
                right.dim()
            )));
        }
        let d = Dialgebra {
            basis,
            left,
            right,
            bar_unit: None,
        };
        if let Some(e) = bar_unit {
            if e.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "bar-unit has {} coordinates, expected {n}",
                    e.len()
                )));
            }
            if let Some(w) = d.bar_unit_failure(&e) {
                return Err(Error::Format(format!("bar_unit does not act as a bar-unit: {w}")));
            }
            return Ok(Dialgebra {
                bar_unit: Some(e),
                ..d
            });
        }
        Ok(d)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn left_table(&self) -> &Table {
        &self.left
    }

    pub fn right_table(&self) -> &Table {
        &self.right
    }

    pub fn bar_unit(&self) -> Option<&[Q]> {
        self.bar_unit.as_deref()
    }

    pub fn require_bar_unit(&self) -> Result<&[Q]> {
        self.bar_unit().ok_or(Error::MissingBarUnit)
    }

    pub fn left_mul(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        self.left.mul(x, y)
    }

    pub fn right_mul(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        self.right.mul(x, y)
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Q> {
        unit(self.dim(), i)
    }

    /// First basis `x` with `e ⊢ x ≠ x` or `x ⊣ e ≠ x`.
    pub fn bar_unit_failure(&self, e: &[Q]) -> Option<Witness> {
        for i in 0..self.dim() {
            let x = self.basis_vec(i);
            let l = self.right_mul(e, &x);
            if l != x {
                return Some(Witness::new(vec![i], &l, &x).with_note("1 ⊢ x = x"));
            }
            let r = self.left_mul(&x, e);
            if r != x {
                return Some(Witness::new(vec![i], &r, &x).with_note("x ⊣ 1 = x"));
            }
        }
        None
    }

    fn lm(&self, a: &[Q], b: &[Q]) -> Vec<Q> {
        self.left.mul(a, b)
    }

    fn rm(&self, a: &[Q], b: &[Q]) -> Vec<Q> {
        self.right.mul(a, b)
    }

    pub fn to_json(&self) -> DialgebraJson {
        DialgebraJson {
            dim: self.dim(),
            basis: self.basis.clone(),
            left: self.left.to_triples(),
            right: self.right.to_triples(),
            bar_unit: self
                .bar_unit
                .as_ref()
                .map(|e| e.iter().map(format_q).collect()),
        }
    }

    pub fn from_json(json: &DialgebraJson) -> Result<Self> {
        if json.basis.len() != json.dim {
            return Err(Error::Format(format!(
                "basis: {} names for dim {}",
                json.basis.len(),
                json.dim
            )));
        }
        let left = Table::from_triples(json.dim, &json.left, "left")?;
        let right = Table::from_triples(json.dim, &json.right, "right")?;
        let bar_unit = match &json.bar_unit {
            None => None,
            Some(v) => Some(
                v.iter()
                    .enumerate()
                    .map(|(i, s)| parse_q(s).map_err(|e| Error::Format(format!("bar_unit[{i}]: {e}"))))
                    .collect::<Result<Vec<_>>>()?,
            ),
        };
        Dialgebra::new(json.basis.clone(), left, right, bar_unit)
    }
}

/// Wire form: `{"dim", "basis", "left", "right", "bar_unit"}` with products as
/// `[i, j, k, "num/den"]` rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DialgebraJson {
    pub dim: usize,
    pub basis: Vec<String>,
    pub left: Vec<Triple>,
    pub right: Vec<Triple>,
    #[serde(default)]
    pub bar_unit: Option<Vec<String>>,
}

type Tri<'a> = dyn Fn(&[Q], &[Q], &[Q]) -> (Vec<Q>, Vec<Q>) + Sync + 'a;

fn search(d: &Dialgebra, id: &str, f: &Tri<'_>) -> AxiomReport {
    let n = d.dim();
    let found = first_failing_triple(n, |a, b, c| {
        let (l, r) = f(&unit(n, a), &unit(n, b), &unit(n, c));
        (l != r).then(|| Witness::new(vec![a, b, c], &l, &r))
    });
    AxiomReport::from_search(id, found)
}

/// The five associativity axioms, each checked on every basis triple.
pub fn check_associative(d: &Dialgebra) -> Vec<AxiomReport> {
    let axioms: Vec<(&str, Box<Tri<'_>>)> = vec![
        (
            "a⊣(b⊣c) = (a⊣b)⊣c",
            Box::new(|a, b, c| (d.lm(a, &d.lm(b, c)), d.lm(&d.lm(a, b), c))),
        ),
        (
            "(a⊣b)⊣c = a⊣(b⊢c)",
            Box::new(|a, b, c| (d.lm(&d.lm(a, b), c), d.lm(a, &d.rm(b, c)))),
        ),
        (
            "(a⊢b)⊣c = a⊢(b⊣c)",
            Box::new(|a, b, c| (d.lm(&d.rm(a, b), c), d.rm(a, &d.lm(b, c)))),
        ),
        (
            "(a⊢b)⊢c = a⊢(b⊢c)",
            Box::new(|a, b, c| (d.rm(&d.rm(a, b), c), d.rm(a, &d.rm(b, c)))),
        ),
        (
            "a⊢(b⊢c) = (a⊣b)⊢c",
            Box::new(|a, b, c| (d.rm(a, &d.rm(b, c)), d.rm(&d.lm(a, b), c))),
        ),
    ];
    axioms.iter().map(|(id, f)| search(d, id, f.as_ref())).collect()
}

pub fn j_left(d: &Dialgebra, a: &[Q], b: &[Q], c: &[Q]) -> Vec<Q> {
    sub(&d.lm(&d.lm(a, b), c), &d.lm(a, &d.lm(b, c)))
}

pub fn j_right(d: &Dialgebra, a: &[Q], b: &[Q], c: &[Q]) -> Vec<Q> {
    sub(&d.rm(&d.rm(a, b), c), &d.rm(a, &d.rm(b, c)))
}

pub fn j_mixed(d: &Dialgebra, a: &[Q], b: &[Q], c: &[Q]) -> Vec<Q> {
    sub(&d.lm(&d.rm(a, b), c), &d.rm(a, &d.lm(b, c)))
}

fn neg(v: Vec<Q>) -> Vec<Q> {
    v.into_iter().map(|x| -x).collect()
}

/// The five alternativity axioms followed by the identities they imply.
pub fn check_alternative(d: &Dialgebra) -> Vec<AxiomReport> {
    let axioms: Vec<(&str, Box<Tri<'_>>)> = vec![
        (
            "J⊣(a,b,c) = -J⊢(c,b,a)",
            Box::new(|a, b, c| (j_left(d, a, b, c), neg(j_right(d, c, b, a)))),
        ),
        (
            "J⊣(a,b,c) = J⊢(b,c,a)",
            Box::new(|a, b, c| (j_left(d, a, b, c), j_right(d, b, c, a))),
        ),
        (
            "J×(a,b,c) = -J⊢(a,c,b)",
            Box::new(|a, b, c| (j_mixed(d, a, b, c), neg(j_right(d, a, c, b)))),
        ),
        (
            "(a⊢b)⊢c = (a⊣b)⊢c",
            Box::new(|a, b, c| (d.rm(&d.rm(a, b), c), d.rm(&d.lm(a, b), c))),
        ),
        (
            "a⊣(b⊢c) = a⊣(b⊣c)",
            Box::new(|a, b, c| (d.lm(a, &d.rm(b, c)), d.lm(a, &d.lm(b, c)))),
        ),
        (
            "J⊣(a,b,c) = -J⊣(a,c,b)",
            Box::new(|a, b, c| (j_left(d, a, b, c), neg(j_left(d, a, c, b)))),
        ),
        (
            "J⊢(a,b,c) = -J⊢(b,a,c)",
            Box::new(|a, b, c| (j_right(d, a, b, c), neg(j_right(d, b, a, c)))),
        ),
        (
            "J×(a,b,c) = -J×(c,b,a)",
            Box::new(|a, b, c| (j_mixed(d, a, b, c), neg(j_mixed(d, c, b, a)))),
        ),
    ];
    let mut out: Vec<AxiomReport> = axioms.iter().map(|(id, f)| search(d, id, f.as_ref())).collect();
    out.push(check_vanishing_associators(d));
    out
}

/// `J⊣(a,b,b) = J⊢(a,a,b) = J×(a,b,a) = 0` for every element, checked on
/// `x = bᵢ` and `x = bᵢ + bⱼ` in the repeated slot.
fn check_vanishing_associators(d: &Dialgebra) -> AxiomReport {
    let n = d.dim();
    let id = "J⊣(a,b,b) = J⊢(a,a,b) = J×(a,b,a) = 0";
    let found = first_failing_triple(n, |a, i, j| {
        if j < i {
            return None;
        }
        let y = unit(n, a);
        let x = if i == j { unit(n, i) } else { add(&unit(n, i), &unit(n, j)) };
        for (which, v) in [
            ("J⊣(a,x,x)", j_left(d, &y, &x, &x)),
            ("J⊢(x,x,a)", j_right(d, &x, &x, &y)),
            ("J×(x,a,x)", j_mixed(d, &x, &y, &x)),
        ] {
            if !is_zero_vec(&v) {
                return Some(Witness::new(vec![a, i, j], &v, &zeros(n)).with_note(which));
            }
        }
        None
    });
    AxiomReport::from_search(id, found)
}

pub fn all_hold(reports: &[AxiomReport]) -> bool {
    reports.iter().all(|r| r.holds)
}

/// `x⊣y = y⊣x` and `x⊣y = y⊢x`, reported separately.
pub fn is_commutative(d: &Dialgebra) -> [AxiomReport; 2] {
    let n = d.dim();
    let sym = first_failing_pair(n, |i, j| {
        let (a, b) = (d.left.mul_basis_left(i, &unit(n, j)), d.left.mul_basis_left(j, &unit(n, i)));
        (a != b).then(|| Witness::new(vec![i, j], &a, &b))
    });
    let flip = first_failing_pair(n, |i, j| {
        let (a, b) = (d.left.mul_basis_left(i, &unit(n, j)), d.right.mul_basis_left(j, &unit(n, i)));
        (a != b).then(|| Witness::new(vec![i, j], &a, &b))
    });
    [
        AxiomReport::from_search("x⊣y = y⊣x", sym),
        AxiomReport::from_search("x⊣y = y⊢x", flip),
    ]
}

/// First triple with `(xy)z ≠ x(yz)` in an ordinary algebra.
pub fn associativity_failure(t: &Table) -> Option<Witness> {
    let n = t.dim();
    first_failing_triple(n, |a, b, c| {
        let (x, y, z) = (unit(n, a), unit(n, b), unit(n, c));
        let l = t.mul(&t.mul(&x, &y), &z);
        let r = t.mul(&x, &t.mul(&y, &z));
        (l != r).then(|| Witness::new(vec![a, b, c], &l, &r))
    })
}

/// Alternativity of an ordinary algebra, linearized: the associator is
/// skew in its first two and in its last two arguments.
pub fn alternativity_failure(t: &Table) -> Option<Witness> {
    let n = t.dim();
    let assoc = |x: &[Q], y: &[Q], z: &[Q]| sub(&t.mul(&t.mul(x, y), z), &t.mul(x, &t.mul(y, z)));
    first_failing_triple(n, |a, b, c| {
        let (x, y, z) = (unit(n, a), unit(n, b), unit(n, c));
        let l = assoc(&x, &y, &z);
        let r1 = neg(assoc(&y, &x, &z));
        if l != r1 {
            return Some(Witness::new(vec![a, b, c], &l, &r1).with_note("(x,y,z) = -(y,x,z)"));
        }
        let r2 = neg(assoc(&x, &z, &y));
        if l != r2 {
            return Some(Witness::new(vec![a, b, c], &l, &r2).with_note("(x,y,z) = -(x,z,y)"));
        }
        None
    })
}

fn default_names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// `⊣ = ⊢ =` the given associative product; the unit becomes the bar-unit.
pub fn from_associative_algebra(
    basis: Vec<String>,
    mult: &Table,
    unit_elem: Option<Vec<Q>>,
) -> Result<Dialgebra> {
    if let Some(w) = associativity_failure(mult) {
        return Err(Error::NotAssociative(w));
    }
    Dialgebra::new(basis, mult.clone(), mult.clone(), unit_elem)
}

/// `x⊣y = x·dy` and `x⊢y = (dx)·y` for a square-zero derivation `d`.
pub fn from_differential_algebra(basis: Vec<String>, mult: &Table, d: &Matrix) -> Result<Dialgebra> {
    let n = mult.dim();
    if d.rows() != n || d.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "differential is {}x{}, algebra has dimension {n}",
            d.rows(),
            d.cols()
        )));
    }
    if let Some(w) = associativity_failure(mult) {
        if alternativity_failure(mult).is_some() {
            return Err(Error::NotAlternative(w));
        }
    }
    for i in 0..n {
        let ddx = d.mul_vec(&d.mul_vec(&unit(n, i)));
        if !is_zero_vec(&ddx) {
            return Err(Error::NotADifferential(Witness::new(vec![i], &ddx, &zeros(n)).with_note("d² = 0")));
        }
    }
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (unit(n, i), unit(n, j));
            let l = d.mul_vec(&mult.mul(&x, &y));
            let r = add(&mult.mul(&d.mul_vec(&x), &y), &mult.mul(&x, &d.mul_vec(&y)));
            if l != r {
                return Err(Error::NotADifferential(
                    Witness::new(vec![i, j], &l, &r).with_note("d(xy) = (dx)y + x(dy)"),
                ));
            }
        }
    }
    let left = Table::from_fn(n, |i, j| {
        crate::exactlin::sparse_from_dense(&mult.mul(&unit(n, i), &d.mul_vec(&unit(n, j))))
    });
    let right = Table::from_fn(n, |i, j| {
        crate::exactlin::sparse_from_dense(&mult.mul(&d.mul_vec(&unit(n, i)), &unit(n, j)))
    });
    Dialgebra::new(basis, left, right, None)
}

fn require_associative(d: &Dialgebra) -> Result<()> {
    match check_associative(d).into_iter().find(|r| !r.holds) {
        Some(r) => Err(Error::NotAssociative(r.counterexample.expect("failing report has a witness"))),
        None => Ok(()),
    }
}

/// Componentwise products on `d1 ⊗ d2`; index `(i, j) ↦ i·dim₂ + j`.
pub fn tensor(d1: &Dialgebra, d2: &Dialgebra) -> Result<Dialgebra> {
    require_associative(d1)?;
    require_associative(d2)?;
    let (n1, n2) = (d1.dim(), d2.dim());
    let prod = |t1: &Table, t2: &Table| {
        Table::from_fn(n1 * n2, |a, b| {
            let (i, j, k, l) = (a / n2, a % n2, b / n2, b % n2);
            let mut out = Vec::new();
            for (p, x) in t1.get(i, k) {
                for (r, y) in t2.get(j, l) {
                    out.push((p * n2 + r, x * y));
                }
            }
            crate::exactlin::normalize_sparse(out)
        })
    };
    let names = d1
        .basis
        .iter()
        .flat_map(|a| d2.basis.iter().map(move |b| format!("{a}⊗{b}")))
        .collect();
    let bar = match (d1.bar_unit(), d2.bar_unit()) {
        (Some(e1), Some(e2)) => {
            let mut v = zeros(n1 * n2);
            for (i, x) in e1.iter().enumerate() {
                for (j, y) in e2.iter().enumerate() {
                    v[i * n2 + j] = x * y;
                }
            }
            Some(v)
        }
        _ => None,
    };
    Dialgebra::new(names, prod(&d1.left, &d2.left), prod(&d1.right, &d2.right), bar)
}

/// `A^n` with `(x⊣y)ᵢ = xᵢ·Σⱼ yⱼ` and `(x⊢y)ᵢ = (Σⱼ xⱼ)·yᵢ`. Coordinate
/// `(i, a)` sits at `i·dim A + a`; the designated bar-unit is `(1, 0, …, 0)`.
pub fn from_nspace(base: &Table, base_unit: Option<&[Q]>, n: usize) -> Result<Dialgebra> {
    if let Some(w) = associativity_failure(base) {
        if alternativity_failure(base).is_some() {
            return Err(Error::NotAlternative(w));
        }
    }
    let m = base.dim();
    let left = Table::from_fn(n * m, |x, y| {
        let (i, a, b) = (x / m, x % m, y % m);
        base.get(a, b).iter().map(|(c, v)| (i * m + c, v.clone())).collect()
    });
    let right = Table::from_fn(n * m, |x, y| {
        let (a, j, b) = (x % m, y / m, y % m);
        base.get(a, b).iter().map(|(c, v)| (j * m + c, v.clone())).collect()
    });
    let names = (0..n * m).map(|x| format!("e{}.{}", x / m + 1, x % m + 1)).collect();
    let bar = base_unit.map(|u| {
        let mut v = zeros(n * m);
        v[..m].clone_from_slice(u);
        v
    });
    let names = if m == 1 { default_names("e", n) } else { names };
    Dialgebra::new(names, left, right, bar)
}

/// The Leibniz algebra with `[x, y] = x⊣y − y⊢x`.
pub fn dialgebra_to_leibniz(d: &Dialgebra) -> Result<LeibnizAlgebra> {
    let n = d.dim();
    let table = Table::from_fn(n, |i, j| {
        let mut v: Vec<(usize, Q)> = d.left.get(i, j).clone();
        v.extend(d.right.get(j, i).iter().map(|(k, x)| (*k, -x)));
        crate::exactlin::normalize_sparse(v)
    });
    LeibnizAlgebra::new(d.basis.clone(), table)
}

/// Checks `φ(x⊣y) = φ(x)⊣φ(y)` and `φ(x⊢y) = φ(x)⊢φ(y)` on basis pairs;
/// `map[i]` is the image of basis vector `i`.
pub fn homomorphism_failure(src: &Dialgebra, dst: &Dialgebra, map: &[Vec<Q>]) -> Option<Witness> {
    let n = src.dim();
    let apply = |v: &[Q]| {
        let mut out = zeros(dst.dim());
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                crate::exactlin::axpy_dense(&mut out, c, &map[i]);
            }
        }
        out
    };
    first_failing_pair(n, |i, j| {
        let (x, y) = (unit(n, i), unit(n, j));
        for (name, s, t) in [("⊣", &src.left, &dst.left), ("⊢", &src.right, &dst.right)] {
            let l = apply(&s.mul(&x, &y));
            let r = t.mul(&map[i], &map[j]);
            if l != r {
                return Some(Witness::new(vec![i, j], &l, &r).with_note(format!("φ(x{name}y) = φ(x){name}φ(y)")));
            }
        }
        None
    })
}

/// Small examples used throughout the tests and bundled data files.
pub mod examples {
    use super::*;

    fn table(n: usize, entries: &[(usize, usize, usize, i64)]) -> Table {
        let mut t = Table::zero(n);
        for &(i, j, k, v) in entries {
            let mut e = t.get(i, j).clone();
            e.push((k, q(v)));
            t.set(i, j, crate::exactlin::normalize_sparse(e));
        }
        t
    }

    /// The ground field.
    pub fn k() -> Dialgebra {
        from_associative_algebra(vec!["1".into()], &table(1, &[(0, 0, 0, 1)]), Some(vec![Q::one()]))
            .expect("K is associative")
    }

    /// `K[x]/(x²)` with basis `1, x`.
    pub fn dual_numbers() -> Dialgebra {
        let t = table(2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)]);
        from_associative_algebra(vec!["1".into(), "x".into()], &t, Some(vec![q(1), q(0)]))
            .expect("dual numbers are associative")
    }

    /// Matrix units `E_ij` at index `i·n + j`.
    pub fn matrix_table(n: usize) -> Table {
        Table::from_fn(n * n, |a, b| {
            let (i, j, k, l) = (a / n, a % n, b / n, b % n);
            if j == k {
                vec![(i * n + l, Q::one())]
            } else {
                Vec::new()
            }
        })
    }

    fn matrix_unit(n: usize) -> Vec<Q> {
        let mut v = zeros(n * n);
        for i in 0..n {
            v[i * n + i] = Q::one();
        }
        v
    }

    pub fn matrix_algebra(n: usize) -> Dialgebra {
        let names = (0..n * n).map(|a| format!("E{}{}", a / n + 1, a % n + 1)).collect();
        from_associative_algebra(names, &matrix_table(n), Some(matrix_unit(n)))
            .expect("matrix algebras are associative")
    }

    /// The two-fold n-space over `K`: `(x⊣y)ᵢ = xᵢ(y₁+y₂)`, `(x⊢y)ᵢ = (x₁+x₂)yᵢ`.
    pub fn k2() -> Dialgebra {
        from_nspace(&table(1, &[(0, 0, 0, 1)]), Some(&[Q::one()]), 2).expect("K is associative")
    }

    pub fn k_nspace(n: usize) -> Dialgebra {
        from_nspace(&table(1, &[(0, 0, 0, 1)]), Some(&[Q::one()]), n).expect("K is associative")
    }

    /// Upper triangular 2×2 matrices with basis `E11, E12, E22`.
    pub fn upper_triangular_table() -> Table {
        table(3, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)])
    }

    /// n-space over upper triangular 2×2 matrices; its Leibniz algebra is not Lie.
    pub fn upper_triangular_nspace(n: usize) -> Dialgebra {
        from_nspace(&upper_triangular_table(), Some(&[q(1), q(0), q(1)]), n)
            .expect("upper triangular matrices are associative")
    }

    /// `K1 ⊕ span{a, b}` with `ab = ba = a² = b² = 0` and `d b = a`.
    pub fn diff3() -> Dialgebra {
        let t = table(3, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (0, 2, 2, 1), (2, 0, 2, 1)]);
        let d = Matrix::from_triplets(3, 3, vec![(1, 2, Q::one())]).expect("in range");
        from_differential_algebra(vec!["1".into(), "a".into(), "b".into()], &t, &d)
            .expect("d is a square-zero derivation")
    }

    /// Two-dimensional algebra with `e₁e₁ = e₂` and all else zero, viewed
    /// with `⊣ = ⊢`; it is not associative.
    pub fn nonassociative() -> Dialgebra {
        let mut t = table(2, &[(0, 0, 1, 1)]);
        // e₂e₁ = e₁ breaks associativity: (e₁e₁)e₁ = e₂e₁ = e₁ but e₁(e₁e₁) = e₁e₂ = 0.
        t.set(1, 0, vec![(0, Q::one())]);
        Dialgebra::new(vec!["e1".into(), "e2".into()], t.clone(), t, None).expect("no bar-unit to check")
    }
}

#[cfg(test)]
mod tests {
    use super::examples::*;
    use super::*;
    use crate::leibniz::check_leibniz;

    fn v(xs: &[i64]) -> Vec<Q> {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn nspace_products() {
        let d = k2();
        assert_eq!(d.left_mul(&v(&[1, 0]), &v(&[0, 1])), v(&[1, 0]));
        assert_eq!(d.left_mul(&v(&[0, 1]), &v(&[1, 0])), v(&[0, 1]));
        assert_eq!(d.right_mul(&v(&[1, 0]), &v(&[0, 1])), v(&[0, 1]));
        assert_eq!(d.left_mul(&v(&[0, 0]), &v(&[3, 1])), v(&[0, 0]));
        let e = d.bar_unit().unwrap().to_vec();
        assert_eq!(d.right_mul(&e, &v(&[2, 5])), v(&[2, 5]));
        assert_ne!(d.left_table(), d.right_table());
    }

    #[test]
    fn associative_examples_pass_everything() {
        for d in [k(), dual_numbers(), matrix_algebra(2), k2(), k_nspace(3), diff3(), upper_triangular_nspace(2)] {
            assert!(all_hold(&check_associative(&d)), "{:?}", d.basis_names());
            assert!(all_hold(&check_alternative(&d)));
        }
    }

    #[test]
    fn nonassociative_fails_with_first_triple() {
        let d = nonassociative();
        let r = check_associative(&d);
        let bad = r.iter().find(|r| !r.holds).unwrap();
        let w = bad.counterexample.as_ref().unwrap();
        assert_eq!(w.tuple, vec![0, 0, 0]);
        assert_ne!(w.lhs, w.rhs);
        assert!(matches!(
            from_associative_algebra(d.basis_names().to_vec(), d.left_table(), None),
            Err(Error::NotAssociative(_))
        ));
    }

    #[test]
    fn differential_example() {
        let d = diff3();
        let (one, a, b) = (v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1]));
        assert_eq!(d.left_mul(&one, &b), a);
        assert_eq!(d.right_mul(&b, &one), a);
        assert_eq!(d.left_mul(&b, &one), v(&[0, 0, 0]));
        assert!(d.bar_unit().is_none());
        // No element acts as a bar-unit: x ⊣ 1 = x(d1) = 0.
        assert!(d.bar_unit_failure(&one).is_some());
    }

    #[test]
    fn zero_differential_gives_zero_products() {
        let d = from_differential_algebra(
            vec!["1".into()],
            k().left_table(),
            &Matrix::zeros(1, 1),
        )
        .unwrap();
        assert!(d.left_table().is_zero() && d.right_table().is_zero());
    }

    #[test]
    fn bad_differential_rejected() {
        let t = dual_numbers().left_table().clone();
        // d(1) = x violates d(1·1) = 2 d(1).
        let d = Matrix::from_triplets(2, 2, vec![(1, 0, Q::one())]).unwrap();
        assert!(matches!(
            from_differential_algebra(vec!["1".into(), "x".into()], &t, &d),
            Err(Error::NotADifferential(_))
        ));
    }

    #[test]
    fn tensor_products() {
        let d = k2();
        let dk = tensor(&d, &k()).unwrap();
        assert_eq!(dk.left_table(), d.left_table());
        assert_eq!(dk.right_table(), d.right_table());
        let dd = tensor(&d, &d).unwrap();
        assert_eq!(dd.dim(), 4);
        assert!(all_hold(&check_associative(&dd)));
        assert_eq!(dd.bar_unit().unwrap(), &v(&[1, 0, 0, 0])[..]);
    }

    #[test]
    fn nspace_one_is_example_one() {
        let d = from_nspace(dual_numbers().left_table(), Some(&v(&[1, 0])), 1).unwrap();
        assert_eq!(d.left_table(), d.right_table());
        assert_eq!(d.left_table(), dual_numbers().left_table());
    }

    #[test]
    fn commutativity() {
        assert!(is_commutative(&dual_numbers()).iter().all(|r| r.holds));
        let [sym, _] = is_commutative(&k2());
        let w = sym.counterexample.unwrap();
        assert_eq!(w.tuple, vec![0, 1]);
        assert!(!is_commutative(&matrix_algebra(2))[0].holds);
    }

    #[test]
    fn leibniz_of_dialgebras() {
        assert!(dialgebra_to_leibniz(&dual_numbers()).unwrap().table().is_zero());
        let gl2 = dialgebra_to_leibniz(&matrix_algebra(2)).unwrap();
        assert!(check_leibniz(gl2.table()).is_lie());
        // Over a commutative base every n-space bracket vanishes.
        assert!(dialgebra_to_leibniz(&k2()).unwrap().table().is_zero());
        let t = dialgebra_to_leibniz(&upper_triangular_nspace(2)).unwrap();
        let c = check_leibniz(t.table());
        assert!(c.identity.holds && !c.is_lie());
    }

    #[test]
    fn json_round_trip() {
        for d in [k2(), diff3()] {
            let s = serde_json::to_string(&d.to_json()).unwrap();
            let back = Dialgebra::from_json(&serde_json::from_str(&s).unwrap()).unwrap();
            assert_eq!(back, d);
        }
        let bad = r#"{"dim":1,"basis":["a"],"left":[[0,0,3,"1/1"]],"right":[],"bar_unit":null}"#;
        let j: DialgebraJson = serde_json::from_str(bad).unwrap();
        assert!(matches!(Dialgebra::from_json(&j), Err(Error::Format(_))));
    }

    #[test]
    fn corrupted_k2_fails_reproducibly() {
        let d = k2();
        let mut left = d.left_table().clone();
        left.set(1, 1, vec![(0, Q::one())]);
        let bad = Dialgebra::new(d.basis_names().to_vec(), left, d.right_table().clone(), None).unwrap();
        let a = check_associative(&bad);
        let b = check_associative(&bad);
        assert_eq!(a, b);
        assert!(!all_hold(&a));
    }
}
