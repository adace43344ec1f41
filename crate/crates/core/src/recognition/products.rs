use rayon::prelude::*;

use super::{CoordinateChart, GradedDecomposition};
use crate::dialg::{check_alternative, check_associative, is_commutative, Dialgebra};
use crate::error::{Error, Result};
use crate::exactlin::{scale, sparse_from_dense, unit, Q};
use crate::rootsys::{PairClass, Root, RootKind, RootSystem};
use crate::table::Table;
use crate::witness::{AxiomReport, Witness};

/// The dialgebra `R = L_α` read off from the brackets of a graded algebra.
#[derive(Debug, Clone)]
pub struct RecoveredDialgebra {
    pub dialgebra: Dialgebra,
    /// Pair used to define `⊣`.
    pub positive: (Root, Root),
    /// Pair used to define `⊢`; `None` when `⊢` is the flip of `⊣`.
    pub negative: Option<(Root, Root)>,
    pub checks: Vec<AxiomReport>,
}

/// `m` with `[e_β(r), e_γ(s)] = [e_β, e_γ](m)` for basis vectors `r`, `s`.
fn pair_products(gd: &GradedDecomposition, chart: &CoordinateChart, beta: Root, gamma: Root) -> Result<Vec<Vec<Vec<Q>>>> {
    let rs = gd.root_system();
    let target = rs.sum(beta, gamma).expect("an A2-pair sums to a root");
    let n_bg = gd.chevalley().structure_constant(beta, gamma);
    debug_assert!(n_bg == 1 || n_bg == -1);
    let inv = Q::from_integer((n_bg).into());
    let n = chart.r_dim();
    (0..n)
        .map(|r| {
            let x = chart.element(beta, &unit(n, r));
            (0..n)
                .map(|s| {
                    let y = chart.element(gamma, &unit(n, s));
                    let z = gd.algebra().bracket(&x, &y);
                    let c = chart.coords(gd, target, &z).ok_or_else(|| Error::ValueOutsideRootSpace {
                        root: rs.name(target),
                        detail: format!("[e({})(b{r}), e({})(b{s})]", rs.name(beta), rs.name(gamma)),
                    })?;
                    Ok(scale(&c, &inv))
                })
                .collect()
        })
        .collect()
}

fn table_from(values: &[Vec<Vec<Q>>], flip: bool) -> Table {
    Table::from_fn(values.len(), |i, j| {
        if flip {
            sparse_from_dense(&values[j][i])
        } else {
            sparse_from_dense(&values[i][j])
        }
    })
}

/// Reads `⊣` off the positive representative and `⊢` off the negative one
/// (type A) or as the flip of `⊣` (types D and E), then cross-checks every
/// A2-pair against the tables.
pub fn recover_products(gd: &GradedDecomposition, chart: &CoordinateChart) -> Result<RecoveredDialgebra> {
    let rs = gd.root_system();
    let n = chart.r_dim();
    let positive = rs.seed_pair();
    let left_vals = pair_products(gd, chart, positive.0, positive.1)?;
    let left = table_from(&left_vals, false);
    let (right, negative) = if rs.kind() == RootKind::A {
        let neg = (positive.1, positive.0);
        // Negative pairs give s ⊢ r from [e_β(r), e_γ(s)].
        let vals = pair_products(gd, chart, neg.0, neg.1)?;
        (table_from(&vals, true), Some(neg))
    } else {
        (table_from(&left_vals, true), None)
    };

    let basis: Vec<String> = (0..n).map(|k| format!("r{k}")).collect();
    let bare = Dialgebra::new(basis.clone(), left.clone(), right.clone(), None)?;
    let unit_law = bare.bar_unit_failure(chart.unit());
    let dialgebra = if unit_law.is_none() {
        Dialgebra::new(basis, left, right, Some(chart.unit().to_vec()))?
    } else {
        bare
    };

    let pairs = rs.enumerate_a2_pairs()?;
    let consistency = pairs
        .par_iter()
        .map(|p| -> Result<Option<Witness>> {
            let vals = pair_products(gd, chart, p.first, p.second)?;
            for r in 0..n {
                for s in 0..n {
                    let (ur, us) = (unit(n, r), unit(n, s));
                    let expected = match p.class {
                        PairClass::Positive => dialgebra.left_mul(&ur, &us),
                        PairClass::Negative => dialgebra.right_mul(&us, &ur),
                    };
                    if vals[r][s] != expected {
                        return Ok(Some(Witness::new(vec![p.first, p.second, r, s], &vals[r][s], &expected)
                            .with_note(format!("pair ({}, {})", rs.name(p.first), rs.name(p.second)))));
                    }
                }
            }
            Ok(None)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .next();

    let e = chart.unit();
    let mut right_unit = None;
    let mut left_unit = None;
    for k in 0..n {
        let r = unit(n, k);
        let a = dialgebra.left_mul(&r, e);
        if left_unit.is_none() && a != r {
            left_unit = Some(Witness::new(vec![k], &a, &r));
        }
        let b = dialgebra.right_mul(e, &r);
        if right_unit.is_none() && b != r {
            right_unit = Some(Witness::new(vec![k], &b, &r));
        }
    }

    Ok(RecoveredDialgebra {
        dialgebra,
        positive,
        negative,
        checks: vec![
            AxiomReport::from_search("r ⊣ 1 = r", left_unit),
            AxiomReport::from_search("1 ⊢ r = r", right_unit),
            AxiomReport::from_search("products agree on every A2-pair of its class", consistency),
        ],
    })
}

/// Unitality, and the identities the root system forces on `R`:
/// (Ass) from rank 3 on, (Alt) in rank 2, commutativity for D and E.
pub fn verify_recovered_identities(rd: &RecoveredDialgebra, rs: &RootSystem) -> Vec<AxiomReport> {
    let d = &rd.dialgebra;
    let mut out = vec![match d.bar_unit() {
        Some(_) => AxiomReport::pass("R has a bar-unit"),
        None => AxiomReport::from_search(
            "R has a bar-unit",
            Some(Witness::message("the image of e_α is not a bar-unit")),
        ),
    }];
    if rs.rank() >= 3 {
        out.extend(check_associative(d));
    } else {
        out.extend(check_alternative(d));
    }
    if matches!(rs.kind(), RootKind::D | RootKind::E) {
        out.extend(is_commutative(d));
    }
    out
}

