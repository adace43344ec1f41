use super::*;
use crate::dialg::examples::{dual_numbers, k2};
use crate::dialg::{self, Dialgebra};
use crate::exactlin::{q, q_frac, rank, unit};
use crate::leibniz::{quotient, universal_central_extension, DEFAULT_CAP};
use crate::matrixleib::{build_sl, build_steinberg_model, build_tensor_algebra};
use crate::table::Table;

fn all_hold(reports: &[crate::witness::AxiomReport]) -> bool {
    reports.iter().all(|r| {
        if !r.holds {
            eprintln!("{r}");
        }
        r.holds
    })
}

fn chevalley(label: &str) -> ChevalleyAlgebra {
    ChevalleyAlgebra::from_label(label).unwrap()
}

/// Matrix from `R` to the input dialgebra's coordinates through `r ↦ E_12(r)`.
fn sl_identification(gd: &GradedDecomposition, n: usize, d: &Dialgebra) -> Vec<Vec<Q>> {
    let sl = build_sl(n, d).unwrap();
    let alpha = gd.root_system().simple(0);
    (0..d.dim())
        .map(|a| gd.space(alpha).coords(&sl.off(0, 1, &unit(d.dim(), a))).unwrap())
        .collect()
}

#[test]
fn adjoint_grading_has_one_dimensional_root_spaces() {
    let g = chevalley("A2");
    let gd = verify_grading(g.algebra(), &g, &Embedding::identity(&g)).unwrap();
    assert_eq!(gd.root_space_dims(), [vec![1; 6], vec![2]].concat());
}

#[test]
fn sl3_over_k2_has_two_dimensional_root_spaces() {
    let g = chevalley("A2");
    let sl = build_sl(3, &k2()).unwrap();
    let gd = verify_grading(sl.carrier(), &g, &sl.chevalley_embedding(&g).unwrap()).unwrap();
    let dims = gd.root_space_dims();
    assert!(dims[..6].iter().all(|&d| d == 2));
    assert_eq!(dims[6], 4);
}

#[test]
fn scaled_embedding_is_not_a_subalgebra() {
    let g = chevalley("A2");
    let mut emb = Embedding::identity(&g);
    emb.e[0] = crate::exactlin::scale(&emb.e[0], &q(2));
    assert!(matches!(
        verify_grading(g.algebra(), &g, &emb),
        Err(Error::NotASubalgebra(_))
    ));
}

#[test]
fn extra_central_summand_breaks_the_zero_condition() {
    let g = chevalley("A2");
    let n = g.dim();
    let t = Table::from_fn(n + 1, |i, j| {
        if i < n && j < n {
            g.algebra().table().get(i, j).clone()
        } else {
            Vec::new()
        }
    });
    let l = LeibnizAlgebra::from_table(t).unwrap();
    let pad = |v: &[Q]| {
        let mut w = v.to_vec();
        w.push(Q::from_integer(0.into()));
        w
    };
    let id = Embedding::identity(&g);
    let emb = Embedding {
        e: id.e.iter().map(|v| pad(v)).collect(),
        h: id.h.iter().map(|v| pad(v)).collect(),
    };
    assert!(matches!(verify_grading(&l, &g, &emb), Err(Error::ZeroConditionFailure(_))));
}

#[test]
fn chart_on_the_adjoint_algebra() {
    let g = chevalley("A3");
    let gd = verify_grading(g.algebra(), &g, &Embedding::identity(&g)).unwrap();
    let chart = build_chart(&gd, 0).unwrap();
    assert!(all_hold(chart.checks()));
    for b in g.root_system().roots() {
        assert_eq!(chart.element(b, chart.unit()), gd.e(b));
    }
    let rd = recover_products(&gd, &chart).unwrap();
    assert!(all_hold(&rd.checks));
    assert_eq!(rd.dialgebra.dim(), 1);
    assert!(all_hold(&verify_recovered_identities(&rd, g.root_system())));
}

#[test]
fn sl4_over_k2_round_trip() {
    let g = chevalley("A3");
    let d = k2();
    let sl = build_sl(4, &d).unwrap();
    let gd = verify_grading(sl.carrier(), &g, &sl.chevalley_embedding(&g).unwrap()).unwrap();
    let chart = build_chart(&gd, g.root_system().simple(0)).unwrap();
    assert!(all_hold(chart.checks()));
    let rd = recover_products(&gd, &chart).unwrap();
    assert!(all_hold(&rd.checks));
    assert!(rd.negative.is_some());
    assert!(all_hold(&verify_recovered_identities(&rd, g.root_system())));

    let p = sl_identification(&gd, 4, &d);
    assert_eq!(rank(&Matrix::from_dense_columns(2, &p)), 2);
    assert!(dialg::homomorphism_failure(&d, &rd.dialgebra, &p).is_none());

    let ta = check_type_a_relations(&gd, &chart, &rd, DEFAULT_CAP).unwrap();
    assert!(ta.all_hold());
    assert_eq!(ta.model_dim, 30);
    assert_eq!(ta.kernel_dim(), 0);
}

#[test]
fn type_a_relations_reject_other_types() {
    let g = chevalley("D4");
    let gd = verify_grading(g.algebra(), &g, &Embedding::identity(&g)).unwrap();
    let chart = build_chart(&gd, 0).unwrap();
    let rd = recover_products(&gd, &chart).unwrap();
    assert!(matches!(
        check_type_a_relations(&gd, &chart, &rd, DEFAULT_CAP),
        Err(Error::UnsupportedType { .. })
    ));
}

#[test]
fn d4_tensor_dual_numbers_round_trip() {
    let g = chevalley("D4");
    let r = dual_numbers();
    let ta = build_tensor_algebra(&g, &r).unwrap();
    let gd = verify_grading(ta.carrier(), &g, &ta.chevalley_embedding()).unwrap();
    assert!(gd.root_space_dims()[..24].iter().all(|&d| d == 2));
    let chart = build_chart(&gd, 0).unwrap();
    assert!(all_hold(chart.checks()));
    let rd = recover_products(&gd, &chart).unwrap();
    assert!(rd.negative.is_none());
    assert!(all_hold(&rd.checks));
    let identities = verify_recovered_identities(&rd, g.root_system());
    assert!(identities.iter().any(|r| r.axiom.contains('⊣') && r.axiom.contains('⊢')));
    assert!(all_hold(&identities));

    let cartan = check_cartan_action(&gd, &chart, &rd);
    assert!(cartan.holds, "{cartan}");

    let phi = build_tensor_map(&gd, &chart, &rd).unwrap();
    assert!(all_hold(&phi.checks));
    assert_eq!(phi.kernel_dim(), 0);

    let laws = check_operator_laws(&gd, &[q(1), q(2), q_frac(-1, 3)]).unwrap();
    assert!(all_hold(&laws));
}

#[test]
fn uce_of_d4_tensor_dual_numbers_has_the_same_dialgebra() {
    let g = chevalley("D4");
    let ta = build_tensor_algebra(&g, &dual_numbers()).unwrap();
    let base = verify_grading(ta.carrier(), &g, &ta.chevalley_embedding()).unwrap();
    let u = universal_central_extension(ta.carrier(), DEFAULT_CAP).unwrap();
    assert_eq!(u.hl2, 1);
    let ext = &u.extension;
    let emb = lift_embedding(ext, base.embedding()).unwrap();
    let gd = verify_grading(&ext.total, &g, &emb).unwrap();
    let chart = build_chart(&gd, 0).unwrap();
    let rd = recover_products(&gd, &chart).unwrap();
    assert!(all_hold(&verify_recovered_identities(&rd, g.root_system())));

    let phi = build_tensor_map(&gd, &chart, &rd).unwrap();
    assert!(all_hold(&phi.checks));
    assert_eq!(phi.kernel_dim(), 1);

    let report = check_delta_homomorphism(&gd, &base, &ext.projection).unwrap();
    assert!(report.bijective);
    assert_eq!(report.kernel_dim, 1);

    // The quotient by the central kernel is graded with the same root spaces.
    let (q_alg, proj) = quotient(&ext.total, &ext.kernel).unwrap();
    let qemb = gd.embedding().map(&proj);
    let qgd = verify_grading(&q_alg, &g, &qemb).unwrap();
    let dims: Vec<usize> = qgd.root_space_dims();
    assert_eq!(dims[..24], gd.root_space_dims()[..24]);
    assert!(check_delta_homomorphism(&gd, &qgd, &proj).unwrap().bijective);
}

#[test]
fn identity_is_a_delta_homomorphism() {
    let g = chevalley("A2");
    let sl = build_sl(3, &k2()).unwrap();
    let gd = verify_grading(sl.carrier(), &g, &sl.chevalley_embedding(&g).unwrap()).unwrap();
    let rep = check_delta_homomorphism(&gd, &gd, &Matrix::identity(sl.dim())).unwrap();
    assert!(rep.bijective);
    assert_eq!(rep.kernel_dim, 0);
    assert_eq!(rep.phibar, vec![unit(2, 0), unit(2, 1)]);
}

#[test]
fn rank_two_steinberg_model_recovers_an_alternative_dialgebra() {
    let g = chevalley("A2");
    let model = build_steinberg_model(3, &k2(), DEFAULT_CAP).unwrap();
    let gd = verify_grading(model.algebra(), &g, &model.chevalley_embedding(&g).unwrap()).unwrap();
    let chart = build_chart(&gd, 0).unwrap();
    let rd = recover_products(&gd, &chart).unwrap();
    let reports = verify_recovered_identities(&rd, g.root_system());
    assert!(reports.len() > 5);
    assert!(all_hold(&reports));
}

#[test]
fn operator_laws_on_sl3_over_k2() {
    let g = chevalley("A2");
    let sl = build_sl(3, &k2()).unwrap();
    let gd = verify_grading(sl.carrier(), &g, &sl.chevalley_embedding(&g).unwrap()).unwrap();
    assert!(all_hold(&check_operator_laws(&gd, &[q(2), q_frac(-1, 3)]).unwrap()));
}

#[test]
fn weight_space_lookup() {
    let g = chevalley("A2");
    let gd = verify_grading(g.algebra(), &g, &Embedding::identity(&g)).unwrap();
    assert_eq!(gd.weight_space(&[0, 0]).unwrap().dim(), 2);
    assert_eq!(gd.weight_space(&[1, 1]).unwrap().dim(), 1);
    assert!(gd.weight_space(&[2, 1]).is_none());
}
