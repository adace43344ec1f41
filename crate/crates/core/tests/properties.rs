use proptest::prelude::*;

use rootgraded::chevalley::ChevalleyAlgebra;
use rootgraded::dialg::examples::*;
use rootgraded::dialg::{check_alternative, check_associative, dialgebra_to_leibniz, from_nspace, tensor, Dialgebra};
use rootgraded::exactlin::{kernel_basis, q_frac, rank, solve, Matrix, Subspace, Q};
use rootgraded::leibniz::{ad, check_leibniz, derivation_failure};
use rootgraded::matrixleib::build_sl;
use rootgraded::recognition::{build_chart_with, check_operator_laws, verify_grading, ChartOptions};

fn matrix() -> impl Strategy<Value = Matrix> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec((-3i64..4, 1i64..3), c), r).prop_map(|rows| {
            Matrix::from_dense(
                &rows
                    .into_iter()
                    .map(|row| row.into_iter().map(|(n, d)| q_frac(n, d)).collect())
                    .collect::<Vec<Vec<Q>>>(),
            )
        })
    })
}

fn associative_dialgebra() -> impl Strategy<Value = Dialgebra> {
    let base = prop_oneof![
        Just(k()),
        Just(dual_numbers()),
        Just(diff3()),
        Just(matrix_algebra(2)),
        (1usize..4).prop_map(k_nspace),
        (1usize..3).prop_map(upper_triangular_nspace),
        (1usize..3).prop_map(|n| from_nspace(&matrix_table(2), None, n).unwrap()),
    ];
    (base.clone(), proptest::option::of(base)).prop_map(|(a, b)| match b {
        Some(b) if a.dim() * b.dim() <= 12 => tensor(&a, &b).unwrap(),
        _ => a,
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity(m in matrix()) {
        prop_assert_eq!(rank(&m) + kernel_basis(&m).dim(), m.cols());
    }

    #[test]
    fn kernel_basis_is_stable_under_re_reduction(m in matrix()) {
        let k = kernel_basis(&m);
        let again = Subspace::span(m.cols(), k.basis().iter().cloned());
        prop_assert_eq!(again.basis(), k.basis());
        for v in k.basis_dense() {
            prop_assert!(m.mul_vec(&v).iter().all(|x| *x == Q::from_integer(0.into())));
        }
    }

    #[test]
    fn solve_recovers_a_preimage(m in matrix(), seed in proptest::collection::vec(-4i64..5, 6)) {
        let x: Vec<Q> = seed[..m.cols()].iter().map(|&v| q_frac(v, 2)).collect();
        let b = m.mul_vec(&x);
        let y = solve(&m, &b).unwrap();
        prop_assert_eq!(m.mul_vec(&y), b);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn associative_dialgebras_are_alternative(d in associative_dialgebra()) {
        prop_assert!(check_associative(&d).iter().all(|r| r.holds));
        prop_assert!(check_alternative(&d).iter().all(|r| r.holds));
    }

    #[test]
    fn leibniz_algebra_of_an_associative_dialgebra(d in associative_dialgebra()) {
        let l = dialgebra_to_leibniz(&d).unwrap();
        prop_assert!(check_leibniz(l.table()).identity.holds);
        for z in 0..l.dim() {
            prop_assert!(derivation_failure(&l, ad(&l, &l.basis_vec(z)).matrix()).is_none());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn operator_laws_for_random_parameters(num in -5i64..6, den in 1i64..4) {
        prop_assume!(num != 0);
        let g = ChevalleyAlgebra::from_label("A2").unwrap();
        let sl = build_sl(3, &k2()).unwrap();
        let gd = verify_grading(sl.carrier(), &g, &sl.chevalley_embedding(&g).unwrap()).unwrap();
        for r in check_operator_laws(&gd, &[q_frac(num, den)]).unwrap() {
            prop_assert!(r.holds, "{}", r);
        }
    }

    #[test]
    fn chart_does_not_depend_on_the_sampled_words(seed in any::<u64>()) {
        let g = ChevalleyAlgebra::from_label("A3").unwrap();
        let sl = build_sl(4, &k2()).unwrap();
        let gd = verify_grading(sl.carrier(), &g, &sl.chevalley_embedding(&g).unwrap()).unwrap();
        let opts = ChartOptions { seed, ..ChartOptions::default() };
        let chart = build_chart_with(&gd, 0, opts).unwrap();
        for r in chart.checks() {
            prop_assert!(r.holds, "{}", r);
        }
    }
}
