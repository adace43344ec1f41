use rootgraded::chevalley::ChevalleyAlgebra;
use rootgraded::dialg::examples::{k2, upper_triangular_nspace};
use rootgraded::dialg::dialgebra_to_leibniz;
use rootgraded::exactlin::is_zero_vec;
use rootgraded::leibniz::*;
use rootgraded::matrixleib::build_sl;

const HL2_SL3_K2: usize = 0;

fn t2_algebra() -> LeibnizAlgebra {
    dialgebra_to_leibniz(&upper_triangular_nspace(2)).unwrap()
}

#[test]
fn leibniz_algebra_of_t2_is_not_lie() {
    let l = t2_algebra();
    let c = check_leibniz(l.table());
    assert!(c.identity.holds);
    assert!(!c.is_lie());
}

#[test]
fn k2_gives_an_abelian_algebra() {
    let l = dialgebra_to_leibniz(&k2()).unwrap();
    assert!(l.table().is_zero());
}

#[test]
fn inner_derivations_of_constructed_algebras() {
    for l in [sl2(), t2_algebra()] {
        for z in 0..l.dim() {
            assert!(derivation_failure(&l, ad(&l, &l.basis_vec(z)).matrix()).is_none());
        }
        let d = derivations(&l);
        assert!(d.inn.is_subspace_of(&d.der));
    }
}

#[test]
fn lie_quotient_of_t2_is_smaller_and_lie() {
    let l = t2_algebra();
    let (lie, proj) = lie_quotient(&l).unwrap();
    assert!(lie.dim() < l.dim());
    assert!(check_leibniz(lie.table()).is_lie());
    assert!(homomorphism_failure(&l, &lie, &proj).is_none());
}

#[test]
fn transposed_action_is_not_a_module_on_t2() {
    let l = t2_algebra();
    assert!(check_right_module(&l, &RightAction::adjoint(&l)).holds);
    let r = check_right_module(&l, &RightAction::transposed(&l));
    assert!(!r.holds);
    assert!(r.counterexample.is_some());
}

#[test]
fn boundaries_compose_to_zero() {
    for l in [sl2(), dialgebra_to_leibniz(&k2()).unwrap(), t2_algebra()] {
        let d2 = boundary(&l, 2, DEFAULT_CAP).unwrap().delta;
        let d3 = boundary(&l, 3, DEFAULT_CAP).unwrap().delta;
        let d4 = boundary(&l, 4, DEFAULT_CAP).unwrap().delta;
        assert!(d2.mul(&d3).is_zero());
        assert!(d3.mul(&d4).is_zero());
    }
}

#[test]
fn chevalley_algebras_are_centrally_closed() {
    for label in ["A2", "A3"] {
        let g = ChevalleyAlgebra::from_label(label).unwrap();
        assert_eq!(homology(g.algebra(), 2, DEFAULT_CAP).unwrap().dim, 0, "{label}");
        assert_eq!(homology(g.algebra(), 1, DEFAULT_CAP).unwrap().dim, 0, "{label}");
    }
    let u = universal_central_extension(&sl2(), DEFAULT_CAP).unwrap();
    assert_eq!(u.extension.total.dim(), 3);
}

#[test]
fn sl3_over_k2_homology_and_uce() {
    let sl = build_sl(3, &k2()).unwrap();
    let l = sl.carrier();
    assert!(is_perfect(l));
    assert_eq!(homology(l, 2, DEFAULT_CAP).unwrap().dim, HL2_SL3_K2);
    let u = universal_central_extension(l, DEFAULT_CAP).unwrap();
    assert_eq!(u.hl2, HL2_SL3_K2);
    assert_eq!(u.extension.kernel.dim(), HL2_SL3_K2);
    u.extension.verify(l).unwrap();
    assert!(is_perfect(&u.extension.total));
}

#[test]
fn uce_kernel_is_central_in_a_nontrivial_case() {
    // The square-zero current algebra of sl2 has a one-dimensional HL2.
    use rootgraded::dialg::examples::dual_numbers;
    use rootgraded::matrixleib::build_tensor_algebra;
    let g = ChevalleyAlgebra::from_label("A2").unwrap();
    let ta = build_tensor_algebra(&g, &dual_numbers()).unwrap();
    let u = universal_central_extension(ta.carrier(), DEFAULT_CAP).unwrap();
    u.extension.verify(ta.carrier()).unwrap();
    let z = center(&u.extension.total);
    assert!(u.extension.kernel.is_subspace_of(&z));
    assert!(is_perfect(&u.extension.total));
    for v in u.extension.kernel.basis_dense() {
        assert!(!is_zero_vec(&v));
    }
}
