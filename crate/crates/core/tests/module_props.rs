mod common;

use common::*;
use gruss::functional::{
    check_schwarz_2_1, check_schwarz_2_2, check_schwarz_2_3, check_schwarz_2_4, check_schwarz_2_5,
    check_schwarz_2_6,
};
use gruss::module_space::{translate, weighted_combination};
use gruss::{AlgebraElement, Complex64, ModuleVector, ProbabilityVector, ScalarWeights, Slack, VectorTuple};
use proptest::prelude::*;

fn pair() -> impl Strategy<Value = (ModuleVector, ModuleVector)> {
    (1usize..=4, 1usize..=3).prop_flat_map(|(k, d)| (vector(k, d), vector(k, d)))
}

#[test]
fn unit_first_slot_has_norm_one() {
    let e = ModuleVector::first_slot(AlgebraElement::identity(3), 4);
    assert!((e.norm() - 1.0).abs() < 1e-15);
    assert_eq!(e.gram(), AlgebraElement::identity(3));
}

#[test]
fn weighted_combination_accepts_both_weight_kinds() {
    let xs = VectorTuple::new(vec![
        ModuleVector::first_slot(AlgebraElement::diag_real(&[1.0, 2.0]), 1),
        ModuleVector::first_slot(AlgebraElement::diag_real(&[3.0, -1.0]), 1),
    ])
    .unwrap();
    let p = ProbabilityVector::new(vec![0.25, 0.75]).unwrap();
    let m = weighted_combination(p.as_slice(), &xs).unwrap();
    assert_eq!(m.parts()[0], AlgebraElement::diag_real(&[2.5, -0.25]));
    let w = ScalarWeights(vec![c(0.0, 1.0), c(1.0, 0.0)]);
    let m = weighted_combination(w.as_slice(), &xs).unwrap();
    assert_eq!(m.parts()[0].get(0, 0), c(3.0, 1.0));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn right_linearity(
        (x, y, z, a, b) in (1usize..=4, 1usize..=3).prop_flat_map(|(k, d)| {
            (vector(k, d), vector(k, d), vector(k, d), element(k), element(k))
        }),
    ) {
        let lhs = x.inner(&(&y.right_mul(&a) + &z.right_mul(&b))).unwrap();
        let rhs = &matmul(&x.inner(&y).unwrap(), &a) + &matmul(&x.inner(&z).unwrap(), &b);
        prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-12 * (1.0 + rhs.frobenius_norm()));
    }

    #[test]
    fn adjoint_symmetry((x, y) in pair()) {
        let xy = x.inner(&y).unwrap();
        let yx = y.inner(&x).unwrap();
        prop_assert!(xy.adjoint().max_abs_diff(&yx) <= 1e-14 * (1.0 + xy.frobenius_norm()));
    }

    #[test]
    fn gram_is_positive((x, _) in pair()) {
        prop_assert!(x.gram().is_positive());
    }

    #[test]
    fn conjugate_linear_first_slot((x, y) in pair(), re in -2.0..2.0f64, im in -2.0..2.0f64) {
        let z = Complex64::new(re, im);
        let lhs = x.scale(z).inner(&y).unwrap();
        let rhs = x.inner(&y).unwrap().scale(z.conj());
        prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-13 * (1.0 + rhs.frobenius_norm()));
    }

    #[test]
    fn hs_seminorm_is_entrywise_sum((x, _) in pair()) {
        let direct: f64 = x.parts().iter().flat_map(|p| p.entries()).map(|z| z.norm_sqr()).sum();
        prop_assert!(rel_close(x.hs_seminorm().powi(2), direct, 1e-12));
    }

    #[test]
    fn triangle_inequality((x, y) in pair()) {
        prop_assert!((&x + &y).norm() <= x.norm() + y.norm() + 1e-10);
        prop_assert!((&x + &y).hs_seminorm() <= x.hs_seminorm() + y.hs_seminorm() + 1e-10);
    }

    #[test]
    fn norms_compare((x, _) in pair()) {
        // ||<x,x>|| <= tr <x,x>
        prop_assert!(x.norm() <= x.hs_seminorm() * (1.0 + 1e-12));
    }

    #[test]
    fn schwarz_family((x, y) in pair(), lambda in -3.0..3.0f64) {
        let s = Slack::default();
        for cert in [
            check_schwarz_2_1(&x, &y, s).unwrap(),
            check_schwarz_2_2(&x, &y, s).unwrap(),
            check_schwarz_2_3(&x, &y, s).unwrap(),
            check_schwarz_2_4(&x, &y, s).unwrap(),
            check_schwarz_2_5(&x, &y, s).unwrap(),
            check_schwarz_2_6(&x, &y, s).unwrap(),
        ] {
            prop_assert!(cert.pass, "{} failed: {:?}", cert.name, cert);
        }
        // parallel vectors give equality in the weak and strong trace forms
        let y = x.scale_real(lambda);
        let weak = check_schwarz_2_2(&x, &y, s).unwrap();
        prop_assert!((weak.lhs - weak.final_rhs()).abs() <= 1e-9 * (1.0 + weak.final_rhs()));
        let strong = check_schwarz_2_3(&x, &y, s).unwrap();
        prop_assert!((strong.lhs - strong.final_rhs()).abs() <= 1e-9 * (1.0 + strong.final_rhs()));
    }

    #[test]
    fn translation_matches_direct(xs in tuple(2, 2, 4), a in vector(2, 2)) {
        let t = translate(&xs, &a).unwrap();
        for (orig, moved) in xs.iter().zip(t.iter()) {
            let direct = (orig - &a).norm();
            prop_assert!(rel_close(moved.norm(), direct, 1e-14));
        }
    }

    #[test]
    fn combination_is_linear(xs in tuple(2, 2, 3), ys in tuple(2, 2, 3), p in probability(3)) {
        let sum = VectorTuple::new(xs.iter().zip(ys.iter()).map(|(x, y)| x + y).collect()).unwrap();
        let lhs = weighted_combination(p.as_slice(), &sum).unwrap();
        let rhs = &weighted_combination(p.as_slice(), &xs).unwrap()
            + &weighted_combination(p.as_slice(), &ys).unwrap();
        prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-14 * (1.0 + rhs.hs_seminorm()));
    }
}
