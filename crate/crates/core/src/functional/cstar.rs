//! Grüss-type bounds in the C*-module norm `||x|| = ||<x, x>||^(1/2)`.

use num_complex::Complex64;

use super::{gruss, translated_form, Ball, BoundCertificate, Flavor};
use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::module_space::{weighted_combination, ProbabilityVector, ScalarWeights};
use crate::tolerance::Slack;

/// `||G(x, y)||^2 <= ||G_a(x)|| ||G_b(y)|| <= (sum p_i ||x_i - a||^2)(sum p_i ||y_i - b||^2)`
/// where `G_a(x) = sum p_i |x_i - a|^2 - |sum p_i x_i - a|^2`.
///
/// Radii in the balls are ignored; only the centers take part.
pub fn check_thm_3_1(
    p: &ProbabilityVector,
    x: Ball<'_>,
    y: Ball<'_>,
    slack: Slack,
) -> Result<BoundCertificate> {
    let g = gruss(p, x.items, y.items)?;
    let gx = translated_form(p, x.items, x.items, x.center, x.center)?;
    let gy = translated_form(p, y.items, y.items, y.center, y.center)?;

    let spread = |ball: &Ball<'_>| -> f64 {
        ball.items
            .iter()
            .zip(p.as_slice())
            .map(|(v, w)| w * (v - ball.center).gram().operator_norm())
            .sum()
    };

    let lhs = g.operator_norm().powi(2);
    let middle = gx.operator_norm() * gy.operator_norm();
    let outer = spread(&x) * spread(&y);
    Ok(BoundCertificate::evaluate("3.1", lhs, vec![middle, outer], slack))
}

/// `||G(x, y)|| <= r s` whenever `||x_i - a|| <= r` and `||y_i - b|| <= s`.
pub fn check_cor_3_1(
    p: &ProbabilityVector,
    x: Ball<'_>,
    y: Ball<'_>,
    slack: Slack,
) -> Result<BoundCertificate> {
    let g = gruss(p, x.items, y.items)?;
    let r = x.resolve(Flavor::CStar, slack)?;
    let s = y.resolve(Flavor::CStar, slack)?;
    Ok(BoundCertificate::evaluate("3.8", g.operator_norm(), vec![r * s], slack).with_radii(&[r, s]))
}

/// `||sum p_i a_i x_i - sum p_i a_i sum p_i x_i||
///    <= r sum p_i |a_i - sum p_j a_j|
///    <= r (sum p_i |a_i|^2 - |sum p_i a_i|^2)^(1/2)`.
pub fn check_remark_3_10(
    p: &ProbabilityVector,
    alphas: &ScalarWeights,
    x: Ball<'_>,
    slack: Slack,
) -> Result<BoundCertificate> {
    x.items.check_weights(p.len())?;
    x.items.check_weights(alphas.len())?;
    let r = x.resolve(Flavor::CStar, slack)?;

    let alpha_mean = p.mean_of(alphas.as_slice());
    let pa: Vec<Complex64> = p
        .as_slice()
        .iter()
        .zip(alphas.as_slice())
        .map(|(w, z)| z * w)
        .collect();
    let mean_x = weighted_combination(p.as_slice(), x.items)?;
    let lhs = (&weighted_combination(&pa, x.items)? - &mean_x.scale(alpha_mean)).norm();

    let deviations: Vec<f64> = alphas.as_slice().iter().map(|z| (z - alpha_mean).norm()).collect();
    let mean_abs: f64 = p.as_slice().iter().zip(&deviations).map(|(w, d)| w * d).sum();
    let variance: f64 = p.as_slice().iter().zip(&deviations).map(|(w, d)| w * d * d).sum();

    Ok(
        BoundCertificate::evaluate("3.10", lhs, vec![r * mean_abs, r * variance.sqrt()], slack)
            .with_radii(&[r]),
    )
}

/// The algebra as a module over itself, in the adjoint-free form
/// `||sum p_i a_i b_i - sum p_i a_i sum p_i b_i|| <= r s`
/// for `||a_i - a|| <= r`, `||b_i - b|| <= s`. Both tuples must have rank 1.
pub fn check_remark_3_1i(
    p: &ProbabilityVector,
    x: Ball<'_>,
    y: Ball<'_>,
    slack: Slack,
) -> Result<BoundCertificate> {
    if x.items.rank() != 1 || y.items.rank() != 1 {
        return Err(Error::ShapeMismatch(
            "the algebra-over-itself bound needs rank-1 tuples".into(),
        ));
    }
    x.items.check_pair(y.items)?;
    x.items.check_weights(p.len())?;
    let r = x.resolve(Flavor::CStar, slack)?;
    let s = y.resolve(Flavor::CStar, slack)?;

    let a_items: Vec<&AlgebraElement> = x.items.iter().map(|v| &v.parts()[0]).collect();
    let b_items: Vec<&AlgebraElement> = y.items.iter().map(|v| &v.parts()[0]).collect();
    let w = p.complex();
    let a_mean = AlgebraElement::linear_combination(&w, &a_items);
    let b_mean = AlgebraElement::linear_combination(&w, &b_items);

    // two-pass about the means, as in `gruss`
    let dim = x.items.dim();
    let mut acc = AlgebraElement::zeros(dim);
    let mut da_sum = AlgebraElement::zeros(dim);
    let mut db_sum = AlgebraElement::zeros(dim);
    for ((ai, bi), &pi) in a_items.iter().zip(&b_items).zip(p.as_slice()) {
        let da = *ai - &a_mean;
        let db = *bi - &b_mean;
        acc += &(&da * &db).scale_real(pi);
        da_sum += &da.scale_real(pi);
        db_sum += &db.scale_real(pi);
    }
    let value = &acc - &(&da_sum * &db_sum);
    Ok(
        BoundCertificate::evaluate("3.1i", value.operator_norm(), vec![r * s], slack)
            .with_radii(&[r, s]),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module_space::{ModuleVector, VectorTuple};

    fn scalar(v: f64) -> ModuleVector {
        ModuleVector::first_slot(AlgebraElement::diag_real(&[v]), 1)
    }

    fn tuple(values: &[f64]) -> VectorTuple {
        VectorTuple::new(values.iter().map(|&v| scalar(v)).collect()).unwrap()
    }

    #[test]
    fn constant_tuples_give_zero_chain() {
        let a = scalar(1.5);
        let xs = VectorTuple::constant(&a, 3);
        let p = ProbabilityVector::uniform(3);
        let c = check_thm_3_1(&p, Ball::new(&xs, &a), Ball::new(&xs, &a), Slack::default()).unwrap();
        assert!(c.pass);
        assert_eq!(c.tightness, 0.0);
        let c = check_cor_3_1(&p, Ball::new(&xs, &a), Ball::new(&xs, &a), Slack::default()).unwrap();
        assert!(c.pass);
        assert_eq!(c.radii, vec![0.0, 0.0]);
    }

    #[test]
    fn radius_violation_is_an_error() {
        let xs = tuple(&[0.0, 2.0]);
        let a = scalar(1.0);
        let p = ProbabilityVector::uniform(2);
        let err = check_cor_3_1(
            &p,
            Ball::with_radius(&xs, &a, 0.9),
            Ball::new(&xs, &a),
            Slack::default(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::RadiusViolated { .. }));
    }

    #[test]
    fn classical_quarter_bound() {
        // values in [1, 5] and [-2, 2]: midpoint radii 2 and 2, bound 1/4 * 4 * 4
        let xs = tuple(&[1.0, 5.0, 3.0, 4.5]);
        let ys = tuple(&[-2.0, 2.0, 0.5, 1.0]);
        let (a, b) = (scalar(3.0), scalar(0.0));
        let p = ProbabilityVector::uniform(4);
        let c = check_cor_3_1(
            &p,
            Ball::with_radius(&xs, &a, 2.0),
            Ball::with_radius(&ys, &b, 2.0),
            Slack::default(),
        )
        .unwrap();
        assert!(c.pass);
        assert_eq!(c.final_rhs(), 0.25 * 4.0 * 4.0);
    }

    #[test]
    fn remark_3_10_constant_alpha() {
        let xs = tuple(&[0.0, 1.0, 3.0]);
        let a = scalar(1.0);
        let alphas = ScalarWeights(vec![Complex64::new(0.5, 2.0); 3]);
        let c = check_remark_3_10(&ProbabilityVector::uniform(3), &alphas, Ball::new(&xs, &a), Slack::default())
            .unwrap();
        assert!(c.lhs < 1e-15);
        assert!(c.rhs_chain[0] < 1e-15);
        assert!(c.pass);
    }

    #[test]
    fn remark_3_10_tight_pair() {
        // x = a +- r e, alpha = (1, -1): both links equal r and lhs = r
        let r = 0.75;
        let a = scalar(2.0);
        let xs = tuple(&[2.0 + r, 2.0 - r]);
        let alphas = ScalarWeights(vec![Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0)]);
        let c = check_remark_3_10(&ProbabilityVector::uniform(2), &alphas, Ball::new(&xs, &a), Slack::default())
            .unwrap();
        assert!(c.pass);
        assert!((c.lhs - r).abs() < 1e-15);
        assert!((c.rhs_chain[0] - r).abs() < 1e-15);
        assert!((c.rhs_chain[1] - r).abs() < 1e-15);
        assert!((c.tightness - 1.0).abs() < 1e-15);
    }

    #[test]
    fn remark_3_1i_requires_rank_one() {
        let x = ModuleVector::zeros(2, 2);
        let xs = VectorTuple::constant(&x, 2);
        let err = check_remark_3_1i(
            &ProbabilityVector::uniform(2),
            Ball::new(&xs, &x),
            Ball::new(&xs, &x),
            Slack::default(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::ShapeMismatch(_)));
    }

    #[test]
    fn remark_3_1i_identity_shift_is_tight() {
        let a = AlgebraElement::from_real_rows(&[vec![1.0, 2.0], vec![0.0, -1.0]]).unwrap();
        let b = AlgebraElement::from_real_rows(&[vec![0.5, 0.0], vec![3.0, 1.0]]).unwrap();
        let (r, s) = (0.5, 2.0);
        let i = AlgebraElement::identity(2);
        let wrap = |m: AlgebraElement| ModuleVector::first_slot(m, 1);
        let xs = VectorTuple::new(vec![wrap(&a + &i.scale_real(r)), wrap(&a - &i.scale_real(r))]).unwrap();
        let ys = VectorTuple::new(vec![wrap(&b + &i.scale_real(s)), wrap(&b - &i.scale_real(s))]).unwrap();
        let (ca, cb) = (wrap(a), wrap(b));
        let c = check_remark_3_1i(
            &ProbabilityVector::uniform(2),
            Ball::new(&xs, &ca),
            Ball::new(&ys, &cb),
            Slack::default(),
        )
        .unwrap();
        assert!(c.pass);
        assert!((c.lhs - r * s).abs() < 1e-14);
    }
}
