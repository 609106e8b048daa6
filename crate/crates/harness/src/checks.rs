//! The catalogue of suite sections and the evaluation of one section on one
//! instance.

use gruss::functional::{
    check_cor_3_1, check_cor_5_1, check_remark_3_10, check_remark_3_1i, check_schwarz_2_1,
    check_schwarz_2_2, check_schwarz_2_3, check_schwarz_2_4, check_schwarz_2_5, check_schwarz_2_6,
    check_thm_3_1, check_thm_5_1, check_thm_5_2, gruss, gruss_self, identity_2_7_residual,
    identity_2_8_residual, identity_3_2_residual,
};
use gruss::transforms::{
    check_thm_4_1, check_thm_4_2, check_thm_4_3, fourier_mean_approx, fourier_phase,
    mellin_mean_approx, mu_certificates,
};
use gruss::{
    AlgebraElement, Ball, BoundCertificate, Complex64, Flavor, IdentityResidual, ModuleVector,
    ProbabilityVector, RadiusMode, ScalarWeights, Slack, VectorTuple,
};
use rand::Rng;

use crate::error::{HarnessError, Result};
use crate::instance::ModuleInstance;

/// Which part of the suite a section belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Group {
    Identity,
    CStar,
    HStar,
}

/// Every section in report order.
pub const SECTIONS: &[(&str, Group)] = &[
    ("2.7", Group::Identity),
    ("2.8", Group::Identity),
    ("3.2", Group::Identity),
    ("2.1", Group::CStar),
    ("2.2", Group::HStar),
    ("2.3", Group::HStar),
    ("2.4", Group::HStar),
    ("2.5", Group::CStar),
    ("2.6", Group::CStar),
    ("3.1", Group::CStar),
    ("3.3", Group::CStar),
    ("3.4", Group::CStar),
    ("3.8", Group::CStar),
    ("3.10", Group::CStar),
    ("3.1i", Group::CStar),
    ("4.4", Group::CStar),
    ("4.8", Group::CStar),
    ("4.10", Group::CStar),
    ("4.12", Group::CStar),
    ("4.15", Group::CStar),
    ("4.16", Group::CStar),
    ("4.17", Group::CStar),
    ("5.2", Group::HStar),
    ("5.7", Group::HStar),
    ("5.13", Group::HStar),
    ("sharp-3.8", Group::CStar),
    ("sharp-5.2", Group::HStar),
];

/// Witness tightness must be 1 within these.
pub const SHARP_TOL_CSTAR: f64 = 1e-10;
pub const SHARP_TOL_HSTAR: f64 = 1e-9;

pub fn group_of(id: &str) -> Result<Group> {
    SECTIONS
        .iter()
        .find(|(name, _)| *name == id)
        .map(|(_, g)| *g)
        .ok_or_else(|| HarnessError::UnknownInequality(id.to_string()))
}

pub fn flavor_of(group: Group) -> Flavor {
    match group {
        Group::HStar => Flavor::HStar,
        Group::Identity | Group::CStar => Flavor::CStar,
    }
}

/// Result of one section on one instance.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub pass: bool,
    pub tightness: Option<f64>,
    pub residual: Option<f64>,
    pub message: Option<String>,
}

impl Outcome {
    fn from_certificate(c: &BoundCertificate) -> Self {
        Outcome {
            pass: c.pass,
            tightness: Some(c.tightness),
            residual: None,
            message: (!c.pass).then(|| format!("lhs {} exceeds chain {:?}", c.lhs, c.rhs_chain)),
        }
    }

    fn from_certificates(cs: &[BoundCertificate]) -> Self {
        let failed = cs.iter().find(|c| !c.pass);
        Outcome {
            pass: failed.is_none(),
            tightness: cs.iter().map(|c| c.tightness).reduce(f64::max),
            residual: None,
            message: failed.map(|c| format!("lhs {} exceeds chain {:?}", c.lhs, c.rhs_chain)),
        }
    }

    fn from_residual(r: IdentityResidual) -> Self {
        Outcome {
            pass: r.passes(),
            tightness: None,
            residual: Some(r.relative()),
            message: (!r.passes()).then(|| format!("residual {} at scale {}", r.residual, r.scale)),
        }
    }

    fn from_flag(pass: bool, what: &str) -> Self {
        Outcome {
            pass,
            tightness: None,
            residual: None,
            message: (!pass).then(|| what.to_string()),
        }
    }

    fn from_sharp(c: &BoundCertificate, tol: f64) -> Self {
        let near_one = (c.tightness - 1.0).abs() <= tol;
        Outcome {
            pass: c.pass && near_one,
            tightness: Some(c.tightness),
            residual: None,
            message: (!(c.pass && near_one)).then(|| format!("witness tightness {}", c.tightness)),
        }
    }

    pub fn error(e: impl std::fmt::Display) -> Self {
        Outcome {
            pass: false,
            tightness: None,
            residual: None,
            message: Some(e.to_string()),
        }
    }
}

/// `(x_1, 0, ..., 0)` components only, as rank-1 vectors.
fn first_components(xs: &VectorTuple) -> VectorTuple {
    xs.map_indexed(|_, x| ModuleVector::first_slot(x.parts()[0].clone(), 1))
}

fn first_component(x: &ModuleVector) -> ModuleVector {
    ModuleVector::first_slot(x.parts()[0].clone(), 1)
}

/// C*-unit direction `(I, 0, ..., 0)`.
pub fn cstar_unit(k: usize, d: usize) -> ModuleVector {
    ModuleVector::first_slot(AlgebraElement::identity(k), d)
}

fn hs_unit(v: &ModuleVector) -> ModuleVector {
    let n = v.hs_seminorm();
    if n > 0.0 {
        v.scale_real(1.0 / n)
    } else {
        cstar_unit(v.dim(), v.rank()).scale_real(1.0 / (v.dim() as f64).sqrt())
    }
}

fn schwarz(
    inst: &ModuleInstance,
    slack: Slack,
    check: fn(&ModuleVector, &ModuleVector, Slack) -> gruss::Result<BoundCertificate>,
) -> gruss::Result<Outcome> {
    let certs = inst
        .xs
        .iter()
        .zip(inst.ys.iter())
        .map(|(x, y)| check(x, y, slack))
        .collect::<gruss::Result<Vec<_>>>()?;
    Ok(Outcome::from_certificates(&certs))
}

/// Evaluates section `id` on `inst`, whose radii must already be measured in
/// the section's flavor. Checker errors become failed outcomes.
pub fn evaluate(id: &str, inst: &ModuleInstance, slack: Slack, mode: RadiusMode) -> Result<Outcome> {
    group_of(id)?;
    Ok(evaluate_inner(id, inst, slack, mode).unwrap_or_else(Outcome::error))
}

fn evaluate_inner(
    id: &str,
    inst: &ModuleInstance,
    slack: Slack,
    mode: RadiusMode,
) -> gruss::Result<Outcome> {
    let (p, xs, ys, a, b) = (&inst.p, &inst.xs, &inst.ys, &inst.a, &inst.b);
    let xr = || Ball::with_radius(xs, a, inst.r);
    let ys_ball = || Ball::with_radius(ys, b, inst.s);
    Ok(match id {
        "2.7" => Outcome::from_residual(identity_2_7_residual(p, &inst.alphas, xs, a)?),
        "2.8" => Outcome::from_residual(identity_2_8_residual(p, xs, ys, a, b)?),
        "3.2" => Outcome::from_residual(identity_3_2_residual(p, xs, ys)?),
        "2.1" => schwarz(inst, slack, check_schwarz_2_1)?,
        "2.2" => schwarz(inst, slack, check_schwarz_2_2)?,
        "2.3" => schwarz(inst, slack, check_schwarz_2_3)?,
        "2.4" => schwarz(inst, slack, check_schwarz_2_4)?,
        "2.5" => schwarz(inst, slack, check_schwarz_2_5)?,
        "2.6" => schwarz(inst, slack, check_schwarz_2_6)?,
        "3.1" => Outcome::from_certificate(&check_thm_3_1(p, xr(), ys_ball(), slack)?),
        "3.3" => Outcome::from_flag(
            gruss_self(p, xs)?.value.is_positive() && gruss_self(p, ys)?.value.is_positive(),
            "G(x, x) is not positive",
        ),
        "3.4" => {
            let g = gruss(p, xs, ys)?.operator_norm();
            let gx = gruss_self(p, xs)?.operator_norm();
            let gy = gruss_self(p, ys)?.operator_norm();
            Outcome::from_certificate(&BoundCertificate::evaluate("3.4", g * g, vec![gx * gy], slack))
        }
        "3.8" => Outcome::from_certificate(&check_cor_3_1(p, xr(), ys_ball(), slack)?),
        "3.10" => Outcome::from_certificate(&check_remark_3_10(p, &inst.alphas, xr(), slack)?),
        "3.1i" => {
            let (xs1, ys1) = (first_components(xs), first_components(ys));
            let (a1, b1) = (first_component(a), first_component(b));
            Outcome::from_certificate(&check_remark_3_1i(
                p,
                Ball::new(&xs1, &a1),
                Ball::new(&ys1, &b1),
                slack,
            )?)
        }
        "4.4" => Outcome::from_certificate(&check_thm_4_1(
            xr(),
            Ball::new(ys, b),
            inst.omega,
            inst.m,
            mode,
            slack,
        )?),
        "4.8" => Outcome::from_certificate(&check_thm_4_2(xr(), Ball::new(ys, b), inst.m, mode, slack)?),
        "4.10" => Outcome::from_certificate(&check_thm_4_3(
            Ball::new(xs, a),
            Ball::new(ys, b),
            inst.omega,
            inst.omega2,
            inst.m,
            mode,
            slack,
        )?),
        "4.12" => {
            let c = fourier_mean_approx(xr(), inst.omega, inst.m, slack)?;
            Outcome::from_certificate(&c.to_bound_certificate())
        }
        "4.15" => {
            let c = mellin_mean_approx(xr(), inst.m, slack)?;
            Outcome::from_certificate(&c.to_bound_certificate())
        }
        "4.16" => Outcome::from_certificate(&mu_certificates(xr(), slack)?.0),
        "4.17" => Outcome::from_certificate(&mu_certificates(xr(), slack)?.1),
        "5.2" => Outcome::from_certificate(&check_thm_5_1(p, xr(), ys_ball(), slack)?),
        "5.7" => Outcome::from_certificate(&check_thm_5_2(p, xr(), ys_ball(), slack)?),
        "5.13" => Outcome::from_certificate(&check_cor_5_1(p, xr(), ys, Some(b), slack)?),
        "sharp-3.8" => {
            let e = cstar_unit(inst.k, inst.d);
            let w = gruss::functional::sharpness_witness(a, b, inst.witness_r, inst.witness_s, &e, Flavor::CStar)?;
            let c = check_cor_3_1(&w.p, Ball::new(&w.xs, a), Ball::new(&w.ys, b), slack)?;
            Outcome::from_sharp(&c, SHARP_TOL_CSTAR)
        }
        "sharp-5.2" => {
            let e = hs_unit(&inst.direction);
            let w = gruss::functional::sharpness_witness(a, b, inst.witness_r, inst.witness_s, &e, Flavor::HStar)?;
            let c = check_thm_5_1(&w.p, Ball::new(&w.xs, a), Ball::new(&w.ys, b), slack)?;
            Outcome::from_sharp(&c, SHARP_TOL_HSTAR)
        }
        other => unreachable!("section {other} is catalogued but not evaluated"),
    })
}

/// An instance from the equality family of section `id`, built around the
/// centers and radii of `base`; `None` when the section has no such family.
pub fn witness_instance<R: Rng + ?Sized>(id: &str, base: &ModuleInstance, rng: &mut R) -> Option<ModuleInstance> {
    let (k, d) = (base.k, base.d);
    let (r, s) = (base.witness_r, base.witness_s);
    let group = group_of(id).ok()?;
    let e = match group {
        Group::HStar => hs_unit(&base.direction),
        _ => cstar_unit(k, d),
    };
    let pm = |c: &ModuleVector, t: f64, dir: &ModuleVector| -> Vec<ModuleVector> {
        vec![c + &dir.scale_real(t), c - &dir.scale_real(t)]
    };
    let mut w = base.clone();
    w.n = 2;
    w.p = ProbabilityVector::uniform(2);
    w.alphas = ScalarWeights(vec![Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0)]);
    w.m = 1;
    let tuple = |v: Vec<ModuleVector>| VectorTuple::new(v).expect("two equal shapes");
    let phased = |items: Vec<ModuleVector>, omega: f64, m: usize| -> Vec<ModuleVector> {
        items
            .iter()
            .enumerate()
            .map(|(i, v)| v.scale(fourier_phase(omega, m, i + 1).conj()))
            .collect()
    };
    match id {
        "2.1" | "2.2" | "2.3" | "2.4" | "2.5" | "2.6" => {
            let lambda = rng.random_range(-2.0..2.0);
            w.ys = w.xs.map_indexed(|_, x| x.scale_real(lambda));
        }
        "3.1" | "3.4" | "3.8" | "3.10" | "sharp-3.8" | "sharp-5.2" => {
            w.xs = tuple(pm(&base.a, r, &e));
            w.ys = tuple(pm(&base.b, s, &e));
        }
        "5.2" | "5.7" | "5.13" => {
            w.b = ModuleVector::zeros(k, d);
            w.xs = tuple(pm(&base.a, r, &e));
            w.ys = tuple(pm(&w.b, s, &e));
        }
        "3.1i" => {
            let one = AlgebraElement::identity(k);
            let (a1, b1) = (first_component(&base.a), first_component(&base.b));
            let unit = ModuleVector::first_slot(one, 1);
            w.d = 1;
            w.a = a1.clone();
            w.b = b1.clone();
            w.direction = first_component(&base.direction);
            w.xs = tuple(pm(&a1, r, &unit));
            w.ys = tuple(pm(&b1, s, &unit));
        }
        "4.15" | "4.16" | "4.17" => {
            w.m = 2;
            w.xs = tuple(vec![&base.a - &e.scale_real(r), &base.a + &e.scale_real(r)]);
        }
        "4.12" => {
            let diff = fourier_phase(base.omega, 1, 1) - fourier_phase(base.omega, 1, 2);
            let u = diff.conj() / diff.norm();
            w.omega = base.omega;
            w.xs = tuple(pm(&base.a, r, &e.scale(u)));
        }
        "4.4" => {
            w.xs = tuple(pm(&base.a, r, &e));
            w.ys = tuple(phased(pm(&base.b, s, &e), base.omega, 1));
        }
        "4.8" => {
            w.m = 2;
            let ys = pm(&base.b, s, &e);
            w.xs = tuple(pm(&base.a, r, &e));
            w.ys = tuple(vec![ys[0].clone(), ys[1].scale_real(0.5)]);
        }
        "4.10" => {
            w.xs = tuple(phased(pm(&base.a, r, &e), base.omega, 1));
            w.ys = tuple(phased(pm(&base.b, s, &e), base.omega2, 1));
        }
        _ => return None,
    }
    Some(w.with_flavor(flavor_of(group)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::random_instance;
    use crate::rng::trial_rng;

    #[test]
    fn every_section_evaluates() {
        let mut rng = trial_rng(5, 0, 0);
        let inst = random_instance(&mut rng, 3, 2, 4, Flavor::CStar).unwrap();
        for (id, group) in SECTIONS {
            let i = inst.with_flavor(flavor_of(*group));
            let o = evaluate(id, &i, Slack::default(), RadiusMode::PerM).unwrap();
            assert!(o.pass, "{id}: {o:?}");
        }
    }

    #[test]
    fn unknown_section() {
        let inst = random_instance(&mut trial_rng(5, 0, 0), 1, 1, 2, Flavor::CStar).unwrap();
        assert!(matches!(
            evaluate("9.9", &inst, Slack::default(), RadiusMode::PerM),
            Err(HarnessError::UnknownInequality(_))
        ));
    }

    #[test]
    fn witness_families_are_tight() {
        let mut rng = trial_rng(11, 0, 0);
        let base = random_instance(&mut rng, 3, 2, 4, Flavor::CStar).unwrap();
        for id in [
            "3.1", "3.8", "3.10", "3.1i", "4.4", "4.8", "4.10", "4.12", "4.15", "4.16", "4.17", "5.2",
            "5.7", "5.13",
        ] {
            let w = witness_instance(id, &base, &mut rng).unwrap();
            let o = evaluate(id, &w, Slack::default(), RadiusMode::PerM).unwrap();
            assert!(o.pass, "{id}: {o:?}");
            let t = o.tightness.unwrap();
            assert!((t - 1.0).abs() < 1e-9, "{id}: tightness {t}");
        }
    }
}
