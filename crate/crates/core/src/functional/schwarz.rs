//! Schwarz-type inequalities for a single pair of module vectors.
//!
//! The positive linear functional is the matrix trace and the C*-seminorm
//! is the operator norm.

use super::BoundCertificate;
use crate::error::Result;
use crate::module_space::ModuleVector;
use crate::tolerance::Slack;

/// `||<x, y>||^2 <= ||<x, x>|| ||<y, y>||`.
pub fn check_schwarz_2_1(x: &ModuleVector, y: &ModuleVector, slack: Slack) -> Result<BoundCertificate> {
    let xy = x.inner(y)?;
    let rhs = x.gram().operator_norm() * y.gram().operator_norm();
    Ok(BoundCertificate::evaluate("2.1", xy.operator_norm().powi(2), vec![rhs], slack))
}

/// `(Re tr <x, y>)^2 <= tr <x, x> tr <y, y>`.
pub fn check_schwarz_2_2(x: &ModuleVector, y: &ModuleVector, slack: Slack) -> Result<BoundCertificate> {
    let t = x.inner(y)?.trace().re;
    Ok(BoundCertificate::evaluate("2.2", t * t, vec![trace_product(x, y)], slack))
}

/// `tau(<x, y>)^2 <= tr <x, x> tr <y, y>`.
pub fn check_schwarz_2_3(x: &ModuleVector, y: &ModuleVector, slack: Slack) -> Result<BoundCertificate> {
    let tau = x.inner(y)?.trace_norm();
    Ok(BoundCertificate::evaluate("2.3", tau * tau, vec![trace_product(x, y)], slack))
}

/// `|tr <x, y>|^2 <= tr <x, x> tr <y, y>`.
pub fn check_schwarz_2_4(x: &ModuleVector, y: &ModuleVector, slack: Slack) -> Result<BoundCertificate> {
    let t = x.inner(y)?.trace().norm_sqr();
    Ok(BoundCertificate::evaluate("2.4", t, vec![trace_product(x, y)], slack))
}

/// `tr(<x, y><y, x>) <= tr <x, x> r(<y, y>)`.
pub fn check_schwarz_2_5(x: &ModuleVector, y: &ModuleVector, slack: Slack) -> Result<BoundCertificate> {
    let xy = x.inner(y)?;
    let yx = y.inner(x)?;
    let lhs = (&xy * &yx).trace().re;
    let rhs = x.gram().trace().re * y.gram().spectral_radius();
    Ok(BoundCertificate::evaluate("2.5", lhs, vec![rhs], slack))
}

/// `gamma(<x, y>)^2 <= gamma(<x, x>) gamma(<y, y>)` with `gamma` the
/// operator norm.
pub fn check_schwarz_2_6(x: &ModuleVector, y: &ModuleVector, slack: Slack) -> Result<BoundCertificate> {
    let gamma = |a: &crate::algebra::AlgebraElement| a.operator_norm();
    let lhs = gamma(&x.inner(y)?).powi(2);
    let rhs = gamma(&x.gram()) * gamma(&y.gram());
    Ok(BoundCertificate::evaluate("2.6", lhs, vec![rhs], slack))
}

fn trace_product(x: &ModuleVector, y: &ModuleVector) -> f64 {
    x.gram().trace().re * y.gram().trace().re
}
