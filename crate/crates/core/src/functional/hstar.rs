//! Grüss-type bounds in the trace seminorm `|||x||| = (tr <x, x>)^(1/2)`.
//!
//! The left-hand side is always the trace norm `tau(G) = tr |G|`; since that
//! is already a norm, `|tau(G)|` and `tau(G)` coincide.

use super::{gruss, gruss_self, Ball, BoundCertificate, Flavor};
use crate::error::Result;
use crate::module_space::{weighted_combination, ModuleVector, ProbabilityVector, VectorTuple};
use crate::tolerance::Slack;

/// `sum p_i |||x_i - a|||^2 - |||sum p_i (x_i - a)|||^2`, clamped at zero,
/// together with `|||sum p_i (x_i - a)|||`.
fn centered_spread(p: &ProbabilityVector, xs: &VectorTuple, a: &ModuleVector) -> Result<(f64, f64)> {
    let shifted: Vec<ModuleVector> = xs.iter().map(|x| x - a).collect();
    let second: f64 = shifted
        .iter()
        .zip(p.as_slice())
        .map(|(d, w)| w * d.hs_seminorm().powi(2))
        .sum();
    let refs: Vec<&ModuleVector> = shifted.iter().collect();
    let first = ModuleVector::combination(&p.complex(), &refs)?.hs_seminorm();
    Ok(((second - first * first).max(0.0), first))
}

/// `sqrt(tr G(x) tr G(y))`, the strong-Schwarz bound on `tau(G(x, y))`.
fn schwarz_bound(p: &ProbabilityVector, xs: &VectorTuple, ys: &VectorTuple) -> Result<f64> {
    let tx = gruss_self(p, xs)?.trace().max(0.0);
    let ty = gruss_self(p, ys)?.trace().max(0.0);
    Ok((tx * ty).sqrt())
}

/// `(m^2 - n^2)(p^2 - q^2) <= (mp - nq)^2` for real numbers; returns both
/// sides.
pub fn product_difference_bound(m: f64, n: f64, p: f64, q: f64) -> (f64, f64) {
    ((m * m - n * n) * (p * p - q * q), (m * p - n * q).powi(2))
}

/// `tau(G(x, y)) <= r s` whenever `|||x_i - a||| <= r`, `|||y_i - b||| <= s`.
pub fn check_thm_5_1(
    p: &ProbabilityVector,
    x: Ball<'_>,
    y: Ball<'_>,
    slack: Slack,
) -> Result<BoundCertificate> {
    let g = gruss(p, x.items, y.items)?;
    let r = x.resolve(Flavor::HStar, slack)?;
    let s = y.resolve(Flavor::HStar, slack)?;
    let schwarz = schwarz_bound(p, x.items, y.items)?;
    Ok(BoundCertificate::evaluate("5.2", g.trace_norm(), vec![r * s], slack)
        .with_radii(&[r, s])
        .with_upper_bound("5.3", schwarz, slack))
}

/// Companion bound
/// `tau(G(x, y)) <= rs - |||sum p_i (x_i - a)||| |||sum p_i (y_i - b)||| <= rs`,
/// with the two intermediate links of its derivation placed in front of the
/// chain.
pub fn check_thm_5_2(
    p: &ProbabilityVector,
    x: Ball<'_>,
    y: Ball<'_>,
    slack: Slack,
) -> Result<BoundCertificate> {
    let g = gruss(p, x.items, y.items)?;
    let r = x.resolve(Flavor::HStar, slack)?;
    let s = y.resolve(Flavor::HStar, slack)?;
    let (var_x, nx) = centered_spread(p, x.items, x.center)?;
    let (var_y, ny) = centered_spread(p, y.items, y.center)?;

    let spread_link = (var_x * var_y).sqrt();
    let radius_link = (r * r - nx * nx).max(0.0).sqrt() * (s * s - ny * ny).max(0.0).sqrt();
    let companion = r * s - nx * ny;
    Ok(BoundCertificate::evaluate(
        "5.7",
        g.trace_norm(),
        vec![spread_link, radius_link, companion, r * s],
        slack,
    )
    .with_radii(&[r, s]))
}

/// `tau(G(x, y)) <= r (sum p_i |||y_i|||^2 - |||sum p_i y_i|||^2)^(1/2)` for
/// `|||x_i - a||| <= r`.
///
/// When `b` is given the translated right-hand side
/// `r (sum p_i |||y_i - b|||^2 - |||sum p_i (y_i - b)|||^2)^(1/2)` is recorded
/// as an additional upper bound under the label `"5.15"`.
pub fn check_cor_5_1(
    p: &ProbabilityVector,
    x: Ball<'_>,
    ys: &VectorTuple,
    b: Option<&ModuleVector>,
    slack: Slack,
) -> Result<BoundCertificate> {
    let g = gruss(p, x.items, ys)?;
    let r = x.resolve(Flavor::HStar, slack)?;

    let second: f64 = ys
        .iter()
        .zip(p.as_slice())
        .map(|(y, w)| w * y.hs_seminorm().powi(2))
        .sum();
    let first = weighted_combination(p.as_slice(), ys)?.hs_seminorm();
    let rhs = r * (second - first * first).max(0.0).sqrt();

    let mut cert = BoundCertificate::evaluate("5.13", g.trace_norm(), vec![rhs], slack)
        .with_radii(&[r])
        .with_upper_bound("5.3", schwarz_bound(p, x.items, ys)?, slack);
    if let Some(b) = b {
        ys.check_vector(b)?;
        let (var_y, _) = centered_spread(p, ys, b)?;
        cert = cert.with_upper_bound("5.15", r * var_y.sqrt(), slack);
    }
    Ok(cert)
}
