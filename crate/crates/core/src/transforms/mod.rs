//! Discrete Fourier and Mellin transforms of module-vector tuples,
//! their mean-based approximations, and certified error bounds.
//!
//! Indices are 1-based throughout: `k = 1..=n` and `m = 1..=n`.

mod phase;
mod power;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::functional::{gruss, resolve_radius, Ball, BoundCertificate, Flavor};
use crate::module_space::{weighted_combination, ModuleVector, ProbabilityVector, VectorTuple};
use crate::tolerance::{Slack, TOL_SING};

pub use power::{mellin_bracket_exact, power_sum, power_sum_exact, PowerSumPolynomial};

/// Which indices the radius condition on a transformed tuple is checked
/// over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RadiusMode {
    /// Only the order `m` the certificate is about.
    #[default]
    PerM,
    /// Every order `1..=n`.
    AllM,
}

/// Result of approximating a transform by a multiple of the mean.
///
/// `pass` holds when `error <= bound + slack`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TransformCertificate {
    pub name: String,
    pub exact: ModuleVector,
    pub approx: ModuleVector,
    pub error: f64,
    pub bound: f64,
    pub slack: f64,
    pub pass: bool,
    pub tightness: f64,
    pub radius: f64,
}

impl TransformCertificate {
    fn new(
        name: &str,
        exact: ModuleVector,
        approx: ModuleVector,
        error: f64,
        bound: f64,
        radius: f64,
        slack: Slack,
    ) -> Self {
        let c = BoundCertificate::evaluate(name, error, vec![bound], slack);
        TransformCertificate {
            name: c.name,
            exact,
            approx,
            error,
            bound,
            slack: c.slack,
            pass: c.pass,
            tightness: c.tightness,
            radius,
        }
    }

    /// The same comparison as a one-link bound certificate.
    pub fn to_bound_certificate(&self) -> BoundCertificate {
        BoundCertificate {
            name: self.name.clone(),
            lhs: self.error,
            rhs_chain: vec![self.bound],
            slack: self.slack,
            pass: self.pass,
            tightness: self.tightness,
            radii: vec![self.radius],
            extras: Vec::new(),
        }
    }
}

fn check_index(m: usize, n: usize) -> Result<()> {
    if (1..=n).contains(&m) {
        Ok(())
    } else {
        Err(Error::BadIndex { m, n })
    }
}

/// `exp(2 omega i m k)`.
pub fn fourier_phase(omega: f64, m: usize, k: usize) -> Complex64 {
    phase::unit_phase(omega, 2 * m as u64 * k as u64)
}

fn fourier_weights(omega: f64, m: usize, n: usize) -> Vec<Complex64> {
    (1..=n).map(|k| fourier_phase(omega, m, k)).collect()
}

/// `k^(m-1)` for `k = 1..=n`.
fn mellin_weights(m: usize, n: usize) -> Vec<f64> {
    (1..=n).map(|k| power::int_pow(k as u64, m as u32 - 1)).collect()
}

fn pair_sum<W: Copy + Into<Complex64>>(
    weights: &[W],
    xs: &VectorTuple,
    ys: &VectorTuple,
) -> Result<AlgebraElement> {
    let mut acc = AlgebraElement::zeros(xs.dim());
    for ((x, y), &w) in xs.iter().zip(ys.iter()).zip(weights) {
        acc += &x.inner(y)?.scale(w.into());
    }
    Ok(acc)
}

/// `F_omega(x)(m) = sum_k exp(2 omega i m k) x_k`.
pub fn fourier(xs: &VectorTuple, omega: f64, m: usize) -> Result<ModuleVector> {
    check_index(m, xs.len())?;
    weighted_combination(&fourier_weights(omega, m, xs.len()), xs)
}

/// `F_omega(x, y)(m) = sum_k exp(2 omega i m k) <x_k, y_k>`.
pub fn fourier_pair(xs: &VectorTuple, ys: &VectorTuple, omega: f64, m: usize) -> Result<AlgebraElement> {
    xs.check_pair(ys)?;
    check_index(m, xs.len())?;
    pair_sum(&fourier_weights(omega, m, xs.len()), xs, ys)
}

/// `M(x)(m) = sum_k k^(m-1) x_k`.
pub fn mellin(xs: &VectorTuple, m: usize) -> Result<ModuleVector> {
    check_index(m, xs.len())?;
    weighted_combination(&mellin_weights(m, xs.len()), xs)
}

/// `M(x, y)(m) = sum_k k^(m-1) <x_k, y_k>`.
pub fn mellin_pair(xs: &VectorTuple, ys: &VectorTuple, m: usize) -> Result<AlgebraElement> {
    xs.check_pair(ys)?;
    check_index(m, xs.len())?;
    pair_sum(&mellin_weights(m, xs.len()), xs, ys)
}

/// `sum_{k=1}^n exp(2 omega i m k)` in closed form,
/// `sin(omega m n) / sin(omega m) * exp(omega (n + 1) i m)`.
///
/// Both sines are evaluated on exactly reduced arguments, so the ratio stays
/// accurate close to the excluded set `omega m = l pi`.
pub fn geometric_phase_sum(omega: f64, m: usize, n: usize) -> Result<Complex64> {
    let (m64, n64) = (m as u64, n as u64);
    let denom = phase::sin_product(omega, m64);
    if denom.is_nan() || denom.abs() <= TOL_SING {
        return Err(Error::Singular { omega, m });
    }
    let ratio = phase::sin_product(omega, m64 * n64) / denom;
    Ok(phase::unit_phase(omega, (n64 + 1) * m64) * ratio)
}

/// Radius for `scaled` tuples `(w_k y_k)` about `center`, over the orders
/// selected by `mode`.
fn phased_radius(
    ys: &VectorTuple,
    center: &ModuleVector,
    radius: Option<f64>,
    orders: impl Iterator<Item = Vec<Complex64>>,
    slack: Slack,
) -> Result<f64> {
    ys.check_vector(center)?;
    let mut distances = Vec::new();
    for w in orders {
        distances.extend(ys.iter().zip(&w).map(|(y, &c)| (&y.scale(c) - center).norm()));
    }
    resolve_radius(distances.into_iter(), radius, slack)
}

fn orders(m: usize, n: usize, mode: RadiusMode) -> std::ops::RangeInclusive<usize> {
    match mode {
        RadiusMode::PerM => m..=m,
        RadiusMode::AllM => 1..=n,
    }
}

fn scaled(ys: &VectorTuple, weights: &[Complex64]) -> VectorTuple {
    ys.map_indexed(|k, y| y.scale(weights[k - 1]))
}

/// `||F_omega(x, y)(m) - <(1/n) sum x_k, F_omega(y)(m)>|| <= n r s`
/// for `||x_k - a|| <= r` and `||exp(2 omega i m k) y_k - b|| <= s`.
///
/// The left-hand side equals `n ||G(x, y')||` for the uniform weights and
/// `y'_k = exp(2 omega i m k) y_k`, and is evaluated in that form.
pub fn check_thm_4_1(
    x: Ball<'_>,
    y: Ball<'_>,
    omega: f64,
    m: usize,
    mode: RadiusMode,
    slack: Slack,
) -> Result<BoundCertificate> {
    x.items.check_pair(y.items)?;
    let n = x.items.len();
    check_index(m, n)?;
    let r = x.resolve(Flavor::CStar, slack)?;
    let s = phased_radius(
        y.items,
        y.center,
        y.radius,
        orders(m, n, mode).map(|j| fourier_weights(omega, j, n)),
        slack,
    )?;
    let phased = scaled(y.items, &fourier_weights(omega, m, n));
    let g = gruss(&ProbabilityVector::uniform(n), x.items, &phased)?;
    let nf = n as f64;
    Ok(
        BoundCertificate::evaluate("4.4", nf * g.operator_norm(), vec![nf * r * s], slack)
            .with_radii(&[r, s]),
    )
}

/// `||M(x, y)(m) - <(1/n) sum x_k, M(y)(m)>|| <= n r s`
/// for `||x_k - a|| <= r` and `||k^(m-1) y_k - b|| <= s`.
pub fn check_thm_4_2(
    x: Ball<'_>,
    y: Ball<'_>,
    m: usize,
    mode: RadiusMode,
    slack: Slack,
) -> Result<BoundCertificate> {
    x.items.check_pair(y.items)?;
    let n = x.items.len();
    check_index(m, n)?;
    let complex = |w: Vec<f64>| w.into_iter().map(Complex64::from).collect::<Vec<_>>();
    let r = x.resolve(Flavor::CStar, slack)?;
    let s = phased_radius(
        y.items,
        y.center,
        y.radius,
        orders(m, n, mode).map(|j| complex(mellin_weights(j, n))),
        slack,
    )?;
    let weighted = scaled(y.items, &complex(mellin_weights(m, n)));
    let g = gruss(&ProbabilityVector::uniform(n), x.items, &weighted)?;
    let nf = n as f64;
    Ok(
        BoundCertificate::evaluate("4.8", nf * g.operator_norm(), vec![nf * r * s], slack)
            .with_radii(&[r, s]),
    )
}

/// `||(1/n) F_{omega2 - omega1}(x, y)(m)
///    - <(1/n) F_{omega1}(x)(m), (1/n) F_{omega2}(y)(m)>|| <= r s`
/// for `||exp(2 omega1 i m k) x_k - a|| <= r` and
/// `||exp(2 omega2 i m k) y_k - b|| <= s`.
///
/// Evaluated as `||G(x', y')||` for the uniform weights and the two phased
/// tuples.
pub fn check_thm_4_3(
    x: Ball<'_>,
    y: Ball<'_>,
    omega1: f64,
    omega2: f64,
    m: usize,
    mode: RadiusMode,
    slack: Slack,
) -> Result<BoundCertificate> {
    x.items.check_pair(y.items)?;
    let n = x.items.len();
    check_index(m, n)?;
    let r = phased_radius(
        x.items,
        x.center,
        x.radius,
        orders(m, n, mode).map(|j| fourier_weights(omega1, j, n)),
        slack,
    )?;
    let s = phased_radius(
        y.items,
        y.center,
        y.radius,
        orders(m, n, mode).map(|j| fourier_weights(omega2, j, n)),
        slack,
    )?;
    let px = scaled(x.items, &fourier_weights(omega1, m, n));
    let py = scaled(y.items, &fourier_weights(omega2, m, n));
    let g = gruss(&ProbabilityVector::uniform(n), &px, &py)?;
    Ok(BoundCertificate::evaluate("4.10", g.operator_norm(), vec![r * s], slack).with_radii(&[r, s]))
}

/// `|| sum_k c_k (x_k - a) ||` for weights summing to zero.
fn centered_norm(weights: &[Complex64], xs: &VectorTuple, a: &ModuleVector) -> Result<f64> {
    let shifted: Vec<ModuleVector> = xs.iter().map(|x| x - a).collect();
    let refs: Vec<&ModuleVector> = shifted.iter().collect();
    Ok(ModuleVector::combination(weights, &refs)?.norm())
}

/// `F_omega(x)(m)` approximated by `G (1/n) sum x_k` with `G` the closed-form
/// geometric phase sum; bound `r (n^2 - |G|^2)^(1/2)`.
///
/// The error is evaluated as `||sum_k (alpha_k - G/n)(x_k - a)||` and the
/// bound as `r (n sum_k |alpha_k - G/n|^2)^(1/2)`, which equal the
/// defining expressions but avoid cancellation when `|G|` is close to `n`.
pub fn fourier_mean_approx(
    x: Ball<'_>,
    omega: f64,
    m: usize,
    slack: Slack,
) -> Result<TransformCertificate> {
    let n = x.items.len();
    check_index(m, n)?;
    let g = geometric_phase_sum(omega, m, n)?;
    let r = x.resolve(Flavor::CStar, slack)?;
    let nf = n as f64;
    let mean = g / nf;
    let deviations: Vec<Complex64> = fourier_weights(omega, m, n).iter().map(|a| a - mean).collect();
    let error = centered_norm(&deviations, x.items, x.center)?;
    let spread: f64 = deviations.iter().map(|d| d.norm_sqr()).sum();
    let bound = r * (nf * spread).sqrt();

    let exact = fourier(x.items, omega, m)?;
    let approx = weighted_combination(&ProbabilityVector::uniform(n).complex(), x.items)?.scale(g);
    Ok(TransformCertificate::new("4.12", exact, approx, error, bound, r, slack))
}

/// `M(x)(m)` approximated by `S_{m-1}(n) (1/n) sum x_k`; bound
/// `r (n S_{2m-2}(n) - S_{m-1}(n)^2)^(1/2)` with the bracket formed exactly.
pub fn mellin_mean_approx(x: Ball<'_>, m: usize, slack: Slack) -> Result<TransformCertificate> {
    let n = x.items.len();
    check_index(m, n)?;
    let r = x.resolve(Flavor::CStar, slack)?;
    let total = power_sum(m as u32 - 1, n as u64);
    let nf = n as f64;
    let deviations: Vec<Complex64> = mellin_weights(m, n)
        .iter()
        .map(|w| Complex64::from(w - total / nf))
        .collect();
    let error = centered_norm(&deviations, x.items, x.center)?;
    let bound = r * power::mellin_bracket(m as u32, n as u64).sqrt();

    let exact = mellin(x.items, m)?;
    let approx = weighted_combination(&ProbabilityVector::uniform(n).complex(), x.items)?
        .scale_real(total);
    Ok(TransformCertificate::new("4.15", exact, approx, error, bound, r, slack))
}

/// `mu_1(x) = sum k x_k` and `mu_2(x) = sum k^2 x_k` against their mean
/// approximations, with the closed-form right-hand sides. Each certificate
/// also records the power-sum form of the same bound under `"4.15"` and
/// requires the two to agree to a relative `1e-12`.
pub fn mu_certificates(x: Ball<'_>, slack: Slack) -> Result<(BoundCertificate, BoundCertificate)> {
    let n = x.items.len();
    let r = x.resolve(Flavor::CStar, slack)?;
    let nf = n as f64;
    let big_n = n as u64;

    // k - (n + 1)/2 is exact; 6 k^2 - (n + 1)(2n + 1) is an exact integer
    let w1: Vec<Complex64> = (1..=n)
        .map(|k| Complex64::from(k as f64 - (nf + 1.0) / 2.0))
        .collect();
    let w2: Vec<Complex64> = (1..=n)
        .map(|k| {
            let kf = k as f64;
            Complex64::from((6.0 * kf * kf - (nf + 1.0) * (2.0 * nf + 1.0)) / 6.0)
        })
        .collect();
    let lhs1 = centered_norm(&w1, x.items, x.center)?;
    let lhs2 = centered_norm(&w2, x.items, x.center)?;

    let closed1 = r * nf / 2.0 * ((nf - 1.0) * (nf + 1.0) / 3.0).sqrt();
    let closed2 = r * nf / (6.0 * 5f64.sqrt())
        * ((nf - 1.0) * (nf + 1.0) * (2.0 * nf + 1.0) * (8.0 * nf + 11.0)).sqrt();
    let generic1 = r * power::mellin_bracket(2, big_n).sqrt();
    let generic2 = r * power::mellin_bracket(3, big_n).sqrt();

    let first = BoundCertificate::evaluate("4.16", lhs1, vec![closed1], slack)
        .with_radii(&[r])
        .with_agreement("4.15", closed1, generic1, 1e-12);
    let second = BoundCertificate::evaluate("4.17", lhs2, vec![closed2], slack)
        .with_radii(&[r])
        .with_agreement("4.15", closed2, generic2, 1e-12);
    Ok((first, second))
}
