//! Library-wide numeric tolerances.

/// Hermitian test: `||a - a*||_F <= TOL_HERM * (1 + ||a||_F)`.
pub const TOL_HERM: f64 = 1e-10;

/// Positivity test: `min eig >= -TOL_POS * (1 + ||a||)`.
pub const TOL_POS: f64 = 1e-10;

/// Jacobi stops once the off-diagonal Frobenius mass drops below
/// `TOL_EIG * ||a||_F`.
pub const TOL_EIG: f64 = 1e-13;

/// Guard on `|sin(omega m)|` for the closed-form geometric phase sum.
pub const TOL_SING: f64 = 1e-12;

/// Exact identities must hold to `TOL_IDENTITY * scale`.
pub const TOL_IDENTITY: f64 = 1e-11;

/// Relative part of the additive inequality slack.
pub const SLACK_REL: f64 = 1e-9;

/// Unit-norm tolerance for sharpness witness directions.
pub const TOL_UNIT: f64 = 1e-12;

/// Additive slack policy for inequality checks:
/// `slack = SLACK_REL * scale * (1 + max |value|)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Slack {
    pub scale: f64,
}

impl Default for Slack {
    fn default() -> Self {
        Slack { scale: 1.0 }
    }
}

impl Slack {
    pub fn new(scale: f64) -> Self {
        Slack { scale }
    }

    /// Slack for a set of quantities that take part in one comparison chain.
    pub fn for_values<I: IntoIterator<Item = f64>>(&self, values: I) -> f64 {
        let magnitude = values.into_iter().fold(0.0_f64, |m, v| m.max(v.abs()));
        SLACK_REL * self.scale * (1.0 + magnitude)
    }

    /// Slack for a radius membership test `distance <= radius`.
    pub fn for_radius(&self, radius: f64) -> f64 {
        SLACK_REL * self.scale * (1.0 + radius.abs())
    }
}
