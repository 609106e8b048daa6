//! The Grüss functional
//! `G_p(x, y) = sum_i p_i <x_i, y_i> - <sum_i p_i x_i, sum_i p_i y_i>`,
//! its exact identities, and certified Grüss-type bounds over C*- and
//! H*-modules.

mod certificate;
mod cstar;
mod hstar;
mod identities;
mod schwarz;
mod witness;

use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::module_space::{weighted_combination, ModuleVector, ProbabilityVector, VectorTuple};
use crate::tolerance::Slack;

pub use certificate::{BoundCertificate, NamedValue};
pub use cstar::{check_cor_3_1, check_remark_3_10, check_remark_3_1i, check_thm_3_1};
pub use hstar::{check_cor_5_1, check_thm_5_1, check_thm_5_2, product_difference_bound};
pub use identities::{
    double_sum_form, identity_2_7_residual, identity_2_8_residual, identity_3_2_residual,
    IdentityResidual,
};
pub use schwarz::{
    check_schwarz_2_1, check_schwarz_2_2, check_schwarz_2_3, check_schwarz_2_4,
    check_schwarz_2_5, check_schwarz_2_6,
};
pub use witness::{sharpness_witness, Witness};

/// Which module norm a bound is stated in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    /// `||x|| = ||<x, x>||^(1/2)`.
    #[serde(rename = "cstar")]
    CStar,
    /// `|||x||| = (tr <x, x>)^(1/2)`.
    #[serde(rename = "hstar")]
    HStar,
}

impl Flavor {
    pub fn norm(self, x: &ModuleVector) -> f64 {
        match self {
            Flavor::CStar => x.norm(),
            Flavor::HStar => x.hs_seminorm(),
        }
    }

    /// `max_i ||x_i - a||` in this flavor's norm.
    pub fn tight_radius(self, xs: &VectorTuple, a: &ModuleVector) -> Result<f64> {
        xs.check_vector(a)?;
        Ok(xs.iter().map(|x| self.norm(&(x - a))).fold(0.0, f64::max))
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Flavor::CStar => "cstar",
            Flavor::HStar => "hstar",
        }
    }
}

/// A tuple together with a ball `||x_i - center|| <= radius` it is claimed
/// to lie in. A missing radius is replaced by the tightest admissible one.
#[derive(Debug, Clone, Copy)]
pub struct Ball<'a> {
    pub items: &'a VectorTuple,
    pub center: &'a ModuleVector,
    pub radius: Option<f64>,
}

impl<'a> Ball<'a> {
    pub fn new(items: &'a VectorTuple, center: &'a ModuleVector) -> Self {
        Ball {
            items,
            center,
            radius: None,
        }
    }

    pub fn with_radius(items: &'a VectorTuple, center: &'a ModuleVector, radius: f64) -> Self {
        Ball {
            items,
            center,
            radius: Some(radius),
        }
    }

    /// Checks the membership condition in `flavor`'s norm and returns the
    /// radius to use in the bound.
    pub fn resolve(&self, flavor: Flavor, slack: Slack) -> Result<f64> {
        self.items.check_vector(self.center)?;
        let distances = self.items.iter().map(|x| flavor.norm(&(x - self.center)));
        resolve_radius(distances, self.radius, slack)
    }
}

/// Either the supremum of `distances` (no radius given) or a verified radius.
pub(crate) fn resolve_radius(
    distances: impl Iterator<Item = f64>,
    radius: Option<f64>,
    slack: Slack,
) -> Result<f64> {
    match radius {
        None => Ok(distances.fold(0.0, f64::max)),
        Some(r) if !r.is_finite() || r < 0.0 => {
            Err(Error::InvalidInput(format!("radius {r} must be finite and nonnegative")))
        }
        Some(r) => {
            let tol = slack.for_radius(r);
            for (index, distance) in distances.enumerate() {
                if distance > r + tol {
                    return Err(Error::RadiusViolated {
                        index,
                        distance,
                        radius: r,
                    });
                }
            }
            Ok(r)
        }
    }
}

/// Value of the Grüss functional, an element of the algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct GrussValue {
    pub value: AlgebraElement,
}

impl GrussValue {
    pub fn operator_norm(&self) -> f64 {
        self.value.operator_norm()
    }

    pub fn trace_norm(&self) -> f64 {
        self.value.trace_norm()
    }

    /// `tr G` (real part; `G(x, x)` is Hermitian).
    pub fn trace(&self) -> f64 {
        self.value.trace().re
    }
}

fn check_inputs(p: &ProbabilityVector, xs: &VectorTuple, ys: &VectorTuple) -> Result<()> {
    xs.check_pair(ys)?;
    xs.check_weights(p.len())
}

/// `sum_i p_i <x_i - a, y_i - b> - <sum_i p_i (x_i - a), sum_i p_i (y_i - b)>`.
pub fn translated_form(
    p: &ProbabilityVector,
    xs: &VectorTuple,
    ys: &VectorTuple,
    a: &ModuleVector,
    b: &ModuleVector,
) -> Result<AlgebraElement> {
    check_inputs(p, xs, ys)?;
    xs.check_vector(a)?;
    ys.check_vector(b)?;
    let mut acc = AlgebraElement::zeros(xs.dim());
    let mut dx_sum = ModuleVector::zeros(xs.dim(), xs.rank());
    let mut dy_sum = ModuleVector::zeros(xs.dim(), xs.rank());
    for ((x, y), &w) in xs.iter().zip(ys.iter()).zip(p.as_slice()) {
        let dx = x - a;
        let dy = y - b;
        acc += &dx.inner(&dy)?.scale_real(w);
        dx_sum = &dx_sum + &dx.scale_real(w);
        dy_sum = &dy_sum + &dy.scale_real(w);
    }
    Ok(&acc - &dx_sum.inner(&dy_sum)?)
}

/// The Grüss functional `G_p(x, y)`.
///
/// Evaluated in two passes: the weighted means are formed first and the
/// functional is then taken about them (the translated form with
/// `a = sum p_i x_i`, `b = sum p_i y_i`), which keeps the rounding error
/// proportional to the spread of the data rather than its offset.
pub fn gruss(p: &ProbabilityVector, xs: &VectorTuple, ys: &VectorTuple) -> Result<GrussValue> {
    check_inputs(p, xs, ys)?;
    let mean_x = weighted_combination(p.as_slice(), xs)?;
    let mean_y = weighted_combination(p.as_slice(), ys)?;
    Ok(GrussValue {
        value: translated_form(p, xs, ys, &mean_x, &mean_y)?,
    })
}

/// `G_p(x) = G_p(x, x)`.
pub fn gruss_self(p: &ProbabilityVector, xs: &VectorTuple) -> Result<GrussValue> {
    gruss(p, xs, xs)
}
