//! Exact algebraic identities, evaluated as residuals.

use num_complex::Complex64;

use super::{gruss, translated_form};
use crate::algebra::AlgebraElement;
use crate::error::Result;
use crate::module_space::{weighted_combination, ModuleVector, ProbabilityVector, ScalarWeights, VectorTuple};
use crate::tolerance::TOL_IDENTITY;

/// Size of the difference between two evaluations of one identity, together
/// with the magnitude scale it should be judged against.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdentityResidual {
    pub residual: f64,
    pub scale: f64,
}

impl IdentityResidual {
    pub fn relative(&self) -> f64 {
        self.residual / self.scale
    }

    pub fn passes(&self) -> bool {
        self.residual <= TOL_IDENTITY * self.scale
    }
}

fn max_hs(xs: &VectorTuple) -> f64 {
    xs.iter().map(|x| x.hs_seminorm()).fold(0.0, f64::max)
}

/// Residual of
/// `sum p_i a_i x_i - (sum p_i a_i)(sum p_i x_i) = sum p_i (a_i - sum p_j a_j)(x_i - a)`
/// in the trace seminorm.
///
/// Scale: `max(1, (1 + max |alpha_i|) (max_i |||x_i||| + |||a|||))`.
pub fn identity_2_7_residual(
    p: &ProbabilityVector,
    alphas: &ScalarWeights,
    xs: &VectorTuple,
    a: &ModuleVector,
) -> Result<IdentityResidual> {
    xs.check_weights(p.len())?;
    xs.check_weights(alphas.len())?;
    xs.check_vector(a)?;

    let pa: Vec<Complex64> = p
        .as_slice()
        .iter()
        .zip(alphas.as_slice())
        .map(|(w, z)| z * w)
        .collect();
    let alpha_mean: Complex64 = pa.iter().sum();
    let mean_x = weighted_combination(p.as_slice(), xs)?;
    let lhs = &weighted_combination(&pa, xs)? - &mean_x.scale(alpha_mean);

    let centered: Vec<Complex64> = p
        .as_slice()
        .iter()
        .zip(alphas.as_slice())
        .map(|(w, z)| (z - alpha_mean) * w)
        .collect();
    let shifted: Vec<ModuleVector> = xs.iter().map(|x| x - a).collect();
    let refs: Vec<&ModuleVector> = shifted.iter().collect();
    let rhs = ModuleVector::combination(&centered, &refs)?;

    let alpha_max = alphas.as_slice().iter().map(|z| z.norm()).fold(0.0, f64::max);
    Ok(IdentityResidual {
        residual: (&lhs - &rhs).hs_seminorm(),
        scale: ((1.0 + alpha_max) * (max_hs(xs) + a.hs_seminorm())).max(1.0),
    })
}

/// Residual between `G_p(x, y)` and its translated form about `(a, b)`, in
/// the Frobenius norm.
///
/// Scale: `max(1, (max |||x_i||| + |||a|||)(max |||y_i||| + |||b|||))`.
pub fn identity_2_8_residual(
    p: &ProbabilityVector,
    xs: &VectorTuple,
    ys: &VectorTuple,
    a: &ModuleVector,
    b: &ModuleVector,
) -> Result<IdentityResidual> {
    let g = gruss(p, xs, ys)?;
    let translated = translated_form(p, xs, ys, a, b)?;
    Ok(IdentityResidual {
        residual: (&g.value - &translated).frobenius_norm(),
        scale: ((max_hs(xs) + a.hs_seminorm()) * (max_hs(ys) + b.hs_seminorm())).max(1.0),
    })
}

/// `1/2 sum_{i,j} p_i p_j <x_i - x_j, y_i - y_j>`.
pub fn double_sum_form(
    p: &ProbabilityVector,
    xs: &VectorTuple,
    ys: &VectorTuple,
) -> Result<AlgebraElement> {
    xs.check_pair(ys)?;
    xs.check_weights(p.len())?;
    let w = p.as_slice();
    let mut acc = AlgebraElement::zeros(xs.dim());
    for i in 0..xs.len() {
        // the (i, i) terms vanish and (i, j), (j, i) coincide
        for j in (i + 1)..xs.len() {
            let term = (&xs[i] - &xs[j]).inner(&(&ys[i] - &ys[j]))?;
            acc += &term.scale_real(w[i] * w[j]);
        }
    }
    Ok(acc)
}

/// Residual between `G_p(x, y)` and the symmetric double-sum form.
///
/// Scale: `max(1, 4 max |||x_i||| max |||y_i|||)`.
pub fn identity_3_2_residual(
    p: &ProbabilityVector,
    xs: &VectorTuple,
    ys: &VectorTuple,
) -> Result<IdentityResidual> {
    let g = gruss(p, xs, ys)?;
    let d = double_sum_form(p, xs, ys)?;
    Ok(IdentityResidual {
        residual: (&g.value - &d).frobenius_norm(),
        scale: (4.0 * max_hs(xs) * max_hs(ys)).max(1.0),
    })
}
