//! The constructive sharpness witness: `n = 2`, `p = (1/2, 1/2)`,
//! `x = a +- r e`, `y = b +- s e` with a unit direction `e`.
//!
//! Then `G(x, y) = r s <e, e>`, so the C*-bound is attained when
//! `||<e, e>|| = 1` and the H*-bound when `tr <e, e> = 1`.

use super::Flavor;
use crate::error::{Error, Result};
use crate::module_space::{ModuleVector, ProbabilityVector, VectorTuple};
use crate::tolerance::TOL_UNIT;

#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub p: ProbabilityVector,
    pub xs: VectorTuple,
    pub ys: VectorTuple,
}

/// Builds the witness; `e` must have unit norm in `flavor` within `TOL_UNIT`.
pub fn sharpness_witness(
    a: &ModuleVector,
    b: &ModuleVector,
    r: f64,
    s: f64,
    e: &ModuleVector,
    flavor: Flavor,
) -> Result<Witness> {
    if !a.same_shape(b) || !a.same_shape(e) {
        return Err(Error::ShapeMismatch("witness centers and direction differ in shape".into()));
    }
    if !(r >= 0.0 && s >= 0.0 && r.is_finite() && s.is_finite()) {
        return Err(Error::InvalidInput("radii must be finite and nonnegative".into()));
    }
    let norm = flavor.norm(e);
    if (norm - 1.0).abs() > TOL_UNIT {
        return Err(Error::NotUnit { norm });
    }
    let re = e.scale_real(r);
    let se = e.scale_real(s);
    Ok(Witness {
        p: ProbabilityVector::uniform(2),
        xs: VectorTuple::new(vec![a + &re, a - &re])?,
        ys: VectorTuple::new(vec![b + &se, b - &se])?,
    })
}
