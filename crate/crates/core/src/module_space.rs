//! The semi-inner product module `X = A^d` over `A = M_k(C)`.
//!
//! `<x, y> = sum_j x_j^* y_j` is conjugate-linear in the first slot and
//! right A-linear in the second. The module carries two seminorms: the
//! C*-norm `||x|| = ||<x, x>||^(1/2)` and the trace seminorm
//! `|||x||| = (tr <x, x>)^(1/2)`.
//!
//! Nothing here relies on definiteness of the pairing.

use std::ops::{Add, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};

/// An element of `A^d`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawModuleVector")]
pub struct ModuleVector {
    parts: Vec<AlgebraElement>,
}

#[derive(Deserialize)]
struct RawModuleVector {
    parts: Vec<AlgebraElement>,
}

impl TryFrom<RawModuleVector> for ModuleVector {
    type Error = Error;
    fn try_from(raw: RawModuleVector) -> Result<Self> {
        ModuleVector::new(raw.parts)
    }
}

impl ModuleVector {
    pub fn new(parts: Vec<AlgebraElement>) -> Result<Self> {
        let first = parts
            .first()
            .ok_or_else(|| Error::InvalidInput("module rank must be positive".into()))?;
        if parts.iter().any(|p| p.dim() != first.dim()) {
            return Err(Error::ShapeMismatch(
                "module vector parts must share one dimension".into(),
            ));
        }
        Ok(ModuleVector { parts })
    }

    pub fn zeros(dim: usize, rank: usize) -> Self {
        ModuleVector {
            parts: vec![AlgebraElement::zeros(dim); rank],
        }
    }

    /// `(a, 0, ..., 0)`.
    pub fn first_slot(a: AlgebraElement, rank: usize) -> Self {
        let dim = a.dim();
        let mut parts = vec![AlgebraElement::zeros(dim); rank];
        parts[0] = a;
        ModuleVector { parts }
    }

    pub fn dim(&self) -> usize {
        self.parts[0].dim()
    }

    pub fn rank(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[AlgebraElement] {
        &self.parts
    }

    pub fn same_shape(&self, other: &ModuleVector) -> bool {
        self.dim() == other.dim() && self.rank() == other.rank()
    }

    fn check_shape(&self, other: &ModuleVector) -> Result<()> {
        if self.same_shape(other) {
            Ok(())
        } else {
            Err(Error::ShapeMismatch(format!(
                "module vectors of shape (d={}, k={}) and (d={}, k={})",
                self.rank(),
                self.dim(),
                other.rank(),
                other.dim()
            )))
        }
    }

    /// Scalar multiple `c x`.
    pub fn scale(&self, c: Complex64) -> Self {
        ModuleVector {
            parts: self.parts.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn scale_real(&self, c: f64) -> Self {
        ModuleVector {
            parts: self.parts.iter().map(|p| p.scale_real(c)).collect(),
        }
    }

    /// Right module action `x a = (x_1 a, ..., x_d a)`.
    pub fn right_mul(&self, a: &AlgebraElement) -> Self {
        ModuleVector {
            parts: self.parts.iter().map(|p| p * a).collect(),
        }
    }

    /// `sum_j x_j^* y_j`.
    pub fn inner(&self, other: &ModuleVector) -> Result<AlgebraElement> {
        self.check_shape(other)?;
        let mut acc = AlgebraElement::zeros(self.dim());
        for (x, y) in self.parts.iter().zip(&other.parts) {
            acc += &x.adjoint_mul(y);
        }
        Ok(acc)
    }

    /// `<x, x>`.
    pub fn gram(&self) -> AlgebraElement {
        self.inner(self).expect("same shape")
    }

    /// `||<x, x>||^(1/2)`.
    pub fn norm(&self) -> f64 {
        self.gram().operator_norm().sqrt()
    }

    /// `(tr <x, x>)^(1/2)`.
    pub fn hs_seminorm(&self) -> f64 {
        self.parts
            .iter()
            .map(|p| p.entries().iter().map(|z| z.norm_sqr()).sum::<f64>())
            .sum::<f64>()
            .sqrt()
    }

    pub fn try_add(&self, other: &ModuleVector) -> Result<ModuleVector> {
        self.check_shape(other)?;
        Ok(ModuleVector {
            parts: self.parts.iter().zip(&other.parts).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &ModuleVector) -> Result<ModuleVector> {
        self.check_shape(other)?;
        Ok(ModuleVector {
            parts: self.parts.iter().zip(&other.parts).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn max_abs_diff(&self, other: &ModuleVector) -> f64 {
        self.parts
            .iter()
            .zip(&other.parts)
            .map(|(a, b)| a.max_abs_diff(b))
            .fold(0.0, f64::max)
    }

    /// `sum_i w_i x_i` over a slice of equally shaped vectors.
    pub fn combination(weights: &[Complex64], items: &[&ModuleVector]) -> Result<ModuleVector> {
        if weights.len() != items.len() || items.is_empty() {
            return Err(Error::ShapeMismatch(format!(
                "{} weights for {} vectors",
                weights.len(),
                items.len()
            )));
        }
        let first = items[0];
        if items.iter().any(|x| !x.same_shape(first)) {
            return Err(Error::ShapeMismatch("vectors of different shapes".into()));
        }
        let parts = (0..first.rank())
            .map(|j| {
                let column: Vec<&AlgebraElement> = items.iter().map(|x| &x.parts[j]).collect();
                AlgebraElement::linear_combination(weights, &column)
            })
            .collect();
        Ok(ModuleVector { parts })
    }
}

impl Add<&ModuleVector> for &ModuleVector {
    type Output = ModuleVector;
    fn add(self, rhs: &ModuleVector) -> ModuleVector {
        self.try_add(rhs).expect("module vector shape mismatch")
    }
}

impl Sub<&ModuleVector> for &ModuleVector {
    type Output = ModuleVector;
    fn sub(self, rhs: &ModuleVector) -> ModuleVector {
        self.try_sub(rhs).expect("module vector shape mismatch")
    }
}

/// Nonnegative weights summing to one.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct ProbabilityVector {
    weights: Vec<f64>,
}

impl ProbabilityVector {
    pub const SUM_TOL: f64 = 1e-12;

    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidInput("probability vector is empty".into()));
        }
        if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
            return Err(Error::InvalidInput("weights must be finite and nonnegative".into()));
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > Self::SUM_TOL {
            return Err(Error::InvalidInput(format!("weights sum to {sum}, not 1")));
        }
        Ok(ProbabilityVector { weights })
    }

    pub fn uniform(n: usize) -> Self {
        assert!(n >= 1);
        ProbabilityVector {
            weights: vec![1.0 / n as f64; n],
        }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.weights
    }

    pub fn complex(&self) -> Vec<Complex64> {
        self.weights.iter().map(|&w| Complex64::new(w, 0.0)).collect()
    }

    /// `sum_i p_i z_i`.
    pub fn mean_of(&self, values: &[Complex64]) -> Complex64 {
        self.weights.iter().zip(values).map(|(p, z)| z * p).sum()
    }
}

impl TryFrom<Vec<f64>> for ProbabilityVector {
    type Error = Error;
    fn try_from(v: Vec<f64>) -> Result<Self> {
        ProbabilityVector::new(v)
    }
}

impl From<ProbabilityVector> for Vec<f64> {
    fn from(p: ProbabilityVector) -> Vec<f64> {
        p.weights
    }
}

/// Scalar coefficients `alpha_1, ..., alpha_n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScalarWeights(pub Vec<Complex64>);

impl ScalarWeights {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.0
    }
}

/// An n-tuple of equally shaped module vectors.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawTuple")]
pub struct VectorTuple {
    items: Vec<ModuleVector>,
}

#[derive(Deserialize)]
struct RawTuple {
    items: Vec<ModuleVector>,
}

impl TryFrom<RawTuple> for VectorTuple {
    type Error = Error;
    fn try_from(raw: RawTuple) -> Result<Self> {
        VectorTuple::new(raw.items)
    }
}

impl VectorTuple {
    pub fn new(items: Vec<ModuleVector>) -> Result<Self> {
        let first = items
            .first()
            .ok_or_else(|| Error::InvalidInput("tuple must have at least one item".into()))?;
        if items.iter().any(|x| !x.same_shape(first)) {
            return Err(Error::ShapeMismatch("tuple items of different shapes".into()));
        }
        Ok(VectorTuple { items })
    }

    pub fn constant(x: &ModuleVector, n: usize) -> Self {
        assert!(n >= 1);
        VectorTuple {
            items: vec![x.clone(); n],
        }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn items(&self) -> &[ModuleVector] {
        &self.items
    }

    pub fn iter(&self) -> std::slice::Iter<'_, ModuleVector> {
        self.items.iter()
    }

    pub fn dim(&self) -> usize {
        self.items[0].dim()
    }

    pub fn rank(&self) -> usize {
        self.items[0].rank()
    }

    pub fn shape_matches(&self, x: &ModuleVector) -> bool {
        self.items[0].same_shape(x)
    }

    pub(crate) fn check_vector(&self, x: &ModuleVector) -> Result<()> {
        if self.shape_matches(x) {
            Ok(())
        } else {
            Err(Error::ShapeMismatch(format!(
                "vector of shape (d={}, k={}) against tuple of shape (d={}, k={})",
                x.rank(),
                x.dim(),
                self.rank(),
                self.dim()
            )))
        }
    }

    pub(crate) fn check_pair(&self, other: &VectorTuple) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::ShapeMismatch(format!(
                "tuples of lengths {} and {}",
                self.len(),
                other.len()
            )));
        }
        self.check_vector(&other.items[0])
    }

    pub(crate) fn check_weights(&self, n: usize) -> Result<()> {
        if n == self.len() {
            Ok(())
        } else {
            Err(Error::ShapeMismatch(format!(
                "{n} weights for a tuple of length {}",
                self.len()
            )))
        }
    }

    /// Applies `f(i, x_i)` to every item, 1-based index as in the transforms.
    pub fn map_indexed(&self, f: impl Fn(usize, &ModuleVector) -> ModuleVector) -> VectorTuple {
        VectorTuple {
            items: self.items.iter().enumerate().map(|(i, x)| f(i + 1, x)).collect(),
        }
    }
}

impl std::ops::Index<usize> for VectorTuple {
    type Output = ModuleVector;
    fn index(&self, i: usize) -> &ModuleVector {
        &self.items[i]
    }
}

/// `<x, y>`.
pub fn inner_product(x: &ModuleVector, y: &ModuleVector) -> Result<AlgebraElement> {
    x.inner(y)
}

/// `||<x, x>||^(1/2)`.
pub fn module_norm(x: &ModuleVector) -> f64 {
    x.norm()
}

/// `(tr <x, x>)^(1/2)`.
pub fn hs_seminorm(x: &ModuleVector) -> f64 {
    x.hs_seminorm()
}

/// `sum_i w_i x_i` for real (probability) or complex weights.
pub fn weighted_combination<W>(weights: &[W], xs: &VectorTuple) -> Result<ModuleVector>
where
    W: Copy + Into<Complex64>,
{
    xs.check_weights(weights.len())?;
    let w: Vec<Complex64> = weights.iter().map(|&w| w.into()).collect();
    let items: Vec<&ModuleVector> = xs.items.iter().collect();
    ModuleVector::combination(&w, &items)
}

/// `(x_1 - a, ..., x_n - a)`.
pub fn translate(xs: &VectorTuple, a: &ModuleVector) -> Result<VectorTuple> {
    xs.check_vector(a)?;
    Ok(VectorTuple {
        items: xs.items.iter().map(|x| x - a).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn sample(seed: f64, d: usize, k: usize) -> ModuleVector {
        let parts = (0..d)
            .map(|j| {
                let entries = (0..k * k)
                    .map(|i| {
                        let t = seed + 0.37 * j as f64 + 0.11 * i as f64;
                        c((3.1 * t).sin(), (1.7 * t).cos())
                    })
                    .collect();
                AlgebraElement::from_entries(k, entries).unwrap()
            })
            .collect();
        ModuleVector::new(parts).unwrap()
    }

    #[test]
    fn identity_vector_inner_product() {
        let x = ModuleVector::first_slot(AlgebraElement::identity(3), 1);
        assert_eq!(inner_product(&x, &x).unwrap(), AlgebraElement::identity(3));
        assert_eq!(module_norm(&x), 1.0);
    }

    #[test]
    fn unit_first_slot_in_higher_rank() {
        let e = ModuleVector::first_slot(AlgebraElement::identity(2), 4);
        assert_eq!(e.gram(), AlgebraElement::identity(2));
        assert_eq!(module_norm(&e), 1.0);
    }

    #[test]
    fn zero_vector_norms() {
        let z = ModuleVector::zeros(3, 2);
        assert_eq!(module_norm(&z), 0.0);
        assert_eq!(hs_seminorm(&z), 0.0);
    }

    #[test]
    fn hs_seminorm_of_diag() {
        let x = ModuleVector::first_slot(AlgebraElement::diag_real(&[3.0, 4.0]), 1);
        assert_eq!(hs_seminorm(&x), 5.0);
    }

    #[test]
    fn shape_mismatch_is_reported() {
        let x = sample(0.1, 2, 2);
        let y = sample(0.2, 3, 2);
        assert!(matches!(inner_product(&x, &y), Err(Error::ShapeMismatch(_))));
        let t = VectorTuple::constant(&x, 3);
        assert!(matches!(translate(&t, &y), Err(Error::ShapeMismatch(_))));
        assert!(matches!(
            weighted_combination(&[0.5, 0.5], &t),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn adjoint_symmetry_and_positivity() {
        let x = sample(0.3, 3, 3);
        let y = sample(1.9, 3, 3);
        let xy = x.inner(&y).unwrap();
        let yx = y.inner(&x).unwrap();
        assert!(xy.adjoint().max_abs_diff(&yx) <= 1e-14);
        assert!(x.gram().is_positive());
    }

    #[test]
    fn weighted_combination_examples() {
        let x = sample(0.5, 2, 2);
        let t = VectorTuple::constant(&x, 4);
        let avg = weighted_combination(&[0.25; 4], &t).unwrap();
        assert!(avg.max_abs_diff(&x) < 1e-15);

        let items = VectorTuple::new(vec![sample(0.1, 2, 2), sample(0.2, 2, 2), sample(0.3, 2, 2)])
            .unwrap();
        let first = weighted_combination(&[1.0, 0.0, 0.0], &items).unwrap();
        assert_eq!(first, items[0]);
    }

    #[test]
    fn translate_round_trip() {
        let items = VectorTuple::new(vec![sample(0.1, 2, 2), sample(0.2, 2, 2)]).unwrap();
        let zero = ModuleVector::zeros(2, 2);
        assert_eq!(translate(&items, &zero).unwrap(), items);
        let a = sample(4.0, 2, 2);
        let back = translate(&translate(&items, &a).unwrap(), &a.scale_real(-1.0)).unwrap();
        for (u, v) in back.iter().zip(items.iter()) {
            assert!(u.max_abs_diff(v) < 1e-15);
        }
    }

    #[test]
    fn probability_vector_validation() {
        assert!(ProbabilityVector::new(vec![]).is_err());
        assert!(ProbabilityVector::new(vec![0.5, 0.6]).is_err());
        assert!(ProbabilityVector::new(vec![1.5, -0.5]).is_err());
        assert!(ProbabilityVector::new(vec![0.25, 0.75]).is_ok());
        assert_eq!(ProbabilityVector::uniform(4).as_slice(), &[0.25; 4]);
    }

    #[test]
    fn semi_inner_product_allows_degenerate_vectors() {
        let z = ModuleVector::zeros(2, 1);
        assert_eq!(z.gram(), AlgebraElement::zeros(2));
    }
}
