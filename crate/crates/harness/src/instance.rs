use std::f64::consts::PI;

use gruss::{
    AlgebraElement, Complex64, Flavor, ModuleVector, ProbabilityVector, ScalarWeights, VectorTuple,
};
use rand::Rng;
use rand_distr::{Distribution, Exp1, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::config::{check_dim, D_CAP, K_CAP, N_CAP};
use crate::error::{HarnessError, Result};

/// One randomly drawn test case: data for every checker the suite runs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModuleInstance {
    pub k: usize,
    pub d: usize,
    pub n: usize,
    pub p: ProbabilityVector,
    pub xs: VectorTuple,
    pub ys: VectorTuple,
    pub a: ModuleVector,
    pub b: ModuleVector,
    pub alphas: ScalarWeights,
    /// Transform order, `1 <= m <= n`.
    pub m: usize,
    pub omega: f64,
    pub omega2: f64,
    /// Norm the radii below are measured in.
    pub flavor: Flavor,
    /// `max_i ||x_i - a||`.
    pub r: f64,
    /// `max_i ||y_i - b||`.
    pub s: f64,
    /// Radii and direction for the sharpness witness.
    pub witness_r: f64,
    pub witness_s: f64,
    pub direction: ModuleVector,
}

impl ModuleInstance {
    /// Cross-field consistency, for instances read from files.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(HarnessError::InvalidConfig(msg));
        check_dim("k", self.k, K_CAP)?;
        check_dim("d", self.d, D_CAP)?;
        check_dim("n", self.n, N_CAP)?;
        let shape_ok = |v: &ModuleVector| v.dim() == self.k && v.rank() == self.d;
        for (name, t) in [("xs", &self.xs), ("ys", &self.ys)] {
            if t.len() != self.n || !shape_ok(&t[0]) {
                return bad(format!("{name} does not have shape (n={}, d={}, k={})", self.n, self.d, self.k));
            }
        }
        for (name, v) in [("a", &self.a), ("b", &self.b), ("direction", &self.direction)] {
            if !shape_ok(v) {
                return bad(format!("{name} does not have shape (d={}, k={})", self.d, self.k));
            }
        }
        if self.p.len() != self.n || self.alphas.len() != self.n {
            return bad("p and alphas must have n entries".into());
        }
        if !(1..=self.n).contains(&self.m) {
            return bad(format!("m = {} outside 1..={}", self.m, self.n));
        }
        let finite = [self.omega, self.omega2, self.r, self.s, self.witness_r, self.witness_s];
        if finite.iter().any(|v| !v.is_finite()) || self.alphas.as_slice().iter().any(|z| !z.is_finite()) {
            return bad("non-finite scalar field".into());
        }
        Ok(())
    }

    /// The same data with `r`, `s` measured in `flavor`.
    pub fn with_flavor(&self, flavor: Flavor) -> Self {
        let mut out = self.clone();
        out.flavor = flavor;
        out.r = flavor.tight_radius(&self.xs, &self.a).expect("shapes fixed at construction");
        out.s = flavor.tight_radius(&self.ys, &self.b).expect("shapes fixed at construction");
        out
    }
}

fn complex_normal<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = StandardNormal.sample(rng);
    let im: f64 = StandardNormal.sample(rng);
    Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

fn element<R: Rng + ?Sized>(rng: &mut R, k: usize) -> AlgebraElement {
    let entries = (0..k * k).map(|_| complex_normal(rng)).collect();
    AlgebraElement::from_entries(k, entries).expect("finite samples")
}

fn vector<R: Rng + ?Sized>(rng: &mut R, k: usize, d: usize) -> ModuleVector {
    ModuleVector::new((0..d).map(|_| element(rng, k)).collect()).expect("d >= 1")
}

fn tuple<R: Rng + ?Sized>(rng: &mut R, k: usize, d: usize, n: usize) -> VectorTuple {
    VectorTuple::new((0..n).map(|_| vector(rng, k, d)).collect()).expect("n >= 1")
}

/// Symmetric Dirichlet(1) weights via normalized exponentials.
fn dirichlet<R: Rng + ?Sized>(rng: &mut R, n: usize) -> ProbabilityVector {
    let draws: Vec<f64> = (0..n).map(|_| Exp1.sample(rng)).collect();
    let total: f64 = draws.iter().sum();
    ProbabilityVector::new(draws.iter().map(|v| v / total).collect()).expect("normalized draws")
}

/// `10^u` for `u` uniform in `[-3, 3]`.
fn log_uniform<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    10f64.powf(rng.random_range(-3.0..=3.0))
}

/// Draws an instance of shape `(k, d, n)`. Entries are i.i.d. complex
/// standard normal, weights Dirichlet(1), and `omega` avoids the singular
/// set of the closed-form phase sum by a wide margin.
pub fn random_instance<R: Rng + ?Sized>(
    rng: &mut R,
    k: usize,
    d: usize,
    n: usize,
    flavor: Flavor,
) -> Result<ModuleInstance> {
    check_dim("k", k, K_CAP)?;
    check_dim("d", d, D_CAP)?;
    check_dim("n", n, N_CAP)?;
    let p = dirichlet(rng, n);
    let xs = tuple(rng, k, d, n);
    let ys = tuple(rng, k, d, n);
    let a = vector(rng, k, d);
    let b = vector(rng, k, d);
    let alphas = ScalarWeights((0..n).map(|_| complex_normal(rng)).collect());
    let m = rng.random_range(1..=n);
    let omega = loop {
        let w: f64 = rng.random_range(-PI..PI);
        if (w * m as f64).sin().abs() > 1e-6 {
            break w;
        }
    };
    let omega2 = rng.random_range(-PI..PI);
    let witness_r = log_uniform(rng);
    let witness_s = log_uniform(rng);
    let direction = vector(rng, k, d);
    let base = ModuleInstance {
        k,
        d,
        n,
        p,
        xs,
        ys,
        a,
        b,
        alphas,
        m,
        omega,
        omega2,
        flavor,
        r: 0.0,
        s: 0.0,
        witness_r,
        witness_s,
        direction,
    };
    Ok(base.with_flavor(flavor))
}
