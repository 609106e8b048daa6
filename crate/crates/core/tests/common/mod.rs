#![allow(dead_code)]

use gruss::{AlgebraElement, Complex64, ModuleVector, ProbabilityVector, VectorTuple};
use proptest::prelude::*;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn element(k: usize) -> impl Strategy<Value = AlgebraElement> {
    prop::collection::vec((-2.0..2.0f64, -2.0..2.0f64), k * k).prop_map(move |v| {
        AlgebraElement::from_entries(k, v.into_iter().map(|(re, im)| c(re, im)).collect()).unwrap()
    })
}

pub fn hermitian(k: usize) -> impl Strategy<Value = AlgebraElement> {
    element(k).prop_map(|a| a.hermitian_part())
}

pub fn vector(k: usize, d: usize) -> impl Strategy<Value = ModuleVector> {
    prop::collection::vec(element(k), d).prop_map(|parts| ModuleVector::new(parts).unwrap())
}

pub fn tuple(k: usize, d: usize, n: usize) -> impl Strategy<Value = VectorTuple> {
    prop::collection::vec(vector(k, d), n).prop_map(|v| VectorTuple::new(v).unwrap())
}

pub fn probability(n: usize) -> impl Strategy<Value = ProbabilityVector> {
    prop::collection::vec(0.05..1.0f64, n).prop_map(|w| {
        let total: f64 = w.iter().sum();
        ProbabilityVector::new(w.iter().map(|v| v / total).collect()).unwrap()
    })
}

/// `(k, d, n)` within the small default caps.
pub fn shape() -> impl Strategy<Value = (usize, usize, usize)> {
    (1usize..=4, 1usize..=3, 1usize..=6)
}

/// `p`, `xs`, `ys`, `a`, `b` of one random shape.
pub fn instance() -> impl Strategy<
    Value = (
        ProbabilityVector,
        VectorTuple,
        VectorTuple,
        ModuleVector,
        ModuleVector,
    ),
> {
    shape().prop_flat_map(|(k, d, n)| {
        (
            probability(n),
            tuple(k, d, n),
            tuple(k, d, n),
            vector(k, d),
            vector(k, d),
        )
    })
}

/// Plain row-major matrix product, used as an independent oracle.
pub fn matmul(a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
    let k = a.dim();
    let mut out = AlgebraElement::zeros(k);
    for i in 0..k {
        for j in 0..k {
            let mut s = c(0.0, 0.0);
            for l in 0..k {
                s += a.get(i, l) * b.get(l, j);
            }
            out.set(i, j, s);
        }
    }
    out
}

pub fn rel_close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs()).max(1.0)
}
