//! Power sums `S_p(n) = sum_{k=1}^n k^p` in exact integer arithmetic.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Bernoulli numbers `B_0..=B_p` with `B_1 = +1/2`.
fn bernoulli_plus(p: usize) -> Vec<BigRational> {
    // Akiyama-Tanigawa
    let mut row: Vec<BigRational> = Vec::with_capacity(p + 1);
    let mut out = Vec::with_capacity(p + 1);
    for m in 0..=p {
        row.push(BigRational::new(BigInt::one(), BigInt::from(m + 1)));
        for j in (1..=m).rev() {
            let diff = &row[j - 1] - &row[j];
            row[j - 1] = diff * BigRational::from_integer(BigInt::from(j));
        }
        out.push(row[0].clone());
    }
    out
}

/// `S_p(n)` as a polynomial in `n` with integer coefficients over a common
/// denominator.
#[derive(Debug, Clone)]
pub struct PowerSumPolynomial {
    /// `coeffs[i]` multiplies `n^i`.
    coeffs: Vec<BigInt>,
    denominator: BigInt,
}

impl PowerSumPolynomial {
    pub fn new(p: u32) -> Self {
        let p = p as usize;
        let bern = bernoulli_plus(p);
        // S_p(n) = 1/(p+1) sum_j C(p+1, j) B_j n^(p+1-j)
        let mut rational = vec![BigRational::zero(); p + 2];
        let mut binom = BigInt::one();
        for (j, b) in bern.iter().enumerate() {
            rational[p + 1 - j] = b * BigRational::from_integer(binom.clone());
            binom = binom * BigInt::from(p + 1 - j) / BigInt::from(j + 1);
        }
        let scale = BigInt::from(p + 1);
        let denominator = rational
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
            * &scale;
        let coeffs = rational
            .iter()
            .map(|c| c.numer() * (&denominator / (c.denom() * &scale)))
            .collect();
        PowerSumPolynomial {
            coeffs,
            denominator,
        }
    }

    pub fn eval(&self, n: u64) -> BigUint {
        let x = BigInt::from(n);
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &x + c;
        }
        let (q, r) = acc.div_rem(&self.denominator);
        debug_assert!(r.is_zero());
        q.to_biguint().expect("power sums are nonnegative")
    }
}

/// `S_p(n)` exactly.
pub fn power_sum_exact(p: u32, n: u64) -> BigUint {
    if n <= 64 {
        (1..=n).map(|k| BigUint::from(k).pow(p)).sum()
    } else {
        PowerSumPolynomial::new(p).eval(n)
    }
}

/// `S_p(n)` rounded once to the nearest double.
pub fn power_sum(p: u32, n: u64) -> f64 {
    to_f64(&power_sum_exact(p, n))
}

/// `k^e` rounded once to the nearest double.
pub(crate) fn int_pow(k: u64, e: u32) -> f64 {
    to_f64(&BigUint::from(k).pow(e))
}

/// `n S_{2m-2}(n) - S_{m-1}(n)^2`, exact, for `m >= 1`.
pub fn mellin_bracket_exact(m: u32, n: u64) -> BigInt {
    let even = BigInt::from(power_sum_exact(2 * m - 2, n)) * BigInt::from(n);
    let base = BigInt::from(power_sum_exact(m - 1, n));
    even - &base * &base
}

pub(crate) fn mellin_bracket(m: u32, n: u64) -> f64 {
    mellin_bracket_exact(m, n)
        .to_f64()
        .unwrap_or(f64::INFINITY)
}

fn to_f64(v: &BigUint) -> f64 {
    v.to_f64().unwrap_or(f64::INFINITY)
}
