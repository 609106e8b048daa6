//! Trigonometric values of `omega * j` for real `omega` and integer `j`,
//! accurate to a few ulps of the result even when the product is large or
//! lies close to a multiple of `pi`.

/// `pi` split into pieces with 33, 33, 33 and 53 significant bits, so that
/// `q * PI_1`, `q * PI_2` and `q * PI_3` are exact for `|q| < 2^20`.
const PI_1: f64 = 3.1415926534682512;
const PI_2: f64 = 1.2154201012607932e-10;
const PI_3: f64 = 4.044532497422333e-21;
const PI_3T: f64 = 1.69568553207378e-31;

const MAX_QUOTIENT: f64 = 1048576.0;

/// `(sin, cos)` of the exact real number `omega * j`.
///
/// The product is held as an unevaluated sum `hi + lo` and reduced modulo
/// `pi` in extra precision. Past `2^20 pi` the libm reduction of `hi` is
/// used with a first-order correction for `lo`.
pub(crate) fn sin_cos_product(omega: f64, j: u64) -> (f64, f64) {
    let jf = j as f64;
    let hi = omega * jf;
    let lo = omega.mul_add(jf, -hi);
    let q = (hi * std::f64::consts::FRAC_1_PI).round();
    if q.is_nan() || q.abs() >= MAX_QUOTIENT {
        let (s, c) = hi.sin_cos();
        return (s + lo * c, c - lo * s);
    }
    let r = (hi - q * PI_1) - q * PI_2;
    let r = (r + lo) - q * PI_3 - q * PI_3T;
    let (s, c) = r.sin_cos();
    if q.rem_euclid(2.0) == 0.0 {
        (s, c)
    } else {
        (-s, -c)
    }
}

/// `sin(omega * j)`.
pub(crate) fn sin_product(omega: f64, j: u64) -> f64 {
    sin_cos_product(omega, j).0
}

/// `exp(i omega j)`.
pub(crate) fn unit_phase(omega: f64, j: u64) -> num_complex::Complex64 {
    let (s, c) = sin_cos_product(omega, j);
    num_complex::Complex64::new(c, s)
}
