use num_complex::Complex64;

use super::AlgebraElement;
use crate::error::{Error, Result};
use crate::tolerance::TOL_POS;

/// Power used by the Gelfand estimate `||a^m||^(1/m)` for non-normal input.
const GELFAND_POWER_LOG2: u32 = 6;

/// Result of [`AlgebraElement::spectral_radius_estimate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralRadius {
    pub value: f64,
    /// Set when the input is not normal and the value is a Gelfand estimate.
    pub approximate: bool,
}

impl AlgebraElement {
    /// Singular values in descending order.
    ///
    /// Computed as the nonnegative half of the spectrum of the Hermitian
    /// embedding `[[0, a], [a^*, 0]]`, which avoids squaring the condition
    /// number the way `sqrt(eig(a^* a))` would.
    pub fn singular_values(&self) -> Vec<f64> {
        let n = self.dim;
        let mut big = AlgebraElement::zeros(2 * n);
        for i in 0..n {
            for j in 0..n {
                let z = self.get(i, j);
                big.set(i, n + j, z);
                big.set(n + j, i, z.conj());
            }
        }
        let eig = big
            .hermitian_eig()
            .expect("embedding is Hermitian by construction");
        eig.values[n..].iter().rev().map(|&s| s.max(0.0)).collect()
    }

    /// Largest singular value, the C*-norm of `M_k(C)`.
    pub fn operator_norm(&self) -> f64 {
        if self.is_exactly_hermitian() {
            let e = self.hermitian_eig().expect("exactly Hermitian");
            return e.min().abs().max(e.max().abs());
        }
        self.singular_values()[0]
    }

    /// Sum of singular values, `tr |a|`.
    pub fn trace_norm(&self) -> f64 {
        if self.is_exactly_hermitian() {
            let e = self.hermitian_eig().expect("exactly Hermitian");
            return e.values.iter().map(|l| l.abs()).sum();
        }
        self.singular_values().iter().sum()
    }

    /// Hermitian (within `TOL_HERM`) with spectrum bounded below by
    /// `-TOL_POS (1 + ||a||)`.
    pub fn is_positive(&self) -> bool {
        match self.hermitian_eig() {
            Ok(e) => {
                let norm = e.min().abs().max(e.max().abs());
                e.min() >= -TOL_POS * (1.0 + norm)
            }
            Err(_) => false,
        }
    }

    /// The unique positive square root of a positive element.
    ///
    /// Eigenvalues in `[-TOL_POS (1 + ||a||), 0)` are treated as rounding
    /// noise and clamped to zero.
    pub fn positive_sqrt(&self) -> Result<AlgebraElement> {
        let e = self.hermitian_eig().map_err(|_| Error::NotPositive {
            min_eigenvalue: f64::NAN,
        })?;
        let norm = e.min().abs().max(e.max().abs());
        if e.min() < -TOL_POS * (1.0 + norm) {
            return Err(Error::NotPositive {
                min_eigenvalue: e.min(),
            });
        }
        Ok(e.map(|l| l.max(0.0).sqrt()))
    }

    /// `|a| = (a^* a)^(1/2)`.
    pub fn abs_value(&self) -> AlgebraElement {
        self.adjoint_mul(self)
            .positive_sqrt()
            .expect("a^* a is positive")
    }

    /// `||a a^* - a^* a||_F` relative to `||a||_F^2`.
    fn is_normal(&self) -> bool {
        let aa = self * &self.adjoint();
        let ata = self.adjoint_mul(self);
        let f = self.frobenius_norm();
        (&aa - &ata).frobenius_norm() <= 1e-12 * (1.0 + f * f)
    }

    /// Spectral radius; exact (up to rounding) for normal input and a Gelfand
    /// estimate `||a^64||^(1/64)` otherwise.
    pub fn spectral_radius_estimate(&self) -> SpectralRadius {
        if self.is_normal() {
            // for normal matrices |eigenvalues| = singular values
            return SpectralRadius {
                value: self.operator_norm(),
                approximate: false,
            };
        }
        let norm = self.operator_norm();
        let mut b = self.scale(Complex64::new(1.0 / norm, 0.0));
        for _ in 0..GELFAND_POWER_LOG2 {
            b = &b * &b;
        }
        let power = (1u32 << GELFAND_POWER_LOG2) as f64;
        SpectralRadius {
            value: norm * b.operator_norm().powf(1.0 / power),
            approximate: true,
        }
    }

    pub fn spectral_radius(&self) -> f64 {
        self.spectral_radius_estimate().value
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn nilpotent(v: f64) -> AlgebraElement {
        AlgebraElement::from_real_rows(&[vec![0.0, v], vec![0.0, 0.0]]).unwrap()
    }

    #[test]
    fn operator_norm_examples() {
        assert!((nilpotent(1.0).operator_norm() - 1.0).abs() < 1e-15);
        assert_eq!(AlgebraElement::diag_real(&[3.0, -4.0]).operator_norm(), 4.0);
    }

    #[test]
    fn positivity_examples() {
        assert!(!AlgebraElement::diag_real(&[1.0, -1e-3]).is_positive());
        assert!(AlgebraElement::zeros(2).is_positive());
        assert!(!nilpotent(1.0).is_positive());
        let a = AlgebraElement::from_rows(&[
            vec![c(1.0, 2.0), c(0.5, -1.0)],
            vec![c(-0.3, 0.1), c(2.0, 0.0)],
        ])
        .unwrap();
        assert!(a.adjoint_mul(&a).is_positive());
    }

    #[test]
    fn sqrt_examples() {
        let r = AlgebraElement::diag_real(&[9.0, 16.0]).positive_sqrt().unwrap();
        assert!(r.max_abs_diff(&AlgebraElement::diag_real(&[3.0, 4.0])) < 1e-15);
        let i = AlgebraElement::identity(3).positive_sqrt().unwrap();
        assert!(i.max_abs_diff(&AlgebraElement::identity(3)) < 1e-15);
        assert!(matches!(
            AlgebraElement::diag_real(&[1.0, -1.0]).positive_sqrt(),
            Err(Error::NotPositive { .. })
        ));
    }

    #[test]
    fn sqrt_clamps_rounding_negatives() {
        let r = AlgebraElement::diag_real(&[4.0, -1e-14]).positive_sqrt().unwrap();
        assert_eq!(r.get(1, 1), c(0.0, 0.0));
        assert_eq!(r.get(0, 0), c(2.0, 0.0));
    }

    #[test]
    fn abs_value_examples() {
        let d = AlgebraElement::diag_real(&[3.0, -4.0]).abs_value();
        assert!(d.max_abs_diff(&AlgebraElement::diag_real(&[3.0, 4.0])) < 1e-15);
        // [[0,2],[0,0]]: a^*a = diag(0, 4)
        let n = nilpotent(2.0).abs_value();
        assert!(n.max_abs_diff(&AlgebraElement::diag_real(&[0.0, 2.0])) < 1e-15);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let u = AlgebraElement::from_rows(&[
            vec![c(s, 0.0), c(0.0, s)],
            vec![c(0.0, s), c(s, 0.0)],
        ])
        .unwrap();
        assert!(u.abs_value().max_abs_diff(&AlgebraElement::identity(2)) < 1e-15);
    }

    #[test]
    fn trace_norm_examples() {
        assert_eq!(AlgebraElement::diag_real(&[3.0, -4.0]).trace_norm(), 7.0);
        assert!((nilpotent(2.0).trace_norm() - 2.0).abs() < 1e-15);
    }

    #[test]
    fn spectral_radius_examples() {
        let d = AlgebraElement::diag_real(&[3.0, -4.0]).spectral_radius_estimate();
        assert_eq!(d.value, 4.0);
        assert!(!d.approximate);
        let n = nilpotent(1.0).spectral_radius_estimate();
        assert_eq!(n.value, 0.0);
        assert!(n.approximate);
        // unitary rotation: normal, not Hermitian, spectral radius 1
        let (cs, sn) = (0.3_f64.cos(), 0.3_f64.sin());
        let rot = AlgebraElement::from_real_rows(&[vec![cs, -sn], vec![sn, cs]]).unwrap();
        assert!((rot.spectral_radius() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn gelfand_estimate_on_triangular() {
        // eigenvalues 2 and 0.5, strongly non-normal
        let t = AlgebraElement::from_real_rows(&[vec![2.0, 5.0], vec![0.0, 0.5]]).unwrap();
        let r = t.spectral_radius_estimate();
        assert!(r.approximate);
        assert!((r.value - 2.0).abs() < 0.05);
    }

    #[test]
    fn singular_values_of_rank_one() {
        let sv = nilpotent(2.0).singular_values();
        assert!((sv[0] - 2.0).abs() < 1e-15);
        assert!(sv[1].abs() < 1e-15);
    }
}
