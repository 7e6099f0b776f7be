//! Complex arithmetic on the s-plane.
//!
//! Every [`Complex`] holds finite components. Operations that could leave the
//! finite range return [`DomainError::NonFinite`] instead of producing
//! infinities or NaN.

use std::f64::consts::PI;
use std::fmt;

use crate::error::{DomainError, Result};

/// A complex value `re + j·im` with finite components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Complex {
    re: f64,
    im: f64,
}

impl Complex {
    pub const ZERO: Complex = Complex { re: 0.0, im: 0.0 };
    pub const ONE: Complex = Complex { re: 1.0, im: 0.0 };
    /// The imaginary unit `j`.
    pub const J: Complex = Complex { re: 0.0, im: 1.0 };

    pub fn new(re: f64, im: f64) -> Result<Self> {
        if re.is_finite() && im.is_finite() {
            Ok(Complex { re, im })
        } else {
            Err(DomainError::NonFinite)
        }
    }

    pub fn real(re: f64) -> Result<Self> {
        Self::new(re, 0.0)
    }

    /// Purely imaginary value `j·im`.
    pub fn imaginary(im: f64) -> Result<Self> {
        Self::new(0.0, im)
    }

    /// `modulus·(cos phase + j sin phase)`.
    pub fn from_polar(modulus: f64, phase: f64) -> Result<Self> {
        Self::new(modulus * phase.cos(), modulus * phase.sin())
    }

    #[inline]
    pub fn re(&self) -> f64 {
        self.re
    }

    #[inline]
    pub fn im(&self) -> f64 {
        self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }

    pub fn conj(&self) -> Self {
        Complex {
            re: self.re,
            im: -self.im,
        }
    }

    pub fn checked_add(self, other: Complex) -> Result<Self> {
        Self::new(self.re + other.re, self.im + other.im)
    }

    pub fn checked_sub(self, other: Complex) -> Result<Self> {
        Self::new(self.re - other.re, self.im - other.im)
    }

    /// `(σ₁σ₂ − ω₁ω₂) + j(σ₁ω₂ + σ₂ω₁)`
    pub fn checked_mul(self, other: Complex) -> Result<Self> {
        Self::new(
            self.re * other.re - self.im * other.im,
            self.re * other.im + other.re * self.im,
        )
    }

    pub fn checked_scale(self, factor: f64) -> Result<Self> {
        Self::new(self.re * factor, self.im * factor)
    }

    /// Quotient by the conjugate method: `a·conj(b) / |b|²`.
    pub fn checked_div(self, other: Complex) -> Result<Self> {
        if other.is_zero() {
            return Err(DomainError::DivisionByZero);
        }
        // Pre-scale the divisor so |b|² neither underflows nor overflows.
        let scale = other.re.abs().max(other.im.abs());
        let b = Complex {
            re: other.re / scale,
            im: other.im / scale,
        };
        let denom = b.re * b.re + b.im * b.im;
        let num = self.checked_mul(b.conj())?;
        Self::new(num.re / denom / scale, num.im / denom / scale)
    }

    /// `√(re² + im²)`, computed without intermediate overflow.
    pub fn magnitude(&self) -> f64 {
        self.re.hypot(self.im)
    }

    /// Principal argument in `(−π, π]`.
    ///
    /// Uses the full-quadrant arctangent, so the first-quadrant value agrees
    /// with `atan(im / re)`. The negative real axis maps to `+π` whatever the
    /// sign of a zero imaginary part.
    pub fn argument(&self) -> Result<f64> {
        if self.is_zero() {
            return Err(DomainError::ZeroArgument);
        }
        let theta = self.im.atan2(self.re);
        Ok(if theta <= -PI {
            PI
        } else if theta == 0.0 {
            // fold -0.0
            0.0
        } else {
            theta
        })
    }

    /// Componentwise comparison that passes when each component is within
    /// `tol` absolutely or `tol` relative to the larger magnitude.
    pub fn approx_eq(&self, other: &Complex, tol: f64) -> bool {
        fn close(x: f64, y: f64, tol: f64) -> bool {
            let diff = (x - y).abs();
            diff <= tol || diff <= tol * x.abs().max(y.abs())
        }
        close(self.re, other.re, tol) && close(self.im, other.im, tol)
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_sign_negative() {
            write!(f, "{}-{}j", self.re, -self.im)
        } else {
            write!(f, "{}+{}j", self.re, self.im)
        }
    }
}

pub fn add(a: Complex, b: Complex) -> Result<Complex> {
    a.checked_add(b)
}

pub fn mul(a: Complex, b: Complex) -> Result<Complex> {
    a.checked_mul(b)
}

pub fn magnitude(s: Complex) -> f64 {
    s.magnitude()
}

pub fn argument(s: Complex) -> Result<f64> {
    s.argument()
}

/// Reduce an angle to `(−π, π]`.
pub fn wrap_angle(theta: f64) -> f64 {
    let two_pi = 2.0 * PI;
    let mut t = theta.rem_euclid(two_pi);
    if t > PI {
        t -= two_pi;
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::FRAC_PI_4;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im).unwrap()
    }

    fn rel_close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * a.abs().max(b.abs()).max(f64::MIN_POSITIVE)
    }

    /// Angular distance after reduction, so π and −π compare equal.
    fn angle_close(a: f64, b: f64, tol: f64) -> bool {
        wrap_angle(a - b).abs() <= tol
    }

    #[test]
    fn rejects_non_finite_components() {
        assert_eq!(Complex::new(f64::NAN, 0.0), Err(DomainError::NonFinite));
        assert_eq!(
            Complex::new(0.0, f64::INFINITY),
            Err(DomainError::NonFinite)
        );
    }

    #[test]
    fn add_examples() {
        assert_eq!(add(c(1.0, 2.0), c(3.0, 4.0)).unwrap(), c(4.0, 6.0));
        assert_eq!(add(c(0.3, -7.0), Complex::ZERO).unwrap(), c(0.3, -7.0));
        assert_eq!(add(c(1.0, -1.0), c(-1.0, 1.0)).unwrap(), Complex::ZERO);
    }

    #[test]
    fn add_overflow_is_rejected() {
        assert_eq!(
            add(c(f64::MAX, 0.0), c(f64::MAX, 0.0)),
            Err(DomainError::NonFinite)
        );
    }

    #[test]
    fn mul_examples() {
        assert_eq!(mul(Complex::J, Complex::J).unwrap(), c(-1.0, 0.0));
        assert_eq!(mul(Complex::ONE, c(2.5, -0.5)).unwrap(), c(2.5, -0.5));
        assert_eq!(mul(c(1.0, 2.0), c(3.0, 4.0)).unwrap(), c(-5.0, 10.0));
        assert!(mul(c(1e200, 0.0), c(1e200, 0.0)).is_err());
    }

    #[test]
    fn magnitude_examples() {
        assert_eq!(magnitude(c(3.0, 4.0)), 5.0);
        assert_eq!(magnitude(Complex::ZERO), 0.0);
        assert_eq!(magnitude(Complex::J), 1.0);
    }

    #[test]
    fn argument_examples() {
        assert!((argument(c(1.0, 1.0)).unwrap() - FRAC_PI_4).abs() < 1e-15);
        assert_eq!(argument(c(-1.0, 0.0)).unwrap(), PI);
        assert_eq!(argument(c(-1.0, -0.0)).unwrap(), PI);
        assert_eq!(argument(c(2.0, -0.0)).unwrap(), 0.0);
        assert!(argument(c(2.0, -0.0)).unwrap().is_sign_positive());
        assert_eq!(argument(Complex::ZERO), Err(DomainError::ZeroArgument));
    }

    #[test]
    fn argument_matches_arctangent_in_first_quadrant() {
        for &(re, im) in &[(1.0, 0.5), (0.2, 3.0), (7.0, 7.0)] {
            let a = argument(c(re, im)).unwrap();
            assert!((a - (im / re).atan()).abs() < 1e-15);
        }
    }

    #[test]
    fn division_by_conjugate() {
        let q = c(-5.0, 10.0).checked_div(c(3.0, 4.0)).unwrap();
        assert!(q.approx_eq(&c(1.0, 2.0), 1e-15));
        let tiny = c(1e-300, 1e-300);
        let q = tiny.checked_div(tiny).unwrap();
        assert!(q.approx_eq(&Complex::ONE, 1e-15));
        assert_eq!(
            Complex::ONE.checked_div(Complex::ZERO),
            Err(DomainError::DivisionByZero)
        );
    }

    #[test]
    fn wrap_angle_range() {
        assert_eq!(wrap_angle(PI), PI);
        assert!((wrap_angle(-PI) - PI).abs() < 1e-15);
        assert!((wrap_angle(3.0 * PI / 2.0) + PI / 2.0).abs() < 1e-15);
        assert_eq!(wrap_angle(0.25), 0.25);
    }

    fn nonzero() -> impl Strategy<Value = Complex> {
        (0.01f64..100.0, -PI..PI).prop_map(|(r, t)| Complex::from_polar(r, t).unwrap())
    }

    fn any_complex() -> impl Strategy<Value = Complex> {
        (-1e3f64..1e3, -1e3f64..1e3).prop_map(|(re, im)| c(re, im))
    }

    proptest! {
        #[test]
        fn product_magnitude_is_product_of_magnitudes(a in nonzero(), b in nonzero()) {
            let p = mul(a, b).unwrap();
            prop_assert!(rel_close(magnitude(p), magnitude(a) * magnitude(b), 1e-12));
        }

        #[test]
        fn product_argument_is_sum_of_arguments(a in nonzero(), b in nonzero()) {
            let p = mul(a, b).unwrap();
            let sum = argument(a).unwrap() + argument(b).unwrap();
            prop_assert!(angle_close(argument(p).unwrap(), wrap_angle(sum), 1e-12));
        }

        #[test]
        fn squared_magnitude(s in any_complex()) {
            let m = magnitude(s);
            prop_assert!(rel_close(m * m, s.re() * s.re() + s.im() * s.im(), 1e-12));
        }

        #[test]
        fn commutative_and_distributive(a in any_complex(), b in any_complex(), d in any_complex()) {
            prop_assert_eq!(add(a, b).unwrap(), add(b, a).unwrap());
            prop_assert_eq!(mul(a, b).unwrap(), mul(b, a).unwrap());
            let lhs = mul(a, add(b, d).unwrap()).unwrap();
            let rhs = add(mul(a, b).unwrap(), mul(a, d).unwrap()).unwrap();
            // scale by the operand sizes, cancellation makes components tiny
            let scale = magnitude(a) * (magnitude(b) + magnitude(d)) + 1.0;
            prop_assert!(magnitude(lhs.checked_sub(rhs).unwrap()) <= 1e-12 * scale);
        }

        #[test]
        fn argument_in_principal_range(s in nonzero()) {
            let a = argument(s).unwrap();
            prop_assert!(a > -PI && a <= PI);
            prop_assert!(Complex::from_polar(magnitude(s), a).unwrap().approx_eq(&s, 1e-12));
        }
    }
}
