//! Evaluation on the imaginary axis `s = jω`.

use thiserror::Error;

use super::{FracPoly, FracTF};
use crate::complex::{add, mul, Complex};
use crate::error::DomainError;
use crate::roots::principal_pow;

/// A denominator whose modulus falls below this is treated as zero.
pub const ZERO_DENOMINATOR_TOL: f64 = 1e-300;

/// A denominator is also treated as zero when its terms cancel to within
/// this many ulps of the sum of their moduli.
const CANCELLATION_ULPS: f64 = 8.0;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum EvalError {
    #[error("frequency {omega} rad/s must be finite and positive")]
    InvalidFrequency { omega: f64 },
    #[error("denominator vanishes at omega = {omega} rad/s")]
    ZeroDenominator { omega: f64 },
    #[error("response is zero at omega = {omega} rad/s, phase undefined")]
    ZeroResponse { omega: f64 },
    #[error("at omega = {omega} rad/s: {source}")]
    Domain {
        omega: f64,
        #[source]
        source: DomainError,
    },
}

impl EvalError {
    /// Frequency at which evaluation failed.
    pub fn omega(&self) -> f64 {
        match *self {
            EvalError::InvalidFrequency { omega }
            | EvalError::ZeroDenominator { omega }
            | EvalError::ZeroResponse { omega }
            | EvalError::Domain { omega, .. } => omega,
        }
    }
}

fn check_omega(omega: f64) -> Result<(), EvalError> {
    if omega.is_finite() && omega > 0.0 {
        Ok(())
    } else {
        Err(EvalError::InvalidFrequency { omega })
    }
}

/// `Σ cₖ·(jω)^αₖ` on the principal branch.
pub fn eval_poly(p: &FracPoly, omega: f64) -> Result<Complex, EvalError> {
    eval_with_scale(p, omega).map(|(value, _)| value)
}

/// Value and `Σ |cₖ|·ω^αₖ`.
fn eval_with_scale(p: &FracPoly, omega: f64) -> Result<(Complex, f64), EvalError> {
    check_omega(omega)?;
    let domain = |source| EvalError::Domain { omega, source };
    let s = Complex::imaginary(omega).map_err(domain)?;
    p.terms()
        .iter()
        .try_fold((Complex::ZERO, 0.0), |(acc, scale), term| {
            let power = principal_pow(s, term.exponent()).map_err(domain)?;
            let coeff = Complex::real(term.coeff()).map_err(domain)?;
            let t = mul(coeff, power).map_err(domain)?;
            Ok((add(acc, t).map_err(domain)?, scale + t.magnitude()))
        })
}

/// `N(jω) / D(jω)`.
///
/// Fails with [`EvalError::ZeroDenominator`] when `|D(jω)|` is below
/// [`ZERO_DENOMINATOR_TOL`] or when the denominator terms cancel down to
/// rounding noise, as `s^2+1` does at `ω = 1`.
pub fn eval_tf(tf: &FracTF, omega: f64) -> Result<Complex, EvalError> {
    let num = eval_poly(tf.numerator(), omega)?;
    let (den, den_scale) = eval_with_scale(tf.denominator(), omega)?;
    let den_mag = den.magnitude();
    if den_mag < ZERO_DENOMINATOR_TOL || den_mag <= CANCELLATION_ULPS * f64::EPSILON * den_scale {
        return Err(EvalError::ZeroDenominator { omega });
    }
    num.checked_div(den)
        .map_err(|source| EvalError::Domain { omega, source })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form::{
        affine_arg, affine_jomega, affine_mag, jomega_pow, CaseIIParams, CaseIParams,
    };
    use crate::tf::parse_tf;
    use proptest::prelude::*;
    use std::f64::consts::FRAC_PI_4;

    fn poly(text: &str) -> FracPoly {
        parse_tf(text).unwrap().numerator().clone()
    }

    #[test]
    fn constant_polynomial() {
        for omega in [1e-3, 1.0, 42.0] {
            assert_eq!(eval_poly(&poly("1"), omega).unwrap(), Complex::ONE);
        }
    }

    #[test]
    fn half_power_at_unit_frequency() {
        let v = eval_poly(&poly("s^0.5"), 1.0).unwrap();
        let oracle = principal_pow(Complex::J, 0.5).unwrap();
        assert!(v.approx_eq(&oracle, 1e-15));
        assert!(v.approx_eq(
            &Complex::new(FRAC_PI_4.cos(), FRAC_PI_4.sin()).unwrap(),
            1e-15
        ));
    }

    #[test]
    fn affine_polynomial_matches_closed_form() {
        let v = eval_poly(&poly("s^0.5+1"), 1.0).unwrap();
        let p = CaseIIParams::new(1.0, 1.0, 1.0, 0.5).unwrap();
        assert!(v.approx_eq(&affine_jomega(&p).unwrap(), 1e-15));
    }

    #[test]
    fn rejects_bad_frequencies() {
        for omega in [0.0, -1.0, f64::NAN, f64::INFINITY] {
            let e = eval_poly(&poly("s"), omega).unwrap_err();
            assert!(matches!(e, EvalError::InvalidFrequency { .. }));
        }
    }

    #[test]
    fn capacitor_impedance_at_unit_frequency() {
        let h = eval_tf(&parse_tf("10000/s^0.5").unwrap(), 1.0).unwrap();
        let oracle = Complex::real(10000.0)
            .unwrap()
            .checked_div(principal_pow(Complex::J, 0.5).unwrap())
            .unwrap();
        assert!(h.approx_eq(&oracle, 1e-12));
        assert!((h.magnitude() - 10000.0).abs() < 1e-9);
        assert!((h.argument().unwrap() + FRAC_PI_4).abs() < 1e-15);
    }

    #[test]
    fn half_power_at_four() {
        let h = eval_tf(&parse_tf("s^0.5").unwrap(), 4.0).unwrap();
        assert!((h.magnitude() - 2.0).abs() < 1e-15);
        assert!((h.argument().unwrap() - FRAC_PI_4).abs() < 1e-15);
    }

    #[test]
    fn identity_system() {
        let tf = parse_tf("1/1").unwrap();
        for omega in [0.01, 1.0, 100.0] {
            assert_eq!(eval_tf(&tf, omega).unwrap(), Complex::ONE);
        }
    }

    #[test]
    fn vanishing_denominator_reports_frequency() {
        // j² + 1 = 0 at ω = 1
        let tf = parse_tf("1/(s^2+1)").unwrap();
        let e = eval_tf(&tf, 1.0).unwrap_err();
        assert_eq!(e, EvalError::ZeroDenominator { omega: 1.0 });
        assert!(e.to_string().contains("omega = 1"));
        assert!(eval_tf(&tf, 2.0).is_ok());
    }

    proptest! {
        #[test]
        fn single_term_matches_case_one(c in -1e4f64..1e4, alpha in 0.01f64..0.99, log_w in -3.0f64..3.0) {
            prop_assume!(c != 0.0);
            let omega = 10f64.powf(log_w);
            let tf = parse_tf(&format!("{c}*s^{alpha}")).unwrap();
            let v = eval_tf(&tf, omega).unwrap();
            let expected = jomega_pow(&CaseIParams::new(omega, alpha).unwrap()).checked_scale(c).unwrap();
            prop_assert!(v.approx_eq(&expected, 1e-12), "{} vs {}", v, expected);
        }

        #[test]
        fn affine_matches_case_two(a in 0.01f64..100.0, b in 0.01f64..100.0, alpha in 0.01f64..0.99, log_w in -3.0f64..3.0) {
            let omega = 10f64.powf(log_w);
            let tf = parse_tf(&format!("{a}*s^{alpha}+{b}")).unwrap();
            let v = eval_tf(&tf, omega).unwrap();
            let p = CaseIIParams::new(a, b, omega, alpha).unwrap();
            let mag = affine_mag(&p).unwrap();
            prop_assert!((v.magnitude() - mag).abs() <= 1e-12 * mag);
            prop_assert!((v.argument().unwrap() - affine_arg(&p).unwrap()).abs() <= 1e-12);
        }
    }
}
