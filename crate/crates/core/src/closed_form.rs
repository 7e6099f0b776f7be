//! Closed-form values of `(jω)^α` and `a(jω)^α + b` on the imaginary axis.
//!
//! Case I is `(jω)^α = ω^α[cos(απ/2) + j sin(απ/2)]`, with magnitude `ω^α`
//! and a frequency-independent argument `απ/2`. Case II is the affine form
//! `a(jω)^α + b`. Both fix the principal branch.
//!
//! The Case II magnitude is `√(b² + a²ω^(2α) + 2abω^α cos(απ/2))`, which is
//! what expanding the squared real and imaginary parts of the affine value
//! gives.
//!
//! Parameters are validated strictly on construction. For limits outside the
//! open parameter ranges (`α = 1`, `b = 0`) use [`crate::roots::principal_pow`].

use std::f64::consts::FRAC_PI_2;

use crate::complex::Complex;
use crate::error::{DomainError, Result};

/// `(ω, α)` for `(jω)^α` with `ω > 0` and `0 < α < 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CaseIParams {
    omega: f64,
    alpha: f64,
}

impl CaseIParams {
    pub fn new(omega: f64, alpha: f64) -> Result<Self> {
        check_positive("omega", omega)?;
        check_order(alpha)?;
        Ok(CaseIParams { omega, alpha })
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }
}

/// `(a, b, ω, α)` for `a(jω)^α + b` with `a, b, ω > 0` and `0 < α < 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CaseIIParams {
    a: f64,
    b: f64,
    omega: f64,
    alpha: f64,
}

impl CaseIIParams {
    pub fn new(a: f64, b: f64, omega: f64, alpha: f64) -> Result<Self> {
        check_positive("a", a)?;
        check_positive("b", b)?;
        check_positive("omega", omega)?;
        check_order(alpha)?;
        Ok(CaseIIParams { a, b, omega, alpha })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// `a·ω^α`, the modulus of the fractional term.
    fn scaled_modulus(&self) -> f64 {
        self.a * self.omega.powf(self.alpha)
    }
}

fn check_positive(name: &'static str, value: f64) -> Result<()> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(DomainError::InvalidParameter {
            name,
            value,
            constraint: "finite and > 0",
        })
    }
}

fn check_order(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha < 1.0 {
        Ok(())
    } else {
        Err(DomainError::InvalidParameter {
            name: "alpha",
            value: alpha,
            constraint: "0 < alpha < 1",
        })
    }
}

/// `απ/2`
#[inline]
fn half_turn_angle(alpha: f64) -> f64 {
    alpha * FRAC_PI_2
}

/// `ω^α[cos(απ/2) + j sin(απ/2)]`
pub fn jomega_pow(p: &CaseIParams) -> Complex {
    let m = jomega_pow_mag(p);
    let theta = jomega_pow_arg(p);
    // |m·cos|, |m·sin| ≤ ω^α < ω, always finite
    Complex::new(m * theta.cos(), m * theta.sin()).expect("finite for valid parameters")
}

/// `ω^α`
pub fn jomega_pow_mag(p: &CaseIParams) -> f64 {
    p.omega.powf(p.alpha)
}

/// `απ/2`, the same for every `ω`.
pub fn jomega_pow_arg(p: &CaseIParams) -> f64 {
    half_turn_angle(p.alpha)
}

/// `(b + aω^α cos(απ/2)) + j·aω^α sin(απ/2)`
pub fn affine_jomega(p: &CaseIIParams) -> Result<Complex> {
    let m = p.scaled_modulus();
    let theta = half_turn_angle(p.alpha);
    Complex::new(p.b + m * theta.cos(), m * theta.sin())
}

/// `√(b² + a²ω^(2α) + 2abω^α cos(απ/2))`
pub fn affine_mag(p: &CaseIIParams) -> Result<f64> {
    let (a, b) = (p.a, p.b);
    let w_alpha = p.omega.powf(p.alpha);
    let w_two_alpha = p.omega.powf(2.0 * p.alpha);
    let cross = 2.0 * a * b * w_alpha * half_turn_angle(p.alpha).cos();
    let mag = (b * b + a * a * w_two_alpha + cross).sqrt();
    if mag.is_finite() {
        Ok(mag)
    } else {
        Err(DomainError::NonFinite)
    }
}

/// `atan(aω^α sin(απ/2) / (b + aω^α cos(απ/2)))`, in `(0, π/2)`.
pub fn affine_arg(p: &CaseIIParams) -> Result<f64> {
    let m = p.scaled_modulus();
    let theta = half_turn_angle(p.alpha);
    let num = m * theta.sin();
    let den = p.b + m * theta.cos();
    if !(num.is_finite() && den.is_finite()) {
        return Err(DomainError::NonFinite);
    }
    // both parts are positive, so the plain arctangent is already principal
    Ok((num / den).atan())
}
