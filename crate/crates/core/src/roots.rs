//! Multi-branch roots and fractional powers of complex values.
//!
//! [`nth_roots`] enumerates all `n` values of `s^(1/n)` by de Moivre's
//! formula, [`pow_branch`] picks one branch of `s^α` for `0 < α ≤ 1`, and
//! [`principal_pow`] is the principal branch for any `α ≥ 0`. The last one is
//! the reference every closed-form result in [`crate::closed_form`] is checked
//! against.

use std::f64::consts::PI;

use crate::complex::Complex;
use crate::error::{DomainError, Result};

/// Branch index `k` of a multi-valued power, `0 ≤ k < branch count`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BranchIndex(pub u32);

impl BranchIndex {
    pub const PRINCIPAL: BranchIndex = BranchIndex(0);

    pub fn get(self) -> u32 {
        self.0
    }
}

impl From<u32> for BranchIndex {
    fn from(k: u32) -> Self {
        BranchIndex(k)
    }
}

/// Modulus and principal argument of a complex value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarForm {
    r: f64,
    phi: f64,
}

impl PolarForm {
    /// Fails for `s = 0`, whose argument is undefined.
    pub fn of(s: Complex) -> Result<Self> {
        Ok(PolarForm {
            r: s.magnitude(),
            phi: s.argument()?,
        })
    }

    pub fn modulus(&self) -> f64 {
        self.r
    }

    pub fn phase(&self) -> f64 {
        self.phi
    }

    pub fn to_complex(&self) -> Result<Complex> {
        Complex::from_polar(self.r, self.phi)
    }
}

/// All `n` distinct `n`-th roots of `s`, ordered by branch index.
///
/// Entry `k` is `r^(1/n)·[cos((φ+2kπ)/n) + j sin((φ+2kπ)/n)]` for
/// `k = 0..n-1`; `k = n` would repeat `k = 0` and is not produced.
pub fn nth_roots(s: Complex, n: u32) -> Result<Vec<Complex>> {
    if n == 0 {
        return Err(DomainError::ZeroRootOrder);
    }
    let polar = PolarForm::of(s)?;
    let nf = f64::from(n);
    let root_modulus = polar.r.powf(1.0 / nf);
    (0..n)
        .map(|k| {
            let angle = (polar.phi + 2.0 * PI * f64::from(k)) / nf;
            Complex::from_polar(root_modulus, angle)
        })
        .collect()
}

/// Number of branches enumerated for `s^α`: `⌈1/α⌉`, with `1/α` snapped to
/// the nearest integer when it is within `1e-9` of one so that `α = 1/n`
/// gives exactly `n` even after rounding of `1/n`.
pub fn branch_count(alpha: f64) -> Result<u32> {
    check_unit_exponent(alpha)?;
    let inv = 1.0 / alpha;
    let nearest = inv.round();
    let count = if (inv - nearest).abs() <= 1e-9 * nearest.max(1.0) {
        nearest
    } else {
        inv.ceil()
    };
    if count > f64::from(u32::MAX) {
        return Err(DomainError::ExponentOutOfRange(alpha));
    }
    Ok(count as u32)
}

/// Branch `k` of `s^α` for `0 < α ≤ 1`:
/// `|s|^α·[cos α(arg s + 2kπ) + j sin α(arg s + 2kπ)]`.
pub fn pow_branch(s: Complex, alpha: f64, k: BranchIndex) -> Result<Complex> {
    let count = branch_count(alpha)?;
    if k.0 >= count {
        return Err(DomainError::BranchOutOfRange { k: k.0, count });
    }
    let polar = PolarForm::of(s)?;
    // |s|^α is (σ²+ω²)^(α/2) without squaring the components
    let modulus = polar.r.powf(alpha);
    let angle = alpha * (polar.phi + 2.0 * PI * f64::from(k.0));
    Complex::from_polar(modulus, angle)
}

/// Principal branch `|s|^α·[cos(α arg s) + j sin(α arg s)]` for any `α ≥ 0`.
///
/// `α = 0` yields `1` for every `s`, including zero.
pub fn principal_pow(s: Complex, alpha: f64) -> Result<Complex> {
    if !(alpha.is_finite() && alpha >= 0.0) {
        return Err(DomainError::InvalidExponent(alpha));
    }
    if alpha == 0.0 {
        return Ok(Complex::ONE);
    }
    let polar = PolarForm::of(s)?;
    Complex::from_polar(polar.r.powf(alpha), alpha * polar.phi)
}

fn check_unit_exponent(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha <= 1.0 {
        Ok(())
    } else {
        Err(DomainError::ExponentOutOfRange(alpha))
    }
}
