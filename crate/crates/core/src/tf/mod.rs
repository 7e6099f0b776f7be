//! Fractional-order transfer functions `N(s)/D(s)`, where each polynomial is
//! a sum of `c·s^α` terms with real `c` and `α ≥ 0`.
//!
//! Polynomials are kept normalized: exponents strictly decreasing, equal
//! exponents merged, zero coefficients dropped and at least one term left.
//! Two values are structurally equal exactly when their normalized term
//! lists are.

mod eval;
mod parse;
mod print;

use thiserror::Error;

pub use eval::{eval_poly, eval_tf, EvalError};
pub use parse::{parse_tf, ParseError, ParseErrorKind};
pub use print::pretty_print;

/// One `coeff·s^exponent` term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FracTerm {
    coeff: f64,
    exponent: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum ModelError {
    #[error("coefficient {0} is not finite")]
    NonFiniteCoefficient(f64),
    #[error("exponent {0} must be finite and non-negative")]
    InvalidExponent(f64),
    #[error("polynomial is identically zero")]
    ZeroPolynomial,
}

impl FracTerm {
    pub fn new(coeff: f64, exponent: f64) -> Result<Self, ModelError> {
        if !coeff.is_finite() {
            return Err(ModelError::NonFiniteCoefficient(coeff));
        }
        if !(exponent.is_finite() && exponent >= 0.0) {
            return Err(ModelError::InvalidExponent(exponent));
        }
        // canonical +0.0 so that s^0 and s^-0 merge
        Ok(FracTerm {
            coeff,
            exponent: exponent + 0.0,
        })
    }

    pub fn coeff(&self) -> f64 {
        self.coeff
    }

    pub fn exponent(&self) -> f64 {
        self.exponent
    }
}

/// A normalized, non-empty sum of [`FracTerm`]s.
#[derive(Debug, Clone, PartialEq)]
pub struct FracPoly {
    terms: Vec<FracTerm>,
}

impl FracPoly {
    /// Sorts by descending exponent, merges equal exponents by adding their
    /// coefficients and drops terms whose coefficient ends up zero.
    pub fn from_terms<I>(terms: I) -> Result<Self, ModelError>
    where
        I: IntoIterator<Item = FracTerm>,
    {
        let mut terms: Vec<FracTerm> = terms.into_iter().collect();
        terms.sort_by(|a, b| b.exponent.total_cmp(&a.exponent));

        let mut merged: Vec<FracTerm> = Vec::with_capacity(terms.len());
        for t in terms {
            match merged.last_mut() {
                Some(last) if last.exponent == t.exponent => {
                    let sum = last.coeff + t.coeff;
                    if !sum.is_finite() {
                        return Err(ModelError::NonFiniteCoefficient(sum));
                    }
                    last.coeff = sum;
                }
                _ => merged.push(t),
            }
        }
        merged.retain(|t| t.coeff != 0.0);

        if merged.is_empty() {
            Err(ModelError::ZeroPolynomial)
        } else {
            Ok(FracPoly { terms: merged })
        }
    }

    /// The constant polynomial `c`, `c ≠ 0`.
    pub fn constant(c: f64) -> Result<Self, ModelError> {
        Self::from_terms([FracTerm::new(c, 0.0)?])
    }

    pub fn one() -> Self {
        FracPoly {
            terms: vec![FracTerm {
                coeff: 1.0,
                exponent: 0.0,
            }],
        }
    }

    pub fn terms(&self) -> &[FracTerm] {
        &self.terms
    }

    pub fn is_one(&self) -> bool {
        matches!(self.terms.as_slice(), [t] if t.coeff == 1.0 && t.exponent == 0.0)
    }
}

/// `numerator / denominator`.
///
/// The denominator can never be the zero polynomial since every
/// [`FracPoly`] has a non-zero term.
#[derive(Debug, Clone, PartialEq)]
pub struct FracTF {
    numerator: FracPoly,
    denominator: FracPoly,
}

impl FracTF {
    pub fn new(numerator: FracPoly, denominator: FracPoly) -> Self {
        FracTF {
            numerator,
            denominator,
        }
    }

    /// `poly / 1`
    pub fn from_poly(numerator: FracPoly) -> Self {
        Self::new(numerator, FracPoly::one())
    }

    pub fn numerator(&self) -> &FracPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &FracPoly {
        &self.denominator
    }
}

impl std::str::FromStr for FracTF {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_tf(s)
    }
}
