//! Canonical text form, readable back by [`super::parse_tf`].
//!
//! Terms are written in descending exponent order with an explicit `*`
//! between coefficient and `s` and an explicit `^` on every power of `s`.
//! Unit coefficients are omitted. A transfer function over the constant `1`
//! prints as its numerator alone; otherwise both sides are parenthesized.
//! Numbers use the shortest representation that parses back to the same
//! `f64`, so printing then parsing is exact.

use std::fmt;

use super::{FracPoly, FracTF};

impl fmt::Display for FracPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, term) in self.terms.iter().enumerate() {
            let c = term.coeff.abs();
            if term.coeff < 0.0 {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            if term.exponent == 0.0 {
                write!(f, "{c}")?;
            } else if c == 1.0 {
                write!(f, "s^{}", term.exponent)?;
            } else {
                write!(f, "{c}*s^{}", term.exponent)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for FracTF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator.is_one() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({})/({})", self.numerator, self.denominator)
        }
    }
}

/// Canonical string for `tf`; same as its `Display` output.
pub fn pretty_print(tf: &FracTF) -> String {
    tf.to_string()
}
