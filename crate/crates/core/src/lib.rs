//! Frequency response of fractional-order transfer functions.
//!
//! The crate evaluates expressions such as `10000/s^0.5` on the imaginary
//! axis `s = jω`:
//!
//! - [`complex`]: finite complex arithmetic with a `(−π, π]` argument.
//! - [`roots`]: de Moivre roots, branch-indexed powers and the principal
//!   power used as a reference implementation.
//! - [`closed_form`]: closed-form values of `(jω)^α` and `a(jω)^α + b`.
//! - [`tf`]: parser, printer and evaluator for sums of `c·s^α` terms.
//! - [`response`]: logarithmic frequency sweeps and CSV/JSON output.

pub mod closed_form;
pub mod complex;
pub mod error;
pub mod response;
pub mod roots;
pub mod tf;

pub use complex::Complex;
pub use error::DomainError;
pub use response::{emit, sweep, FrequencyGrid, OutputFormat, ResponsePoint};
pub use roots::{nth_roots, pow_branch, principal_pow, BranchIndex};
pub use tf::{eval_poly, eval_tf, parse_tf, pretty_print, FracPoly, FracTF, FracTerm};
