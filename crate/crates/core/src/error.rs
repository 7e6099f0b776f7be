//! Domain errors shared by the numeric modules.

use thiserror::Error;

/// A numeric operation was asked for a value outside its domain.
#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum DomainError {
    #[error("result is not finite")]
    NonFinite,
    #[error("argument of zero is undefined")]
    ZeroArgument,
    #[error("division by zero")]
    DivisionByZero,
    #[error("root order must be at least 1")]
    ZeroRootOrder,
    #[error("exponent {0} is outside (0, 1]")]
    ExponentOutOfRange(f64),
    #[error("exponent {0} is negative or not finite")]
    InvalidExponent(f64),
    #[error("branch index {k} is outside 0..{count}")]
    BranchOutOfRange { k: u32, count: u32 },
    #[error("{name} = {value} violates {constraint}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        constraint: &'static str,
    },
}

pub type Result<T, E = DomainError> = std::result::Result<T, E>;
