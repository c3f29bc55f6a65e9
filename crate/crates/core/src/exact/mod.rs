//! Exact arithmetic carriers: reduced big rationals and Gaussian rationals.

mod complex;
mod rational;

pub use complex::CRational;
pub use rational::{compare, gcd, Rational};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero in {op}")]
    DivisionByZero { op: &'static str },
    #[error("magnitude exceeds binary64 range")]
    Overflow,
    #[error("malformed number literal `{0}`")]
    Parse(String),
}
