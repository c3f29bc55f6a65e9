//! The carrier abstraction shared by the structure, term and suite code.
//!
//! Exact checks run over [`Rational`] / [`CRational`]; transcendental checks
//! and irrational scale factors run over `f64` / `Complex64`.

use std::cmp::Ordering;
use std::fmt::{Debug, Display};
use std::ops::{Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::exact::{ArithError, CRational, Rational};

pub trait Scalar:
    Clone + PartialEq + Debug + Display + Zero + One + Neg<Output = Self> + Sub<Output = Self> + Send + Sync + 'static
{
    /// Whether the carrier can hold non-real values.
    const HAS_IMAGINARY: bool;
    /// Whether equality on the carrier is exact.
    const EXACT: bool;

    fn try_div(&self, rhs: &Self) -> Result<Self, ArithError>;
    fn conj(&self) -> Self;
    fn is_real(&self) -> bool;
    /// Real and integral.
    fn is_integer(&self) -> bool;
    /// Order of two real values; `None` if either is non-real.
    fn real_cmp(&self, other: &Self) -> Option<Ordering>;
    fn from_i64(n: i64) -> Self;
    fn from_rational(r: &Rational) -> Self;
}

impl Scalar for Rational {
    const HAS_IMAGINARY: bool = false;
    const EXACT: bool = true;

    fn try_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        self.checked_div(rhs)
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn is_real(&self) -> bool {
        true
    }
    fn is_integer(&self) -> bool {
        Rational::is_integer(self)
    }
    fn real_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
    fn from_i64(n: i64) -> Self {
        Rational::from_integer(n)
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

impl Scalar for CRational {
    const HAS_IMAGINARY: bool = true;
    const EXACT: bool = true;

    fn try_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        self.checked_div(rhs)
    }
    fn conj(&self) -> Self {
        CRational::conj(self)
    }
    fn is_real(&self) -> bool {
        CRational::is_real(self)
    }
    fn is_integer(&self) -> bool {
        self.is_real() && self.re.is_integer()
    }
    fn real_cmp(&self, other: &Self) -> Option<Ordering> {
        (self.is_real() && other.is_real()).then(|| self.re.cmp(&other.re))
    }
    fn from_i64(n: i64) -> Self {
        CRational::from_int(n)
    }
    fn from_rational(r: &Rational) -> Self {
        CRational::real(r.clone())
    }
}

impl Scalar for f64 {
    const HAS_IMAGINARY: bool = false;
    const EXACT: bool = false;

    fn try_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        if *rhs == 0.0 {
            return Err(ArithError::DivisionByZero { op: "div" });
        }
        Ok(self / rhs)
    }
    fn conj(&self) -> Self {
        *self
    }
    fn is_real(&self) -> bool {
        true
    }
    fn is_integer(&self) -> bool {
        self.is_finite() && self.fract() == 0.0
    }
    fn real_cmp(&self, other: &Self) -> Option<Ordering> {
        self.partial_cmp(other)
    }
    fn from_i64(n: i64) -> Self {
        n as f64
    }
    fn from_rational(r: &Rational) -> Self {
        r.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for Complex64 {
    const HAS_IMAGINARY: bool = true;
    const EXACT: bool = false;

    fn try_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        if rhs.is_zero() {
            return Err(ArithError::DivisionByZero { op: "div" });
        }
        Ok(self / rhs)
    }
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }
    fn is_real(&self) -> bool {
        self.im == 0.0
    }
    fn is_integer(&self) -> bool {
        self.im == 0.0 && Scalar::is_integer(&self.re)
    }
    fn real_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.im == 0.0 && other.im == 0.0 {
            self.re.partial_cmp(&other.re)
        } else {
            None
        }
    }
    fn from_i64(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
    fn from_rational(r: &Rational) -> Self {
        Complex64::new(f64::from_rational(r), 0.0)
    }
}

/// `a + b` on borrowed carriers.
pub(crate) fn add<T: Scalar>(a: &T, b: &T) -> T {
    a.clone() + b.clone()
}

pub(crate) fn sub<T: Scalar>(a: &T, b: &T) -> T {
    a.clone() - b.clone()
}

pub(crate) fn mul<T: Scalar>(a: &T, b: &T) -> T {
    a.clone() * b.clone()
}
