use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use super::{ArithError, Rational};

/// Gaussian rational `re + im·i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CRational {
    pub re: Rational,
    pub im: Rational,
}

impl CRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        CRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        CRational {
            re,
            im: Rational::zero(),
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        CRational {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    /// `a/b + (c/d)i` from small integers. Panics on a zero denominator.
    pub fn from_fracs(a: i64, b: i64, c: i64, d: i64) -> Self {
        CRational::new(Rational::frac(a, b), Rational::frac(c, d))
    }

    pub fn from_int(n: i64) -> Self {
        CRational::real(Rational::from_integer(n))
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        CRational {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// `re² + im²`.
    pub fn abs_squared(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        let n = self.abs_squared();
        if n.is_zero() {
            return Err(ArithError::DivisionByZero { op: "inv" });
        }
        let conj = self.conj();
        Ok(CRational {
            re: conj.re.checked_div(&n)?,
            im: conj.im.checked_div(&n)?,
        })
    }

    pub fn checked_div(&self, rhs: &CRational) -> Result<Self, ArithError> {
        if rhs.is_zero() {
            return Err(ArithError::DivisionByZero { op: "div" });
        }
        Ok(self * &rhs.inv()?)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        CRational {
            re: &self.re * k,
            im: &self.im * k,
        }
    }

    /// Nearest binary64 pair `(re, im)`.
    pub fn to_f64_pair(&self) -> Result<(f64, f64), ArithError> {
        Ok((self.re.to_f64()?, self.im.to_f64()?))
    }

    pub fn to_complex64(&self) -> Result<num_complex::Complex64, ArithError> {
        let (re, im) = self.to_f64_pair()?;
        Ok(num_complex::Complex64::new(re, im))
    }
}

impl fmt::Display for CRational {
    /// `a`, `bi`, or `a+bi` / `a-bi`; rational parts keep their `n/d` form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            return write!(f, "{}i", self.im);
        }
        if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, -&self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl fmt::Debug for CRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for CRational {
    type Err = ArithError;

    /// Parses `a`, `bi`, `a+bi`, `a-bi` where `a`, `b` are rational literals.
    /// A bare `i` / `-i` stands for a unit imaginary part.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let Some(body) = s.strip_suffix('i') else {
            return Ok(CRational::real(s.parse()?));
        };
        // The real/imaginary split is the last sign that is not leading.
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last();
        let (re, im) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("", body),
        };
        let im = match im {
            "" | "+" => Rational::one(),
            "-" => -Rational::one(),
            other => other.parse().map_err(|_| ArithError::Parse(s.to_string()))?,
        };
        let re = if re.is_empty() {
            Rational::zero()
        } else {
            re.parse().map_err(|_| ArithError::Parse(s.to_string()))?
        };
        Ok(CRational { re, im })
    }
}

impl Zero for CRational {
    fn zero() -> Self {
        CRational::real(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for CRational {
    fn one() -> Self {
        CRational::real(Rational::one())
    }
}

impl From<Rational> for CRational {
    fn from(r: Rational) -> Self {
        CRational::real(r)
    }
}

impl From<i64> for CRational {
    fn from(n: i64) -> Self {
        CRational::from_int(n)
    }
}

impl Add<&CRational> for &CRational {
    type Output = CRational;
    fn add(self, rhs: &CRational) -> CRational {
        CRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub<&CRational> for &CRational {
    type Output = CRational;
    fn sub(self, rhs: &CRational) -> CRational {
        CRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul<&CRational> for &CRational {
    type Output = CRational;
    fn mul(self, rhs: &CRational) -> CRational {
        CRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

macro_rules! forward_owned {
    ($imp:ident, $method:ident) => {
        impl $imp<CRational> for CRational {
            type Output = CRational;
            fn $method(self, rhs: CRational) -> CRational {
                $imp::$method(&self, &rhs)
            }
        }
        impl $imp<&CRational> for CRational {
            type Output = CRational;
            fn $method(self, rhs: &CRational) -> CRational {
                $imp::$method(&self, rhs)
            }
        }
        impl $imp<CRational> for &CRational {
            type Output = CRational;
            fn $method(self, rhs: CRational) -> CRational {
                $imp::$method(self, &rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CRational {
    type Output = CRational;
    fn neg(self) -> CRational {
        CRational {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Neg for &CRational {
    type Output = CRational;
    fn neg(self) -> CRational {
        CRational {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> CRational {
        s.parse().unwrap()
    }

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(&CRational::i() * &CRational::i(), CRational::from_int(-1));
    }

    #[test]
    fn inverse_of_two_plus_i() {
        let z = c("2+1i");
        let inv = z.inv().unwrap();
        assert_eq!(inv, c("2/5-1/5i"));
        assert_eq!(&inv * &z, CRational::one());
    }

    #[test]
    fn zero_has_no_inverse() {
        assert_eq!(CRational::zero().inv(), Err(ArithError::DivisionByZero { op: "inv" }));
        assert!(c("1i").checked_div(&CRational::zero()).is_err());
    }

    #[test]
    fn literal_forms() {
        assert_eq!(c("2+1i"), CRational::from_fracs(2, 1, 1, 1));
        assert_eq!(c("-1/2-3/4i"), CRational::from_fracs(-1, 2, -3, 4));
        assert_eq!(c("-3/4i"), CRational::from_fracs(0, 1, -3, 4));
        assert_eq!(c("i"), CRational::i());
        assert_eq!(c("-i"), -CRational::i());
        assert_eq!(c("5"), CRational::from_int(5));
        assert_eq!(c("1-i"), CRational::from_fracs(1, 1, -1, 1));
        for s in ["2+1i", "-1", "1i", "-2/3i", "1/2-7i", "0"] {
            assert_eq!(c(s).to_string(), s);
        }
        for bad in ["", "2+", "1ii", "x", "1/0i", "2++1i"] {
            assert!(bad.parse::<CRational>().is_err(), "{bad}");
        }
    }

    #[test]
    fn conj_and_norm() {
        let z = c("3-4i");
        assert_eq!(z.conj(), c("3+4i"));
        assert_eq!(z.abs_squared(), Rational::from_integer(25));
        assert!(CRational::zero().abs_squared().is_zero());
    }
}
