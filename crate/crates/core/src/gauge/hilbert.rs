use num_complex::Complex;
use num_traits::Float;

use super::GaugeError;

/// `H̄^c`: coordinate vectors with scalar multiplication `(s·v)/c` and
/// inner product `⟨u,v⟩/c`. Addition is unscaled. Only real `c > 0` keeps
/// the inner product positive, so other scales are rejected.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledHilbert<F = f64> {
    dim: usize,
    c: F,
}

impl<F: Float> ScaledHilbert<F> {
    pub fn new(dim: usize, c: F) -> Result<Self, GaugeError> {
        if dim == 0 {
            return Err(GaugeError::DimensionMismatch { left: 0, right: 1 });
        }
        if !(c > F::zero() && c.is_finite()) {
            return Err(GaugeError::InvalidScale);
        }
        Ok(ScaledHilbert { dim, c })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn scale(&self) -> F {
        self.c
    }

    /// The scalar whose correspondent is `c`: the multiplicative identity.
    pub fn identity_scalar(&self) -> Complex<F> {
        Complex::new(self.c, F::zero())
    }

    fn check(&self, v: &[Complex<F>]) -> Result<(), GaugeError> {
        if v.len() == self.dim {
            Ok(())
        } else {
            Err(GaugeError::DimensionMismatch {
                left: v.len(),
                right: self.dim,
            })
        }
    }

    pub fn add(&self, u: &[Complex<F>], v: &[Complex<F>]) -> Result<Vec<Complex<F>>, GaugeError> {
        self.check(u)?;
        self.check(v)?;
        Ok(u.iter().zip(v).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, u: &[Complex<F>], v: &[Complex<F>]) -> Result<Vec<Complex<F>>, GaugeError> {
        self.check(u)?;
        self.check(v)?;
        Ok(u.iter().zip(v).map(|(a, b)| a - b).collect())
    }

    pub fn scalar_mul(&self, s: Complex<F>, v: &[Complex<F>]) -> Result<Vec<Complex<F>>, GaugeError> {
        self.check(v)?;
        Ok(v.iter().map(|x| s * x / self.c).collect())
    }

    /// Conjugate-linear in the first argument.
    pub fn inner(&self, u: &[Complex<F>], v: &[Complex<F>]) -> Result<Complex<F>, GaugeError> {
        self.check(u)?;
        self.check(v)?;
        let sum = u
            .iter()
            .zip(v)
            .fold(Complex::new(F::zero(), F::zero()), |acc, (a, b)| acc + a.conj() * b);
        Ok(sum / self.c)
    }
}
