//! Polynomials, truncated power series and scaled analytic functions.

use num_traits::{One, Zero};

use crate::exact::Rational;
use crate::scalar::Scalar;
use crate::structure::{
    make_structure, ExternalView, Interpretation, NumberType, ScaledValue, StructureError, StructureHandle,
};

use super::eval::{check_equation, eval_base, eval_external, eval_internal};
use super::{Environment, EquationVerdict, EvalError, Term};

/// `b_0 + b_1·x + … + b_n·x^n` in the variable `x`.
pub fn polynomial_term<T: Scalar>(coeffs: &[T]) -> Term<T> {
    let mut parts = coeffs.iter().enumerate().map(|(j, b)| monomial(b, j as u32));
    let first = parts.next().unwrap_or_else(|| Term::Const(T::zero()));
    parts.fold(first, Term::add)
}

fn monomial<T: Scalar>(b: &T, j: u32) -> Term<T> {
    match j {
        0 => Term::Const(b.clone()),
        _ => Term::mul(Term::Const(b.clone()), Term::pow(Term::var("x"), j)),
    }
}

/// `a_1·x + … + a_n·x^n`; `coeffs[0]` is `a_1`.
pub fn power_series_term<T: Scalar>(coeffs: &[T]) -> Result<Term<T>, EvalError> {
    let mut parts = coeffs.iter().enumerate().map(|(j, a)| monomial(a, j as u32 + 1));
    let first = parts.next().ok_or(EvalError::EmptySeries)?;
    Ok(parts.fold(first, Term::add))
}

/// Whether `a` is a root of `Σ b_j x^j`, decided in the base, external and
/// internal views of `s`.
pub fn scaled_poly_root_check<T: Scalar>(
    coeffs: &[T],
    a: &T,
    s: &StructureHandle<T>,
) -> Result<EquationVerdict, EvalError> {
    let env = Environment::new().with("x", a.clone());
    check_equation(&polynomial_term(coeffs), &Term::Const(T::zero()), &env, s)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SeriesValues<T> {
    pub internal: ScaledValue<T>,
    pub external: T,
    pub base: T,
}

/// `P(n, x) = Σ_{j=1..n} a_j x^j` evaluated in all three views.
pub fn power_series_eval<T: Scalar>(coeffs: &[T], x: &T, s: &StructureHandle<T>) -> Result<SeriesValues<T>, EvalError> {
    let term = power_series_term(coeffs)?;
    let env = Environment::new().with("x", x.clone());
    Ok(SeriesValues {
        internal: eval_internal(&term, &env, s)?,
        external: eval_external(&term, &env, s)?,
        base: eval_base(&term, &env)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnalyticFn {
    Exp,
    Sin,
    SinSquared,
}

impl AnalyticFn {
    fn apply(self, x: f64) -> f64 {
        match self {
            AnalyticFn::Exp => x.exp(),
            AnalyticFn::Sin => x.sin(),
            AnalyticFn::SinSquared => x.sin().powi(2),
        }
    }
}

/// `f_r(x_r)`, the scaled function applied to the value the same as `x`,
/// returned as a base value (`r·f(x)`).
///
/// `sin²` is the scaled product of two scaled sines, so it gives `r·sin²(x)`
/// and not `r²·sin²(x)`.
pub fn analytic_scaled(f: AnalyticFn, x: f64, r: f64) -> Result<f64, StructureError> {
    let view = ExternalView::new(make_structure(NumberType::Real, r)?);
    let xr = view.embed(&x)?;
    let x = xr.try_div(&r)?;
    let out = match f {
        AnalyticFn::Exp | AnalyticFn::Sin => r * f.apply(x),
        AnalyticFn::SinSquared => {
            let s = r * x.sin();
            view.mul(&s, &s)?
        }
    };
    if out.is_finite() {
        Ok(out)
    } else {
        Err(crate::exact::ArithError::Overflow.into())
    }
}

/// Exact Taylor coefficients `a_0 … a_order` about zero.
pub fn taylor_coefficients(f: AnalyticFn, order: u32) -> Vec<Rational> {
    let mut fact = Rational::one();
    let mut out = Vec::with_capacity(order as usize + 1);
    for j in 0..=order {
        if j > 0 {
            fact = fact * Rational::from_integer(j);
        }
        let inv = fact.recip().expect("factorial is nonzero");
        let a = match f {
            AnalyticFn::Exp => inv,
            AnalyticFn::Sin => match j % 4 {
                1 => inv,
                3 => -inv,
                _ => Rational::zero(),
            },
            // sin² x = (1 − cos 2x)/2
            AnalyticFn::SinSquared => {
                if j == 0 || j % 2 == 1 {
                    Rational::zero()
                } else {
                    let sign = if (j / 2) % 2 == 1 { 1 } else { -1 };
                    let pow2 = Rational::from_integer(2).pow(j as i32 - 1).expect("nonzero base");
                    Rational::from_integer(sign) * pow2 * inv
                }
            }
        };
        out.push(a);
    }
    out
}

/// The order-`order` Taylor truncation of `f`, evaluated exactly in the
/// external view of scale `r` at the value the same as `x`, then rounded.
pub fn series_external(f: AnalyticFn, order: u32, x: f64, r: f64) -> Result<f64, EvalError> {
    let exact = |v: f64| Rational::from_f64(v).ok_or(crate::exact::ArithError::Overflow);
    let coeffs = taylor_coefficients(f, order);
    let handle = make_structure(NumberType::Real, exact(r).map_err(StructureError::from)?)?;
    let tail = power_series_term(&coeffs[1..])?;
    let term = Term::add(Term::Const(coeffs[0].clone()), tail);
    let env = Environment::new().with("x", exact(x).map_err(StructureError::from)?);
    let v = eval_external(&term, &env, &handle)?;
    Ok(v.to_f64().map_err(StructureError::from)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::CRational;

    fn c(s: &str) -> CRational {
        s.parse().unwrap()
    }

    #[test]
    fn gaussian_roots() {
        let cpx = make_structure(NumberType::Complex, c("3-2i")).unwrap();
        let v = scaled_poly_root_check(&[c("1"), c("0"), c("1")], &c("1i"), &cpx).unwrap();
        assert!(v.all());
        let v = scaled_poly_root_check(&[c("-1"), c("1")], &c("2"), &cpx).unwrap();
        assert!(v.is_uniform() && !v.base);
        let cpx = make_structure(NumberType::Complex, c("2+1i")).unwrap();
        let v = scaled_poly_root_check(&[c("1"), c("-2"), c("1")], &c("1"), &cpx).unwrap();
        assert!(v.all());
    }

    #[test]
    fn geometric_series_example() {
        let r = make_structure(NumberType::Rational, c("2")).unwrap();
        let out = power_series_eval(&[c("1"), c("1"), c("1")], &c("1/2"), &r).unwrap();
        assert_eq!(out.base, c("7/8"));
        assert_eq!(out.external, c("7/4"));
        assert_eq!(out.internal.internal(), &c("7/8"));
        assert!(matches!(
            power_series_eval::<CRational>(&[], &c("1"), &r),
            Err(EvalError::EmptySeries)
        ));
    }

    #[test]
    fn single_term_series() {
        let r = make_structure(NumberType::Rational, c("-5/3")).unwrap();
        let out = power_series_eval(&[c("1")], &c("4/7"), &r).unwrap();
        assert_eq!(out.external, c("-20/21"));
    }

    #[test]
    fn scaled_analytic_functions() {
        assert_eq!(analytic_scaled(AnalyticFn::Exp, 0.0, 2.0).unwrap(), 2.0);
        let s = analytic_scaled(AnalyticFn::Sin, 0.7, 2.0).unwrap();
        assert!((s - 2.0 * 0.7f64.sin()).abs() < 1e-12);
        let s2 = analytic_scaled(AnalyticFn::SinSquared, 0.7, 2.0).unwrap();
        assert!((s2 - 2.0 * 0.7f64.sin().powi(2)).abs() < 1e-12);
        assert!((s2 - 4.0 * 0.7f64.sin().powi(2)).abs() > 0.1);
        assert!(analytic_scaled(AnalyticFn::Exp, 1.0, 0.0).is_err());
        assert!(analytic_scaled(AnalyticFn::Exp, 800.0, 1.0).is_err());
    }

    #[test]
    fn taylor_series_match_library() {
        // sin² converges more slowly (its terms carry 2^j), so it gets more terms.
        for (f, order) in [
            (AnalyticFn::Exp, 15),
            (AnalyticFn::Sin, 15),
            (AnalyticFn::SinSquared, 21),
        ] {
            for (x, r) in [(0.3, 1.5), (-1.0, -4.0), (1.0, 0.25)] {
                let want = analytic_scaled(f, x, r).unwrap();
                let got = series_external(f, order, x, r).unwrap();
                assert!((want - got).abs() < 1e-9, "{f:?} x={x} r={r}: {want} vs {got}");
            }
        }
    }
}
