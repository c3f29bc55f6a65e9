use std::collections::BTreeMap;

use thiserror::Error;

use crate::exact::ArithError;
use crate::scalar::{self, Scalar};
use crate::structure::{
    BaseField, ExternalView, InternalView, Interpretation, ScaledValue, StructureError, StructureHandle,
};

use super::{Exponent, Term};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvalError {
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
    #[error("division by zero in subterm {subterm}")]
    DivisionByZero { subterm: String },
    #[error("exponent `{index}` evaluates to {value}; exponents must be >= 0")]
    InvalidExponent { index: String, value: i64 },
    #[error("`{0}` is not an enclosing sum index")]
    UnknownIndex(String),
    #[error("power series need at least one coefficient")]
    EmptySeries,
    #[error("homogeneity violated: expected {expected}, evaluated {actual}")]
    HomogeneityViolated { expected: String, actual: String },
    #[error(transparent)]
    Structure(StructureError),
}

impl From<StructureError> for EvalError {
    fn from(e: StructureError) -> Self {
        EvalError::Structure(e)
    }
}

/// Variable bindings, all given as base-structure values.
#[derive(Debug, Clone, PartialEq)]
pub struct Environment<T> {
    bindings: BTreeMap<String, T>,
}

impl<T> Default for Environment<T> {
    fn default() -> Self {
        Environment {
            bindings: BTreeMap::new(),
        }
    }
}

impl<T: Scalar> Environment<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn bind(&mut self, name: impl Into<String>, value: T) -> &mut Self {
        self.bindings.insert(name.into(), value);
        self
    }

    pub fn with(mut self, name: impl Into<String>, value: T) -> Self {
        self.bind(name, value);
        self
    }

    pub fn get(&self, name: &str) -> Option<&T> {
        self.bindings.get(name)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &T)> {
        self.bindings.iter()
    }

    pub fn map_values<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Environment<U> {
        Environment {
            bindings: self.bindings.iter().map(|(k, v)| (k.clone(), f(v))).collect(),
        }
    }
}

impl<T: Scalar, S: Into<String>> FromIterator<(S, T)> for Environment<T> {
    fn from_iter<I: IntoIterator<Item = (S, T)>>(iter: I) -> Self {
        Environment {
            bindings: iter.into_iter().map(|(k, v)| (k.into(), v)).collect(),
        }
    }
}

struct Evaluator<'a, T, I> {
    env: &'a Environment<T>,
    view: &'a I,
    indices: Vec<(&'a str, i64)>,
}

impl<'a, T: Scalar, I: Interpretation<T>> Evaluator<'a, T, I> {
    fn index(&self, name: &str) -> Option<i64> {
        self.indices.iter().rev().find(|(n, _)| *n == name).map(|(_, v)| *v)
    }

    fn eval(&mut self, t: &'a Term<T>) -> Result<I::Value, EvalError> {
        let view = self.view;
        let guard = |r: Result<I::Value, StructureError>| {
            r.map_err(|e| match e {
                StructureError::Arith(ArithError::DivisionByZero { .. }) => {
                    EvalError::DivisionByZero { subterm: t.to_string() }
                }
                other => EvalError::Structure(other),
            })
        };
        match t {
            Term::Const(c) => Ok(view.embed(c)?),
            Term::Var(name) => match self.index(name) {
                Some(j) => Ok(view.embed(&T::from_i64(j))?),
                None => {
                    let v = self
                        .env
                        .get(name)
                        .ok_or_else(|| EvalError::UnboundVariable(name.clone()))?;
                    Ok(view.embed(v)?)
                }
            },
            Term::Add(a, b) => {
                let (x, y) = (self.eval(a)?, self.eval(b)?);
                guard(view.add(&x, &y))
            }
            Term::Sub(a, b) => {
                let (x, y) = (self.eval(a)?, self.eval(b)?);
                guard(view.sub(&x, &y))
            }
            Term::Mul(a, b) => {
                let (x, y) = (self.eval(a)?, self.eval(b)?);
                guard(view.mul(&x, &y))
            }
            Term::Div(a, b) => {
                let (x, y) = (self.eval(a)?, self.eval(b)?);
                guard(view.div(&x, &y))
            }
            Term::Pow(a, e) => {
                let n = match e {
                    Exponent::Literal(n) => i64::from(*n),
                    Exponent::Index(name) => {
                        let j = self.index(name).ok_or_else(|| EvalError::UnknownIndex(name.clone()))?;
                        if j < 0 {
                            return Err(EvalError::InvalidExponent {
                                index: name.clone(),
                                value: j,
                            });
                        }
                        j
                    }
                };
                if n == 0 {
                    return Ok(view.one()?);
                }
                let x = self.eval(a)?;
                let mut acc = x.clone();
                for _ in 1..n {
                    acc = guard(view.mul(&acc, &x))?;
                }
                Ok(acc)
            }
            Term::Sum {
                index,
                lower,
                upper,
                body,
            } => {
                let mut acc = view.zero()?;
                for j in *lower..=*upper {
                    self.indices.push((index, j));
                    let v = self.eval(body);
                    self.indices.pop();
                    acc = guard(view.add(&acc, &v?))?;
                }
                Ok(acc)
            }
            Term::Conj(a) => {
                let x = self.eval(a)?;
                guard(view.conj(&x))
            }
        }
    }
}

/// Evaluates `t` with the operations of any view.
pub fn evaluate<T: Scalar, I: Interpretation<T>>(
    t: &Term<T>,
    env: &Environment<T>,
    view: &I,
) -> Result<I::Value, EvalError> {
    Evaluator {
        env,
        view,
        indices: Vec::new(),
    }
    .eval(t)
}

/// Plain field arithmetic on the carrier.
pub fn eval_base<T: Scalar>(t: &Term<T>, env: &Environment<T>) -> Result<T, EvalError> {
    evaluate(t, env, &BaseField)
}

fn homogeneity_holds<T: Scalar>(expected: &T, actual: &T) -> Result<(), EvalError> {
    if !T::EXACT || expected == actual {
        return Ok(());
    }
    Err(EvalError::HomogeneityViolated {
        expected: expected.to_string(),
        actual: actual.to_string(),
    })
}

/// Evaluates with the compensated operations of `S̄^p` after sending each
/// binding `a` to `p·a`. On exact carriers the result is checked against
/// `p · eval_base(t, env)`.
pub fn eval_external<T: Scalar>(t: &Term<T>, env: &Environment<T>, s: &StructureHandle<T>) -> Result<T, EvalError> {
    let actual = evaluate(t, env, &ExternalView::new(s.clone()))?;
    let base = eval_base(t, env)?;
    homogeneity_holds(&scalar::mul(s.scale(), &base), &actual)?;
    Ok(actual)
}

/// Evaluates with the internal operations of `S̄_p`.
pub fn eval_internal<T: Scalar>(
    t: &Term<T>,
    env: &Environment<T>,
    s: &StructureHandle<T>,
) -> Result<ScaledValue<T>, EvalError> {
    let v = evaluate(t, env, &InternalView::new(s.clone()))?;
    homogeneity_holds(&eval_base(t, env)?, v.internal())?;
    Ok(v)
}

/// Equality verdicts for one equation in the three views.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EquationVerdict {
    pub base: bool,
    pub external: bool,
    pub internal: bool,
}

impl EquationVerdict {
    pub fn is_uniform(&self) -> bool {
        self.base == self.external && self.external == self.internal
    }

    pub fn all(&self) -> bool {
        self.base && self.external && self.internal
    }
}

/// Compares `t` and `u` in `S̄` (of the same number type), `S̄^p` and `S̄_p`.
pub fn check_equation<T: Scalar>(
    t: &Term<T>,
    u: &Term<T>,
    env: &Environment<T>,
    s: &StructureHandle<T>,
) -> Result<EquationVerdict, EvalError> {
    fn verdict<T: Scalar, I: Interpretation<T>>(
        t: &Term<T>,
        u: &Term<T>,
        env: &Environment<T>,
        view: &I,
    ) -> Result<bool, EvalError> {
        Ok(view.equal(&evaluate(t, env, view)?, &evaluate(u, env, view)?))
    }
    let base = ExternalView::<T>::base(s.number_type());
    Ok(EquationVerdict {
        base: verdict(t, u, env, &base)?,
        external: verdict(t, u, env, &ExternalView::new(s.clone()))?,
        internal: verdict(t, u, env, &InternalView::new(s.clone()))?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::CRational;
    use crate::structure::{make_structure, NumberType};
    use crate::term::parse_term;

    fn c(s: &str) -> CRational {
        s.parse().unwrap()
    }

    fn t(s: &str) -> Term<CRational> {
        parse_term(s).unwrap()
    }

    fn env(pairs: &[(&str, &str)]) -> Environment<CRational> {
        pairs.iter().map(|(k, v)| (*k, c(v))).collect()
    }

    fn rat(p: &str) -> StructureHandle<CRational> {
        make_structure(NumberType::Rational, c(p)).unwrap()
    }

    #[test]
    fn base_examples() {
        assert_eq!(eval_base(&t("x+1"), &env(&[("x", "2")])).unwrap(), c("3"));
        assert_eq!(eval_base(&t("sum(j=1..3; x^j)"), &env(&[("x", "2")])).unwrap(), c("14"));
        let err = eval_base(&t("1/x"), &env(&[("x", "0")])).unwrap_err();
        assert_eq!(
            err,
            EvalError::DivisionByZero {
                subterm: "(1 / x)".into()
            }
        );
        assert_eq!(
            eval_base(&t("x+y"), &env(&[("x", "1")])).unwrap_err(),
            EvalError::UnboundVariable("y".into())
        );
    }

    #[test]
    fn external_product() {
        let e = env(&[("x", "2"), ("y", "5")]);
        assert_eq!(eval_external(&t("x*y"), &e, &rat("3")).unwrap(), c("30"));
        let base = eval_base(&t("x*y - x/y"), &e).unwrap();
        assert_eq!(eval_external(&t("x*y - x/y"), &e, &rat("1")).unwrap(), base);
    }

    #[test]
    fn double_indexed_sum_is_homogeneous() {
        let term = t("sum(j=0..3; sum(k=1..2; a^j / b^k))");
        let e = env(&[("a", "2/3"), ("b", "-5")]);
        let base = eval_base(&term, &e).unwrap();
        for p in ["7", "-1/2", "13/4"] {
            assert_eq!(eval_external(&term, &e, &rat(p)).unwrap(), c(p) * base.clone());
        }
    }

    #[test]
    fn internal_sameness_and_correspondence() {
        let e = env(&[("x", "2"), ("y", "5")]);
        let v = eval_internal(&t("x*y"), &e, &rat("3")).unwrap();
        assert_eq!(v.internal(), &c("10"));
        assert_eq!(v.correspondent().base_value, c("30"));
        let h = make_structure(NumberType::Integer, c("-1")).unwrap();
        let v = eval_internal(&t("x"), &env(&[("x", "4")]), &h).unwrap();
        assert_eq!(v.internal(), &c("4"));
        assert_eq!(v.correspondent().base_value, c("-4"));
    }

    #[test]
    fn equations_agree_across_views() {
        let lhs = t("(x+y)^2");
        let rhs = t("x^2 + 2*x*y + y^2");
        let e = env(&[("x", "-3/7"), ("y", "5/2")]);
        let cpx = make_structure(NumberType::Complex, c("2-3i")).unwrap();
        let all = EquationVerdict {
            base: true,
            external: true,
            internal: true,
        };
        assert_eq!(check_equation(&lhs, &rhs, &e, &rat("-9/4")).unwrap(), all);
        assert_eq!(check_equation(&lhs, &rhs, &e, &cpx).unwrap(), all);
        let v = check_equation(&t("x"), &t("x+1"), &e, &rat("5")).unwrap();
        assert!(v.is_uniform() && !v.base);
        assert!(check_equation(&lhs, &lhs, &e, &rat("5")).unwrap().all());
    }

    #[test]
    fn signature_restrictions() {
        let nat = make_structure(NumberType::Natural, c("2")).unwrap();
        let int = make_structure(NumberType::Integer, c("3")).unwrap();
        let e = env(&[("x", "4"), ("y", "2")]);
        assert!(matches!(
            eval_external(&t("x/y"), &e, &int),
            Err(EvalError::Structure(StructureError::UnsupportedOperation { .. }))
        ));
        assert!(eval_internal(&t("x-y"), &e, &nat).is_err());
        assert_eq!(eval_external(&t("x-y"), &e, &int).unwrap(), c("6"));
        assert_eq!(eval_external(&t("x*y+1"), &e, &nat).unwrap(), c("18"));
    }

    #[test]
    fn index_variables_and_zero_exponent() {
        let e = env(&[("x", "3")]);
        assert_eq!(eval_base(&t("sum(j=0..2; x^j)"), &e).unwrap(), c("13"));
        assert_eq!(eval_external(&t("sum(k=1..4; k)"), &e, &rat("2")).unwrap(), c("20"));
        assert!(matches!(
            eval_base(&t("sum(j=-1..0; x^j)"), &e),
            Err(EvalError::InvalidExponent { value: -1, .. })
        ));
        assert_eq!(
            eval_base(&t("x^j"), &e).unwrap_err(),
            EvalError::UnknownIndex("j".into())
        );
    }

    #[test]
    fn conjugation_in_views() {
        let cpx = make_structure(NumberType::Complex, c("2+1i")).unwrap();
        let e = env(&[("z", "1-2i")]);
        let term = t("conj(z) * z");
        assert_eq!(eval_base(&term, &e).unwrap(), c("5"));
        assert_eq!(eval_external(&term, &e, &cpx).unwrap(), c("10+5i"));
        assert_eq!(eval_internal(&term, &e, &cpx).unwrap().internal(), &c("5"));
    }
}
