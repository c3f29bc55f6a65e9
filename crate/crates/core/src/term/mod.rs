//! Terms over `+ − × ÷`, powers, finite sums and conjugation, evaluated in
//! base, external and internal views.
//!
//! Textual syntax (whitespace is insignificant):
//!
//! ```text
//! expr     = product { ("+" | "-") product } ;
//! product  = unary { ("*" | "/") unary } ;
//! unary    = "-" unary | power ;
//! power    = primary [ "^" exponent ] ;
//! exponent = natural | identifier ;          (* identifier: a sum index *)
//! primary  = natural
//!          | "[" number-literal "]"          (* e.g. [-3/4], [2+1i] *)
//!          | identifier
//!          | "(" expr ")"
//!          | "sum" "(" identifier "=" integer ".." integer ";" expr ")"
//!          | "conj" "(" expr ")" ;
//! ```
//!
//! A leading `-` before an operand is read as `0 - operand`.

mod eval;
mod parse;
mod poly;
pub mod sample;

use std::collections::BTreeSet;
use std::fmt;

use crate::scalar::Scalar;

pub use eval::{
    check_equation, eval_base, eval_external, eval_internal, evaluate, Environment, EquationVerdict, EvalError,
};
pub use parse::{parse_term, ParseError};
pub use poly::{
    analytic_scaled, polynomial_term, power_series_eval, power_series_term, scaled_poly_root_check, series_external,
    taylor_coefficients, AnalyticFn, SeriesValues,
};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Exponent {
    Literal(u32),
    /// The current value of an enclosing sum index.
    Index(String),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Term<T> {
    Const(T),
    Var(String),
    Add(Box<Term<T>>, Box<Term<T>>),
    Sub(Box<Term<T>>, Box<Term<T>>),
    Mul(Box<Term<T>>, Box<Term<T>>),
    Div(Box<Term<T>>, Box<Term<T>>),
    Pow(Box<Term<T>>, Exponent),
    Sum {
        index: String,
        lower: i64,
        upper: i64,
        body: Box<Term<T>>,
    },
    Conj(Box<Term<T>>),
}

impl<T> Term<T> {
    pub fn constant(v: T) -> Self {
        Term::Const(v)
    }

    pub fn var(name: impl Into<String>) -> Self {
        Term::Var(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(a: Term<T>, b: Term<T>) -> Self {
        Term::Add(Box::new(a), Box::new(b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn sub(a: Term<T>, b: Term<T>) -> Self {
        Term::Sub(Box::new(a), Box::new(b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(a: Term<T>, b: Term<T>) -> Self {
        Term::Mul(Box::new(a), Box::new(b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn div(a: Term<T>, b: Term<T>) -> Self {
        Term::Div(Box::new(a), Box::new(b))
    }

    pub fn pow(base: Term<T>, exp: u32) -> Self {
        Term::Pow(Box::new(base), Exponent::Literal(exp))
    }

    pub fn pow_index(base: Term<T>, index: impl Into<String>) -> Self {
        Term::Pow(Box::new(base), Exponent::Index(index.into()))
    }

    pub fn sum(index: impl Into<String>, lower: i64, upper: i64, body: Term<T>) -> Self {
        Term::Sum {
            index: index.into(),
            lower,
            upper,
            body: Box::new(body),
        }
    }

    pub fn conj(a: Term<T>) -> Self {
        Term::Conj(Box::new(a))
    }

    /// Variables not bound by an enclosing sum.
    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free<'a>(&'a self, bound: &mut Vec<&'a str>, out: &mut BTreeSet<String>) {
        match self {
            Term::Const(_) => {}
            Term::Var(name) => {
                if !bound.contains(&name.as_str()) {
                    out.insert(name.clone());
                }
            }
            Term::Add(a, b) | Term::Sub(a, b) | Term::Mul(a, b) | Term::Div(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Term::Pow(a, _) | Term::Conj(a) => a.collect_free(bound, out),
            Term::Sum { index, body, .. } => {
                bound.push(index);
                body.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Term::Const(_) | Term::Var(_) => 1,
            Term::Add(a, b) | Term::Sub(a, b) | Term::Mul(a, b) | Term::Div(a, b) => 1 + a.depth().max(b.depth()),
            Term::Pow(a, _) | Term::Conj(a) => 1 + a.depth(),
            Term::Sum { body, .. } => 1 + body.depth(),
        }
    }

    /// Whether any node is one of the operations the predicate rejects.
    pub fn any_node(&self, pred: &impl Fn(&Term<T>) -> bool) -> bool {
        if pred(self) {
            return true;
        }
        match self {
            Term::Const(_) | Term::Var(_) => false,
            Term::Add(a, b) | Term::Sub(a, b) | Term::Mul(a, b) | Term::Div(a, b) => {
                a.any_node(pred) || b.any_node(pred)
            }
            Term::Pow(a, _) | Term::Conj(a) => a.any_node(pred),
            Term::Sum { body, .. } => body.any_node(pred),
        }
    }

    /// The same tree with every constant converted.
    pub fn map_consts<U>(&self, f: &impl Fn(&T) -> U) -> Term<U> {
        let b = |t: &Term<T>| Box::new(t.map_consts(f));
        match self {
            Term::Const(v) => Term::Const(f(v)),
            Term::Var(n) => Term::Var(n.clone()),
            Term::Add(x, y) => Term::Add(b(x), b(y)),
            Term::Sub(x, y) => Term::Sub(b(x), b(y)),
            Term::Mul(x, y) => Term::Mul(b(x), b(y)),
            Term::Div(x, y) => Term::Div(b(x), b(y)),
            Term::Pow(x, e) => Term::Pow(b(x), e.clone()),
            Term::Sum {
                index,
                lower,
                upper,
                body,
            } => Term::Sum {
                index: index.clone(),
                lower: *lower,
                upper: *upper,
                body: b(body),
            },
            Term::Conj(x) => Term::Conj(b(x)),
        }
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Literal(n) => write!(f, "{n}"),
            Exponent::Index(name) => f.write_str(name),
        }
    }
}

impl<T: Scalar> fmt::Display for Term<T> {
    /// Fully parenthesized form that parses back to the same tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Const(v) => {
                let text = v.to_string();
                if text.bytes().all(|b| b.is_ascii_digit()) {
                    f.write_str(&text)
                } else {
                    write!(f, "[{text}]")
                }
            }
            Term::Var(name) => f.write_str(name),
            Term::Add(a, b) => write!(f, "({a} + {b})"),
            Term::Sub(a, b) => write!(f, "({a} - {b})"),
            Term::Mul(a, b) => write!(f, "({a} * {b})"),
            Term::Div(a, b) => write!(f, "({a} / {b})"),
            Term::Pow(a, e) => match **a {
                Term::Pow(..) => write!(f, "({a})^{e}"),
                _ => write!(f, "{a}^{e}"),
            },
            Term::Sum {
                index,
                lower,
                upper,
                body,
            } => {
                write!(f, "sum({index}={lower}..{upper}; {body})")
            }
            Term::Conj(a) => write!(f, "conj({a})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::CRational;

    type T = Term<CRational>;

    #[test]
    fn free_variables_exclude_sum_indices() {
        let t: T = parse_term("sum(j=1..3; x^j * j) + y").unwrap();
        let vars: Vec<_> = t.free_vars().into_iter().collect();
        assert_eq!(vars, ["x", "y"]);
    }

    #[test]
    fn printing_brackets_non_natural_constants() {
        let t: T = Term::add(
            Term::constant("-3/4".parse().unwrap()),
            Term::mul(
                Term::constant("2+1i".parse().unwrap()),
                Term::constant(CRational::from_int(7)),
            ),
        );
        assert_eq!(t.to_string(), "([-3/4] + ([2+1i] * 7))");
    }

    #[test]
    fn nested_powers_are_parenthesized() {
        let t: T = Term::pow(Term::pow(Term::var("x"), 2), 3);
        assert_eq!(t.to_string(), "(x^2)^3");
        assert_eq!(parse_term(&t.to_string()).unwrap(), t);
    }

    #[test]
    fn depth_counts_nodes_on_longest_path() {
        let t: T = parse_term("(x + 1) * y^2").unwrap();
        assert_eq!(t.depth(), 3);
    }
}
