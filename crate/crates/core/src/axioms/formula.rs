//! Closed first-order formulas over terms, once their variables are bound.

use crate::exact::CRational;
use crate::structure::Interpretation;
use crate::term::{evaluate, parse_term, Environment, EvalError, Term};

#[derive(Debug, Clone, PartialEq)]
pub enum Formula {
    Eq(Term<CRational>, Term<CRational>),
    Lt(Term<CRational>, Term<CRational>),
    Not(Box<Formula>),
    And(Vec<Formula>),
    Or(Vec<Formula>),
    /// Short-circuit: the consequent is not evaluated when the guard fails.
    Implies(Box<Formula>, Box<Formula>),
}

fn term(text: &str) -> Term<CRational> {
    parse_term(text).unwrap_or_else(|e| panic!("axiom term `{text}`: {e}"))
}

pub fn eq(lhs: &str, rhs: &str) -> Formula {
    Formula::Eq(term(lhs), term(rhs))
}

pub fn lt(lhs: &str, rhs: &str) -> Formula {
    Formula::Lt(term(lhs), term(rhs))
}

pub fn not(f: Formula) -> Formula {
    Formula::Not(Box::new(f))
}

pub fn and(fs: impl IntoIterator<Item = Formula>) -> Formula {
    Formula::And(fs.into_iter().collect())
}

pub fn or(fs: impl IntoIterator<Item = Formula>) -> Formula {
    Formula::Or(fs.into_iter().collect())
}

pub fn implies(guard: Formula, then: Formula) -> Formula {
    Formula::Implies(Box::new(guard), Box::new(then))
}

/// Rendered sides of the last atom evaluated, kept for failure reports.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Trace {
    pub lhs: String,
    pub rhs: String,
}

impl Formula {
    pub fn holds<I: Interpretation<CRational>>(
        &self,
        env: &Environment<CRational>,
        view: &I,
        trace: &mut Trace,
    ) -> Result<bool, EvalError> {
        match self {
            Formula::Eq(t, u) | Formula::Lt(t, u) => {
                let a = evaluate(t, env, view)?;
                let b = evaluate(u, env, view)?;
                *trace = Trace {
                    lhs: view.render(&a),
                    rhs: view.render(&b),
                };
                Ok(match self {
                    Formula::Eq(..) => view.equal(&a, &b),
                    _ => view.lt(&a, &b)?,
                })
            }
            Formula::Not(f) => Ok(!f.holds(env, view, trace)?),
            Formula::And(fs) => {
                for f in fs {
                    if !f.holds(env, view, trace)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            Formula::Or(fs) => {
                for f in fs {
                    if f.holds(env, view, trace)? {
                        return Ok(true);
                    }
                }
                Ok(false)
            }
            Formula::Implies(guard, then) => {
                if guard.holds(env, view, trace)? {
                    then.holds(env, view, trace)
                } else {
                    Ok(true)
                }
            }
        }
    }

    /// Every term appearing as an atom side.
    pub fn terms(&self) -> Vec<&Term<CRational>> {
        match self {
            Formula::Eq(t, u) | Formula::Lt(t, u) => vec![t, u],
            Formula::Not(f) => f.terms(),
            Formula::And(fs) | Formula::Or(fs) => fs.iter().flat_map(|f| f.terms()).collect(),
            Formula::Implies(g, t) => {
                let mut out = g.terms();
                out.extend(t.terms());
                out
            }
        }
    }
}
