//! Seeded random terms for property checks.
//!
//! Every interior node is drawn uniformly from the node kinds the number type
//! supports; once the depth cap is reached only constants and variables are
//! drawn. Constants come from a small pool that includes negatives, and sum
//! bounds are small and nonnegative so index exponents stay valid.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::exact::CRational;
use crate::structure::NumberType;

use super::{eval_base, Environment, Exponent, Term};

pub const VARIABLES: [&str; 3] = ["x", "y", "z"];
static INDICES: [&str; 3] = ["j", "k", "l"];

const REAL_POOL: [&str; 11] = ["0", "1", "2", "3", "5", "-1", "-2", "-7", "1/2", "-3/4", "2/3"];
const COMPLEX_POOL: [&str; 4] = ["1i", "1-2i", "-1/2+1/3i", "3+1i"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Const,
    Var,
    Add,
    Sub,
    Mul,
    Div,
    Pow,
    Sum,
    Conj,
}

fn kinds(t: NumberType) -> Vec<Kind> {
    let mut out = vec![Kind::Const, Kind::Var, Kind::Add, Kind::Mul, Kind::Pow, Kind::Sum];
    if t.has_subtraction() {
        out.push(Kind::Sub);
    }
    if t.has_division() {
        out.push(Kind::Div);
    }
    if t == NumberType::Complex {
        out.push(Kind::Conj);
    }
    out
}

/// Constants available to terms of a number type.
pub fn constant_pool(t: NumberType) -> Vec<CRational> {
    let extra: &[&str] = if t == NumberType::Complex { &COMPLEX_POOL } else { &[] };
    REAL_POOL
        .iter()
        .chain(extra)
        .map(|s| s.parse::<CRational>().expect("pool literal"))
        .filter(|v| t.admits(v))
        .collect()
}

#[derive(Debug, Clone)]
pub struct TermSampler {
    number_type: NumberType,
    max_depth: usize,
    kinds: Vec<Kind>,
    pool: Vec<CRational>,
}

impl TermSampler {
    pub fn new(number_type: NumberType, max_depth: usize) -> Self {
        TermSampler {
            number_type,
            max_depth: max_depth.max(1),
            kinds: kinds(number_type),
            pool: constant_pool(number_type),
        }
    }

    pub fn number_type(&self) -> NumberType {
        self.number_type
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Term<CRational> {
        self.node(rng, 1, &mut Vec::new())
    }

    /// Draws terms until one evaluates without error in the base structure.
    pub fn sample_evaluable<R: Rng + ?Sized>(&self, rng: &mut R, env: &Environment<CRational>) -> Term<CRational> {
        loop {
            let t = self.sample(rng);
            if eval_base(&t, env).is_ok() {
                return t;
            }
        }
    }

    /// Binds every sampling variable to a random pool value.
    pub fn sample_env<R: Rng + ?Sized>(&self, rng: &mut R) -> Environment<CRational> {
        VARIABLES
            .iter()
            .map(|v| (*v, self.pool.choose(rng).expect("nonempty pool").clone()))
            .collect()
    }

    fn node<R: Rng + ?Sized>(&self, rng: &mut R, depth: usize, scope: &mut Vec<&'static str>) -> Term<CRational> {
        let kind = if depth >= self.max_depth {
            *[Kind::Const, Kind::Var].choose(rng).unwrap()
        } else {
            *self.kinds.choose(rng).unwrap()
        };
        let child = |rng: &mut R, scope: &mut Vec<&'static str>| self.node(rng, depth + 1, scope);
        match kind {
            Kind::Const => Term::Const(self.pool.choose(rng).unwrap().clone()),
            Kind::Var => {
                let mut names: Vec<&str> = VARIABLES.to_vec();
                names.extend(scope.iter());
                Term::var(*names.choose(rng).unwrap())
            }
            Kind::Add => Term::add(child(rng, scope), child(rng, scope)),
            Kind::Sub => Term::sub(child(rng, scope), child(rng, scope)),
            Kind::Mul => Term::mul(child(rng, scope), child(rng, scope)),
            Kind::Div => Term::div(child(rng, scope), child(rng, scope)),
            Kind::Conj => Term::conj(child(rng, scope)),
            Kind::Pow => {
                let base = child(rng, scope);
                let exp = match scope.choose(rng) {
                    Some(index) if rng.gen_bool(0.5) => Exponent::Index(index.to_string()),
                    _ => Exponent::Literal(rng.gen_range(1..=3)),
                };
                Term::Pow(Box::new(base), exp)
            }
            Kind::Sum => {
                let free = INDICES.iter().find(|i| !scope.contains(i));
                let Some(index) = free.copied() else {
                    return child(rng, scope);
                };
                let lower = rng.gen_range(0..=1);
                let upper = lower + rng.gen_range(0..=2);
                scope.push(index);
                let body = child(rng, scope);
                scope.pop();
                Term::sum(index, lower, upper, body)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn respects_signature_and_depth() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for t in [
            NumberType::Natural,
            NumberType::Integer,
            NumberType::Real,
            NumberType::Complex,
        ] {
            let s = TermSampler::new(t, 6);
            for _ in 0..200 {
                let term = s.sample(&mut rng);
                assert!(term.depth() <= 6);
                let forbidden = |n: &Term<CRational>| match n {
                    Term::Sub(..) => !t.has_subtraction(),
                    Term::Div(..) => !t.has_division(),
                    Term::Conj(..) => t != NumberType::Complex,
                    Term::Const(c) => !t.admits(c),
                    _ => false,
                };
                assert!(!term.any_node(&forbidden), "{term}");
            }
        }
    }

    #[test]
    fn same_seed_same_terms() {
        let s = TermSampler::new(NumberType::Rational, 5);
        let draw = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..20).map(|_| s.sample(&mut rng).to_string()).collect::<Vec<_>>()
        };
        assert_eq!(draw(3), draw(3));
        assert_ne!(draw(3), draw(4));
    }
}
