//! Seeded axiom checks run side by side in the base, external and internal
//! views of a structure.
//!
//! Every case binds the same base values in all three views (through
//! `a ↦ p·a` externally and `a ↦ a_p` internally) and compares the verdicts.
//! Failures are data: they land in a [`CheckReport`], which serializes to
//!
//! ```text
//! {"suite": str, "structure": str, "cases": int,
//!  "failures": [{"axiom": str, "bindings": {name: str}, "lhs": str, "rhs": str,
//!                "view": "base|external|internal"}],
//!  "seed": int, "pass": bool}
//! ```

mod convergence;
pub mod formula;
mod substructure;
mod suites;
mod wyz;

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use serde::Serialize;
use thiserror::Error;

use crate::exact::{CRational, Rational};
use crate::structure::{
    Corruption, ExternalView, InternalView, Interpretation, NumberType, StructureError, StructureHandle,
};
use crate::term::{evaluate, Environment, EvalError};

pub use convergence::{
    cauchy_indices, default_eps, limit_indices, minimal_cauchy_index, minimal_limit_index, run_convergence_check,
    run_limit_mapping, Extremal, Sequence, ViewIndices, DEFAULT_INDEX_CAP,
};
pub use formula::Formula;
pub use substructure::{run_substructure_suite, witness_order};
pub use suites::{
    conjugation_cases, field_cases, nat_cases, order_cases, run_conjugation_suite, run_field_suite, run_nat_suite,
    run_order_suite,
};
pub use wyz::{run_wyz_control, WYZ_WITNESSES};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SuiteError {
    #[error("suite `{suite}` does not apply to {structure}")]
    TypeMismatch { suite: &'static str, structure: String },
    #[error("samples must be at least 1")]
    NoSamples,
    #[error("the witness-based order needs an explicit witness g with g*g = b - a")]
    WitnessRequired,
    #[error("no index h <= {cap} satisfies the condition for `{sequence}` at eps = {eps}")]
    BudgetExceeded { sequence: String, eps: String, cap: u64 },
    #[error("sequence `{0}` has no limit")]
    NoLimit(String),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Eval(#[from] EvalError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ViewName {
    Base,
    External,
    Internal,
}

impl ViewName {
    pub fn as_str(self) -> &'static str {
        match self {
            ViewName::Base => "base",
            ViewName::External => "external",
            ViewName::Internal => "internal",
        }
    }
}

impl fmt::Display for ViewName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    pub axiom: String,
    pub bindings: BTreeMap<String, String>,
    pub lhs: String,
    pub rhs: String,
    pub view: ViewName,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub structure: String,
    pub cases: u64,
    pub failures: Vec<Failure>,
    pub seed: u64,
    pub pass: bool,
}

impl CheckReport {
    pub fn new(suite: impl Into<String>, structure: impl Into<String>, seed: u64) -> Self {
        CheckReport {
            suite: suite.into(),
            structure: structure.into(),
            cases: 0,
            failures: Vec::new(),
            seed,
            pass: true,
        }
    }

    pub fn record(&mut self, failure: Failure) {
        self.failures.push(failure);
    }

    /// Sorts failures (axiom, then bindings) and settles the verdict.
    pub fn finish(mut self) -> Self {
        self.failures.sort();
        self.pass = self.failures.is_empty();
        self
    }

    pub fn failures_for(&self, axiom: &str) -> impl Iterator<Item = &Failure> {
        let axiom = axiom.to_string();
        self.failures.iter().filter(move |f| f.axiom == axiom)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Short human-readable summary.
    pub fn summary(&self) -> String {
        let mut out = format!(
            "{} on {}: {} cases, {} failures (seed {}) {}\n",
            self.suite,
            self.structure,
            self.cases,
            self.failures.len(),
            self.seed,
            if self.pass { "PASS" } else { "FAIL" }
        );
        for f in self.failures.iter().take(10) {
            let binds: Vec<String> = f.bindings.iter().map(|(k, v)| format!("{k}={v}")).collect();
            out.push_str(&format!(
                "  {} [{}] {}: {} vs {}\n",
                f.axiom,
                f.view,
                binds.join(", "),
                f.lhs,
                f.rhs
            ));
        }
        if self.failures.len() > 10 {
            out.push_str(&format!("  ... {} more\n", self.failures.len() - 10));
        }
        out
    }
}

pub(crate) fn bindings_of(env: &Environment<CRational>) -> BTreeMap<String, String> {
    env.iter().map(|(k, v)| (k.clone(), v.to_string())).collect()
}

/// Knobs shared by the sampled suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub samples: usize,
    pub seed: u64,
    /// Applied to the external view only, as a negative control.
    pub corruption: Option<Corruption>,
}

impl SuiteConfig {
    pub fn new(samples: usize, seed: u64) -> Self {
        SuiteConfig {
            samples,
            seed,
            corruption: None,
        }
    }

    pub fn corrupted(mut self, c: Corruption) -> Self {
        self.corruption = Some(c);
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expectation {
    /// True in every view.
    Holds,
    /// Whatever the base verdict is, the other views agree with it.
    Uniform,
}

#[derive(Debug, Clone)]
pub struct AxiomCase {
    pub id: &'static str,
    pub vars: &'static [&'static str],
    pub formula: Formula,
    pub expect: Expectation,
}

impl AxiomCase {
    pub(crate) fn holds(id: &'static str, vars: &'static [&'static str], formula: Formula) -> Self {
        AxiomCase {
            id,
            vars,
            formula,
            expect: Expectation::Holds,
        }
    }

    pub(crate) fn uniform(id: &'static str, vars: &'static [&'static str], formula: Formula) -> Self {
        AxiomCase {
            id,
            vars,
            formula,
            expect: Expectation::Uniform,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Field,
    Order,
    Nat,
    Conjugation,
    Substructure,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Field,
        Suite::Order,
        Suite::Nat,
        Suite::Conjugation,
        Suite::Substructure,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Field => "field",
            Suite::Order => "order",
            Suite::Nat => "nat",
            Suite::Conjugation => "conj",
            Suite::Substructure => "substructure",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }

    pub fn applies_to(self, t: NumberType) -> bool {
        use NumberType::*;
        match self {
            Suite::Field => matches!(t, Rational | Real | Complex),
            Suite::Order => t.is_ordered(),
            Suite::Nat => t == Natural,
            Suite::Conjugation | Suite::Substructure => t == Complex,
        }
    }
}

pub fn run_suite(suite: Suite, s: &StructureHandle<CRational>, cfg: SuiteConfig) -> Result<CheckReport, SuiteError> {
    match suite {
        Suite::Field => run_field_suite(s, cfg),
        Suite::Order => run_order_suite(s, cfg),
        Suite::Nat => run_nat_suite(s, cfg),
        Suite::Conjugation => run_conjugation_suite(s, cfg),
        Suite::Substructure => run_substructure_suite(s, cfg),
    }
}

pub(crate) fn require(suite: Suite, s: &StructureHandle<CRational>, cfg: &SuiteConfig) -> Result<(), SuiteError> {
    if !suite.applies_to(s.number_type()) {
        return Err(SuiteError::TypeMismatch {
            suite: suite.name(),
            structure: s.to_string(),
        });
    }
    if cfg.samples == 0 {
        return Err(SuiteError::NoSamples);
    }
    Ok(())
}

/// The three views a suite compares.
pub(crate) struct Views {
    pub handle: StructureHandle<CRational>,
    pub base: ExternalView<CRational>,
    pub external: ExternalView<CRational>,
    pub internal: InternalView<CRational>,
}

impl Views {
    pub fn new(s: &StructureHandle<CRational>, corruption: Option<Corruption>) -> Self {
        Views {
            handle: s.clone(),
            base: ExternalView::base(s.number_type()),
            external: match corruption {
                Some(c) => ExternalView::corrupted(s.clone(), c),
                None => ExternalView::new(s.clone()),
            },
            internal: InternalView::new(s.clone()),
        }
    }

    /// Verdicts of one formula in each view; evaluation errors become
    /// failures carrying the message.
    pub fn verdicts(
        &self,
        f: &Formula,
        env: &Environment<CRational>,
    ) -> [(ViewName, Result<bool, EvalError>, formula::Trace); 3] {
        let mut t = [
            formula::Trace::default(),
            formula::Trace::default(),
            formula::Trace::default(),
        ];
        let b = f.holds(env, &self.base, &mut t[0]);
        let e = f.holds(env, &self.external, &mut t[1]);
        let i = f.holds(env, &self.internal, &mut t[2]);
        let [t0, t1, t2] = t;
        [
            (ViewName::Base, b, t0),
            (ViewName::External, e, t1),
            (ViewName::Internal, i, t2),
        ]
    }

    /// Runs one case on one binding, recording failures.
    pub fn check_case(&self, case: &AxiomCase, env: &Environment<CRational>, report: &mut CheckReport) {
        report.cases += 1;
        let verdicts = self.verdicts(&case.formula, env);
        let base = verdicts[0].1.clone();
        for (view, verdict, trace) in verdicts {
            let failed = match (&verdict, case.expect) {
                (Err(_), _) => true,
                (Ok(v), Expectation::Holds) => !v,
                (Ok(v), Expectation::Uniform) => view != ViewName::Base && base.as_ref().ok() != Some(v),
            };
            if failed {
                let (lhs, rhs) = match verdict {
                    Err(e) => ("error".to_string(), e.to_string()),
                    Ok(_) => (trace.lhs, trace.rhs),
                };
                report.record(Failure {
                    axiom: case.id.to_string(),
                    bindings: bindings_of(env),
                    lhs,
                    rhs,
                    view,
                });
            }
        }
    }

    /// Checks `t^p = p·t` for every atom side of the case, recording
    /// mismatches as `<id>.homogeneity`.
    pub fn cross_check(&self, case: &AxiomCase, env: &Environment<CRational>, report: &mut CheckReport) {
        for t in case.formula.terms() {
            let Ok(base) = evaluate(t, env, &self.base) else {
                continue;
            };
            let want = self.handle.scale().clone() * base;
            let got = evaluate(t, env, &self.external);
            let ok = matches!(&got, Ok(v) if *v == want);
            if !ok {
                report.record(Failure {
                    axiom: format!("{}.homogeneity", case.id),
                    bindings: bindings_of(env),
                    lhs: match got {
                        Ok(v) => self.external.render(&v),
                        Err(e) => e.to_string(),
                    },
                    rhs: want.to_string(),
                    view: ViewName::External,
                });
            }
        }
    }
}

fn small_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    Rational::frac(rng.gen_range(-30..=30), rng.gen_range(1..=12))
}

/// Values admitted by `t`, biased towards `{0, ±1, ±1/2, p, 1/p}`.
pub(crate) fn sample_value<R: Rng + ?Sized>(rng: &mut R, s: &StructureHandle<CRational>) -> CRational {
    let t = s.number_type();
    if rng.gen_bool(0.25) {
        let p = s.scale().clone();
        let mut pool: Vec<CRational> = ["0", "1", "-1", "1/2", "-1/2"]
            .iter()
            .map(|x| x.parse().expect("literal"))
            .collect();
        pool.push(p.clone());
        pool.extend(p.inv().ok());
        pool.retain(|v| t.admits(v));
        return pool[rng.gen_range(0..pool.len())].clone();
    }
    match t {
        NumberType::Natural => CRational::from_int(rng.gen_range(0..=30)),
        NumberType::Integer => CRational::from_int(rng.gen_range(-30..=30)),
        NumberType::Rational | NumberType::Real => CRational::real(small_rational(rng)),
        NumberType::Complex => CRational::new(small_rational(rng), small_rational(rng)),
    }
}

pub(crate) fn sample_env<R: Rng + ?Sized>(
    rng: &mut R,
    s: &StructureHandle<CRational>,
    vars: &[&str],
) -> Environment<CRational> {
    vars.iter().map(|v| (*v, sample_value(rng, s))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn report_json_shape() {
        let mut r = CheckReport::new("field", "rat:r=2", 9);
        r.cases = 2;
        r.record(Failure {
            axiom: "b".into(),
            bindings: [("a".to_string(), "1".to_string())].into(),
            lhs: "1".into(),
            rhs: "2".into(),
            view: ViewName::External,
        });
        r.record(Failure {
            axiom: "a".into(),
            bindings: BTreeMap::new(),
            lhs: "x".into(),
            rhs: "y".into(),
            view: ViewName::Internal,
        });
        let r = r.finish();
        assert!(!r.pass);
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["failures"][0]["axiom"], "a");
        assert_eq!(v["failures"][1]["view"], "external");
        assert_eq!(v["failures"][1]["bindings"]["a"], "1");
        assert_eq!(v["seed"], 9);
        assert_eq!(v["pass"], false);
    }

    #[test]
    fn sampled_values_respect_domain() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for lit in ["nat:n=3", "int:j=-2", "rat:r=3/2", "cpx:c=2+1i"] {
            let s = crate::structure::parse_structure(lit).unwrap();
            for _ in 0..300 {
                assert!(s.admits(&sample_value(&mut rng, &s)));
            }
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(Suite::from_name(s.name()), Some(s));
        }
        assert!(!Suite::Nat.applies_to(NumberType::Complex));
    }
}
