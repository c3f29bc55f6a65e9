use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::{CRational, Rational};
use crate::structure::{conj_scaled, member_of_base_set, BaseElement, Interpretation, StructureHandle};
use crate::term::{polynomial_term, scaled_poly_root_check};

use super::formula::{and, eq, implies, lt, not, or};
use super::{
    bindings_of, require, sample_env, AxiomCase, CheckReport, Failure, Suite, SuiteConfig, SuiteError, ViewName, Views,
};

const A: &[&str] = &["a"];
const AB: &[&str] = &["a", "b"];
const ABC: &[&str] = &["a", "b", "c"];

pub fn field_cases() -> Vec<AxiomCase> {
    vec![
        AxiomCase::holds("field.add_assoc", ABC, eq("(a + b) + c", "a + (b + c)")),
        AxiomCase::holds("field.mul_assoc", ABC, eq("(a * b) * c", "a * (b * c)")),
        AxiomCase::holds("field.add_comm", AB, eq("a + b", "b + a")),
        AxiomCase::holds("field.mul_comm", AB, eq("a * b", "b * a")),
        AxiomCase::holds("field.distributivity", ABC, eq("a * (b + c)", "a * b + a * c")),
        AxiomCase::holds("field.add_identity", A, eq("a + 0", "a")),
        AxiomCase::holds("field.mul_identity", A, eq("a * 1", "a")),
        AxiomCase::holds("field.add_inverse", A, eq("a + (0 - a)", "0")),
        AxiomCase::holds(
            "field.mul_inverse",
            A,
            implies(not(eq("a", "0")), eq("a * (1 / a)", "1")),
        ),
        AxiomCase::holds(
            "field.mul_div_inverse",
            AB,
            implies(not(eq("b", "0")), eq("(a / b) * b", "a")),
        ),
        AxiomCase::holds("field.zero_ne_one", &[], not(eq("0", "1"))),
    ]
}

fn semiring_cases() -> Vec<AxiomCase> {
    vec![
        AxiomCase::holds("nat.add_assoc", ABC, eq("(a + b) + c", "a + (b + c)")),
        AxiomCase::holds("nat.mul_assoc", ABC, eq("(a * b) * c", "a * (b * c)")),
        AxiomCase::holds("nat.add_comm", AB, eq("a + b", "b + a")),
        AxiomCase::holds("nat.mul_comm", AB, eq("a * b", "b * a")),
        AxiomCase::holds("nat.distributivity", ABC, eq("a * (b + c)", "a * b + a * c")),
        AxiomCase::holds("nat.add_identity", A, eq("a + 0", "a")),
        AxiomCase::holds("nat.mul_identity", A, eq("a * 1", "a")),
        AxiomCase::holds("nat.add_cancel", ABC, implies(eq("a + c", "b + c"), eq("a", "b"))),
    ]
}

pub fn order_cases() -> Vec<AxiomCase> {
    vec![
        AxiomCase::holds("order.irreflexive", A, not(lt("a", "a"))),
        AxiomCase::holds(
            "order.transitivity",
            ABC,
            implies(and([lt("a", "b"), lt("b", "c")]), lt("a", "c")),
        ),
        AxiomCase::holds(
            "order.totality",
            AB,
            and([
                or([lt("a", "b"), eq("a", "b"), lt("b", "a")]),
                not(and([lt("a", "b"), lt("b", "a")])),
            ]),
        ),
        AxiomCase::holds("order.translation", ABC, implies(lt("a", "b"), lt("a + c", "b + c"))),
        AxiomCase::holds(
            "order.mul_positive",
            ABC,
            implies(and([lt("a", "b"), lt("0", "c")]), lt("a * c", "b * c")),
        ),
        AxiomCase::holds("order.one_positive", &[], lt("0", "1")),
        AxiomCase::uniform("order.correspondence", AB, lt("a", "b")),
    ]
}

pub fn nat_cases() -> Vec<AxiomCase> {
    let mut cases = vec![
        AxiomCase::holds(
            "nat.discreteness",
            A,
            and([lt("0", "1"), implies(lt("0", "a"), or([lt("1", "a"), eq("1", "a")]))]),
        ),
        AxiomCase::holds("nat.zero_least", A, not(lt("a", "0"))),
        AxiomCase::holds("nat.successor", A, lt("a", "a + 1")),
    ];
    cases.extend(semiring_cases());
    cases
}

pub fn conjugation_cases() -> Vec<AxiomCase> {
    vec![
        AxiomCase::holds("complex.conj_involution", A, eq("conj(conj(a))", "a")),
        AxiomCase::holds("complex.conj_identity_real", &[], eq("conj(1)", "1")),
        AxiomCase::holds(
            "complex.conj_multiplicative",
            AB,
            eq("conj(a * b)", "conj(a) * conj(b)"),
        ),
        AxiomCase::holds("complex.conj_additive", AB, eq("conj(a + b)", "conj(a) + conj(b)")),
        AxiomCase::holds("complex.conj_norm_real", A, eq("conj(a * conj(a))", "a * conj(a)")),
    ]
}

fn run_cases(
    suite: Suite,
    cases: &[AxiomCase],
    s: &StructureHandle<CRational>,
    cfg: SuiteConfig,
    cross_check: bool,
    mut extra: impl FnMut(&mut ChaCha8Rng, &Views, &mut CheckReport),
) -> Result<CheckReport, SuiteError> {
    require(suite, s, &cfg)?;
    let views = Views::new(s, cfg.corruption);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut report = CheckReport::new(suite.name(), s.to_string(), cfg.seed);
    for _ in 0..cfg.samples {
        let env = sample_env(&mut rng, s, ABC);
        for case in cases {
            views.check_case(case, &env, &mut report);
            if cross_check {
                views.cross_check(case, &env, &mut report);
            }
        }
        extra(&mut rng, &views, &mut report);
    }
    Ok(report.finish())
}

/// Field axioms plus the `t^p = p·t` cross-check on every atom.
pub fn run_field_suite(s: &StructureHandle<CRational>, cfg: SuiteConfig) -> Result<CheckReport, SuiteError> {
    run_cases(Suite::Field, &field_cases(), s, cfg, true, |_, _, _| {})
}

pub fn run_order_suite(s: &StructureHandle<CRational>, cfg: SuiteConfig) -> Result<CheckReport, SuiteError> {
    run_cases(Suite::Order, &order_cases(), s, cfg, false, |_, _, _| {})
}

/// Arithmetic of the naturals, discreteness, and the fact that only
/// multiples of `n` are base elements of `N̄_n`.
pub fn run_nat_suite(s: &StructureHandle<CRational>, cfg: SuiteConfig) -> Result<CheckReport, SuiteError> {
    let n = s.scale().clone();
    let n_int = n.re.numer().clone();
    run_cases(Suite::Nat, &nat_cases(), s, cfg, false, |rng, views, report| {
        report.cases += 1;
        let env = sample_env(rng, s, A);
        let a = env.get("a").expect("bound").clone();
        let na = views.external.embed(&a).expect("sampled naturals embed");
        let mut check = |value: CRational, expect: bool, what: &str| {
            if member_of_base_set(&BaseElement::new(value.clone()), s) != expect {
                report.record(Failure {
                    axiom: "nat.membership".into(),
                    bindings: bindings_of(&env),
                    lhs: value.to_string(),
                    rhs: what.to_string(),
                    view: ViewName::External,
                });
            }
        };
        check(na.clone(), true, "member");
        // n·a + l for 0 < l < n is never a value of N̄_n.
        if n_int > 1.into() {
            let l = rng.gen_range(1..n_int.clone().try_into().unwrap_or(i64::MAX));
            check(na + CRational::from_int(l), false, "absent");
        }
    })
}

/// Gaussian-rational roots with small parts.
fn sample_root<R: Rng + ?Sized>(rng: &mut R) -> CRational {
    let part = |rng: &mut R| Rational::frac(rng.gen_range(-4..=4), rng.gen_range(1..=2));
    CRational::new(part(rng), part(rng))
}

/// Coefficients `b_0 … b_k` of `Π (x − r_i)`.
fn expand_roots(roots: &[CRational]) -> Vec<CRational> {
    let mut coeffs = vec![CRational::one()];
    for r in roots {
        let mut next = vec![CRational::zero(); coeffs.len() + 1];
        for (j, b) in coeffs.iter().enumerate() {
            next[j + 1] = &next[j + 1] + b;
            next[j] = &next[j] - &(r * b);
        }
        coeffs = next;
    }
    coeffs
}

/// Conjugation axioms, the correspondence `(a_c)^{*_c} ↔ c·a^*`, and root
/// mapping for polynomials of degree at most 4.
pub fn run_conjugation_suite(s: &StructureHandle<CRational>, cfg: SuiteConfig) -> Result<CheckReport, SuiteError> {
    run_cases(
        Suite::Conjugation,
        &conjugation_cases(),
        s,
        cfg,
        false,
        |rng, views, report| {
            let env = sample_env(rng, s, A);
            let a = env.get("a").expect("bound").clone();

            report.cases += 1;
            let internal = views.internal.embed(&a).and_then(|v| conj_scaled(&v));
            let want = s.scale() * &a.conj();
            let got = views.external.embed(&a).and_then(|x| views.external.conj(&x));
            let corresponds = matches!(&internal, Ok(v) if v.correspondent().base_value == want);
            if !corresponds || got.as_ref().ok() != Some(&want) {
                report.record(Failure {
                    axiom: "complex.conj_correspondent".into(),
                    bindings: bindings_of(&env),
                    lhs: got.map(|v| v.to_string()).unwrap_or_else(|e| e.to_string()),
                    rhs: want.to_string(),
                    view: if corresponds {
                        ViewName::External
                    } else {
                        ViewName::Internal
                    },
                });
            }

            report.cases += 1;
            let degree = rng.gen_range(1..=4);
            let roots: Vec<CRational> = (0..degree).map(|_| sample_root(rng)).collect();
            let coeffs = expand_roots(&roots);
            let poly = polynomial_term(&coeffs).to_string();
            let mut probe = |x: &CRational, expect_root: bool| {
                let verdict = scaled_poly_root_check(&coeffs, x, s);
                let ok = match &verdict {
                    Ok(v) => v.is_uniform() && (!expect_root || v.all()),
                    Err(_) => false,
                };
                if !ok {
                    let bindings = [("p".to_string(), poly.clone()), ("x".to_string(), x.to_string())].into();
                    report.record(Failure {
                        axiom: "complex.root_mapping".into(),
                        bindings,
                        lhs: format!("{verdict:?}"),
                        rhs: if expect_root { "root in all views" } else { "uniform" }.into(),
                        view: ViewName::External,
                    });
                }
            };
            probe(&roots[0], true);
            probe(&a, false);
        },
    )
}
