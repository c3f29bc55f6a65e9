//! The `{+, −, ×/w, y÷, 0, z}` control family.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::{CRational, Rational};
use crate::structure::{NumberType, WyzStructure};
use crate::term::sample::{TermSampler, VARIABLES};
use crate::term::{eval_base, evaluate, parse_term, Environment, Term};

use super::{bindings_of, CheckReport, Failure, SuiteError, ViewName};

/// Fixed witnesses tried before random terms, smallest first. `x * 1` is the
/// identity law: it scales by `z` only when the constant `z` acts as the
/// multiplicative identity of `×/w`.
pub const WYZ_WITNESSES: [&str; 3] = ["x * 1", "x * y", "x / y"];

fn sample_env<R: Rng + ?Sized>(rng: &mut R) -> Environment<CRational> {
    VARIABLES
        .iter()
        .map(|v| {
            let mut n = 0;
            while n == 0 {
                n = rng.gen_range(-9..=9);
            }
            (*v, CRational::real(Rational::frac(n, rng.gen_range(1..=5))))
        })
        .collect()
}

/// Checks that every sampled term evaluates to `z` times its base value.
/// On failure the report carries the first failing term, in witness order,
/// under the binding key `term`.
pub fn run_wyz_control(
    w: &Rational,
    y: &Rational,
    z: &Rational,
    samples: usize,
    seed: u64,
) -> Result<CheckReport, SuiteError> {
    if samples == 0 {
        return Err(SuiteError::NoSamples);
    }
    let s = WyzStructure::new(
        CRational::real(w.clone()),
        CRational::real(y.clone()),
        CRational::real(z.clone()),
    )?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = CheckReport::new("wyz", format!("wyz:w={w},y={y},z={z}"), seed);
    let sampler = TermSampler::new(NumberType::Rational, 4);

    let mut terms: Vec<(Term<CRational>, Environment<CRational>)> = Vec::new();
    for text in WYZ_WITNESSES {
        let env = sample_env(&mut rng);
        terms.push((parse_term(text).expect("witness parses"), env));
    }
    for _ in 0..samples {
        let env = sample_env(&mut rng);
        terms.push((sampler.sample_evaluable(&mut rng, &env), env));
    }

    let mut witness = None;
    for (t, env) in &terms {
        report.cases += 1;
        let want = s.z() * &eval_base(t, env)?;
        let got = evaluate(t, env, &s);
        let ok = matches!(&got, Ok(v) if *v == want);
        if !ok && witness.is_none() {
            let mut bindings: BTreeMap<String, String> = bindings_of(env);
            bindings.insert("term".into(), t.to_string());
            witness = Some(Failure {
                axiom: "wyz.homogeneity".into(),
                bindings,
                lhs: got.map(|v| v.to_string()).unwrap_or_else(|e| e.to_string()),
                rhs: want.to_string(),
                view: ViewName::External,
            });
        }
    }
    if let Some(f) = witness {
        report.record(f);
    }
    Ok(report.finish())
}
