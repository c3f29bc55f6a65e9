//! Real numbers inside scaled complex structures.

use std::collections::BTreeMap;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::{CRational, Rational};
use crate::structure::{
    member_of_base_set, BaseElement, ExternalView, InternalView, Interpretation, NumberType, StructureHandle,
};
use crate::term::EquationVerdict;

use super::{require, CheckReport, Failure, Suite, SuiteConfig, SuiteError, ViewName};

/// `b` exceeds `a` by the square `g*g`, decided in each view:
///
/// * base: `a + g*·g = b`
/// * external: `ca + (cg)^{*c} ×/c (cg) = cb`
/// * internal: `a_c +_c (g_c)^{*_c} ×_c g_c = b_c`
///
/// A witness is mandatory because not every positive rational is a sum of
/// two rational squares.
pub fn witness_order(
    a: &Rational,
    b: &Rational,
    g: Option<&CRational>,
    s: &StructureHandle<CRational>,
) -> Result<EquationVerdict, SuiteError> {
    let g = g.ok_or(SuiteError::WitnessRequired)?;
    if g.is_zero() {
        return Err(SuiteError::WitnessRequired);
    }
    let a = CRational::real(a.clone());
    let b = CRational::real(b.clone());
    fn holds<I: Interpretation<CRational>>(
        view: &I,
        a: &CRational,
        b: &CRational,
        g: &CRational,
    ) -> Result<bool, SuiteError> {
        let (a, b, g) = (view.embed(a)?, view.embed(b)?, view.embed(g)?);
        let d = view.mul(&view.conj(&g)?, &g)?;
        Ok(view.equal(&view.add(&a, &d)?, &b))
    }
    Ok(EquationVerdict {
        base: holds(&ExternalView::<CRational>::base(NumberType::Complex), &a, &b, g)?,
        external: holds(&ExternalView::new(s.clone()), &a, &b, g)?,
        internal: holds(&InternalView::new(s.clone()), &a, &b, g)?,
    })
}

fn small_rational<R: Rng + ?Sized>(rng: &mut R, nonzero: bool) -> Rational {
    loop {
        let q = Rational::frac(rng.gen_range(-20..=20), rng.gen_range(1..=8));
        if !(nonzero && q.is_zero()) {
            return q;
        }
    }
}

/// Samples nonzero reals `a` and checks that `c·a` is a real base element
/// exactly when `c` is real; then samples `(a, b, g)` with `b − a = g*g` and
/// checks the witness order in all three views, in both directions.
pub fn run_substructure_suite(s: &StructureHandle<CRational>, cfg: SuiteConfig) -> Result<CheckReport, SuiteError> {
    require(Suite::Substructure, s, &cfg)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut report = CheckReport::new(Suite::Substructure.name(), s.to_string(), cfg.seed);
    let real = StructureHandle::<CRational>::base(NumberType::Real);
    let c_is_real = s.scale().is_real();
    for _ in 0..cfg.samples {
        report.cases += 1;
        let a = small_rational(&mut rng, true);
        let ca = s.scale().scale(&a);
        if member_of_base_set(&BaseElement::new(ca.clone()), &real) != c_is_real {
            report.record(Failure {
                axiom: "substructure.disjoint".into(),
                bindings: BTreeMap::from([("a".into(), a.to_string())]),
                lhs: ca.to_string(),
                rhs: if c_is_real {
                    "real base element"
                } else {
                    "not a real base element"
                }
                .into(),
                view: ViewName::External,
            });
        }

        report.cases += 1;
        let a = small_rational(&mut rng, false);
        let g = loop {
            let g = CRational::new(small_rational(&mut rng, false), small_rational(&mut rng, false));
            if !g.is_zero() {
                break g;
            }
        };
        let b = &a + &g.abs_squared();
        let bindings = BTreeMap::from([
            ("a".into(), a.to_string()),
            ("b".into(), b.to_string()),
            ("g".into(), g.to_string()),
        ]);
        let forward = witness_order(&a, &b, Some(&g), s)?;
        let backward = witness_order(&b, &a, Some(&g), s)?;
        let sign_order = a < b;
        let checks = [
            (ViewName::Base, forward.base, !backward.base),
            (ViewName::External, forward.external, !backward.external),
            (ViewName::Internal, forward.internal, !backward.internal),
        ];
        for (view, fwd, bwd) in checks {
            if !(fwd && bwd && sign_order) {
                report.record(Failure {
                    axiom: "substructure.witness_order".into(),
                    bindings: bindings.clone(),
                    lhs: format!("a<b: {fwd}, b<a: {}", !bwd),
                    rhs: format!("a<b: true, b<a: false (sign order {sign_order})"),
                    view,
                });
            }
        }
    }
    Ok(report.finish())
}
