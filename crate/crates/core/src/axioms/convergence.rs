//! Cauchy and limit conditions on explicit sequences, decided separately in
//! each view.
//!
//! A tail condition "for all j, m > h: |a_j − a_m| < ε" is settled by one
//! extremal pair: the pair realizing the supremum of the tail gaps. When the
//! supremum is attained the view tests `d < ε`; when it is only approached
//! the view tests `not (ε < d)`. Each view uses its own subtraction, order
//! and absolute value, so a reflected structure works with `−|·|`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::exact::Rational;
use crate::structure::{
    make_structure, ExternalView, InternalView, Interpretation, NumberType, StructureError, StructureHandle,
};

use super::{CheckReport, Failure, SuiteError, ViewName};

pub const DEFAULT_INDEX_CAP: u64 = 1_000_000;

/// `{1/10, 1/1000, 1/10^6}`.
pub fn default_eps() -> Vec<Rational> {
    [10, 1000, 1_000_000]
        .into_iter()
        .map(|d| Rational::frac(1, d))
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub enum Sequence {
    /// `1/j`
    Harmonic,
    /// `1 + 1/j`
    OnePlusHarmonic,
    /// `1 + (−1/2)^j`
    AltGeometric,
    /// `j`, divergent
    Identity,
    Constant(Rational),
}

/// The pair of values bounding a tail, and whether the bound is attained.
#[derive(Debug, Clone, PartialEq)]
pub struct Extremal {
    pub x: Rational,
    pub y: Rational,
    pub attained: bool,
}

impl Sequence {
    pub fn name(&self) -> String {
        match self {
            Sequence::Harmonic => "harmonic".into(),
            Sequence::OnePlusHarmonic => "one-plus-harmonic".into(),
            Sequence::AltGeometric => "alt-geometric".into(),
            Sequence::Identity => "identity".into(),
            Sequence::Constant(q) => format!("constant:{q}"),
        }
    }

    /// `a_j` for `j >= 1`.
    pub fn term(&self, j: u64) -> Rational {
        let j_r = Rational::from_integer(j);
        match self {
            Sequence::Harmonic => j_r.recip().expect("j >= 1"),
            Sequence::OnePlusHarmonic => Rational::one() + j_r.recip().expect("j >= 1"),
            Sequence::AltGeometric => Rational::one() + Rational::frac(-1, 2).pow(j as i32).expect("nonzero base"),
            Sequence::Identity => j_r,
            Sequence::Constant(q) => q.clone(),
        }
    }

    pub fn limit(&self) -> Option<Rational> {
        match self {
            Sequence::Harmonic => Some(Rational::zero()),
            Sequence::OnePlusHarmonic | Sequence::AltGeometric => Some(Rational::one()),
            Sequence::Identity => None,
            Sequence::Constant(q) => Some(q.clone()),
        }
    }

    /// The pair realizing `sup_{j,m>h} |a_j − a_m|`. For the divergent
    /// sequence the supremum is infinite and the pair returned has a gap
    /// exceeding `eps`.
    pub fn cauchy_extremal(&self, h: u64, eps: &Rational) -> Extremal {
        match self {
            Sequence::Harmonic | Sequence::OnePlusHarmonic => Extremal {
                x: self.term(h + 1),
                y: self.limit().expect("convergent"),
                attained: false,
            },
            Sequence::AltGeometric => Extremal {
                x: self.term(h + 1),
                y: self.term(h + 2),
                attained: true,
            },
            Sequence::Identity => {
                let gap = eps.floor() + 1;
                let m = h + 1 + u64::try_from(gap).unwrap_or(u64::MAX / 2);
                Extremal {
                    x: self.term(h + 1),
                    y: self.term(m),
                    attained: true,
                }
            }
            Sequence::Constant(q) => Extremal {
                x: q.clone(),
                y: q.clone(),
                attained: true,
            },
        }
    }

    /// The pair realizing `sup_{j>h} |a_j − μ|`.
    pub fn limit_extremal(&self, h: u64) -> Option<Extremal> {
        let mu = self.limit()?;
        Some(Extremal {
            x: self.term(h + 1),
            y: mu,
            attained: true,
        })
    }
}

fn condition<I: Interpretation<Rational>>(view: &I, e: &Extremal, eps: &Rational) -> Result<bool, StructureError> {
    let x = view.embed(&e.x)?;
    let y = view.embed(&e.y)?;
    let eps = view.embed(eps)?;
    let d = view.abs(&view.sub(&x, &y)?)?;
    if e.attained {
        view.lt(&d, &eps)
    } else {
        Ok(!view.lt(&eps, &d)?)
    }
}

/// Smallest `h <= cap` for which `holds(h)`, given that `holds` is monotone.
fn minimal_index(
    cap: u64,
    mut holds: impl FnMut(u64) -> Result<bool, StructureError>,
) -> Result<Option<u64>, StructureError> {
    if holds(0)? {
        return Ok(Some(0));
    }
    let mut lo = 0;
    let mut hi = 1;
    loop {
        if hi >= cap {
            if !holds(cap)? {
                return Ok(None);
            }
            hi = cap;
            break;
        }
        if holds(hi)? {
            break;
        }
        lo = hi;
        hi *= 2;
    }
    // holds(lo) is false, holds(hi) is true
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if holds(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(Some(hi))
}

pub fn minimal_cauchy_index<I: Interpretation<Rational>>(
    seq: &Sequence,
    view: &I,
    eps: &Rational,
    cap: u64,
) -> Result<Option<u64>, StructureError> {
    minimal_index(cap, |h| condition(view, &seq.cauchy_extremal(h, eps), eps))
}

pub fn minimal_limit_index<I: Interpretation<Rational>>(
    seq: &Sequence,
    view: &I,
    eps: &Rational,
    cap: u64,
) -> Result<Option<u64>, SuiteError> {
    if seq.limit().is_none() {
        return Err(SuiteError::NoLimit(seq.name()));
    }
    Ok(minimal_index(cap, |h| {
        condition(view, &seq.limit_extremal(h).expect("has limit"), eps)
    })?)
}

/// Minimal indices per view; `None` means the cap was exceeded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ViewIndices {
    pub base: Option<u64>,
    pub external: Option<u64>,
    pub internal: Option<u64>,
}

impl ViewIndices {
    pub fn is_uniform(&self) -> bool {
        self.base == self.external && self.external == self.internal
    }

    fn views(&self) -> [(ViewName, Option<u64>); 3] {
        [
            (ViewName::Base, self.base),
            (ViewName::External, self.external),
            (ViewName::Internal, self.internal),
        ]
    }
}

fn real_structure(r: &Rational) -> Result<StructureHandle<Rational>, SuiteError> {
    Ok(make_structure(NumberType::Real, r.clone())?)
}

pub fn cauchy_indices(seq: &Sequence, r: &Rational, eps: &Rational, cap: u64) -> Result<ViewIndices, SuiteError> {
    let s = real_structure(r)?;
    Ok(ViewIndices {
        base: minimal_cauchy_index(seq, &ExternalView::<Rational>::base(NumberType::Real), eps, cap)?,
        external: minimal_cauchy_index(seq, &ExternalView::new(s.clone()), eps, cap)?,
        internal: minimal_cauchy_index(seq, &InternalView::new(s), eps, cap)?,
    })
}

pub fn limit_indices(seq: &Sequence, r: &Rational, eps: &Rational, cap: u64) -> Result<ViewIndices, SuiteError> {
    let s = real_structure(r)?;
    Ok(ViewIndices {
        base: minimal_limit_index(seq, &ExternalView::<Rational>::base(NumberType::Real), eps, cap)?,
        external: minimal_limit_index(seq, &ExternalView::new(s.clone()), eps, cap)?,
        internal: minimal_limit_index(seq, &InternalView::new(s), eps, cap)?,
    })
}

fn render(h: Option<u64>) -> String {
    h.map_or_else(|| "budget exceeded".to_string(), |h| h.to_string())
}

fn compare_views(report: &mut CheckReport, axiom: &str, seq: &Sequence, eps: &Rational, idx: ViewIndices) {
    report.cases += 1;
    for (view, h) in idx.views().into_iter().skip(1) {
        if h != idx.base {
            report.record(Failure {
                axiom: axiom.into(),
                bindings: BTreeMap::from([("eps".into(), eps.to_string()), ("sequence".into(), seq.name())]),
                lhs: render(h),
                rhs: render(idx.base),
                view,
            });
        }
    }
}

/// Checks that the minimal Cauchy index for `ε` is the same in the base
/// structure and in `R̄_r` (where `ε_r` corresponds to `rε`). A sequence that
/// exceeds the cap in every view yields `BudgetExceeded`.
pub fn run_convergence_check(
    seq: &Sequence,
    r: &Rational,
    eps_schedule: &[Rational],
    cap: u64,
) -> Result<CheckReport, SuiteError> {
    let mut report = CheckReport::new("convergence", real_structure(r)?.to_string(), 0);
    for eps in eps_schedule {
        let idx = cauchy_indices(seq, r, eps, cap)?;
        if idx.views().iter().all(|(_, h)| h.is_none()) {
            return Err(SuiteError::BudgetExceeded {
                sequence: seq.name(),
                eps: eps.to_string(),
                cap,
            });
        }
        compare_views(&mut report, "convergence.cauchy_index", seq, eps, idx);
    }
    Ok(report.finish())
}

/// Checks `lim a_j = μ` in the base structure against the scaled limit
/// condition, and that the scaled limit corresponds to `rμ`.
pub fn run_limit_mapping(
    seq: &Sequence,
    r: &Rational,
    eps_schedule: &[Rational],
    cap: u64,
) -> Result<CheckReport, SuiteError> {
    let s = real_structure(r)?;
    let mu = seq.limit().ok_or_else(|| SuiteError::NoLimit(seq.name()))?;
    let mut report = CheckReport::new("limit", s.to_string(), 0);
    for eps in eps_schedule {
        let idx = limit_indices(seq, r, eps, cap)?;
        if idx.views().iter().all(|(_, h)| h.is_none()) {
            return Err(SuiteError::BudgetExceeded {
                sequence: seq.name(),
                eps: eps.to_string(),
                cap,
            });
        }
        compare_views(&mut report, "limit.index", seq, eps, idx);
    }
    report.cases += 1;
    let internal = InternalView::new(s.clone()).embed(&mu)?;
    let want = r * &mu;
    if internal.correspondent().base_value != want {
        report.record(Failure {
            axiom: "limit.correspondent".into(),
            bindings: BTreeMap::from([("sequence".into(), seq.name())]),
            lhs: internal.correspondent().base_value.to_string(),
            rhs: want.to_string(),
            view: ViewName::Internal,
        });
    }
    Ok(report.finish())
}
