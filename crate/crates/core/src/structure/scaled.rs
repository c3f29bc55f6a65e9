use std::cmp::Ordering;

use num_complex::Complex64;

use crate::exact::CRational;
use crate::scalar::{self, Scalar};

use super::{NumberType, StructureError, StructureHandle};

/// A value `a_p` as seen inside its owning structure `S̄_p`.
///
/// Only the internal value is stored; the base-set element it names is
/// derived on demand as `p·a`.
#[derive(Debug, Clone, PartialEq)]
pub struct ScaledValue<T> {
    internal: T,
    owner: StructureHandle<T>,
}

/// An element of the base set, identified by its value in the scale-1
/// structure.
#[derive(Debug, Clone, PartialEq)]
pub struct BaseElement<T> {
    pub base_value: T,
}

impl<T> BaseElement<T> {
    pub fn new(base_value: T) -> Self {
        BaseElement { base_value }
    }
}

impl<T: Scalar> ScaledValue<T> {
    pub fn internal(&self) -> &T {
        &self.internal
    }

    pub fn owner(&self) -> &StructureHandle<T> {
        &self.owner
    }

    pub fn correspondent(&self) -> BaseElement<T> {
        correspondent(self)
    }

    /// Construction without domain checks, for values produced by closed
    /// operations.
    pub(crate) fn raw(internal: T, owner: &StructureHandle<T>) -> Self {
        ScaledValue {
            internal,
            owner: owner.clone(),
        }
    }
}

/// The base element `p·a` named by `a_p`.
pub fn correspondent<T: Scalar>(v: &ScaledValue<T>) -> BaseElement<T> {
    BaseElement::new(scalar::mul(v.owner.scale(), &v.internal))
}

/// `a_p`: the value of `target` that is the same as `a` is in the base
/// structure.
pub fn same_value<T: Scalar>(a: &T, target: &StructureHandle<T>) -> Result<ScaledValue<T>, StructureError> {
    target.check_value(a)?;
    Ok(ScaledValue::raw(a.clone(), target))
}

pub fn member_of_base_set<T: Scalar>(e: &BaseElement<T>, s: &StructureHandle<T>) -> bool {
    match e.base_value.try_div(s.scale()) {
        Ok(internal) => s.admits(&internal),
        Err(_) => false,
    }
}

/// The internal value that the base element `e` carries in `s`.
pub fn view_value<T: Scalar>(e: &BaseElement<T>, s: &StructureHandle<T>) -> Result<ScaledValue<T>, StructureError> {
    let internal = e.base_value.try_div(s.scale())?;
    if !s.admits(&internal) {
        return Err(StructureError::NotInBaseSet {
            value: e.base_value.to_string(),
            structure: s.to_string(),
        });
    }
    Ok(ScaledValue::raw(internal, s))
}

fn same_owner<'a, T: Scalar>(
    a: &'a ScaledValue<T>,
    b: &ScaledValue<T>,
) -> Result<&'a StructureHandle<T>, StructureError> {
    if a.owner != b.owner {
        return Err(StructureError::StructureMismatch {
            left: a.owner.to_string(),
            right: b.owner.to_string(),
        });
    }
    Ok(&a.owner)
}

/// `a_p +_p b_p`; externally `+_p = +`.
pub fn add_scaled<T: Scalar>(a: &ScaledValue<T>, b: &ScaledValue<T>) -> Result<ScaledValue<T>, StructureError> {
    let owner = same_owner(a, b)?;
    Ok(ScaledValue::raw(scalar::add(&a.internal, &b.internal), owner))
}

/// `a_p -_p b_p`. Partial on natural-number structures.
pub fn sub_scaled<T: Scalar>(a: &ScaledValue<T>, b: &ScaledValue<T>) -> Result<ScaledValue<T>, StructureError> {
    let owner = same_owner(a, b)?;
    let diff = scalar::sub(&a.internal, &b.internal);
    owner.check_value(&diff)?;
    Ok(ScaledValue::raw(diff, owner))
}

/// `a_p ×_p b_p`; externally `×_p = ×/p`.
pub fn mul_scaled<T: Scalar>(a: &ScaledValue<T>, b: &ScaledValue<T>) -> Result<ScaledValue<T>, StructureError> {
    let owner = same_owner(a, b)?;
    Ok(ScaledValue::raw(scalar::mul(&a.internal, &b.internal), owner))
}

/// `a_p ÷_p b_p`; externally `÷_p = p÷`. Only in field structures.
pub fn div_scaled<T: Scalar>(a: &ScaledValue<T>, b: &ScaledValue<T>) -> Result<ScaledValue<T>, StructureError> {
    let owner = same_owner(a, b)?;
    if !owner.number_type().has_division() {
        return Err(owner.unsupported("division"));
    }
    Ok(ScaledValue::raw(a.internal.try_div(&b.internal)?, owner))
}

/// `a_p <_p b_p`, decided on internal values. Seen from outside this is `<`
/// for `p > 0` and `>` for `p < 0`.
pub fn lt_scaled<T: Scalar>(a: &ScaledValue<T>, b: &ScaledValue<T>) -> Result<bool, StructureError> {
    let owner = same_owner(a, b)?;
    if !owner.number_type().is_ordered() {
        return Err(owner.unsupported("order"));
    }
    a.internal
        .real_cmp(&b.internal)
        .map(|o| o == Ordering::Less)
        .ok_or_else(|| owner.unsupported("order"))
}

/// `(a_c)^{*_c}`: internally the conjugate of `a`, so its correspondent is
/// `c·a^*` (not `c^*·a^*`).
pub fn conj_scaled<T: Scalar>(a: &ScaledValue<T>) -> Result<ScaledValue<T>, StructureError> {
    if a.owner.number_type() != NumberType::Complex {
        return Err(a.owner.unsupported("conjugation"));
    }
    Ok(ScaledValue::raw(a.internal.conj(), &a.owner))
}

/// Correspondent of `(a_c)^{*_c}` computed through the polar form
/// `c = |c|e^{iφ}` as `e^{2iφ}·c^*·a^*`, in binary64.
pub fn conj_phase_form(a: &ScaledValue<CRational>) -> Result<Complex64, StructureError> {
    if a.owner.number_type() != NumberType::Complex {
        return Err(a.owner.unsupported("conjugation"));
    }
    let c = a.owner.scale().to_complex64()?;
    let x = a.internal.to_complex64()?;
    let phase = Complex64::from_polar(1.0, 2.0 * c.arg());
    Ok(phase * c.conj() * x.conj())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::make_structure;
    use num_traits::{One, Zero};

    fn c(s: &str) -> CRational {
        s.parse().unwrap()
    }

    fn h(t: NumberType, p: &str) -> StructureHandle<CRational> {
        make_structure(t, c(p)).unwrap()
    }

    fn v(a: &str, s: &StructureHandle<CRational>) -> ScaledValue<CRational> {
        same_value(&c(a), s).unwrap()
    }

    #[test]
    fn identity_corresponds_to_scale() {
        let s = h(NumberType::Rational, "7/3");
        assert_eq!(correspondent(&v("1", &s)).base_value, c("7/3"));
    }

    #[test]
    fn vacuum_is_fixed() {
        for p in ["1", "-3", "5/2"] {
            let s = h(NumberType::Rational, p);
            assert!(correspondent(&v("0", &s)).base_value.is_zero());
        }
        let s = h(NumberType::Complex, "2+1i");
        assert!(correspondent(&v("0", &s)).base_value.is_zero());
        assert!(view_value(&BaseElement::new(CRational::zero()), &s)
            .unwrap()
            .internal()
            .is_zero());
    }

    #[test]
    fn correspondent_of_ten_in_three() {
        let s = h(NumberType::Natural, "3");
        assert_eq!(correspondent(&v("10", &s)).base_value, c("30"));
    }

    #[test]
    fn sameness_differs_from_correspondence() {
        let s = h(NumberType::Rational, "3/2");
        let seven = v("7", &s);
        assert_eq!(seven.internal(), &c("7"));
        assert_eq!(correspondent(&seven).base_value, c("21/2"));
        let base = h(NumberType::Rational, "1");
        assert_eq!(correspondent(&v("7", &base)).base_value, c("7"));
    }

    #[test]
    fn same_value_domain() {
        let s = h(NumberType::Natural, "4");
        assert_eq!(correspondent(&v("1", &s)).base_value, c("4"));
        assert!(matches!(
            same_value(&c("1/2"), &s),
            Err(StructureError::DomainError { .. })
        ));
        assert!(same_value(&c("-1"), &s).is_err());
        assert!(same_value(&c("1/2"), &h(NumberType::Integer, "2")).is_err());
    }

    #[test]
    fn base_set_membership() {
        let n3 = h(NumberType::Natural, "3");
        assert!(member_of_base_set(&BaseElement::new(c("6")), &n3));
        assert!(!member_of_base_set(&BaseElement::new(c("7")), &n3));
        assert!(!member_of_base_set(&BaseElement::new(c("-3")), &n3));
        let i = h(NumberType::Integer, "-2");
        assert!(member_of_base_set(&BaseElement::new(c("-4")), &i));
        assert!(member_of_base_set(&BaseElement::new(c("4")), &i));
        let ra = h(NumberType::Rational, "3/7");
        assert!(member_of_base_set(&BaseElement::new(c("11/13")), &ra));
    }

    #[test]
    fn view_value_inverts_correspondence() {
        let n = h(NumberType::Natural, "5");
        let e = BaseElement::new(c("15"));
        assert_eq!(view_value(&e, &n).unwrap().internal(), &c("3"));
        // 5·3 + 2 lies strictly between multiples of 5.
        assert!(matches!(
            view_value(&BaseElement::new(c("17")), &n),
            Err(StructureError::NotInBaseSet { .. })
        ));
    }

    #[test]
    fn addition_both_views() {
        let s = h(NumberType::Rational, "3/2");
        let sum = add_scaled(&v("2", &s), &v("3", &s)).unwrap();
        assert_eq!(sum.internal(), &c("5"));
        assert_eq!(
            correspondent(&sum).base_value,
            &correspondent(&v("2", &s)).base_value + &correspondent(&v("3", &s)).base_value
        );
        assert_eq!(add_scaled(&v("2", &s), &v("0", &s)).unwrap(), v("2", &s));
    }

    #[test]
    fn mismatched_owners_rejected() {
        let a = v("1", &h(NumberType::Rational, "2"));
        let b = v("1", &h(NumberType::Rational, "3"));
        assert!(matches!(
            add_scaled(&a, &b),
            Err(StructureError::StructureMismatch { .. })
        ));
        assert!(mul_scaled(&a, &b).is_err());
        assert!(lt_scaled(&a, &b).is_err());
    }

    #[test]
    fn natural_subtraction_is_partial() {
        let n = h(NumberType::Natural, "2");
        assert_eq!(sub_scaled(&v("5", &n), &v("3", &n)).unwrap().internal(), &c("2"));
        assert!(matches!(
            sub_scaled(&v("3", &n), &v("5", &n)),
            Err(StructureError::DomainError { .. })
        ));
    }

    #[test]
    fn multiplication_external_identity() {
        let s = h(NumberType::Natural, "3");
        let prod = mul_scaled(&v("2", &s), &v("5", &s)).unwrap();
        assert_eq!(prod.internal(), &c("10"));
        // (6 × 15) / 3
        assert_eq!(correspondent(&prod).base_value, c("30"));
        let one = v("1", &s);
        let a = v("4", &s);
        assert_eq!(mul_scaled(&a, &one).unwrap(), a);
        assert!(mul_scaled(&a, &v("0", &s)).unwrap().internal().is_zero());
    }

    #[test]
    fn division_external_identity() {
        let s = h(NumberType::Rational, "2");
        let q = div_scaled(&v("6", &s), &v("3", &s)).unwrap();
        assert_eq!(q.internal(), &c("2"));
        assert_eq!(correspondent(&q).base_value, c("4"));
        let a = v("5/7", &s);
        assert_eq!(div_scaled(&a, &a).unwrap().internal(), &CRational::one());
        assert!(matches!(
            div_scaled(&a, &v("0", &s)),
            Err(StructureError::Arith(crate::exact::ArithError::DivisionByZero { .. }))
        ));
        let n = h(NumberType::Natural, "2");
        assert!(matches!(
            div_scaled(&v("4", &n), &v("2", &n)),
            Err(StructureError::UnsupportedOperation { .. })
        ));
    }

    #[test]
    fn reflected_order() {
        let s = h(NumberType::Integer, "-1");
        let zero = v("0", &s);
        let one = v("1", &s);
        assert!(lt_scaled(&zero, &one).unwrap());
        // Seen from outside: 0 > -1.
        let (z, o) = (correspondent(&zero).base_value, correspondent(&one).base_value);
        assert!(z.re > o.re);
        let cpx = h(NumberType::Complex, "1i");
        assert!(matches!(
            lt_scaled(&v("0", &cpx), &v("1", &cpx)),
            Err(StructureError::UnsupportedOperation { .. })
        ));
    }

    #[test]
    fn conjugation_rules() {
        let s = h(NumberType::Complex, "2+1i");
        let one = v("1", &s);
        assert_eq!(conj_scaled(&one).unwrap(), one);
        // (c_c^n)^{*_c} corresponds to c·(c^n)^*
        let cc = c("2+1i");
        let cn = &(&cc * &cc) * &cc;
        let conj = conj_scaled(&v(&cn.to_string(), &s)).unwrap();
        assert_eq!(correspondent(&conj).base_value, &cc * &cn.conj());
        let a = v("3/4-5i", &s);
        assert_eq!(conj_scaled(&conj_scaled(&a).unwrap()).unwrap(), a);
        assert!(conj_scaled(&v("1", &h(NumberType::Real, "2"))).is_err());
    }

    #[test]
    fn phase_form_special_cases() {
        let a = "3/2-1/3i";
        let unit = h(NumberType::Complex, "1");
        let got = conj_phase_form(&v(a, &unit)).unwrap();
        let want = c(a).conj().to_complex64().unwrap();
        assert!((got - want).norm() < 1e-15);

        let s = h(NumberType::Complex, "1i");
        let got = conj_phase_form(&v(a, &s)).unwrap();
        let exact = correspondent(&conj_scaled(&v(a, &s)).unwrap()).base_value;
        let exact = exact.to_complex64().unwrap();
        assert!((got - exact).norm() / exact.norm() < 1e-12);
    }
}
