//! The three ways of evaluating inside one structure.
//!
//! * the base structure `S̄` works on plain values;
//! * the external view `S̄^p` works on base values `p·a` with the compensated
//!   operations `+, −, ×/p, p÷, c(·)^*`;
//! * the internal view `S̄_p` works on [`ScaledValue`]s with `+_p, ×_p, …`.
//!
//! Terms and axiom formulas are evaluated against any [`Interpretation`].

use std::cmp::Ordering;
use std::fmt::Debug;

use crate::scalar::{self, Scalar};

use super::scaled::{self, ScaledValue};
use super::{NumberType, StructureError, StructureHandle};

pub trait Interpretation<T: Scalar> {
    type Value: Clone + Debug;

    /// The value of this view that is the same as `a` is in the base
    /// structure (`a ↦ p·a` externally, `a ↦ a_p` internally).
    fn embed(&self, a: &T) -> Result<Self::Value, StructureError>;

    fn zero(&self) -> Result<Self::Value, StructureError> {
        self.embed(&T::zero())
    }

    /// The multiplicative identity of the view.
    fn one(&self) -> Result<Self::Value, StructureError> {
        self.embed(&T::one())
    }

    fn add(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value, StructureError>;
    fn sub(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value, StructureError>;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value, StructureError>;
    fn div(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value, StructureError>;
    fn conj(&self, a: &Self::Value) -> Result<Self::Value, StructureError>;
    fn lt(&self, a: &Self::Value, b: &Self::Value) -> Result<bool, StructureError>;
    fn equal(&self, a: &Self::Value, b: &Self::Value) -> bool;

    /// The base-structure value of the element `v` names.
    fn base_value(&self, v: &Self::Value) -> T;

    fn render(&self, v: &Self::Value) -> String;

    /// Absolute value built from the view's own order and subtraction.
    fn abs(&self, a: &Self::Value) -> Result<Self::Value, StructureError> {
        let zero = self.zero()?;
        if self.lt(a, &zero)? {
            self.sub(&zero, a)
        } else {
            Ok(a.clone())
        }
    }
}

/// Plain carrier arithmetic with no signature restrictions: the unscaled
/// field that terms are ultimately compared in.
#[derive(Debug, Clone, Copy, Default)]
pub struct BaseField;

impl BaseField {
    fn unsupported(op: &'static str) -> StructureError {
        StructureError::UnsupportedOperation {
            op,
            structure: "base field".into(),
        }
    }
}

impl<T: Scalar> Interpretation<T> for BaseField {
    type Value = T;

    fn embed(&self, a: &T) -> Result<T, StructureError> {
        Ok(a.clone())
    }

    fn add(&self, a: &T, b: &T) -> Result<T, StructureError> {
        Ok(scalar::add(a, b))
    }

    fn sub(&self, a: &T, b: &T) -> Result<T, StructureError> {
        Ok(scalar::sub(a, b))
    }

    fn mul(&self, a: &T, b: &T) -> Result<T, StructureError> {
        Ok(scalar::mul(a, b))
    }

    fn div(&self, a: &T, b: &T) -> Result<T, StructureError> {
        Ok(a.try_div(b)?)
    }

    fn conj(&self, a: &T) -> Result<T, StructureError> {
        Ok(a.conj())
    }

    fn lt(&self, a: &T, b: &T) -> Result<bool, StructureError> {
        a.real_cmp(b)
            .map(|o| o == Ordering::Less)
            .ok_or_else(|| Self::unsupported("order on non-real values"))
    }

    fn equal(&self, a: &T, b: &T) -> bool {
        a == b
    }

    fn base_value(&self, v: &T) -> T {
        v.clone()
    }

    fn render(&self, v: &T) -> String {
        v.to_string()
    }
}

/// Deliberate defects used as negative controls.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Corruption {
    /// `÷_p` rendered as plain `÷` instead of `p÷`.
    UnscaledDivision,
    /// The external order kept as `<` even when `p < 0`.
    UnflippedOrder,
    /// `(a_c)^{*_c}` rendered as `c^*·a^*` instead of `c·a^*`.
    ConjugateScale,
}

impl Corruption {
    pub fn name(self) -> &'static str {
        match self {
            Corruption::UnscaledDivision => "unscaled-div",
            Corruption::UnflippedOrder => "unflipped-order",
            Corruption::ConjugateScale => "conj-scale",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Some(match s {
            "unscaled-div" => Corruption::UnscaledDivision,
            "unflipped-order" => Corruption::UnflippedOrder,
            "conj-scale" => Corruption::ConjugateScale,
            _ => return None,
        })
    }
}

/// `S̄^p`: the structure written with base values and compensated operations.
/// With scale 1 this is the base structure itself.
#[derive(Debug, Clone)]
pub struct ExternalView<T> {
    handle: StructureHandle<T>,
    corruption: Option<Corruption>,
}

impl<T: Scalar> ExternalView<T> {
    pub fn new(handle: StructureHandle<T>) -> Self {
        ExternalView {
            handle,
            corruption: None,
        }
    }

    /// The base structure `S̄` of a number type.
    pub fn base(number_type: NumberType) -> Self {
        Self::new(StructureHandle::base(number_type))
    }

    pub fn corrupted(handle: StructureHandle<T>, corruption: Corruption) -> Self {
        ExternalView {
            handle,
            corruption: Some(corruption),
        }
    }

    pub fn handle(&self) -> &StructureHandle<T> {
        &self.handle
    }

    pub fn corruption(&self) -> Option<Corruption> {
        self.corruption
    }

    fn p(&self) -> &T {
        self.handle.scale()
    }
}

impl<T: Scalar> Interpretation<T> for ExternalView<T> {
    type Value = T;

    fn embed(&self, a: &T) -> Result<T, StructureError> {
        self.handle.check_value(a)?;
        Ok(scalar::mul(self.p(), a))
    }

    fn add(&self, a: &T, b: &T) -> Result<T, StructureError> {
        Ok(scalar::add(a, b))
    }

    fn sub(&self, a: &T, b: &T) -> Result<T, StructureError> {
        if !self.handle.number_type().has_subtraction() {
            return Err(self.handle.unsupported("subtraction"));
        }
        Ok(scalar::sub(a, b))
    }

    fn mul(&self, a: &T, b: &T) -> Result<T, StructureError> {
        Ok(scalar::mul(a, b).try_div(self.p())?)
    }

    fn div(&self, a: &T, b: &T) -> Result<T, StructureError> {
        if !self.handle.number_type().has_division() {
            return Err(self.handle.unsupported("division"));
        }
        let q = a.try_div(b)?;
        Ok(match self.corruption {
            Some(Corruption::UnscaledDivision) => q,
            _ => scalar::mul(self.p(), &q),
        })
    }

    fn conj(&self, a: &T) -> Result<T, StructureError> {
        if self.handle.number_type() != NumberType::Complex {
            return Err(self.handle.unsupported("conjugation"));
        }
        let inner = a.try_div(self.p())?.conj();
        let factor = match self.corruption {
            Some(Corruption::ConjugateScale) => self.p().conj(),
            _ => self.p().clone(),
        };
        Ok(scalar::mul(&factor, &inner))
    }

    fn lt(&self, a: &T, b: &T) -> Result<bool, StructureError> {
        if !self.handle.number_type().is_ordered() {
            return Err(self.handle.unsupported("order"));
        }
        let order = a.real_cmp(b).ok_or_else(|| self.handle.unsupported("order"))?;
        let flipped =
            self.handle.scale_sign() == Some(Ordering::Less) && self.corruption != Some(Corruption::UnflippedOrder);
        Ok(if flipped {
            order == Ordering::Greater
        } else {
            order == Ordering::Less
        })
    }

    fn equal(&self, a: &T, b: &T) -> bool {
        a == b
    }

    fn base_value(&self, v: &T) -> T {
        v.clone()
    }

    fn render(&self, v: &T) -> String {
        v.to_string()
    }
}

/// `S̄_p`: evaluation with the structure's own operations on internal values.
#[derive(Debug, Clone)]
pub struct InternalView<T> {
    handle: StructureHandle<T>,
}

impl<T: Scalar> InternalView<T> {
    pub fn new(handle: StructureHandle<T>) -> Self {
        InternalView { handle }
    }

    pub fn handle(&self) -> &StructureHandle<T> {
        &self.handle
    }
}

impl<T: Scalar> Interpretation<T> for InternalView<T> {
    type Value = ScaledValue<T>;

    fn embed(&self, a: &T) -> Result<ScaledValue<T>, StructureError> {
        scaled::same_value(a, &self.handle)
    }

    fn add(&self, a: &ScaledValue<T>, b: &ScaledValue<T>) -> Result<ScaledValue<T>, StructureError> {
        scaled::add_scaled(a, b)
    }

    fn sub(&self, a: &ScaledValue<T>, b: &ScaledValue<T>) -> Result<ScaledValue<T>, StructureError> {
        // Terms over natural numbers have no subtraction at all; the partial
        // operation is only available through `sub_scaled` directly.
        if !self.handle.number_type().has_subtraction() {
            return Err(self.handle.unsupported("subtraction"));
        }
        scaled::sub_scaled(a, b)
    }

    fn mul(&self, a: &ScaledValue<T>, b: &ScaledValue<T>) -> Result<ScaledValue<T>, StructureError> {
        scaled::mul_scaled(a, b)
    }

    fn div(&self, a: &ScaledValue<T>, b: &ScaledValue<T>) -> Result<ScaledValue<T>, StructureError> {
        scaled::div_scaled(a, b)
    }

    fn conj(&self, a: &ScaledValue<T>) -> Result<ScaledValue<T>, StructureError> {
        scaled::conj_scaled(a)
    }

    fn lt(&self, a: &ScaledValue<T>, b: &ScaledValue<T>) -> Result<bool, StructureError> {
        scaled::lt_scaled(a, b)
    }

    fn equal(&self, a: &ScaledValue<T>, b: &ScaledValue<T>) -> bool {
        a == b
    }

    fn base_value(&self, v: &ScaledValue<T>) -> T {
        scaled::correspondent(v).base_value
    }

    fn render(&self, v: &ScaledValue<T>) -> String {
        v.internal().to_string()
    }
}
