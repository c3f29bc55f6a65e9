use crate::scalar::{self, Scalar};

use super::scaled::{self, BaseElement, ScaledValue};
use super::views::Interpretation;
use super::{NumberType, StructureError, StructureHandle};

/// `W^p(a) = p·a`, from `S̄` onto `S̄^p`.
pub fn map_up<T: Scalar>(a: &T, p: &T) -> T {
    scalar::mul(p, a)
}

/// `W_p(p·a) = a_p`, from `S̄^p` onto `S̄_p`.
pub fn map_down<T: Scalar>(pa: &T, s: &StructureHandle<T>) -> Result<ScaledValue<T>, StructureError> {
    scaled::view_value(&BaseElement::new(pa.clone()), s)
}

/// `(W_p)^{-1}`: back from `S̄_p` to the base value in `S̄^p`.
pub fn undo_down<T: Scalar>(v: &ScaledValue<T>) -> T {
    scaled::correspondent(v).base_value
}

/// `F_p = W_p ∘ W^p`.
pub fn scale_then_view<T: Scalar>(a: &T, s: &StructureHandle<T>) -> Result<ScaledValue<T>, StructureError> {
    // W^p(a) may be outside S̄'s value domain (e.g. 1 ↦ 1/2 for p = 1/2 on
    // integers), so the sameness domain check runs on `a` first.
    s.check_value(a)?;
    map_down(&map_up(a, s.scale()), s)
}

/// Scaling by `p` and then by `q` (a value of `S̄_p`) is one scaling by `qp`.
pub fn compose_scaling<T: Scalar>(p: &StructureHandle<T>, q: &T) -> Result<StructureHandle<T>, StructureError> {
    // q must itself be a legal scale for the number type.
    StructureHandle::new(p.number_type(), q.clone())?;
    StructureHandle::new(p.number_type(), scalar::mul(q, p.scale()))
}

fn check_group_type<T: Scalar>(a: &StructureHandle<T>) -> Result<(), StructureError> {
    if a.number_type().has_division() {
        Ok(())
    } else {
        Err(a.unsupported("structure group product"))
    }
}

/// `S̄_c ⋄ S̄_d = S̄_{cd}`.
pub fn group_op<T: Scalar>(
    a: &StructureHandle<T>,
    b: &StructureHandle<T>,
) -> Result<StructureHandle<T>, StructureError> {
    if a.number_type() != b.number_type() {
        return Err(StructureError::TypeMismatch {
            left: a.number_type(),
            right: b.number_type(),
        });
    }
    check_group_type(a)?;
    StructureHandle::new(a.number_type(), scalar::mul(a.scale(), b.scale()))
}

/// `S̄_c ↦ S̄_{1/c}`.
pub fn group_inv<T: Scalar>(a: &StructureHandle<T>) -> Result<StructureHandle<T>, StructureError> {
    check_group_type(a)?;
    StructureHandle::new(a.number_type(), T::one().try_div(a.scale())?)
}

pub fn group_identity<T: Scalar>(t: NumberType) -> StructureHandle<T> {
    StructureHandle::base(t)
}

/// `S̄^{wyz} = {+, −, ×/w, y÷, 0, z}` with values embedded as `a ↦ z·a`.
///
/// A relabelling that only behaves like a scaled structure when `w = y = z`.
#[derive(Debug, Clone, PartialEq)]
pub struct WyzStructure<T> {
    w: T,
    y: T,
    z: T,
}

impl<T: Scalar> WyzStructure<T> {
    pub fn new(w: T, y: T, z: T) -> Result<Self, StructureError> {
        if w.is_zero() || y.is_zero() || z.is_zero() {
            return Err(StructureError::InvalidScale {
                number_type: NumberType::Complex,
                reason: "w, y and z must be nonzero".into(),
            });
        }
        Ok(WyzStructure { w, y, z })
    }

    pub fn w(&self) -> &T {
        &self.w
    }

    pub fn y(&self) -> &T {
        &self.y
    }

    pub fn z(&self) -> &T {
        &self.z
    }

    pub fn is_uniform(&self) -> bool {
        self.w == self.y && self.y == self.z
    }

    fn unsupported(&self, op: &'static str) -> StructureError {
        StructureError::UnsupportedOperation {
            op,
            structure: format!("wyz(w={}, y={}, z={})", self.w, self.y, self.z),
        }
    }
}

impl<T: Scalar> Interpretation<T> for WyzStructure<T> {
    type Value = T;

    fn embed(&self, a: &T) -> Result<T, StructureError> {
        Ok(scalar::mul(&self.z, a))
    }

    fn add(&self, a: &T, b: &T) -> Result<T, StructureError> {
        Ok(scalar::add(a, b))
    }

    fn sub(&self, a: &T, b: &T) -> Result<T, StructureError> {
        Ok(scalar::sub(a, b))
    }

    fn mul(&self, a: &T, b: &T) -> Result<T, StructureError> {
        Ok(scalar::mul(a, b).try_div(&self.w)?)
    }

    fn div(&self, a: &T, b: &T) -> Result<T, StructureError> {
        Ok(scalar::mul(&self.y, &a.try_div(b)?))
    }

    fn conj(&self, _a: &T) -> Result<T, StructureError> {
        Err(self.unsupported("conjugation"))
    }

    fn lt(&self, _a: &T, _b: &T) -> Result<bool, StructureError> {
        Err(self.unsupported("order"))
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
