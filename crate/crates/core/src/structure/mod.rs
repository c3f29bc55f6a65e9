//! Scaled number structures.
//!
//! A [`StructureHandle`] names one structure `S̄_p`: a number type together
//! with a nonzero scale factor `p`. Values inside it are [`ScaledValue`]s; the
//! base-set element such a value names is its correspondent `p·a`.

mod literal;
mod maps;
mod scaled;
mod views;

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::exact::ArithError;
use crate::scalar::Scalar;

pub use literal::parse_structure;
pub use maps::{
    compose_scaling, group_identity, group_inv, group_op, map_down, map_up, scale_then_view, undo_down, WyzStructure,
};
pub use scaled::{
    add_scaled, conj_phase_form, conj_scaled, correspondent, div_scaled, lt_scaled, member_of_base_set, mul_scaled,
    same_value, sub_scaled, view_value, BaseElement, ScaledValue,
};
pub use views::{BaseField, Corruption, ExternalView, InternalView, Interpretation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NumberType {
    Natural,
    Integer,
    Rational,
    Real,
    Complex,
}

impl NumberType {
    /// Prefix used by the structure literal syntax.
    pub fn tag(self) -> &'static str {
        match self {
            NumberType::Natural => "nat",
            NumberType::Integer => "int",
            NumberType::Rational => "rat",
            NumberType::Real => "real",
            NumberType::Complex => "cpx",
        }
    }

    /// Name of the scale parameter in literals (`n`, `j`, `r`, `c`).
    pub fn scale_name(self) -> &'static str {
        match self {
            NumberType::Natural => "n",
            NumberType::Integer => "j",
            NumberType::Rational | NumberType::Real => "r",
            NumberType::Complex => "c",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Some(match tag {
            "nat" => NumberType::Natural,
            "int" => NumberType::Integer,
            "rat" => NumberType::Rational,
            "real" => NumberType::Real,
            "cpx" => NumberType::Complex,
            _ => return None,
        })
    }

    pub fn has_subtraction(self) -> bool {
        self != NumberType::Natural
    }

    pub fn has_division(self) -> bool {
        matches!(self, NumberType::Rational | NumberType::Real | NumberType::Complex)
    }

    pub fn is_ordered(self) -> bool {
        self != NumberType::Complex
    }

    /// Whether `a` is a value of this number type.
    pub fn admits<T: Scalar>(self, a: &T) -> bool {
        match self {
            NumberType::Natural => a.is_integer() && a.real_cmp(&T::zero()) != Some(Ordering::Less),
            NumberType::Integer => a.is_integer(),
            NumberType::Rational | NumberType::Real => a.is_real(),
            NumberType::Complex => true,
        }
    }
}

impl fmt::Display for NumberType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("invalid scale for {number_type} structure: {reason}")]
    InvalidScale { number_type: NumberType, reason: String },
    #[error("{value} is not a value of {structure}")]
    DomainError { value: String, structure: String },
    #[error("{value} is not in the base set of {structure}")]
    NotInBaseSet { value: String, structure: String },
    #[error("values belong to different structures ({left} vs {right})")]
    StructureMismatch { left: String, right: String },
    #[error("{op} is not an operation of {structure}")]
    UnsupportedOperation { op: &'static str, structure: String },
    #[error("number types differ ({left} vs {right})")]
    TypeMismatch { left: NumberType, right: NumberType },
    #[error("malformed structure literal `{0}`")]
    InvalidLiteral(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// One scaled structure: a number type plus its nonzero scale factor.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureHandle<T> {
    number_type: NumberType,
    scale: T,
}

impl<T: Scalar> StructureHandle<T> {
    pub fn new(number_type: NumberType, scale: T) -> Result<Self, StructureError> {
        let invalid = |reason: &str| StructureError::InvalidScale {
            number_type,
            reason: reason.to_string(),
        };
        if scale.is_zero() {
            return Err(invalid("scale must be nonzero"));
        }
        match number_type {
            NumberType::Natural => {
                if !scale.is_integer() || scale.real_cmp(&T::zero()) != Some(Ordering::Greater) {
                    return Err(invalid("natural scales are integers > 0"));
                }
            }
            NumberType::Integer => {
                if !scale.is_integer() {
                    return Err(invalid("integer scales are nonzero integers"));
                }
            }
            NumberType::Rational | NumberType::Real => {
                if !scale.is_real() {
                    return Err(invalid("scale must have zero imaginary part"));
                }
            }
            NumberType::Complex => {
                if !T::HAS_IMAGINARY {
                    return Err(invalid("complex structures need a complex carrier"));
                }
            }
        }
        Ok(StructureHandle { number_type, scale })
    }

    /// The unscaled structure `S̄ = S̄_1` of a number type.
    pub fn base(number_type: NumberType) -> Self {
        StructureHandle {
            number_type,
            scale: T::one(),
        }
    }

    pub fn number_type(&self) -> NumberType {
        self.number_type
    }

    pub fn scale(&self) -> &T {
        &self.scale
    }

    pub fn is_base(&self) -> bool {
        self.scale.is_one()
    }

    /// Sign of a real scale; `None` for non-real complex scales.
    pub fn scale_sign(&self) -> Option<Ordering> {
        self.scale.real_cmp(&T::zero())
    }

    /// Whether `a` can be an internal value of this structure.
    pub fn admits(&self, a: &T) -> bool {
        self.number_type.admits(a)
    }

    pub(crate) fn check_value(&self, a: &T) -> Result<(), StructureError> {
        if self.admits(a) {
            Ok(())
        } else {
            Err(StructureError::DomainError {
                value: a.to_string(),
                structure: self.to_string(),
            })
        }
    }

    pub(crate) fn unsupported(&self, op: &'static str) -> StructureError {
        StructureError::UnsupportedOperation {
            op,
            structure: self.to_string(),
        }
    }

    /// Same handle with the scale mapped into another carrier.
    pub fn map_carrier<U: Scalar>(&self, f: impl FnOnce(&T) -> U) -> Result<StructureHandle<U>, StructureError> {
        StructureHandle::new(self.number_type, f(&self.scale))
    }
}

/// Constructor in the shape of the other structure operations.
pub fn make_structure<T: Scalar>(t: NumberType, p: T) -> Result<StructureHandle<T>, StructureError> {
    StructureHandle::new(t, p)
}

impl<T: Scalar> fmt::Display for StructureHandle<T> {
    /// Literal form, e.g. `rat:r=3/2` or `cpx:c=2+1i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}={}",
            self.number_type.tag(),
            self.number_type.scale_name(),
            self.scale
        )
    }
}
