//! Scaled representations of number structures.
//!
//! Every number type (naturals, integers, rationals, reals, complex numbers)
//! has a family of structures `S̄_p`, one per nonzero scale factor `p`. A value
//! `a_p` of `S̄_p` plays the same role there that `a` plays in the base
//! structure, and it names the base-set element `p·a`. Seen from outside, the
//! operations of `S̄_p` become `+, −, ×/p, p÷` with constant `p`.
//!
//! * [`exact`]: arbitrary-precision rationals and Gaussian rationals.
//! * [`scalar`]: the [`Scalar`](scalar::Scalar) carrier trait over exact and
//!   floating-point types.
//! * [`structure`]: structure handles, scaled values, views and maps.
//! * [`term`]: a small term language evaluated in any view.
//! * [`axioms`]: seeded axiom suites comparing the views.
//! * [`gauge`]: link factors and covariant derivatives on a lattice.
//!
//! ```
//! use scalerep::{parse_structure, ExactTerm};
//! use scalerep::term::{eval_external, eval_internal, parse_term, Environment};
//!
//! let s = parse_structure("rat:r=3").unwrap();
//! let t: ExactTerm = parse_term("x*y").unwrap();
//! let env = Environment::new()
//!     .with("x", "2".parse().unwrap())
//!     .with("y", "5".parse().unwrap());
//! assert_eq!(eval_external(&t, &env, &s).unwrap().to_string(), "30");
//! assert_eq!(eval_internal(&t, &env, &s).unwrap().internal().to_string(), "10");
//! ```

pub mod axioms;
pub mod exact;
pub mod gauge;
pub mod scalar;
pub mod structure;
pub mod term;

pub use exact::{CRational, Rational};
pub use scalar::Scalar;
pub use structure::{parse_structure, NumberType, StructureError, StructureHandle};

/// Structures over exact Gaussian rationals, the carrier of the CLI and suites.
pub type ExactStructure = StructureHandle<CRational>;
pub type ExactValue = structure::ScaledValue<CRational>;
pub type ExactTerm = term::Term<CRational>;
pub type ExactEnvironment = term::Environment<CRational>;

/// Real structures over exact rationals.
pub type RationalStructure = StructureHandle<Rational>;

/// Floating-point carriers, for irrational scales and transcendental checks.
pub type FloatStructure = StructureHandle<f64>;
pub type ComplexFloatStructure = StructureHandle<num_complex::Complex64>;
pub type FloatTerm = term::Term<f64>;
