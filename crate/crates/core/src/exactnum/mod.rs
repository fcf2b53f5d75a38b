//! Exact coefficient arithmetic.
//!
//! Everything downstream of this module computes over an exact field: the
//! rationals, a cyclotomic extension of the rationals, or the field of
//! multivariate rational functions in the presentation parameters.  There is
//! deliberately no floating point anywhere in this crate.

mod cyclo;
mod field;
mod kroots;
mod mpoly;
mod rat;
mod upoly;

pub use cyclo::Cyclo;
pub use field::Field;
pub use kroots::{nth_roots_in_field, rational_roots_in_field};
pub use mpoly::{scope, MPoly, ParamRat, ParamScope};
pub use rat::{rat, rat_from_str, rat_height, rat_to_string, Rat};
pub use upoly::{RatFn, UPoly};

use thiserror::Error;

/// Errors raised by exact arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("incompatible fields: {0}")]
    IncompatibleFields(String),
    #[error("unbound parameter: {0}")]
    UnboundParameter(String),
    #[error("denominator vanishes under the given assignment")]
    DenominatorVanishes,
}
