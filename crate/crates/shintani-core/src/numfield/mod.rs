//! Arithmetic in a totally real number field `F = Q(theta)`: elements, traces and norms,
//! real embeddings, field-specification checks, inertness and unit signs.

mod element;
mod embed;
mod spec;
mod units;

use alloc::string::String;

use num_bigint::BigInt;

pub use element::{FieldElement, NumberField};
pub use embed::{Embeddings, RefinedEmbeddings};
pub use spec::{is_inert, is_prime, log_regulator_sign, validate_field_spec, Check, FieldSpec, ValidationReport};
pub use units::{derive_totally_positive_generators, express_in_units, unit_sign_index};

use crate::realalg::RealAlgError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NumberFieldError {
    #[error("minimal polynomial must have degree at least 1")]
    Degree,
    #[error("minimal polynomial is not monic")]
    NotMonic,
    #[error("minimal polynomial must have integer coefficients")]
    NonIntegralPoly,
    #[error("element has {found} coordinates, expected {expected}")]
    Length { expected: usize, found: usize },
    #[error("expected {expected} units, found {found}")]
    UnitCount { expected: usize, found: usize },
    #[error("{0}")]
    Shape(&'static str),
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("element is not a unit")]
    NotAUnit,
    #[error("discriminant mismatch: {0}")]
    Discriminant(String),
    #[error("minimal polynomial has {real_roots} real roots but degree {degree}")]
    NotTotallyReal { real_roots: usize, degree: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("p = {p} divides the index [O_F : Z[theta]] = {index}")]
    PrimeDividesIndex { p: u64, index: BigInt },
    #[error("fundamental units are required to compute [O_F^x : O_F^x+]; supply Q1 explicitly")]
    MissingFundamentalUnits,
    #[error(transparent)]
    RealAlg(RealAlgError),
}
