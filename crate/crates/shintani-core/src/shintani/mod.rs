//! Shintani frames, generating functions, kernels and the sets `R^tau(pO_F)`.

mod frame;
mod genfun;
mod perm;
mod sets;

use alloc::string::String;

pub use frame::{build_frame, build_frames, kernel_size_consistent, modified_frac, IntervalKind, ShintaniFrame};
pub use genfun::{build_genfun, poly_det, system_matrix, GenFunSystem};
pub use perm::Perm;
pub use sets::{
    coset_rep, full_set, identity_point, kernel_enumerate, ominus, oplus, pi_map, prime_setup, FullSet, PrimeSetup,
    ShintaniPoint,
};

use crate::exact::ExactError;
use crate::ff::FFError;
use crate::numfield::NumberFieldError;
use crate::realalg::RealAlgError;

/// Which half-open interval a basis coordinate uses when `c_i` of `e_n = sum c_i f_i` is
/// positive. The literal rule perturbs along `+e_n`, giving `[0,1)` for `c_i > 0`;
/// perturbing along `-e_n` gives `[0,1)` for `c_i < 0`. Both give fundamental domains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum TieBreak {
    #[default]
    PlusLast,
    MinusLast,
}

impl TieBreak {
    pub fn as_str(self) -> &'static str {
        match self {
            TieBreak::PlusLast => "plus",
            TieBreak::MinusLast => "minus",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "plus" => Some(TieBreak::PlusLast),
            "minus" => Some(TieBreak::MinusLast),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ShintaniError {
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("internal consistency check failed: {0}")]
    Consistency(String),
    #[error("frame {0} is degenerate (weight 0)")]
    DegenerateFrame(String),
    #[error("points belong to different frames")]
    FrameMismatch,
    #[error(transparent)]
    RealAlg(#[from] RealAlgError),
    #[error(transparent)]
    NumberField(#[from] NumberFieldError),
    #[error(transparent)]
    FiniteField(#[from] FFError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

impl ShintaniError {
    /// The `SignUndecided` error, wherever it is nested.
    pub fn sign_undecided(&self) -> Option<&RealAlgError> {
        match self {
            ShintaniError::RealAlg(e @ RealAlgError::SignUndecided { .. })
            | ShintaniError::NumberField(NumberFieldError::RealAlg(e @ RealAlgError::SignUndecided { .. })) => Some(e),
            _ => None,
        }
    }
}
