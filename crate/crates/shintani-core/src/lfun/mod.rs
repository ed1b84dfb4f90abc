//! The character decomposition into Shintani zeta values, the exact class number formula
//! for `K = F(sqrt(-p))`, the symbolic skeleton for `p = 1 (mod 4)`, and the classical
//! `n = 1` oracles.

mod classnum;
mod decompose;
mod oracle;
mod skeleton;
mod trace;

use alloc::boxed::Box;
use alloc::string::String;

pub use classnum::{class_number_cm, class_number_cm_with, ClassNumberParams, ClassNumberReport, FrameReport};
pub use decompose::{decompose, DecompositionTerm, RootOfUnity};
pub use oracle::{dirichlet_oracle, girstmair_oracle, smallest_primitive_root};
pub use skeleton::{real_quadratic_skeleton, LogFactor, Skeleton, SkeletonSlot, SkeletonTerm};
pub use trace::{bernoulli_trace_sum, zeta_at_zero, TraceTable};

use crate::numfield::NumberFieldError;
use crate::realalg::RealAlgError;
use crate::shintani::ShintaniError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LFunError {
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("h_K = {} is not a positive integer; check w_K, Q1 and Q2", .0.h_k)]
    NonIntegral(Box<ClassNumberReport>),
    #[error(transparent)]
    Shintani(#[from] ShintaniError),
}

impl From<NumberFieldError> for LFunError {
    fn from(e: NumberFieldError) -> Self {
        LFunError::Shintani(ShintaniError::NumberField(e))
    }
}

impl From<RealAlgError> for LFunError {
    fn from(e: RealAlgError) -> Self {
        LFunError::Shintani(ShintaniError::RealAlg(e))
    }
}

impl LFunError {
    /// True for violated mathematical preconditions (as opposed to numeric or internal failures).
    pub fn is_hypothesis(&self) -> bool {
        matches!(
            self,
            LFunError::Hypothesis(_)
                | LFunError::Shintani(ShintaniError::Hypothesis(_))
                | LFunError::Shintani(ShintaniError::NumberField(
                    NumberFieldError::NotPrime(_)
                        | NumberFieldError::PrimeDividesIndex { .. }
                        | NumberFieldError::MissingFundamentalUnits
                ))
        )
    }

    pub fn sign_undecided(&self) -> Option<&RealAlgError> {
        match self {
            LFunError::Shintani(e) => e.sign_undecided(),
            _ => None,
        }
    }
}

pub(crate) fn hyp(msg: impl Into<String>) -> LFunError {
    LFunError::Hypothesis(msg.into())
}
