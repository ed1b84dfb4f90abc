//! Rigorous real arithmetic: dyadic intervals, Sturm root isolation, logarithm enclosures
//! and adaptive sign determination.

mod dyadic;
mod interval;
mod log;
mod roots;
mod sign;

use alloc::string::String;

pub use dyadic::Dyadic;
pub use interval::{interval_det, interval_eval, DyadicInterval};
pub use log::interval_log;
pub use roots::{isolate_real_roots, IsolatedRoot};
pub use sign::{sign_decide, PrecisionBudget, DEFAULT_CAP_BITS, DEFAULT_START_BITS};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RealAlgError {
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("polynomial is constant")]
    Constant,
    #[error("logarithm of an interval that is not strictly positive")]
    NonPositiveLog,
    #[error("sign of {what} undecided at {bits} bits; the value may be exactly zero or the precision cap too low")]
    SignUndecided { what: String, bits: u32 },
    #[error("invalid precision budget: start {current}, cap {cap}")]
    BadBudget { current: u32, cap: u32 },
}
