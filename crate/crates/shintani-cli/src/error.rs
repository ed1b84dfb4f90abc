use shintani_core::lfun::LFunError;
use shintani_core::numfield::NumberFieldError;
use shintani_core::shintani::ShintaniError;

/// Everything a subcommand can fail with, grouped by exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("invalid field: {0}")]
    Invalid(String),
    #[error("{0}")]
    Hypothesis(String),
    #[error("{0}; rerun with a larger --precision-cap (or SHINTANI_PRECISION_CAP)")]
    SignUndecided(String),
    #[error("h_K = {0} is not a positive integer; check w_K, Q1 and Q2")]
    NonIntegral(String),
    #[error("self-test mismatch at {0}")]
    Mismatch(String),
    #[error("{0}")]
    Internal(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Invalid(_) | CliError::Io(_) => 2,
            CliError::Hypothesis(_) => 3,
            CliError::SignUndecided(_) => 4,
            CliError::NonIntegral(_) => 5,
            CliError::Mismatch(_) | CliError::Internal(_) => 1,
        }
    }
}

impl From<LFunError> for CliError {
    fn from(e: LFunError) -> Self {
        if let Some(s) = e.sign_undecided() {
            return CliError::SignUndecided(s.to_string());
        }
        match e {
            LFunError::NonIntegral(rep) => CliError::NonIntegral(rep.h_k.to_string()),
            e if e.is_hypothesis() => CliError::Hypothesis(e.to_string()),
            e => CliError::Internal(e.to_string()),
        }
    }
}

impl From<ShintaniError> for CliError {
    fn from(e: ShintaniError) -> Self {
        LFunError::from(e).into()
    }
}

impl From<NumberFieldError> for CliError {
    fn from(e: NumberFieldError) -> Self {
        LFunError::from(e).into()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use shintani_core::realalg::RealAlgError;

    #[test]
    fn exit_codes_follow_the_error_kind() {
        let undecided = LFunError::from(RealAlgError::SignUndecided { what: "det".into(), bits: 64 });
        let e = CliError::from(undecided);
        assert_eq!(e.exit_code(), 4);
        assert!(e.to_string().contains("--precision-cap"));
        assert_eq!(CliError::from(LFunError::Hypothesis("p".into())).exit_code(), 3);
        assert_eq!(CliError::from(NumberFieldError::NotPrime(9)).exit_code(), 3);
        assert_eq!(CliError::Parse(String::new()).exit_code(), 2);
        assert_eq!(CliError::Mismatch(String::new()).exit_code(), 1);
    }
}
