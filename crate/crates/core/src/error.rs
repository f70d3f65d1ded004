use thiserror::Error;

use crate::report::ValidationReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{what}: order {order} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        order: usize,
        cap: usize,
    },
    #[error("not a subgroup")]
    NotASubgroup,
    #[error("not a {0} ideal")]
    NotAnIdeal(&'static str),
    #[error("not a submodule")]
    NotASubmodule,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("axiom violation:\n{0}")]
    Invalid(ValidationReport),
    /// Two independent routes to the same quantity disagreed.
    #[error("cross-check failed: {0}")]
    Disagreement(String),
}

impl From<ValidationReport> for Error {
    fn from(r: ValidationReport) -> Self {
        Error::Invalid(r)
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_cap(what: &'static str, order: usize, cap: usize) -> Result<()> {
    if order > cap {
        Err(Error::CapExceeded { what, order, cap })
    } else {
        Ok(())
    }
}
