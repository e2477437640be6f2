use thiserror::Error;

/// Raised when an exhaustive enumeration would exceed its configured cap.
/// Enumerations never truncate silently.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("resource guard: {what} exceeds the cap of {cap}")]
pub struct LimitExceeded {
    pub what: String,
    pub cap: usize,
}

impl LimitExceeded {
    pub fn new(what: impl Into<String>, cap: usize) -> Self {
        LimitExceeded {
            what: what.into(),
            cap,
        }
    }
}
