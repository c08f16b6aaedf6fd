use std::path::PathBuf;

use thiserror::Error;

use crate::spec::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("group order {order} exceeds the configured cap of {cap}")]
    OrderCapExceeded { order: usize, cap: usize },

    #[error("bad parameter for {family}: {reason}")]
    BadParameter { family: String, reason: String },

    #[error("more than {0} subgroups; raise the subgroup cap to continue")]
    SubgroupCapExceeded(usize),

    #[error("group of order {order} is above the enumeration limit {limit}")]
    EnumerationLimitExceeded { order: usize, limit: usize },

    #[error("lattice with {0} members is too large for isomorphism testing")]
    TooLargeForIso(usize),

    #[error("unknown corpus fixture `{0}`")]
    UnknownFixture(String),

    #[error("unknown check `{0}`")]
    UnknownCheck(String),

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("malformed Cayley table{}: {message}", line.map(|l| format!(" at line {l}")).unwrap_or_default())]
    CayleyFormat { line: Option<usize>, message: String },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }

    pub(crate) fn bad_parameter(family: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::BadParameter { family: family.into(), reason: reason.into() }
    }

    /// Process exit code used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) => 2,
            Error::OrderCapExceeded { .. }
            | Error::SubgroupCapExceeded(_)
            | Error::EnumerationLimitExceeded { .. }
            | Error::TooLargeForIso(_) => 3,
            Error::NotAGroup(_)
            | Error::BadParameter { .. }
            | Error::UnknownFixture(_)
            | Error::CayleyFormat { .. } => 4,
            Error::UnknownCheck(_) => 2,
            Error::Io { .. } | Error::Json(_) => 1,
        }
    }

    /// Short machine-readable tag for error JSON.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotAGroup(_) => "not_a_group",
            Error::OrderCapExceeded { .. } => "order_cap_exceeded",
            Error::BadParameter { .. } => "bad_parameter",
            Error::SubgroupCapExceeded(_) => "subgroup_cap_exceeded",
            Error::EnumerationLimitExceeded { .. } => "enumeration_limit_exceeded",
            Error::TooLargeForIso(_) => "too_large_for_iso",
            Error::UnknownFixture(_) => "unknown_fixture",
            Error::UnknownCheck(_) => "unknown_check",
            Error::Parse(_) => "parse_error",
            Error::CayleyFormat { .. } => "cayley_format",
            Error::Io { .. } => "io",
            Error::Json(_) => "json",
        }
    }
}
