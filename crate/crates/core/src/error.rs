use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed cycle notation {text:?}: {reason}")]
    Parse { text: String, reason: String },

    #[error("point {point} occurs more than once in {text:?}")]
    RepeatedPoint { text: String, point: u32 },

    #[error("point {point} exceeds degree {degree}")]
    PointOutOfRange { point: u32, degree: usize },

    #[error("invalid image sequence: {0}")]
    InvalidImages(String),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("{element} is not a member of the group")]
    NotMember { element: String },

    #[error("group order {order} exceeds the enumeration cap {cap}")]
    CapExceeded { order: u128, cap: usize },

    #[error("the given set is not a subgroup")]
    NotSubgroup,

    #[error("the given subgroup is not normal")]
    NotNormal,

    #[error("series did not stabilize within {max_len} terms (last term has order {last_order})")]
    SeriesTooLong { max_len: usize, last_order: u128 },

    #[error("work budget exceeded: {needed} tuple evaluations > {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("unknown group {0:?}")]
    UnknownGroup(String),

    #[error("unknown check {0:?}")]
    UnknownCheck(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
