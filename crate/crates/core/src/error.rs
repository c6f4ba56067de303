use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("degree {degree} exceeds the limit of {limit} for {what}")]
    DegreeLimit {
        what: &'static str,
        degree: usize,
        limit: usize,
    },

    #[error("invalid permutation: {0}")]
    InvalidPerm(String),

    #[error("cannot parse cycle notation {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("group closure exceeded the cap of {0} elements")]
    CapExceeded(usize),

    #[error("group of order {order} exceeds the limit of {limit} for {what}")]
    SizeLimit {
        what: &'static str,
        order: usize,
        limit: usize,
    },

    #[error("expected a group of order 8, got order {0}")]
    NotOrder8(usize),

    #[error("unsupported degree {0}")]
    UnsupportedDegree(usize),

    #[error("group is not regular")]
    NotRegular,

    #[error("subgroup is not contained in the group")]
    NotSubgroup,

    #[error("element set is not a group: {0}")]
    NotClosed(String),

    #[error("no relabeling matches the target action: {0}")]
    NoRelabeling(String),

    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),

    #[error("representative for point {0} lies in a different coset")]
    CosetMismatch(usize),

    #[error("field element is not fixed by the point stabilizer")]
    NotFixed,

    #[error("group-algebra support contains {0}, which is not in the group")]
    SupportOutside(String),
}
