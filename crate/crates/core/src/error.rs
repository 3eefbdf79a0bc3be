use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("series has zero constant term and cannot be inverted")]
    ZeroConstantTerm,
    #[error("series evaluation diverges: |u| = {0} >= 1")]
    DivergentTail(f64),
    #[error("elements belong to different ring presentations")]
    PresentationMismatch,
    #[error("exponent is not topologically nilpotent: scalar u^0 part is {0}")]
    NonNilpotentScalar(String),
    #[error("unknown manifold `{0}`")]
    UnknownManifold(String),
    #[error("invalid tau: imaginary part {0} must be positive")]
    InvalidTau(f64),
    #[error("guard exceeded: {0}")]
    GuardExceeded(String),
    #[error("partition {partition:?} has more than {rank} rows")]
    PartitionTooTall { partition: Vec<usize>, rank: usize },
    #[error("unsupported rank {0}: the dimension-12 check supports l = 2 or l = 4")]
    UnsupportedRank(usize),
    #[error("series tail too large at tau = {tau}: bound {bound:e} exceeds {limit:e}")]
    TailTooLarge { tau: String, bound: f64, limit: f64 },
    #[error("invalid input: {0}")]
    Input(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::GuardExceeded(_) => 3,
            Error::UnsupportedRank(_) => 4,
            _ => 2,
        }
    }
}
