use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is undefined at zero")]
    Zero(&'static str),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("token `{token}`: {reason}")]
    Parse { token: String, reason: &'static str },

    #[error("weight {0} is not congruent to 2 mod 4")]
    WeightNotTwoModFour(u64),

    #[error("{0} is not an admissible marked parity class")]
    InadmissibleClass(String),

    #[error("{map} undefined on {input}: {reason}")]
    OutOfDomain {
        map: &'static str,
        input: String,
        reason: String,
    },

    #[error("unsupported number of part sizes k = {0}")]
    UnsupportedK(usize),

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("{id} requires n ≡ {residue} (mod {modulus}), got {n}")]
    Inadmissible {
        id: &'static str,
        n: u64,
        residue: u64,
        modulus: u64,
    },

    #[error("modulus must be positive")]
    ZeroModulus,
}

impl Error {
    /// Stable short tag for the kind of error, used as a machine-readable prefix.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Zero(_) => "zero",
            Error::Overflow(_) => "overflow",
            Error::InvalidPartition(_) => "invalid-partition",
            Error::Parse { .. } => "parse",
            Error::WeightNotTwoModFour(_) => "weight-not-2-mod-4",
            Error::InadmissibleClass(_) => "inadmissible-class",
            Error::OutOfDomain { .. } => "out-of-domain",
            Error::UnsupportedK(_) => "unsupported-k",
            Error::UnknownName(_) => "unknown-name",
            Error::Inadmissible { .. } => "inadmissible",
            Error::ZeroModulus => "zero-modulus",
        }
    }
}
