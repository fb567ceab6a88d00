use thiserror::Error;

/// Errors shared across the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus {0} is not an odd prime")]
    NotPrime(u64),

    #[error("prime {prime} must exceed the degree {degree} (derivative conditions need p > d)")]
    PrimeTooSmall { prime: u64, degree: i64 },

    #[error("field of size {prime} cannot host {wanted} distinct points of P^{n}")]
    FieldExhausted { prime: u64, n: u32, wanted: usize },

    #[error("zeroth root is undefined")]
    RootDegreeZero,

    #[error("matrix data length {got} does not match {rows}x{cols}")]
    MatrixShape { rows: usize, cols: usize, got: usize },

    #[error("matrix entry {0} is not reduced modulo {1}")]
    EntryOutOfRange(u64, u64),

    #[error("system is too large: {0} would not fit in memory")]
    SystemTooLarge(String),

    #[error("point set (n={pts_n}, s={pts_s}) does not match system (n={spec_n}, s={spec_s})")]
    PointSetMismatch { spec_n: u32, spec_s: usize, pts_n: u32, pts_s: usize },

    #[error("degree search exhausted: cap degree {cap} certified empty for {context}; the cap bound \
             alpha(I^(m)) <= m*alpha(I) rules this out, so this indicates a bug")]
    AlphaCapEmpty { cap: i64, context: String },

    #[error("Cremona step inapplicable: {0}")]
    CremonaInapplicable(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
