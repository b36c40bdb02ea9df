use thiserror::Error;

/// Every failure the library can signal. The CLI maps these onto exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("infinite valuation: zero has no finite p-adic valuation")]
    InfiniteValuation,
    #[error("not p-integral: {0}")]
    NotIntegral(String),
    #[error("insufficient precision: {0}")]
    InsufficientPrecision(String),
    #[error("invalid Frobenius constant c = {c}: need c = 1 mod {modulus}")]
    InvalidFrobenius { c: String, modulus: u64 },
    #[error("prime mismatch: {0} vs {1}")]
    PrimeMismatch(u64, u64),
    #[error("not invertible: constant term is not a unit")]
    NotInvertible,
    #[error("insufficient coefficients: requested {requested}, have {available}")]
    InsufficientCoefficients { requested: usize, available: usize },
    #[error("dlog integral undefined: constant term is nonzero")]
    DlogUndefined,
    #[error("modulus {p}^{prec} does not fit the 63-bit residue kernel")]
    PrecisionOverflow { p: u64, prec: u32 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
