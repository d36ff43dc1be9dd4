use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("odd power of sqrt(x) at entry ({row},{col}): s^{exponent}")]
    OddPowerResidue { row: usize, col: usize, exponent: i64 },
    #[error("negative power of x at entry ({row},{col}): s^{exponent}")]
    NegativePower { row: usize, col: usize, exponent: i64 },
    #[error("singular matrix")]
    SingularMatrix,
    #[error("inexact Laurent division")]
    InexactDivision,
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("parameter out of bounds: {0}")]
    ParamOutOfBounds(String),
    #[error("unsupported family for this operation: {0}")]
    UnsupportedFamily(String),
    #[error("x(1-x) Psi0^-1 Psi0' is not affine in x: {0}")]
    NotAffine(String),
    #[error("weight core is not symmetric")]
    NonSymmetricCore,
    #[error("determinant has a factor other than x and 1-x: {0}")]
    ExtraFactor(String),
    #[error("weight not integrable: {0}")]
    NonIntegrable(String),
    #[error("exact moments unavailable for non-integer exponents")]
    ExactUnavailable,
    #[error("block Hankel matrix singular at degree {0}")]
    SingularHankel(usize),
    #[error("moments known through index {have}, need {need}")]
    MomentRangeExceeded { have: usize, need: usize },
    #[error("C + {0} I is singular")]
    SingularShift(usize),
    #[error("hypergeometric series does not terminate: {0}")]
    NonTerminating(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

pub type Result<T> = std::result::Result<T, Error>;
