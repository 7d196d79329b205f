use thiserror::Error;

/// Errors raised by the numerical routines in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("constant term {0:e} is too small to invert")]
    ZeroConstantTerm(f64),

    #[error("constant term must vanish, found |h0| = {0:e}")]
    NonVanishingConstant(f64),

    #[error("radius {0} is outside (0, 1]")]
    BadRadius(f64),

    #[error("series must satisfy p(0) = 1, found p(0) = {0}")]
    BadNormalization(String),

    #[error("invalid parameters: {0}")]
    BadParams(String),

    #[error("invalid Herglotz weights: {0}")]
    BadWeights(String),

    #[error("invalid series: {0}")]
    BadSeries(String),

    #[error("argument of f(z)/z is undefined near z = {0}")]
    ArgUndefined(String),

    #[error("parameters outside the stated range: {0}")]
    OutOfStatedRange(String),

    #[error("degenerate denominator: {0}")]
    DegenerateDenominator(String),

    #[error("no root in [-1, 1] for alpha = {alpha}, r = {r}")]
    NoRootInRange { alpha: f64, r: f64 },

    #[error("value outside admissible range: {0}")]
    BadRange(String),

    #[error("trajectory left the closed unit disk at t = {t} (|u| = {modulus})")]
    EscapedDisk { t: f64, modulus: f64 },

    #[error("step size underflow at t = {0}")]
    StepUnderflow(f64),

    #[error("root finder failed: {0}")]
    NoBracket(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable variant name for machine-readable reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ZeroConstantTerm(_) => "ZeroConstantTerm",
            Error::NonVanishingConstant(_) => "NonVanishingConstant",
            Error::BadRadius(_) => "BadRadius",
            Error::BadNormalization(_) => "BadNormalization",
            Error::BadParams(_) => "BadParams",
            Error::BadWeights(_) => "BadWeights",
            Error::BadSeries(_) => "BadSeries",
            Error::ArgUndefined(_) => "ArgUndefined",
            Error::OutOfStatedRange(_) => "OutOfStatedRange",
            Error::DegenerateDenominator(_) => "DegenerateDenominator",
            Error::NoRootInRange { .. } => "NoRootInRange",
            Error::BadRange(_) => "BadRange",
            Error::EscapedDisk { .. } => "EscapedDisk",
            Error::StepUnderflow(_) => "StepUnderflow",
            Error::NoBracket(_) => "NoBracket",
        }
    }

    /// True for errors caused by invalid input rather than by the computation.
    pub fn is_input(&self) -> bool {
        matches!(
            self,
            Error::BadRadius(_)
                | Error::BadNormalization(_)
                | Error::BadParams(_)
                | Error::BadWeights(_)
                | Error::BadSeries(_)
                | Error::OutOfStatedRange(_)
        )
    }
}
