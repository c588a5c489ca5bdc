use thiserror::Error;

/// Errors surfaced by grid construction, operators, and norm evaluation.
#[derive(Debug, Error)]
pub enum LomoError {
    #[error("dimension must be 1, 2, or 3, got {0}")]
    BadDimension(usize),

    #[error("points per axis must be a power of two >= 8, got {0}")]
    BadGridSize(usize),

    #[error("box side must be positive, got {0}")]
    BadSide(f64),

    #[error("radius {radius} outside (0, {max}]")]
    BadRadius { radius: f64, max: f64 },

    #[error("sample array has length {got}, expected {expected}")]
    BadSampleCount { got: usize, expected: usize },

    #[error("samples must be finite")]
    NonFiniteSample,

    #[error("empty ball: radius below half the grid spacing")]
    EmptyBall,

    #[error("alpha {alpha} outside [0, {n})")]
    BadAlpha { alpha: f64, n: usize },

    #[error("time parameter must be positive, got {0}")]
    BadTime(f64),

    #[error("exponent hypothesis violated: {0}")]
    BadExponent(String),

    #[error("potential must be strictly positive")]
    NonPositivePotential,

    #[error("grid too large for dense eigendecomposition: {0} cells > 4096")]
    EigBudgetExceeded(usize),

    #[error("domination ratio undefined: denominator vanishes where numerator does not")]
    DivisionByZero,

    #[error("function is identically zero")]
    ZeroFunction,

    #[error("domain mismatch between operands")]
    DomainMismatch,

    #[error("dilation scale {0} pushes support outside the safe half-box")]
    BadScale(f64),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {source}")]
    Json {
        path: String,
        #[source]
        source: serde_json::Error,
    },
}

pub type Result<T> = std::result::Result<T, LomoError>;
