use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// μ−k hit a nonpositive integer, where the ₁F₂ denominator parameters degenerate.
    #[error("parameter pole: mu - k = {0} is a nonpositive integer")]
    ParameterPole(f64),

    /// Series term cap exceeded.
    #[error("series did not converge within {terms} terms at |z| = {z_abs}")]
    NonConvergence { terms: usize, z_abs: f64 },

    /// Argument outside the operation's domain.
    #[error("domain error: {0}")]
    DomainError(String),

    /// Parameter outside the range the underlying theorems validate.
    #[error("parameter out of range: {0}")]
    ParameterRange(String),

    /// A ratio denominator came too close to a zero of the underlying series.
    #[error("near pole: |denominator| = {denom_abs:.3e} below floor {floor:.3e} at z = {z}")]
    NearPole { denom_abs: f64, floor: f64, z: String },

    /// The zero scan window contained fewer sign changes than requested.
    #[error("scan exhausted: found {found} zeros, needed {needed}")]
    ScanExhausted { found: usize, needed: usize },

    /// No sign change of the derivative series inside an interlacing interval.
    #[error("bracket failure in interval ({lo}, {hi})")]
    BracketFailure { lo: f64, hi: f64 },

    /// The curvature never crossed α inside the search interval.
    #[error("no sign change of curvature - alpha on (0, {endpoint})")]
    NoSignChange { endpoint: f64 },

    /// Adaptive quadrature hit its depth limit before meeting the tolerance.
    #[error("quadrature failure: depth {depth} reached, error estimate {err_est:.3e}")]
    QuadratureFailure { depth: usize, err_est: f64 },

    /// A disk certification found a boundary angle violating the bound.
    #[error("certification failure at theta = {theta}: re(curvature) = {value} < {bound}")]
    CertificationFailure { theta: f64, value: f64, bound: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
