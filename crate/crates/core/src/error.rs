use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("expected a polynomial of degree {expected}, got degree {actual}")]
    DegreeMismatch { expected: usize, actual: usize },

    #[error("polynomial must be monic (leading coefficient {0})")]
    NotMonic(f64),

    #[error("zero polynomial has no roots")]
    ZeroPolynomial,

    #[error("matrix is not symmetric (max |a_ij - a_ji| = {0:e})")]
    Asymmetric(f64),

    #[error("root finder did not converge (worst scaled residual {0:e})")]
    RootFinding(f64),

    #[error("spectrum is not real: quartic root {re:e} + {im:e}i")]
    NonRealSpectrum { re: f64, im: f64 },

    #[error("eigenvalue label {0} out of range 1..=8")]
    LabelOutOfRange(usize),

    #[error("no critical field for theta = {0} rad (requires cos 2θ < 1/2)")]
    NoCriticalField(f64),

    #[error("resolvent branch validation failed (best mismatch {0:e})")]
    BranchValidation(f64),

    #[error("theta = {theta} rad does not match the {case} configuration")]
    AngleMismatch { theta: f64, case: &'static str },

    #[error("fit error: {0}")]
    Fit(String),

    #[error("configuration error: {0}")]
    Config(String),
}
