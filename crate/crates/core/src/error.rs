use thiserror::Error;

/// Errors raised by the numerical routines in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error in {function}: {detail}")]
    Domain {
        function: &'static str,
        detail: String,
    },

    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("overflow in {function} at argument {argument}")]
    Overflow {
        function: &'static str,
        argument: f64,
    },

    #[error("series in {function} did not converge within {terms} terms")]
    SeriesNonConvergence { function: &'static str, terms: usize },

    /// Quadrature ran out of its segment budget before meeting the requested tolerance.
    #[error(
        "quadrature did not converge: partial value {partial}, estimated error {residual:e} \
         after {segments} segments"
    )]
    QuadratureNonConvergence {
        partial: f64,
        residual: f64,
        segments: usize,
    },

    #[error("finite-difference step h = {h} too large for t = {t} (need h < |t|/2)")]
    DegenerateStep { t: f64, h: f64 },

    #[error("model descriptor: {0}")]
    Descriptor(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(function: &'static str, detail: impl Into<String>) -> Error {
    Error::Domain {
        function,
        detail: detail.into(),
    }
}
