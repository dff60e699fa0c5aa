use crate::C64;

/// Errors raised by the numerical routines.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("pole: {0}")]
    Pole(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("divergent: {0}")]
    Divergence(String),
    #[error("no convergence: {msg} (best estimate {best}, error estimate {err:e})")]
    Convergence { msg: String, best: C64, err: f64 },
    #[error("decay stall: {0}")]
    DecayStall(String),
    #[error("non-finite value: {0}")]
    NonFinite(String),
    #[error("overflow: {0}")]
    Overflow(String),
    #[error("near pole at {pole}: {msg}")]
    NearPole { msg: String, pole: C64 },
    #[error("route disagreement: {0}")]
    RouteDisagreement(String),
    #[error("ill-conditioned fit: {0}")]
    IllConditionedFit(String),
    #[error("branch ambiguity: {0}")]
    BranchAmbiguity(String),
    #[error("ray on Stokes line: {0}")]
    StokesLine(String),
    #[error("i/o: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

/// Fails with [`Error::NonFinite`] if either component is NaN or infinite.
pub(crate) fn finite(z: C64, what: &str) -> Result<C64> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::NonFinite(format!("{what} = {z}")))
    }
}
