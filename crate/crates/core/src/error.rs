use thiserror::Error;

/// Errors surfaced by the library.
///
/// `Inconsistency` is reserved for checked computations whose independent
/// routes disagree; callers should treat it as a hard failure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("size {n} exceeds the gate {limit} for {what} (raise it with TILTLAB_GATE_{env})")]
    Gate {
        what: &'static str,
        env: &'static str,
        n: usize,
        limit: usize,
    },
    #[error("internal consistency failure: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

/// Size gates for the exponential kernels. The default can be raised per
/// kernel through the environment variable `TILTLAB_GATE_<NAME>`.
pub fn check_gate(what: &'static str, env: &'static str, n: usize, default: usize) -> Result<()> {
    let limit = std::env::var(format!("TILTLAB_GATE_{env}"))
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(default);
    if n > limit {
        Err(Error::Gate { what, env, n, limit })
    } else {
        Ok(())
    }
}
