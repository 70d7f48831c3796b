use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    /// Capacity diverges at zero distance.
    #[error("capacity is singular at zero distance")]
    Singularity,

    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("malformed process spec `{token}`: {reason}")]
    InvalidProcessSpec { token: String, reason: String },

    #[error("unknown strategy `{0}` (expected one of: direct, coop-tx, best-relay, best-jammer)")]
    UnknownStrategy(String),

    #[error("unknown sweep axis `{axis}` (valid axes: {valid})")]
    UnknownAxis { axis: String, valid: String },

    #[error("number of trials must be at least 1")]
    ZeroTrials,

    #[error("cannot split a pre-secret into zero blocks")]
    ZeroBlocks,

    #[error("pre-secret of {len} octets is shorter than the {blocks} requested blocks")]
    PreSecretTooShort { len: usize, blocks: usize },

    #[error("could not start worker threads: {0}")]
    ThreadPool(String),

    #[error("deployment has no transmitters")]
    NoTransmitters,
}
