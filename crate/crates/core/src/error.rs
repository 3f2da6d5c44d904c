use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// `I^0` is the identity; the single-sum formula is only defined for a
    /// positive number of integrations.
    #[error("integration power must be at least 1")]
    ZeroIntegrationPower,
    #[error("parameter `{0}` must be at least 1")]
    ZeroParameter(&'static str),
    #[error("index {i} out of range for row {n}")]
    IndexOutOfRange { n: u64, i: u64 },
}
