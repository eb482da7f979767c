use serde_json::Value;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
  #[error("configuration error: {0}")]
  Config(String),
  #[error("invalid input: {0}")]
  Input(String),
  #[error("dimension mismatch: {0}")]
  Dimension(String),
  #[error("precondition unmet: {0}")]
  Precondition(String),
  #[error("not self-injective at vertex {vertex}: {reason}")]
  NotSelfInjective { vertex: usize, reason: String },
  #[error("accounting mismatch: {0}")]
  Accounting(String),
  #[error("theorem violation: {0}")]
  Violation(String),
  #[error("stage `{stage}` failed: {message}")]
  Stage { stage: String, message: String, witness: Value },
}

impl Error {
  pub fn stage(stage: &str, message: impl Into<String>, witness: Value) -> Self {
    Error::Stage { stage: stage.to_string(), message: message.into(), witness }
  }

  /// Failures that indicate a mathematical check did not hold, as opposed to
  /// bad input or configuration.
  pub fn is_check_failure(&self) -> bool {
    matches!(
      self,
      Error::NotSelfInjective { .. } | Error::Accounting(_) | Error::Violation(_) | Error::Stage { .. }
    )
  }
}
