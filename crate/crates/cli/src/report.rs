//! Reports: per-check verdicts plus payloads, rendered as canonical JSON or
//! as text.

use std::collections::BTreeMap;
use std::path::Path;

use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use twocat::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
  Pass,
  Fail,
  Precondition,
}

impl Verdict {
  fn as_str(self) -> &'static str {
    match self {
      Verdict::Pass => "pass",
      Verdict::Fail => "fail",
      Verdict::Precondition => "precondition-unmet",
    }
  }
}

#[derive(Clone, Debug)]
pub struct Check {
  pub name: String,
  pub verdict: Verdict,
  pub message: String,
  pub witness: Value,
}

#[derive(Debug, Default)]
pub struct Report {
  pub command: Vec<String>,
  pub inputs: Vec<(String, String)>,
  pub checks: Vec<Check>,
  pub payload: BTreeMap<String, Value>,
}

impl Report {
  pub fn new(command: Vec<String>) -> Self {
    Report { command, ..Default::default() }
  }

  pub fn input(&mut self, path: &Path) {
    let digest = std::fs::read(path).map(|b| hex::encode(Sha256::digest(b))).unwrap_or_default();
    self.inputs.push((path.display().to_string(), digest));
  }

  pub fn pass(&mut self, name: &str, message: impl Into<String>, witness: Value) {
    self.checks.push(Check { name: name.into(), verdict: Verdict::Pass, message: message.into(), witness });
  }

  pub fn fail(&mut self, name: &str, message: impl Into<String>, witness: Value) {
    self.checks.push(Check { name: name.into(), verdict: Verdict::Fail, message: message.into(), witness });
  }

  /// Records an error from a check: theorem and stage failures fail the
  /// check, unmet preconditions are reported as such. Input errors are
  /// returned to the caller.
  pub fn record(&mut self, name: &str, e: Error) -> Result<(), Error> {
    match e {
      Error::Stage { stage, message, witness } => {
        self.checks.push(Check { name: name.into(), verdict: Verdict::Fail, message: format!("stage `{stage}`: {message}"), witness: json!({ "stage": stage, "witness": witness }) });
        Ok(())
      }
      Error::Precondition(m) => {
        self.checks.push(Check { name: name.into(), verdict: Verdict::Precondition, message: m, witness: Value::Null });
        Ok(())
      }
      e if e.is_check_failure() => {
        let witness = match &e {
          Error::NotSelfInjective { vertex, reason } => json!({ "vertex": vertex, "reason": reason }),
          _ => Value::Null,
        };
        self.fail(name, e.to_string(), witness);
        Ok(())
      }
      e => Err(e),
    }
  }

  pub fn put(&mut self, key: &str, v: Value) {
    self.payload.insert(key.into(), v);
  }

  /// 0 when every check passes, 2 on a failed check, 1 on an unmet
  /// precondition.
  pub fn exit_code(&self) -> i32 {
    if self.checks.iter().any(|c| c.verdict == Verdict::Fail) {
      2
    } else if self.checks.iter().any(|c| c.verdict == Verdict::Precondition) {
      1
    } else {
      0
    }
  }

  pub fn to_json(&self) -> Value {
    let checks: Vec<Value> = self
      .checks
      .iter()
      .map(|c| json!({ "name": c.name, "verdict": c.verdict.as_str(), "message": c.message, "witness": c.witness }))
      .collect();
    let inputs: Vec<Value> = self.inputs.iter().map(|(p, d)| json!({ "path": p, "sha256": d })).collect();
    json!({
      "command": self.command,
      "inputs": inputs,
      "checks": checks,
      "payload": self.payload,
      "exit": self.exit_code(),
    })
  }

  pub fn to_text(&self) -> String {
    let mut s = String::new();
    for c in &self.checks {
      let mark = match c.verdict {
        Verdict::Pass => "ok  ",
        Verdict::Fail => "FAIL",
        Verdict::Precondition => "skip",
      };
      s.push_str(&format!("{mark} {}: {}\n", c.name, c.message));
      if c.verdict == Verdict::Fail && !c.witness.is_null() {
        s.push_str(&format!("     witness: {}\n", c.witness));
      }
    }
    s
  }
}

/// Stream diagnostics for failed checks.
pub fn diagnostics(r: &Report) -> Vec<String> {
  r.checks
    .iter()
    .filter(|c| c.verdict == Verdict::Fail)
    .map(|c| format!("twocat: check `{}` failed: {} witness={}", c.name, c.message, c.witness))
    .collect()
}
