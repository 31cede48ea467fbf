use std::fmt::Write as _;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::Error;
use crate::report::Checks;

#[derive(Debug, Clone, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

impl InputDigest {
    pub fn new(path: &str, bytes: &[u8]) -> Self {
        InputDigest { path: path.to_string(), sha256: hex::encode(Sha256::digest(bytes)) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// What a command prints: the inputs it read, every check it ran, and
/// optionally a computed artifact.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub checks: Checks,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<serde_json::Value>,
    pub status: Status,
}

impl Report {
    pub fn new(command: &str, inputs: Vec<InputDigest>, checks: Checks, result: Option<serde_json::Value>) -> Self {
        let status = if checks.passed() { Status::Pass } else { Status::Fail };
        Report { command: command.to_string(), inputs, checks, result, status }
    }

    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Pass => 0,
            Status::Fail => 1,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
        };
        let _ = writeln!(out, "{}: {status}", self.command);
        for input in &self.inputs {
            let _ = writeln!(out, "  input {} sha256:{}", input.path, input.sha256);
        }
        for r in self.checks.iter() {
            let mark = if r.passed { "ok  " } else { "FAIL" };
            let _ = write!(out, "  {mark} {} [{}]", r.law, r.anchor);
            if let Some(c) = &r.counterexample {
                let _ = write!(out, ": {c}");
            }
            out.push('\n');
        }
        if let Some(result) = &self.result {
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(result).expect("result serializes"));
        }
        out
    }
}

/// 2 for bad input, 3 for a size guard, 1 for anything that went wrong
/// while checking.
pub fn error_exit_code(e: &Error) -> i32 {
    match e {
        Error::Input(_) | Error::NotACategory(_) => 2,
        Error::SizeGuard { .. } => 3,
        _ => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::InputError;

    #[test]
    fn digests_and_status() {
        let d = InputDigest::new("f", b"");
        assert_eq!(d.sha256, "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
        let mut checks = Checks::new();
        checks.record("law", "a = b", None);
        let r = Report::new("x", vec![d], checks.clone(), None);
        assert_eq!((r.status, r.exit_code()), (Status::Pass, 0));
        assert!(r.to_json().contains("\"status\": \"pass\""));
        checks.record("other", "c = d", Some("at k".into()));
        let r = Report::new("x", vec![], checks, None);
        assert_eq!(r.exit_code(), 1);
        assert!(r.to_text().contains("FAIL other [c = d]: at k"));
    }

    #[test]
    fn error_codes() {
        assert_eq!(error_exit_code(&Error::SizeGuard { what: "x", size: 2, limit: 1 }), 3);
        assert_eq!(error_exit_code(&InputError::new("here", "bad").into()), 2);
        assert_eq!(error_exit_code(&Error::Precondition("p".into())), 1);
    }
}
