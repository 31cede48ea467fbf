//! Check records shared by the law checkers and the command-line reports.

use serde::Serialize;

use crate::fincat::{Functor, NatTransformation};

/// Outcome of one law check. `anchor` states the law being checked;
/// `counterexample` names concrete objects or morphisms when it fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub law: String,
    pub anchor: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl CheckRecord {
    pub fn new(law: impl Into<String>, anchor: impl Into<String>, failure: Option<String>) -> Self {
        CheckRecord { law: law.into(), anchor: anchor.into(), passed: failure.is_none(), counterexample: failure }
    }

    pub fn pass(law: impl Into<String>, anchor: impl Into<String>) -> Self {
        CheckRecord::new(law, anchor, None)
    }
}

/// An ordered list of check records.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Checks(pub Vec<CheckRecord>);

impl Checks {
    pub fn new() -> Self {
        Checks(Vec::new())
    }

    pub fn push(&mut self, record: CheckRecord) {
        self.0.push(record);
    }

    pub fn record(&mut self, law: &str, anchor: &str, failure: Option<String>) {
        self.0.push(CheckRecord::new(law, anchor, failure));
    }

    pub fn extend(&mut self, other: Checks) {
        self.0.extend(other.0);
    }

    pub fn passed(&self) -> bool {
        self.0.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.0.iter().filter(|r| !r.passed)
    }

    pub fn get(&self, law: &str) -> Option<&CheckRecord> {
        self.0.iter().find(|r| r.law == law)
    }

    /// Whether every record whose law starts with `prefix` passed (and at
    /// least one exists).
    pub fn passed_prefix(&self, prefix: &str) -> bool {
        let mut any = false;
        for r in self.0.iter().filter(|r| r.law.starts_with(prefix)) {
            any = true;
            if !r.passed {
                return false;
            }
        }
        any
    }

    pub fn iter(&self) -> impl Iterator<Item = &CheckRecord> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// First place where two parallel functors differ, by name.
pub fn functor_difference(left: &Functor, right: &Functor) -> Option<String> {
    let s = &**left.source();
    let t = &**left.target();
    if !crate::fincat::same_category(left.source(), right.source())
        || !crate::fincat::same_category(left.target(), right.target())
    {
        return Some("functors are not parallel".into());
    }
    for o in s.objects() {
        if left.ob(o) != right.ob(o) {
            return Some(format!(
                "object {}: {} vs {}",
                s.object_name(o),
                t.object_name(left.ob(o)),
                t.object_name(right.ob(o))
            ));
        }
    }
    for m in s.morphisms() {
        if left.mor(m) != right.mor(m) {
            return Some(format!(
                "morphism {}: {} vs {}",
                s.morphism_name(m),
                t.morphism_name(left.mor(m)),
                t.morphism_name(right.mor(m))
            ));
        }
    }
    None
}

/// First functoriality violation, by name.
pub fn functor_failure(f: &Functor) -> Option<String> {
    f.violations().first().map(|v| v.to_string())
}

pub fn natural_failure(a: &NatTransformation) -> Option<String> {
    a.failure()
}
