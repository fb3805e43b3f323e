use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

/// One instance that failed a check, with enough data to rebuild it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Failure {
    pub instance: u64,
    pub reason: String,
    pub artifact: serde_json::Value,
}

/// Outcome of a verification run over a family of instances.
///
/// Partial reports merge associatively; counts add, failures are kept in
/// instance order, so the merged report does not depend on completion
/// order. Wall time is excluded from the text form.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub family: String,
    pub params: BTreeMap<String, String>,
    pub instances: u64,
    pub stats: BTreeMap<String, u64>,
    pub failures: Vec<Failure>,
    pub wall_time_s: f64,
}

impl VerificationReport {
    pub fn new(family: impl Into<String>) -> Self {
        Self {
            family: family.into(),
            params: BTreeMap::new(),
            instances: 0,
            stats: BTreeMap::new(),
            failures: Vec::new(),
            wall_time_s: 0.0,
        }
    }

    pub fn param(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn bump(&mut self, stat: &str, by: u64) {
        *self.stats.entry(stat.to_string()).or_default() += by;
    }

    pub fn fail(&mut self, instance: u64, reason: impl Into<String>, artifact: serde_json::Value) {
        self.failures.push(Failure { instance, reason: reason.into(), artifact });
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Folds `other` into `self`. Family and parameters of `self` are kept.
    pub fn merge(mut self, other: VerificationReport) -> Self {
        self.instances += other.instances;
        for (k, v) in other.stats {
            *self.stats.entry(k).or_default() += v;
        }
        self.failures.extend(other.failures);
        self.failures.sort_by(|a, b| (a.instance, &a.reason).cmp(&(b.instance, &b.reason)));
        self.wall_time_s += other.wall_time_s;
        self
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "family: {}", self.family)?;
        for (k, v) in &self.params {
            write!(f, " {k}={v}")?;
        }
        writeln!(f)?;
        writeln!(f, "instances: {}", self.instances)?;
        for (k, v) in &self.stats {
            writeln!(f, "{k}: {v}")?;
        }
        writeln!(f, "failures: {}", self.failures.len())?;
        for fl in &self.failures {
            writeln!(f, "  #{}: {}", fl.instance, fl.reason)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(instance: u64, fail: bool) -> VerificationReport {
        let mut r = VerificationReport::new("t");
        r.instances = 1;
        r.bump("seen", 1);
        if fail {
            r.fail(instance, "bad", serde_json::Value::Null);
        }
        r
    }

    #[test]
    fn merge_is_order_independent() {
        let parts = [part(0, false), part(1, true), part(2, true)];
        let fwd = parts.iter().cloned().fold(VerificationReport::new("t"), VerificationReport::merge);
        let rev = parts.iter().rev().cloned().fold(VerificationReport::new("t"), VerificationReport::merge);
        assert_eq!(fwd, rev);
        assert_eq!(fwd.instances, 3);
        assert_eq!(fwd.stats["seen"], 3);
        assert_eq!(fwd.failures.iter().map(|f| f.instance).collect::<Vec<_>>(), vec![1, 2]);
    }
}
