//! Verification reports: one entry per identity, with the first failing
//! case rendered in full.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityResult {
    pub name: String,
    pub range: String,
    /// Number of basis cases evaluated.
    pub cases: usize,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub identities: Vec<IdentityResult>,
    pub pass: bool,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report {
            suite: suite.into(),
            identities: Vec::new(),
            pass: true,
        }
    }

    pub fn push(&mut self, r: IdentityResult) {
        self.pass &= r.pass;
        self.identities.push(r);
    }

    /// Appends every identity of `other`, prefixing names with its suite.
    pub fn absorb(&mut self, other: Report) {
        for mut r in other.identities {
            r.name = format!("{}: {}", other.suite, r.name);
            self.push(r);
        }
    }

    pub fn identity(&self, name: &str) -> Option<&IdentityResult> {
        self.identities.iter().find(|r| r.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityResult> {
        self.identities.iter().filter(|r| !r.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}", self.suite)?;
        for r in &self.identities {
            let mark = if r.pass { "PASS" } else { "FAIL" };
            writeln!(f, "  [{mark}] {} ({}; {} cases)", r.name, r.range, r.cases)?;
            if let Some(w) = &r.witness {
                writeln!(f, "         witness: {w}")?;
            }
        }
        write!(f, "overall: {}", if self.pass { "PASS" } else { "FAIL" })
    }
}

/// Result of a single identity: `lhs == rhs`, or the rendered witness.
pub fn compare<T: PartialEq + fmt::Display>(context: impl FnOnce() -> String, lhs: &T, rhs: &T) -> Option<String> {
    if lhs == rhs {
        None
    } else {
        Some(format!("{}: lhs = {lhs}; rhs = {rhs}", context()))
    }
}

/// Evaluates `check` on every case in parallel. The reported witness is the
/// first failing case in input order, so reports are deterministic.
pub fn check_all<T, F>(name: &str, range: impl Into<String>, cases: &[T], check: F) -> IdentityResult
where
    T: Sync,
    F: Fn(&T) -> Option<String> + Sync + Send,
{
    let witness = cases.par_iter().find_map_first(&check);
    IdentityResult {
        name: name.to_string(),
        range: range.into(),
        cases: cases.len(),
        pass: witness.is_none(),
        witness,
    }
}

/// Sequential variant of [`check_all`] for cheap checks.
pub fn check_seq<T, F>(name: &str, range: impl Into<String>, cases: &[T], check: F) -> IdentityResult
where
    F: Fn(&T) -> Option<String>,
{
    let witness = cases.iter().find_map(check);
    IdentityResult {
        name: name.to_string(),
        range: range.into(),
        cases: cases.len(),
        pass: witness.is_none(),
        witness,
    }
}

/// A one-off boolean identity.
pub fn single(name: &str, range: impl Into<String>, witness: Option<String>) -> IdentityResult {
    IdentityResult {
        name: name.to_string(),
        range: range.into(),
        cases: 1,
        pass: witness.is_none(),
        witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overall_status_tracks_identities() {
        let mut r = Report::new("demo");
        r.push(check_seq("even", "0..4", &[0, 2, 4], |x| (x % 2 != 0).then(|| format!("{x}"))));
        assert!(r.pass);
        r.push(check_all("small", "0..4", &[1, 5, 7], |x| (*x > 3).then(|| format!("x = {x}"))));
        assert!(!r.pass);
        assert_eq!(r.identity("small").unwrap().witness.as_deref(), Some("x = 5"));
        let json: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(json, r);
        assert!(r.to_string().contains("[FAIL] small"));
    }
}
