//! Pass/fail reports with concrete witnesses.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{LinMap, Space, Vector};

/// Where an identity failed and what its two sides evaluated to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Basis tuple (labels) at which the sides were evaluated.
    pub at: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            passed: true,
            witness: None,
            detail: None,
        }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            passed: false,
            witness: None,
            detail: Some(detail.into()),
        }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Check {
        if ok {
            Check::pass(name)
        } else {
            Check::fail(name, detail)
        }
    }

    pub fn with_witness(name: impl Into<String>, witness: Witness) -> Check {
        Check {
            name: name.into(),
            passed: false,
            witness: Some(witness),
            detail: None,
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Check {
        self.detail = Some(detail.into());
        self
    }

    /// Compares two maps column by column; the witness names the first
    /// differing domain basis vector via `at`.
    pub fn maps_equal(
        name: impl Into<String>,
        lhs: &LinMap,
        rhs: &LinMap,
        at: impl Fn(usize) -> Vec<String>,
    ) -> Check {
        let name = name.into();
        if lhs.domain().dim() != rhs.domain().dim() || lhs.codomain().dim() != rhs.codomain().dim() {
            return Check::fail(
                name,
                format!(
                    "shape mismatch: {}→{} vs {}→{}",
                    lhs.domain().dim(),
                    lhs.codomain().dim(),
                    rhs.domain().dim(),
                    rhs.codomain().dim()
                ),
            );
        }
        match lhs.first_difference(rhs) {
            None => Check::pass(name),
            Some((i, l, r)) => Check::with_witness(
                name,
                Witness {
                    at: at(i),
                    lhs: l.display(lhs.codomain()),
                    rhs: r.display(rhs.codomain()),
                },
            ),
        }
    }

    /// Vectors compared in `space`.
    pub fn vectors_equal(name: impl Into<String>, at: Vec<String>, space: &Space, lhs: &Vector, rhs: &Vector) -> Check {
        if lhs == rhs {
            Check::pass(name)
        } else {
            Check::with_witness(
                name,
                Witness {
                    at,
                    lhs: lhs.display(space),
                    rhs: rhs.display(space),
                },
            )
        }
    }

    pub fn summary(&self) -> String {
        let mut s = self.name.clone();
        if let Some(w) = &self.witness {
            if !w.at.is_empty() {
                s.push_str(&format!(" at ({})", w.at.join(", ")));
            }
            s.push_str(&format!(": {} ≠ {}", w.lhs, w.rhs));
        }
        if let Some(d) = &self.detail {
            s.push_str(&format!(" [{d}]"));
        }
        s
    }
}

/// Witness labels for a domain basis index, one label per tensor leg.
pub fn leg_labels(space: &Space, i: usize) -> Vec<String> {
    let factors = space.factors();
    if factors.len() <= 1 {
        return vec![space.label(i)];
    }
    let dims: Vec<usize> = factors.iter().map(|f| f.dim()).collect();
    crate::exactlin::tensor::unflatten(i, &dims)
        .into_iter()
        .zip(&factors)
        .map(|(k, f)| f.label(k))
        .collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Report {
        Report {
            subject: subject.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) -> &mut Report {
        self.checks.push(check);
        self
    }

    /// Appends every check of `other`, with names prefixed by `prefix`.
    pub fn absorb(&mut self, prefix: &str, other: Report) -> &mut Report {
        for mut c in other.checks {
            if !prefix.is_empty() {
                c.name = format!("{prefix}: {}", c.name);
            }
            self.checks.push(c);
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// `Ok(self)` when every check passed, otherwise `Error::CheckFailed`.
    pub fn into_result(self) -> Result<Report> {
        if self.passed() {
            Ok(self)
        } else {
            Err(Error::CheckFailed(Box::new(self)))
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(f, "{status} {}", self.subject)?;
        for c in &self.checks {
            if c.passed {
                writeln!(f, "  ok    {}", c.name)?;
            } else {
                writeln!(f, "  FAIL  {}", c.summary())?;
            }
        }
        Ok(())
    }
}
