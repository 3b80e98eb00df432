//! Pass/fail summaries for identity checks.

use std::fmt;

/// Outcome of a batch of checks. Only the first few failures are kept.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub name: String,
    pub checked: u64,
    pub failed: u64,
    pub failures: Vec<String>,
}

const KEEP: usize = 5;

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Report {
            name: name.into(),
            ..Default::default()
        }
    }

    /// Records one check; `detail` is only evaluated on failure.
    pub fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < KEEP {
                self.failures.push(detail());
            }
        }
    }

    pub fn merge(&mut self, other: Report) {
        self.checked += other.checked;
        self.failed += other.failed;
        for f in other.failures {
            if self.failures.len() < KEEP {
                self.failures.push(f);
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "{}: PASS ({} checked)", self.name, self.checked)
        } else {
            write!(f, "{}: FAIL ({} of {} failed)", self.name, self.failed, self.checked)?;
            for line in &self.failures {
                write!(f, "\n  {line}")?;
            }
            Ok(())
        }
    }
}
