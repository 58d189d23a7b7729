use crate::error::{Error, Result};

/// Environment variable consulted by [`Budget::from_env`].
pub const BUDGET_ENV: &str = "IRP_BUDGET";

/// Upper bound on the size of any single enumeration (cycles, lattice scans,
/// parallelepiped points, search nodes). Exceeding it is reported as
/// [`Error::BudgetExceeded`], never as a truncated answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    limit: u64,
}

impl Budget {
    pub const DEFAULT_LIMIT: u64 = 200_000_000;

    pub fn new(limit: u64) -> Self {
        Budget { limit }
    }

    pub fn unlimited() -> Self {
        Budget { limit: u64::MAX }
    }

    /// Reads the limit from `IRP_BUDGET`, falling back to the default.
    pub fn from_env() -> Self {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(Budget::new)
            .unwrap_or_default()
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn meter(&self, what: &'static str) -> Meter {
        Meter {
            limit: self.limit,
            used: 0,
            what,
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Self::DEFAULT_LIMIT)
    }
}

/// Running count against a [`Budget`] for one enumeration.
#[derive(Debug)]
pub struct Meter {
    limit: u64,
    used: u64,
    what: &'static str,
}

impl Meter {
    pub fn tick(&mut self) -> Result<()> {
        self.add(1)
    }

    pub fn add(&mut self, n: u64) -> Result<()> {
        self.used = self.used.saturating_add(n);
        if self.used > self.limit {
            Err(Error::BudgetExceeded {
                what: self.what,
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }
}
