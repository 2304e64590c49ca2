use crate::error::{Error, Result};

/// Default number of search steps a single solver call may take.
pub const DEFAULT_SOLVER_BUDGET: u64 = 1 << 24;

/// Step counter shared by the branching solvers.
#[derive(Clone, Debug)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    pub fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::SearchLimit { limit: self.limit })
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_SOLVER_BUDGET)
    }
}
