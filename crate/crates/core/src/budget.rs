use crate::error::{Error, Result};

/// Default work budget for exhaustive searches, in elementary steps.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Upper limit on the elementary steps an exhaustive search may take.
///
/// Searches that would exceed it fail with [`Error::BudgetExceeded`] instead
/// of returning a degraded answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Default for Budget {
    fn default() -> Self {
        Budget(DEFAULT_BUDGET)
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget(u64::MAX)
    }

    /// Fails if a search known in advance to need `required` steps does not fit.
    pub fn check(self, what: &'static str, required: u64) -> Result<()> {
        if required > self.0 {
            Err(Error::BudgetExceeded {
                what,
                required,
                limit: self.0,
            })
        } else {
            Ok(())
        }
    }

    pub fn meter(self, what: &'static str) -> Meter {
        Meter {
            what,
            used: 0,
            limit: self.0,
        }
    }
}

/// Running step counter for searches whose cost is only known as they go.
#[derive(Debug)]
pub struct Meter {
    what: &'static str,
    used: u64,
    limit: u64,
}

impl Meter {
    #[inline]
    pub fn tick(&mut self, steps: u64) -> Result<()> {
        self.used = self.used.saturating_add(steps);
        if self.used > self.limit {
            Err(Error::BudgetExceeded {
                what: self.what,
                required: self.used,
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }
}

/// Binomial coefficient, saturating at `u64::MAX`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(9, 2), 36);
        assert_eq!(binomial(52, 3), 22100);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(0, 0), 1);
    }

    #[test]
    fn meter_trips() {
        let mut m = Budget(10).meter("test");
        assert!(m.tick(10).is_ok());
        assert!(matches!(
            m.tick(1),
            Err(Error::BudgetExceeded { required: 11, .. })
        ));
    }
}
