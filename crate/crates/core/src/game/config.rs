use crate::budget::binomial;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Canonical cop multiset: positions sorted non-decreasingly.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct CopConfig(Vec<usize>);

impl CopConfig {
    pub fn new(mut positions: Vec<usize>) -> Result<Self> {
        if positions.is_empty() {
            return Err(Error::InvalidParameter("a cop configuration needs at least one cop".into()));
        }
        positions.sort_unstable();
        Ok(CopConfig(positions))
    }

    pub fn positions(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn check_range(&self, n: usize) -> Result<()> {
        match self.0.iter().find(|&&v| v >= n) {
            Some(&vertex) => Err(Error::VertexOutOfRange { vertex, n }),
            None => Ok(()),
        }
    }

    /// True when every vertex of `self` also appears in `other` with at
    /// least the same multiplicity.
    pub fn is_submultiset_of(&self, other: &CopConfig) -> bool {
        let mut j = 0;
        for &v in &self.0 {
            while j < other.0.len() && other.0[j] < v {
                j += 1;
            }
            if j == other.0.len() || other.0[j] != v {
                return false;
            }
            j += 1;
        }
        true
    }
}

impl TryFrom<Vec<usize>> for CopConfig {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        CopConfig::new(v)
    }
}

impl From<CopConfig> for Vec<usize> {
    fn from(c: CopConfig) -> Self {
        c.0
    }
}

impl fmt::Display for CopConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// A position with the cops to move next.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GameState {
    pub cops: CopConfig,
    pub robber: usize,
}

impl GameState {
    pub fn is_terminal(&self) -> bool {
        self.cops.contains(self.robber)
    }
}

/// Dense ranking of the size-`k` multisets over `0..n`.
///
/// A multiset `c_0 <= ... <= c_{k-1}` maps to the strictly increasing
/// sequence `c_i + i`, ranked in colexicographic order.
#[derive(Debug, Clone)]
pub struct ConfigSpace {
    n: usize,
    k: usize,
    /// `binom[a][b] = C(a, b)` for `a < n + k`, `b <= k`.
    binom: Vec<Vec<usize>>,
}

impl ConfigSpace {
    pub fn new(n: usize, k: usize) -> Self {
        let rows = n + k;
        let binom = (0..rows)
            .map(|a| (0..=k).map(|b| binomial(a as u64, b as u64) as usize).collect())
            .collect();
        ConfigSpace { n, k, binom }
    }

    /// Number of multisets, `C(n + k - 1, k)`, saturating.
    pub fn size_u64(n: usize, k: usize) -> u64 {
        if n == 0 {
            return u64::from(k == 0);
        }
        binomial((n + k - 1) as u64, k as u64)
    }

    pub fn size(&self) -> usize {
        Self::size_u64(self.n, self.k) as usize
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Rank of a sorted position list of length `k`.
    pub fn rank(&self, sorted: &[usize]) -> usize {
        debug_assert_eq!(sorted.len(), self.k);
        sorted
            .iter()
            .enumerate()
            .map(|(i, &c)| self.binom[c + i][i + 1])
            .sum()
    }

    /// All multisets in rank order, flattened with stride `k`.
    pub fn enumerate_flat(&self) -> Vec<usize> {
        let (k, top) = (self.k, self.n + self.k - 1);
        let size = self.size();
        let mut out = Vec::with_capacity(size * k);
        if k == 0 || self.n == 0 {
            return out;
        }
        let mut b: Vec<usize> = (0..k).collect();
        loop {
            out.extend(b.iter().enumerate().map(|(i, &x)| x - i));
            // Next combination in colex order.
            let mut i = 0;
            while i < k {
                let limit = if i + 1 < k { b[i + 1] } else { top };
                if b[i] + 1 < limit {
                    break;
                }
                i += 1;
            }
            if i == k {
                break;
            }
            b[i] += 1;
            for (j, slot) in b.iter_mut().enumerate().take(i) {
                *slot = j;
            }
        }
        debug_assert_eq!(out.len(), size * k);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks_are_dense_and_ordered() {
        for (n, k) in [(1, 1), (4, 1), (5, 2), (4, 3), (3, 4)] {
            let space = ConfigSpace::new(n, k);
            let flat = space.enumerate_flat();
            assert_eq!(flat.len(), space.size() * k);
            for (idx, chunk) in flat.chunks(k).enumerate() {
                assert!(chunk.windows(2).all(|w| w[0] <= w[1]));
                assert_eq!(space.rank(chunk), idx);
            }
        }
        assert_eq!(ConfigSpace::new(50, 2).size(), 1275);
    }

    #[test]
    fn config_basics() {
        let c = CopConfig::new(vec![3, 1, 3]).unwrap();
        assert_eq!(c.positions(), &[1, 3, 3]);
        assert!(c.contains(3) && !c.contains(2));
        assert!(CopConfig::new(vec![1, 3]).unwrap().is_submultiset_of(&c));
        assert!(!CopConfig::new(vec![1, 1]).unwrap().is_submultiset_of(&c));
        assert!(CopConfig::new(vec![]).is_err());
        assert!(c.check_range(3).is_err());
        assert_eq!(c.to_string(), "1 3 3");
    }
}
