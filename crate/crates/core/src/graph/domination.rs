use super::distance::{bfs_levels, distance_matrix, Distance};
use super::Graph;
use crate::budget::{binomial, Budget};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadiusResult {
    pub value: Distance,
    pub witness: Vec<usize>,
}

/// `rad_k(G)` by enumerating every `k`-subset; the witness is the
/// lexicographically least optimal set.
pub fn k_radius_exact(g: &Graph, k: usize, budget: Budget) -> Result<RadiusResult> {
    let n = g.n();
    if k == 0 || k > n {
        return Err(Error::InvalidParameter(format!(
            "k-radius needs 1 <= k <= n, got k={k}, n={n}"
        )));
    }
    let subsets = binomial(n as u64, k as u64);
    budget.check("k-radius enumeration", subsets.saturating_mul(n as u64))?;

    let dist = distance_matrix(g);
    // Per-depth running minimum distance to the chosen prefix.
    let mut layers = vec![vec![usize::MAX; n]; k + 1];
    let mut chosen = Vec::with_capacity(k);
    let mut best = (usize::MAX, Vec::new());
    let mut found = false;
    search_radius(&dist, k, 0, &mut layers, &mut chosen, &mut best, &mut found);

    let value = if best.0 == usize::MAX {
        Distance::Unreachable
    } else {
        Distance::Finite(best.0)
    };
    let witness = if found { best.1 } else { (0..k).collect() };
    Ok(RadiusResult { value, witness })
}

fn search_radius(
    dist: &[Vec<usize>],
    k: usize,
    start: usize,
    layers: &mut Vec<Vec<usize>>,
    chosen: &mut Vec<usize>,
    best: &mut (usize, Vec<usize>),
    found: &mut bool,
) {
    let n = dist.len();
    let depth = chosen.len();
    if depth == k {
        let worst = layers[depth].iter().copied().max().unwrap_or(0);
        if !*found || worst < best.0 {
            *best = (worst, chosen.clone());
            *found = true;
        }
        return;
    }
    for s in start..=n - (k - depth) {
        let (lo, hi) = layers.split_at_mut(depth + 1);
        let prev = &lo[depth];
        let next = &mut hi[0];
        for v in 0..n {
            next[v] = prev[v].min(dist[s][v]);
        }
        chosen.push(s);
        search_radius(dist, k, s + 1, layers, chosen, best, found);
        chosen.pop();
        if *found && best.0 == 0 {
            return;
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DominationMode {
    Exact,
    Greedy,
}

/// A set `S` with `d(v, S) <= k` for every vertex.
///
/// Greedy mode runs the deepest-leaf construction on a breadth-first tree
/// and returns at most `floor(n / (k + 1))` vertices for connected graphs
/// with `n >= k + 1`. Exact mode is a branch-and-bound search for a minimum
/// set and works on disconnected graphs too.
pub fn k_distance_dominating(
    g: &Graph,
    k: usize,
    mode: DominationMode,
    budget: Budget,
) -> Result<Vec<usize>> {
    match mode {
        DominationMode::Greedy => greedy_dominating(g, k),
        DominationMode::Exact => exact_dominating(g, k, budget),
    }
}

/// `γ(G)` with a minimum dominating set.
pub fn domination_number(g: &Graph, budget: Budget) -> Result<(usize, Vec<usize>)> {
    let set = exact_dominating(g, 1, budget)?;
    Ok((set.len(), set))
}

fn greedy_dominating(g: &Graph, k: usize) -> Result<Vec<usize>> {
    let n = g.n();
    if n == 0 {
        return Ok(Vec::new());
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let depth = bfs_levels(g, &[0], None);
    let mut parent = vec![usize::MAX; n];
    for v in 1..n {
        parent[v] = *g
            .neighbors(v)
            .iter()
            .find(|&&w| depth[w] + 1 == depth[v])
            .expect("BFS parent");
    }
    let mut children = vec![Vec::new(); n];
    for v in 1..n {
        children[parent[v]].push(v);
    }

    let mut alive = vec![true; n];
    let mut remaining = n;
    let mut picked = Vec::new();
    loop {
        let x = (0..n)
            .filter(|&v| alive[v])
            .max_by_key(|&v| (depth[v], std::cmp::Reverse(v)))
            .expect("loop runs while vertices remain");
        if depth[x] <= k {
            // Everything left hangs within k of the root.
            picked.push(0);
            break;
        }
        let mut a = x;
        for _ in 0..k {
            a = parent[a];
        }
        // Subtree of `a` among live vertices lies within k of `a`.
        let mut stack = vec![a];
        let mut removed = 0;
        while let Some(u) = stack.pop() {
            if alive[u] {
                alive[u] = false;
                removed += 1;
                stack.extend(children[u].iter().copied());
            }
        }
        remaining -= removed;
        picked.push(a);
        if remaining <= k {
            // The rest is a tree of at most k vertices containing parent(a),
            // hence within distance k of `a`.
            break;
        }
    }
    picked.sort_unstable();
    picked.dedup();
    Ok(picked)
}

struct CoverSearch<'a> {
    balls: &'a [Vec<usize>],
    best: Vec<usize>,
    meter: crate::budget::Meter,
}

fn exact_dominating(g: &Graph, k: usize, budget: Budget) -> Result<Vec<usize>> {
    let n = g.n();
    if n == 0 {
        return Ok(Vec::new());
    }
    let dist = distance_matrix(g);
    let balls: Vec<Vec<usize>> = (0..n)
        .map(|v| (0..n).filter(|&u| dist[v][u] <= k).collect())
        .collect();
    let initial = if g.is_connected() {
        greedy_dominating(g, k)?
    } else {
        (0..n).collect()
    };
    let mut search = CoverSearch {
        balls: &balls,
        best: initial,
        meter: budget.meter("exact distance domination"),
    };
    let mut cover_count = vec![0u32; n];
    let mut chosen = Vec::new();
    search.descend(&mut cover_count, &mut chosen)?;
    let mut best = search.best;
    best.sort_unstable();
    Ok(best)
}

impl CoverSearch<'_> {
    fn descend(&mut self, cover: &mut Vec<u32>, chosen: &mut Vec<usize>) -> Result<()> {
        self.meter.tick(cover.len() as u64)?;
        let n = cover.len();
        // Uncovered vertex with the fewest candidate coverers.
        let pivot = (0..n)
            .filter(|&v| cover[v] == 0)
            .min_by_key(|&v| (self.balls[v].len(), v));
        let Some(pivot) = pivot else {
            if chosen.len() < self.best.len() {
                self.best = chosen.clone();
            }
            return Ok(());
        };
        if chosen.len() + self.packing_bound(cover) >= self.best.len() {
            return Ok(());
        }
        let mut candidates = self.balls[pivot].clone();
        // Try coverers that reach the most uncovered vertices first.
        candidates.sort_by_key(|&u| {
            let gain = self.balls[u].iter().filter(|&&w| cover[w] == 0).count();
            (std::cmp::Reverse(gain), u)
        });
        for u in candidates {
            for &w in &self.balls[u] {
                cover[w] += 1;
            }
            chosen.push(u);
            let res = self.descend(cover, chosen);
            chosen.pop();
            for &w in &self.balls[u] {
                cover[w] -= 1;
            }
            res?;
            if chosen.len() + 1 >= self.best.len() {
                break;
            }
        }
        Ok(())
    }

    /// Uncovered vertices with pairwise disjoint coverer sets each need
    /// their own chosen vertex.
    fn packing_bound(&self, cover: &[u32]) -> usize {
        let n = cover.len();
        let mut order: Vec<usize> = (0..n).filter(|&v| cover[v] == 0).collect();
        order.sort_by_key(|&v| (self.balls[v].len(), v));
        let mut blocked = vec![false; n];
        let mut count = 0;
        for v in order {
            if self.balls[v].iter().all(|&u| !blocked[u]) {
                count += 1;
                for &u in &self.balls[v] {
                    blocked[u] = true;
                }
            }
        }
        count
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    fn covers(g: &Graph, set: &[usize], k: usize) -> bool {
        let d = bfs_levels(g, set, None);
        d.iter().all(|&x| x <= k)
    }

    #[test]
    fn radius_examples() {
        let r = k_radius_exact(&path(9), 1, Budget::default()).unwrap();
        assert_eq!(r, RadiusResult { value: Distance::Finite(4), witness: vec![4] });
        let r = k_radius_exact(&path(9), 2, Budget::default()).unwrap();
        assert_eq!(r.value, Distance::Finite(2));
        assert_eq!(r.witness, vec![1, 6]);
        let r = k_radius_exact(&cycle(5), 2, Budget::default()).unwrap();
        assert_eq!(r.value, Distance::Finite(1));
    }

    #[test]
    fn radius_disconnected_and_errors() {
        let g = Graph::empty(3);
        assert_eq!(k_radius_exact(&g, 2, Budget::default()).unwrap().value, Distance::Unreachable);
        assert_eq!(k_radius_exact(&g, 3, Budget::default()).unwrap().value, Distance::Finite(0));
        assert!(k_radius_exact(&g, 0, Budget::default()).is_err());
        assert!(matches!(
            k_radius_exact(&path(30), 10, Budget(1000)),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn domination_examples() {
        let s = k_distance_dominating(&path(9), 2, DominationMode::Greedy, Budget::default()).unwrap();
        assert!(s.len() <= 3 && covers(&path(9), &s, 2));
        let s = k_distance_dominating(&complete(5), 1, DominationMode::Exact, Budget::default()).unwrap();
        assert_eq!(s.len(), 1);
        let s = k_distance_dominating(&path(9), 1, DominationMode::Exact, Budget::default()).unwrap();
        assert_eq!(s.len(), 3);
        assert!(covers(&path(9), &s, 1));
        assert_eq!(
            k_distance_dominating(&Graph::empty(2), 1, DominationMode::Greedy, Budget::default()),
            Err(Error::Disconnected)
        );
        assert_eq!(domination_number(&Graph::empty(3), Budget::default()).unwrap().0, 3);
    }

    #[test]
    fn exact_matches_subset_enumeration() {
        // Brute force over all subsets of small graphs.
        for g in [path(7), cycle(7), cycle(8), complete(4)] {
            for k in 1..3 {
                let n = g.n();
                let brute = (0u32..1 << n)
                    .filter(|mask| {
                        let set: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
                        !set.is_empty() && covers(&g, &set, k)
                    })
                    .map(|m| m.count_ones() as usize)
                    .min()
                    .unwrap();
                let s = k_distance_dominating(&g, k, DominationMode::Exact, Budget::default()).unwrap();
                assert_eq!(s.len(), brute);
                assert!(covers(&g, &s, k));
            }
        }
    }
}
