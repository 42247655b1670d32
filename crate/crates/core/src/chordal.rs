//! Chordal graphs: recognition, clique decompositions, corner elimination,
//! and the distance formula for capture time with its throttling bounds.

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::game::{CopConfig, GameValue};
use crate::graph::{
    bfs_levels, center, closed_nbhd_within, is_geodesic, k_distance_dominating, k_radius_exact,
    radius, CornerWitness, Distance, DominationMode, Graph,
};
use crate::strategy::{ball_guard_time, PlacementCertificate, Stage};
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationOrdering {
    /// Elimination order: the reverse of the lexicographic BFS visit order.
    pub order: Vec<usize>,
    pub chordal: bool,
    /// An induced cycle of length at least four when not chordal.
    pub cycle: Option<Vec<usize>>,
}

/// Lexicographic breadth-first search (ties to the lowest id), followed by
/// a check of the perfect elimination property.
pub fn lexbfs_order(g: &Graph) -> EliminationOrdering {
    let n = g.n();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut visited = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for step in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .fold(None::<usize>, |best, v| match best {
                Some(b) if labels[b] >= labels[v] => Some(b),
                _ => Some(v),
            })
            .expect("unvisited vertex remains");
        visited[v] = true;
        visit.push(v);
        for &w in g.neighbors(v) {
            if !visited[w] {
                labels[w].push(n - step);
            }
        }
    }
    visit.reverse();
    let order = visit;
    let chordal = is_perfect_elimination(g, &order);
    let cycle = if chordal { None } else { induced_long_cycle(g) };
    EliminationOrdering { order, chordal, cycle }
}

/// True when each vertex's neighbors later in `order` form a clique.
pub fn is_perfect_elimination(g: &Graph, order: &[usize]) -> bool {
    let n = g.n();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order.iter().all(|&v| {
        let later: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]).collect();
        later.iter().enumerate().all(|(i, &a)| later[i + 1..].iter().all(|&b| g.has_edge(a, b)))
    })
}

pub fn is_chordal(g: &Graph) -> bool {
    lexbfs_order(g).chordal
}

/// Some induced cycle of length at least four: a vertex `v` with
/// non-adjacent neighbors `x`, `y`, closed by a shortest `x`-`y` path that
/// avoids the rest of `N[v]`.
fn induced_long_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    for v in g.vertices() {
        let nb = g.neighbors(v);
        for (i, &x) in nb.iter().enumerate() {
            for &y in &nb[i + 1..] {
                if g.has_edge(x, y) {
                    continue;
                }
                let mut allowed = vec![true; n];
                allowed[v] = false;
                for &w in nb {
                    allowed[w] = w == x || w == y;
                }
                if let Some(path) = crate::graph::geodesic_within(g, x, y, Some(&allowed)) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

fn require_connected_chordal(g: &Graph) -> Result<EliminationOrdering> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let peo = lexbfs_order(g);
    if !peo.chordal {
        return Err(Error::NotChordal(peo.cycle.clone().unwrap_or_default()));
    }
    Ok(peo)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueDecomposition {
    pub cliques: Vec<Vec<usize>>,
}

impl CliqueDecomposition {
    /// Checks that every part is a clique, the parts cover the graph, and
    /// each part meets the union of the earlier ones in a non-empty subset
    /// of a single earlier part.
    pub fn verify(&self, g: &Graph) -> bool {
        let n = g.n();
        let mut seen = vec![false; n];
        for (i, x) in self.cliques.iter().enumerate() {
            let is_clique = x.iter().enumerate().all(|(a, &u)| x[a + 1..].iter().all(|&v| g.has_edge(u, v)));
            if !is_clique || x.iter().any(|&v| v >= n) {
                return false;
            }
            if i > 0 {
                let meet: Vec<usize> = x.iter().copied().filter(|&v| seen[v]).collect();
                if meet.is_empty() {
                    return false;
                }
                let inside_one = self.cliques[..i]
                    .iter()
                    .any(|earlier| meet.iter().all(|v| earlier.contains(v)));
                if !inside_one {
                    return false;
                }
            }
            for &v in x {
                seen[v] = true;
            }
        }
        seen.iter().all(|&s| s)
    }
}

/// Maximal cliques from a perfect elimination order, arranged along a
/// maximum-weight spanning tree of their intersection graph and listed in
/// breadth-first order from the first clique.
pub fn clique_decomposition(g: &Graph) -> Result<CliqueDecomposition> {
    let peo = require_connected_chordal(g)?;
    let n = g.n();
    let mut pos = vec![0; n];
    for (i, &v) in peo.order.iter().enumerate() {
        pos[v] = i;
    }
    let mut candidates: Vec<Vec<usize>> = peo
        .order
        .iter()
        .map(|&v| {
            let mut c: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]).collect();
            c.push(v);
            c.sort_unstable();
            c
        })
        .collect();
    candidates.sort();
    candidates.dedup();
    let subset = |a: &[usize], b: &[usize]| a.len() < b.len() && a.iter().all(|x| b.binary_search(x).is_ok());
    let cliques: Vec<Vec<usize>> = candidates
        .iter()
        .filter(|c| !candidates.iter().any(|d| subset(c, d)))
        .cloned()
        .collect();

    let m = cliques.len();
    let mut edges = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let w = cliques[i].iter().filter(|v| cliques[j].binary_search(v).is_ok()).count();
            if w > 0 {
                edges.push((std::cmp::Reverse(w), i, j));
            }
        }
    }
    edges.sort();
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut tree = vec![Vec::new(); m];
    for (_, i, j) in edges {
        let (a, b) = (find(&mut parent, i), find(&mut parent, j));
        if a != b {
            parent[a] = b;
            tree[i].push(j);
            tree[j].push(i);
        }
    }
    let mut order = Vec::with_capacity(m);
    let mut seen = vec![false; m];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(c) = queue.pop_front() {
        order.push(cliques[c].clone());
        tree[c].sort_unstable();
        for &d in &tree[c] {
            if !seen[d] {
                seen[d] = true;
                queue.push_back(d);
            }
        }
    }
    let dec = CliqueDecomposition { cliques: order };
    debug_assert!(dec.verify(g));
    Ok(dec)
}

/// Deletes corners off the geodesic `p`, lowest id first, until only `p`
/// remains; each step records the corner and its lowest-id dominator in
/// the current residual graph.
pub fn corner_elimination_sequence(g: &Graph, p: &[usize]) -> Result<Vec<CornerWitness>> {
    if !is_geodesic(g, p) {
        return Err(Error::NotGeodesic(p.to_vec()));
    }
    let n = g.n();
    let mut alive = vec![true; n];
    let mut on_path = vec![false; n];
    for &v in p {
        on_path[v] = true;
    }
    let mut seq = Vec::new();
    while (0..n).find(|&v| alive[v] && !on_path[v]).is_some() {
        let step = (0..n).filter(|&v| alive[v] && !on_path[v]).find_map(|v| {
            (0..n)
                .find(|&u| u != v && alive[u] && closed_nbhd_within(g, v, u, Some(&alive)))
                .map(|u| CornerWitness { corner: v, dominator: u })
        });
        match step {
            Some(w) => {
                alive[w.corner] = false;
                seq.push(w);
            }
            None => return Err(Error::NoCornerAvailable((0..n).filter(|&v| alive[v]).collect())),
        }
    }
    Ok(seq)
}

/// Replays a deletion sequence, checking each witness in the residual graph.
pub fn replay_corner_sequence(g: &Graph, seq: &[CornerWitness]) -> bool {
    let mut alive = vec![true; g.n()];
    for w in seq {
        if !alive[w.corner] || !alive[w.dominator] || w.corner == w.dominator {
            return false;
        }
        if !closed_nbhd_within(g, w.corner, w.dominator, Some(&alive)) {
            return false;
        }
        alive[w.corner] = false;
    }
    true
}

/// `capt(G; S) = max_v d(v, S)` on connected chordal graphs.
pub fn chordal_capture_fast(g: &Graph, s: &CopConfig) -> Result<GameValue> {
    require_connected_chordal(g)?;
    s.check_range(g.n())?;
    let d = bfs_levels(g, s.positions(), None);
    Ok(GameValue::Finite(*d.iter().max().expect("non-empty") as u32))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChordalThrottling {
    pub rad: usize,
    /// `1 + rad(G)`, attained by one cop at `th_prod_witness`.
    pub th_prod: u64,
    pub th_prod_witness: usize,
    pub th_sum: u64,
    pub th_sum_k: usize,
    pub th_sum_witness: Vec<usize>,
    /// False when a radius computation ran out of budget and `th_sum` is
    /// only the upper bound certified by a greedy distance-dominating set.
    pub th_sum_exact: bool,
}

/// Radius-based throttling: `1 + rad(G)` and `min_k (k + rad_k(G))`.
///
/// Both are lower bounds on the exact values for any graph. Equality rests
/// on `capt_k = rad_k`, which sampled chordal graphs satisfy but which the
/// per-placement distance formula cannot be relied on to give.
pub fn chordal_throttling(g: &Graph, budget: Budget) -> Result<ChordalThrottling> {
    require_connected_chordal(g)?;
    let n = g.n();
    let rad = radius(g).finite().expect("connected");
    let c = center(g).expect("non-empty");
    let mut best: (u64, usize, Vec<usize>) = (n as u64, n, (0..n).collect());
    let mut exact = true;
    for k in 1..n {
        if k as u64 >= best.0 {
            break;
        }
        match k_radius_exact(g, k, budget) {
            Ok(r) => {
                let value = k as u64 + r.value.finite().expect("connected") as u64;
                if value < best.0 {
                    best = (value, k, r.witness);
                }
            }
            Err(e) if e.is_budget() => {
                exact = false;
                break;
            }
            Err(e) => return Err(e),
        }
    }
    if !exact {
        let (cost, set) = greedy_throttling_bound(g)?;
        if cost < best.0 {
            best = (cost, set.len(), set);
        }
    }
    Ok(ChordalThrottling {
        rad,
        th_prod: 1 + rad as u64,
        th_prod_witness: c,
        th_sum: best.0,
        th_sum_k: best.1,
        th_sum_witness: best.2,
        th_sum_exact: exact,
    })
}

/// The best `|D| + max_v d(v, D)` over greedy distance-dominating sets `D`
/// of every radius; at most `⌈√n⌉ + ⌊√n⌋ − 1` on connected graphs.
pub fn greedy_throttling_bound(g: &Graph) -> Result<(u64, Vec<usize>)> {
    let n = g.n();
    let mut best: Option<(u64, Vec<usize>)> = None;
    for rho in 0..n {
        let d = k_distance_dominating(g, rho, DominationMode::Greedy, Budget::unlimited())?;
        let reach = *bfs_levels(g, &d, None).iter().max().expect("non-empty") as u64;
        let cost = d.len() as u64 + reach;
        if best.as_ref().is_none_or(|b| cost < b.0) {
            best = Some((cost, d));
        }
    }
    best.ok_or_else(|| Error::InvalidParameter("empty graph".into()))
}

/// Certificate for cops on `s` whose balls of radius `radius` cover the
/// graph. Each cop guards its ball (a retract of a chordal graph) by
/// chasing the robber's image there. The claimed bound is the largest
/// one-cop capture time of a ball on its own: `radius` whenever the
/// distance formula holds for the ball, more when it does not.
pub fn ball_cover_strategy(g: &Graph, s: &CopConfig, radius: u32, budget: Budget) -> Result<PlacementCertificate> {
    require_connected_chordal(g)?;
    s.check_range(g.n())?;
    let d = bfs_levels(g, s.positions(), None);
    if let Some(v) = (0..g.n()).find(|&v| d[v] > radius as usize) {
        return Err(Error::CoverViolated(v));
    }
    let cops = s.positions().to_vec();
    let bound = ball_guard_time(g, &cops, radius as usize, budget)?
        .finite()
        .ok_or_else(|| Error::InvalidParameter("a ball is not cop-win".into()))?;
    let stage = Stage::BallGuard { cops: (0..cops.len()).collect(), homes: cops.clone(), radius };
    PlacementCertificate::new(cops, vec![stage], bound)?.validate(g)
}

/// `max_v d(v, S)`, or `Unreachable` if some vertex cannot be reached.
pub fn max_distance(g: &Graph, s: &[usize]) -> Distance {
    let d = bfs_levels(g, s, None);
    match d.iter().max() {
        Some(&usize::MAX) | None => Distance::Unreachable,
        Some(&x) => Distance::Finite(x),
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

    fn cfg(v: &[usize]) -> CopConfig {
        CopConfig::new(v.to_vec()).unwrap()
    }

    #[test]
    fn recognition() {
        assert!(lexbfs_order(&path(6)).chordal);
        let c4 = lexbfs_order(&cycle(4));
        assert!(!c4.chordal);
        let mut cyc = c4.cycle.unwrap();
        cyc.sort_unstable();
        assert_eq!(cyc, vec![0, 1, 2, 3]);
        let chorded = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert!(lexbfs_order(&chorded).chordal);
        assert_eq!(lexbfs_order(&cycle(7)).cycle.unwrap().len(), 7);
    }

    #[test]
    fn decompositions() {
        let d = clique_decomposition(&path(3)).unwrap();
        assert_eq!(d.cliques, vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(clique_decomposition(&complete(4)).unwrap().cliques, vec![vec![0, 1, 2, 3]]);
        let tri_pendant = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let d = clique_decomposition(&tri_pendant).unwrap();
        assert_eq!(d.cliques, vec![vec![0, 1, 2], vec![2, 3]]);
        assert!(d.verify(&tri_pendant));
        assert!(matches!(clique_decomposition(&cycle(4)), Err(Error::NotChordal(_))));
        assert!(matches!(clique_decomposition(&Graph::empty(2)), Err(Error::Disconnected)));
    }

    #[test]
    fn corner_sequences() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let seq = corner_elimination_sequence(&star, &[1, 0, 2]).unwrap();
        assert_eq!(seq, vec![CornerWitness { corner: 3, dominator: 0 }]);
        let seq = corner_elimination_sequence(&complete(3), &[0, 1]).unwrap();
        assert_eq!(seq, vec![CornerWitness { corner: 2, dominator: 0 }]);
        assert!(matches!(
            corner_elimination_sequence(&cycle(4), &[0, 1]),
            Err(Error::NoCornerAvailable(_))
        ));
    }

    #[test]
    fn fast_capture_and_throttling() {
        assert_eq!(chordal_capture_fast(&path(5), &cfg(&[2])).unwrap(), GameValue::Finite(2));
        assert_eq!(chordal_capture_fast(&complete(5), &cfg(&[0])).unwrap(), GameValue::Finite(1));
        assert_eq!(chordal_capture_fast(&path(9), &cfg(&[2, 6])).unwrap(), GameValue::Finite(2));
        let t = chordal_throttling(&path(9), Budget::default()).unwrap();
        assert_eq!((t.th_prod, t.th_sum, t.th_sum_exact), (5, 4, true));
        let t = chordal_throttling(&complete(6), Budget::default()).unwrap();
        assert_eq!((t.th_prod, t.th_sum), (2, 2));
        let t = chordal_throttling(&path(40), Budget(2000)).unwrap();
        assert!(!t.th_sum_exact);
        assert!(t.th_sum < 7 + 6);
    }

    #[test]
    fn ball_cover() {
        let b = Budget::default();
        let c = ball_cover_strategy(&path(5), &cfg(&[2]), 2, b).unwrap();
        assert!(c.validated);
        assert_eq!(c.claimed_bound, 2);
        let c = ball_cover_strategy(&path(9), &cfg(&[2, 6]), 2, b).unwrap();
        assert!(c.validated);
        assert_eq!(c.claimed_bound, 2);
        assert!(matches!(ball_cover_strategy(&path(5), &cfg(&[0]), 1, b), Err(Error::CoverViolated(2))));
    }
}
