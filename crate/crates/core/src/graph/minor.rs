use super::Graph;
use crate::budget::Budget;
use crate::error::{Error, Result};
use std::collections::HashSet;

/// Tests for a `K_4` or `K_{2,3}` minor by searching over edge
/// contractions; each contracted graph is checked for either obstruction as
/// a subgraph. Exponential, meant for small graphs (at most 64 vertices).
pub fn is_outerplanar(g: &Graph, budget: Budget) -> Result<bool> {
    let n = g.n();
    if n <= 3 {
        return Ok(true);
    }
    if n > 64 {
        return Err(Error::InvalidParameter(format!(
            "outerplanarity search supports at most 64 vertices, got {n}"
        )));
    }
    let adj: Vec<u64> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect();
    let mut seen = HashSet::new();
    let mut meter = budget.meter("outerplanarity minor search");
    Ok(!has_obstruction(adj, &mut seen, &mut meter)?)
}

fn has_obstruction(
    mut adj: Vec<u64>,
    seen: &mut HashSet<Vec<u64>>,
    meter: &mut crate::budget::Meter,
) -> Result<bool> {
    prune_low_degree(&mut adj);
    if !seen.insert(adj.clone()) {
        return Ok(false);
    }
    meter.tick(adj.len() as u64 * adj.len() as u64)?;
    let alive: Vec<usize> = (0..adj.len()).filter(|&v| adj[v] != 0).collect();
    if alive.len() < 4 {
        return Ok(false);
    }
    let edges: usize = alive.iter().map(|&v| adj[v].count_ones() as usize).sum::<usize>() / 2;
    // Outerplanar graphs on p >= 2 vertices have at most 2p - 3 edges, and
    // the class is minor-closed.
    if edges > 2 * alive.len() - 3 {
        return Ok(true);
    }
    if contains_k4_or_k23(&adj, &alive) {
        return Ok(true);
    }
    for &u in &alive {
        let mut later = adj[u] & !((2u64 << u) - 1);
        while later != 0 {
            let v = later.trailing_zeros() as usize;
            later &= later - 1;
            if has_obstruction(contract(&adj, u, v), seen, meter)? {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Vertices of degree at most one lie in no obstruction model.
fn prune_low_degree(adj: &mut [u64]) {
    loop {
        let mut changed = false;
        for v in 0..adj.len() {
            if adj[v] != 0 && adj[v].count_ones() <= 1 {
                let w = adj[v].trailing_zeros() as usize;
                adj[w] &= !(1 << v);
                adj[v] = 0;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
}

fn contract(adj: &[u64], u: usize, v: usize) -> Vec<u64> {
    let mut next = adj.to_vec();
    let merged = (adj[u] | adj[v]) & !(1 << u) & !(1 << v);
    next[u] = merged;
    next[v] = 0;
    let mut rest = adj[v];
    while rest != 0 {
        let w = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if w != u {
            next[w] = (next[w] & !(1 << v)) | 1 << u;
        }
    }
    next
}

fn contains_k4_or_k23(adj: &[u64], alive: &[usize]) -> bool {
    for (i, &a) in alive.iter().enumerate() {
        for &b in &alive[i + 1..] {
            let common = adj[a] & adj[b];
            if common.count_ones() >= 3 {
                return true;
            }
            if adj[a] >> b & 1 == 1 {
                let mut c = common;
                while c != 0 {
                    let x = c.trailing_zeros() as usize;
                    c &= c - 1;
                    if adj[x] & c != 0 {
                        return true;
                    }
                }
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(n: usize, edges: &[(usize, usize)]) -> bool {
        is_outerplanar(&Graph::from_edges(n, edges.iter().copied()).unwrap(), Budget::default())
            .unwrap()
    }

    #[test]
    fn obstructions_and_cycles() {
        let k4: Vec<_> = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).collect();
        assert!(!check(4, &k4));
        let k23: Vec<_> = (0..2).flat_map(|i| (2..5).map(move |j| (i, j))).collect();
        assert!(!check(5, &k23));
        let c5: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        assert!(check(5, &c5));
    }

    #[test]
    fn subdivisions_and_minors() {
        // C_6 with the two long chords 0-3 and 1-4 contracts to K_4.
        let mut e: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        e.extend([(0, 3), (1, 4)]);
        assert!(!check(6, &e));
        // Fan: path 1..5 all joined to 0 is outerplanar.
        let mut fan: Vec<_> = (1..5).map(|i| (i, i + 1)).collect();
        fan.extend((1..6).map(|i| (0, i)));
        assert!(check(6, &fan));
        // Subdivided K_{2,3} with a pendant tree.
        let e = [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 5), (5, 1), (5, 6), (6, 7)];
        assert!(!check(8, &e));
        // Petersen graph contains K_4 as a minor.
        let mut p: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        p.extend((0..5).map(|i| (i + 5, (i + 2) % 5 + 5)));
        p.extend((0..5).map(|i| (i, i + 5)));
        assert!(!check(10, &p));
    }
}
