//! Connected graphs up to isomorphism, for exhaustive corpora at tiny orders.

use super::Graph;
use crate::error::{Error, Result};
use std::collections::BTreeSet;

/// Largest order accepted by [`connected_graphs`].
pub const MAX_ORDER: usize = 8;

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, in increasing order of canonical code.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_ORDER {
        return Err(Error::InvalidParameter(format!(
            "enumeration supports n <= {MAX_ORDER}, got {n}"
        )));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    // Every connected graph has a vertex whose removal keeps it connected,
    // so extending the connected classes on n - 1 vertices reaches all.
    let mut level: BTreeSet<u64> = BTreeSet::from([0]);
    for order in 2..=n {
        let mut next = BTreeSet::new();
        for &code in &level {
            let adj = decode(code, order - 1);
            for mask in 1u32..1 << (order - 1) {
                let mut ext = adj.clone();
                ext.push(mask);
                for (v, row) in ext.iter_mut().enumerate().take(order - 1) {
                    *row |= (mask >> v & 1) << (order - 1);
                }
                next.insert(canonical_code(&ext));
            }
        }
        level = next;
    }
    Ok(level
        .into_iter()
        .map(|code| {
            let adj = decode(code, n);
            let edges = (0..n).flat_map(|u| {
                let row = adj[u];
                (u + 1..n).filter(move |&v| row >> v & 1 == 1).map(move |v| (u, v))
            });
            Graph::from_edges(n, edges.collect::<Vec<_>>()).expect("valid by construction")
        })
        .collect())
}

/// All connected classes with `1 <= n <= max_n`, by order.
pub fn connected_graphs_up_to(max_n: usize) -> Result<Vec<Graph>> {
    let mut all = Vec::new();
    for n in 1..=max_n {
        all.extend(connected_graphs(n)?);
    }
    Ok(all)
}

fn encode(adj: &[u32], perm: &[usize]) -> u64 {
    // perm[new] = old; bits of the upper triangle in row-major order.
    let n = adj.len();
    let mut code = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            code = (code << 1) | u64::from(adj[perm[i]] >> perm[j] & 1);
        }
    }
    code
}

fn decode(code: u64, n: usize) -> Vec<u32> {
    let mut adj = vec![0u32; n];
    let total = n * n.saturating_sub(1) / 2;
    let mut bit = total;
    for i in 0..n {
        for j in i + 1..n {
            bit -= 1;
            if code >> bit & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    adj
}

/// Maximum code over vertex orders that list vertices by non-increasing
/// degree; isomorphic graphs get equal codes.
fn canonical_code(adj: &[u32]) -> u64 {
    let n = adj.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(adj[v].count_ones()));
    let mut classes: Vec<(usize, usize)> = Vec::new();
    let mut start = 0;
    for i in 1..=n {
        if i == n || adj[order[i]].count_ones() != adj[order[start]].count_ones() {
            classes.push((start, i));
            start = i;
        }
    }
    let mut best = 0u64;
    permute_classes(adj, &mut order, &classes, 0, &mut best);
    best
}

fn permute_classes(
    adj: &[u32],
    order: &mut Vec<usize>,
    classes: &[(usize, usize)],
    idx: usize,
    best: &mut u64,
) {
    if idx == classes.len() {
        *best = (*best).max(encode(adj, order));
        return;
    }
    let (lo, hi) = classes[idx];
    heap_permute(adj, order, classes, idx, lo, hi - lo, best);
}

#[allow(clippy::too_many_arguments)]
fn heap_permute(
    adj: &[u32],
    order: &mut Vec<usize>,
    classes: &[(usize, usize)],
    idx: usize,
    lo: usize,
    k: usize,
    best: &mut u64,
) {
    if k <= 1 {
        permute_classes(adj, order, classes, idx + 1, best);
        return;
    }
    for i in 0..k {
        heap_permute(adj, order, classes, idx, lo, k - 1, best);
        if i + 1 < k {
            let swap = if k.is_multiple_of(2) { lo + i } else { lo };
            order.swap(swap, lo + k - 1);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts_match_known_sequence() {
        let counts: Vec<usize> = (1..=6).map(|n| connected_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
        assert!(connected_graphs(9).is_err());
    }

    #[test]
    fn outputs_are_connected() {
        for g in connected_graphs_up_to(5).unwrap() {
            assert!(g.is_connected());
        }
    }
}
