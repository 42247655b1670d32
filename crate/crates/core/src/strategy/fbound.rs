//! Cops on a minimum feedback vertex set, plus a tree strategy on a
//! spanning tree of what remains.

use super::certificate::{PlacementCertificate, Stage};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{bfs_levels, feedback_vertex_number, k_distance_dominating, DominationMode, Graph};

/// Spanning tree containing the forest `G - F`, extended by edges at `F`
/// in edge order.
fn spanning_tree(g: &Graph, f: &[usize]) -> Vec<[usize; 2]> {
    let n = g.n();
    let mut in_f = vec![false; n];
    for &v in f {
        in_f[v] = true;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let inner = g.edges().filter(|&(u, v)| !in_f[u] && !in_f[v]);
    let outer = g.edges().filter(|&(u, v)| in_f[u] || in_f[v]);
    let mut tree = Vec::new();
    for (u, v) in inner.chain(outer) {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            tree.push([u, v]);
        }
    }
    tree
}

/// Stationary cops on the lexicographically least minimum feedback vertex
/// set `F`; projection cops on a spanning tree `T ⊇ G - F` from the greedy
/// distance-dominating set of `T` minimizing size plus reach. The robber
/// only moves along `T` unless it steps next to a stationary cop.
pub fn feedback_bound(g: &Graph, budget: Budget) -> Result<PlacementCertificate> {
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidParameter("empty graph".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let (f, fset) = feedback_vertex_number(g, budget)?;
    let edges = spanning_tree(g, &fset);
    let tree = Graph::from_edges(n, edges.iter().map(|e| (e[0], e[1])))?;
    let mut best: Option<(usize, usize, Vec<usize>)> = None;
    for rho in 0..n {
        let d = k_distance_dominating(&tree, rho, DominationMode::Greedy, Budget::unlimited())?;
        let reach = *bfs_levels(&tree, &d, None).iter().max().expect("non-empty");
        if best.as_ref().is_none_or(|b| d.len() + reach < b.0 + b.1) {
            best = Some((d.len(), reach, d));
        }
    }
    let (_, reach, homes) = best.expect("n >= 1");
    let mut cops = fset;
    cops.extend(&homes);
    let stages = vec![
        Stage::Stationary { cops: (0..f).collect() },
        Stage::Projection { cops: (f..cops.len()).collect(), homes, host_edges: Some(edges) },
    ];
    PlacementCertificate::new(cops, stages, reach as u32)?.validate(g)
}
