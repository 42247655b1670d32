use super::distance::bfs_levels;
use super::Graph;
use crate::error::Result;
use serde::{Deserialize, Serialize};

/// `dominator` corners `corner`: `N[corner] ⊆ N[dominator]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CornerWitness {
    pub corner: usize,
    pub dominator: usize,
}

impl CornerWitness {
    /// Direct closed-neighborhood inclusion check in `g`.
    pub fn holds_in(&self, g: &Graph) -> bool {
        self.corner != self.dominator && closed_nbhd_within(g, self.corner, self.dominator, None)
    }
}

/// `N[v] ⊆ N[u]` restricted to the `alive` vertices.
pub(crate) fn closed_nbhd_within(g: &Graph, v: usize, u: usize, alive: Option<&[bool]>) -> bool {
    let live = |x: usize| alive.is_none_or(|a| a[x]);
    if v == u {
        return true;
    }
    if !g.has_edge(v, u) {
        return false;
    }
    g.neighbors(v)
        .iter()
        .all(|&w| w == u || !live(w) || g.has_edge(w, u))
}

/// Every ordered pair `(v, u)`, `v != u`, with `N[v] ⊆ N[u]`; sorted by
/// corner then dominator.
pub fn corners(g: &Graph) -> Vec<CornerWitness> {
    let mut out = Vec::new();
    for v in g.vertices() {
        for &u in g.neighbors(v) {
            if closed_nbhd_within(g, v, u, None) {
                out.push(CornerWitness {
                    corner: v,
                    dominator: u,
                });
            }
        }
    }
    out
}

/// Vertices `u` of `v`'s component with `d(u,v) >= d(w,v)` for every
/// neighbor `w` of `u`.
pub fn boundary_vertices(g: &Graph, v: usize) -> Result<Vec<usize>> {
    g.check_vertex(v)?;
    let d = bfs_levels(g, &[v], None);
    Ok(g.vertices()
        .filter(|&u| d[u] != usize::MAX && g.neighbors(u).iter().all(|&w| d[u] >= d[w]))
        .collect())
}

/// Whether every member of `set` is cornered by some vertex outside `set`.
pub fn is_disjoint_corner_set(g: &Graph, set: &[usize]) -> bool {
    let mut inside = vec![false; g.n()];
    for &c in set {
        inside[c] = true;
    }
    set.iter().all(|&c| {
        g.neighbors(c)
            .iter()
            .any(|&u| !inside[u] && closed_nbhd_within(g, c, u, None))
    })
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

    #[test]
    fn corner_lists() {
        let p3 = corners(&path(3));
        assert_eq!(
            p3,
            vec![
                CornerWitness { corner: 0, dominator: 1 },
                CornerWitness { corner: 2, dominator: 1 }
            ]
        );
        assert!(corners(&cycle(4)).is_empty());
        let k4 = corners(&complete(4));
        assert_eq!(k4.len(), 12);
        assert!(k4.iter().all(|w| w.holds_in(&complete(4))));
    }

    #[test]
    fn boundaries() {
        assert_eq!(boundary_vertices(&path(5), 2).unwrap(), vec![0, 4]);
        assert_eq!(boundary_vertices(&complete(4), 0).unwrap(), vec![1, 2, 3]);
        assert_eq!(boundary_vertices(&cycle(6), 0).unwrap(), vec![3]);
        assert!(boundary_vertices(&path(3), 5).is_err());
    }

    #[test]
    fn disjoint_corner_sets() {
        assert!(is_disjoint_corner_set(&path(5), &[0, 4]));
        // Both leaves of P_2 are only cornered by each other.
        assert!(!is_disjoint_corner_set(&path(2), &[0, 1]));
        assert!(!is_disjoint_corner_set(&cycle(6), &[3]));
    }
}
