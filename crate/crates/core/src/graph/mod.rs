//! Simple undirected graphs on dense `0..n` vertex ids, plus the distance
//! machinery and structural predicates the solvers build on.

mod corners;
mod distance;
mod domination;
pub mod enumerate;
mod feedback;
pub mod io;
mod minor;

pub(crate) use corners::closed_nbhd_within;
pub(crate) use distance::{bfs_levels, geodesic_within};
pub use corners::{boundary_vertices, corners, is_disjoint_corner_set, CornerWitness};
pub use distance::{
    center, distance_matrix, distances_from, distances_from_set, eccentricity, geodesic_between,
    is_geodesic, radius, Distance, DistanceTable,
};
pub use domination::{
    domination_number, k_distance_dominating, k_radius_exact, DominationMode, RadiusResult,
};
pub use feedback::{feedback_vertex_number, is_forest};
pub use minor::is_outerplanar;

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Immutable simple undirected graph with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "io::GraphJson", into = "io::GraphJson")]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    name: Option<String>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are merged; loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Parse(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj, name: None })
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            name: None,
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// `N[v]` in ascending order.
    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.adj[v].len() + 1);
        let mut placed = false;
        for &w in &self.adj[v] {
            if !placed && v < w {
                out.push(v);
                placed = true;
            }
            out.push(w);
        }
        if !placed {
            out.push(v);
        }
        out
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    /// Same vertex count and edge set, ignoring the name.
    pub fn same_structure(&self, other: &Graph) -> bool {
        self.adj == other.adj
    }

    /// Component id per vertex (numbered by smallest member) and the count.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let n = self.n();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    /// Vertex sets of the components, each sorted, ordered by smallest member.
    pub fn component_sets(&self) -> Vec<Vec<usize>> {
        let (comp, count) = self.components();
        let mut sets = vec![Vec::new(); count];
        for (v, &c) in comp.iter().enumerate() {
            sets[c].push(v);
        }
        sets
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().1 == 1
    }

    /// Induced subgraph on `keep` (any order, duplicates ignored). Vertex `i`
    /// of the result is `map[i]` in `self`.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<InducedSubgraph> {
        let mut map: Vec<usize> = keep.to_vec();
        map.sort_unstable();
        map.dedup();
        let mut inverse = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            self.check_vertex(v)?;
            inverse[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&w| (inverse[w] != usize::MAX).then_some(inverse[w]))
                    .collect()
            })
            .collect();
        Ok(InducedSubgraph {
            graph: Graph { adj, name: None },
            map,
            inverse,
        })
    }

    /// `G - removed`, as an induced subgraph.
    pub fn remove_vertices(&self, removed: &[usize]) -> Result<InducedSubgraph> {
        let mut gone = vec![false; self.n()];
        for &v in removed {
            self.check_vertex(v)?;
            gone[v] = true;
        }
        let keep: Vec<usize> = self.vertices().filter(|&v| !gone[v]).collect();
        self.induced_subgraph(&keep)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|list| list.iter().map(|&w| w + off).collect()),
        );
        Graph { adj, name: None }
    }
}

/// An induced subgraph together with the vertex relabeling.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// New id -> original id.
    pub map: Vec<usize>,
    /// Original id -> new id, `usize::MAX` when removed.
    pub inverse: Vec<usize>,
}

impl InducedSubgraph {
    pub fn to_new(&self, v: usize) -> Option<usize> {
        self.inverse.get(v).copied().filter(|&i| i != usize::MAX)
    }

    pub fn to_original(&self, v: usize) -> usize {
        self.map[v]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_normalizes_adjacency() {
        let g = Graph::from_edges(3, [(1, 0), (0, 1), (2, 1)]).unwrap();
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert_eq!(g.m(), 2);
        assert!(g.has_edge(0, 1) && !g.has_edge(0, 2));
        assert_eq!(g.closed_neighborhood(1), vec![0, 1, 2]);
        assert_eq!(g.closed_neighborhood(2), vec![1, 2]);
    }

    #[test]
    fn rejects_loops_and_range() {
        assert!(Graph::from_edges(2, [(0, 0)]).is_err());
        assert_eq!(
            Graph::from_edges(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn induced_relabels() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let h = g.remove_vertices(&[1]).unwrap();
        assert_eq!(h.map, vec![0, 2, 3]);
        assert_eq!(h.graph.m(), 1);
        assert_eq!(h.to_new(1), None);
        assert_eq!(h.to_new(3), Some(2));
        assert_eq!(h.graph.component_sets(), vec![vec![0], vec![1, 2]]);
    }
}
