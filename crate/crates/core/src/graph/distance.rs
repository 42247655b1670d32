use super::Graph;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;
use std::fmt;

/// A shortest-path length, or `Unreachable` when no path exists.
///
/// Ordered so that `Unreachable` is larger than every finite distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Distance {
    Finite(usize),
    Unreachable,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Unreachable => f.write_str("inf"),
        }
    }
}

/// Distances `d(v, S)` from a source set to every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceTable {
    pub sources: Vec<usize>,
    pub dist: Vec<Distance>,
}

impl DistanceTable {
    pub fn get(&self, v: usize) -> Distance {
        self.dist[v]
    }

    /// `max_v d(v, S)`; `Unreachable` if any vertex is.
    pub fn max(&self) -> Distance {
        self.dist.iter().copied().max().unwrap_or(Distance::Finite(0))
    }

    /// Raw BFS levels with `usize::MAX` for unreachable vertices.
    pub fn levels(&self) -> Vec<usize> {
        self.dist
            .iter()
            .map(|d| d.finite().unwrap_or(usize::MAX))
            .collect()
    }
}

pub(crate) fn bfs_levels(g: &Graph, sources: &[usize], allowed: Option<&[bool]>) -> Vec<usize> {
    let mut level = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::new();
    for &s in sources {
        if level[s] == usize::MAX {
            level[s] = 0;
            queue.push_back(s);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if level[w] == usize::MAX && allowed.is_none_or(|a| a[w]) {
                level[w] = level[u] + 1;
                queue.push_back(w);
            }
        }
    }
    level
}

/// Multi-source breadth-first search.
pub fn distances_from_set(g: &Graph, sources: &[usize]) -> Result<DistanceTable> {
    if sources.is_empty() {
        return Err(Error::EmptySources);
    }
    for &s in sources {
        g.check_vertex(s)?;
    }
    let dist = bfs_levels(g, sources, None)
        .into_iter()
        .map(|d| {
            if d == usize::MAX {
                Distance::Unreachable
            } else {
                Distance::Finite(d)
            }
        })
        .collect();
    let mut srcs = sources.to_vec();
    srcs.sort_unstable();
    srcs.dedup();
    Ok(DistanceTable { sources: srcs, dist })
}

pub fn distances_from(g: &Graph, v: usize) -> Result<DistanceTable> {
    distances_from_set(g, &[v])
}

/// All-pairs BFS levels, `usize::MAX` when unreachable.
pub fn distance_matrix(g: &Graph) -> Vec<Vec<usize>> {
    g.vertices().map(|v| bfs_levels(g, &[v], None)).collect()
}

pub fn eccentricity(g: &Graph, v: usize) -> Result<Distance> {
    Ok(distances_from(g, v)?.max())
}

/// `rad(G)`; `Unreachable` for disconnected graphs.
pub fn radius(g: &Graph) -> Distance {
    g.vertices()
        .map(|v| distances_from_set(g, &[v]).map(|t| t.max()).unwrap_or(Distance::Unreachable))
        .min()
        .unwrap_or(Distance::Finite(0))
}

/// Lowest-id vertex of minimum eccentricity.
pub fn center(g: &Graph) -> Option<usize> {
    g.vertices()
        .min_by_key(|&v| (distances_from_set(g, &[v]).map(|t| t.max()).ok(), v))
}

/// A shortest `u`-`v` path, built from `u` by always stepping to the
/// lowest-id neighbor that is one closer to `v`.
pub fn geodesic_between(g: &Graph, u: usize, v: usize) -> Result<Vec<usize>> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    geodesic_within(g, u, v, None).ok_or(Error::Unreachable(u, v))
}

pub(crate) fn geodesic_within(
    g: &Graph,
    u: usize,
    v: usize,
    allowed: Option<&[bool]>,
) -> Option<Vec<usize>> {
    let to_v = bfs_levels(g, &[v], allowed);
    if to_v[u] == usize::MAX {
        return None;
    }
    let mut path = vec![u];
    let mut cur = u;
    while cur != v {
        cur = *g
            .neighbors(cur)
            .iter()
            .find(|&&w| allowed.is_none_or(|a| a[w]) && to_v[w] + 1 == to_v[cur])
            .expect("BFS level decreases along some neighbor");
        path.push(cur);
    }
    Some(path)
}

/// True when `path` is a walk of distinct adjacent vertices whose length
/// equals the distance between its endpoints.
pub fn is_geodesic(g: &Graph, path: &[usize]) -> bool {
    if path.is_empty() || path.iter().any(|&v| v >= g.n()) {
        return false;
    }
    if path.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
        return false;
    }
    let d = bfs_levels(g, &path[..1], None);
    d[*path.last().unwrap()] == path.len() - 1
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

    #[test]
    fn path_distances() {
        let t = distances_from_set(&path(3), &[0]).unwrap();
        assert_eq!(
            t.dist,
            vec![Distance::Finite(0), Distance::Finite(1), Distance::Finite(2)]
        );
        let t = distances_from_set(&path(9), &[2, 6]).unwrap();
        assert_eq!(t.max(), Distance::Finite(2));
    }

    #[test]
    fn unreachable_is_explicit() {
        let t = distances_from_set(&Graph::empty(2), &[0]).unwrap();
        assert_eq!(t.get(1), Distance::Unreachable);
        assert_eq!(t.max(), Distance::Unreachable);
        assert!(Distance::Finite(usize::MAX - 1) < Distance::Unreachable);
    }

    #[test]
    fn source_errors() {
        assert_eq!(distances_from_set(&path(3), &[]), Err(Error::EmptySources));
        assert!(matches!(
            distances_from_set(&path(3), &[3]),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn geodesics_use_lowest_id() {
        assert_eq!(geodesic_between(&path(5), 0, 4).unwrap(), vec![0, 1, 2, 3, 4]);
        assert_eq!(geodesic_between(&cycle(6), 0, 3).unwrap(), vec![0, 1, 2, 3]);
        let k3 = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(geodesic_between(&k3, 0, 1).unwrap(), vec![0, 1]);
        assert_eq!(
            geodesic_between(&Graph::empty(2), 0, 1),
            Err(Error::Unreachable(0, 1))
        );
    }

    #[test]
    fn geodesic_recognition() {
        let c6 = cycle(6);
        assert!(is_geodesic(&c6, &[0, 1, 2, 3]));
        assert!(!is_geodesic(&c6, &[0, 1, 2, 3, 4]));
        assert!(!is_geodesic(&c6, &[0, 2]));
        assert!(is_geodesic(&c6, &[4]));
    }

    #[test]
    fn radius_and_center() {
        assert_eq!(radius(&path(9)), Distance::Finite(4));
        assert_eq!(center(&path(9)), Some(4));
        assert_eq!(radius(&Graph::empty(2)), Distance::Unreachable);
    }
}
