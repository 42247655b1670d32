//! Guarding a geodesic: cop spacing, the retraction onto the path, and the
//! shadow chase.

use crate::error::{Error, Result};
use crate::graph::{bfs_levels, is_geodesic, Graph};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// 1-based positions of `⌈(k+1)/(2r+1)⌉` cops on a path with `k + 1`
/// vertices: the `j`-th at `r + 1 + (2r + 1) j`, clamped to the last vertex.
pub fn guard_placement(k: usize, r: usize) -> Result<Vec<usize>> {
    if r == 0 {
        return Err(Error::InvalidParameter("guard radius must be positive".into()));
    }
    let count = (k + 1).div_ceil(2 * r + 1);
    Ok((0..count).map(|j| (r + 1 + (2 * r + 1) * j).min(k + 1)).collect())
}

/// Retraction of a graph onto one of its geodesics `v_1, ..., v_{k+1}`:
/// `φ(u) = v_{1 + min(d(v_1, u), k)}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathRetraction {
    pub path: Vec<usize>,
    /// 0-based path index of each vertex's image.
    pub map: Vec<usize>,
}

impl PathRetraction {
    pub fn image(&self, u: usize) -> usize {
        self.path[self.map[u]]
    }

    /// Identity on the path, and every edge maps to an edge or a vertex.
    pub fn verify(&self, g: &Graph) -> bool {
        let fixes_path = self.path.iter().enumerate().all(|(i, &v)| self.map[v] == i);
        fixes_path && g.edges().all(|(u, v)| self.map[u].abs_diff(self.map[v]) <= 1)
    }
}

pub fn path_retraction(g: &Graph, p: &[usize]) -> Result<PathRetraction> {
    if !is_geodesic(g, p) {
        return Err(Error::NotGeodesic(p.to_vec()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let k = p.len() - 1;
    let d = bfs_levels(g, &[p[0]], None);
    let map = d.iter().map(|&x| x.min(k)).collect();
    Ok(PathRetraction { path: p.to_vec(), map })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShadowStep {
    pub round: u32,
    /// Path indices (0-based) of the cops after their move.
    pub cops: Vec<usize>,
    pub robber: usize,
    pub shadow: usize,
}

/// Cops start at the guard positions on `p`; each round every cop steps
/// one vertex along the path toward the robber's shadow, then the robber
/// moves anywhere in its closed neighborhood. Returns the worst case, over
/// all robber play, of the first round after which a cop sits on the
/// shadow, with a transcript of one worst line.
pub fn shadow_guard_simulate(g: &Graph, p: &[usize], r: usize) -> Result<(u32, Vec<ShadowStep>)> {
    let retraction = path_retraction(g, p)?;
    let start: Vec<usize> = guard_placement(p.len() - 1, r)?.into_iter().map(|i| i - 1).collect();
    // Beyond this many rounds the robber has evaded the guard; report it.
    let horizon = (p.len() + r + 2) as u32;
    let mut sim = ShadowSim { g, ret: &retraction, horizon, memo: HashMap::new() };
    let mut worst = (0, 0);
    for r0 in g.vertices() {
        let v = sim.value(&start, r0, 0);
        if v > worst.0 {
            worst = (v, r0);
        }
    }
    let transcript = sim.transcript(&start, worst.1);
    Ok((worst.0, transcript))
}

type ShadowMemo = HashMap<(Vec<usize>, usize, u32), (u32, Option<usize>)>;

struct ShadowSim<'a> {
    g: &'a Graph,
    ret: &'a PathRetraction,
    horizon: u32,
    memo: ShadowMemo,
}

impl ShadowSim<'_> {
    fn advance(&self, cops: &[usize], shadow: usize) -> Vec<usize> {
        cops.iter()
            .map(|&c| match c.cmp(&shadow) {
                std::cmp::Ordering::Less => c + 1,
                std::cmp::Ordering::Greater => c - 1,
                std::cmp::Ordering::Equal => c,
            })
            .collect()
    }

    /// Rounds until guarded from a position where `cops` stand after the
    /// move of round `t` and the robber (already moved) is at `robber`.
    fn value(&mut self, cops: &[usize], robber: usize, t: u32) -> u32 {
        let shadow = self.ret.map[robber];
        if cops.contains(&shadow) {
            return t;
        }
        if t >= self.horizon {
            return t + 1;
        }
        let key = (cops.to_vec(), robber, t);
        if let Some(&(v, _)) = self.memo.get(&key) {
            return v;
        }
        let next = self.advance(cops, shadow);
        let result = if next.contains(&shadow) {
            (t + 1, None)
        } else {
            let mut best = (0, None);
            for r2 in self.g.closed_neighborhood(robber) {
                let v = self.value(&next, r2, t + 1);
                if v > best.0 {
                    best = (v, Some(r2));
                }
            }
            best
        };
        self.memo.insert(key, result);
        result.0
    }

    fn transcript(&mut self, start: &[usize], r0: usize) -> Vec<ShadowStep> {
        let mut out = vec![ShadowStep {
            round: 0,
            cops: start.to_vec(),
            robber: r0,
            shadow: self.ret.map[r0],
        }];
        let (mut cops, mut robber, mut t) = (start.to_vec(), r0, 0);
        while !cops.contains(&self.ret.map[robber]) && t < self.horizon {
            self.value(&cops, robber, t);
            let reply = self.memo.get(&(cops.clone(), robber, t)).and_then(|x| x.1);
            cops = self.advance(&cops, self.ret.map[robber]);
            t += 1;
            match reply {
                Some(r2) => robber = r2,
                None => {
                    out.push(ShadowStep { round: t, cops: cops.clone(), robber, shadow: self.ret.map[robber] });
                    break;
                }
            }
            out.push(ShadowStep { round: t, cops: cops.clone(), robber, shadow: self.ret.map[robber] });
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn placements() {
        assert_eq!(guard_placement(9, 2).unwrap(), vec![3, 8]);
        assert_eq!(guard_placement(0, 1).unwrap(), vec![1]);
        assert_eq!(guard_placement(9, 1).unwrap(), vec![2, 5, 8, 10]);
        assert!(guard_placement(3, 0).is_err());
    }

    #[test]
    fn retractions() {
        let c6 = Graph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let ret = path_retraction(&c6, &[0, 1, 2, 3]).unwrap();
        assert_eq!(ret.image(4), 2);
        assert_eq!(ret.image(5), 1);
        assert!(ret.verify(&c6));
        let k3 = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(path_retraction(&k3, &[0, 1]).unwrap().image(2), 1);
        assert!(matches!(path_retraction(&c6, &[0, 1, 2, 3, 4]), Err(Error::NotGeodesic(_))));
    }

    #[test]
    fn shadow_chase() {
        let p10 = path(10);
        let p: Vec<usize> = (0..10).collect();
        assert!(shadow_guard_simulate(&p10, &p, 2).unwrap().0 <= 2);
        assert_eq!(shadow_guard_simulate(&path(1), &[0], 1).unwrap().0, 0);
        let c6 = Graph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        assert!(shadow_guard_simulate(&c6, &[0, 1, 2, 3], 1).unwrap().0 <= 1);
    }
}
