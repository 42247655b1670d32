//! Test-side oracles written against the definitions, sharing no code with
//! the library beyond the `Graph` accessors.
#![allow(dead_code)]

use copthrottle::game::capt_k;
use copthrottle::{Budget, GameValue, Graph};
use std::collections::VecDeque;

pub const INF: u32 = u32::MAX;

/// BFS distances from a set; `None` for unreachable vertices.
pub fn bfs(g: &Graph, sources: &[usize]) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n()];
    let mut queue = VecDeque::new();
    for &s in sources {
        if dist[s].is_none() {
            dist[s] = Some(0);
            queue.push_back(s);
        }
    }
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap();
        for &w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// `max_v d(v, S)`, `None` when some vertex is unreachable.
pub fn max_dist(g: &Graph, s: &[usize]) -> Option<usize> {
    bfs(g, s).into_iter().try_fold(0, |m, d| d.map(|d| m.max(d)))
}

pub fn radius(g: &Graph) -> Option<usize> {
    g.vertices().filter_map(|v| max_dist(g, &[v])).min()
}

fn closed(g: &Graph, v: usize) -> Vec<usize> {
    let mut c = g.neighbors(v).to_vec();
    c.push(v);
    c.sort_unstable();
    c
}

fn subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

/// Chordality by repeatedly deleting a simplicial vertex.
pub fn is_chordal(g: &Graph) -> bool {
    let mut alive = vec![true; g.n()];
    for _ in 0..g.n() {
        let simplicial = (0..g.n()).find(|&v| {
            alive[v] && {
                let nb: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| alive[u]).collect();
                nb.iter().all(|&a| nb.iter().all(|&b| a == b || g.has_edge(a, b)))
            }
        });
        match simplicial {
            Some(v) => alive[v] = false,
            None => return false,
        }
    }
    true
}

/// Cop-win for connected graphs: dismantlable by repeated corner deletion.
pub fn is_cop_win(g: &Graph) -> bool {
    let mut alive = vec![true; g.n()];
    let nb = |alive: &[bool], v: usize| -> Vec<usize> {
        closed(g, v).into_iter().filter(|&u| alive[u]).collect()
    };
    let mut left = g.n();
    while left > 1 {
        let corner = (0..g.n()).find(|&v| {
            alive[v] && nb(&alive, v).iter().any(|&u| u != v && subset(&nb(&alive, v), &nb(&alive, u)))
        });
        match corner {
            Some(v) => {
                alive[v] = false;
                left -= 1;
            }
            None => return false,
        }
    }
    true
}

/// Vertices `u` with no neighbour farther from `v` than `u`.
pub fn boundary(g: &Graph, v: usize) -> Vec<usize> {
    let d = bfs(g, &[v]);
    g.vertices()
        .filter(|&u| d[u].is_some() && g.neighbors(u).iter().all(|&w| d[w] <= d[u]))
        .collect()
}

/// Capture time of the ordered placement `s` by value iteration over
/// ordered cop tuples; `INF` when the robber escapes forever.
pub fn brute_capture_time(g: &Graph, s: &[usize]) -> u32 {
    let n = g.n();
    let k = s.len();
    let tuples = n.pow(k as u32);
    let decode = |mut t: usize| -> Vec<usize> {
        let mut v = Vec::with_capacity(k);
        for _ in 0..k {
            v.push(t % n);
            t /= n;
        }
        v
    };
    let encode = |v: &[usize]| v.iter().rev().fold(0, |t, &x| t * n + x);
    let closed_sets: Vec<Vec<usize>> = g.vertices().map(|v| closed(g, v)).collect();
    let moves: Vec<Vec<usize>> = (0..tuples)
        .map(|t| {
            let cops = decode(t);
            let mut out = vec![Vec::new()];
            for &c in &cops {
                out = out
                    .into_iter()
                    .flat_map(|pre: Vec<usize>| {
                        closed_sets[c].iter().map(move |&w| {
                            let mut p = pre.clone();
                            p.push(w);
                            p
                        })
                    })
                    .collect();
            }
            out.iter().map(|m| encode(m)).collect()
        })
        .collect();
    let occupied = |t: usize, r: usize| decode(t).contains(&r);
    // value[t * n + r]: rounds left with cops to move.
    let mut value = vec![INF; tuples * n];
    for t in 0..tuples {
        for r in 0..n {
            if occupied(t, r) {
                value[t * n + r] = 0;
            }
        }
    }
    loop {
        let mut changed = false;
        for t in 0..tuples {
            for r in 0..n {
                if occupied(t, r) {
                    continue;
                }
                let mut best = INF;
                for &m in &moves[t] {
                    let v = if occupied(m, r) {
                        1
                    } else {
                        let worst = closed_sets[r]
                            .iter()
                            .map(|&w| if occupied(m, w) { 1 } else { value[m * n + w].saturating_add(1) })
                            .max()
                            .unwrap();
                        worst
                    };
                    best = best.min(v);
                }
                if best < value[t * n + r] {
                    value[t * n + r] = best;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let t = encode(s);
    (0..n).map(|r| value[t * n + r]).max().unwrap()
}

pub fn finite(v: GameValue) -> u32 {
    v.finite().unwrap_or(INF)
}

/// `(th_c, th_c^×)` from the engine's `capt_k`, sweeping `k` without
/// any radius pruning. Every `k < n` has `capt_k >= 1`.
pub fn throttling_sweep(g: &Graph, budget: Budget) -> (u64, u64) {
    let n = g.n() as u64;
    let (mut best_sum, mut best_prod) = (n, n);
    for k in 1..n {
        if k + 1 > best_sum && 2 * k > best_prod {
            break;
        }
        let c = finite(capt_k(g, k as usize, budget).unwrap().0);
        if c != INF {
            best_sum = best_sum.min(k + u64::from(c));
            best_prod = best_prod.min(k * (1 + u64::from(c)));
        }
    }
    (best_sum, best_prod)
}
