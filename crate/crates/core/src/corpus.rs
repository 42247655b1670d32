//! Seeded graph corpora for the verification suites.

use crate::error::Result;
use crate::families::{
    attach_leaves, complete, complete_bipartite, cycle, grid, m_prime, path, petersen, random_chordal,
    random_connected, random_tree, spider, star,
};
use crate::graph::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A corpus member with a label naming its origin.
#[derive(Debug, Clone)]
pub struct CorpusGraph {
    pub label: String,
    pub graph: Graph,
}

impl CorpusGraph {
    fn new(label: impl Into<String>, graph: Graph) -> Self {
        CorpusGraph { label: label.into(), graph }
    }
}

/// Named graphs of order at most 12.
pub fn named_corpus() -> Vec<CorpusGraph> {
    let mut out = Vec::new();
    for n in 1..=12 {
        out.push(CorpusGraph::new(format!("path:n={n}"), path(n)));
    }
    for n in 3..=12 {
        out.push(CorpusGraph::new(format!("cycle:n={n}"), cycle(n).expect("n >= 3")));
    }
    for n in 2..=8 {
        out.push(CorpusGraph::new(format!("complete:n={n}"), complete(n)));
    }
    for s in 2..=11 {
        out.push(CorpusGraph::new(format!("star:s={s}"), star(s)));
    }
    for (a, b) in [(2, 2), (2, 3), (2, 4), (3, 3), (3, 4)] {
        out.push(CorpusGraph::new(format!("complete_bipartite:a={a},b={b}"), complete_bipartite(a, b)));
    }
    for (legs, len) in [(3, 1), (3, 2), (3, 3), (4, 2), (5, 2)] {
        out.push(CorpusGraph::new(format!("spider:legs={legs},len={len}"), spider(legs, len)));
    }
    for (r, c) in [(2, 2), (2, 3), (2, 4), (3, 3), (2, 5), (3, 4)] {
        out.push(CorpusGraph::new(format!("grid:rows={r},cols={c}"), grid(r, c).expect("positive")));
    }
    out.push(CorpusGraph::new("petersen", petersen()));
    for l in 1..=2 {
        out.push(CorpusGraph::new(format!("m_prime:l={l}"), m_prime(l).expect("l >= 1")));
    }
    for n in [3, 4, 5, 6] {
        out.push(CorpusGraph::new(format!("attach_leaves:base=path/n={n}"), attach_leaves(&path(n))));
    }
    out.push(CorpusGraph::new("attach_leaves:base=cycle/n=4", attach_leaves(&cycle(4).expect("n >= 3"))));
    out
}

fn order(rng: &mut ChaCha8Rng, min_n: usize, max_n: usize) -> usize {
    rng.gen_range(min_n.min(max_n)..=max_n)
}

/// `count` connected graphs with orders in `[2, max_n]` and edge densities
/// between 0.1 and 0.6.
pub fn random_connected_corpus(count: usize, max_n: usize, seed: u64) -> Result<Vec<CorpusGraph>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = order(&mut rng, 2, max_n);
            let p = rng.gen_range(0.1..0.6);
            let s = rng.gen();
            Ok(CorpusGraph::new(format!("random_connected:n={n},seed={s},#{i}"), random_connected(n, p, s)?))
        })
        .collect()
}

/// `count` connected chordal graphs with orders in `[2, max_n]`.
pub fn random_chordal_corpus(count: usize, max_n: usize, seed: u64) -> Result<Vec<CorpusGraph>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = order(&mut rng, 2, max_n);
            let s = rng.gen();
            Ok(CorpusGraph::new(format!("random_chordal:n={n},seed={s}"), random_chordal(n, s)?))
        })
        .collect()
}

/// `count` trees with orders in `[1, max_n]`.
pub fn random_tree_corpus(count: usize, max_n: usize, seed: u64) -> Result<Vec<CorpusGraph>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = order(&mut rng, 1, max_n);
            let s = rng.gen();
            Ok(CorpusGraph::new(format!("random_tree:n={n},seed={s}"), random_tree(n, s)?))
        })
        .collect()
}

/// `count` connected unicyclic graphs with orders in `[3, max_n]`: a random
/// tree plus one edge between two non-adjacent vertices.
pub fn random_unicyclic_corpus(count: usize, max_n: usize, seed: u64) -> Result<Vec<CorpusGraph>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let n = order(&mut rng, 3, max_n.max(3));
        let s = rng.gen();
        let tree = random_tree(n, s)?;
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u == v || tree.has_edge(u, v) {
            continue;
        }
        let g = Graph::from_edges(n, tree.edges().chain([(u.min(v), u.max(v))]))?;
        out.push(CorpusGraph::new(format!("unicyclic:n={n},seed={s},extra={u}-{v}"), g));
    }
    Ok(out)
}

/// The named corpus plus 100 random connected graphs of order at most 10.
pub fn builtin_corpus(seed: u64) -> Result<Vec<CorpusGraph>> {
    let mut out = named_corpus();
    out.extend(random_connected_corpus(100, 10, seed)?);
    Ok(out)
}

/// `count` random multisets of size `1..=max_size` over `0..n`.
pub fn sample_placements(n: usize, count: usize, max_size: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<usize>> {
    (0..count)
        .map(|_| {
            let k = rng.gen_range(1..=max_size.min(n).max(1));
            let mut s: Vec<usize> = (0..k).map(|_| rng.gen_range(0..n)).collect();
            s.sort_unstable();
            s
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordal::is_chordal;

    #[test]
    fn corpora_are_connected_and_seeded() {
        assert!(named_corpus().iter().all(|c| c.graph.is_connected() && c.graph.n() <= 12));
        let a = builtin_corpus(7).unwrap();
        let b = builtin_corpus(7).unwrap();
        assert_eq!(a.len(), named_corpus().len() + 100);
        assert!(a.iter().zip(&b).all(|(x, y)| x.graph == y.graph && x.graph.is_connected()));
        assert!(random_chordal_corpus(30, 12, 1).unwrap().iter().all(|c| is_chordal(&c.graph)));
        for c in random_unicyclic_corpus(30, 12, 1).unwrap() {
            assert!(c.graph.is_connected() && c.graph.m() == c.graph.n());
        }
    }
}
