use super::Graph;
use crate::budget::Budget;
use crate::error::Result;

pub fn is_forest(g: &Graph) -> bool {
    g.m() + g.components().1 == g.n()
}

/// Minimum feedback vertex set by enumerating subsets in increasing size;
/// the witness is the lexicographically least minimum set.
pub fn feedback_vertex_number(g: &Graph, budget: Budget) -> Result<(usize, Vec<usize>)> {
    let n = g.n();
    let mut meter = budget.meter("feedback vertex search");
    let cost = (n + g.m()) as u64 + 1;
    let mut removed = vec![false; n];
    for size in 0..=n {
        let mut chosen = Vec::with_capacity(size);
        if let Some(set) = search(g, size, 0, &mut chosen, &mut removed, &mut meter, cost)? {
            return Ok((size, set));
        }
    }
    unreachable!("removing every vertex leaves a forest")
}

fn search(
    g: &Graph,
    size: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    removed: &mut [bool],
    meter: &mut crate::budget::Meter,
    cost: u64,
) -> Result<Option<Vec<usize>>> {
    if chosen.len() == size {
        meter.tick(cost)?;
        return Ok(acyclic_without(g, removed).then(|| chosen.clone()));
    }
    let n = g.n();
    for v in start..=n - (size - chosen.len()) {
        removed[v] = true;
        chosen.push(v);
        let found = search(g, size, v + 1, chosen, removed, meter, cost);
        chosen.pop();
        removed[v] = false;
        if let Some(set) = found? {
            return Ok(Some(set));
        }
    }
    Ok(None)
}

fn acyclic_without(g: &Graph, removed: &[bool]) -> bool {
    let n = g.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (u, v) in g.edges() {
        if removed[u] || removed[v] {
            continue;
        }
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn small_cases() {
        let tree = Graph::from_edges(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert!(is_forest(&tree));
        assert_eq!(feedback_vertex_number(&tree, Budget::default()).unwrap(), (0, vec![]));
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert_eq!(feedback_vertex_number(&c5, Budget::default()).unwrap(), (1, vec![0]));
        let k4 = Graph::from_edges(4, (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j)))).unwrap();
        assert!(!is_forest(&k4));
        assert_eq!(feedback_vertex_number(&k4, Budget::default()).unwrap(), (2, vec![0, 1]));
    }

    #[test]
    fn budget_is_enforced() {
        let k = Graph::from_edges(12, (0..12).flat_map(|i| (i + 1..12).map(move |j| (i, j)))).unwrap();
        assert!(matches!(
            feedback_vertex_number(&k, Budget(500)),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
