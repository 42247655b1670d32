use super::config::{ConfigSpace, CopConfig, GameState};
use super::value::GameValue;
use crate::budget::{Budget, Meter};
use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};

const UNSET: u32 = u32::MAX;

/// Which placements `capt_k` minimizes over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PlacementMode {
    /// All multisets of size `k`.
    #[default]
    Multisets,
    /// Only placements with `k` distinct vertices.
    Sets,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mover {
    Cops,
    Robber,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Move {
    Cops(CopConfig),
    Robber(usize),
}

/// One exported table row: `(cop positions, robber, value)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry(pub Vec<usize>, pub usize, pub GameValue);

/// Values of every cops-to-move state for a fixed number of cops.
#[derive(Debug, Clone)]
pub struct SolvedGame {
    graph: Graph,
    space: ConfigSpace,
    /// Flattened configurations in rank order, stride `k`.
    configs: Vec<usize>,
    /// `values[rank * n + robber]`, `UNSET` meaning the robber evades.
    values: Vec<u32>,
}

/// Solves the `k`-cop game on `g` for every cop configuration and robber
/// position by retrograde layering: capture-in-`t` states are derived from
/// capture-in-`t-1` states until nothing changes.
pub fn solve(g: &Graph, k: usize, budget: Budget) -> Result<SolvedGame> {
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidParameter("the game needs a non-empty graph".into()));
    }
    if k == 0 {
        return Err(Error::InvalidParameter("the game needs at least one cop".into()));
    }
    let size64 = ConfigSpace::size_u64(n, k);
    budget.check("game state space", size64.saturating_mul(n as u64))?;
    let space = ConfigSpace::new(n, k);
    let size = space.size();
    let configs = space.enumerate_flat();
    let closed: Vec<Vec<usize>> = g.vertices().map(|v| g.closed_neighborhood(v)).collect();

    let mut meter = budget.meter("game transitions");
    meter.tick(size64 * n as u64)?;
    let (offsets, targets) = successor_lists(&space, &configs, &closed, &mut meter)?;
    meter.tick(targets.len() as u64 * n as u64)?;

    let mut values = vec![UNSET; size * n];
    let mut remaining = vec![0u32; size * n];
    let mut queue: Vec<u32> = Vec::new();
    let mut near = vec![false; n];
    for c in 0..size {
        let cops = &configs[c * k..(c + 1) * k];
        near.iter_mut().for_each(|x| *x = false);
        for &p in cops {
            for &w in &closed[p] {
                near[w] = true;
            }
        }
        for r in 0..n {
            let idx = c * n + r;
            if cops.contains(&r) {
                values[idx] = 0;
                continue;
            }
            if near[r] {
                values[idx] = 1;
                queue.push(idx as u32);
            }
            remaining[idx] = closed[r].iter().filter(|w| !cops.contains(w)).count() as u32;
        }
    }

    let mut head = 0;
    while head < queue.len() {
        let idx = queue[head] as usize;
        head += 1;
        let (c2, r2) = (idx / n, idx % n);
        let t = values[idx];
        let cops2 = &configs[c2 * k..(c2 + 1) * k];
        for &r in &closed[r2] {
            if cops2.contains(&r) {
                continue;
            }
            let b = c2 * n + r;
            remaining[b] -= 1;
            if remaining[b] != 0 {
                continue;
            }
            // Robber at r facing cops2 is caught after t more rounds at best,
            // so every configuration that can move into cops2 wins in t + 1.
            for &c in &targets[offsets[c2]..offsets[c2 + 1]] {
                let a = c as usize * n + r;
                if values[a] == UNSET {
                    values[a] = t + 1;
                    queue.push(a as u32);
                }
            }
        }
    }

    Ok(SolvedGame {
        graph: g.clone(),
        space,
        configs,
        values,
    })
}

/// Successor (equivalently, predecessor) configuration ranks for every
/// configuration, in compressed row form.
fn successor_lists(
    space: &ConfigSpace,
    configs: &[usize],
    closed: &[Vec<usize>],
    meter: &mut Meter,
) -> Result<(Vec<usize>, Vec<u32>)> {
    let k = space.k();
    let size = space.size();
    let mut offsets = Vec::with_capacity(size + 1);
    offsets.push(0);
    let mut targets = Vec::new();
    let mut buf = Vec::new();
    let mut scratch = vec![0usize; k];
    for c in 0..size {
        buf.clear();
        let cops = &configs[c * k..(c + 1) * k];
        let product: u64 = cops.iter().map(|&p| closed[p].len() as u64).product();
        meter.tick(product)?;
        expand(space, cops, closed, 0, 0, &mut scratch, &mut buf);
        buf.sort_unstable();
        buf.dedup();
        targets.extend(buf.iter().map(|&x| x as u32));
        offsets.push(targets.len());
    }
    Ok((offsets, targets))
}

fn expand(
    space: &ConfigSpace,
    cops: &[usize],
    closed: &[Vec<usize>],
    i: usize,
    min_choice: usize,
    scratch: &mut Vec<usize>,
    out: &mut Vec<usize>,
) {
    let k = cops.len();
    if i == k {
        let mut sorted = scratch.clone();
        sorted.sort_unstable();
        out.push(space.rank(&sorted));
        return;
    }
    let options = &closed[cops[i]];
    for (j, &w) in options.iter().enumerate() {
        // Cops sharing a vertex are interchangeable; order their choices.
        if j < min_choice {
            continue;
        }
        scratch[i] = w;
        let next_min = if i + 1 < k && cops[i + 1] == cops[i] { j } else { 0 };
        expand(space, cops, closed, i + 1, next_min, scratch, out);
    }
}

impl SolvedGame {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn k(&self) -> usize {
        self.space.k()
    }

    pub fn config_count(&self) -> usize {
        self.space.size()
    }

    pub fn state_count(&self) -> usize {
        self.values.len()
    }

    fn config_at(&self, c: usize) -> &[usize] {
        let k = self.k();
        &self.configs[c * k..(c + 1) * k]
    }

    fn lookup(&self, cops: &CopConfig) -> Result<usize> {
        if cops.len() != self.k() || cops.check_range(self.graph.n()).is_err() {
            return Err(Error::UnknownState(format!(
                "cops [{cops}] in a {}-cop table on {} vertices",
                self.k(),
                self.graph.n()
            )));
        }
        Ok(self.space.rank(cops.positions()))
    }

    fn raw(&self, c: usize, r: usize) -> GameValue {
        match self.values[c * self.graph.n() + r] {
            UNSET => GameValue::RobberWins,
            t => GameValue::Finite(t),
        }
    }

    fn check_robber(&self, r: usize) -> Result<()> {
        if r >= self.graph.n() {
            return Err(Error::UnknownState(format!("robber vertex {r} out of range")));
        }
        Ok(())
    }

    /// Value of a cops-to-move state.
    pub fn value(&self, state: &GameState) -> Result<GameValue> {
        let c = self.lookup(&state.cops)?;
        self.check_robber(state.robber)?;
        Ok(self.raw(c, state.robber))
    }

    /// `capt(G; S)`: the worst robber start against placement `s`.
    pub fn capture_time(&self, s: &CopConfig) -> Result<GameValue> {
        let c = self.lookup(s)?;
        Ok(self.placement_value(c))
    }

    fn placement_value(&self, c: usize) -> GameValue {
        (0..self.graph.n())
            .map(|r| self.raw(c, r))
            .max()
            .expect("graph is non-empty")
    }

    /// Every placement with its capture time, in rank order.
    pub fn placement_values(&self) -> impl Iterator<Item = (CopConfig, GameValue)> + '_ {
        (0..self.config_count()).map(move |c| {
            let cfg = CopConfig::new(self.config_at(c).to_vec()).expect("k >= 1");
            (cfg, self.placement_value(c))
        })
    }

    /// Value of the position after the cops moved to `cops`, robber to move.
    pub fn robber_to_move_value(&self, cops: &CopConfig, robber: usize) -> Result<GameValue> {
        let c = self.lookup(cops)?;
        self.check_robber(robber)?;
        Ok(self.after_cop_move(c, robber))
    }

    fn after_cop_move(&self, c: usize, r: usize) -> GameValue {
        let cops = self.config_at(c);
        if cops.contains(&r) {
            return GameValue::Finite(0);
        }
        self.graph
            .closed_neighborhood(r)
            .into_iter()
            .map(|w| if cops.contains(&w) { GameValue::Finite(0) } else { self.raw(c, w) })
            .max()
            .expect("closed neighborhoods are non-empty")
    }

    /// All configurations reachable by one cop move, sorted.
    pub fn cop_moves(&self, cops: &CopConfig) -> Result<Vec<CopConfig>> {
        self.lookup(cops)?;
        let closed: Vec<Vec<usize>> = self.graph.vertices().map(|v| self.graph.closed_neighborhood(v)).collect();
        let mut ranks = Vec::new();
        let mut scratch = vec![0; self.k()];
        expand(&self.space, cops.positions(), &closed, 0, 0, &mut scratch, &mut ranks);
        ranks.sort_unstable();
        ranks.dedup();
        let mut moves: Vec<CopConfig> = ranks
            .into_iter()
            .map(|c| CopConfig::new(self.config_at(c).to_vec()).expect("k >= 1"))
            .collect();
        moves.sort();
        Ok(moves)
    }

    /// Cop moves minimizing the remaining capture time, lexicographically
    /// sorted; empty at a terminal state.
    pub fn optimal_cop_moves(&self, state: &GameState) -> Result<Vec<CopConfig>> {
        self.lookup(&state.cops)?;
        self.check_robber(state.robber)?;
        if state.is_terminal() {
            return Ok(Vec::new());
        }
        let scored: Vec<(GameValue, CopConfig)> = self
            .cop_moves(&state.cops)?
            .into_iter()
            .map(|m| {
                let c = self.space.rank(m.positions());
                (self.after_cop_move(c, state.robber), m)
            })
            .collect();
        let best = scored.iter().map(|x| x.0).min().expect("staying is always legal");
        Ok(scored.into_iter().filter(|x| x.0 == best).map(|x| x.1).collect())
    }

    /// Robber replies maximizing the remaining capture time, with the cops
    /// already on `state.cops`; empty at a terminal state.
    pub fn optimal_robber_moves(&self, state: &GameState) -> Result<Vec<usize>> {
        let c = self.lookup(&state.cops)?;
        self.check_robber(state.robber)?;
        if state.is_terminal() {
            return Ok(Vec::new());
        }
        let scored: Vec<(GameValue, usize)> = self
            .graph
            .closed_neighborhood(state.robber)
            .into_iter()
            .map(|w| {
                let v = if state.cops.contains(w) { GameValue::Finite(0) } else { self.raw(c, w) };
                (v, w)
            })
            .collect();
        let best = scored.iter().map(|x| x.0).max().expect("non-empty");
        Ok(scored.into_iter().filter(|x| x.0 == best).map(|x| x.1).collect())
    }

    /// Best robber start against a placement, lowest id among ties.
    pub fn best_robber_start(&self, s: &CopConfig) -> Result<usize> {
        let c = self.lookup(s)?;
        let best = self.placement_value(c);
        Ok((0..self.graph.n()).find(|&r| self.raw(c, r) == best).expect("max is attained"))
    }

    /// Every state as `(cops, robber, value)`, in rank order.
    pub fn entries(&self) -> Vec<TableEntry> {
        let n = self.graph.n();
        (0..self.config_count())
            .flat_map(|c| (0..n).map(move |r| (c, r)))
            .map(|(c, r)| TableEntry(self.config_at(c).to_vec(), r, self.raw(c, r)))
            .collect()
    }
}

/// `capt(G; S)` together with the full table it was read from.
pub fn solve_placement(g: &Graph, s: &CopConfig, budget: Budget) -> Result<(GameValue, SolvedGame)> {
    s.check_range(g.n())?;
    let table = solve(g, s.len(), budget)?;
    let value = table.capture_time(s)?;
    Ok((value, table))
}

/// `capt_k(G)` with the lexicographically least optimal placement.
pub fn capt_k(g: &Graph, k: usize, budget: Budget) -> Result<(GameValue, CopConfig)> {
    capt_k_with(g, k, PlacementMode::Multisets, budget)
}

pub fn capt_k_with(
    g: &Graph,
    k: usize,
    mode: PlacementMode,
    budget: Budget,
) -> Result<(GameValue, CopConfig)> {
    let table = solve(g, k, budget)?;
    best_placement(&table, mode).ok_or_else(|| {
        Error::InvalidParameter(format!("no placement of {k} distinct cops on {} vertices", g.n()))
    })
}

/// Minimum over placements of a solved table, ties to the lexicographically
/// least configuration.
pub fn best_placement(table: &SolvedGame, mode: PlacementMode) -> Option<(GameValue, CopConfig)> {
    table
        .placement_values()
        .filter(|(cfg, _)| {
            mode == PlacementMode::Multisets || cfg.positions().windows(2).all(|w| w[0] < w[1])
        })
        .map(|(cfg, v)| (v, cfg))
        .min()
}

/// `c(G)`: the sum over components of the least `k` with finite `capt_k`.
pub fn cop_number(g: &Graph, budget: Budget) -> Result<usize> {
    let mut total = 0;
    for comp in g.component_sets() {
        let sub = g.induced_subgraph(&comp)?.graph;
        let mut k = 1;
        loop {
            if capt_k(&sub, k, budget)?.0.is_finite() {
                break;
            }
            k += 1;
        }
        total += k;
    }
    Ok(total)
}

/// Optimal moves for `mover` at `state`, read from a table solved on the
/// same graph.
pub fn optimal_moves(g: &Graph, table: &SolvedGame, state: &GameState, mover: Mover) -> Result<Vec<Move>> {
    if !g.same_structure(table.graph()) {
        return Err(Error::UnknownState("table was solved on a different graph".into()));
    }
    Ok(match mover {
        Mover::Cops => table.optimal_cop_moves(state)?.into_iter().map(Move::Cops).collect(),
        Mover::Robber => table.optimal_robber_moves(state)?.into_iter().map(Move::Robber).collect(),
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

    fn cfg(v: &[usize]) -> CopConfig {
        CopConfig::new(v.to_vec()).unwrap()
    }

    #[test]
    fn placement_examples() {
        let b = Budget::default();
        assert_eq!(solve_placement(&path(5), &cfg(&[2]), b).unwrap().0, GameValue::Finite(2));
        assert_eq!(solve_placement(&cycle(4), &cfg(&[0]), b).unwrap().0, GameValue::RobberWins);
        assert_eq!(solve_placement(&Graph::empty(1), &cfg(&[0]), b).unwrap().0, GameValue::Finite(0));
        assert_eq!(solve_placement(&cycle(4), &cfg(&[0, 2]), b).unwrap().0, GameValue::Finite(1));
    }

    #[test]
    fn capt_k_examples() {
        let b = Budget::default();
        assert_eq!(capt_k(&path(9), 2, b).unwrap().0, GameValue::Finite(2));
        assert_eq!(capt_k(&cycle(5), 2, b).unwrap(), (GameValue::Finite(1), cfg(&[0, 2])));
        assert_eq!(capt_k(&cycle(4), 1, b).unwrap().0, GameValue::RobberWins);
        assert_eq!(capt_k(&path(9), 1, b).unwrap(), (GameValue::Finite(4), cfg(&[4])));
    }

    #[test]
    fn cop_numbers() {
        let b = Budget::default();
        assert_eq!(cop_number(&path(6), b).unwrap(), 1);
        assert_eq!(cop_number(&cycle(4), b).unwrap(), 2);
        assert_eq!(cop_number(&Graph::empty(3), b).unwrap(), 3);
        let mut e: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        e.extend((0..5).map(|i| (i + 5, (i + 2) % 5 + 5)));
        e.extend((0..5).map(|i| (i, i + 5)));
        assert_eq!(cop_number(&Graph::from_edges(10, e).unwrap(), b).unwrap(), 3);
    }

    #[test]
    fn move_extraction() {
        let g = path(5);
        let table = solve(&g, 1, Budget::default()).unwrap();
        let s = GameState { cops: cfg(&[2]), robber: 0 };
        assert_eq!(
            optimal_moves(&g, &table, &s, Mover::Cops).unwrap(),
            vec![Move::Cops(cfg(&[1]))]
        );
        let done = GameState { cops: cfg(&[2]), robber: 2 };
        assert!(optimal_moves(&g, &table, &done, Mover::Cops).unwrap().is_empty());
        let k2 = path(2);
        let t2 = solve(&k2, 1, Budget::default()).unwrap();
        let s = GameState { cops: cfg(&[0]), robber: 1 };
        assert_eq!(optimal_moves(&k2, &t2, &s, Mover::Cops).unwrap(), vec![Move::Cops(cfg(&[1]))]);
        assert!(optimal_moves(&path(3), &t2, &s, Mover::Cops).is_err());
        let bad = GameState { cops: cfg(&[0, 1]), robber: 1 };
        assert!(matches!(table.value(&bad), Err(Error::UnknownState(_))));
        // Robber at 0 with the cop on 1 can only stay or step onto the cop.
        let s = GameState { cops: cfg(&[1]), robber: 0 };
        assert_eq!(table.optimal_robber_moves(&s).unwrap(), vec![0]);
    }

    #[test]
    fn budget_reports_state_count() {
        let err = solve(&path(30), 5, Budget(1000)).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { required, .. } if required == 278256 * 30));
    }

    #[test]
    fn table_export() {
        let table = solve(&path(2), 1, Budget::default()).unwrap();
        let json = serde_json::to_string(&table.entries()).unwrap();
        assert_eq!(json, "[[[0],0,0],[[0],1,1],[[1],0,1],[[1],1,0]]");
    }
}
