//! Deterministic cop strategies, their certificates, and exact validation
//! against a best-response robber.

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::game::{solve, CopConfig, GameState, GameValue, SolvedGame};
use crate::graph::{bfs_levels, geodesic_between, Graph, InducedSubgraph};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// One component of a staged strategy. Cops are referred to by their
/// index in [`PlacementCertificate::cops`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Stage {
    /// Cops that never move (star centers, feedback vertices).
    Stationary { cops: Vec<usize> },
    /// Each cop `i` moves, at round `t`, to the projection of the robber
    /// onto the ball of radius `t` around `homes[i]` in the host graph
    /// (`host_edges`, or the game graph itself when absent).
    Projection {
        cops: Vec<usize>,
        homes: Vec<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        host_edges: Option<Vec<[usize; 2]>>,
    },
    /// Cops guarding a geodesic of the residual graph `residual`. They
    /// wait until round `start_round`, then every cop steps toward the
    /// robber's shadow on the path.
    PathGuard {
        cops: Vec<usize>,
        path: Vec<usize>,
        radius: u32,
        start_round: u32,
        residual: Vec<usize>,
    },
    /// Cop `i` guards the ball of radius `radius` around `homes[i]`: it
    /// chases the robber's image under a retraction onto the ball with the
    /// optimal one-cop strategy of the ball, then stays on that image.
    BallGuard { cops: Vec<usize>, homes: Vec<usize>, radius: u32 },
    /// Reserve cops parked at `center`. After `start_round` they walk
    /// along geodesics to the dominating set of the leftover component
    /// holding the robber.
    Reserve {
        cops: Vec<usize>,
        center: usize,
        start_round: u32,
        components: Vec<ReserveTarget>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReserveTarget {
    pub component: Vec<usize>,
    pub targets: Vec<usize>,
}

/// Positions after the robber's move in a round (round 0 is placement).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub round: u32,
    pub cops: Vec<usize>,
    pub robber: usize,
    pub captured: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlacementCertificate {
    pub placement: CopConfig,
    /// Start vertex of each individual cop.
    pub cops: Vec<usize>,
    pub stages: Vec<Stage>,
    pub claimed_bound: u32,
    /// False when the construction could not staff every part it needs;
    /// such a certificate is not expected to validate.
    pub complete: bool,
    /// Outcome of [`certify_strategy`] at construction time.
    pub validated: bool,
    pub transcript: Vec<TraceStep>,
}

impl PlacementCertificate {
    pub fn new(cops: Vec<usize>, stages: Vec<Stage>, claimed_bound: u32) -> Result<Self> {
        Ok(PlacementCertificate {
            placement: CopConfig::new(cops.clone())?,
            cops,
            stages,
            claimed_bound,
            complete: true,
            validated: false,
            transcript: Vec::new(),
        })
    }

    /// Runs [`certify_strategy`] and records its verdict and trace.
    pub fn validate(mut self, g: &Graph) -> Result<Self> {
        let outcome = certify_strategy(g, &self)?;
        self.validated = outcome.valid;
        self.transcript = outcome.trace;
        Ok(self)
    }

    /// Cops plus claimed rounds, the throttling cost this certificate pays.
    pub fn cost(&self) -> usize {
        self.cops.len() + self.claimed_bound as usize
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifyOutcome {
    pub valid: bool,
    /// Worst capture round over robber play, or `None` when the robber
    /// survives past the claimed bound.
    pub worst_rounds: Option<u32>,
    pub trace: Vec<TraceStep>,
}

enum Compiled {
    Stationary,
    Projection {
        cops: Vec<usize>,
        /// Per cop: host distance from its home, and the parent map.
        dist: Vec<Vec<usize>>,
        dom: Vec<Vec<usize>>,
    },
    BallGuard {
        cops: Vec<usize>,
        guards: Vec<BallGame>,
    },
    PathGuard {
        cops: Vec<usize>,
        path: Vec<usize>,
        index: HashMap<usize, usize>,
        start: u32,
        in_residual: Vec<bool>,
        dist: Vec<usize>,
    },
    Reserve {
        cops: Vec<usize>,
        start: u32,
        comp_of: Vec<usize>,
        /// Per component, per reserve cop: route from the center.
        routes: Vec<Vec<Vec<usize>>>,
    },
}

/// One guarded ball: the retraction, the ball as its own graph, and its
/// solved one-cop game.
struct BallGame {
    retract: Vec<usize>,
    ball: InducedSubgraph,
    table: SolvedGame,
}

impl BallGame {
    fn new(g: &Graph, home: usize, radius: usize, budget: Budget) -> Result<Self> {
        let retract = ball_retraction(g, home, radius)?;
        let d = bfs_levels(g, &[home], None);
        let inside: Vec<usize> = g.vertices().filter(|&v| d[v] <= radius).collect();
        let ball = g.induced_subgraph(&inside)?;
        let table = solve(&ball.graph, 1, budget)?;
        Ok(BallGame { retract, ball, table })
    }

    /// Rounds one cop at `home` needs on the ball alone.
    fn capture_time(&self, home: usize) -> Result<GameValue> {
        let local = self.ball.to_new(home).expect("home lies in its ball");
        self.table.capture_time(&CopConfig::new(vec![local])?)
    }

    fn step(&self, g: &Graph, cop: usize, robber: usize) -> Result<usize> {
        let shadow = self.retract[robber];
        if cop == shadow || g.has_edge(cop, shadow) {
            return Ok(shadow);
        }
        let (Some(c), Some(s)) = (self.ball.to_new(cop), self.ball.to_new(shadow)) else {
            return Ok(cop);
        };
        let state = GameState { cops: CopConfig::new(vec![c])?, robber: s };
        Ok(match self.table.optimal_cop_moves(&state)?.first() {
            Some(m) => self.ball.to_original(m.positions()[0]),
            None => cop,
        })
    }
}

/// Guard time of every ball: the largest one-cop capture time over the
/// balls of radius `radius` around `homes`.
pub(crate) fn ball_guard_time(g: &Graph, homes: &[usize], radius: usize, budget: Budget) -> Result<GameValue> {
    let mut worst = GameValue::Finite(0);
    for &h in homes {
        g.check_vertex(h)?;
        worst = worst.max(BallGame::new(g, h, radius, budget)?.capture_time(h)?);
    }
    Ok(worst)
}

/// A strategy ready to be queried move by move.
pub struct StrategyRunner<'g> {
    g: &'g Graph,
    stages: Vec<Compiled>,
}

impl<'g> StrategyRunner<'g> {
    pub fn new(g: &'g Graph, cert: &PlacementCertificate) -> Result<Self> {
        let n = g.n();
        cert.placement.check_range(n)?;
        let k = cert.cops.len();
        let check_cops = |cops: &[usize]| -> Result<()> {
            match cops.iter().find(|&&c| c >= k) {
                Some(c) => Err(Error::InvalidParameter(format!("stage names cop {c} of {k}"))),
                None => Ok(()),
            }
        };
        let mut stages = Vec::new();
        for stage in &cert.stages {
            stages.push(match stage {
                Stage::Stationary { cops } => {
                    check_cops(cops)?;
                    Compiled::Stationary
                }
                Stage::Projection { cops, homes, host_edges } => {
                    check_cops(cops)?;
                    if cops.len() != homes.len() {
                        return Err(Error::InvalidParameter("one home per projection cop".into()));
                    }
                    let host = match host_edges {
                        Some(e) => Graph::from_edges(n, e.iter().map(|x| (x[0], x[1])))?,
                        None => g.clone(),
                    };
                    let mut dist = Vec::new();
                    let mut dom = Vec::new();
                    for &h in homes {
                        host.check_vertex(h)?;
                        let (d, f) = dominator_map(&host, h)?;
                        dist.push(d);
                        dom.push(f);
                    }
                    Compiled::Projection { cops: cops.clone(), dist, dom }
                }
                Stage::BallGuard { cops, homes, radius } => {
                    check_cops(cops)?;
                    if cops.len() != homes.len() {
                        return Err(Error::InvalidParameter("one home per ball cop".into()));
                    }
                    let mut guards = Vec::new();
                    for &h in homes {
                        g.check_vertex(h)?;
                        guards.push(BallGame::new(g, h, *radius as usize, Budget::default())?);
                    }
                    Compiled::BallGuard { cops: cops.clone(), guards }
                }
                Stage::PathGuard { cops, path, start_round, residual, .. } => {
                    check_cops(cops)?;
                    let mut in_residual = vec![false; n];
                    for &v in residual {
                        g.check_vertex(v)?;
                        in_residual[v] = true;
                    }
                    let first = *path.first().ok_or_else(|| Error::InvalidParameter("empty path".into()))?;
                    let dist = bfs_levels(g, &[first], Some(&in_residual));
                    let index = path.iter().enumerate().map(|(i, &v)| (v, i)).collect();
                    Compiled::PathGuard {
                        cops: cops.clone(),
                        path: path.clone(),
                        index,
                        start: *start_round,
                        in_residual,
                        dist,
                    }
                }
                Stage::Reserve { cops, center, start_round, components } => {
                    check_cops(cops)?;
                    let mut comp_of = vec![usize::MAX; n];
                    let mut routes = Vec::new();
                    for (ci, rt) in components.iter().enumerate() {
                        for &v in &rt.component {
                            g.check_vertex(v)?;
                            comp_of[v] = ci;
                        }
                        let mut per_cop = Vec::new();
                        for &t in &rt.targets {
                            per_cop.push(geodesic_between(g, *center, t)?);
                        }
                        routes.push(per_cop);
                    }
                    Compiled::Reserve { cops: cops.clone(), start: *start_round, comp_of, routes }
                }
            });
        }
        Ok(StrategyRunner { g, stages })
    }

    /// Cop positions after the cop half-move of `round` (`round >= 1`).
    pub fn step(&self, round: u32, cops: &[usize], robber: usize) -> Result<Vec<usize>> {
        let g = self.g;
        let mut next = cops.to_vec();
        // A cop on or next to the robber takes it.
        if let Some(i) = cops.iter().position(|&c| c == robber || g.has_edge(c, robber)) {
            next[i] = robber;
            return Ok(next);
        }
        let undefined = |reason: String| Error::StrategyUndefined {
            round,
            cops: cops.to_vec(),
            robber,
            reason,
        };
        for stage in &self.stages {
            match stage {
                Compiled::Stationary => {}
                Compiled::Projection { cops: ids, dist, dom } => {
                    for (j, &c) in ids.iter().enumerate() {
                        let (d, f) = (&dist[j], &dom[j]);
                        if d[robber] == usize::MAX {
                            return Err(undefined("robber outside the projection host".into()));
                        }
                        let mut x = robber;
                        while d[x] > round as usize {
                            x = f[x];
                        }
                        next[c] = x;
                    }
                }
                Compiled::BallGuard { cops: ids, guards } => {
                    for (&c, guard) in ids.iter().zip(guards) {
                        next[c] = guard.step(g, cops[c], robber)?;
                    }
                }
                Compiled::PathGuard { cops: ids, path, index, start, in_residual, dist } => {
                    if round <= *start {
                        continue;
                    }
                    if !in_residual[robber] || dist[robber] == usize::MAX {
                        continue;
                    }
                    let shadow = dist[robber].min(path.len() - 1);
                    for &c in ids {
                        let &p = index
                            .get(&cops[c])
                            .ok_or_else(|| undefined(format!("path cop {c} is off its path")))?;
                        let q = match p.cmp(&shadow) {
                            std::cmp::Ordering::Less => p + 1,
                            std::cmp::Ordering::Greater => p - 1,
                            std::cmp::Ordering::Equal => p,
                        };
                        next[c] = path[q];
                    }
                }
                Compiled::Reserve { cops: ids, start, comp_of, routes } => {
                    if round <= *start {
                        continue;
                    }
                    let ci = comp_of[robber];
                    if ci == usize::MAX {
                        continue;
                    }
                    let step = (round - start) as usize;
                    for (j, &c) in ids.iter().enumerate() {
                        if let Some(route) = routes[ci].get(j) {
                            next[c] = route[step.min(route.len() - 1)];
                        }
                    }
                }
            }
        }
        for (i, (&a, &b)) in cops.iter().zip(&next).enumerate() {
            if a != b && !g.has_edge(a, b) {
                return Err(Error::IllegalMove(format!(
                    "round {round}: cop {i} jumps from {a} to {b}"
                )));
            }
        }
        Ok(next)
    }
}

/// Distances from `h` and, for every other reachable vertex `x` at
/// distance `d`, the lowest-id neighbor `y` at distance `d - 1` whose
/// closed neighborhood contains `N[x] ∩ B(h, d)`. Following this map is
/// always a legal cop walk; it exists on every tree.
pub(crate) fn dominator_map(g: &Graph, h: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    let d = bfs_levels(g, &[h], None);
    let mut f = vec![usize::MAX; g.n()];
    for x in g.vertices() {
        if x == h || d[x] == usize::MAX {
            continue;
        }
        let near: Vec<usize> = g.neighbors(x).iter().copied().filter(|&w| d[w] <= d[x]).collect();
        let y = near
            .iter()
            .copied()
            .find(|&y| d[y] + 1 == d[x] && near.iter().all(|&w| w == y || g.has_edge(w, y)))
            .ok_or_else(|| Error::InvalidParameter(format!("vertex {x} has no dominating parent toward {h}")))?;
        f[x] = y;
    }
    Ok((d, f))
}

/// Retraction of `g` onto the ball `B(h, radius)`: each vertex outside
/// walks to its lowest-id parent until it enters the ball. Fails unless
/// the map preserves edges, which needs every vertex's parents to form a
/// clique and adjacent vertices of one level to have adjacent or equal
/// parents (both hold on chordal graphs).
pub(crate) fn ball_retraction(g: &Graph, h: usize, radius: usize) -> Result<Vec<usize>> {
    let d = bfs_levels(g, &[h], None);
    let fail = |x: usize| Error::InvalidParameter(format!("no retraction onto the ball around {h} at vertex {x}"));
    let mut parent = vec![usize::MAX; g.n()];
    for x in g.vertices().filter(|&x| d[x] != usize::MAX && d[x] > radius) {
        let lower: Vec<usize> = g.neighbors(x).iter().copied().filter(|&w| d[w] + 1 == d[x]).collect();
        if lower.iter().enumerate().any(|(i, &a)| lower[i + 1..].iter().any(|&b| !g.has_edge(a, b))) {
            return Err(fail(x));
        }
        parent[x] = lower[0];
    }
    for (x, z) in g.edges() {
        let outside = d[x] != usize::MAX && d[x] > radius;
        if outside && d[x] == d[z] && parent[x] != parent[z] && !g.has_edge(parent[x], parent[z]) {
            return Err(fail(x));
        }
    }
    let mut order: Vec<usize> = g.vertices().filter(|&x| d[x] != usize::MAX).collect();
    order.sort_by_key(|&x| d[x]);
    let mut map: Vec<usize> = (0..g.n()).collect();
    for x in order {
        if d[x] > radius {
            map[x] = map[parent[x]];
        }
    }
    Ok(map)
}

/// Plays the certificate's strategy against every robber line and reports
/// the worst capture round. Play is cut off after `claimed_bound` rounds;
/// a robber still free then makes the certificate invalid.
pub fn certify_strategy(g: &Graph, cert: &PlacementCertificate) -> Result<CertifyOutcome> {
    let runner = StrategyRunner::new(g, cert)?;
    let mut search = Search {
        runner: &runner,
        horizon: cert.claimed_bound,
        memo: HashMap::new(),
    };
    let mut worst: Option<Option<u32>> = None;
    let mut worst_start = 0;
    for r0 in g.vertices() {
        let v = if cert.cops.contains(&r0) {
            Some(0)
        } else {
            search.value(&cert.cops, r0, 0)?
        };
        let better = match worst {
            None => true,
            Some(w) => later(v, w),
        };
        if better {
            worst = Some(v);
            worst_start = r0;
        }
    }
    let worst_rounds = worst.unwrap_or(Some(0));
    let trace = search.trace(&cert.cops, worst_start)?;
    Ok(CertifyOutcome {
        valid: worst_rounds.is_some_and(|w| w <= cert.claimed_bound),
        worst_rounds,
        trace,
    })
}

/// `None` (escape) is later than any round.
fn later(a: Option<u32>, b: Option<u32>) -> bool {
    match (a, b) {
        (None, None) => false,
        (None, Some(_)) => true,
        (Some(_), None) => false,
        (Some(x), Some(y)) => x > y,
    }
}

/// `(cops, robber, round)` to `(capture round, robber reply)`.
type SearchMemo = HashMap<(Vec<usize>, usize, u32), (Option<u32>, Option<usize>)>;

struct Search<'a, 'g> {
    runner: &'a StrategyRunner<'g>,
    horizon: u32,
    /// `(cops, robber, round)` with the robber to be chased next; the value
    /// is the capture round and the robber's chosen reply.
    memo: SearchMemo,
}

impl Search<'_, '_> {
    fn value(&mut self, cops: &[usize], r: usize, t: u32) -> Result<Option<u32>> {
        if let Some(&(v, _)) = self.memo.get(&(cops.to_vec(), r, t)) {
            return Ok(v);
        }
        let result = if t >= self.horizon {
            (None, None)
        } else {
            let next = self.runner.step(t + 1, cops, r)?;
            if next.contains(&r) {
                (Some(t + 1), None)
            } else {
                let mut best: Option<(Option<u32>, usize)> = None;
                for r2 in self.runner.g.closed_neighborhood(r) {
                    if next.contains(&r2) {
                        continue;
                    }
                    let v = self.value(&next, r2, t + 1)?;
                    if best.is_none_or(|(b, _)| later(v, b)) {
                        best = Some((v, r2));
                    }
                    if v.is_none() {
                        break;
                    }
                }
                match best {
                    // Every reply walks into a cop.
                    None => (Some(t + 1), None),
                    Some((v, r2)) => (v, Some(r2)),
                }
            }
        };
        self.memo.insert((cops.to_vec(), r, t), result);
        Ok(result.0)
    }

    fn trace(&mut self, start: &[usize], r0: usize) -> Result<Vec<TraceStep>> {
        let mut steps = Vec::new();
        let mut cops = start.to_vec();
        let mut r = r0;
        let mut t = 0;
        let caught = cops.contains(&r);
        steps.push(TraceStep { round: 0, cops: cops.clone(), robber: r, captured: caught });
        if caught {
            return Ok(steps);
        }
        loop {
            self.value(&cops, r, t)?;
            let (v, reply) = self.memo[&(cops.clone(), r, t)];
            if t >= self.horizon {
                break;
            }
            let next = self.runner.step(t + 1, &cops, r)?;
            t += 1;
            match reply {
                None => {
                    // Either the cops landed on the robber, or every reply
                    // walks into a cop.
                    let robber = if next.contains(&r) {
                        r
                    } else {
                        self.runner.g.closed_neighborhood(r).into_iter().find(|w| next.contains(w)).unwrap_or(r)
                    };
                    steps.push(TraceStep { round: t, cops: next, robber, captured: true });
                    break;
                }
                Some(r2) => {
                    steps.push(TraceStep { round: t, cops: next.clone(), robber: r2, captured: false });
                    cops = next;
                    r = r2;
                }
            }
            if v.is_none() && t >= self.horizon {
                break;
            }
        }
        Ok(steps)
    }
}
