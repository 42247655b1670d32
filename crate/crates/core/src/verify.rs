//! Verification suites: each checks one claim about cop throttling on a
//! seeded corpus with the exact engine, in parallel across graphs.

use crate::budget::Budget;
use crate::chordal::{ball_cover_strategy, chordal_throttling, greedy_throttling_bound, is_chordal, max_distance};
use crate::corpus::{
    builtin_corpus, random_chordal_corpus, random_tree_corpus, random_unicyclic_corpus, sample_placements,
    CorpusGraph,
};
use crate::error::{Error, Result};
use crate::families::{attach_star, m_ell, m_ell_three_cop_placement, path};
use crate::game::{cop_number, solve, solve_placement, CopConfig, GameValue};
use crate::graph::enumerate::connected_graphs_up_to;
use crate::graph::{
    boundary_vertices, domination_number, is_disjoint_corner_set, is_outerplanar,
    k_distance_dominating, radius, DominationMode, Graph,
};
use crate::strategy::{feedback_bound, guard_placement, shadow_guard_simulate, staged_decomposition, StagedParams};
use crate::throttling::{check_iq_proposition, classify_thprod_low, throttling_report, ReportOptions};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    ChordalCapture,
    ProdChordal,
    PropBounds,
    LowThcx,
    Iq,
    Outerplanar,
    Meirmoon,
    GuardLemma,
    CornerSandwich,
    TreeBound,
    UnicyclicBound,
    StarLemma,
    MEll,
    Certificates,
}

impl Suite {
    pub const ALL: [Suite; 14] = [
        Suite::ChordalCapture,
        Suite::ProdChordal,
        Suite::PropBounds,
        Suite::LowThcx,
        Suite::Iq,
        Suite::Outerplanar,
        Suite::Meirmoon,
        Suite::GuardLemma,
        Suite::CornerSandwich,
        Suite::TreeBound,
        Suite::UnicyclicBound,
        Suite::StarLemma,
        Suite::MEll,
        Suite::Certificates,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::ChordalCapture => "chordal-capture",
            Suite::ProdChordal => "prod-chordal",
            Suite::PropBounds => "prop-bounds",
            Suite::LowThcx => "low-thcx",
            Suite::Iq => "iq",
            Suite::Outerplanar => "outerplanar",
            Suite::Meirmoon => "meirmoon",
            Suite::GuardLemma => "guard-lemma",
            Suite::CornerSandwich => "corner-sandwich",
            Suite::TreeBound => "tree-bound",
            Suite::UnicyclicBound => "unicyclic-bound",
            Suite::StarLemma => "star-lemma",
            Suite::MEll => "m-ell",
            Suite::Certificates => "certificates",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
            Error::InvalidParameter(format!("unknown suite `{s}` (known: {})", names.join(", ")))
        })
    }
}

/// Corpus parameters. Unset fields take the suite's defaults.
#[derive(Debug, Clone, Default)]
pub struct SuiteConfig {
    pub count: Option<usize>,
    pub max_n: Option<usize>,
    pub seed: Option<u64>,
    pub budget: Budget,
    /// Suite-specific integer parameter `l` of `m-ell`.
    pub ell: Option<usize>,
    /// Replaces the suite's generated corpus where a graph corpus applies.
    pub graphs: Option<Vec<Graph>>,
}

/// A failing item, serialized for inspection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub index: usize,
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<Graph>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checked: usize,
    pub passed: usize,
    pub failed: usize,
    pub first_failure: Option<Counterexample>,
    /// Facts observed along the way that are not pass/fail.
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    pub fn summary(&self) -> String {
        let mut s = format!(
            "{}: {} checked, {} passed, {} failed",
            self.suite, self.checked, self.passed, self.failed
        );
        if let Some(c) = &self.first_failure {
            s.push_str(&format!("\n  first failure #{} ({}): {}", c.index, c.label, c.detail));
            if let Some(g) = &c.graph {
                s.push_str(&format!("\n  graph: {}", crate::graph::io::to_json(g)));
            }
        }
        for n in &self.notes {
            s.push_str(&format!("\n  note: {n}"));
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Outcome of one corpus item: `None` passes, `Some(detail)` fails.
type Check = Result<Option<String>>;

fn fail_if(bad: bool, detail: impl FnOnce() -> String) -> Option<String> {
    bad.then(detail)
}

struct Item {
    label: String,
    graph: Option<Graph>,
}

fn run_items<T: Sync>(
    suite: Suite,
    items: &[T],
    describe: impl Fn(&T) -> Item + Sync,
    check: impl Fn(&T) -> Check + Sync,
) -> Result<SuiteReport> {
    let outcomes: Vec<Check> = items.par_iter().map(&check).collect();
    let mut report = SuiteReport {
        suite,
        checked: items.len(),
        passed: 0,
        failed: 0,
        first_failure: None,
        notes: Vec::new(),
    };
    for (i, outcome) in outcomes.into_iter().enumerate() {
        match outcome? {
            None => report.passed += 1,
            Some(detail) => {
                report.failed += 1;
                if report.first_failure.is_none() {
                    let item = describe(&items[i]);
                    report.first_failure =
                        Some(Counterexample { index: i, label: item.label, graph: item.graph, detail });
                }
            }
        }
    }
    Ok(report)
}

fn run_graphs(suite: Suite, corpus: &[CorpusGraph], check: impl Fn(&Graph) -> Check + Sync) -> Result<SuiteReport> {
    run_items(
        suite,
        corpus,
        |c| Item { label: c.label.clone(), graph: Some(c.graph.clone()) },
        |c| check(&c.graph),
    )
}

fn given_or(cfg: &SuiteConfig, fallback: impl FnOnce() -> Result<Vec<CorpusGraph>>) -> Result<Vec<CorpusGraph>> {
    match &cfg.graphs {
        Some(gs) => Ok(gs
            .iter()
            .enumerate()
            .map(|(i, g)| CorpusGraph { label: g.name().map_or(format!("input #{i}"), String::from), graph: g.clone() })
            .collect()),
        None => fallback(),
    }
}

fn seed(cfg: &SuiteConfig) -> u64 {
    cfg.seed.unwrap_or(42)
}

fn chordal_corpus(cfg: &SuiteConfig) -> Result<Vec<CorpusGraph>> {
    given_or(cfg, || random_chordal_corpus(cfg.count.unwrap_or(200), cfg.max_n.unwrap_or(12), seed(cfg)))
}

fn full_corpus(cfg: &SuiteConfig) -> Result<Vec<CorpusGraph>> {
    given_or(cfg, || match (cfg.count, cfg.max_n) {
        (None, None) => builtin_corpus(seed(cfg)),
        (count, max_n) => crate::corpus::random_connected_corpus(count.unwrap_or(100), max_n.unwrap_or(10), seed(cfg)),
    })
}

fn report(g: &Graph, budget: Budget) -> Result<crate::throttling::ThrottlingReport> {
    throttling_report(g, ReportOptions { budget, ..ReportOptions::default() })
}

fn isqrt(n: usize) -> usize {
    (n as f64).sqrt().floor() as usize
}

/// `⌈√n⌉ + ⌊√n⌋ − 1`.
pub fn sqrt_bound(n: usize) -> usize {
    let f = isqrt(n);
    let c = if f * f == n { f } else { f + 1 };
    c + f - 1
}

/// Runs one suite.
pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<SuiteReport> {
    let budget = cfg.budget;
    match suite {
        Suite::ChordalCapture => {
            let corpus = chordal_corpus(cfg)?;
            let base = seed(cfg);
            let items: Vec<(usize, &CorpusGraph)> = corpus.iter().enumerate().collect();
            let mut rep = run_items(
                suite,
                &items,
                |(_, c)| Item { label: c.label.clone(), graph: Some(c.graph.clone()) },
                |&(i, c)| {
                    let g = &c.graph;
                    let mut rng = ChaCha8Rng::seed_from_u64(base ^ (i as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
                    let placements = sample_placements(g.n(), 20, 3, &mut rng);
                    let mut tables = Vec::new();
                    for k in 1..=placements.iter().map(Vec::len).max().unwrap_or(1) {
                        tables.push(solve(g, k, budget)?);
                    }
                    for s in placements {
                        let exact = tables[s.len() - 1].capture_time(&CopConfig::new(s.clone())?)?;
                        let formula = max_distance(g, &s).finite().map(|d| GameValue::Finite(d as u32));
                        if Some(exact) != formula {
                            return Ok(Some(format!(
                                "placement {s:?}: exact capture time {exact}, max distance {}",
                                max_distance(g, &s)
                            )));
                        }
                    }
                    Ok(None)
                },
            )?;
            rep.notes.push("20 placements of size at most 3 per graph".into());
            Ok(rep)
        }
        Suite::ProdChordal => run_graphs(suite, &chordal_corpus(cfg)?, |g| {
            let r = report(g, budget)?;
            let rad = radius(g).finite().expect("connected") as u64;
            let fast = chordal_throttling(g, budget)?;
            Ok(fail_if(r.th_prod != 1 + rad || fast.th_prod != r.th_prod, || {
                format!("exact th_prod {} but 1 + rad = {}", r.th_prod, 1 + rad)
            }))
        }),
        Suite::PropBounds => run_graphs(suite, &full_corpus(cfg)?, |g| {
            let r = report(g, budget)?;
            let (s, p) = (r.th_sum, r.th_prod);
            Ok(fail_if(!(s <= p && p <= (s + 1) * (s + 1) / 4), || {
                format!("th_sum {s}, th_prod {p}, upper {}", (s + 1) * (s + 1) / 4)
            }))
        }),
        Suite::LowThcx => run_graphs(suite, &full_corpus(cfg)?, |g| {
            let r = report(g, budget)?;
            let c = classify_thprod_low(g, budget)?;
            Ok(match c.value {
                Some(v) => fail_if(v != r.th_prod, || format!("classified {v} ({:?}), exact {}", c.case, r.th_prod)),
                None => fail_if(r.th_prod < 5, || format!("classified none, exact {}", r.th_prod)),
            })
        }),
        Suite::Iq => run_graphs(suite, &full_corpus(cfg)?, |g| {
            let c = check_iq_proposition(g, budget)?;
            Ok(fail_if(!c.holds, || {
                format!(
                    "left {} right {}: q {}, th_prod {}, I(q) {:?}, sum minima {:?}",
                    c.left, c.right, c.q, c.th_prod, c.i_q, c.sum_minimum
                )
            }))
        }),
        Suite::Outerplanar => {
            let corpus = given_or(cfg, || {
                Ok(connected_graphs_up_to(cfg.max_n.unwrap_or(7))?
                    .into_iter()
                    .enumerate()
                    .map(|(i, graph)| CorpusGraph { label: format!("connected #{i}"), graph })
                    .collect())
            })?;
            let mut rep = run_graphs(suite, &corpus, |g| {
                if !is_outerplanar(g, budget)? {
                    return Ok(None);
                }
                let copwin = cop_number(g, budget)? == 1;
                let chordal = is_chordal(g);
                Ok(fail_if(copwin != chordal, || format!("cop-win {copwin}, chordal {chordal}")))
            })?;
            let outer = corpus
                .par_iter()
                .map(|c| is_outerplanar(&c.graph, budget))
                .collect::<Result<Vec<bool>>>()?;
            rep.notes.push(format!("{} of {} graphs are outerplanar", outer.iter().filter(|&&b| b).count(), corpus.len()));
            Ok(rep)
        }
        Suite::Meirmoon => {
            let mut corpus = full_corpus(cfg)?;
            if cfg.graphs.is_none() {
                corpus.extend(random_chordal_corpus(100, 12, seed(cfg))?);
                corpus.extend(random_tree_corpus(60, 144, seed(cfg))?);
            }
            run_graphs(suite, &corpus, |g| {
                let n = g.n();
                for k in 0..n {
                    let d = k_distance_dominating(g, k, DominationMode::Greedy, budget)?;
                    let reach = max_distance(g, &d).finite().unwrap_or(usize::MAX);
                    if reach > k || d.len() > n / (k + 1) {
                        return Ok(Some(format!("k {k}: greedy set of size {} reaching {reach}", d.len())));
                    }
                }
                let bound = sqrt_bound(n) as u64;
                let (greedy, _) = greedy_throttling_bound(g)?;
                if greedy > bound {
                    return Ok(Some(format!("greedy cost {greedy} above {bound}")));
                }
                if crate::graph::is_forest(g) {
                    let cert = feedback_bound(g, budget)?;
                    let cost = cert.cost() as u64;
                    if !cert.validated || cost > 2 * isqrt(n) as u64 {
                        return Ok(Some(format!("tree certificate cost {cost}, validated {}", cert.validated)));
                    }
                } else if is_chordal(g) {
                    let t = chordal_throttling(g, budget)?;
                    if t.th_sum > bound {
                        return Ok(Some(format!("chordal th_sum {} above {bound}", t.th_sum)));
                    }
                    if n <= 12 {
                        let exact = report(g, budget)?.th_sum;
                        if exact > bound {
                            return Ok(Some(format!("exact th_sum {exact} above {bound}")));
                        }
                    }
                }
                Ok(None)
            })
        }
        Suite::GuardLemma => {
            let max_len = cfg.max_n.unwrap_or(30);
            let items: Vec<(usize, usize)> = (0..=max_len).flat_map(|k| (1..=5).map(move |r| (k, r))).collect();
            run_items(
                suite,
                &items,
                |&(k, r)| Item { label: format!("path length {k}, r {r}"), graph: None },
                |&(k, r)| {
                    let p = path(k + 1);
                    let verts: Vec<usize> = p.vertices().collect();
                    let pos: Vec<usize> = guard_placement(k, r)?.iter().map(|i| i - 1).collect();
                    if pos.len() != (k + 1).div_ceil(2 * r + 1) {
                        return Ok(Some(format!("{} cops placed", pos.len())));
                    }
                    let reach = max_distance(&p, &pos).finite().unwrap_or(usize::MAX);
                    if reach > r {
                        return Ok(Some(format!("placement {pos:?} reaches only within {reach}")));
                    }
                    let (rounds, _) = shadow_guard_simulate(&p, &verts, r)?;
                    if rounds as usize > r {
                        return Ok(Some(format!("shadow guarded after {rounds} rounds")));
                    }
                    // Leftmost-uncovered interval covering is optimal on a path.
                    let (mut needed, mut next) = (0, 0);
                    while next <= k {
                        needed += 1;
                        next += 2 * r + 1;
                    }
                    if pos.len() > needed {
                        return Ok(Some(format!("{needed} cops already reach within {r}")));
                    }
                    if pos.len() > 1 && k < 16 {
                        let fewer = crate::graph::k_radius_exact(&p, pos.len() - 1, budget)?;
                        if fewer.value.finite().is_some_and(|v| v <= r) {
                            return Ok(Some(format!("{} cops already reach within {r}", pos.len() - 1)));
                        }
                    }
                    Ok(None)
                },
            )
        }
        Suite::CornerSandwich => {
            let corpus = given_or(cfg, || random_chordal_corpus(cfg.count.unwrap_or(100), cfg.max_n.unwrap_or(10), seed(cfg)))?;
            let base = seed(cfg);
            let items: Vec<(usize, &CorpusGraph)> = corpus.iter().enumerate().collect();
            let mut rep = run_items(
                suite,
                &items,
                |(_, c)| Item { label: c.label.clone(), graph: Some(c.graph.clone()) },
                |&(i, c)| corner_sandwich(&c.graph, base.wrapping_add(i as u64), budget).map(|o| o.failure),
            )?;
            let not_corners = items
                .par_iter()
                .map(|&(i, c)| corner_sandwich(&c.graph, base.wrapping_add(i as u64), budget).map(|o| !o.corners))
                .collect::<Result<Vec<bool>>>()?
                .into_iter()
                .filter(|&b| b)
                .count();
            rep.notes.push(format!("{not_corners} boundary sets were not sets of disjoint corners"));
            Ok(rep)
        }
        Suite::TreeBound => {
            let corpus = given_or(cfg, || random_tree_corpus(cfg.count.unwrap_or(60), cfg.max_n.unwrap_or(144), seed(cfg)))?;
            run_graphs(suite, &corpus, |g| {
                let n = g.n();
                let cert = feedback_bound(g, budget)?;
                let cost = cert.cost();
                if !cert.validated || cost > sqrt_bound(n) || cost > 2 * isqrt(n) {
                    return Ok(Some(format!("certificate cost {cost}, validated {}", cert.validated)));
                }
                if n <= 10 {
                    let exact = report(g, budget)?.th_sum;
                    if exact as usize > cost {
                        return Ok(Some(format!("exact th_sum {exact} above certified {cost}")));
                    }
                }
                Ok(None)
            })
        }
        Suite::UnicyclicBound => {
            let corpus = given_or(cfg, || random_unicyclic_corpus(cfg.count.unwrap_or(60), cfg.max_n.unwrap_or(40), seed(cfg)))?;
            run_graphs(suite, &corpus, |g| {
                let cert = feedback_bound(g, budget)?;
                let cost = cert.cost() as f64;
                let bound = 2.0 * (g.n() as f64).sqrt() + 1.0;
                Ok(fail_if(!cert.validated || cost > bound, || {
                    format!("certificate cost {cost} (bound {bound:.3}), validated {}", cert.validated)
                }))
            })
        }
        Suite::StarLemma => {
            let count = cfg.count.unwrap_or(20);
            let mut rng = ChaCha8Rng::seed_from_u64(seed(cfg));
            let base = path(4);
            let mut graphs = Vec::new();
            for _ in 0..count {
                let mut anchors = vec![(4 + rng.gen_range(0..5), rng.gen_range(0..4))];
                for sv in 4..9 {
                    for gv in 0..4 {
                        if rng.gen_bool(0.15) {
                            anchors.push((sv, gv));
                        }
                    }
                }
                anchors.sort_unstable();
                anchors.dedup();
                graphs.push(CorpusGraph {
                    label: format!("attach_star P_4, s=4, anchors {anchors:?}"),
                    graph: attach_star(&base, 4, &anchors)?,
                });
            }
            let base_th = report(&base, budget)?.th_sum;
            let mut rep = run_graphs(suite, &graphs, |g| {
                let th = report(g, budget)?.th_sum;
                // k t^{1-α} with k = 3/2, t = 9, α = 1/2.
                Ok(fail_if(th > 4 || th > base_th + 1, || format!("th_sum {th}, base {base_th}")))
            })?;
            rep.notes.push(format!("th_sum(P_4) = {base_th}"));
            Ok(rep)
        }
        Suite::MEll => {
            let l = cfg.ell.unwrap_or(7);
            let m = m_ell_check(l, budget)?;
            let items = [m];
            let mut rep = run_items(
                suite,
                &items,
                |_| Item { label: format!("m_ell:l={l}"), graph: None },
                |m| Ok(m.failure()),
            )?;
            rep.notes.push(items[0].summary());
            Ok(rep)
        }
        Suite::Certificates => {
            let mut corpus = full_corpus(cfg)?;
            if cfg.graphs.is_none() {
                corpus.extend(random_chordal_corpus(60, 12, seed(cfg))?);
                corpus.extend(random_unicyclic_corpus(30, 12, seed(cfg))?);
            }
            run_graphs(suite, &corpus, |g| certificate_check(g, budget))
        }
    }
}

struct SandwichOutcome {
    failure: Option<String>,
    corners: bool,
}

fn corner_sandwich(g: &Graph, seed: u64, budget: Budget) -> Result<SandwichOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = g.n();
    let v = rng.gen_range(0..n);
    let c = boundary_vertices(g, v)?;
    let corners = is_disjoint_corner_set(g, &c);
    let rest = g.remove_vertices(&c)?;
    let keep = rest.graph.n();
    if keep == 0 {
        return Ok(SandwichOutcome { failure: None, corners });
    }
    for _ in 0..10 {
        let size = rng.gen_range(1..=3.min(keep));
        let local: Vec<usize> = (0..size).map(|_| rng.gen_range(0..keep)).collect();
        let s: Vec<usize> = local.iter().map(|&x| rest.to_original(x)).collect();
        let full = solve_placement(g, &CopConfig::new(s.clone())?, budget)?.0;
        let reduced = solve_placement(&rest.graph, &CopConfig::new(local)?, budget)?.0;
        let upper = match reduced {
            GameValue::Finite(x) => GameValue::Finite(x + 1),
            GameValue::RobberWins => GameValue::RobberWins,
        };
        if !(reduced <= full && full <= upper) {
            return Ok(SandwichOutcome {
                failure: Some(format!("v {v}, C {c:?}, S {s:?}: capt(G - C) {reduced}, capt(G) {full}")),
                corners,
            });
        }
    }
    Ok(SandwichOutcome { failure: None, corners })
}

/// The separation facts for `m_ell(l)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MEllCheck {
    pub l: usize,
    pub n: usize,
    pub cop_number: usize,
    pub capt_2: GameValue,
    pub th_prod_2: Option<u64>,
    pub three_cop_placement: Vec<usize>,
    pub capt_three: GameValue,
    pub th_prod_3_upper: Option<u64>,
    pub gamma: usize,
}

impl MEllCheck {
    /// `2(l + 3)`, the two-cop lower bound.
    pub fn two_cop_floor(&self) -> u64 {
        2 * (self.l as u64 + 3)
    }

    pub fn failure(&self) -> Option<String> {
        let mut bad = Vec::new();
        if self.cop_number != 2 {
            bad.push(format!("cop number {}", self.cop_number));
        }
        if self.th_prod_2.is_none_or(|p| p < self.two_cop_floor()) {
            bad.push(format!("th_prod(M, 2) = {:?} below {}", self.th_prod_2, self.two_cop_floor()));
        }
        let reach = (self.l as u32 + 3).div_ceil(2);
        if self.capt_three.finite().is_none_or(|c| c > reach) {
            bad.push(format!("three-cop capture {} above {reach}", self.capt_three));
        }
        if self.l >= 7 && self.th_prod_3_upper.is_none_or(|p| p >= self.two_cop_floor()) {
            bad.push(format!("three-cop cost {:?} not below {}", self.th_prod_3_upper, self.two_cop_floor()));
        }
        if self.gamma != 3 * self.l + 4 {
            bad.push(format!("γ = {}", self.gamma));
        }
        (!bad.is_empty()).then(|| bad.join("; "))
    }

    pub fn summary(&self) -> String {
        format!(
            "M({}): n {}, c {}, capt_2 {}, th_prod(M,2) {}, three-cop placement {:?} captures in {} (cost {}), γ {}",
            self.l,
            self.n,
            self.cop_number,
            self.capt_2,
            self.th_prod_2.map_or("inf".into(), |v| v.to_string()),
            self.three_cop_placement,
            self.capt_three,
            self.th_prod_3_upper.map_or("inf".into(), |v| v.to_string()),
            self.gamma
        )
    }
}

pub fn m_ell_check(l: usize, budget: Budget) -> Result<MEllCheck> {
    let g = m_ell(l)?;
    let c = cop_number(&g, budget)?;
    let (capt_2, _) = crate::game::capt_k(&g, 2, budget)?;
    let placement = m_ell_three_cop_placement(l)?;
    let (capt_three, _) = solve_placement(&g, &CopConfig::new(placement.clone())?, budget)?;
    let (gamma, _) = domination_number(&g, budget)?;
    Ok(MEllCheck {
        l,
        n: g.n(),
        cop_number: c,
        capt_2,
        th_prod_2: capt_2.product_cost(2),
        three_cop_placement: placement,
        capt_three,
        th_prod_3_upper: capt_three.product_cost(3),
        gamma,
    })
}

/// Every certificate the constructions produce must bound the exact capture
/// time of its placement; unicyclic feedback certificates also cost at most
/// `2√n + 1`.
pub fn certificate_check(g: &Graph, budget: Budget) -> Check {
    let exact_small = |cops: &[usize]| -> Result<Option<GameValue>> {
        if cops.len() > 4 {
            return Ok(None);
        }
        Ok(Some(solve_placement(g, &CopConfig::new(cops.to_vec())?, budget)?.0))
    };
    let mut certs = Vec::new();
    let fb = feedback_bound(g, budget)?;
    if g.m() == g.n() && fb.cost() as f64 > 2.0 * (g.n() as f64).sqrt() + 1.0 {
        return Ok(Some(format!("unicyclic feedback certificate costs {}", fb.cost())));
    }
    certs.push(("feedback", fb));
    let params = StagedParams { long_len: 4, guard_r1: 1, star_deg: 3, mid_len: 2, guard_r2: 1, reserve: None };
    certs.push(("staged", staged_decomposition(g, params, budget)?));
    if let Ok(p) = StagedParams::from_lambert(g.n()) {
        certs.push(("staged-default", staged_decomposition(g, p, budget)?));
    }
    if is_chordal(g) {
        let t = chordal_throttling(g, budget)?;
        let reach = max_distance(g, &t.th_sum_witness).finite().expect("connected") as u32;
        certs.push(("ball-cover", ball_cover_strategy(g, &CopConfig::new(t.th_sum_witness.clone())?, reach, budget)?));
        let center = vec![t.th_prod_witness];
        certs.push(("ball-cover-center", ball_cover_strategy(g, &CopConfig::new(center)?, t.rad as u32, budget)?));
    }
    for (name, cert) in certs {
        if !cert.validated {
            return Ok(Some(format!("{name} certificate did not validate (claimed {})", cert.claimed_bound)));
        }
        if let Some(exact) = exact_small(&cert.cops)? {
            if exact.finite().is_none_or(|v| v > cert.claimed_bound) {
                return Ok(Some(format!("{name}: exact {exact} above claimed {}", cert.claimed_bound)));
            }
        }
    }
    Ok(None)
}
