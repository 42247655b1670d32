//! Sum and product cop throttling, throttling points, and the structural
//! characterizations of small product throttling numbers.

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::game::{best_placement, capt_k, cop_number, solve, CopConfig, GameValue, PlacementMode};
use crate::graph::{
    closed_nbhd_within, domination_number, eccentricity, k_radius_exact, Distance, Graph,
};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThrottlingRow {
    pub k: usize,
    pub capt: GameValue,
    /// `k + capt`.
    pub sum: GameValue,
    /// `k * (1 + capt)`.
    pub prod: GameValue,
    pub witness: CopConfig,
}

impl ThrottlingRow {
    pub fn new(k: usize, capt: GameValue, witness: CopConfig) -> Self {
        let lift = |x: Option<u64>| match x {
            Some(v) => GameValue::Finite(u32::try_from(v).expect("small graphs")),
            None => GameValue::RobberWins,
        };
        ThrottlingRow {
            k,
            capt,
            sum: lift(capt.plus(k as u64)),
            prod: lift(capt.product_cost(k as u64)),
            witness,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThrottlingReport {
    pub n: usize,
    /// Rows for every `k` where the game was solved, plus the `k = n` row.
    pub rows: Vec<ThrottlingRow>,
    /// Values of `k` skipped because `capt_k >= rad_k` already rules them
    /// out of both minima.
    pub skipped: Vec<usize>,
    pub cop_number: usize,
    pub th_sum: u64,
    pub th_sum_ks: Vec<usize>,
    pub th_sum_witness: CopConfig,
    pub th_prod: u64,
    pub th_prod_ks: Vec<usize>,
    pub th_prod_witness: CopConfig,
    /// False when a `k_max` cap stopped the sweep before it was conclusive.
    pub complete: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReportOptions {
    pub k_max: Option<usize>,
    pub mode: PlacementMode,
    pub budget: Budget,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            k_max: None,
            mode: PlacementMode::Multisets,
            budget: Budget::default(),
        }
    }
}

/// `th_c(G)` and `th_c^×(G)` by sweeping `k` upward.
///
/// The sweep stops once `k + 1` exceeds the best sum and `2k` exceeds the
/// best product, since every `k < n` has `capt_k >= 1`. A `k` is skipped
/// without solving when `rad_k` alone already makes both costs strictly
/// worse than the incumbents. The `k = n` row (one cop per vertex, capture
/// time 0) is added without solving.
pub fn throttling_report(g: &Graph, opts: ReportOptions) -> Result<ThrottlingReport> {
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidParameter("throttling needs a non-empty graph".into()));
    }
    let cap = opts.k_max.unwrap_or(n).min(n);
    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    let mut best_sum = if cap == n { n as u64 } else { u64::MAX };
    let mut best_prod = best_sum;
    let mut complete = true;
    for k in 1..n {
        let could_improve = (k as u64) < best_sum || 2 * (k as u64) <= best_prod;
        if !could_improve {
            break;
        }
        if k > cap {
            complete = false;
            break;
        }
        let rad = k_radius_exact(g, k, opts.budget).map(|r| r.value).ok();
        match rad {
            Some(Distance::Unreachable) => {
                let witness = CopConfig::new((0..k).collect()).expect("k >= 1");
                rows.push(ThrottlingRow::new(k, GameValue::RobberWins, witness));
                continue;
            }
            Some(Distance::Finite(r)) => {
                let (k64, r64) = (k as u64, r as u64);
                if k64 + r64 > best_sum && k64 * (1 + r64) > best_prod {
                    skipped.push(k);
                    continue;
                }
            }
            None => {}
        }
        let table = solve(g, k, opts.budget).map_err(|e| open_range(e, k, best_sum, best_prod, n))?;
        let (capt, witness) = best_placement(&table, opts.mode).ok_or_else(|| {
            Error::InvalidParameter(format!("no placement of {k} distinct cops"))
        })?;
        let row = ThrottlingRow::new(k, capt, witness);
        if let GameValue::Finite(s) = row.sum {
            best_sum = best_sum.min(u64::from(s));
        }
        if let GameValue::Finite(p) = row.prod {
            best_prod = best_prod.min(u64::from(p));
        }
        rows.push(row);
    }
    if cap == n {
        let all = CopConfig::new((0..n).collect()).expect("n >= 1");
        rows.push(ThrottlingRow::new(n, GameValue::Finite(0), all));
    }
    if best_sum == u64::MAX {
        return Err(Error::InvalidParameter(format!(
            "no finite capture time for k <= {cap}; raise k_max"
        )));
    }

    let pick = |f: fn(&ThrottlingRow) -> GameValue, best: u64| {
        let ks: Vec<usize> = rows
            .iter()
            .filter(|r| f(r) == GameValue::Finite(best as u32))
            .map(|r| r.k)
            .collect();
        let witness = rows
            .iter()
            .find(|r| r.k == ks[0])
            .map(|r| r.witness.clone())
            .expect("minimum is attained");
        (ks, witness)
    };
    let (th_sum_ks, th_sum_witness) = pick(|r| r.sum, best_sum);
    let (th_prod_ks, th_prod_witness) = pick(|r| r.prod, best_prod);
    Ok(ThrottlingReport {
        n,
        rows,
        skipped,
        cop_number: cop_number(g, opts.budget)?,
        th_sum: best_sum,
        th_sum_ks,
        th_sum_witness,
        th_prod: best_prod,
        th_prod_ks,
        th_prod_witness,
        complete,
    })
}

fn open_range(e: Error, k: usize, best_sum: u64, best_prod: u64, n: usize) -> Error {
    match e {
        Error::BudgetExceeded { required, limit, .. } => {
            let hi = (best_sum.saturating_sub(1)).max(best_prod / 2).min(n as u64 - 1) as usize;
            Error::SweepBudgetExceeded {
                k_from: k,
                k_to: hi.max(k),
                required,
                limit,
            }
        }
        other => other,
    }
}

impl ThrottlingReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,capt_k,th_sum_k,th_prod_k,witness\n");
        for r in &self.rows {
            let _ = writeln!(out, "{},{},{},{},{}", r.k, r.capt, r.sum, r.prod, r.witness);
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// True when `th_c` is attained with one cop or with a cop on every vertex.
    pub fn sum_attained_at_extreme(&self) -> bool {
        self.th_sum_ks.iter().any(|&k| k == 1 || k == self.n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ThrottlingPoint {
    pub k: usize,
    pub p: u32,
    pub sum_minimum: bool,
    pub product_minimum: bool,
}

/// Every achievable `(k, p)` with `k <= bound`, flagged against `th_c` and
/// `th_c^×`. The default bound covers every sum- and product-minimum point.
pub fn throttling_points(
    g: &Graph,
    bound: Option<usize>,
    budget: Budget,
) -> Result<(ThrottlingReport, Vec<ThrottlingPoint>)> {
    let report = throttling_report(g, ReportOptions { budget, ..Default::default() })?;
    let n = g.n();
    let default_bound = (report.th_sum as usize).max(report.th_prod as usize / 2);
    let bound = bound.unwrap_or(default_bound).min(n);
    let mut pairs = BTreeSet::new();
    for k in 1..=bound {
        if k == n {
            pairs.insert((n, 0));
            // Larger capture times at k = n are never minimal; only solve
            // them when the table is cheap.
            if let Ok(table) = solve(g, k, budget) {
                for (_, v) in table.placement_values() {
                    if let GameValue::Finite(p) = v {
                        pairs.insert((k, p));
                    }
                }
            }
            continue;
        }
        let table = solve(g, k, budget)?;
        for (_, v) in table.placement_values() {
            if let GameValue::Finite(p) = v {
                pairs.insert((k, p));
            }
        }
    }
    if report.th_sum == n as u64 || report.th_prod == n as u64 {
        pairs.insert((n, 0));
    }
    let points = pairs
        .into_iter()
        .map(|(k, p)| ThrottlingPoint {
            k,
            p,
            sum_minimum: k as u64 + u64::from(p) == report.th_sum,
            product_minimum: k as u64 * (1 + u64::from(p)) == report.th_prod,
        })
        .collect();
    Ok((report, points))
}

/// The pairs `(x, q - x)` maximizing `x (1 + q - x)`.
pub fn i_set(q: u64) -> Vec<(usize, u32)> {
    if q % 2 == 1 {
        vec![((q as usize).div_ceil(2), (q as u32 - 1) / 2)]
    } else {
        vec![(q as usize / 2, q as u32 / 2), (q as usize / 2 + 1, (q as u32).saturating_sub(2) / 2)]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IqCheck {
    /// `th_c^× = floor((q + 1)^2 / 4)` with `q = th_c`.
    pub left: bool,
    /// Every sum-minimum point lies in `I(q)` and one of them is
    /// product-minimum.
    pub right: bool,
    pub holds: bool,
    pub q: u64,
    pub th_prod: u64,
    pub i_q: Vec<(usize, u32)>,
    pub sum_minimum: Vec<(usize, u32)>,
    pub product_minimum_overlap: Vec<(usize, u32)>,
}

/// Evaluates both sides of the equivalence between a tight product bound
/// and the shape of the sum-minimum throttling points.
pub fn check_iq_proposition(g: &Graph, budget: Budget) -> Result<IqCheck> {
    let (report, points) = throttling_points(g, None, budget)?;
    let q = report.th_sum;
    let i_q = i_set(q);
    let sum_min: Vec<(usize, u32)> = points.iter().filter(|p| p.sum_minimum).map(|p| (p.k, p.p)).collect();
    let overlap: Vec<(usize, u32)> = points
        .iter()
        .filter(|p| p.sum_minimum && p.product_minimum)
        .map(|p| (p.k, p.p))
        .collect();
    let left = report.th_prod == (q + 1) * (q + 1) / 4;
    let right = sum_min.iter().all(|pt| i_q.contains(pt)) && !overlap.is_empty();
    Ok(IqCheck {
        left,
        right,
        holds: left == right,
        q,
        th_prod: report.th_prod,
        i_q,
        sum_minimum: sum_min,
        product_minimum_overlap: overlap,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LowCase {
    /// The single-vertex graph.
    SingleVertex,
    /// Two isolated vertices, or a dominating vertex.
    TwoIsolatedOrDominatingVertex,
    /// `3K_1` or `K_1 ∪ K_2`.
    ThreeVertices,
    /// One cop at `z` captures within two rounds.
    CopWinCaptureTwo,
    /// Four vertices and no dominating vertex.
    FourVertices,
    /// Domination number two on at least four vertices.
    DominationTwo,
    /// Cop-win with capture time three.
    CopWinCaptureThree,
    /// Product throttling number at least five.
    None,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowClassification {
    pub value: Option<u64>,
    pub case: LowCase,
    /// The vertex `z` certifying the capture-two case.
    pub z: Option<usize>,
    /// Whether the two readings of the cornering condition (dominator in
    /// `N(z)` with `⊆`, or in `N[z]` with strict `⊂`) select the same `z`s.
    pub readings_agree: bool,
}

/// Predicts `th_c^×(G) ∈ {1, 2, 3, 4}` from structure alone; only the
/// capture-three case asks the game engine for `capt_1`.
pub fn classify_thprod_low(g: &Graph, budget: Budget) -> Result<LowClassification> {
    let n = g.n();
    let (gamma, _) = domination_number(g, budget)?;
    let (z_loose, z_strict) = capture_two_centers(g);
    let readings_agree = z_loose == z_strict;
    let isolated = (0..n).filter(|&v| g.degree(v) == 0).count();
    let out = |value, case, z| Ok(LowClassification { value, case, z, readings_agree });

    if n == 1 {
        return out(Some(1), LowCase::SingleVertex, None);
    }
    if (n == 2 && g.m() == 0) || gamma == 1 {
        return out(Some(2), LowCase::TwoIsolatedOrDominatingVertex, None);
    }
    if n == 3 && (isolated == 3 || (isolated == 1 && g.m() == 1)) {
        return out(Some(3), LowCase::ThreeVertices, None);
    }
    if gamma >= 2 {
        if let Some(&z) = z_loose.first() {
            return out(Some(3), LowCase::CopWinCaptureTwo, Some(z));
        }
    }
    if n == 4 && gamma >= 2 {
        return out(Some(4), LowCase::FourVertices, None);
    }
    if gamma == 2 && n >= 4 {
        return out(Some(4), LowCase::DominationTwo, None);
    }
    if g.is_connected() && capt_k(g, 1, budget)?.0 == GameValue::Finite(3) {
        return out(Some(4), LowCase::CopWinCaptureThree, None);
    }
    out(None, LowCase::None, None)
}

/// Vertices `z` of eccentricity at most two such that every vertex outside
/// `N[z]` is cornered by a vertex adjacent to `z`, under both readings.
fn capture_two_centers(g: &Graph) -> (Vec<usize>, Vec<usize>) {
    let mut loose = Vec::new();
    let mut strict = Vec::new();
    for z in g.vertices() {
        if eccentricity(g, z).ok() > Some(Distance::Finite(2)) {
            continue;
        }
        let closed_z = g.closed_neighborhood(z);
        let outside: Vec<usize> = g.vertices().filter(|w| closed_z.binary_search(w).is_err()).collect();
        let open_ok = outside.iter().all(|&w| {
            g.neighbors(z).iter().any(|&u| closed_nbhd_within(g, w, u, None))
        });
        let strict_ok = outside.iter().all(|&w| {
            closed_z.iter().any(|&u| {
                closed_nbhd_within(g, w, u, None) && g.degree(w) < g.degree(u)
            })
        });
        if open_ok {
            loose.push(z);
        }
        if strict_ok {
            strict.push(z);
        }
    }
    (loose, strict)
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
    fn report_examples() {
        let r = throttling_report(&path(9), ReportOptions::default()).unwrap();
        assert_eq!((r.th_sum, r.th_prod), (4, 5));
        assert_eq!(r.th_sum_ks, vec![2, 3]);
        assert_eq!(r.th_prod_ks, vec![1]);
        assert_eq!(r.cop_number, 1);
        let r = throttling_report(&complete(5), ReportOptions::default()).unwrap();
        assert_eq!((r.th_sum, r.th_prod), (2, 2));
        let r = throttling_report(&cycle(4), ReportOptions::default()).unwrap();
        assert_eq!((r.th_sum, r.th_prod, r.cop_number), (3, 4, 2));
        assert!(r.to_csv().starts_with("k,capt_k,th_sum_k,th_prod_k,witness\n1,inf,inf,inf,0\n"));
    }

    #[test]
    fn points_examples() {
        let (_, pts) = throttling_points(&path(9), None, Budget::default()).unwrap();
        let sum_min: Vec<_> = pts.iter().filter(|p| p.sum_minimum).map(|p| (p.k, p.p)).collect();
        assert_eq!(sum_min, vec![(2, 2), (3, 1)]);
        let prod_min: Vec<_> = pts.iter().filter(|p| p.product_minimum).map(|p| (p.k, p.p)).collect();
        assert_eq!(prod_min, vec![(1, 4)]);
        let (_, pts) = throttling_points(&Graph::empty(1), None, Budget::default()).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!((pts[0].k, pts[0].p), (1, 0));
    }

    #[test]
    fn iq_examples() {
        let c = check_iq_proposition(&path(2), Budget::default()).unwrap();
        assert!(c.left && c.right && c.holds);
        let c = check_iq_proposition(&path(9), Budget::default()).unwrap();
        assert!(!c.left && !c.right && c.holds);
        let c = check_iq_proposition(&Graph::empty(1), Budget::default()).unwrap();
        assert!(c.left && c.right);
    }

    #[test]
    fn classification_examples() {
        let b = Budget::default();
        let k1k2 = Graph::from_edges(3, [(1, 2)]).unwrap();
        let c = classify_thprod_low(&k1k2, b).unwrap();
        assert_eq!((c.value, c.case), (Some(3), LowCase::ThreeVertices));
        let c = classify_thprod_low(&cycle(4), b).unwrap();
        assert_eq!(c.value, Some(4));
        let star = Graph::from_edges(5, (1..5).map(|i| (0, i))).unwrap();
        assert_eq!(classify_thprod_low(&star, b).unwrap().value, Some(2));
        // P_4 has domination number two and a cop on vertex 1 wins in two.
        let c = classify_thprod_low(&path(4), b).unwrap();
        assert_eq!((c.value, c.case), (Some(3), LowCase::CopWinCaptureTwo));
        assert!(c.readings_agree);
    }
}
