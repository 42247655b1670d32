//! Deterministic and seeded graph generators, and the leaf and star
//! attachment operators.
//!
//! Numbering conventions:
//! - `path`, `cycle`: `0..n` in order; `star`: center 0; `spider`: body 0,
//!   leg `i` is `1 + i·len ..`, nearest the body first.
//! - `grid(rows, cols)`: `(r, c)` is `r·cols + c`.
//! - `petersen`: outer cycle 0..4, inner `5 + i ~ 5 + (i + 2) % 5`,
//!   spokes `i ~ i + 5`. `heawood`: 14-cycle plus `i ~ i + 5` for even `i`.
//! - `m_prime(ℓ)`: C_4 on 0..3; path `j` (j < 3) on `4 + jℓ ..`, its first
//!   vertex adjacent to cycle vertex `j`. `m_ell(ℓ)` adds the leaf of `v`
//!   as `n + v`.
//! - `h_family`: spider body and legs as in `spider`, then core copy `i`
//!   at `1 + L·p + i·|core|`, its vertex 0 joined to the end of leg `i`.

use crate::error::{Error, Result};
use crate::graph::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// A family name with its parameters, written `name` or
/// `name:key=value,key=value`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: String,
    #[serde(default)]
    pub params: BTreeMap<String, String>,
}

pub const FAMILY_NAMES: &[&str] = &[
    "path", "cycle", "complete", "complete_bipartite", "empty", "star", "spider", "grid", "petersen",
    "heawood", "m_ell", "m_prime", "h_family", "random_tree", "random_chordal", "random_connected",
    "attach_leaves", "attach_star",
];

impl FamilySpec {
    pub fn new(family: impl Into<String>) -> Self {
        FamilySpec { family: family.into(), params: BTreeMap::new() }
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    /// Parses `name`, `name:key=value,...`, the positional form
    /// `name(a, b)` (for example `path(5)` or `spider(3, 2)`), or the short
    /// names `p5`, `c4`, `k3`.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if let Some(spec) = Self::parse_short(text) {
            return Ok(spec);
        }
        if let Some((name, args)) = text.strip_suffix(')').and_then(|t| t.split_once('(')) {
            let keys: &[&str] = match name.trim() {
                "path" | "cycle" | "complete" | "empty" => &["n"],
                "star" => &["s"],
                "m_ell" | "m_prime" => &["l"],
                "spider" => &["legs", "len"],
                "grid" => &["rows", "cols"],
                "complete_bipartite" => &["a", "b"],
                "random_tree" | "random_chordal" => &["n", "seed"],
                "random_connected" => &["n", "p", "seed"],
                _ => &[],
            };
            let values: Vec<&str> = args.split(',').map(str::trim).filter(|a| !a.is_empty()).collect();
            if values.len() > keys.len() {
                return Err(Error::InvalidParameter(format!("too many arguments in `{text}`")));
            }
            let mut spec = FamilySpec::new(name.trim());
            for (k, v) in keys.iter().zip(values) {
                spec.params.insert(k.to_string(), v.to_string());
            }
            return Ok(spec);
        }
        let (name, rest) = text.split_once(':').unwrap_or((text, ""));
        let mut spec = FamilySpec::new(name.trim());
        for kv in rest.split(',').filter(|s| !s.trim().is_empty()) {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| Error::InvalidParameter(format!("expected key=value, got `{kv}`")))?;
            spec.params.insert(k.trim().to_string(), v.trim().to_string());
        }
        Ok(spec)
    }

    fn parse_short(text: &str) -> Option<Self> {
        let mut chars = text.chars();
        let family = match chars.next()? {
            'p' | 'P' => "path",
            'c' | 'C' => "cycle",
            'k' | 'K' => "complete",
            _ => return None,
        };
        let n: usize = chars.as_str().parse().ok()?;
        Some(FamilySpec::new(family).with("n", n))
    }

    fn raw(&self, key: &str) -> Option<&str> {
        self.params.get(key).map(String::as_str)
    }

    pub fn get(&self, key: &str) -> Result<Option<u64>> {
        self.raw(key)
            .map(|v| {
                v.parse::<u64>()
                    .map_err(|_| Error::InvalidParameter(format!("{}: `{key}` must be a non-negative integer", self.family)))
            })
            .transpose()
    }

    pub fn usize(&self, key: &str) -> Result<usize> {
        self.get(key)?
            .map(|v| v as usize)
            .ok_or_else(|| Error::InvalidParameter(format!("{}: missing parameter `{key}`", self.family)))
    }

    fn usize_or(&self, key: &str, default: usize) -> Result<usize> {
        Ok(self.get(key)?.map_or(default, |v| v as usize))
    }

    fn seed(&self) -> Result<u64> {
        Ok(self.get("seed")?.unwrap_or(0))
    }

    /// A nested family for `key`, written with `;` in place of `,` and `/`
    /// in place of `:` (for example `core=grid/rows=2;cols=3`).
    fn nested(&self, key: &str) -> Result<FamilySpec> {
        let raw = self
            .raw(key)
            .ok_or_else(|| Error::InvalidParameter(format!("{}: missing parameter `{key}`", self.family)))?;
        FamilySpec::parse(&raw.replacen('/', ":", 1).replace(';', ","))
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family)?;
        for (i, (k, v)) in self.params.iter().enumerate() {
            write!(f, "{}{k}={v}", if i == 0 { ':' } else { ',' })?;
        }
        Ok(())
    }
}

/// Builds the named family. Parameter keys: `n` (path, cycle, complete,
/// empty, random_*), `a`/`b` (complete_bipartite), `s` (star, attach_star),
/// `legs`/`len` (spider, h_family), `rows`/`cols` (grid), `l` (m_ell,
/// m_prime), `core` and `base` (nested specs), `p` (random_connected edge
/// percentage), `seed`, `anchors` (attach_star, `star-g` pairs joined by
/// `+`, star vertex 0 the center).
pub fn generate_named(spec: &FamilySpec) -> Result<Graph> {
    let g = match spec.family.as_str() {
        "path" => path(spec.usize("n")?),
        "cycle" => cycle(spec.usize("n")?)?,
        "complete" => complete(spec.usize("n")?),
        "complete_bipartite" => complete_bipartite(spec.usize("a")?, spec.usize("b")?),
        "empty" => Graph::empty(spec.usize("n")?),
        "star" => star(spec.usize("s")?),
        "spider" => spider(spec.usize("legs")?, spec.usize("len")?),
        "grid" => grid(spec.usize("rows")?, spec.usize("cols")?)?,
        "petersen" => petersen(),
        "heawood" => heawood(),
        "m_ell" => m_ell(spec.usize("l")?)?,
        "m_prime" => m_prime(spec.usize("l")?)?,
        "h_family" => {
            let core = generate_named(&spec.nested("core")?)?;
            h_family(spec.usize("legs")?, spec.usize("len")?, &core)?
        }
        "random_tree" => random_tree(spec.usize("n")?, spec.seed()?)?,
        "random_chordal" => random_chordal(spec.usize("n")?, spec.seed()?)?,
        "random_connected" => random_connected(spec.usize("n")?, spec.usize_or("p", 20)? as f64 / 100.0, spec.seed()?)?,
        "attach_leaves" => attach_leaves(&generate_named(&spec.nested("base")?)?),
        "attach_star" => {
            let base = generate_named(&spec.nested("base")?)?;
            let n = base.n();
            let anchors = spec
                .raw("anchors")
                .unwrap_or("0-0")
                .split('+')
                .map(|pair| {
                    let (a, b) = pair
                        .split_once('-')
                        .ok_or_else(|| Error::InvalidParameter(format!("anchor `{pair}` is not star-g")))?;
                    let parse = |x: &str| {
                        x.trim().parse::<usize>().map_err(|_| Error::InvalidParameter(format!("bad anchor `{pair}`")))
                    };
                    Ok((n + parse(a)?, parse(b)?))
                })
                .collect::<Result<Vec<_>>>()?;
            attach_star(&base, spec.usize("s")?, &anchors)?
        }
        other => {
            return Err(Error::InvalidParameter(format!(
                "unknown family `{other}` (known: {})",
                FAMILY_NAMES.join(", ")
            )))
        }
    };
    Ok(g.with_name(spec.to_string()))
}

fn build(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    Graph::from_edges(n, edges).expect("generator edges are in range")
}

pub fn path(n: usize) -> Graph {
    build(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    Ok(build(n, (0..n).map(|i| (i, (i + 1) % n))))
}

pub fn complete(n: usize) -> Graph {
    build(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

/// `K_{a,b}`: parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    build(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
}

/// `K_{1,s}` with center 0.
pub fn star(s: usize) -> Graph {
    build(s + 1, (1..=s).map(|i| (0, i)))
}

/// `legs` paths of `len` vertices each, joined to the body 0.
pub fn spider(legs: usize, len: usize) -> Graph {
    let n = 1 + legs * len;
    let mut edges = Vec::new();
    for i in 0..legs {
        let base = 1 + i * len;
        for j in 0..len {
            edges.push((if j == 0 { 0 } else { base + j - 1 }, base + j));
        }
    }
    build(n, edges)
}

pub fn grid(rows: usize, cols: usize) -> Result<Graph> {
    if rows == 0 || cols == 0 {
        return Err(Error::InvalidParameter("grid needs positive dimensions".into()));
    }
    let id = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    Ok(build(rows * cols, edges))
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    build(10, edges)
}

pub fn heawood() -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..14).map(|i| (i, (i + 1) % 14)).collect();
    edges.extend((0..14).step_by(2).map(|i| (i, (i + 5) % 14)));
    build(14, edges)
}

/// `C_4` with three pendant paths of `l` vertices on cycle vertices 0, 1, 2.
pub fn m_prime(l: usize) -> Result<Graph> {
    if l == 0 {
        return Err(Error::InvalidParameter("m_prime needs l >= 1".into()));
    }
    let mut edges: Vec<(usize, usize)> = (0..4).map(|i| (i, (i + 1) % 4)).collect();
    for j in 0..3 {
        let base = 4 + j * l;
        edges.push((j, base));
        edges.extend((1..l).map(|i| (base + i - 1, base + i)));
    }
    Ok(build(4 + 3 * l, edges))
}

/// `m_prime(l)` with a leaf on every vertex; order `6l + 8`.
pub fn m_ell(l: usize) -> Result<Graph> {
    Ok(attach_leaves(&m_prime(l)?))
}

/// The three-cop placement on `m_ell(l)`: on each path, the vertex at
/// distance `⌈(l+3)/2⌉` from the leaf hanging off the path's far end.
pub fn m_ell_three_cop_placement(l: usize) -> Result<Vec<usize>> {
    let reach = (l + 3).div_ceil(2);
    if l < 3 {
        return Err(Error::InvalidParameter(format!("the three-cop placement needs l >= 3, got {l}")));
    }
    Ok((0..3).map(|j| 4 + j * l + (l - reach)).collect())
}

/// Spider with `legs` legs of `len` vertices, each leg end joined to
/// vertex 0 of its own copy of `core`.
pub fn h_family(legs: usize, len: usize, core: &Graph) -> Result<Graph> {
    if legs < 3 || len == 0 {
        return Err(Error::InvalidParameter(format!("h_family needs legs >= 3 and len >= 1, got ({legs}, {len})")));
    }
    if core.n() == 0 || !core.is_connected() {
        return Err(Error::Disconnected);
    }
    let body = spider(legs, len);
    let mut edges: Vec<(usize, usize)> = body.edges().collect();
    let off = body.n();
    let c = core.n();
    for i in 0..legs {
        let start = off + i * c;
        edges.extend(core.edges().map(|(u, v)| (start + u, start + v)));
        edges.push((i * len + len, start));
    }
    Ok(build(off + legs * c, edges))
}

/// Adds a leaf `n + v` to every vertex `v`.
pub fn attach_leaves(g: &Graph) -> Graph {
    let n = g.n();
    build(2 * n, g.edges().chain((0..n).map(|v| (v, n + v))))
}

/// Disjoint union of `g` and `K_{1,s}` (center `n`, leaves `n+1..=n+s`)
/// plus the `anchors`, each joining a star vertex to a vertex of `g`.
pub fn attach_star(g: &Graph, s: usize, anchors: &[(usize, usize)]) -> Result<Graph> {
    let n = g.n();
    if s == 0 || anchors.is_empty() {
        return Err(Error::InvalidParameter("attach_star needs s >= 1 and at least one anchor".into()));
    }
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.extend((1..=s).map(|i| (n, n + i)));
    for &(a, b) in anchors {
        let (star_v, g_v) = if a >= n { (a, b) } else { (b, a) };
        if g_v >= n || star_v < n || star_v > n + s {
            return Err(Error::InvalidParameter(format!(
                "anchor ({a}, {b}) must join a star vertex to a vertex of the base graph"
            )));
        }
        edges.push((star_v, g_v));
    }
    Graph::from_edges(n + s + 1, edges)
}

/// Uniform random recursive tree: vertex `i` joins a uniform earlier vertex.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("random_tree needs n >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(build(n, (1..n).map(|i| (rng.gen_range(0..i), i))))
}

/// Vertex `i` joins a random non-empty subset of a random maximal clique
/// of the graph so far, so the reverse insertion order is a perfect
/// elimination order.
pub fn random_chordal(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("random_chordal needs n >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cliques: Vec<Vec<usize>> = vec![vec![0]];
    let mut edges = Vec::new();
    for i in 1..n {
        let ci = rng.gen_range(0..cliques.len());
        let mut members = cliques[ci].clone();
        members.shuffle(&mut rng);
        let size = rng.gen_range(1..=members.len());
        let mut chosen = members[..size].to_vec();
        chosen.sort_unstable();
        edges.extend(chosen.iter().map(|&u| (u, i)));
        chosen.push(i);
        if size == cliques[ci].len() {
            cliques[ci] = chosen;
        } else {
            cliques.push(chosen);
        }
    }
    Ok(build(n, edges))
}

/// Random recursive tree plus each remaining pair with probability `p`.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n == 0 || !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter("random_connected needs n >= 1 and p in [0, 1]".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Ok(build(n, edges))
}
