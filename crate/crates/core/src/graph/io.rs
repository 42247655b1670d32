//! Graph serialization: JSON, edge-list text, graph6 and DOT.

use super::Graph;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

/// Wire form of a graph: `{"name": ..., "n": ..., "edges": [[u, v], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(j: GraphJson) -> Result<Self> {
        let g = Graph::from_edges(j.n, j.edges.iter().map(|e| (e[0], e[1])))?;
        Ok(match j.name {
            Some(name) => g.with_name(name),
            None => g,
        })
    }
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> Self {
        GraphJson {
            name: g.name().map(str::to_owned),
            n: g.n(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }
}

pub fn from_json(text: &str) -> Result<Graph> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn to_json(g: &Graph) -> String {
    serde_json::to_string(g).expect("graph serialization is infallible")
}

/// Parses `n m` followed by `m` lines `u v`. Blank lines and `#` comments
/// are ignored.
pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty edge list".into()))?;
    let [n, m] = parse_pair(header)?;
    let mut edges = Vec::with_capacity(m);
    for line in lines.by_ref().take(m) {
        let [u, v] = parse_pair(line)?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse(format!(
            "header announces {m} edges, found {}",
            edges.len()
        )));
    }
    if let Some(extra) = lines.next() {
        return Err(Error::Parse(format!("unexpected trailing line {extra:?}")));
    }
    Graph::from_edges(n, edges)
}

fn parse_pair(line: &str) -> Result<[usize; 2]> {
    let nums: Vec<&str> = line.split_whitespace().collect();
    if nums.len() != 2 {
        return Err(Error::Parse(format!("expected two integers, got {line:?}")));
    }
    let parse = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| Error::Parse(format!("not a vertex id: {s:?}")))
    };
    Ok([parse(nums[0])?, parse(nums[1])?])
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Decodes one graph6 line (an optional `>>graph6<<` header is accepted).
pub fn from_graph6(line: &str) -> Result<Graph> {
    let line = line.trim();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse("empty graph6 string".into()));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Error::Parse(format!("invalid graph6 byte {b}")));
        }
    }
    let (n, body) = if bytes[0] != 126 {
        (usize::from(bytes[0] - 63), &bytes[1..])
    } else if bytes.len() >= 4 && bytes[1] != 126 {
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63));
        (n, &bytes[4..])
    } else {
        return Err(Error::Parse("graph6 orders above 258047 are not supported".into()));
    };
    let pairs = n * n.saturating_sub(1) / 2;
    if body.len() != pairs.div_ceil(6) {
        return Err(Error::Parse(format!(
            "graph6 body has {} bytes, expected {}",
            body.len(),
            pairs.div_ceil(6)
        )));
    }
    let bit = |i: usize| (body[i / 6] - 63) >> (5 - i % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut idx = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(idx) {
                edges.push((u, v));
            }
            idx += 1;
        }
    }
    Graph::from_edges(n, edges)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

pub fn to_dot(g: &Graph) -> String {
    let name = g.name().unwrap_or("G").replace('"', "'");
    let mut out = format!("graph \"{name}\" {{\n");
    for v in g.vertices() {
        let _ = writeln!(out, "  {v};");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

/// Reads JSON, edge-list text or a single graph6 line, detected by shape.
pub fn parse_any(text: &str) -> Result<Graph> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        return from_json(trimmed);
    }
    let first = trimmed.lines().next().unwrap_or("");
    if first
        .split_whitespace()
        .all(|tok| tok.chars().all(|c| c.is_ascii_digit()))
        && !first.trim().is_empty()
    {
        return from_edge_list(trimmed);
    }
    from_graph6(first)
}

/// Reads every non-empty line of a graph6 corpus.
pub fn read_graph6_corpus(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(from_graph6)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        let mut e: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        e.extend((0..5).map(|i| (i + 5, (i + 2) % 5 + 5)));
        e.extend((0..5).map(|i| (i, i + 5)));
        Graph::from_edges(10, e).unwrap()
    }

    #[test]
    fn json_round_trip() {
        let g = petersen().with_name("petersen");
        let text = to_json(&g);
        assert_eq!(from_json(&text).unwrap(), g);
        assert!(from_json("{\"n\": 2, \"edges\": [[0, 2]]}").is_err());
        assert!(from_json("{\"n\": 2, \"edges\": [[1, 1]]}").is_err());
        assert!(from_json("not json").is_err());
    }

    #[test]
    fn graph6_known_strings() {
        // Reference encodings: K_4 is "C~", the path 0-1-2 is "Bg".
        let k4 = Graph::from_edges(4, (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j)))).unwrap();
        assert_eq!(to_graph6(&k4), "C~");
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(to_graph6(&p3), "Bg");
        assert_eq!(from_graph6("Bg").unwrap(), p3);
        assert_eq!(to_graph6(&petersen()), "IheA@GUAo");
        assert_eq!(from_graph6(">>graph6<<IheA@GUAo").unwrap(), petersen());
        assert!(from_graph6("C").is_err());
    }

    #[test]
    fn graph6_large_order() {
        let g = Graph::from_edges(70, (1..70).map(|i| (i - 1, i))).unwrap();
        assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn edge_list_and_detection() {
        let g = petersen();
        assert_eq!(from_edge_list(&to_edge_list(&g)).unwrap(), g);
        assert_eq!(parse_any(&to_edge_list(&g)).unwrap(), g);
        assert_eq!(parse_any(&to_json(&g)).unwrap(), g);
        assert_eq!(parse_any("IheA@GUAo\n").unwrap(), g);
        assert!(from_edge_list("3 2\n0 1\n").is_err());
        assert!(to_dot(&g).contains("0 -- 1;"));
    }
}
