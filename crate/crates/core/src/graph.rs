//! Exact graph primitives: triangle, induced-H and happy-triple counting,
//! rainbow-triangle detection, and the two triangle-count lower bounds.
//!
//! All counters return exact integers; the bounds return exact rationals.
//! Types are immutable after construction and all operations are pure, so
//! everything here is safe to share across threads.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_rational::Rational64;

use crate::error::{Error, Result};

pub(crate) fn choose2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

/// A simple undirected graph on the vertex set `0..n`.
///
/// Edges are kept sorted with `u < v`; adjacency lists are sorted and are
/// exactly the symmetric closure of the edge list. Isolated vertices are
/// representable: `n` may exceed the number of touched vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(u32, u32)>,
    adj: Vec<Vec<u32>>,
}

impl Graph {
    /// Builds a graph from an edge list, normalizing each pair to `u < v`.
    /// Loops, parallel edges and endpoints `>= n` are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut norm: Vec<(u32, u32)> = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::Domain(format!("loop at vertex {a}")));
            }
            if a as usize >= n || b as usize >= n {
                return Err(Error::Domain(format!(
                    "edge ({a}, {b}) out of range for n = {n}"
                )));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        if let Some(w) = norm.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Domain(format!(
                "parallel edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &norm {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Self {
            n,
            edges: norm,
            adj,
        })
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n as u32).flat_map(|u| (u + 1..n as u32).map(move |v| (u, v)));
        Self::new(n, edges).expect("complete graph is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges sorted lexicographically, each with `u < v`.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).is_ok()
    }

    /// Exact number of triangles, by edge iteration with sorted-neighbor
    /// intersection. Each triangle `{a < b < c}` is counted once, at its
    /// edge `(a, b)` with third vertex `c > b`.
    pub fn triangle_count(&self) -> u64 {
        self.edges
            .iter()
            .map(|&(u, v)| count_common_above(self.neighbors(u), self.neighbors(v), v))
            .sum()
    }

    /// Number of vertex triples inducing exactly one edge.
    ///
    /// For an edge `uv` the third vertex must be adjacent to neither
    /// endpoint; `N(u) ∪ N(v)` already contains both `u` and `v`, so each
    /// edge contributes `n - deg(u) - deg(v) + |N(u) ∩ N(v)|` triples.
    pub fn induced_h_count(&self) -> u64 {
        self.edges
            .iter()
            .map(|&(u, v)| {
                let common = count_common(self.neighbors(u), self.neighbors(v));
                // deg(u) + deg(v) - common = |N(u) ∪ N(v)| <= n, so this
                // order of operations cannot underflow
                self.n as u64 + common - self.degree(u) as u64 - self.degree(v) as u64
            })
            .sum()
    }

    /// Number of vertex triples inducing at least two edges.
    ///
    /// A triple with exactly two edges has one wedge center while a triangle
    /// has three, so the count equals `wedges - 2 * triangles`.
    pub fn happy_triple_count(&self) -> u64 {
        let wedges: u64 = self.adj.iter().map(|l| choose2(l.len() as u64)).sum();
        wedges - 2 * self.triangle_count()
    }

    /// Serializes as a first line `n m` followed by one `u v` line per edge,
    /// LF endings.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Parses the `to_text` format.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty graph text".into()))?;
        let (n, m) = parse_header(header)?;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("expected {m} edge lines")))?;
            let mut it = line.split_whitespace();
            let u = parse_field(it.next(), "edge endpoint")?;
            let v = parse_field(it.next(), "edge endpoint")?;
            if it.next().is_some() {
                return Err(Error::Parse(format!("trailing data on edge line {line:?}")));
            }
            edges.push((u, v));
        }
        Self::new(n, edges)
    }
}

fn parse_header(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let n = parse_field(it.next(), "vertex count")?;
    let m = parse_field(it.next(), "edge count")?;
    if it.next().is_some() {
        return Err(Error::Parse(format!("trailing data in header {line:?}")));
    }
    Ok((n as usize, m as usize))
}

fn parse_field(field: Option<&str>, what: &str) -> Result<u32> {
    field
        .ok_or_else(|| Error::Parse(format!("missing {what}")))?
        .parse()
        .map_err(|e| Error::Parse(format!("bad {what}: {e}")))
}

/// Count of common elements of two sorted slices.
fn count_common(a: &[u32], b: &[u32]) -> u64 {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// Count of common elements strictly greater than `lo`.
fn count_common_above(a: &[u32], b: &[u32], lo: u32) -> u64 {
    let i = a.partition_point(|&x| x <= lo);
    let j = b.partition_point(|&x| x <= lo);
    count_common(&a[i..], &b[j..])
}

/// Vertex count, edge count and induced-H count feeding
/// [`refined_lower_bound`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TriangleBoundInputs {
    pub n: u64,
    pub m: u64,
    pub h: u64,
}

impl TriangleBoundInputs {
    /// Validates `m <= C(n,2)` and `h <= m * (n - 2)` (each one-edge triple
    /// is an edge plus a third vertex adjacent to neither endpoint).
    pub fn new(n: u64, m: u64, h: u64) -> Result<Self> {
        if m > choose2(n) {
            return Err(Error::Domain(format!(
                "m = {m} exceeds C({n}, 2) = {}",
                choose2(n)
            )));
        }
        let h_max = m * n.saturating_sub(2);
        if h > h_max {
            return Err(Error::Domain(format!("h = {h} exceeds m(n-2) = {h_max}")));
        }
        Ok(Self { n, m, h })
    }

    pub fn from_graph(g: &Graph) -> Self {
        Self {
            n: g.n() as u64,
            m: g.edge_count() as u64,
            h: g.induced_h_count(),
        }
    }
}

/// The lower bound `(4m/3n)(m - n^2/4)` on the triangle count of an n-vertex,
/// m-edge simple graph. Exact rational; may be negative.
pub fn goodman_lower_bound(n: u64, m: u64) -> Result<Rational64> {
    if n == 0 {
        return Err(Error::Domain("vertex count must be positive".into()));
    }
    let (n, m) = (n as i64, m as i64);
    let factor = Rational64::new(4 * m, 3 * n);
    let gap = Rational64::from_integer(m) - Rational64::new(n * n, 4);
    Ok(factor * gap)
}

/// The refined lower bound `h/3 + (4m/3n)(m - n^2/4)`; never below the plain
/// bound since `h >= 0`.
pub fn refined_lower_bound(inp: TriangleBoundInputs) -> Result<Rational64> {
    Ok(Rational64::new(inp.h as i64, 3) + goodman_lower_bound(inp.n, inp.m)?)
}

/// A [`Graph`] together with one color id per edge. Colorings need not be
/// proper.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoredGraph {
    graph: Graph,
    colors: Vec<u32>, // parallel to graph.edges()
}

impl EdgeColoredGraph {
    /// Pairs a graph with colors listed in the order of `graph.edges()`.
    pub fn new(graph: Graph, colors: Vec<u32>) -> Result<Self> {
        if colors.len() != graph.edge_count() {
            return Err(Error::Domain(format!(
                "{} colors for {} edges",
                colors.len(),
                graph.edge_count()
            )));
        }
        Ok(Self { graph, colors })
    }

    /// Builds from `(u, v, color)` triples.
    pub fn from_colored_edges(
        n: usize,
        edges: impl IntoIterator<Item = (u32, u32, u32)>,
    ) -> Result<Self> {
        let mut triples: Vec<(u32, u32, u32)> = edges
            .into_iter()
            .map(|(u, v, c)| (u.min(v), u.max(v), c))
            .collect();
        triples.sort_unstable();
        let graph = Graph::new(n, triples.iter().map(|&(u, v, _)| (u, v)))?;
        let colors = triples.iter().map(|&(_, _, c)| c).collect();
        Ok(Self { graph, colors })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Colors in the order of `graph().edges()`.
    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color_of(&self, u: u32, v: u32) -> Option<u32> {
        let key = (u.min(v), u.max(v));
        self.graph
            .edges
            .binary_search(&key)
            .ok()
            .map(|i| self.colors[i])
    }

    /// The edge set of each color, keyed by color id. The classes partition
    /// the edge set.
    pub fn color_classes(&self) -> BTreeMap<u32, Vec<(u32, u32)>> {
        let mut classes: BTreeMap<u32, Vec<(u32, u32)>> = BTreeMap::new();
        for (&edge, &c) in self.graph.edges.iter().zip(&self.colors) {
            classes.entry(c).or_default().push(edge);
        }
        classes
    }

    /// The first triangle, in sorted edge order, whose three edges carry
    /// three distinct colors. Exhaustive and deterministic.
    pub fn find_rainbow_triangle(&self) -> Option<(u32, u32, u32)> {
        for &(u, v) in self.graph.edges() {
            let cuv = self.color_of(u, v).expect("edge has a color");
            let nu = self.graph.neighbors(u);
            let nv = self.graph.neighbors(v);
            let (mut i, mut j) = (
                nu.partition_point(|&x| x <= v),
                nv.partition_point(|&x| x <= v),
            );
            while i < nu.len() && j < nv.len() {
                match nu[i].cmp(&nv[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        let w = nu[i];
                        let cuw = self.color_of(u, w).expect("edge has a color");
                        let cvw = self.color_of(v, w).expect("edge has a color");
                        if cuv != cuw && cuv != cvw && cuw != cvw {
                            return Some((u, v, w));
                        }
                        i += 1;
                        j += 1;
                    }
                }
            }
        }
        None
    }

    /// Serializes as `n m` followed by one `u v c` line per edge.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.graph.n, self.graph.edges.len());
        for (&(u, v), &c) in self.graph.edges.iter().zip(&self.colors) {
            let _ = writeln!(out, "{u} {v} {c}");
        }
        out
    }

    /// Parses the `to_text` format.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty graph text".into()))?;
        let (n, m) = parse_header(header)?;
        let mut triples = Vec::with_capacity(m);
        for _ in 0..m {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("expected {m} edge lines")))?;
            let mut it = line.split_whitespace();
            let u = parse_field(it.next(), "edge endpoint")?;
            let v = parse_field(it.next(), "edge endpoint")?;
            let c = parse_field(it.next(), "edge color")?;
            if it.next().is_some() {
                return Err(Error::Parse(format!("trailing data on edge line {line:?}")));
            }
            triples.push((u, v, c));
        }
        Self::from_colored_edges(n, triples)
    }
}
