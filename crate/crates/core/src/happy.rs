//! Happy-triple maxima for graphs with a bounded number of edges and bounded
//! maximum degree: the closed-form bound, its convex relaxation, the
//! dynamic-programming upper-bound table, the exhaustive small-case oracle,
//! and the extremal constructions attaining the bound.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{choose2, Graph};

/// Largest edge count the exhaustive oracle accepts; beyond this the subset
/// enumeration blows up.
pub const ORACLE_MAX_EDGES: u32 = 7;

/// `C(l,2) + C(k-l+1,2)`: for `l >= k/2`, the maximum number of happy
/// triples in a graph with `k` edges and maximum degree at most `l`.
pub fn f_bound(k: u64, l: u64) -> Result<u64> {
    if l < 1 || l > k {
        return Err(Error::Domain(format!(
            "f_bound needs 1 <= l <= k, got k = {k}, l = {l}"
        )));
    }
    Ok(choose2(l) + choose2(k - l + 1))
}

/// The real relaxation `f_k(x) = x(x-1)/2 + (k-x+1)(k-x)/2` of [`f_bound`].
///
/// `f_k` is convex with `f_k'(x) = 2x - (k+1)`, so it has a unique minimum at
/// `x = (k+1)/2` and is symmetric about it: `f_k(x) = f_k(k+1-x)`.
#[derive(Debug, Clone, Copy)]
pub struct ConvexBound {
    k: f64,
}

impl ConvexBound {
    pub fn new(k: u64) -> Result<Self> {
        if k < 1 {
            return Err(Error::Domain("edge count must be at least 1".into()));
        }
        Ok(Self { k: k as f64 })
    }

    pub fn eval(&self, x: f64) -> f64 {
        x * (x - 1.0) / 2.0 + (self.k - x + 1.0) * (self.k - x) / 2.0
    }

    /// The unique minimizer `(k+1)/2`.
    pub fn argmin(&self) -> f64 {
        (self.k + 1.0) / 2.0
    }
}

/// The minimizer `(k+1)/2` of the relaxed bound over the reals.
pub fn convex_argmin(k: u64) -> Result<f64> {
    ConvexBound::new(k).map(|f| f.argmin())
}

/// Upper bounds on happy-triple counts: `entry(k, l)` bounds the number of
/// happy triples in any graph with `k` edges and maximum degree at most `l`.
///
/// Built by [`build_dp_table`]; immutable afterwards.
#[derive(Debug, Clone)]
pub struct DpTable {
    k_max: usize,
    entries: Vec<u64>,
    witness_j: Vec<Option<u32>>,
}

impl DpTable {
    pub fn k_max(&self) -> usize {
        self.k_max
    }

    fn idx(&self, k: usize, l: usize) -> usize {
        assert!(
            k <= self.k_max && l <= self.k_max,
            "({k}, {l}) outside table range 0..={}",
            self.k_max
        );
        k * (self.k_max + 1) + l
    }

    pub fn entry(&self, k: usize, l: usize) -> u64 {
        self.entries[self.idx(k, l)]
    }

    /// The degree choice attaining `entry(k, l)` where the recurrence was
    /// used; `None` on preset and closed-form cells.
    pub fn witness_j(&self, k: usize, l: usize) -> Option<u32> {
        self.witness_j[self.idx(k, l)]
    }

    /// Returns a copy with one entry replaced. Fault injection for tests of
    /// [`verify_lemma`]; the result no longer satisfies the table contract.
    pub fn with_entry(mut self, k: usize, l: usize, value: u64) -> Self {
        let i = self.idx(k, l);
        self.entries[i] = value;
        self
    }
}

/// Fills the table for all `0 <= k, l <= k_max`, exact integer arithmetic
/// throughout:
///
/// * `entry(k, l) = 0` for `k < 2` or `l < 2` (too few edges, or a matching);
/// * preset `entry(k, 2) = k` for `k >= 4` (attained by cycles);
/// * `entry(k, l) = C(k,2)` for `l >= k` (the star on k edges);
/// * otherwise the maximum over the degree `j` of a maximum-degree vertex v:
///   `C(j,2)` triples with two edges at v, at most `k-j` with one, and at
///   most `entry(k-j, j)` avoiding v, since removing v leaves `k-j` edges of
///   maximum degree at most `j`.
///
/// The `l`-outer, `k`-inner fill order guarantees `entry(k-j, j)` is ready
/// before it is read.
pub fn build_dp_table(k_max: usize) -> Result<DpTable> {
    if k_max < 2 {
        return Err(Error::Domain("table needs k_max >= 2".into()));
    }
    let side = k_max + 1;
    let mut entries = vec![0u64; side * side];
    let mut witness_j = vec![None; side * side];
    for k in 4..=k_max {
        entries[k * side + 2] = k as u64;
    }
    for l in 2..=k_max {
        for k in 2..=k_max {
            let i = k * side + l;
            if entries[i] > 0 {
                continue; // preset
            }
            if k <= l {
                entries[i] = choose2(k as u64);
                continue;
            }
            let mut best = 0u64;
            let mut best_j = 1u32;
            for j in 1..=l {
                let happy = choose2(j as u64) + (k - j) as u64 + entries[(k - j) * side + j];
                if happy >= best {
                    best = happy;
                    best_j = j as u32;
                }
            }
            entries[i] = best;
            witness_j[i] = Some(best_j);
        }
    }
    Ok(DpTable {
        k_max,
        entries,
        witness_j,
    })
}

/// Every `(k, l)` with `ceil(k/2) <= l <= k <= k_max` where the table value
/// exceeds `f_bound(k, l)`. Exact integer comparison; empty on a sound table.
pub fn verify_lemma(table: &DpTable, k_max: usize) -> Result<Vec<(usize, usize)>> {
    if table.k_max() < k_max {
        return Err(Error::Domain(format!(
            "table covers k_max = {} < requested {k_max}",
            table.k_max()
        )));
    }
    let mut violations = Vec::new();
    for k in 1..=k_max {
        for l in k.div_ceil(2)..=k {
            if table.entry(k, l) > f_bound(k as u64, l as u64)? {
                violations.push((k, l));
            }
        }
    }
    Ok(violations)
}

/// Result of the exhaustive happy-triple search for `(k, l)` on at most
/// `n_cap` vertices.
#[derive(Debug, Clone)]
pub struct OracleResult {
    pub k: u32,
    pub l: u32,
    /// Vertex cap actually used.
    pub n_cap: usize,
    pub maximum: u64,
    /// A graph with exactly `k` edges and maximum degree at most `l`
    /// attaining `maximum`.
    pub witness: Graph,
    /// Number of k-edge subsets that survived the degree filter and were
    /// evaluated.
    pub graphs_examined: u64,
}

/// Default vertex cap: a k-edge graph touches at most 2k vertices, and 10
/// keeps the subset count manageable at k = 6 and 7.
pub fn default_oracle_cap(k: u32) -> usize {
    (2 * k as usize).clamp(3, 10)
}

/// Exhaustive maximum of `happy_triple_count` over graphs with exactly `k`
/// edges and maximum degree at most `l` on at most `n_cap` vertices.
///
/// Enumerates k-edge subsets of `K_{n_cap}` recursively, abandoning any
/// partial subset that already violates the degree cap (future edges only
/// raise degrees, so no maximum is lost). When a subset repeats the degree
/// profile and triangle count of an earlier one it is skipped for the
/// maximum update: the happy-triple count is a function of exactly those two
/// statistics, so the skip cannot change the result.
pub fn brute_force_max_happy(k: u32, l: u32, n_cap: usize) -> Result<OracleResult> {
    if k < 1 || k > ORACLE_MAX_EDGES {
        return Err(Error::Domain(format!(
            "exhaustive search supports 1 <= k <= {ORACLE_MAX_EDGES}, got {k}"
        )));
    }
    if l < 1 {
        return Err(Error::Domain("degree cap must be at least 1".into()));
    }
    if !(3..=16).contains(&n_cap) {
        return Err(Error::Domain(format!(
            "vertex cap must lie in 3..=16, got {n_cap}"
        )));
    }

    let all_edges: Vec<(u32, u32)> = (0..n_cap as u32)
        .flat_map(|u| (u + 1..n_cap as u32).map(move |v| (u, v)))
        .collect();
    if (k as usize) > all_edges.len() {
        return Err(Error::Domain(format!(
            "cannot place {k} edges on {n_cap} vertices"
        )));
    }

    let mut search = OracleSearch {
        k: k as usize,
        deg_cap: l.min(k) as u8,
        all_edges: &all_edges,
        deg: [0; 16],
        mask: [0; 16],
        chosen: Vec::with_capacity(k as usize),
        seen: HashSet::new(),
        examined: 0,
        best: None,
    };
    search.run(0);

    let (maximum, best_edges) = search.best.expect("a matching always passes the filter");
    let witness = Graph::new(n_cap, best_edges)?;
    debug_assert_eq!(witness.happy_triple_count(), maximum);
    Ok(OracleResult {
        k,
        l,
        n_cap,
        maximum,
        witness,
        graphs_examined: search.examined,
    })
}

struct OracleSearch<'a> {
    k: usize,
    deg_cap: u8,
    all_edges: &'a [(u32, u32)],
    deg: [u8; 16],
    mask: [u16; 16],
    chosen: Vec<(u32, u32)>,
    seen: HashSet<u64>,
    examined: u64,
    best: Option<(u64, Vec<(u32, u32)>)>,
}

impl OracleSearch<'_> {
    fn run(&mut self, start: usize) {
        if self.chosen.len() == self.k {
            self.evaluate();
            return;
        }
        let remaining = self.k - self.chosen.len();
        // enough edges must be left to complete the subset
        for i in start..=self.all_edges.len() - remaining {
            let (u, v) = self.all_edges[i];
            let (u, v) = (u as usize, v as usize);
            if self.deg[u] >= self.deg_cap || self.deg[v] >= self.deg_cap {
                continue;
            }
            self.deg[u] += 1;
            self.deg[v] += 1;
            self.mask[u] |= 1 << v;
            self.mask[v] |= 1 << u;
            self.chosen.push((u as u32, v as u32));
            self.run(i + 1);
            self.chosen.pop();
            self.mask[u] &= !(1 << v);
            self.mask[v] &= !(1 << u);
            self.deg[u] -= 1;
            self.deg[v] -= 1;
        }
    }

    fn evaluate(&mut self) {
        self.examined += 1;
        let mut wedges = 0u64;
        let mut degree_counts = [0u8; 8];
        for &d in &self.deg {
            wedges += choose2(d as u64);
            degree_counts[d as usize] += 1;
        }
        let mut tri3 = 0u64; // each triangle counted once per edge
        for &(u, v) in &self.chosen {
            tri3 += (self.mask[u as usize] & self.mask[v as usize]).count_ones() as u64;
        }
        let triangles = tri3 / 3;
        let happy = wedges - 2 * triangles;

        // degree profile (counts per degree 1..=7, each < 16) plus the
        // triangle count identify the happy count exactly
        let mut key = triangles << 28;
        for d in 1..8 {
            key |= (degree_counts[d] as u64) << (4 * (d - 1));
        }
        if !self.seen.insert(key) {
            return;
        }
        if self.best.as_ref().is_none_or(|(b, _)| happy > *b) {
            self.best = Some((happy, self.chosen.clone()));
        }
    }
}

/// The extremal graphs attaining `f_bound(k, l)` for `k/2 <= l <= k`:
/// two stars `K_{1,l-1}` and `K_{1,k-l}` joined by an edge between their
/// centers when `2l > k`, and the complete bipartite `K_{2,l}` when
/// `2l = k` (which needs `l >= 2`; `K_{2,1}` has maximum degree 2).
pub fn extremal_construction(k: u32, l: u32) -> Result<Graph> {
    if k < 1 || l < 1 || l > k || 2 * l < k {
        return Err(Error::Domain(format!(
            "construction needs k/2 <= l <= k, got k = {k}, l = {l}"
        )));
    }
    if 2 * l == k {
        if l < 2 {
            return Err(Error::Domain(
                "no 2-edge graph of maximum degree 1 attains the bound".into(),
            ));
        }
        // centers 0 and 1, opposite part 2..l+2
        let n = l as usize + 2;
        let edges = (2..l + 2).flat_map(|w| [(0, w), (1, w)]);
        Graph::new(n, edges)
    } else {
        // center 0 with l-1 leaves, center 1 with k-l leaves, centers joined
        let n = k as usize + 1;
        let edges = std::iter::once((0, 1))
            .chain((2..l + 1).map(|w| (0, w)))
            .chain((l + 1..k + 1).map(|w| (1, w)));
        Graph::new(n, edges)
    }
}
