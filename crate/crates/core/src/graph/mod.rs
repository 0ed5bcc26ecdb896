//! Weighted simple graphs, interchange formats and structural queries.

mod edgelist;
pub mod families;
mod graph6;

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub use edgelist::{parse_weighted_edgelist, to_weighted_edgelist};
pub use graph6::{parse_graph6, to_graph6};

/// Simple undirected graph with finite nonzero edge weights.
///
/// Stored as a dense symmetric weight matrix together with neighbor bitsets.
/// Values are immutable once built.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedGraph {
    n: usize,
    weights: Vec<f64>,
    neighbors: Vec<FixedBitSet>,
    edge_count: usize,
}

impl WeightedGraph {
    /// Builds a graph from `(u, v, w)` triples. Either orientation is accepted;
    /// loops, duplicates, out-of-range endpoints and zero or non-finite weights
    /// are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, f64)>,
    {
        let mut weights = vec![0.0; n * n];
        let mut neighbors = vec![FixedBitSet::with_capacity(n); n];
        let mut edge_count = 0;
        for (u, v, w) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u},{v}) out of range for n = {n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            if !w.is_finite() {
                return Err(Error::InvalidGraph(format!("edge ({u},{v}) has non-finite weight")));
            }
            if w == 0.0 {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u},{v}) has zero weight (structural ambiguity)"
                )));
            }
            if neighbors[u].contains(v) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({u},{v})")));
            }
            weights[u * n + v] = w;
            weights[v * n + u] = w;
            neighbors[u].insert(v);
            neighbors[v].insert(u);
            edge_count += 1;
        }
        Ok(Self { n, weights, neighbors, edge_count })
    }

    /// Unit-weight graph from an edge list.
    pub fn unweighted(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::new(n, edges.iter().map(|&(u, v)| (u, v, 1.0)))
    }

    pub fn empty(n: usize) -> Self {
        Self::new(n, std::iter::empty()).expect("edgeless graph is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edge_count
    }

    /// Weight of `uv`, or 0 when the pair is not an edge.
    #[inline]
    pub fn weight(&self, u: usize, v: usize) -> f64 {
        self.weights[u * self.n + v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &FixedBitSet {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].count_ones(..)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    /// Row-major dense adjacency matrix.
    pub fn adjacency(&self) -> &[f64] {
        &self.weights
    }

    /// Edges `(u, v, w)` with `u < v`, sorted by `(u, v)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors[u]
                .ones()
                .filter(move |&v| v > u)
                .map(move |v| (u, v, self.weight(u, v)))
        })
    }

    pub fn is_unit_weighted(&self) -> bool {
        self.edges().all(|(_, _, w)| w == 1.0)
    }

    /// `Some(+1)` or `Some(-1)` when every weight has that sign, `None` for
    /// mixed signs. Edgeless graphs report `Some(+1)`.
    pub fn common_sign(&self) -> Option<i8> {
        let mut pos = false;
        let mut neg = false;
        for (_, _, w) in self.edges() {
            if w > 0.0 {
                pos = true;
            } else {
                neg = true;
            }
        }
        match (pos, neg) {
            (_, false) => Some(1),
            (false, true) => Some(-1),
            (true, true) => None,
        }
    }

    /// Squared Frobenius norm of the adjacency matrix, `2 Σ_e w(e)²`.
    pub fn frobenius_sq(&self) -> f64 {
        2.0 * crate::numeric::ksum(self.edges().map(|(_, _, w)| w * w))
    }

    /// Same structure with every weight replaced by `f(w)`.
    pub fn map_weights(&self, mut f: impl FnMut(usize, usize, f64) -> f64) -> Result<Self> {
        let edges: Vec<_> = self.edges().map(|(u, v, w)| (u, v, f(u, v, w))).collect();
        Self::new(self.n, edges)
    }

    /// Underlying unit-weight graph.
    pub fn structure(&self) -> Self {
        self.map_weights(|_, _, _| 1.0).expect("unit weights are valid")
    }

    /// Induced subgraph on `vertices`, relabeled `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut edges = Vec::new();
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    edges.push((a, b, self.weight(u, v)));
                }
            }
        }
        Self::new(vertices.len(), edges).expect("induced subgraph of a valid graph")
    }

    /// Copy with the extra edge `uv` of weight `w`.
    pub fn with_edge(&self, u: usize, v: usize, w: f64) -> Result<Self> {
        let mut edges: Vec<_> = self.edges().collect();
        edges.push((u, v, w));
        Self::new(self.n, edges)
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson { n: self.n, edges: self.edges().collect() }
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let parsed: GraphJson = serde_json::from_str(text)?;
        Self::new(parsed.n, parsed.edges)
    }
}

/// JSON form `{"n": int, "edges": [[u, v, w], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<(usize, usize, f64)>,
}

/// Disjoint nonempty vertex sets; each part sorted, parts ordered by least element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    pub parts: Vec<Vec<usize>>,
}

impl Partition {
    /// Normalizes part order and checks disjointness and nonemptiness.
    pub fn new(mut parts: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for part in &mut parts {
            if part.is_empty() {
                return Err(Error::InvalidGraph("partition has an empty part".into()));
            }
            part.sort_unstable();
            for &v in part.iter() {
                if !seen.insert(v) {
                    return Err(Error::InvalidGraph(format!("vertex {v} appears in two parts")));
                }
            }
        }
        parts.sort_by_key(|p| p[0]);
        Ok(Self { parts })
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sorted union of all parts.
    pub fn support(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.parts.iter().flatten().copied().collect();
        all.sort_unstable();
        all
    }

    pub fn part_sizes(&self) -> Vec<usize> {
        self.parts.iter().map(Vec::len).collect()
    }
}

/// Connected components (weights ignored), ordered by least vertex.
pub fn connected_components(g: &WeightedGraph) -> Vec<Vec<usize>> {
    components_by(g.n(), |u, v| g.has_edge(u, v))
}

fn components_by(n: usize, adjacent: impl Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for (v, seen_v) in seen.iter_mut().enumerate() {
                if !*seen_v && u != v && adjacent(u, v) {
                    *seen_v = true;
                    comp.push(v);
                    queue.push_back(v);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Result of removing degree-0 vertices.
#[derive(Debug, Clone)]
pub struct Stripped {
    pub graph: WeightedGraph,
    /// `kept[new] = old`.
    pub kept: Vec<usize>,
    pub removed: Vec<usize>,
}

pub fn strip_isolated(g: &WeightedGraph) -> Stripped {
    let (kept, removed): (Vec<usize>, Vec<usize>) = (0..g.n()).partition(|&v| g.degree(v) > 0);
    Stripped { graph: g.induced(&kept), kept, removed }
}

/// Parts of the complete multipartite structure of `g`, if it has one.
///
/// Two vertices share a part iff they are non-adjacent, so the candidate parts
/// are the components of the complement; the graph is complete multipartite
/// iff each of those is independent in `g`.
pub fn complete_multipartite_partition(g: &WeightedGraph) -> Result<Option<Partition>> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
        return Err(Error::Precondition(format!(
            "vertex {v} is isolated; strip isolated vertices first"
        )));
    }
    Ok(multipartite_parts(g))
}

/// Same as [`complete_multipartite_partition`] without the isolated-vertex check.
/// An isolated vertex of a graph with edges makes the answer `None`.
pub(crate) fn multipartite_parts(g: &WeightedGraph) -> Option<Partition> {
    let parts = components_by(g.n(), |u, v| !g.has_edge(u, v));
    for part in &parts {
        for (i, &u) in part.iter().enumerate() {
            if part[i + 1..].iter().any(|&v| g.has_edge(u, v)) {
                return None;
            }
        }
    }
    Some(Partition::new(parts).expect("complement components are disjoint"))
}
