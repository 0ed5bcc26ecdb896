//! Named graphs used in examples, tests and the CLI.

use super::WeightedGraph;

pub fn complete(n: usize) -> WeightedGraph {
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    WeightedGraph::unweighted(n, &edges).unwrap()
}

pub fn cycle(n: usize) -> WeightedGraph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    WeightedGraph::unweighted(n, &edges).unwrap()
}

pub fn path(n: usize) -> WeightedGraph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    WeightedGraph::unweighted(n, &edges).unwrap()
}

/// `K_{1,k}` with center 0.
pub fn star(k: usize) -> WeightedGraph {
    let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    WeightedGraph::unweighted(k + 1, &edges).unwrap()
}

/// Complete multipartite graph with consecutive parts of the given sizes.
pub fn complete_multipartite(sizes: &[usize]) -> WeightedGraph {
    let mut part = Vec::new();
    for (i, &s) in sizes.iter().enumerate() {
        part.extend(std::iter::repeat_n(i, s));
    }
    let n = part.len();
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| part[u] != part[v])
        .collect();
    WeightedGraph::unweighted(n, &edges).unwrap()
}

/// Outer 5-cycle 0..5, inner pentagram 5..10, spokes `(i, i+5)`.
pub fn petersen() -> WeightedGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    WeightedGraph::unweighted(10, &edges).unwrap()
}

/// Triangle `{0,1,2}` with pendant vertex 3 attached to 0.
pub fn paw() -> WeightedGraph {
    WeightedGraph::unweighted(4, &[(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap()
}

/// Weighted complete 3-partite graph with parts `{0}`, `{1,2}`, `{3,4}` whose
/// spectral radius `2√3` meets the weighted localized bound. Weights are
/// computed from square roots, not rounded decimals.
pub fn example_one() -> WeightedGraph {
    let s2 = 2f64.sqrt();
    let s6 = 6f64.sqrt();
    WeightedGraph::new(
        5,
        [
            (0, 1, 1.0),
            (0, 2, s2),
            (0, 3, s6 / 2.0),
            (0, 4, s6 / 2.0),
            (1, 3, s2 / 2.0),
            (1, 4, s2 / 2.0),
            (2, 3, 1.0),
            (2, 4, 1.0),
        ],
    )
    .unwrap()
}

/// The vector `3^{1/4}·(1, √3/3, √6/3, √2/2, √2/2)` witnessing equality for
/// [`example_one`].
pub fn example_one_witness() -> Vec<f64> {
    let q = 3f64.powf(0.25);
    [1.0, 3f64.sqrt() / 3.0, 6f64.sqrt() / 3.0, 2f64.sqrt() / 2.0, 2f64.sqrt() / 2.0]
        .iter()
        .map(|x| q * x)
        .collect()
}
