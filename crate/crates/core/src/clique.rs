//! Exact maximum-clique search and the per-vertex / per-edge clique profile.
//!
//! The search is branch-and-bound with a greedy-coloring bound: candidates are
//! colored first-fit in a fixed vertex order (descending degree, ties by
//! index), and a branch is cut as soon as the current clique size plus the
//! color class of the next vertex cannot beat the incumbent.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::WeightedGraph;

struct Search<'a> {
    g: &'a WeightedGraph,
    /// Position of each vertex in the coloring order.
    rank: Vec<usize>,
    best: usize,
    /// Stop as soon as `best` reaches this size.
    goal: usize,
}

impl Search<'_> {
    fn new<'a>(g: &'a WeightedGraph, within: &FixedBitSet, floor: usize, goal: usize) -> Search<'a> {
        let mut order: Vec<usize> = within.ones().collect();
        let deg = |v: usize| g.neighbors(v).intersection(within).count();
        order.sort_by_key(|&v| (std::cmp::Reverse(deg(v)), v));
        let mut rank = vec![usize::MAX; g.n()];
        for (i, &v) in order.iter().enumerate() {
            rank[v] = i;
        }
        Search { g, rank, best: floor, goal }
    }

    /// Candidates grouped into color classes; returns vertices and the
    /// (1-based) color of each, in nondecreasing color order.
    fn color_sort(&self, p: &FixedBitSet) -> (Vec<usize>, Vec<usize>) {
        let mut verts: Vec<usize> = p.ones().collect();
        verts.sort_by_key(|&v| self.rank[v]);
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for v in verts {
            let nbrs = self.g.neighbors(v);
            match classes.iter_mut().find(|c| c.iter().all(|&u| !nbrs.contains(u))) {
                Some(class) => class.push(v),
                None => classes.push(vec![v]),
            }
        }
        let mut out = Vec::new();
        let mut colors = Vec::new();
        for (k, class) in classes.into_iter().enumerate() {
            colors.extend(std::iter::repeat_n(k + 1, class.len()));
            out.extend(class);
        }
        (out, colors)
    }

    /// Returns true once the goal size is reached.
    fn expand(&mut self, size: usize, mut p: FixedBitSet) -> bool {
        let (verts, colors) = self.color_sort(&p);
        for idx in (0..verts.len()).rev() {
            if size + colors[idx] <= self.best {
                return false;
            }
            let v = verts[idx];
            let mut next = p.clone();
            next.intersect_with(self.g.neighbors(v));
            if next.is_clear() {
                if size + 1 > self.best {
                    self.best = size + 1;
                    if self.best >= self.goal {
                        return true;
                    }
                }
            } else if self.expand(size + 1, next) {
                return true;
            }
            p.set(v, false);
        }
        false
    }
}

fn full_set(n: usize) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(n);
    s.insert_range(..);
    s
}

/// Clique number of the subgraph induced by `within`.
pub fn clique_number_within(g: &WeightedGraph, within: &FixedBitSet) -> usize {
    if within.is_clear() {
        return 0;
    }
    let mut search = Search::new(g, within, 0, usize::MAX);
    search.expand(0, within.clone());
    search.best
}

/// Whether `G[within]` contains a clique on `k` vertices.
pub fn has_clique_of_size(g: &WeightedGraph, within: &FixedBitSet, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if within.count_ones(..) < k {
        return false;
    }
    let mut search = Search::new(g, within, k - 1, k);
    search.expand(0, within.clone())
}

pub fn clique_number(g: &WeightedGraph) -> usize {
    clique_number_within(g, &full_set(g.n()))
}

/// A maximum clique of the subgraph induced by `restricted_to` (all vertices
/// when `None`). Among maximum cliques the lexicographically smallest sorted
/// vertex sequence is returned.
pub fn max_clique(g: &WeightedGraph, restricted_to: Option<&FixedBitSet>) -> Vec<usize> {
    let mut cand = match restricted_to {
        Some(s) => {
            let mut s = s.clone();
            s.grow(g.n());
            s
        }
        None => full_set(g.n()),
    };
    let k = clique_number_within(g, &cand);
    let mut clique = Vec::with_capacity(k);
    let vertices: Vec<usize> = cand.ones().collect();
    for v in vertices {
        if clique.len() == k {
            break;
        }
        if !cand.contains(v) {
            continue;
        }
        cand.set(v, false);
        let mut rest = cand.clone();
        rest.intersect_with(g.neighbors(v));
        if has_clique_of_size(g, &rest, k - clique.len() - 1) {
            clique.push(v);
            cand = rest;
        }
    }
    clique
}

/// ω(G), cl(v) for every vertex and cl(e) for every edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueProfile {
    pub omega: usize,
    pub cl_v: Vec<usize>,
    /// `(u, v, cl(uv))` sorted by `(u, v)`, `u < v`.
    pub cl_e: Vec<(usize, usize, usize)>,
}

impl CliqueProfile {
    pub fn cl_edge(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.cl_e
            .binary_search_by(|&(a, b, _)| (a, b).cmp(&key))
            .ok()
            .map(|i| self.cl_e[i].2)
    }
}

/// Memoizes clique numbers of neighborhood sets for graphs with at most 64
/// vertices, where a set fits in one `u64` key.
struct NeighborhoodMemo {
    table: Option<HashMap<u64, usize>>,
}

impl NeighborhoodMemo {
    fn new(n: usize) -> Self {
        Self { table: (n <= 64).then(HashMap::new) }
    }

    fn omega(&mut self, g: &WeightedGraph, set: &FixedBitSet) -> usize {
        let Some(table) = self.table.as_mut() else {
            return clique_number_within(g, set);
        };
        let key = set.ones().fold(0u64, |k, v| k | 1 << v);
        *table.entry(key).or_insert_with(|| clique_number_within(g, set))
    }
}

/// `cl(v) = 1 + ω(G[N(v)])` and `cl(uv) = 2 + ω(G[N(u) ∩ N(v)])`.
pub fn clique_profile(g: &WeightedGraph) -> CliqueProfile {
    let mut memo = NeighborhoodMemo::new(g.n());
    let cl_v: Vec<usize> = (0..g.n()).map(|v| 1 + memo.omega(g, g.neighbors(v))).collect();
    let cl_e = g
        .edges()
        .map(|(u, v, _)| {
            let common = g.neighbors(u).intersection(g.neighbors(v)).collect::<FixedBitSet>();
            let mut common = common;
            common.grow(g.n());
            (u, v, 2 + memo.omega(g, &common))
        })
        .collect();
    let omega = cl_v.iter().copied().max().unwrap_or(0);
    CliqueProfile { omega, cl_v, cl_e }
}

/// All maximal cliques (Bron–Kerbosch with Tomita pivoting). Each clique is
/// sorted; the list is sorted lexicographically.
pub fn maximal_cliques(g: &WeightedGraph) -> Vec<Vec<usize>> {
    fn recurse(
        g: &WeightedGraph,
        r: &mut Vec<usize>,
        mut p: FixedBitSet,
        mut x: FixedBitSet,
        out: &mut Vec<Vec<usize>>,
    ) {
        if p.is_clear() {
            if x.is_clear() {
                let mut c = r.clone();
                c.sort_unstable();
                out.push(c);
            }
            return;
        }
        let pivot = p
            .union(&x)
            .max_by_key(|&u| (g.neighbors(u).intersection(&p).count(), std::cmp::Reverse(u)))
            .expect("P is nonempty");
        let branch: Vec<usize> = p.difference(g.neighbors(pivot)).collect();
        for v in branch {
            let nbrs = g.neighbors(v);
            let mut p2 = p.clone();
            p2.intersect_with(nbrs);
            let mut x2 = x.clone();
            x2.intersect_with(nbrs);
            r.push(v);
            recurse(g, r, p2, x2, out);
            r.pop();
            p.set(v, false);
            x.insert(v);
        }
    }
    let mut out = Vec::new();
    if g.n() > 0 {
        recurse(g, &mut Vec::new(), full_set(g.n()), FixedBitSet::with_capacity(g.n()), &mut out);
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    fn is_clique(g: &WeightedGraph, s: &[usize]) -> bool {
        s.iter().enumerate().all(|(i, &u)| s[i + 1..].iter().all(|&v| g.has_edge(u, v)))
    }

    /// Exhaustive-subset oracle: lexicographically first maximum clique.
    fn brute_max_clique(g: &WeightedGraph) -> Vec<usize> {
        let n = g.n();
        let mut best: Vec<usize> = Vec::new();
        for mask in 0u32..(1 << n) {
            let s: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if is_clique(g, &s) && (s.len() > best.len() || (s.len() == best.len() && s < best)) {
                best = s;
            }
        }
        best
    }

    #[test]
    fn k4_minus_edge() {
        let g = WeightedGraph::unweighted(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(max_clique(&g, None), vec![0, 1, 2]);
        assert_eq!(brute_max_clique(&g), vec![0, 1, 2]);
    }

    #[test]
    fn triangle_free() {
        assert_eq!(max_clique(&families::cycle(5), None), vec![0, 1]);
        let pet = families::petersen();
        assert_eq!(clique_number(&pet), 2);
        assert_eq!(max_clique(&pet, None), brute_max_clique(&pet));
    }

    #[test]
    fn empty_inputs() {
        assert!(max_clique(&WeightedGraph::empty(0), None).is_empty());
        assert_eq!(max_clique(&WeightedGraph::empty(3), None), vec![0]);
        let none = FixedBitSet::with_capacity(3);
        assert!(max_clique(&families::complete(3), Some(&none)).is_empty());
    }

    #[test]
    fn restricted_search() {
        let g = families::complete(5);
        let mut s = FixedBitSet::with_capacity(5);
        s.insert(1);
        s.insert(3);
        s.insert(4);
        assert_eq!(max_clique(&g, Some(&s)), vec![1, 3, 4]);
    }

    #[test]
    fn paw_profile() {
        let p = clique_profile(&families::paw());
        assert_eq!(p.omega, 3);
        assert_eq!(p.cl_v, vec![3, 3, 3, 2]);
        assert_eq!(p.cl_e, vec![(0, 1, 3), (0, 2, 3), (0, 3, 2), (1, 2, 3)]);
        assert_eq!(p.cl_edge(3, 0), Some(2));
        assert_eq!(p.cl_edge(1, 3), None);
    }

    #[test]
    fn example_one_profile() {
        let p = clique_profile(&families::example_one());
        assert_eq!(p.omega, 3);
        assert_eq!(p.cl_e.len(), 8);
        assert!(p.cl_e.iter().all(|&(_, _, c)| c == 3));
    }

    #[test]
    fn edgeless_profile() {
        let p = clique_profile(&WeightedGraph::empty(2));
        assert_eq!(p, CliqueProfile { omega: 1, cl_v: vec![1, 1], cl_e: vec![] });
    }

    #[test]
    fn profile_json_schema() {
        let p = clique_profile(&families::path(3));
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(text, r#"{"omega":2,"cl_v":[2,2,2],"cl_e":[[0,1,2],[1,2,2]]}"#);
    }

    #[test]
    fn maximal_cliques_small() {
        assert_eq!(maximal_cliques(&families::paw()), vec![vec![0, 1, 2], vec![0, 3]]);
        assert_eq!(maximal_cliques(&families::cycle(5)).len(), 5);
        assert_eq!(maximal_cliques(&WeightedGraph::empty(2)), vec![vec![0], vec![1]]);
    }

    #[test]
    fn random_graphs_agree_with_brute_force() {
        for seed in 0..60 {
            let n = 6 + (seed as usize % 8);
            let g = crate::random::random_gnp(n, 0.55, seed).unwrap();
            assert_eq!(max_clique(&g, None), brute_max_clique(&g), "seed {seed}");
        }
    }
}
