//! Exact chromatic number by backtracking.

use crate::clique::clique_number;
use crate::WeightedGraph;

/// Largest order for which [`chromatic_number`] is attempted.
pub const MAX_EXACT_ORDER: usize = 10;

/// χ(G) for graphs with at most [`MAX_EXACT_ORDER`] vertices, `None` above.
pub fn chromatic_number(g: &WeightedGraph) -> Option<usize> {
    let n = g.n();
    if n > MAX_EXACT_ORDER {
        return None;
    }
    if n == 0 {
        return Some(0);
    }
    // Color high-degree vertices first.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    (clique_number(g).max(1)..=n).find(|&k| colorable(g, &order, k))
}

/// Whether `g` has a proper coloring with `k` colors.
pub fn colorable(g: &WeightedGraph, order: &[usize], k: usize) -> bool {
    fn assign(g: &WeightedGraph, order: &[usize], pos: usize, k: usize, colors: &mut [usize], used: usize) -> bool {
        let Some(&v) = order.get(pos) else {
            return true;
        };
        // A fresh color is interchangeable with any other unused one.
        for c in 0..k.min(used + 1) {
            if g.neighbors(v).ones().all(|u| colors[u] != c) {
                colors[v] = c;
                if assign(g, order, pos + 1, k, colors, used.max(c + 1)) {
                    return true;
                }
                colors[v] = usize::MAX;
            }
        }
        false
    }
    let mut colors = vec![usize::MAX; g.n()];
    assign(g, order, 0, k, &mut colors, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    #[test]
    fn known_values() {
        assert_eq!(chromatic_number(&families::complete(3)), Some(3));
        assert_eq!(chromatic_number(&families::complete_multipartite(&[2, 3])), Some(2));
        assert_eq!(chromatic_number(&families::cycle(5)), Some(3));
        assert_eq!(chromatic_number(&families::petersen()), Some(3));
        assert_eq!(chromatic_number(&WeightedGraph::empty(4)), Some(1));
        assert_eq!(chromatic_number(&WeightedGraph::empty(0)), Some(0));
        assert_eq!(chromatic_number(&families::cycle(11)), None);
    }

    #[test]
    fn grotzsch_style_gap() {
        // Mycielskian of C5 (Grötzsch graph): triangle-free with χ = 4.
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, (i + 1) % 5));
            edges.push((5 + i, (i + 4) % 5));
            edges.push((5 + i, 10));
        }
        let g = WeightedGraph::unweighted(11, &edges).unwrap();
        assert_eq!(clique_number(&g), 2);
        let order: Vec<usize> = (0..11).collect();
        assert!(!colorable(&g, &order, 3));
        assert!(colorable(&g, &order, 4));
    }
}
