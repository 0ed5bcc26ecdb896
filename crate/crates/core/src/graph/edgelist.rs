use super::WeightedGraph;
use crate::{Error, Result};

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::EdgeList { line, message: message.into() }
}

/// Parses the weighted edge-list format: a header line `n m`, then `m` lines
/// `u v w`. Blank lines and lines starting with `#` are skipped.
pub fn parse_weighted_edgelist(text: &str) -> Result<WeightedGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or_else(|| err(1, "missing header \"n m\""))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(err(hline, "header must be \"n m\""));
    }
    let n: usize = fields[0].parse().map_err(|_| err(hline, format!("bad vertex count {:?}", fields[0])))?;
    let m: usize = fields[1].parse().map_err(|_| err(hline, format!("bad edge count {:?}", fields[1])))?;

    let mut edges: Vec<(usize, usize, f64)> = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::new();
    for (line, content) in lines.by_ref() {
        if edges.len() == m {
            return Err(err(line, format!("more than the declared {m} edges")));
        }
        let f: Vec<&str> = content.split_whitespace().collect();
        if f.len() != 3 {
            return Err(err(line, "expected \"u v w\""));
        }
        let u: usize = f[0].parse().map_err(|_| err(line, format!("bad vertex {:?}", f[0])))?;
        let v: usize = f[1].parse().map_err(|_| err(line, format!("bad vertex {:?}", f[1])))?;
        let w: f64 = f[2].parse().map_err(|_| err(line, format!("bad weight {:?}", f[2])))?;
        if u >= n || v >= n {
            return Err(err(line, format!("vertex out of range for n = {n}")));
        }
        if u == v {
            return Err(err(line, format!("self-loop at vertex {u}")));
        }
        if !w.is_finite() {
            return Err(err(line, "weight is not finite"));
        }
        if w == 0.0 {
            return Err(err(line, "zero weight (structural ambiguity)"));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(err(line, format!("duplicate edge ({u},{v})")));
        }
        edges.push((u, v, w));
    }
    if edges.len() != m {
        return Err(err(text.lines().count().max(1), format!("expected {m} edges, found {}", edges.len())));
    }
    WeightedGraph::new(n, edges)
}

/// Serializes to the edge-list format with round-trip exact weights.
pub fn to_weighted_edgelist(g: &WeightedGraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v, w) in g.edges() {
        out.push_str(&format!("{u} {v} {w:?}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const EXAMPLE_ONE: &str = "5 8\n0 1 1\n0 2 1.4142135624\n0 3 1.2247448714\n0 4 1.2247448714\n1 3 0.7071067812\n1 4 0.7071067812\n2 3 1\n2 4 1";

    #[test]
    fn single_edge() {
        let g = parse_weighted_edgelist("2 1\n0 1 1.0").unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(g.weight(0, 1), 1.0);
    }

    #[test]
    #[allow(clippy::approx_constant)]
    fn example_fixture() {
        let g = parse_weighted_edgelist(EXAMPLE_ONE).unwrap();
        assert_eq!((g.n(), g.m()), (5, 8));
        assert_eq!(g.weight(2, 0), 1.4142135624);
        let p = crate::graph::complete_multipartite_partition(&g).unwrap().unwrap();
        assert_eq!(p.parts, vec![vec![0], vec![1, 2], vec![3, 4]]);
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_weighted_edgelist("# K2\n\n2 1\n# edge\n0 1 -2.5\n").unwrap();
        assert_eq!(g.weight(0, 1), -2.5);
    }

    #[test]
    fn errors() {
        let zero = parse_weighted_edgelist("3 1\n0 1 0.0").unwrap_err();
        assert!(zero.to_string().contains("zero weight"), "{zero}");
        assert!(matches!(
            parse_weighted_edgelist("3 2\n0 1 1\n1 0 2"),
            Err(Error::EdgeList { line: 3, .. })
        ));
        assert!(parse_weighted_edgelist("3 1\n1 1 1").is_err());
        assert!(parse_weighted_edgelist("3 2\n0 1 1").is_err());
        assert!(parse_weighted_edgelist("3 1\n0 1 1\n1 2 1").is_err());
        assert!(parse_weighted_edgelist("3 1\n0 5 1").is_err());
        assert!(parse_weighted_edgelist("3 1\n0 1 x").is_err());
        assert!(parse_weighted_edgelist("").is_err());
    }

    proptest! {
        #[test]
        fn round_trip(n in 1usize..12, seed in any::<u64>()) {
            let g = crate::random::random_gnp(n, 0.5, seed).unwrap();
            let g = crate::random::randomize_weights(&g, 0.1, 2.0, true, seed).unwrap();
            let text = to_weighted_edgelist(&g);
            let back = parse_weighted_edgelist(&text).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(to_weighted_edgelist(&back), text);
        }
    }
}
