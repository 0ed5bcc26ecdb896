//! Seeded random graphs and weights.
//!
//! Both generators draw from ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//! `seed_from_u64(seed)`. Edge inclusion uses stream 0 and weights stream 1,
//! so reweighting never perturbs structure. Draws are consumed one per vertex
//! pair (or per edge) in lexicographic `(u, v)` order, `u < v`. A uniform
//! variate is `(next_u64() >> 11) · 2⁻⁵³`. Sign flips draw a second uniform
//! from stream 2 and negate when it is below ½. ChaCha8 output is fully determined by
//! the algorithm and seed, so corpora are portable across platforms and releases.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Error, Result, WeightedGraph};

const STRUCTURE_STREAM: u64 = 0;
const WEIGHT_STREAM: u64 = 1;
const SIGN_STREAM: u64 = 2;

fn stream(seed: u64, id: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(id);
    rng
}

fn unit(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Erdős–Rényi `G(n, p)` with unit weights.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Result<WeightedGraph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Precondition(format!("edge probability {p} outside [0, 1]")));
    }
    if n == 0 {
        return Err(Error::Precondition("random graphs need n >= 1".into()));
    }
    let mut rng = stream(seed, STRUCTURE_STREAM);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if unit(&mut rng) < p {
                edges.push((u, v));
            }
        }
    }
    WeightedGraph::unweighted(n, &edges)
}

/// Replaces every weight with a uniform draw from `[low, high]`, negated with
/// probability ½ when `signed`.
pub fn randomize_weights(
    g: &WeightedGraph,
    low: f64,
    high: f64,
    signed: bool,
    seed: u64,
) -> Result<WeightedGraph> {
    if !(low > 0.0 && low <= high && high.is_finite()) {
        return Err(Error::Precondition(format!("weight range [{low}, {high}] must satisfy 0 < low <= high")));
    }
    let mut mags = stream(seed, WEIGHT_STREAM);
    let mut signs = stream(seed, SIGN_STREAM);
    g.map_weights(|_, _, _| {
        let mag = (low + (high - low) * unit(&mut mags)).clamp(low, high);
        if signed && unit(&mut signs) < 0.5 {
            -mag
        } else {
            mag
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    #[test]
    fn extreme_probabilities() {
        assert_eq!(random_gnp(5, 0.0, 1).unwrap().m(), 0);
        assert_eq!(random_gnp(5, 1.0, 1).unwrap(), families::complete(5));
        assert!(random_gnp(5, 1.5, 1).is_err());
    }

    #[test]
    fn degenerate_weight_range() {
        let g = randomize_weights(&families::complete(2), 1.0, 1.0, false, 99).unwrap();
        assert_eq!(g.weight(0, 1), 1.0);
        assert!(randomize_weights(&g, 0.0, 1.0, false, 1).is_err());
        assert!(randomize_weights(&g, 2.0, 1.0, false, 1).is_err());
    }

    #[test]
    fn signed_weights_share_magnitudes() {
        let k3 = families::complete(3);
        let plain = randomize_weights(&k3, 0.1, 2.0, false, 7).unwrap();
        let signed = randomize_weights(&k3, 0.1, 2.0, true, 7).unwrap();
        for ((_, _, a), (_, _, b)) in plain.edges().zip(signed.edges()) {
            assert_eq!(a, b.abs());
            assert!((0.1..=2.0).contains(&a));
        }
    }

    #[test]
    fn deterministic() {
        assert_eq!(random_gnp(12, 0.3, 5).unwrap(), random_gnp(12, 0.3, 5).unwrap());
        assert_ne!(random_gnp(12, 0.5, 5).unwrap(), random_gnp(12, 0.5, 6).unwrap());
    }
}
