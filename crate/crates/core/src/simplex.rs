//! Quadratic forms `xᵀ M x` over the standard simplex.
//!
//! Three coefficient schemes are supported, all supported on the edges of `G`:
//! the weighted adjacency matrix itself (the Motzkin–Straus Lagrangian), the
//! vertex scheme `M_ij = ½(cl(i)/(cl(i)−1) + cl(j)/(cl(j)−1))`, and the edge
//! scheme `M_ij = cl(ij)/(cl(ij)−1)`. Maximization runs replicator dynamics
//! from several starts.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1};
use serde::{Deserialize, Serialize};

use crate::clique::{clique_number, clique_profile, max_clique};
use crate::graph::multipartite_parts;
use crate::numeric::{ksum, SUPPORT_EPS};
use crate::{Error, Result, WeightedGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WeightScheme {
    Plain,
    Vertex,
    Edge,
}

impl fmt::Display for WeightScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WeightScheme::Plain => "plain",
            WeightScheme::Vertex => "vertex",
            WeightScheme::Edge => "edge",
        })
    }
}

impl FromStr for WeightScheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "plain" => Ok(WeightScheme::Plain),
            "vertex" => Ok(WeightScheme::Vertex),
            "edge" => Ok(WeightScheme::Edge),
            other => Err(Error::Precondition(format!("unknown weight scheme {other:?}"))),
        }
    }
}

/// A point of the standard simplex.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SimplexPoint(Vec<f64>);

impl SimplexPoint {
    pub fn new(x: Vec<f64>) -> Result<Self> {
        if x.iter().any(|&v| v < 0.0 || !v.is_finite()) {
            return Err(Error::Precondition("simplex point has a negative or non-finite entry".into()));
        }
        let total = ksum(x.iter().copied());
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::Precondition(format!("simplex point sums to {total}, not 1")));
        }
        Ok(Self(x))
    }

    /// Uniform distribution on `support` within `n` coordinates.
    pub fn uniform_on(n: usize, support: &[usize]) -> Self {
        let mut x = vec![0.0; n];
        for &v in support {
            x[v] = 1.0 / support.len() as f64;
        }
        Self(x)
    }

    pub fn vertex(n: usize, i: usize) -> Self {
        Self::uniform_on(n, &[i])
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }

    /// Indices with entries above `1e-10`.
    pub fn support(&self) -> Vec<usize> {
        support_of(&self.0)
    }
}

fn support_of(x: &[f64]) -> Vec<usize> {
    (0..x.len()).filter(|&i| x[i] > SUPPORT_EPS).collect()
}

/// Symmetric coefficient matrix `M` with `form(x) = xᵀ M x`, stored as
/// per-vertex adjacency lists (the diagonal is zero).
#[derive(Debug, Clone)]
pub struct FormMatrix {
    rows: Vec<Vec<(usize, f64)>>,
}

impl FormMatrix {
    pub fn new(g: &WeightedGraph, scheme: WeightScheme) -> Result<Self> {
        let mut rows = vec![Vec::new(); g.n()];
        match scheme {
            WeightScheme::Plain => {
                for (u, v, w) in g.edges() {
                    rows[u].push((v, w));
                    rows[v].push((u, w));
                }
            }
            WeightScheme::Vertex => {
                if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
                    return Err(Error::Precondition(format!(
                        "vertex scheme undefined: vertex {v} is isolated (cl = 1)"
                    )));
                }
                let profile = clique_profile(g);
                let ratio = |v: usize| {
                    let c = profile.cl_v[v] as f64;
                    c / (c - 1.0)
                };
                for (u, v, _) in g.edges() {
                    let m = 0.5 * (ratio(u) + ratio(v));
                    rows[u].push((v, m));
                    rows[v].push((u, m));
                }
            }
            WeightScheme::Edge => {
                let profile = clique_profile(g);
                for &(u, v, c) in &profile.cl_e {
                    let c = c as f64;
                    rows[u].push((v, c / (c - 1.0)));
                    rows[v].push((u, c / (c - 1.0)));
                }
            }
        }
        Ok(Self { rows })
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.rows.iter().flatten().all(|&(_, m)| m >= 0.0)
    }

    /// `(M x)_i`.
    pub fn apply(&self, x: &[f64], i: usize) -> f64 {
        ksum(self.rows[i].iter().map(|&(j, m)| m * x[j]))
    }

    pub fn value(&self, x: &[f64]) -> f64 {
        ksum((0..self.n()).map(|i| x[i] * self.apply(x, i)))
    }
}

/// `xᵀ M x` for the given scheme.
pub fn form_value(g: &WeightedGraph, scheme: WeightScheme, x: &SimplexPoint) -> Result<f64> {
    if x.0.len() != g.n() {
        return Err(Error::Dimension { expected: g.n(), found: x.0.len() });
    }
    Ok(FormMatrix::new(g, scheme)?.value(&x.0))
}

#[derive(Debug, Clone)]
pub struct MaximizeOptions {
    pub restarts: usize,
    pub tol: f64,
    pub seed: u64,
    pub max_iterations: usize,
}

impl Default for MaximizeOptions {
    fn default() -> Self {
        Self { restarts: 16, tol: 1e-12, seed: 0, max_iterations: 100_000 }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Maximum {
    pub point: SimplexPoint,
    pub value: f64,
    pub support: Vec<usize>,
    /// Which start produced the returned point: `"clique-floor"` or `"restart-k"`.
    pub origin: String,
}

/// Replicator dynamics `x_i ← x_i (Mx)_i / (xᵀMx)` until the largest entry
/// change is at most `tol`. Returns the final point and its value.
fn replicate(m: &FormMatrix, mut x: Vec<f64>, tol: f64, max_iterations: usize) -> (Vec<f64>, f64) {
    let n = m.n();
    let mut value = m.value(&x);
    for _ in 0..max_iterations {
        if value <= 0.0 {
            break;
        }
        let mut y: Vec<f64> = (0..n).map(|i| x[i] * m.apply(&x, i) / value).collect();
        let total = ksum(y.iter().copied());
        y.iter_mut().for_each(|v| *v /= total);
        let change = x.iter().zip(&y).fold(0f64, |acc, (a, b)| acc.max((a - b).abs()));
        let next = m.value(&y);
        debug_assert!(next >= value - 1e-12 * value.abs().max(1.0), "replicator step decreased the form");
        x = y;
        value = next;
        if change <= tol {
            break;
        }
    }
    (x, value)
}

/// Repeatedly drops the smallest support entry and re-runs the dynamics,
/// keeping the result while the value does not fall by more than `tol`.
fn shrink_support(m: &FormMatrix, mut x: Vec<f64>, mut value: f64, opts: &MaximizeOptions) -> (Vec<f64>, f64) {
    loop {
        let support = support_of(&x);
        if support.len() <= 1 {
            return (x, value);
        }
        let drop = *support
            .iter()
            .min_by(|&&a, &&b| x[a].total_cmp(&x[b]).then(b.cmp(&a)))
            .expect("support is nonempty");
        let mut y = x.clone();
        y[drop] = 0.0;
        let total = ksum(y.iter().copied());
        y.iter_mut().for_each(|v| *v /= total);
        let (y, next) = replicate(m, y, opts.tol, opts.max_iterations);
        if next < value - opts.tol {
            return (x, value);
        }
        x = y;
        value = next;
    }
}

fn better(value: f64, support: &[usize], best: &Maximum) -> bool {
    const TIE: f64 = 1e-12;
    value > best.value + TIE || ((value - best.value).abs() <= TIE && support < best.support.as_slice())
}

/// Best point found over the uniform start, `restarts − 1` Dirichlet(1) starts
/// and the uniform point on the lexicographically first maximum clique, which
/// is always evaluated and kept as a floor.
pub fn maximize_form(g: &WeightedGraph, scheme: WeightScheme, opts: &MaximizeOptions) -> Result<Maximum> {
    let n = g.n();
    let m = FormMatrix::new(g, scheme)?;
    if !m.is_nonnegative() {
        return Err(Error::Precondition(
            "coefficient matrix has negative entries; replicator dynamics need nonnegative weights".into(),
        ));
    }
    if n == 0 {
        return Ok(Maximum { point: SimplexPoint(Vec::new()), value: 0.0, support: Vec::new(), origin: "empty".into() });
    }
    if g.m() == 0 {
        return Ok(Maximum { point: SimplexPoint::vertex(n, 0), value: 0.0, support: vec![0], origin: "edgeless".into() });
    }

    let clique = max_clique(g, None);
    let floor = SimplexPoint::uniform_on(n, &clique);
    let mut best = Maximum { value: m.value(&floor.0), support: floor.support(), point: floor, origin: "clique-floor".into() };

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for k in 0..opts.restarts {
        let start: Vec<f64> = if k == 0 {
            vec![1.0 / n as f64; n]
        } else {
            let draws: Vec<f64> = (0..n).map(|_| Exp1.sample(&mut rng)).collect();
            let total: f64 = draws.iter().sum();
            draws.into_iter().map(|d| d / total).collect()
        };
        let (x, value) = replicate(&m, start, opts.tol, opts.max_iterations);
        let (x, value) = shrink_support(&m, x, value, opts);
        let support = support_of(&x);
        if better(value, &support, &best) {
            best = Maximum { point: SimplexPoint(x), value, support, origin: format!("restart-{k}") };
        }
    }
    Ok(best)
}

/// Outcome of [`check_equality_structure`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StructureCheck {
    pub ok: bool,
    pub diagnostic: String,
}

/// Whether `G[supp(x)]` is complete ω(G)-partite with every part carrying
/// mass `1/ω` (within `tol`).
pub fn check_equality_structure(g: &WeightedGraph, x: &SimplexPoint, tol: f64) -> StructureCheck {
    let fail = |d: String| StructureCheck { ok: false, diagnostic: d };
    if x.0.len() != g.n() {
        return fail(format!("point has {} entries for {} vertices", x.0.len(), g.n()));
    }
    let support = x.support();
    if support.is_empty() {
        return fail("empty support".into());
    }
    let omega = clique_number(g);
    let induced = g.induced(&support);
    let Some(parts) = multipartite_parts(&induced) else {
        return fail("support does not induce a complete multipartite graph".into());
    };
    if parts.len() != omega {
        return fail(format!("support induces a complete {}-partite graph but ω = {omega}", parts.len()));
    }
    for part in &parts.parts {
        let mass = ksum(part.iter().map(|&i| x.0[support[i]]));
        if (mass - 1.0 / omega as f64).abs() > tol {
            let labels: Vec<usize> = part.iter().map(|&i| support[i]).collect();
            return fail(format!("part {labels:?} has mass {mass}, expected 1/{omega}"));
        }
    }
    StructureCheck { ok: true, diagnostic: format!("complete {omega}-partite support with equal part masses") }
}
