//! Isomorph-free small graphs and corpus-wide verification.
//!
//! Canonical form: among all vertex orderings, the lexicographically smallest
//! upper-triangle bit string in column order `(0,1), (0,2), (1,2), (0,3), …`
//! (the graph6 order), packed most significant bit first into a `u64`.
//! Classes on `k` vertices are generated from the classes on `k − 1` by
//! adding a vertex with every possible neighborhood and canonicalizing.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{BoundContext, BoundId, BoundReport};
use crate::certify::{certify_equality, classify_unweighted_equality, verify_certificate, EqualityClass};
use crate::clique::clique_number;
use crate::coloring::chromatic_number;
use crate::graph::{strip_isolated, to_graph6};
use crate::numeric::{scale, CERTIFICATE_TOL};
use crate::random::{random_gnp, randomize_weights};
use crate::simplex::{maximize_form, MaximizeOptions, WeightScheme};
use crate::{Error, Result, WeightedGraph};

pub const MAX_ENUMERATION_ORDER: usize = 8;

/// Adjacency rows as bitmasks; `n ≤ 8`.
fn masks(g: &WeightedGraph) -> Vec<u8> {
    (0..g.n()).map(|v| g.neighbors(v).ones().fold(0u8, |m, u| m | 1 << u)).collect()
}

struct Canon<'a> {
    adj: &'a [u8],
    total: u32,
    best: Option<u64>,
    order: Vec<usize>,
}

impl Canon<'_> {
    fn search(&mut self, used: u8, code: u64, bits: u32) {
        let j = self.order.len();
        if j == self.adj.len() {
            if self.best.is_none_or(|b| code < b) {
                self.best = Some(code);
            }
            return;
        }
        for v in 0..self.adj.len() {
            if used & 1 << v != 0 {
                continue;
            }
            let column = self.order.iter().fold(0u64, |c, &u| c << 1 | u64::from(self.adj[u] >> v & 1));
            let next = code << j | column;
            let next_bits = bits + j as u32;
            if let Some(b) = self.best {
                if next > b >> (self.total - next_bits) {
                    continue;
                }
            }
            self.order.push(v);
            self.search(used | 1 << v, next, next_bits);
            self.order.pop();
        }
    }
}

fn canonical_code(adj: &[u8]) -> u64 {
    let n = adj.len();
    let mut canon = Canon { adj, total: (n * n.saturating_sub(1) / 2) as u32, best: None, order: Vec::with_capacity(n) };
    canon.search(0, 0, 0);
    canon.best.unwrap_or(0)
}

/// Canonical code of the structure of `g` (weights ignored). Requires `n ≤ 8`.
pub fn canonical_form(g: &WeightedGraph) -> Result<u64> {
    check_order(g.n())?;
    Ok(canonical_code(&masks(g)))
}

fn check_order(n: usize) -> Result<()> {
    if (1..=MAX_ENUMERATION_ORDER).contains(&n) {
        Ok(())
    } else {
        Err(Error::Precondition(format!("enumeration needs 1 <= n <= {MAX_ENUMERATION_ORDER}, got {n}")))
    }
}

fn decode_masks(n: usize, code: u64) -> Vec<u8> {
    let total = n * n.saturating_sub(1) / 2;
    let mut adj = vec![0u8; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (total - 1 - k) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    adj
}

/// Unit-weight graph with the given canonical code.
pub fn decode_canonical(n: usize, code: u64) -> WeightedGraph {
    let adj = decode_masks(n, code);
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| adj[u] >> v & 1 == 1).collect();
    WeightedGraph::unweighted(n, &edges).expect("decoded edges are valid")
}

fn extend(prev: &BTreeSet<u64>, k: usize) -> BTreeSet<u64> {
    prev.par_iter()
        .flat_map_iter(|&code| {
            let base = decode_masks(k - 1, code);
            (0u16..1 << (k - 1)).map(move |nbrs| {
                let mut adj = base.clone();
                for (u, row) in adj.iter_mut().enumerate() {
                    if nbrs >> u & 1 == 1 {
                        *row |= 1 << (k - 1);
                    }
                }
                adj.push(nbrs as u8);
                canonical_code(&adj)
            })
        })
        .collect()
}

/// Canonical codes of all isomorphism classes on `1..=n_max` vertices.
pub fn canonical_levels(n_max: usize) -> Result<Vec<BTreeSet<u64>>> {
    check_order(n_max)?;
    let mut levels = vec![BTreeSet::from([0u64])];
    for k in 2..=n_max {
        let next = extend(levels.last().expect("nonempty"), k);
        levels.push(next);
    }
    Ok(levels)
}

/// One unit-weight representative per isomorphism class on `n` vertices,
/// ordered by canonical code.
pub fn enumerate_graphs(n: usize) -> Result<Vec<WeightedGraph>> {
    let levels = canonical_levels(n)?;
    Ok(levels[n - 1].iter().map(|&c| decode_canonical(n, c)).collect())
}

/// Every class on `1..=n_max` vertices, by order then code.
pub fn enumerate_up_to(n_max: usize) -> Result<Vec<WeightedGraph>> {
    let levels = canonical_levels(n_max)?;
    Ok(levels
        .iter()
        .enumerate()
        .flat_map(|(i, codes)| codes.iter().map(move |&c| decode_canonical(i + 1, c)))
        .collect())
}

/// graph6 for unit weights, compact edge-list JSON otherwise.
pub fn encode_graph(g: &WeightedGraph) -> String {
    if g.is_unit_weighted() {
        to_graph6(g)
    } else {
        serde_json::to_string(&g.to_json()).expect("graph JSON serializes")
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct Tally {
    pub applicable: u64,
    pub satisfied: u64,
    pub equality: u64,
    /// Smallest `slack / max(1, |rhs|)` among applicable reports not flagged as equality.
    #[serde(default)]
    pub min_strict_relative_slack: Option<f64>,
}

impl Tally {
    fn merge(&mut self, other: &Tally) {
        self.applicable += other.applicable;
        self.satisfied += other.satisfied;
        self.equality += other.equality;
        self.min_strict_relative_slack = match (self.min_strict_relative_slack, other.min_strict_relative_slack) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub graph: String,
    /// A bound id, or `CERTIFY`, `MSOPT_<SCHEME>`, `ERROR`.
    pub check: String,
    pub slack: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EqualityMismatch {
    pub graph: String,
    pub check: String,
    pub flagged: bool,
    pub classifier: String,
}

/// Aggregated outcome; [`merge`](Self::merge) is associative and commutative.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub graphs_checked: u64,
    pub per_bound: BTreeMap<String, Tally>,
    pub violations: Vec<Violation>,
    pub equality_mismatches: Vec<EqualityMismatch>,
}

impl VerificationReport {
    pub fn merge(mut self, other: VerificationReport) -> VerificationReport {
        self.graphs_checked += other.graphs_checked;
        for (k, t) in &other.per_bound {
            self.per_bound.entry(k.clone()).or_default().merge(t);
        }
        self.violations.extend(other.violations);
        self.violations.sort_by(|a, b| {
            (&a.graph, &a.check, &a.detail)
                .cmp(&(&b.graph, &b.check, &b.detail))
                .then(a.slack.total_cmp(&b.slack))
        });
        self.equality_mismatches.extend(other.equality_mismatches);
        self.equality_mismatches.sort();
        self
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty() && self.equality_mismatches.is_empty()
    }

    pub fn tally(&self, id: BoundId) -> Tally {
        self.per_bound.get(id.name()).copied().unwrap_or_default()
    }

    /// Fixed-width table; reals rounded to 7 digits.
    pub fn summary_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graphs checked: {}", self.graphs_checked);
        let _ = writeln!(
            out,
            "{:<18} {:>10} {:>10} {:>10} {:>16}",
            "check", "applicable", "satisfied", "equality", "min strict slack"
        );
        for (k, t) in &self.per_bound {
            let slack = t.min_strict_relative_slack.map_or("-".to_string(), |s| format!("{s:.7}"));
            let _ = writeln!(
                out,
                "{:<18} {:>10} {:>10} {:>10} {:>16}",
                k, t.applicable, t.satisfied, t.equality, slack
            );
        }
        let _ = writeln!(
            out,
            "violations: {}, equality mismatches: {}",
            self.violations.len(),
            self.equality_mismatches.len()
        );
        for v in &self.violations {
            let _ = writeln!(out, "  VIOLATION {} {} slack={:.7} {}", v.graph, v.check, v.slack, v.detail.as_deref().unwrap_or(""));
        }
        for m in &self.equality_mismatches {
            let _ = writeln!(out, "  MISMATCH {} {} flagged={} classifier={}", m.graph, m.check, m.flagged, m.classifier);
        }
        out
    }
}

/// Equality verdict each characterized bound must report on an unweighted graph.
pub fn expected_equality(id: BoundId, g: &WeightedGraph, class: EqualityClass) -> Option<bool> {
    match id {
        BoundId::MainWeighted | BoundId::LocalEdge | BoundId::VertexDegree => Some(class.is_extremal()),
        BoundId::LocalizedWilf | BoundId::TuranDegree => Some(class.is_regular()),
        BoundId::AdakChandran => Some(g.m() == 0 || (class.is_regular() && g.min_degree() != Some(0))),
        _ => None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RandomModel {
    Gnp { p: f64 },
    /// `G(n, p)` with magnitudes uniform in `[low, high]`, optionally signed.
    WeightedGnp { p: f64, low: f64, high: f64, signed: bool },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CorpusMode {
    Exhaustive,
    /// `count` graphs with `n` drawn uniformly from `n_min..=n_max`.
    Random { count: usize, n_min: usize, model: RandomModel, seed: u64 },
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub checks: BTreeSet<BoundId>,
    /// Compare equality flags with the structural classifier (unit weights only).
    pub equality_checks: bool,
    /// Certify every graph on which the main bound is tight.
    pub certify: bool,
    /// Check the three Motzkin–Straus optima.
    pub msopt: Option<MaximizeOptions>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { checks: BoundId::ALL.into_iter().collect(), equality_checks: true, certify: false, msopt: None }
    }
}

impl VerifyOptions {
    pub fn only(checks: impl IntoIterator<Item = BoundId>) -> Self {
        Self { checks: checks.into_iter().collect(), ..Self::default() }
    }
}

fn violation(graph: &str, check: &str, slack: f64, detail: impl Into<Option<String>>) -> Violation {
    Violation { graph: graph.to_string(), check: check.to_string(), slack, detail: detail.into() }
}

fn record(report: &mut VerificationReport, r: &BoundReport, graph: &str) {
    let t = report.per_bound.entry(r.bound_id.name().to_string()).or_default();
    if !r.applicable {
        return;
    }
    t.applicable += 1;
    if r.is_violation() {
        report.violations.push(violation(graph, r.bound_id.name(), r.slack, None));
        return;
    }
    t.satisfied += 1;
    if r.equality {
        t.equality += 1;
    } else {
        let s = r.relative_slack();
        t.min_strict_relative_slack = Some(t.min_strict_relative_slack.map_or(s, |m| m.min(s)));
    }
}

fn check_certificate(g: &WeightedGraph, graph: &str, out: &mut VerificationReport) {
    if g.m() == 0 {
        return;
    }
    match certify_equality(g) {
        Ok(Ok(cert)) => match verify_certificate(g, &cert) {
            Ok((s, n)) if s.max(n) <= CERTIFICATE_TOL * scale(g.frobenius_sq().sqrt()) => {}
            Ok((s, n)) => out.violations.push(violation(graph, "CERTIFY", -s.max(n), "round trip residual".to_string())),
            Err(e) => out.violations.push(violation(graph, "CERTIFY", f64::NAN, e.to_string())),
        },
        Ok(Err(rej)) => out.violations.push(violation(graph, "CERTIFY", f64::NAN, format!("rejected at {}: {}", rej.stage, rej.diagnostic))),
        Err(e) => out.violations.push(violation(graph, "CERTIFY", f64::NAN, e.to_string())),
    }
}

fn check_msopt(g: &WeightedGraph, graph: &str, opts: &MaximizeOptions, out: &mut VerificationReport) {
    if g.m() == 0 || g.common_sign() != Some(1) {
        return;
    }
    let stripped = strip_isolated(g).graph;
    let mut targets = vec![(WeightScheme::Vertex, &stripped, 1.0), (WeightScheme::Edge, g, 1.0)];
    if g.is_unit_weighted() {
        targets.insert(0, (WeightScheme::Plain, g, 1.0 - 1.0 / clique_number(g) as f64));
    }
    for (scheme, h, expected) in targets {
        let check = format!("MSOPT_{}", scheme.to_string().to_uppercase());
        let t = out.per_bound.entry(check.clone()).or_default();
        t.applicable += 1;
        match maximize_form(h, scheme, opts) {
            Ok(m) if (m.value - expected).abs() <= 1e-6 => {
                t.satisfied += 1;
                t.equality += 1;
            }
            Ok(m) => out.violations.push(violation(graph, &check, expected - m.value, format!("value {}", m.value))),
            Err(e) => out.violations.push(violation(graph, &check, f64::NAN, e.to_string())),
        }
    }
}

/// Runs every requested check on one graph.
pub fn verify_graph(g: &WeightedGraph, opts: &VerifyOptions) -> VerificationReport {
    let graph = encode_graph(g);
    let mut out = VerificationReport { graphs_checked: 1, ..Default::default() };
    let ctx = match BoundContext::new(g) {
        Ok(ctx) => ctx,
        Err(e) => {
            out.violations.push(violation(&graph, "ERROR", f64::NAN, e.to_string()));
            return out;
        }
    };
    let chi = if opts.checks.iter().any(|id| id.needs_chi()) { chromatic_number(g) } else { None };
    let class = (opts.equality_checks && g.is_unit_weighted()).then(|| classify_unweighted_equality(g));
    for &id in &opts.checks {
        let r = ctx.report(id, chi);
        record(&mut out, &r, &graph);
        if let (Some(class), true) = (class, r.applicable) {
            if let Some(expected) = expected_equality(id, g, class) {
                if expected != r.equality {
                    out.equality_mismatches.push(EqualityMismatch {
                        graph: graph.clone(),
                        check: id.name().to_string(),
                        flagged: r.equality,
                        classifier: class.to_string(),
                    });
                }
            }
        }
    }
    if opts.certify && ctx.main_weighted().equality {
        check_certificate(g, &graph, &mut out);
    }
    if let Some(ms) = &opts.msopt {
        check_msopt(g, &graph, ms, &mut out);
    }
    out
}

/// Graphs of a random corpus, in generation order.
pub fn random_corpus(count: usize, n_min: usize, n_max: usize, model: RandomModel, seed: u64) -> Result<Vec<WeightedGraph>> {
    if n_min == 0 || n_min > n_max {
        return Err(Error::Precondition(format!("bad order range {n_min}..={n_max}")));
    }
    let span = (n_max - n_min + 1) as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(3);
    let plan: Vec<(usize, u64)> = (0..count).map(|_| (n_min + (rng.next_u64() % span) as usize, rng.next_u64())).collect();
    plan.into_par_iter()
        .map(|(n, s)| match model {
            RandomModel::Gnp { p } => random_gnp(n, p, s),
            RandomModel::WeightedGnp { p, low, high, signed } => randomize_weights(&random_gnp(n, p, s)?, low, high, signed, s),
        })
        .collect()
}

/// Checks a whole corpus in parallel; the result does not depend on scheduling.
pub fn verify_graphs(graphs: &[WeightedGraph], opts: &VerifyOptions) -> VerificationReport {
    graphs
        .par_iter()
        .map(|g| verify_graph(g, opts))
        .reduce(VerificationReport::default, VerificationReport::merge)
}

pub fn verify_corpus(n_max: usize, mode: CorpusMode, opts: &VerifyOptions) -> Result<VerificationReport> {
    let graphs = match mode {
        CorpusMode::Exhaustive => enumerate_up_to(n_max)?,
        CorpusMode::Random { count, n_min, model, seed } => random_corpus(count, n_min, n_max, model, seed)?,
    };
    Ok(verify_graphs(&graphs, opts))
}
