//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the lines are always printed.

use std::time::{Duration, Instant};

use localturan::bounds::{bound_main_weighted, BoundId};
use localturan::certify::{certificate_from_witness, certify_equality};
use localturan::clique::clique_profile;
use localturan::enumerate::{
    enumerate_up_to, random_corpus, verify_graph, RandomModel, VerificationReport, VerifyOptions,
};
use localturan::graph::{connected_components, families, strip_isolated};
use localturan::numeric::EQUALITY_TOL;
use localturan::simplex::{form_value, maximize_form, MaximizeOptions, SimplexPoint, WeightScheme};
use localturan::spectral::graph_spectrum;
use localturan::WeightedGraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1};

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn timed(f: impl FnOnce() -> Outcome) -> (Outcome, Duration) {
    let t = Instant::now();
    let o = f();
    (o, t.elapsed())
}

fn sequential(graphs: &[WeightedGraph], opts: &VerifyOptions) -> VerificationReport {
    graphs.iter().map(|g| verify_graph(g, opts)).fold(VerificationReport::default(), VerificationReport::merge)
}

fn example_one() -> Outcome {
    let mut fails = Vec::new();
    let (inner, elapsed) = timed(|| {
        let g = families::example_one();
        let s3 = 3f64.sqrt();
        let spectrum = graph_spectrum(&g).unwrap();
        if (spectrum.spectral_radius - 2.0 * s3).abs() > 1e-9 {
            fails.push(format!("lambda = {}", spectrum.spectral_radius));
        }
        if (spectrum.frobenius_norm - 3.0 * 2f64.sqrt()).abs() > 1e-12 {
            fails.push(format!("||A||_F = {}", spectrum.frobenius_norm));
        }
        if !bound_main_weighted(&g).unwrap().equality {
            fails.push("main bound not tight".into());
        }
        match certify_equality(&g) {
            Ok(Ok(cert)) => {
                if cert.part_norms_sq.iter().any(|p| (p - s3).abs() > 1e-8) {
                    fails.push(format!("part norms {:?}", cert.part_norms_sq));
                }
            }
            other => fails.push(format!("certifier: {other:?}")),
        }
        let witness = certificate_from_witness(&g, families::example_one_witness()).unwrap();
        if witness.structural_residual > 1e-9 || witness.norm_residual > 1e-9 {
            fails.push(format!("witness residuals {} {}", witness.structural_residual, witness.norm_residual));
        }
        outcome(true, "")
    });
    drop(inner);
    if elapsed >= Duration::from_millis(10) {
        fails.push(format!("runtime {elapsed:?}"));
    }
    outcome(fails.is_empty(), if fails.is_empty() { format!("lambda = 2*sqrt(3), certificate accepted, {elapsed:?}") } else { fails.join("; ") })
}

fn psi_base_case() -> Outcome {
    let (o, elapsed) = timed(|| {
        let graphs = enumerate_up_to(5).unwrap();
        let r = sequential(&graphs, &VerifyOptions::only([BoundId::Psi]));
        outcome(r.graphs_checked == 52 && r.is_clean(), format!("{} classes, {} violations", r.graphs_checked, r.violations.len()))
    });
    let extended = sequential(&enumerate_up_to(7).unwrap(), &VerifyOptions::only([BoundId::Psi]));
    // 1 + 2 + 4 + 11 + 34 + 156 + 1044 classes on up to 7 vertices.
    let ok = o.ok && elapsed < Duration::from_secs(1) && extended.graphs_checked == 1252 && extended.is_clean();
    outcome(
        ok,
        format!(
            "n<=5: {} in {elapsed:?}; n<=7: {} classes, {} violations",
            o.detail,
            extended.graphs_checked,
            extended.violations.len()
        ),
    )
}

fn bound_suite(corpus: &[WeightedGraph]) -> (Outcome, VerificationReport) {
    let (r, elapsed) = {
        let t = Instant::now();
        let r = sequential(corpus, &VerifyOptions { certify: true, ..VerifyOptions::default() });
        (r, t.elapsed())
    };
    let applicable: u64 = r.per_bound.values().map(|t| t.applicable).sum();
    let ok = r.violations.is_empty() && elapsed < Duration::from_secs(120) && corpus.len() == 1252;
    let mut detail = format!(
        "{} graphs, {applicable} applicable reports, {} violations, {elapsed:?}",
        r.graphs_checked,
        r.violations.len()
    );
    for v in r.violations.iter().take(5) {
        detail.push_str(&format!("\n    {} {} {}", v.graph, v.check, v.slack));
    }
    (outcome(ok, detail), r)
}

fn equality_exactness(r: &VerificationReport) -> Outcome {
    let ids = [
        BoundId::LocalEdge,
        BoundId::VertexDegree,
        BoundId::LocalizedWilf,
        BoundId::TuranDegree,
        BoundId::AdakChandran,
        BoundId::MainWeighted,
    ];
    let closest = ids
        .iter()
        .filter_map(|&id| r.tally(id).min_strict_relative_slack)
        .fold(f64::INFINITY, f64::min);
    let ok = r.equality_mismatches.is_empty() && closest > 10.0 * EQUALITY_TOL;
    let mut detail = format!("{} mismatches, closest non-extremal relative slack {closest:.3e}", r.equality_mismatches.len());
    for m in r.equality_mismatches.iter().take(5) {
        detail.push_str(&format!("\n    {} {} flagged={} {}", m.graph, m.check, m.flagged, m.classifier));
    }
    outcome(ok, detail)
}

fn weighted_stress() -> Outcome {
    let t = Instant::now();
    let model = RandomModel::WeightedGnp { p: 0.5, low: 0.1, high: 2.0, signed: true };
    let graphs = random_corpus(1000, 5, 16, model, 20_240_229).unwrap();
    let r = sequential(&graphs, &VerifyOptions::only([BoundId::MainWeighted]));
    let elapsed = t.elapsed();
    let tally = r.tally(BoundId::MainWeighted);
    let ok = r.violations.is_empty() && tally.applicable == 1000 && elapsed < Duration::from_secs(30);
    outcome(ok, format!("{} weighted graphs, {} violations, {elapsed:?}", tally.applicable, r.violations.len()))
}

fn random_simplex_point(n: usize, rng: &mut ChaCha8Rng) -> SimplexPoint {
    // Half the draws live on a random face so boundary points get probed too.
    let face = rng.random_bool(0.5);
    let mut x: Vec<f64> = (0..n)
        .map(|_| if face && rng.random_bool(0.5) { 0.0 } else { Exp1.sample(rng) })
        .collect();
    if x.iter().all(|&v| v == 0.0) {
        x[rng.random_range(0..n)] = 1.0;
    }
    let total: f64 = x.iter().sum();
    x.iter_mut().for_each(|v| *v /= total);
    let drift = 1.0 - x.iter().sum::<f64>();
    let last = x.iter().rposition(|&v| v > 0.0).unwrap();
    x[last] += drift;
    SimplexPoint::new(x).unwrap()
}

fn motzkin_straus(corpus: &[WeightedGraph]) -> Outcome {
    let opts = MaximizeOptions::default();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut worst = 0f64;
    let mut ceiling = f64::NEG_INFINITY;
    let mut fails = Vec::new();
    let mut checked = 0;
    for g in corpus.iter().filter(|g| g.m() > 0) {
        checked += 1;
        let omega = clique_profile(g).omega as f64;
        let stripped = strip_isolated(g).graph;
        let cases = [
            (WeightScheme::Plain, g, 1.0 - 1.0 / omega),
            (WeightScheme::Vertex, &stripped, 1.0),
            (WeightScheme::Edge, g, 1.0),
        ];
        for (scheme, h, expected) in cases {
            let value = maximize_form(h, scheme, &opts).unwrap().value;
            worst = worst.max((value - expected).abs());
            if (value - expected).abs() > 1e-6 {
                fails.push(format!("{} {scheme}: {value}", localturan::graph::to_graph6(g)));
            }
        }
        for _ in 0..1000 {
            let x = random_simplex_point(stripped.n(), &mut rng);
            let v = form_value(&stripped, WeightScheme::Vertex, &x).unwrap();
            let e = form_value(&stripped, WeightScheme::Edge, &x).unwrap();
            ceiling = ceiling.max(v).max(e);
        }
    }
    if ceiling > 1.0 + 1e-9 {
        fails.push(format!("random point reached {ceiling}"));
    }
    let mut detail = format!("{checked} graphs, worst optimum error {worst:.2e}, largest random value {ceiling:.12}");
    for f in fails.iter().take(5) {
        detail.push_str(&format!("\n    {f}"));
    }
    outcome(fails.is_empty(), detail)
}

fn hong_chain(corpus: &[WeightedGraph]) -> Outcome {
    let mut checked = 0;
    let mut tightest = f64::INFINITY;
    let mut fails = Vec::new();
    for g in corpus {
        if g.min_degree() == Some(0) || g.n() < 2 || connected_components(g).len() != 1 {
            continue;
        }
        checked += 1;
        let p = clique_profile(g);
        let lhs = 2.0 * localturan::numeric::ksum(p.cl_e.iter().map(|&(_, _, c)| (c as f64 - 1.0) / c as f64));
        let rhs = (2 * g.m() + 1 - g.n()) as f64;
        tightest = tightest.min(rhs - lhs);
        if lhs > rhs + 1e-9 {
            fails.push(localturan::graph::to_graph6(g));
        }
    }
    outcome(fails.is_empty(), format!("{checked} connected graphs, min slack {tightest:.3e}, {} violations {fails:?}", fails.len()))
}

/// cl(v) and cl(e) by scanning every vertex subset.
fn subset_oracle(g: &WeightedGraph) -> (Vec<usize>, Vec<(usize, usize, usize)>) {
    let n = g.n();
    let mut cl_v = vec![1; n];
    let mut best = vec![vec![0usize; n]; n];
    for mask in 1u32..1 << n {
        let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let clique = members.iter().enumerate().all(|(i, &u)| members[i + 1..].iter().all(|&v| g.has_edge(u, v)));
        if !clique {
            continue;
        }
        for &u in &members {
            cl_v[u] = cl_v[u].max(members.len());
            for &v in &members {
                best[u][v] = best[u][v].max(members.len());
            }
        }
    }
    let cl_e = g.edges().map(|(u, v, _)| (u, v, best[u][v])).collect();
    (cl_v, cl_e)
}

fn oracle_equivalence(corpus: &[WeightedGraph], weighted: &[WeightedGraph]) -> Outcome {
    let mut profile_fail = Vec::new();
    let mut profiles = 0;
    for g in corpus.iter().filter(|g| g.n() <= 6) {
        profiles += 1;
        let p = clique_profile(g);
        let (cl_v, cl_e) = subset_oracle(g);
        if p.cl_v != cl_v || p.cl_e != cl_e || p.omega != cl_v.iter().copied().max().unwrap_or(0) {
            profile_fail.push(localturan::graph::to_graph6(g));
        }
    }
    let mut worst = 0f64;
    let mut spectra = 0;
    for g in corpus.iter().chain(weighted) {
        spectra += 1;
        worst = worst.max(graph_spectrum(g).unwrap().trace_identity_error());
    }
    outcome(
        profile_fail.is_empty() && worst <= 1e-9,
        format!(
            "{profiles} profiles match the subset oracle ({} differ); {spectra} spectra, worst trace error {worst:.2e}",
            profile_fail.len()
        ),
    )
}

fn main() {
    let corpus = enumerate_up_to(7).unwrap();
    let stress = random_corpus(
        200,
        5,
        16,
        RandomModel::WeightedGnp { p: 0.5, low: 0.1, high: 2.0, signed: true },
        8,
    )
    .unwrap();

    let mut results: Vec<(&str, Outcome)> = Vec::new();
    results.push(("1 example-1 reproduction", example_one()));
    results.push(("2 psi base case", psi_base_case()));
    let (suite, report) = bound_suite(&corpus);
    results.push(("3 bound catalog n<=7", suite));
    results.push(("4 equality characterizations", equality_exactness(&report)));
    results.push(("5 weighted stress", weighted_stress()));
    results.push(("6 motzkin-straus optima", motzkin_straus(&corpus)));
    results.push(("7 hong chain inequality", hong_chain(&corpus)));
    results.push(("8 oracle equivalence", oracle_equivalence(&corpus, &stress)));

    let mut failed = 0;
    for (name, o) in &results {
        println!("[{}] criterion {name}: {}", if o.ok { "PASS" } else { "FAIL" }, o.detail);
        failed += usize::from(!o.ok);
    }
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
