//! `localturan` command-line tool.
//!
//! Exit status: 0 on success, 1 when a verified inequality fails or a
//! certificate is rejected, 2 on input or usage errors.

mod input;

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use localturan::bounds::{BoundContext, BoundId, BoundReport};
use localturan::certify::{certificate_from_witness, reconstruct_certificate, Rejection, Stage};
use localturan::coloring::chromatic_number;
use localturan::enumerate::{enumerate_up_to, verify_graphs, VerifyOptions, MAX_ENUMERATION_ORDER};
use localturan::graph::{to_graph6, to_weighted_edgelist};
use localturan::json::to_json_string_pretty;
use localturan::numeric::{scale, CERTIFICATE_TOL};
use localturan::random::{random_gnp, randomize_weights};
use localturan::simplex::{check_equality_structure, maximize_form, MaximizeOptions, WeightScheme};
use serde_json::json;

use input::{read_graph, read_text, Format};

pub enum CliError {
    /// Exit 1.
    Failed,
    /// Exit 2.
    Usage(String),
}

type CliResult = Result<(), CliError>;

fn usage(e: impl ToString) -> CliError {
    CliError::Usage(e.to_string())
}

#[derive(Parser)]
#[command(name = "localturan", version, about = "Clique-localized spectral bounds for weighted graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphInput {
    /// Graph file, or `-` for stdin.
    input: String,
    /// Input format; inferred from the extension (.g6, .wel, .json) or the content otherwise.
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the whole bound catalog on one graph.
    Bounds {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
        /// Also print the principal eigenvector.
        #[arg(long)]
        vector: bool,
        /// Chromatic number to compare against (computed exactly up to 10 vertices otherwise).
        #[arg(long)]
        chi: Option<usize>,
    },
    /// Certify equality in the weighted bound, or check a supplied vector.
    Certify {
        #[command(flatten)]
        graph: GraphInput,
        /// JSON file holding `w` (an array, or an object with a "w" array).
        #[arg(long)]
        witness: Option<String>,
    },
    /// Check bounds over every graph class up to a given order.
    Enumerate {
        #[arg(long)]
        max_n: usize,
        /// Comma-separated bound ids, or `all`.
        #[arg(long, default_value = "all")]
        checks: String,
        /// Worker threads (defaults to available parallelism).
        #[arg(long)]
        jobs: Option<usize>,
        /// Write the report as JSON to this path.
        #[arg(long)]
        out: Option<String>,
        /// Write the corpus as graph6 lines to this path.
        #[arg(long)]
        corpus: Option<String>,
        /// Certify every graph attaining the weighted bound.
        #[arg(long)]
        certify: bool,
        /// Check the Motzkin–Straus optima too.
        #[arg(long)]
        msopt: bool,
        /// Print the report as JSON instead of a table.
        #[arg(long)]
        json: bool,
    },
    /// Maximize a quadratic form over the standard simplex.
    Msopt {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, default_value = "plain")]
        scheme: WeightScheme,
        #[arg(long, default_value_t = 16)]
        restarts: usize,
        /// Overridden by TURAN_SEED.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print a seeded random G(n, p), optionally with random weights.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        /// Overridden by TURAN_SEED.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Weight magnitudes drawn uniformly from [low, high].
        #[arg(long, num_args = 2, value_names = ["LOW", "HIGH"])]
        weights: Option<Vec<f64>>,
        #[arg(long, requires = "weights")]
        signed: bool,
        #[arg(long, value_enum, default_value = "wel")]
        format: Format,
    },
}

fn seed(flag: u64) -> Result<u64, CliError> {
    match std::env::var("TURAN_SEED") {
        Ok(v) => v.trim().parse().map_err(|_| usage(format!("TURAN_SEED={v:?} is not an unsigned integer"))),
        Err(_) => Ok(flag),
    }
}

fn fmt7(x: f64) -> String {
    if x.is_nan() {
        "-".into()
    } else {
        format!("{x:.7}")
    }
}

fn csv_real(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        String::new()
    }
}

/// Writes to stdout; a closed pipe ends output quietly.
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if let Err(e) = out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: writing output: {e}");
        }
    }
}

fn print_json(value: serde_json::Value) -> CliResult {
    emit(&(to_json_string_pretty(&value).map_err(usage)? + "\n"));
    Ok(())
}

fn cmd_bounds(graph: GraphInput, json: bool, csv: bool, vector: bool, chi: Option<usize>) -> CliResult {
    let g = read_graph(&graph.input, graph.format)?;
    let ctx = BoundContext::new(&g).map_err(usage)?;
    let chi = chi.or_else(|| chromatic_number(&g));
    let reports = ctx.all(chi);
    let id = graph.input.as_str();
    if json {
        let mut out = json!({"graph_id": id, "lambda": ctx.lambda(), "bounds": reports});
        if vector {
            out["principal_vector"] = json!(ctx.spectrum.principal_vector);
        }
        print_json(out)?;
    } else if csv {
        let mut text = String::from("graph_id,bound_id,lhs,rhs,slack,equality,applicable,reason\n");
        for r in &reports {
            let _ = writeln!(
                text,
                "{id},{},{},{},{},{},{},{}",
                r.bound_id,
                csv_real(r.lhs),
                csv_real(r.rhs),
                csv_real(r.slack),
                r.equality,
                r.applicable,
                r.reason.as_deref().unwrap_or("")
            );
        }
        emit(&text);
    } else {
        emit(&bounds_table(id, ctx.lambda(), &reports, vector.then_some(&ctx.spectrum.principal_vector)));
    }
    if reports.iter().any(BoundReport::is_violation) {
        return Err(CliError::Failed);
    }
    Ok(())
}

fn bounds_table(id: &str, lambda: f64, reports: &[BoundReport], vector: Option<&Vec<f64>>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph {id}: lambda = {}", fmt7(lambda));
    if let Some(v) = vector {
        let entries: Vec<String> = v.iter().map(|&x| fmt7(x)).collect();
        let _ = writeln!(out, "principal vector: [{}]", entries.join(", "));
    }
    let _ = writeln!(out, "{:<18} {:>14} {:>14} {:>14}  status", "bound", "lhs", "rhs", "slack");
    for r in reports {
        let status = if !r.applicable {
            format!("n/a ({})", r.reason.as_deref().unwrap_or(""))
        } else if r.is_violation() {
            "VIOLATED".into()
        } else if r.equality {
            "equality".into()
        } else {
            "strict".into()
        };
        let _ = writeln!(out, "{:<18} {:>14} {:>14} {:>14}  {status}", r.bound_id.name(), fmt7(r.lhs), fmt7(r.rhs), fmt7(r.slack));
    }
    out
}

fn rejected(rej: &Rejection) -> CliResult {
    print_json(json!({"status": "rejected", "stage": rej.stage, "diagnostic": rej.diagnostic, "candidate": rej.candidate}))?;
    Err(CliError::Failed)
}

fn cmd_certify(graph: GraphInput, witness: Option<String>) -> CliResult {
    let g = read_graph(&graph.input, graph.format)?;
    let frobenius = g.frobenius_sq().sqrt();
    if let Some(path) = witness {
        let value: serde_json::Value = serde_json::from_str(&read_text(&path)?).map_err(|e| usage(format!("{path}: {e}")))?;
        let w: Vec<f64> = serde_json::from_value(value.get("w").cloned().unwrap_or(value))
            .map_err(|e| usage(format!("{path}: expected an array of reals or {{\"w\": [...]}}: {e}")))?;
        let cert = match certificate_from_witness(&g, w) {
            Ok(cert) => cert,
            Err(e @ localturan::Error::Dimension { .. }) => return Err(usage(e)),
            Err(e) => {
                return rejected(&Rejection { stage: Stage::NotMultipartite, diagnostic: e.to_string(), candidate: None })
            }
        };
        let ok = cert.within_threshold(frobenius);
        print_json(json!({"status": if ok { "accepted" } else { "rejected" }, "stage": if ok { None } else { Some(Stage::Residual) }, "certificate": cert}))?;
        return if ok { Ok(()) } else { Err(CliError::Failed) };
    }
    let report = BoundContext::new(&g).map_err(usage)?.main_weighted();
    if !report.equality {
        return rejected(&Rejection {
            stage: Stage::EqualityPrecheck,
            diagnostic: format!("lambda = {} is below the bound {} (slack {:e})", report.lhs, report.rhs, report.slack),
            candidate: None,
        });
    }
    match reconstruct_certificate(&g).map_err(usage)? {
        Ok(cert) => {
            debug_assert!(cert.within_threshold(frobenius));
            print_json(json!({"status": "accepted", "threshold": CERTIFICATE_TOL * scale(frobenius), "certificate": cert}))
        }
        Err(rej) => rejected(&rej),
    }
}

fn parse_checks(list: &str) -> Result<BTreeSet<BoundId>, CliError> {
    if list.trim().eq_ignore_ascii_case("all") {
        return Ok(BoundId::ALL.into_iter().collect());
    }
    list.split(',').filter(|s| !s.trim().is_empty()).map(|s| s.parse().map_err(usage)).collect()
}

#[allow(clippy::too_many_arguments)]
fn cmd_enumerate(
    max_n: usize,
    checks: &str,
    jobs: Option<usize>,
    out: Option<String>,
    corpus: Option<String>,
    certify: bool,
    msopt: bool,
    json: bool,
) -> CliResult {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&max_n) {
        return Err(usage(format!("--max-n must be between 1 and {MAX_ENUMERATION_ORDER}, got {max_n}")));
    }
    let checks = parse_checks(checks)?;
    if checks.is_empty() {
        return Err(usage("--checks selects no bounds"));
    }
    let opts = VerifyOptions { checks, certify, msopt: msopt.then(MaximizeOptions::default), ..VerifyOptions::default() };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        if j == 0 {
            return Err(usage("--jobs must be at least 1"));
        }
        pool = pool.num_threads(j);
    }
    let pool = pool.build().map_err(usage)?;
    let (graphs, report) = pool.install(|| -> Result<_, CliError> {
        let graphs = enumerate_up_to(max_n).map_err(usage)?;
        let report = verify_graphs(&graphs, &opts);
        Ok((graphs, report))
    })?;
    if let Some(path) = corpus {
        let text: String = graphs.iter().map(|g| to_graph6(g) + "\n").collect();
        std::fs::write(&path, text).map_err(|e| usage(format!("{path}: {e}")))?;
    }
    let rendered = to_json_string_pretty(&report).map_err(usage)?;
    if let Some(path) = out {
        std::fs::write(&path, format!("{rendered}\n")).map_err(|e| usage(format!("{path}: {e}")))?;
    }
    if json {
        emit(&format!("{rendered}\n"));
    } else {
        emit(&report.summary_table());
    }
    if report.is_clean() {
        Ok(())
    } else {
        Err(CliError::Failed)
    }
}

fn cmd_msopt(graph: GraphInput, scheme: WeightScheme, restarts: usize, seed_flag: u64) -> CliResult {
    let g = read_graph(&graph.input, graph.format)?;
    let seed = seed(seed_flag)?;
    let opts = MaximizeOptions { restarts, seed, ..MaximizeOptions::default() };
    let best = maximize_form(&g, scheme, &opts).map_err(usage)?;
    let structure = check_equality_structure(&g, &best.point, 1e-6);
    print_json(json!({
        "scheme": scheme,
        "value": best.value,
        "point": best.point,
        "support": best.support,
        "support_minimality": "heuristic",
        "origin": best.origin,
        "restarts": restarts,
        "seed": seed,
        "structure": structure,
    }))
}

fn cmd_random(n: usize, p: f64, seed_flag: u64, weights: Option<Vec<f64>>, signed: bool, format: Format) -> CliResult {
    let seed = seed(seed_flag)?;
    let mut g = random_gnp(n, p, seed).map_err(usage)?;
    if let Some(w) = weights {
        g = randomize_weights(&g, w[0], w[1], signed, seed).map_err(usage)?;
    }
    match format {
        Format::Wel => emit(&to_weighted_edgelist(&g)),
        Format::G6 if g.is_unit_weighted() => emit(&(to_graph6(&g) + "\n")),
        Format::G6 => return Err(usage("graph6 cannot carry weights; use --format wel or json")),
        Format::Json => print_json(json!(g.to_json()))?,
    }
    Ok(())
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Bounds { graph, json, csv, vector, chi } => cmd_bounds(graph, json, csv, vector, chi),
        Command::Certify { graph, witness } => cmd_certify(graph, witness),
        Command::Enumerate { max_n, checks, jobs, out, corpus, certify, msopt, json } => {
            cmd_enumerate(max_n, &checks, jobs, out, corpus, certify, msopt, json)
        }
        Command::Msopt { graph, scheme, restarts, seed } => cmd_msopt(graph, scheme, restarts, seed),
        Command::Random { n, p, seed, weights, signed, format } => cmd_random(n, p, seed, weights, signed, format),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Failed) => ExitCode::from(1),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
