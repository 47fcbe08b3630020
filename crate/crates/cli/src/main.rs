//! Command-line driver. Every subcommand emits a single JSON report with a
//! fixed key order (`lines build` emits the vectors themselves as CSV unless
//! asked for the report). Exit codes: 0 when every check passed, 1 when a
//! check failed (the report is still written), 2 for usage or input errors.

mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use graphspectra::certify::{
    decompose, monotonicity_check, multiplicity_bound, two_cycle_grid_check,
};
use graphspectra::equiangular::{
    lambda_of_alpha, lower_bound_construct, verify_lines, LineSystem,
};
use graphspectra::exec::{map_collect, ExecMode};
use graphspectra::graph::write_graph;
use graphspectra::nodal::{multiplicity_audit, nodal_maximizer};
use graphspectra::radius_order::{enumerate_connected, kappa_search, KappaVerdict};
use graphspectra::spectra::{
    adjacency_eigen, adjacency_eigen_with_tol, radius_limit, spider_radius, spider_threshold,
};
use graphspectra::Error;
use serde_json::json;

use input::{FormatArg, GraphArgs};
use report::{CheckResult, Config, GraphJson, Report};

#[derive(Parser)]
#[command(
    name = "graphspectra",
    version,
    about = "Spectral graph toolkit: eigenvalue multiplicity certificates, \
             minimum-order searches, and equiangular line systems"
)]
struct Cli {
    /// Default tolerance for checks that take one.
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol: f64,

    /// Seed for the randomized audit samples.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Worker threads; 1 runs everything sequentially.
    #[arg(long, global = true, default_value_t = 1,
          value_parser = clap::value_parser!(u64).range(1..=1024))]
    jobs: u64,

    /// Write the output to this file instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a family graph and report its shape.
    Family {
        /// Family spec, e.g. "tadpole:3,5" or "petersen".
        spec: String,
        /// Also embed the graph itself in this format.
        #[arg(long, value_enum)]
        emit: Option<FormatArg>,
    },
    /// Eigenvalues of a graph, grouped into numerically equal runs.
    Spectrum {
        #[command(flatten)]
        graph: GraphArgs,
        /// Absolute grouping tolerance; default scales with the top eigenvalue.
        #[arg(long)]
        group_tol: Option<f64>,
    },
    /// Spectral radius of the three-leg spider with equal leg lengths.
    SpiderRadius {
        /// Leg length.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        ell: u64,
    },
    /// Smallest leg length whose spider radius exceeds lambda.
    NLambda {
        #[arg(long)]
        lambda: f64,
    },
    /// Minimum vertex count over connected graphs with spectral radius lambda.
    Kappa {
        #[arg(long)]
        lambda: f64,
        /// Largest vertex count to enumerate.
        #[arg(long, default_value_t = 7, value_parser = clap::value_parser!(u64).range(1..=8))]
        n_max: u64,
        /// Radius match tolerance; defaults to the global --tol.
        #[arg(long)]
        match_tol: Option<f64>,
    },
    /// Constructive nodal-domain certificate for one eigenvalue group.
    Nodal {
        #[command(flatten)]
        graph: GraphArgs,
        /// Eigenvalue group index, counted from the top (2 = second largest).
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
    },
    /// Audit the multiplicity bounds on one graph, or on every connected
    /// graph up to a vertex count.
    Audit {
        #[command(flatten)]
        graph: GraphArgs,
        /// Audit every connected graph with up to this many vertices.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=8),
              conflicts_with_all = ["input", "family"])]
        exhaustive_n: Option<u64>,
    },
    /// Remove a small vertex set so every residual component is nearly a tree.
    Decompose {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        lambda: f64,
    },
    /// Closed-form multiplicity bound from lambda and a degree cap.
    Bound {
        #[arg(long)]
        lambda: f64,
        /// Maximum degree.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        delta: u64,
    },
    /// Equiangular line systems.
    Lines {
        #[command(subcommand)]
        cmd: LinesCmd,
    },
    /// Sweep the two-cycle families and check the spectral radius floor.
    GridCheck {
        #[arg(long, default_value_t = 12)]
        p_max: u64,
        #[arg(long, default_value_t = 12)]
        q_max: u64,
        #[arg(long, default_value_t = 12)]
        l_max: u64,
    },
    /// Check that deletions and subdivisions do not raise the spectral radius.
    Monotonicity {
        #[command(flatten)]
        graph: GraphArgs,
    },
}

#[derive(Subcommand)]
enum LinesCmd {
    /// Build a line system from disjoint copies of a seed graph.
    Build {
        /// Common angle parameter.
        #[arg(long)]
        alpha: f64,
        /// Ambient dimension.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        dim: u64,
        /// Seed graph family spec, e.g. "cycle:3".
        #[arg(long, value_name = "NAME[:P1,P2,...]")]
        seed_family: String,
        /// Emit the JSON report instead of the CSV vectors.
        #[arg(long)]
        json: bool,
    },
    /// Check unit norms and the common angle of a stored line system.
    Verify {
        /// Line system file.
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = LinesFormat::Csv)]
        format: LinesFormat,
        /// Angle parameter; required for CSV, overrides the JSON header.
        #[arg(long)]
        alpha: Option<f64>,
        /// Tolerance on norms and pairwise angles.
        #[arg(long, default_value_t = 1e-7)]
        angle_tol: f64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum LinesFormat {
    Csv,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mode = if cli.jobs > 1 { ExecMode::Parallel } else { ExecMode::Sequential };
    let outcome = if cli.jobs > 1 {
        match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs as usize).build() {
            Ok(pool) => pool.install(|| dispatch(&cli, mode)),
            Err(e) => Err(format!("cannot build a pool of {} workers: {}", cli.jobs, e)),
        }
    } else {
        dispatch(&cli, mode)
    };
    match outcome {
        Ok((text, failed)) => {
            if let Err(msg) = write_output(&cli.out, &text) {
                eprintln!("error: {}", msg);
                return ExitCode::from(2);
            }
            if failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}

fn write_output(out: &Option<PathBuf>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| format!("cannot write {}: {}", path.display(), e)),
        None => {
            print!("{}", text);
            Ok(())
        }
    }
}

fn finish(
    cli: &Cli,
    command: &str,
    graph: Option<&graphspectra::graph::Graph>,
    results: Vec<CheckResult>,
) -> (String, bool) {
    let report = Report {
        command: command.into(),
        config: Config { tol: cli.tol, seed: cli.seed, jobs: cli.jobs as usize },
        graph: graph.map(GraphJson::of),
        results,
    };
    let failed = !report.ok();
    (report.render(), failed)
}

/// Runs one subcommand. `Err` is a usage or input problem (exit 2); `Ok`
/// carries the rendered output and whether any check failed (exit 1).
fn dispatch(cli: &Cli, mode: ExecMode) -> Result<(String, bool), String> {
    match &cli.cmd {
        Cmd::Family { spec, emit } => {
            let g = input::graph_from_spec(spec)?;
            let stats = g.structure_stats();
            let mut details = json!({
                "n": g.n(),
                "m": g.edge_count(),
                "max_degree": stats.max_degree,
                "cyclomatic": stats.cyclomatic,
                "girth": stats.girth,
                "diameter": stats.diameter,
            });
            if let Some(fmt) = emit {
                details["emitted"] =
                    json!(write_graph(&g, (*fmt).into()).map_err(|e| e.to_string())?);
            }
            Ok(finish(cli, "family", Some(&g), vec![CheckResult::pass("build", details)]))
        }

        Cmd::Spectrum { graph, group_tol } => {
            let g = graph.load()?;
            let computed = match group_tol {
                Some(t) => adjacency_eigen_with_tol(&g, *t),
                None => adjacency_eigen(&g),
            };
            let res = match computed {
                Ok(s) => CheckResult::pass(
                    "spectrum",
                    json!({
                        "group_tol": s.tol,
                        "lambda1": s.lambda1(),
                        "values": s.values,
                        "groups": s.groups.iter()
                            .map(|gr| json!({"value": gr.value, "multiplicity": gr.multiplicity}))
                            .collect::<Vec<_>>(),
                    }),
                ),
                Err(e) => CheckResult::fail("spectrum", json!({"error": e.to_string()}), Some(&g)),
            };
            Ok(finish(cli, "spectrum", Some(&g), vec![res]))
        }

        Cmd::SpiderRadius { ell } => {
            let radius = spider_radius(*ell as usize).map_err(|e| e.to_string())?;
            let details = json!({"ell": ell, "radius": radius, "limit": radius_limit()});
            Ok(finish(cli, "spider-radius", None, vec![CheckResult::pass("radius", details)]))
        }

        Cmd::NLambda { lambda } => {
            let n = spider_threshold(*lambda).map_err(|e| e.to_string())?;
            let details = json!({"lambda": lambda, "n_lambda": n});
            Ok(finish(cli, "n-lambda", None, vec![CheckResult::pass("threshold", details)]))
        }

        Cmd::Kappa { lambda, n_max, match_tol } => {
            let tol = match_tol.unwrap_or(cli.tol);
            let found = kappa_search(*lambda, *n_max as usize, tol, mode)
                .map_err(|e| e.to_string())?;
            let details = match &found.verdict {
                KappaVerdict::Found { kappa, certificate, residual } => json!({
                    "lambda": found.lambda,
                    "match_tol": tol,
                    "found": true,
                    "kappa": kappa,
                    "residual": residual,
                    "certificate": {"n": certificate.n(), "edges": certificate.edges()},
                }),
                KappaVerdict::NotFoundUpTo(n) => json!({
                    "lambda": found.lambda,
                    "match_tol": tol,
                    "found": false,
                    "searched_up_to": n,
                }),
            };
            Ok(finish(cli, "kappa", None, vec![CheckResult::pass("kappa", details)]))
        }

        Cmd::Nodal { graph, k } => {
            let g = graph.load()?;
            let res = adjacency_eigen(&g)
                .and_then(|s| nodal_maximizer(&g, &s, *k as usize))
                .map(|cert| {
                    CheckResult::pass(
                        "certificate",
                        serde_json::to_value(&cert).expect("certificate serializes"),
                    )
                })
                .unwrap_or_else(|e| {
                    CheckResult::fail("certificate", json!({"error": e.to_string()}), Some(&g))
                });
            Ok(finish(cli, "nodal", Some(&g), vec![res]))
        }

        Cmd::Audit { graph, exhaustive_n } => match (exhaustive_n, graph.load_optional()?) {
            (Some(n_max), None) => {
                let mut results = Vec::new();
                for n in 1..=(*n_max as usize) {
                    let graphs = enumerate_connected(n, mode).map_err(|e| e.to_string())?;
                    let audits = map_collect(mode, &graphs, |g| multiplicity_audit(g, cli.seed));
                    let mut violations = Vec::new();
                    for audit in audits {
                        match audit {
                            Ok(rep) => violations.extend(rep.violations),
                            Err(e) => violations.push(e.to_string()),
                        }
                    }
                    let ok = violations.is_empty();
                    results.push(CheckResult::new(
                        &format!("order-{}", n),
                        ok,
                        json!({"graphs": graphs.len(), "violations": violations}),
                    ));
                }
                Ok(finish(cli, "audit", None, results))
            }
            (None, Some(g)) => {
                let res = match multiplicity_audit(&g, cli.seed) {
                    Ok(rep) => CheckResult::new(
                        "audit",
                        rep.ok(),
                        serde_json::to_value(&rep).expect("audit report serializes"),
                    ),
                    Err(e) => CheckResult::fail("audit", json!({"error": e.to_string()}), Some(&g)),
                };
                Ok(finish(cli, "audit", Some(&g), vec![res]))
            }
            _ => Err("pass --in FILE, --family SPEC, or --exhaustive-n N".into()),
        },

        Cmd::Decompose { graph, lambda } => {
            spider_threshold(*lambda).map_err(|e| e.to_string())?;
            let g = graph.load()?;
            let res = match decompose(&g, *lambda) {
                Ok(witness) => CheckResult::pass(
                    "decompose",
                    serde_json::to_value(&witness).expect("witness serializes"),
                ),
                Err(e) => CheckResult::fail("decompose", json!({"error": e.to_string()}), Some(&g)),
            };
            Ok(finish(cli, "decompose", Some(&g), vec![res]))
        }

        Cmd::Bound { lambda, delta } => {
            let n_lambda = spider_threshold(*lambda).map_err(|e| e.to_string())?;
            let bound =
                multiplicity_bound(*lambda, *delta as usize).map_err(|e| e.to_string())?;
            let details = json!({
                "lambda": lambda,
                "delta": delta,
                "n_lambda": n_lambda,
                "bound": bound.to_string(),
            });
            Ok(finish(cli, "bound", None, vec![CheckResult::pass("bound", details)]))
        }

        Cmd::Lines { cmd } => dispatch_lines(cli, cmd),

        Cmd::GridCheck { p_max, q_max, l_max } => {
            let rep = two_cycle_grid_check(*p_max as usize, *q_max as usize, *l_max as usize, mode)
                .map_err(|e| e.to_string())?;
            let ok = rep.ok();
            let details = serde_json::to_value(&rep).expect("grid report serializes");
            Ok(finish(cli, "grid-check", None, vec![CheckResult::new("grid", ok, details)]))
        }

        Cmd::Monotonicity { graph } => {
            let g = graph.load()?;
            let res = match monotonicity_check(&g) {
                Ok(rep) => {
                    let details =
                        serde_json::to_value(&rep).expect("monotonicity report serializes");
                    if rep.ok() {
                        CheckResult::pass("monotonicity", details)
                    } else {
                        CheckResult::fail("monotonicity", details, Some(&g))
                    }
                }
                Err(e) => {
                    CheckResult::fail("monotonicity", json!({"error": e.to_string()}), Some(&g))
                }
            };
            Ok(finish(cli, "monotonicity", Some(&g), vec![res]))
        }
    }
}

fn dispatch_lines(cli: &Cli, cmd: &LinesCmd) -> Result<(String, bool), String> {
    match cmd {
        LinesCmd::Build { alpha, dim, seed_family, json: as_report } => {
            lambda_of_alpha(*alpha).map_err(|e| e.to_string())?;
            let seed = input::graph_from_spec(seed_family)?;
            match lower_bound_construct(*alpha, *dim as usize, &seed) {
                Ok((g, sys)) => {
                    if *as_report {
                        let details = json!({
                            "alpha": sys.alpha,
                            "dim": sys.dim,
                            "count": sys.vectors.len(),
                            "copies": g.n() / seed.n(),
                            "max_norm_residual": sys.max_norm_residual,
                            "max_angle_residual": sys.max_angle_residual,
                            "vectors": sys.vectors,
                        });
                        Ok(finish(
                            cli,
                            "lines build",
                            Some(&g),
                            vec![CheckResult::pass("build", details)],
                        ))
                    } else {
                        Ok((sys.to_csv(), false))
                    }
                }
                // Parameter mistakes are usage errors; a seed that does not
                // match the angle or a rejected construction is a finding.
                Err(e @ (Error::BadParams(_) | Error::OutOfDomain(_))) => Err(e.to_string()),
                Err(e) => {
                    let res =
                        CheckResult::fail("build", json!({"error": e.to_string()}), Some(&seed));
                    Ok(finish(cli, "lines build", Some(&seed), vec![res]))
                }
            }
        }

        LinesCmd::Verify { input: file, format, alpha, angle_tol } => {
            let text = std::fs::read_to_string(file)
                .map_err(|e| format!("cannot read {}: {}", file.display(), e))?;
            let sys = match format {
                LinesFormat::Csv => {
                    let a = alpha.ok_or("--alpha is required for CSV input")?;
                    LineSystem::from_csv(a, &text).map_err(|e| e.to_string())?
                }
                LinesFormat::Json => LineSystem::from_json(&text).map_err(|e| e.to_string())?,
            };
            let alpha_used = alpha.unwrap_or(sys.alpha);
            let ok = verify_lines(&sys, alpha_used, *angle_tol).map_err(|e| e.to_string())?;
            let details = json!({
                "alpha": alpha_used,
                "angle_tol": angle_tol,
                "count": sys.vectors.len(),
                "dim": sys.dim,
                "max_norm_residual": sys.max_norm_residual,
                "max_angle_residual": sys.max_angle_residual,
            });
            Ok(finish(cli, "lines verify", None, vec![CheckResult::new("verify", ok, details)]))
        }
    }
}
