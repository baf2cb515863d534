//! Thin command-line front end: every subcommand is a direct wrapper over
//! the library. Exit codes: 0 success, 1 usage/parse errors, 2 cap
//! exceeded, 3 internal inconsistency or construction gap, 4 unrealizable.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use secoal::classify::{classify_family, predict_sec_equals_n, tree_sec_profile};
use secoal::coalition::{
    check_bounds, coalition_number_with_cap, is_c_partition, is_sec_partition, sec_number_with_cap,
    CoalitionError, Partition, SolveError,
};
use secoal::corpus::{
    self, parse_checks, records_to_jsonl, resolve_corpus, resolve_input, run_sweep, SweepCache,
    SweepConfig, SweepError,
};
use secoal::domination::{
    domination_number, is_dominating, is_secure_dominating, secure_domination_number,
};
use secoal::graph::{Graph, GraphError};
use secoal::scg::{realize_as_scg_with_cap, RealizationExport, RealizeError};
use secoal::trees::TreeEnumError;

#[derive(Parser)]
#[command(
    name = "secoal",
    version,
    about = "Exact secure domination and secure coalition computations on small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Gamma,
    #[value(name = "gamma-s")]
    GammaS,
    Sec,
    C,
    Classify,
}

#[derive(Subcommand)]
enum Command {
    /// Compute an invariant of one graph, with a witness.
    Compute {
        /// Which invariant: gamma, gamma-s, sec, c, or classify.
        what: What,
        /// graph6 line, file (graph6 or edge list), or family spec like path:6.
        #[arg(long)]
        input: String,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
        /// Search cap override for the exact solvers.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Verify a candidate secure coalition partition.
    Verify {
        #[arg(long)]
        input: String,
        /// Partition spec: parts split by ';', vertices by ',', e.g. "0,2;3,5;4;1".
        #[arg(long)]
        partition: String,
        #[arg(long)]
        json: bool,
    },
    /// Realize a graph as a secure coalition graph; prints realization JSON.
    Realize {
        #[arg(long)]
        input: String,
        /// Host order cap.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Run the verification sweep over a corpus, writing JSONL records.
    Sweep {
        /// Corpus file of graph6 lines, or a family spec like trees:9.
        #[arg(long, visible_alias = "corpus")]
        input: String,
        /// Check selector: all, group names, or comma-separated check names.
        #[arg(long, default_value = "all")]
        checks: String,
        /// Worker threads.
        #[arg(long)]
        jobs: Option<usize>,
        /// Solver cap; larger graphs get "skipped: cap" records.
        #[arg(long)]
        cap: Option<usize>,
        /// Output path for the JSONL records.
        #[arg(long)]
        out: PathBuf,
        /// JSONL record cache path (the SECOAL_CACHE variable overrides it).
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Generate a named-family corpus file.
    Gen {
        /// Family spec: trees:N, paths:N, cycles:N, stars:N, or completes:N.
        spec: String,
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

/// Maps known error types to the documented exit codes.
fn exit_code_for(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if let Some(e) = cause.downcast_ref::<RealizeError>() {
            return match e {
                RealizeError::Unrealizable => 4,
                RealizeError::HostExceedsCap { .. } => 2,
                RealizeError::ConstructionGap(_) => 3,
                _ => 1,
            };
        }
        if let Some(e) = cause.downcast_ref::<SolveError>() {
            return match e {
                SolveError::CapExceeded { .. } => 2,
                SolveError::SearchExhausted => 3,
            };
        }
        if let Some(e) = cause.downcast_ref::<CoalitionError>() {
            return match e {
                CoalitionError::Solve(SolveError::CapExceeded { .. }) => 2,
                CoalitionError::ConstructionGap { .. } => 3,
                _ => 1,
            };
        }
        if let Some(e) = cause.downcast_ref::<GraphError>() {
            if matches!(
                e,
                GraphError::OrderExceedsCap { .. } | GraphError::IsoCapExceeded { .. }
            ) {
                return 2;
            }
        }
        if let Some(e) = cause.downcast_ref::<TreeEnumError>() {
            if matches!(e, TreeEnumError::CapExceeded { .. }) {
                return 2;
            }
        }
        if let Some(e) = cause.downcast_ref::<SweepError>() {
            return match e {
                SweepError::CacheMismatch { .. } => 3,
                SweepError::Tree(TreeEnumError::CapExceeded { .. }) => 2,
                SweepError::Graph(GraphError::OrderExceedsCap { .. }) => 2,
                _ => 1,
            };
        }
        if cause.downcast_ref::<Inconsistency>().is_some() {
            return 3;
        }
    }
    1
}

/// A computed witness failed its own re-verification.
#[derive(Debug, thiserror::Error)]
#[error("internal inconsistency: {0}")]
struct Inconsistency(String);

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Compute {
            what,
            input,
            json,
            cap,
        } => cmd_compute(what, &input, json, cap),
        Command::Verify {
            input,
            partition,
            json,
        } => cmd_verify(&input, &partition, json),
        Command::Realize { input, cap } => cmd_realize(&input, cap),
        Command::Sweep {
            input,
            checks,
            jobs,
            cap,
            out,
            cache,
        } => cmd_sweep(&input, &checks, jobs, cap, &out, cache),
        Command::Gen { spec, out } => cmd_gen(&spec, &out),
    }
}

fn load_graph(input: &str) -> Result<Graph> {
    resolve_input(input, Graph::DEFAULT_CAP).with_context(|| format!("reading input {input:?}"))
}

fn solver_cap(g: &Graph, cap: Option<usize>) -> usize {
    cap.unwrap_or(if g.is_tree() {
        secoal::coalition::DEFAULT_TREE_SEC_CAP
    } else {
        secoal::coalition::DEFAULT_SEC_CAP
    })
}

fn cmd_compute(what: What, input: &str, json: bool, cap: Option<usize>) -> Result<ExitCode> {
    let g = load_graph(input)?;
    let cap = solver_cap(&g, cap);
    let guard = |n: usize| -> Result<()> {
        if n > cap {
            Err(SolveError::CapExceeded { n, cap }.into())
        } else {
            Ok(())
        }
    };
    let mut payload = json!({
        "input": input,
        "graph6": g.to_graph6(),
        "n": g.n(),
        "m": g.m(),
    });
    let body = payload.as_object_mut().expect("object");
    match what {
        What::Gamma | What::GammaS => {
            guard(g.n())?;
            let (what_name, value, witness, ok) = match what {
                What::Gamma => {
                    let (k, w) = domination_number(&g);
                    ("gamma", k, w, is_dominating(&g, w))
                }
                _ => {
                    let (k, w) = secure_domination_number(&g);
                    ("gamma_s", k, w, is_secure_dominating(&g, w))
                }
            };
            if !ok {
                return Err(
                    Inconsistency(format!("{what_name} witness fails its predicate")).into(),
                );
            }
            body.insert("what".into(), json!(what_name));
            body.insert("value".into(), json!(value));
            body.insert("witness_set".into(), json!(witness.to_vec()));
            if json {
                println!("{}", serde_json::to_string_pretty(&payload)?);
            } else {
                println!("{what_name}({g}) = {value}");
                println!("witness: {witness}");
            }
        }
        What::Sec | What::C => {
            let (what_name, value, witness) = match what {
                What::Sec => {
                    let (k, w) = sec_number_with_cap(&g, cap)?;
                    if !is_sec_partition(&g, &w)?.valid {
                        return Err(Inconsistency("sec witness fails verification".into()).into());
                    }
                    ("sec", k, w)
                }
                _ => {
                    let (k, w) = coalition_number_with_cap(&g, cap)?;
                    if !is_c_partition(&g, &w)? {
                        return Err(Inconsistency("c witness fails verification".into()).into());
                    }
                    ("c", k, w)
                }
            };
            body.insert("what".into(), json!(what_name));
            body.insert("value".into(), json!(value));
            body.insert(
                "witness_partition".into(),
                json!(witness
                    .parts()
                    .iter()
                    .map(|p| p.to_vec())
                    .collect::<Vec<_>>()),
            );
            if json {
                println!("{}", serde_json::to_string_pretty(&payload)?);
            } else {
                println!("{what_name}({g}) = {value}");
                println!("witness: {witness}");
            }
        }
        What::Classify => {
            let label = classify_family(&g);
            body.insert("what".into(), json!("classify"));
            body.insert("labels".into(), serde_json::to_value(&label.labels)?);
            body.insert("witnesses".into(), serde_json::to_value(&label.witnesses)?);
            body.insert(
                "predict_sec_equals_n".into(),
                json!(predict_sec_equals_n(&g)),
            );
            if g.is_tree() {
                let profile = tree_sec_profile(&g)?;
                body.insert("tree_profile".into(), serde_json::to_value(&profile)?);
            }
            if g.n() <= cap {
                let report = check_bounds(&g)?;
                body.insert("bounds".into(), serde_json::to_value(&report)?);
            }
            if json {
                println!("{}", serde_json::to_string_pretty(&payload)?);
            } else {
                println!("{g}");
                println!("labels: {:?}", label.labels);
                println!("predict SEC = n: {}", predict_sec_equals_n(&g));
                if let Some(profile) = body.get("tree_profile") {
                    println!("tree profile: {profile}");
                }
                if let Some(bounds) = body.get("bounds") {
                    println!(
                        "sec={} c={} gamma={} gamma_s={}",
                        bounds["sec"], bounds["c"], bounds["gamma"], bounds["gamma_s"]
                    );
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(input: &str, partition: &str, json: bool) -> Result<ExitCode> {
    let g = load_graph(input)?;
    let p = Partition::parse_spec(partition, g.n())?;
    let verdict = is_sec_partition(&g, &p)?;
    if json {
        let payload = json!({
            "input": input,
            "graph6": g.to_graph6(),
            "partition": p.parts().iter().map(|s| s.to_vec()).collect::<Vec<_>>(),
            "verdict": verdict,
            "is_c_partition": is_c_partition(&g, &p)?,
        });
        println!("{}", serde_json::to_string_pretty(&payload)?);
    } else {
        println!("{g} with partition {p}");
        println!(
            "sec-partition: {}",
            if verdict.valid { "valid" } else { "INVALID" }
        );
        for (i, status) in verdict.per_part.iter().enumerate() {
            println!("  part {i} {}: {}", p.parts()[i], render_status(status));
        }
        println!("c-partition: {}", is_c_partition(&g, &p)?);
    }
    Ok(ExitCode::SUCCESS)
}

fn render_status(status: &secoal::coalition::PartStatus) -> String {
    use secoal::coalition::{InvalidReason, PartStatus};
    match status {
        PartStatus::FullDegreeSingleton => "full-degree singleton".into(),
        PartStatus::CoalitionWith { partners } => format!("coalitions with parts {partners:?}"),
        PartStatus::Invalid { reason } => match reason {
            InvalidReason::SecureDominatingButNotFullSingleton => {
                "INVALID: secure dominating but not a full-degree singleton".into()
            }
            InvalidReason::NoCoalitionPartner { rejections } => {
                let parts: Vec<String> = rejections
                    .iter()
                    .map(|r| format!("{}: {:?}", r.other, r.cause))
                    .collect();
                format!("INVALID: no coalition partner ({})", parts.join("; "))
            }
        },
    }
}

fn cmd_realize(input: &str, cap: Option<usize>) -> Result<ExitCode> {
    let g = load_graph(input)?;
    let cap = cap.unwrap_or(Graph::DEFAULT_CAP);
    match realize_as_scg_with_cap(&g, cap) {
        Ok(realization) => {
            let export = RealizationExport::from(&realization);
            println!("{}", serde_json::to_string_pretty(&export)?);
            Ok(ExitCode::SUCCESS)
        }
        Err(RealizeError::ConstructionGap(gap)) => {
            // the structured gap report is the output; the exit code flags it
            println!("{}", serde_json::to_string_pretty(gap.as_ref())?);
            Err(RealizeError::ConstructionGap(gap).into())
        }
        Err(e) => Err(e.into()),
    }
}

fn cmd_sweep(
    input: &str,
    checks: &str,
    jobs: Option<usize>,
    cap: Option<usize>,
    out: &PathBuf,
    cache: Option<PathBuf>,
) -> Result<ExitCode> {
    let corpus = resolve_corpus(input)?;
    let mut cfg = SweepConfig {
        checks: parse_checks(checks)?,
        ..SweepConfig::default()
    };
    if let Some(jobs) = jobs {
        cfg.jobs = jobs.max(1);
    }
    if let Some(cap) = cap {
        cfg.sec_cap = cap;
    }
    let cache_path = std::env::var_os("SECOAL_CACHE")
        .map(PathBuf::from)
        .or(cache);
    let mut cache_store = match &cache_path {
        Some(path) => Some(SweepCache::open(path, &cfg)?),
        None => None,
    };
    let outcome = run_sweep(&corpus, &cfg, cache_store.as_mut())?;
    std::fs::write(out, records_to_jsonl(&outcome.records))
        .with_context(|| format!("writing records to {}", out.display()))?;
    println!("{}", serde_json::to_string_pretty(&outcome.report)?);
    Ok(ExitCode::SUCCESS)
}

fn cmd_gen(spec: &str, out: &PathBuf) -> Result<ExitCode> {
    let corpus = corpus::generate_corpus(spec)?;
    std::fs::write(out, corpus::corpus_text(&corpus.graphs))
        .with_context(|| format!("writing corpus to {}", out.display()))?;
    println!(
        "{} graphs written to {} (digest {})",
        corpus.graphs.len(),
        out.display(),
        corpus.digest
    );
    Ok(ExitCode::SUCCESS)
}

#[cfg(test)]
mod tests {
    use super::*;
    use anyhow::anyhow;

    #[test]
    fn cli_parses() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn exit_codes_map_known_errors() {
        assert_eq!(exit_code_for(&anyhow!(RealizeError::Unrealizable)), 4);
        assert_eq!(
            exit_code_for(&anyhow!(SolveError::CapExceeded { n: 12, cap: 9 })),
            2
        );
        assert_eq!(exit_code_for(&anyhow!(Inconsistency("x".into()))), 3);
        assert_eq!(exit_code_for(&anyhow!("unknown")), 1);
    }
}
