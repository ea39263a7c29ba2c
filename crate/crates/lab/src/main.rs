use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand};
use knotlab::catalog::{catalog, run_entry};
use knotlab::input::parse_input;
use knotlab::report::{invariants, render_text};
use knotlab::suites::{self, SUITES};
use knotlab::Budgets;
use knotlab_core::diagram::random::{almost_positive_diagram, positive_braid, positive_diagram, signed_diagram, special_alternating_diagram};
use knotlab_core::diagram::Diagram;
use knotlab_core::evgraph::random_fiber_candidate;
use knotlab_core::skein::SkeinConfig;

#[derive(Parser)]
#[command(name = "lab", about = "Link polynomials, Seifert graphs and theorem checks")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Largest crossing number for the bracket state sum.
    #[arg(long, global = true, default_value_t = knotlab_core::bracket::DEFAULT_STATE_CAP)]
    state_cap: usize,
    /// Node budget of the skein resolution tree.
    #[arg(long, global = true, default_value_t = SkeinConfig::default().node_budget)]
    skein_budget: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Invariant report for a braid word, PD code, pretzel, catalog label or file.
    Invariants { input: String },
    /// List the catalog; with --run, check every entry against its cited values.
    Catalog {
        #[arg(long)]
        run: bool,
    },
    /// Run a verification suite (or `all`).
    Verify {
        suite: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        /// Largest n for the capo suite.
        #[arg(long, default_value_t = 5)]
        n_max: usize,
    },
    /// Print a random diagram as a PD code (a braid word for `positive-braid`).
    Generate {
        /// positive, signed, almost-positive, almost-positive-parallel,
        /// special-alternating, positive-braid or fiber-candidate
        kind: String,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        crossings: usize,
    },
}

// a closed pipe (`lab ... | head`) is not an error
macro_rules! outln {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout().lock(), $($t)*);
    }};
}

macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = write!(std::io::stdout().lock(), $($t)*);
    }};
}

fn print_json<T: serde::Serialize>(v: &T) -> Result<()> {
    outln!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    let budgets = Budgets { state_cap: cli.state_cap, skein: SkeinConfig { node_budget: cli.skein_budget, ..SkeinConfig::default() } };
    match cli.cmd {
        Cmd::Invariants { input } => {
            let r = invariants(&parse_input(&input)?, &budgets)?;
            if cli.json {
                print_json(&r)?;
            } else {
                out!("{}", render_text(&r));
            }
            Ok(r.failures() == 0)
        }
        Cmd::Catalog { run: false } => {
            let c = catalog();
            if cli.json {
                print_json(&serde_json::json!({ "schema": 1, "entries": c }))?;
            } else {
                for e in &c {
                    outln!("{:<10} {}  ({})", e.label, e.input, e.note);
                }
            }
            Ok(true)
        }
        Cmd::Catalog { run: true } => {
            let results = catalog().iter().map(|e| run_entry(e, &budgets)).collect::<Result<Vec<_>>>()?;
            let ok = results.iter().all(|r| r.pass);
            if cli.json {
                print_json(&serde_json::json!({ "schema": 1, "pass": ok, "results": results }))?;
            } else {
                for r in &results {
                    outln!("{} {:<10} c = {:<3} chirality {:<9} {} ms", if r.pass { "pass" } else { "FAIL" }, r.label, r.crossings, r.chirality.as_deref().unwrap_or("-"), r.millis);
                    for c in &r.checks {
                        outln!("       {:?} expected {} computed {}  [{}]", c.quantity, c.expected, c.computed.map_or("-".into(), |v| v.to_string()), c.citation);
                    }
                }
            }
            Ok(ok)
        }
        Cmd::Verify { suite, seed, trials, n_max } => {
            if trials == 0 {
                bail!("--trials must be at least 1");
            }
            let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite.as_str()] };
            let results = names.iter().map(|s| suites::verify(s, seed, trials, n_max, &budgets)).collect::<Result<Vec<_>>>()?;
            if cli.json {
                if results.len() == 1 {
                    print_json(&results[0])?;
                } else {
                    print_json(&results)?;
                }
            } else {
                for r in &results {
                    out!("{}", suites::render_text(r));
                }
            }
            Ok(results.iter().all(|r| r.ok()))
        }
        Cmd::Generate { kind, seed, crossings } => {
            let c = crossings;
            let out = match kind.as_str() {
                "positive-braid" => positive_braid(seed, 3, c.max(4))?.to_string(),
                k => {
                    let d: Diagram = match k {
                        "positive" => positive_diagram(seed, c)?,
                        "signed" => signed_diagram(seed, c)?,
                        "almost-positive" => almost_positive_diagram(seed, c, false)?,
                        "almost-positive-parallel" => almost_positive_diagram(seed, c, true)?,
                        "special-alternating" => special_alternating_diagram(seed, c)?,
                        "fiber-candidate" => random_fiber_candidate(seed)?,
                        other => bail!("unknown kind {other:?}"),
                    };
                    d.to_pd()
                }
            };
            if cli.json {
                print_json(&serde_json::json!({ "schema": 1, "kind": kind, "seed": seed, "diagram": out }))?;
            } else {
                outln!("{out}");
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
