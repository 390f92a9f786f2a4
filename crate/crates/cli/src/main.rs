use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ncg_core::analysis::build_ncg;
use ncg_core::cayley;
use ncg_core::families::{build, family_catalog, parse_spec, BuiltGroup};
use ncg_core::graph::DEFAULT_NODE_BUDGET;
use ncg_core::group::FiniteGroup;
use ncg_core::report::{analyze, AnalysisReport, AnalyzeOptions};
use ncg_core::verify::{all_passed, run_verification, VerifyConfig};

/// Analyze finite groups and their non-commuting graphs.
///
/// Group specs name a family instance, e.g. "Q:8", "D:6", "S:4", "H:3",
/// "C:12", or a direct product like "Q:16xC:3". Note that D:n is the
/// dihedral group of ORDER 2n (n rotations and n reflections).
#[derive(Parser)]
#[command(name = "ncg", version, about, verbatim_doc_comment)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// JSON: analysis report (analyze/import) or Cayley table (export)
    Json,
    /// Graphviz DOT rendering of the graph
    Dot,
    /// Edge-list CSV of the graph
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one or more groups and emit JSON reports
    Analyze {
        /// Group specs, e.g. Q:8 D:6 Q:16xC:3
        #[arg(required = true)]
        specs: Vec<String>,
        /// Largest group order that will be materialized as a table
        #[arg(long, default_value_t = 5000)]
        max_order: u64,
        /// Node budget for the clique branch-and-bound search
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        node_budget: u64,
        /// Write output here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the built-in verification suite (one line per claim)
    Verify {
        #[arg(long, default_value_t = 5000)]
        max_order: u64,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        node_budget: u64,
        /// Seed for the randomized property claims
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Cayley-table JSON files to inject, unvalidated, into the
        /// equivalence claim (harness self-test)
        #[arg(long)]
        inject: Vec<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export a group: its non-commuting graph (dot/csv, default dot)
    /// or its Cayley table (json)
    Export {
        spec: String,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        /// Export the complement graph instead (dot/csv only)
        #[arg(long)]
        complement: bool,
        #[arg(long, default_value_t = 5000)]
        max_order: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Import a Cayley-table JSON file, validate it, and analyze it
    Import {
        path: PathBuf,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        node_budget: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the built-in group families and their parameter constraints
    Families,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn report_json(reports: &[AnalysisReport]) -> String {
    if reports.len() == 1 {
        serde_json::to_string_pretty(&reports[0]).expect("serializable")
    } else {
        serde_json::to_string_pretty(reports).expect("serializable")
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Analyze {
            specs,
            max_order,
            node_budget,
            out,
        } => {
            let opts = AnalyzeOptions {
                node_budget,
                ..AnalyzeOptions::default()
            };
            let mut reports = Vec::new();
            for text in &specs {
                let spec = parse_spec(text).map_err(|e| format!("{text}: {e}"))?;
                let built = build(&spec, max_order).map_err(|e| format!("{text}: {e}"))?;
                reports.push(analyze(built, &opts));
            }
            emit(&report_json(&reports), &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            max_order,
            node_budget,
            seed,
            inject,
            out,
        } => {
            let mut injected = Vec::new();
            for path in &inject {
                let text =
                    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
                let file: cayley::CayleyTableFile = serde_json::from_str(&text)
                    .map_err(|e| format!("{}: malformed JSON: {e}", path.display()))?;
                injected.push(FiniteGroup::from_table_unchecked(
                    file.order,
                    file.table,
                    format!("injected:{}", path.display()),
                ));
            }
            let cfg = VerifyConfig {
                max_order,
                node_budget,
                seed,
                injected,
            };
            let results = run_verification(&cfg);
            let mut lines = String::new();
            for r in &results {
                lines.push_str(&format!(
                    "{:<4} {:2}. {:<45} [{:>8.1?}]{}{}\n",
                    r.status.to_string(),
                    r.id,
                    r.name,
                    r.elapsed,
                    if r.detail.is_empty() { "" } else { " " },
                    r.detail
                ));
            }
            let passed = all_passed(&results);
            lines.push_str(if passed {
                "all claims passed\n"
            } else {
                "VERIFICATION FAILED\n"
            });
            match &out {
                Some(_) => emit(&lines, &out)?,
                None => print!("{lines}"),
            }
            Ok(if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Export {
            spec: text,
            format,
            complement,
            max_order,
            out,
        } => {
            let spec = parse_spec(&text).map_err(|e| format!("{text}: {e}"))?;
            let built = build(&spec, max_order).map_err(|e| format!("{text}: {e}"))?;
            let g = match built {
                BuiltGroup::Table(g) => g,
                BuiltGroup::Lazy(_) => {
                    return Err(format!("{text}: too large to materialize for export"))
                }
            };
            let rendered = spec.render();
            let body = match format {
                Format::Json => {
                    if complement {
                        return Err("--complement applies only to dot/csv output".into());
                    }
                    cayley::export_json(&g)
                }
                Format::Dot | Format::Csv => {
                    let ctx = build_ncg(g);
                    let graph = if complement {
                        ctx.graph().complement()
                    } else {
                        ctx.graph().clone()
                    };
                    match format {
                        Format::Dot => graph.to_dot(&rendered),
                        _ => graph.to_edge_csv(),
                    }
                }
            };
            emit(&body, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Import {
            path,
            node_budget,
            out,
        } => {
            let text =
                fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
            let (g, assoc_checked) =
                cayley::import_json(&text, format!("imported:{}", path.display()))
                    .map_err(|e| format!("{}: {e}", path.display()))?;
            let opts = AnalyzeOptions {
                node_budget,
                ..AnalyzeOptions::default()
            };
            let mut report = analyze(BuiltGroup::Table(g), &opts);
            report.skipped_associativity_check = !assoc_checked;
            emit(&report_json(&[report]), &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Families => {
            for f in family_catalog() {
                println!("{}:<param>  {}  ({})", f.tag, f.description, f.constraints);
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
