use std::fs;
use std::io::{self, IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use estrada_core::graph::{classify, generate, to_edge_list, to_graph6};
use estrada_core::matrix::{adjacency_matrix, to_matrix_market};
use estrada_core::plot::to_svg;
use estrada_core::report::{to_csv, to_human, Report, CSV_HEADER};
use estrada_core::verify::{verify_graph, verify_matrix, verify_report, Verdict};
use estrada_core::{DEFAULT_KMAX, DEFAULT_TOL};
use rayon::prelude::*;
use serde::Serialize;

mod input;

use input::{collect, parse_family, Format, Item, Payload};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Disconnected(String),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Failed(_) => 1,
            CliError::Input(_) => 2,
            CliError::Disconnected(_) => 3,
        }
    }
}

impl From<estrada_core::Error> for CliError {
    fn from(e: estrada_core::Error) -> Self {
        use estrada_core::Error as E;
        match e {
            E::Disconnected { .. } => CliError::Disconnected(e.to_string()),
            E::NoConvergence { .. } => CliError::Failed(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(name = "estrada", version, about = "Estrada index and its walk-count lower bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated graph as an edge list, graph6 or Matrix Market file
    Generate {
        /// complete, path, cycle, star, complete-bipartite or erdos-renyi
        family: String,
        /// Family parameters, e.g. `2 3` or `20 0.2`
        params: Vec<String>,
        #[arg(long, value_enum, default_value = "edge-list")]
        format: Format,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Bound table with exact index, baseline and equality certificate
    Bounds {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, conflicts_with_all = ["csv", "svg"])]
        json: bool,
        #[arg(long, conflicts_with = "svg")]
        csv: bool,
        #[arg(long)]
        svg: bool,
        /// Include per-stage wall-clock milliseconds
        #[arg(long)]
        timing: bool,
    },
    /// Degree-based class membership with witnesses
    Classify {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long)]
        json: bool,
    },
    /// Check every invariant on the inputs; exit 1 on any violation
    Verify {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long)]
        json: bool,
    },
    /// SVG convergence chart of a single input
    Plot {
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Args)]
struct RunArgs {
    /// Files, directories, multi-line graph6 files or inline specs such as `path:4`
    #[arg(required = true)]
    inputs: Vec<String>,
    #[arg(long, default_value_t = DEFAULT_KMAX)]
    kmax: usize,
    #[arg(long, default_value_t = DEFAULT_TOL, allow_negative_numbers = true)]
    tol: f64,
    /// Input format; inferred from the extension when omitted
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Seed for inline erdos-renyi specs
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

impl RunArgs {
    fn check(&self) -> Result<(), CliError> {
        if !(self.tol > 0.0) || !self.tol.is_finite() {
            return Err(CliError::Input(format!("--tol must be positive, got {}", self.tol)));
        }
        Ok(())
    }

    fn items(&self) -> Vec<Item> {
        collect(&self.inputs, self.format, self.seed)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Generate {
            family,
            params,
            format,
            seed,
            out,
        } => cmd_generate(&family, &params, format, seed, out),
        Command::Bounds {
            run,
            json,
            csv,
            svg,
            timing,
        } => {
            let output = if json {
                Output::Json
            } else if csv {
                Output::Csv
            } else if svg {
                Output::Svg
            } else {
                Output::Table
            };
            cmd_bounds(&run, output, timing)
        }
        Command::Classify { run, json } => cmd_classify(&run, json),
        Command::Verify { run, json } => cmd_verify(&run, json),
        Command::Plot { run } => cmd_bounds(&run, Output::Svg, false),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("estrada: {e}");
            ExitCode::from(e.code())
        }
    }
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = io::stdout().lock();
            // a closed pipe is not worth a failure code
            let _ = stdout.write_all(text.as_bytes());
            Ok(())
        }
    }
}

fn use_color(out: Option<&PathBuf>) -> bool {
    out.is_none()
        && std::env::var_os("NO_COLOR").is_none_or(|v| v.is_empty())
        && io::stdout().is_terminal()
}

/// Reports the failures on stderr and folds them into one exit code; the
/// highest code wins.
fn worst(errors: &[(String, CliError)]) -> u8 {
    let mut code = 0;
    for (name, e) in errors {
        eprintln!("estrada: {name}: {e}");
        code = code.max(e.code());
    }
    code
}

fn cmd_generate(
    family: &str,
    params: &[String],
    format: Format,
    seed: Option<u64>,
    out: Option<PathBuf>,
) -> Result<u8, CliError> {
    let g = generate(parse_family(family, params, seed)?)?;
    let text = match format {
        Format::EdgeList => to_edge_list(&g),
        Format::Graph6 => to_graph6(&g) + "\n",
        Format::MatrixMarket => to_matrix_market(&adjacency_matrix(&g)),
        Format::Report => return Err(CliError::Input("generate writes graphs, not reports".into())),
    };
    emit(out.as_ref(), &text)?;
    Ok(0)
}

#[derive(Clone, Copy, PartialEq)]
enum Output {
    Table,
    Json,
    Csv,
    Svg,
}

fn build_report(item: &Item, run: &RunArgs, timed: bool) -> Result<Report, CliError> {
    match &item.payload {
        Err(e) => Err(CliError::Input(e.to_string())),
        Ok(Payload::Graph(g)) => Ok(Report::for_graph(&item.name, g, run.kmax, run.tol, timed)?),
        Ok(Payload::Matrix(r)) => Ok(Report::for_matrix(&item.name, r, run.kmax, run.tol, timed)?),
        Ok(Payload::Report(_)) => Err(CliError::Input("a stored report only works with verify".into())),
    }
}

fn cmd_bounds(run: &RunArgs, output: Output, timed: bool) -> Result<u8, CliError> {
    run.check()?;
    let items = run.items();
    if output == Output::Svg && items.len() != 1 {
        return Err(CliError::Input(format!(
            "an SVG chart takes exactly one input, got {}",
            items.len()
        )));
    }
    let results: Vec<Result<Report, CliError>> =
        items.par_iter().map(|item| build_report(item, run, timed)).collect();
    let mut reports = Vec::new();
    let mut errors = Vec::new();
    for (item, res) in items.iter().zip(results) {
        match res {
            Ok(r) => reports.push(r),
            Err(e) => errors.push((item.name.clone(), e)),
        }
    }
    let batch = items.len() > 1;
    let text = match output {
        Output::Table => {
            let color = use_color(run.out.as_ref());
            let mut parts = Vec::new();
            for r in &reports {
                let mut part = to_human(r, color);
                if let Some(t) = &r.timing {
                    let stages: Vec<String> =
                        t.iter().map(|s| format!("{} {:.3} ms", s.stage, s.ms)).collect();
                    part.push_str(&format!("  timing: {}\n", stages.join(", ")));
                }
                parts.push(part);
            }
            parts.join("\n")
        }
        Output::Json if batch => json(&reports),
        Output::Json => reports.first().map(|r| r.to_json() + "\n").unwrap_or_default(),
        Output::Csv if batch => {
            let mut text = format!("input,{CSV_HEADER}\n");
            for r in &reports {
                for line in to_csv(&r.table).lines().skip(1) {
                    text.push_str(&format!("{},{line}\n", csv_field(&r.input)));
                }
            }
            text
        }
        Output::Csv => reports.first().map(|r| to_csv(&r.table)).unwrap_or_default(),
        Output::Svg => reports
            .first()
            .map(|r| to_svg(&r.table, &r.input))
            .unwrap_or_default(),
    };
    if !reports.is_empty() {
        emit(run.out.as_ref(), &text)?;
    }
    Ok(worst(&errors))
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[derive(Serialize)]
struct Classified<'a> {
    input: &'a str,
    classification: estrada_core::GraphClassification,
}

fn cmd_classify(run: &RunArgs, as_json: bool) -> Result<u8, CliError> {
    let items = run.items();
    let batch = items.len() > 1;
    let mut done = Vec::new();
    let mut errors = Vec::new();
    for item in &items {
        match &item.payload {
            Ok(Payload::Graph(g)) => done.push(Classified {
                input: &item.name,
                classification: classify(g),
            }),
            Ok(_) => errors.push((item.name.clone(), CliError::Input("classify needs a graph".into()))),
            Err(e) => errors.push((item.name.clone(), CliError::Input(e.to_string()))),
        }
    }
    let text = if as_json {
        if batch {
            json(&done)
        } else {
            done.first().map(|c| json(&c.classification)).unwrap_or_default()
        }
    } else {
        let mut text = String::new();
        for c in &done {
            if batch {
                text.push_str(&format!("{}: ", c.input));
            }
            text.push_str(&format!("{}\n", c.classification));
        }
        text
    };
    if !done.is_empty() {
        emit(run.out.as_ref(), &text)?;
    }
    Ok(worst(&errors))
}

#[derive(Serialize)]
struct Checked<'a> {
    input: &'a str,
    passed: bool,
    #[serde(flatten)]
    verdict: Verdict,
}

fn check_item(item: &Item, run: &RunArgs) -> Result<Verdict, CliError> {
    match &item.payload {
        Err(e) => Err(CliError::Input(e.to_string())),
        Ok(Payload::Graph(g)) => Ok(verify_graph(g, run.kmax, run.tol)?),
        Ok(Payload::Matrix(r)) => Ok(verify_matrix(r, run.kmax, run.tol)?),
        Ok(Payload::Report(r)) => Ok(verify_report(r)),
    }
}

fn cmd_verify(run: &RunArgs, as_json: bool) -> Result<u8, CliError> {
    run.check()?;
    let items = run.items();
    let results: Vec<Result<Verdict, CliError>> =
        items.par_iter().map(|item| check_item(item, run)).collect();
    let mut checked = Vec::new();
    let mut errors = Vec::new();
    for (item, res) in items.iter().zip(results) {
        match res {
            Ok(v) => checked.push(Checked {
                input: &item.name,
                passed: v.passed(),
                verdict: v,
            }),
            Err(e) => errors.push((item.name.clone(), e)),
        }
    }
    let failed = checked.iter().filter(|c| !c.passed).count();
    let text = if as_json {
        json(&checked)
    } else {
        let mut text = String::new();
        for c in &checked {
            text.push_str(&format!("{} {}\n", if c.passed { "ok  " } else { "FAIL" }, c.input));
            for v in &c.verdict.violations {
                text.push_str(&format!("    violated {v}\n"));
            }
            for note in &c.verdict.notes {
                text.push_str(&format!("    note: {note}\n"));
            }
        }
        text.push_str(&format!(
            "{} checked, {} failed, {} unreadable\n",
            checked.len(),
            failed,
            errors.len()
        ));
        text
    };
    emit(run.out.as_ref(), &text)?;
    let code = worst(&errors);
    Ok(if failed > 0 { code.max(1) } else { code })
}
