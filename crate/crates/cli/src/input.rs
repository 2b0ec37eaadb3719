//! Locating and decoding inputs: single files, directories, multi-line graph6
//! files and inline family specs.

use std::fs;
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use estrada_core::graph::{generate, parse_edge_list, parse_graph6, Family};
use estrada_core::matrix::parse_matrix_market;
use estrada_core::report::Report;
use estrada_core::{Graph, SymNonnegMatrix};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[value(name = "edge-list", alias = "el")]
    EdgeList,
    #[value(name = "graph6", alias = "g6")]
    Graph6,
    #[value(name = "matrix-market", alias = "mtx")]
    MatrixMarket,
    /// A JSON report written by `bounds --json` (verify only).
    #[value(name = "report")]
    Report,
}

impl Format {
    fn from_extension(path: &Path) -> Option<Format> {
        match path.extension()?.to_str()?.to_ascii_lowercase().as_str() {
            "el" | "edges" | "txt" => Some(Format::EdgeList),
            "g6" | "graph6" => Some(Format::Graph6),
            "mtx" | "mm" => Some(Format::MatrixMarket),
            "json" => Some(Format::Report),
            _ => None,
        }
    }
}

pub enum Payload {
    Graph(Graph),
    Matrix(SymNonnegMatrix),
    Report(Box<Report>),
}

/// One decoded input, or the reason it could not be decoded.
pub struct Item {
    pub name: String,
    pub payload: Result<Payload, CliError>,
}

/// Family spec as written on the command line: a name followed by its
/// parameters. Erdos-Renyi draws use `seed` (default 0).
pub fn parse_family(name: &str, params: &[String], seed: Option<u64>) -> Result<Family, CliError> {
    let want = |count: usize| {
        if params.len() == count {
            Ok(())
        } else {
            Err(CliError::Input(format!(
                "family `{name}` takes {count} parameter(s), got {}",
                params.len()
            )))
        }
    };
    let int = |i: usize| {
        params[i]
            .parse::<usize>()
            .map_err(|_| CliError::Input(format!("`{}` is not a vertex count", params[i])))
    };
    let family = match name {
        "complete" | "k" => {
            want(1)?;
            Family::Complete(int(0)?)
        }
        "path" | "p" => {
            want(1)?;
            Family::Path(int(0)?)
        }
        "cycle" | "c" => {
            want(1)?;
            Family::Cycle(int(0)?)
        }
        "star" => {
            want(1)?;
            Family::Star(int(0)?)
        }
        "complete-bipartite" | "kpq" => {
            want(2)?;
            Family::CompleteBipartite(int(0)?, int(1)?)
        }
        "erdos-renyi" | "gnp" => {
            want(2)?;
            let p = params[1]
                .parse::<f64>()
                .map_err(|_| CliError::Input(format!("`{}` is not a probability", params[1])))?;
            Family::ErdosRenyi {
                n: int(0)?,
                p,
                seed: seed.unwrap_or(0),
            }
        }
        other => return Err(CliError::Input(format!("unknown graph family `{other}`"))),
    };
    Ok(family)
}

/// `path:4`, `complete-bipartite:2,3`, `erdos-renyi:20,0.2`.
fn parse_inline(spec: &str, seed: Option<u64>) -> Option<Result<Graph, CliError>> {
    let (name, rest) = spec.split_once(':')?;
    let params: Vec<String> = rest.split(',').map(|s| s.trim().to_string()).collect();
    Some(
        parse_family(name, &params, seed)
            .and_then(|f| generate(f).map_err(|e| CliError::Input(e.to_string()))),
    )
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(e.to_string()))
}

fn decode(text: &str, format: Format) -> Result<Payload, CliError> {
    let bad = |e: estrada_core::Error| CliError::Input(e.to_string());
    match format {
        Format::EdgeList => parse_edge_list(text).map(Payload::Graph).map_err(bad),
        Format::Graph6 => parse_graph6(text.trim()).map(Payload::Graph).map_err(bad),
        Format::MatrixMarket => parse_matrix_market(text).map(Payload::Matrix).map_err(bad),
        Format::Report => Report::from_json(text)
            .map(|r| Payload::Report(Box::new(r)))
            .map_err(|e| CliError::Input(format!("not a report: {e}"))),
    }
}

fn expand_file(path: &Path, forced: Option<Format>, items: &mut Vec<Item>) {
    let name = path.display().to_string();
    let Some(format) = forced.or_else(|| Format::from_extension(path)) else {
        items.push(Item {
            name,
            payload: Err(CliError::Input("unknown extension, pass --format".into())),
        });
        return;
    };
    let text = match read(path) {
        Ok(t) => t,
        Err(e) => {
            items.push(Item { name, payload: Err(e) });
            return;
        }
    };
    if format == Format::Graph6 {
        let lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .collect();
        if lines.len() > 1 {
            for (i, line) in lines {
                items.push(Item {
                    name: format!("{name}:{}", i + 1),
                    payload: decode(line, format),
                });
            }
            return;
        }
    }
    items.push(Item {
        name,
        payload: decode(&text, format),
    });
}

/// Expands every argument into items, in argument order. Directories are
/// listed by file name; files without a recognised extension are skipped
/// there unless `--format` is given.
pub fn collect(args: &[String], forced: Option<Format>, seed: Option<u64>) -> Vec<Item> {
    let mut items = Vec::new();
    for arg in args {
        let path = PathBuf::from(arg);
        if path.is_dir() {
            let mut entries: Vec<PathBuf> = match fs::read_dir(&path) {
                Ok(rd) => rd.filter_map(|e| e.ok().map(|e| e.path())).collect(),
                Err(e) => {
                    items.push(Item {
                        name: arg.clone(),
                        payload: Err(CliError::Input(e.to_string())),
                    });
                    continue;
                }
            };
            entries.sort();
            for entry in entries {
                if entry.is_file() && (forced.is_some() || Format::from_extension(&entry).is_some()) {
                    expand_file(&entry, forced, &mut items);
                }
            }
        } else if path.exists() {
            expand_file(&path, forced, &mut items);
        } else if let Some(generated) = parse_inline(arg, seed) {
            items.push(Item {
                name: arg.clone(),
                payload: generated.map(Payload::Graph),
            });
        } else {
            items.push(Item {
                name: arg.clone(),
                payload: Err(CliError::Input("no such file or inline spec".into())),
            });
        }
    }
    items
}
