//! Report assembly and the CSV, JSON and human-readable renderings.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::bounds::{
    bound_table_graph, bound_table_matrix, equality_certificate, BoundTable, EqualityCertificate,
    SequenceKind,
};
use crate::error::Result;
use crate::graph::{classify, Graph, GraphClassification};
use crate::matrix::SymNonnegMatrix;

pub const CSV_HEADER: &str = "k,seq,bound_general,bound_bipartite,bound_matrix,exact_ee,gap";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InputKind {
    Graph,
    Matrix,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StageTiming {
    pub stage: String,
    pub ms: f64,
}

/// Everything computed for one input.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub input: String,
    pub kind: InputKind,
    pub classification: Option<GraphClassification>,
    pub table: BoundTable,
    pub certificate: EqualityCertificate,
    /// Wall-clock milliseconds per stage. Left out unless requested, since it
    /// would make otherwise identical runs differ.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<Vec<StageTiming>>,
}

struct Stopwatch {
    enabled: bool,
    last: Instant,
    stages: Vec<StageTiming>,
}

impl Stopwatch {
    fn new(enabled: bool) -> Self {
        Stopwatch {
            enabled,
            last: Instant::now(),
            stages: Vec::new(),
        }
    }

    fn lap(&mut self, stage: &str) {
        let now = Instant::now();
        self.stages.push(StageTiming {
            stage: stage.to_string(),
            ms: (now - self.last).as_secs_f64() * 1e3,
        });
        self.last = now;
    }

    fn finish(self) -> Option<Vec<StageTiming>> {
        self.enabled.then_some(self.stages)
    }
}

impl Report {
    /// Classification, bound table and equality certificate of a connected graph.
    pub fn for_graph(input: &str, g: &Graph, kmax: usize, tol: f64, timed: bool) -> Result<Report> {
        let mut clock = Stopwatch::new(timed);
        let classification = classify(g);
        clock.lap("classify");
        let table = bound_table_graph(g, kmax, tol)?;
        clock.lap("bounds");
        let certificate = equality_certificate(g, &table)?;
        clock.lap("certificate");
        Ok(Report {
            input: input.to_string(),
            kind: InputKind::Graph,
            classification: Some(classification),
            table,
            certificate,
            timing: clock.finish(),
        })
    }

    pub fn for_matrix(
        input: &str,
        r: &SymNonnegMatrix,
        kmax: usize,
        tol: f64,
        timed: bool,
    ) -> Result<Report> {
        let mut clock = Stopwatch::new(timed);
        let table = bound_table_matrix(r, kmax, tol)?;
        clock.lap("bounds");
        let certificate = equality_certificate(r, &table)?;
        clock.lap("certificate");
        Ok(Report {
            input: input.to_string(),
            kind: InputKind::Matrix,
            classification: None,
            table,
            certificate,
            timing: clock.finish(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Report> {
        serde_json::from_str(text)
    }
}

/// 17 significant digits, enough to round-trip any `f64`.
fn full(x: f64) -> String {
    format!("{x:.16e}")
}

/// One line per row under [`CSV_HEADER`]; absent columns are left empty.
pub fn to_csv(t: &BoundTable) -> String {
    let opt = |x: Option<f64>| x.map(full).unwrap_or_default();
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in &t.rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.k,
            full(r.seq_value),
            opt(r.bound_general),
            opt(r.bound_bipartite),
            opt(r.bound_matrix),
            full(t.exact_ee),
            full(r.gap)
        ));
    }
    out
}

/// `x` rounded to `digits` significant digits, switching to exponent form
/// outside `[1e-4, 1e6)`.
pub fn significant(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i32;
    if (-4..6).contains(&exp) {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{x:.*e}", digits - 1)
    }
}

/// Fixed-width table with 6 significant digits, in the spirit of the
/// `J^k` / `C^k` comparison tables.
pub fn to_human(report: &Report, color: bool) -> String {
    let t = &report.table;
    let (bold, reset) = if color { ("\x1b[1m", "\x1b[0m") } else { ("", "") };
    let seq_label = match t.sequence {
        SequenceKind::GammaGraph => "gamma",
        SequenceKind::XiMatrix => "xi",
    };
    let bipartite = t.has_bipartite_column();
    let mut out = String::new();
    out.push_str(&format!("{bold}{}{reset}\n", report.input));
    match (&report.classification, t.sequence) {
        (Some(c), _) => {
            out.push_str(&format!("  n = {}, classes: {c}\n", t.n_or_ell));
        }
        (None, _) => {
            out.push_str(&format!(
                "  order = {}, trace = {}{}\n",
                t.n_or_ell,
                significant(t.trace, 6),
                if t.reducible { ", reducible (warning)" } else { "" }
            ));
        }
    }
    out.push_str(&format!(
        "  EE = {}, spectral radius = {}, limit bound = {}\n",
        significant(t.exact_ee, 6),
        significant(t.spectral_radius, 6),
        significant(t.limit_bound, 6)
    ));
    if let Some(b) = t.baseline_2m_over_n {
        out.push_str(&format!("  baseline at 2m/n = {}\n", significant(b, 6)));
    }
    out.push_str(&format!("  {}\n", t.terminated_by));

    let mut header = vec!["k", seq_label, "J^k"];
    if bipartite {
        header.push("C^k");
    }
    header.extend(["EE", "gap"]);
    let fmt_row = |cells: &[String]| {
        let mut line = format!("{:>5}", cells[0]);
        for c in &cells[1..] {
            line.push_str(&format!(" {c:>13}"));
        }
        line
    };
    let header: Vec<String> = header.into_iter().map(String::from).collect();
    out.push_str(&format!("{bold}{}{reset}\n", fmt_row(&header)));
    for r in &t.rows {
        let mut cells = vec![r.k.to_string(), significant(r.seq_value, 6)];
        cells.push(significant(r.bound_general.or(r.bound_matrix).unwrap_or(f64::NAN), 6));
        if let Some(c) = r.bound_bipartite {
            cells.push(significant(c, 6));
        }
        cells.push(significant(t.exact_ee, 6));
        cells.push(significant(r.gap, 6));
        out.push_str(&fmt_row(&cells));
        out.push('\n');
    }
    let c = &report.certificate;
    out.push_str(&format!(
        "  {}: {} ({}), gap {}\n",
        c.theorem,
        if c.holds_with_equality { "equality" } else { "strict" },
        c.witness,
        significant(c.numeric_gap, 6)
    ));
    if let Some(d) = &c.diagnostic {
        out.push_str(&format!("  warning: {d}\n"));
    }
    out
}
