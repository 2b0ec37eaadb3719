//! Increasing lower-bound ladders for the Estrada index.
//!
//! Both ladders run the same normalized power iteration from the all-ones
//! vector: `v_0 = 1/√n`, `w_k = M v_k`, value `‖w_k‖`, `v_{k+1} = w_k / ‖w_k‖`.
//! With `M = A(G)` the values are `γ(k) = ‖A^{k+1} 1‖ / ‖A^k 1‖`, the walk-count
//! ratio `sqrt(Σ d_{k+1}² / Σ d_k²)`, computed without overflow. With a
//! nonnegative symmetric `M = R` they are `ξ(k)`. Both sequences increase to
//! the spectral radius, and pushing them through the increasing maps
//!
//! ```text
//! general    x ↦ e^x + n - 1 - x
//! bipartite  x ↦ 2 cosh x + n - 2
//! matrix     x ↦ e^x + ℓ - 1 + Tr(R) - x
//! ```
//!
//! gives lower bounds on `EE` that increase with `k`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{euclidean, is_bipartite, Graph};
use crate::matrix::{adjacency_matrix, SymNonnegMatrix};
use crate::spectral::{eigenvalues, estrada_index};

/// Absolute gap below which a bound is reported as attained.
pub const EQUALITY_TOL: f64 = 1e-6;
/// Relative floor on that threshold: for large `EE` the exact index itself
/// carries rounding error well above `EQUALITY_TOL`.
pub const EQUALITY_REL_FLOOR: f64 = 1e-12;

/// Gap at or below which a bound counts as attained for an index of `ee`.
pub fn equality_tolerance(ee: f64) -> f64 {
    EQUALITY_TOL.max(EQUALITY_REL_FLOOR * ee.abs())
}
/// Eigenvalues below this (relative to `max(1, ρ₁)`) count as zero in the
/// matrix equality condition.
pub const ZERO_EIGENVALUE_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SequenceKind {
    GammaGraph,
    XiMatrix,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum Termination {
    /// Successive values differed by at most `tol`, and the geometric tail
    /// implied by the last two differences is also within `tol`.
    Converged { tol: f64 },
    KmaxReached,
    /// `M v = 0`; only the zero matrix gets here.
    ZeroIterate,
}

impl fmt::Display for Termination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Termination::Converged { tol } => write!(f, "converged (tol {tol:e})"),
            Termination::KmaxReached => write!(f, "kmax reached"),
            Termination::ZeroIterate => write!(f, "zero iterate"),
        }
    }
}

/// Values `x(0), x(1), ...` of a ladder, indexed by `k`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioSequence {
    pub kind: SequenceKind,
    pub values: Vec<f64>,
    pub terminated_by: Termination,
    pub final_estimate: f64,
}

fn ratio_sequence<F>(
    n: usize,
    kind: SequenceKind,
    kmax: usize,
    tol: f64,
    mut apply: F,
) -> Result<RatioSequence>
where
    F: FnMut(&[f64], &mut [f64]),
{
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    let mut v = vec![1.0 / (n as f64).sqrt(); n];
    let mut w = vec![0.0; n];
    let mut values: Vec<f64> = Vec::new();
    let terminated_by = loop {
        let k = values.len();
        apply(&v, &mut w);
        let norm = euclidean(&w);
        values.push(norm);
        if norm == 0.0 {
            break Termination::ZeroIterate;
        }
        if k >= 1 && settled(&values, tol) {
            break Termination::Converged { tol };
        }
        if k >= kmax {
            break Termination::KmaxReached;
        }
        for (vi, wi) in v.iter_mut().zip(&w) {
            *vi = wi / norm;
        }
    };
    let final_estimate = *values.last().expect("at least one value");
    Ok(RatioSequence {
        kind,
        values,
        terminated_by,
        final_estimate,
    })
}

/// Stop test on the newest value. A small step alone is not enough when the
/// contraction ratio is close to 1, since the remaining distance to the limit
/// is about `step · r / (1 - r)`; that estimate has to be within `tol` too.
/// Steps at rounding level are accepted outright.
fn settled(values: &[f64], tol: f64) -> bool {
    let k = values.len() - 1;
    let step = (values[k] - values[k - 1]).abs();
    if step > tol {
        return false;
    }
    if step <= 64.0 * f64::EPSILON * values[k].abs() {
        return true;
    }
    if k < 2 {
        return false;
    }
    let prev = (values[k - 1] - values[k - 2]).abs();
    if prev == 0.0 {
        return true;
    }
    let r = step / prev;
    r < 1.0 && step * r / (1.0 - r) <= tol
}

/// `γ(k)` for `k = 0..=kmax`, stopping early once successive values differ by
/// at most `tol`.
pub fn gamma_sequence(g: &Graph, kmax: usize, tol: f64) -> Result<RatioSequence> {
    ratio_sequence(g.n(), SequenceKind::GammaGraph, kmax, tol, |x, out| g.apply(x, out))
}

/// `ξ(k)` started from the all-ones vector. On an adjacency matrix this
/// reproduces [`gamma_sequence`] value for value.
pub fn xi_sequence(r: &SymNonnegMatrix, kmax: usize, tol: f64) -> Result<RatioSequence> {
    ratio_sequence(r.ell(), SequenceKind::XiMatrix, kmax, tol, |x, out| r.apply(x, out))
}

/// `e^x + n - 1 - x`, defined for `x ≥ 0`.
pub fn bound_general(x: f64, n: usize) -> Result<f64> {
    if !(x >= 0.0) {
        return Err(Error::Domain(x));
    }
    Ok(x.exp() + (n as f64 - 1.0) - x)
}

/// `2 cosh x + n - 2`. Only a bound for bipartite graphs with `n > 2`; that
/// hypothesis is checked by the table builder.
pub fn bound_bipartite(x: f64, n: usize) -> f64 {
    2.0 * x.cosh() + (n as f64 - 2.0)
}

/// `e^x + ℓ - 1 + Tr(R) - x`.
pub fn bound_matrix(x: f64, ell: usize, trace: f64) -> f64 {
    x.exp() + (ell as f64 - 1.0) + trace - x
}

/// What a [`BoundTable`] was built from.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TableSource {
    Graph { n: usize, m: usize },
    Matrix { ell: usize, trace: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundRow {
    pub k: usize,
    pub seq_value: f64,
    pub bound_general: Option<f64>,
    pub bound_bipartite: Option<f64>,
    pub bound_matrix: Option<f64>,
    /// `exact_ee` minus the sharpest bound in this row.
    pub gap: f64,
}

impl BoundRow {
    /// Sharpest bound available in the row.
    pub fn best_bound(&self) -> f64 {
        self.bound_bipartite
            .or(self.bound_matrix)
            .or(self.bound_general)
            .unwrap_or(f64::NAN)
    }
}

/// Per-`k` bounds next to the exact Estrada index.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundTable {
    pub source: TableSource,
    pub sequence: SequenceKind,
    pub terminated_by: Termination,
    pub rows: Vec<BoundRow>,
    pub exact_ee: f64,
    /// Largest eigenvalue from the eigensolver.
    pub spectral_radius: f64,
    /// `e^{2m/n} + n - 1 - 2m/n`, graphs only.
    pub baseline_2m_over_n: Option<f64>,
    /// The bound map evaluated at the spectral radius: the limit of the ladder.
    pub limit_bound: f64,
    pub n_or_ell: usize,
    pub trace: f64,
    /// Set when the nonzero pattern is disconnected (matrix path only).
    pub reducible: bool,
}

impl BoundTable {
    pub fn general_column(&self) -> Vec<f64> {
        self.rows.iter().filter_map(|r| r.bound_general).collect()
    }

    pub fn matrix_column(&self) -> Vec<f64> {
        self.rows.iter().filter_map(|r| r.bound_matrix).collect()
    }

    /// The `2 cosh` column. Errors unless the source graph was bipartite with
    /// more than two vertices.
    pub fn bipartite_column(&self) -> Result<Vec<f64>> {
        if self.rows.iter().any(|r| r.bound_bipartite.is_none()) {
            let why = match self.source {
                TableSource::Graph { n, .. } if n <= 2 => "the graph has at most two vertices",
                TableSource::Graph { .. } => "the graph is not bipartite",
                TableSource::Matrix { .. } => "matrix tables carry no bipartite column",
            };
            return Err(Error::NoBipartiteColumn(why.into()));
        }
        Ok(self.rows.iter().filter_map(|r| r.bound_bipartite).collect())
    }

    pub fn has_bipartite_column(&self) -> bool {
        self.bipartite_column().is_ok()
    }

    pub fn last_row(&self) -> &BoundRow {
        self.rows.last().expect("tables have at least one row")
    }

    pub fn sequence_values(&self) -> Vec<f64> {
        self.rows.iter().map(|r| r.seq_value).collect()
    }
}

/// Bound table for a connected graph.
pub fn bound_table_graph(g: &Graph, kmax: usize, tol: f64) -> Result<BoundTable> {
    let (components, _) = g.components();
    if components > 1 {
        return Err(Error::Disconnected { components });
    }
    let n = g.n();
    let spectrum = eigenvalues(&adjacency_matrix(g))?;
    let exact_ee = estrada_index(&spectrum);
    let radius = spectrum.largest().max(0.0);
    let seq = gamma_sequence(g, kmax, tol)?;
    let bipartite = n > 2 && is_bipartite(g).is_some();

    let rows = seq
        .values
        .iter()
        .enumerate()
        .map(|(k, &x)| {
            let general = bound_general(x, n)?;
            let bip = bipartite.then(|| bound_bipartite(x, n));
            let best = bip.unwrap_or(general);
            Ok(BoundRow {
                k,
                seq_value: x,
                bound_general: Some(general),
                bound_bipartite: bip,
                bound_matrix: None,
                gap: exact_ee - best,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let avg_degree = 2.0 * g.m() as f64 / n as f64;
    Ok(BoundTable {
        source: TableSource::Graph { n, m: g.m() },
        sequence: seq.kind,
        terminated_by: seq.terminated_by,
        rows,
        exact_ee,
        spectral_radius: spectrum.largest(),
        baseline_2m_over_n: Some(bound_general(avg_degree, n)?),
        limit_bound: if bipartite {
            bound_bipartite(radius, n)
        } else {
            bound_general(radius, n)?
        },
        n_or_ell: n,
        trace: 0.0,
        reducible: false,
    })
}

/// Bound table for a nonnegative symmetric matrix. Reducible input is
/// accepted and flagged.
pub fn bound_table_matrix(r: &SymNonnegMatrix, kmax: usize, tol: f64) -> Result<BoundTable> {
    let ell = r.ell();
    let trace = r.trace();
    let spectrum = eigenvalues(r)?;
    let exact_ee = estrada_index(&spectrum);
    let seq = xi_sequence(r, kmax, tol)?;
    let rows = seq
        .values
        .iter()
        .enumerate()
        .map(|(k, &x)| {
            let bound = bound_matrix(x, ell, trace);
            BoundRow {
                k,
                seq_value: x,
                bound_general: None,
                bound_bipartite: None,
                bound_matrix: Some(bound),
                gap: exact_ee - bound,
            }
        })
        .collect();
    Ok(BoundTable {
        source: TableSource::Matrix { ell, trace },
        sequence: seq.kind,
        terminated_by: seq.terminated_by,
        rows,
        exact_ee,
        spectral_radius: spectrum.largest(),
        baseline_2m_over_n: None,
        limit_bound: bound_matrix(spectrum.largest().max(0.0), ell, trace),
        n_or_ell: ell,
        trace,
        reducible: !r.is_irreducible(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem {
    /// `EE ≥ e^γ + n - 1 - γ`, equality only for the edgeless graph.
    GeneralGraph,
    /// `EE ≥ 2 cosh γ + n - 2`, equality only for complete bipartite graphs.
    BipartiteGraph,
    /// `EE(R) ≥ e^ξ + ℓ - 1 + Tr(R) - ξ`, equality iff `ρ_2 = ... = ρ_ℓ = 0`.
    Matrix,
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theorem::GeneralGraph => "general graph bound",
            Theorem::BipartiteGraph => "bipartite graph bound",
            Theorem::Matrix => "matrix bound",
        })
    }
}

/// Whether a table attains its bound, judged both structurally and numerically.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EqualityCertificate {
    pub theorem: Theorem,
    pub holds_with_equality: bool,
    /// The structural equality condition (complete bipartite, edgeless, or
    /// all non-Perron eigenvalues zero).
    pub structural: bool,
    pub witness: String,
    /// `exact_ee` minus the bound at the last computed `k`.
    pub numeric_gap: f64,
    /// The gap exceeds the equality tolerance.
    pub strict_observed: bool,
    /// Set when the structural and numeric verdicts disagree.
    pub diagnostic: Option<String>,
}

#[derive(Debug, Clone, Copy)]
pub enum Source<'a> {
    Graph(&'a Graph),
    Matrix(&'a SymNonnegMatrix),
}

impl<'a> From<&'a Graph> for Source<'a> {
    fn from(g: &'a Graph) -> Self {
        Source::Graph(g)
    }
}

impl<'a> From<&'a SymNonnegMatrix> for Source<'a> {
    fn from(r: &'a SymNonnegMatrix) -> Self {
        Source::Matrix(r)
    }
}

pub fn equality_certificate<'a>(
    source: impl Into<Source<'a>>,
    table: &BoundTable,
) -> Result<EqualityCertificate> {
    let (theorem, structural, witness) = match source.into() {
        Source::Graph(g) => {
            let expected = TableSource::Graph { n: g.n(), m: g.m() };
            if table.source != expected || table.sequence != SequenceKind::GammaGraph {
                return Err(Error::TableMismatch(format!(
                    "graph has n={} m={}, table source is {:?}",
                    g.n(),
                    g.m(),
                    table.source
                )));
            }
            if table.has_bipartite_column() {
                let sides = is_bipartite(g)
                    .ok_or_else(|| Error::TableMismatch("graph is not bipartite".into()))?;
                let (p, q) = (sides.left.len(), sides.right.len());
                let complete = p * q == g.m();
                let witness = if complete {
                    format!("complete bipartite K_{{{},{}}}", p.min(q), p.max(q))
                } else {
                    format!("bipartite with sides {p} and {q} but only {} of {} edges", g.m(), p * q)
                };
                (Theorem::BipartiteGraph, complete, witness)
            } else {
                let edgeless = g.m() == 0;
                let witness = if edgeless {
                    "edgeless graph".to_string()
                } else {
                    format!("graph has {} edges; only the edgeless graph attains the bound", g.m())
                };
                (Theorem::GeneralGraph, edgeless, witness)
            }
        }
        Source::Matrix(r) => {
            let expected = TableSource::Matrix {
                ell: r.ell(),
                trace: r.trace(),
            };
            if table.source != expected {
                return Err(Error::TableMismatch(format!(
                    "matrix has order {} and trace {}, table source is {:?}",
                    r.ell(),
                    r.trace(),
                    table.source
                )));
            }
            let spectrum = eigenvalues(r)?;
            let cutoff = ZERO_EIGENVALUE_TOL * spectrum.largest().abs().max(1.0);
            let offender = spectrum.eigenvalues[1..].iter().find(|x| x.abs() > cutoff);
            let witness = match offender {
                None => "all non-Perron eigenvalues zero".to_string(),
                Some(x) => format!("non-Perron eigenvalue {x:.6e} is nonzero"),
            };
            (Theorem::Matrix, offender.is_none(), witness)
        }
    };

    let last = table.last_row();
    let numeric_gap = last.gap;
    let attained = numeric_gap <= equality_tolerance(table.exact_ee);
    let diagnostic = match (structural, attained) {
        (true, false) => Some(format!(
            "structural equality condition holds but the gap at k={} is {numeric_gap:.3e}",
            last.k
        )),
        (false, true) => Some(format!(
            "gap {numeric_gap:.3e} is within tolerance although the structural condition fails"
        )),
        _ => None,
    };
    Ok(EqualityCertificate {
        theorem,
        holds_with_equality: structural && attained,
        structural,
        witness,
        numeric_gap,
        strict_observed: !attained,
        diagnostic,
    })
}
