//! Invariant checks behind `estrada verify`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bounds::{
    bound_table_graph, bound_table_matrix, equality_certificate, gamma_sequence, xi_sequence,
    BoundTable, Termination, Theorem,
};
use crate::error::Result;
use crate::graph::{triangle_count, Graph};
use crate::matrix::{adjacency_matrix, SymNonnegMatrix};
use crate::report::Report;
use crate::spectral::{eigenvalues, spectral_moment};

/// Slack for monotonicity of ladder values and bound columns.
pub const MONOTONE_SLACK: f64 = 1e-12;
/// Slack for `bound ≤ EE`.
pub const BOUND_SLACK: f64 = 1e-9;
/// Slack for `γ(k) ≤ λ₁`.
pub const RADIUS_SLACK: f64 = 1e-8;
/// Agreement required between the graph and matrix ladders.
pub const BRIDGE_TOL: f64 = 1e-12;
/// Agreement required between a converged matrix ladder and `ρ₁`.
pub const LIMIT_TOL: f64 = 1e-7;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub invariant: String,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.invariant, self.detail)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn fail(&mut self, invariant: &str, detail: String) {
        self.violations.push(Violation {
            invariant: invariant.to_string(),
            detail,
        });
    }

    fn check(&mut self, ok: bool, invariant: &str, detail: impl FnOnce() -> String) {
        if !ok {
            self.fail(invariant, detail());
        }
    }
}

fn scale(x: f64) -> f64 {
    x.abs().max(1.0)
}

/// Checks that need nothing but the table itself.
pub fn check_table(t: &BoundTable) -> Verdict {
    let mut v = Verdict::default();
    let lambda = t.spectral_radius;
    for (k, w) in t.rows.windows(2).enumerate() {
        let (a, b) = (w[0].seq_value, w[1].seq_value);
        v.check(b >= a - MONOTONE_SLACK * scale(a), "monotone sequence", || {
            format!("value drops from {a:e} to {b:e} at k={}", k + 1)
        });
        for (name, x, y) in [
            ("J", w[0].bound_general, w[1].bound_general),
            ("C", w[0].bound_bipartite, w[1].bound_bipartite),
            ("matrix", w[0].bound_matrix, w[1].bound_matrix),
        ] {
            if let (Some(x), Some(y)) = (x, y) {
                v.check(y >= x - MONOTONE_SLACK * scale(x), "monotone bounds", || {
                    format!("{name} column drops from {x:e} to {y:e} at k={}", k + 1)
                });
            }
        }
    }
    let ee = t.exact_ee;
    let ee_slack = BOUND_SLACK * scale(ee);
    for r in &t.rows {
        v.check(r.seq_value >= 0.0, "nonnegative sequence", || {
            format!("value {:e} at k={}", r.seq_value, r.k)
        });
        v.check(
            r.seq_value <= lambda + RADIUS_SLACK * scale(lambda),
            "sequence below spectral radius",
            || format!("value {:e} exceeds {lambda:e} at k={}", r.seq_value, r.k),
        );
        for (name, bound) in [
            ("J", r.bound_general),
            ("C", r.bound_bipartite),
            ("matrix", r.bound_matrix),
        ] {
            if let Some(b) = bound {
                v.check(b <= ee + ee_slack, "bound validity", || {
                    format!("{name} bound {b:e} exceeds EE {ee:e} at k={}", r.k)
                });
            }
        }
        let expected_gap = ee - r.best_bound();
        v.check(
            (r.gap - expected_gap).abs() <= MONOTONE_SLACK * scale(ee),
            "gap consistency",
            || format!("gap {:e} but EE - bound = {expected_gap:e} at k={}", r.gap, r.k),
        );
    }
    v.check(t.limit_bound <= ee + ee_slack, "limit bound validity", || {
        format!("bound at the spectral radius {:e} exceeds EE {ee:e}", t.limit_bound)
    });
    if let (Some(base), Some(first)) = (t.baseline_2m_over_n, t.rows.first()) {
        if let Some(j0) = first.bound_general {
            v.check(j0 >= base - MONOTONE_SLACK * scale(base), "baseline dominance", || {
                format!("J^0 = {j0:e} below the 2m/n baseline {base:e}")
            });
        }
    }
    v
}

fn check_ladder_bridge(g: &Graph, kmax: usize, tol: f64, v: &mut Verdict) -> Result<()> {
    let gamma = gamma_sequence(g, kmax, tol)?;
    let xi = xi_sequence(&adjacency_matrix(g), kmax, tol)?;
    v.check(gamma.values.len() == xi.values.len(), "gamma-xi bridge", || {
        format!("{} gamma values but {} xi values", gamma.values.len(), xi.values.len())
    });
    for (k, (a, b)) in gamma.values.iter().zip(&xi.values).enumerate() {
        v.check((a - b).abs() <= BRIDGE_TOL * scale(*a), "gamma-xi bridge", || {
            format!("gamma {a:e} vs xi {b:e} at k={k}")
        });
    }
    Ok(())
}

fn check_moments(g: &Graph, v: &mut Verdict) -> Result<()> {
    let s = eigenvalues(&adjacency_matrix(g))?;
    let n = g.n() as f64;
    let two_m = 2.0 * g.m() as f64;
    let six_t = 6.0 * triangle_count(g) as f64;
    let m0 = spectral_moment(&s, 0);
    let m1 = spectral_moment(&s, 1);
    let m2 = spectral_moment(&s, 2);
    let m3 = spectral_moment(&s, 3);
    v.check(m0 == n, "moment M0 = n", || format!("M0 = {m0}, n = {n}"));
    v.check(m1.abs() <= 1e-9 * n, "moment M1 = 0", || format!("M1 = {m1:e}"));
    v.check((m2 - two_m).abs() <= 1e-8 * two_m.max(1.0), "moment M2 = 2m", || {
        format!("M2 = {m2:e}, 2m = {two_m}")
    });
    v.check((m3 - six_t).abs() <= 1e-7 * six_t.max(1.0), "moment M3 = 6t", || {
        format!("M3 = {m3:e}, 6t = {six_t}")
    });
    Ok(())
}

fn check_seed(r: &SymNonnegMatrix, v: &mut Verdict) -> Result<()> {
    let xi = xi_sequence(r, 0, 1.0)?;
    let seed = r.frobenius_norm() / (r.ell() as f64).sqrt();
    let xi0 = xi.values[0];
    v.check(xi0 >= seed * (1.0 - 1e-12), "seed inequality", || {
        format!("xi(0) = {xi0:e} below |R|/sqrt(l) = {seed:e}")
    });
    Ok(())
}

/// All graph invariants. Disconnected graphs skip the graph theorems (their
/// hypothesis) but still run the matrix-side checks on the adjacency matrix.
pub fn verify_graph(g: &Graph, kmax: usize, tol: f64) -> Result<Verdict> {
    let mut v = Verdict::default();
    if g.is_connected() {
        let table = bound_table_graph(g, kmax, tol)?;
        let table_verdict = check_table(&table);
        v.violations.extend(table_verdict.violations);
        let cert = equality_certificate(g, &table)?;
        if let Some(d) = &cert.diagnostic {
            v.fail("equality certificate", d.clone());
        }
        if cert.holds_with_equality {
            v.notes.push(format!("equality in the {}: {}", cert.theorem, cert.witness));
        }
    } else {
        v.notes
            .push("disconnected: graph bounds skipped, matrix path checked instead".into());
        let table = bound_table_matrix(&adjacency_matrix(g), kmax, tol)?;
        v.violations.extend(check_table(&table).violations);
    }
    check_ladder_bridge(g, kmax, tol, &mut v)?;
    check_moments(g, &mut v)?;
    check_seed(&adjacency_matrix(g), &mut v)?;
    Ok(v)
}

pub fn verify_matrix(r: &SymNonnegMatrix, kmax: usize, tol: f64) -> Result<Verdict> {
    let table = bound_table_matrix(r, kmax, tol)?;
    let mut v = check_table(&table);
    if let Termination::Converged { .. } = table.terminated_by {
        let last = table.last_row().seq_value;
        let rho = table.spectral_radius;
        v.check((last - rho).abs() <= LIMIT_TOL * scale(rho), "sequence limit", || {
            format!("converged xi {last:e} differs from spectral radius {rho:e}")
        });
    }
    let s = eigenvalues(r)?;
    let sum: f64 = s.eigenvalues.iter().sum();
    v.check((sum - r.trace()).abs() <= 1e-9 * scale(r.trace()), "trace = sum of eigenvalues", || {
        format!("sum {sum:e}, trace {:e}", r.trace())
    });
    let fro2 = r.frobenius_norm().powi(2);
    let m2 = spectral_moment(&s, 2);
    v.check((fro2 - m2).abs() <= 1e-9 * scale(fro2), "frobenius norm = M2", || {
        format!("|R|^2 = {fro2:e}, M2 = {m2:e}")
    });
    check_seed(r, &mut v)?;
    if table.reducible {
        v.notes.push("reducible matrix".into());
    }
    let cert = equality_certificate(r, &table)?;
    if let Some(d) = &cert.diagnostic {
        v.fail("equality certificate", d.clone());
    }
    if cert.holds_with_equality {
        v.notes.push(format!("equality in the {}: {}", cert.theorem, cert.witness));
    }
    Ok(v)
}

/// Re-checks a stored report: its table invariants and the consistency of
/// its certificate with the table.
pub fn verify_report(report: &Report) -> Verdict {
    let mut v = check_table(&report.table);
    let c = &report.certificate;
    let tol = crate::bounds::equality_tolerance(report.table.exact_ee);
    v.check(!c.holds_with_equality || c.numeric_gap <= tol, "equality certificate", || {
        format!("claims equality with gap {:e}", c.numeric_gap)
    });
    let last_gap = report.table.last_row().gap;
    v.check(c.numeric_gap == last_gap, "equality certificate", || {
        format!("certificate gap {:e} but last row gap {last_gap:e}", c.numeric_gap)
    });
    if c.theorem == Theorem::BipartiteGraph {
        v.check(report.table.has_bipartite_column(), "bipartite column", || {
            "bipartite certificate without a bipartite column".into()
        });
    }
    v
}
