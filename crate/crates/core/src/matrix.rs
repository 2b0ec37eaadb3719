//! Dense real symmetric matrices with nonnegative entries.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Relative tolerance for accepting numerically symmetric input.
pub const SYMMETRY_TOL: f64 = 1e-12;

/// Dense symmetric nonnegative matrix of order `ell`, stored row-major.
///
/// Input that is symmetric only up to [`SYMMETRY_TOL`] is stored as
/// `(r_ij + r_ji) / 2`, so the stored matrix is exactly symmetric.
#[derive(Debug, Clone, PartialEq)]
pub struct SymNonnegMatrix {
    ell: usize,
    data: Vec<f64>,
    trace: f64,
}

impl SymNonnegMatrix {
    /// Validates and stores a row-major `ell × ell` buffer.
    pub fn from_dense(ell: usize, mut data: Vec<f64>) -> Result<SymNonnegMatrix> {
        if ell == 0 {
            return Err(Error::InvalidArgument("matrix order must be at least 1".into()));
        }
        if data.len() != ell * ell {
            return Err(Error::InvalidArgument(format!(
                "expected {} entries for order {ell}, got {}",
                ell * ell,
                data.len()
            )));
        }
        for i in 0..ell {
            for j in 0..ell {
                let v = data[i * ell + j];
                if !v.is_finite() {
                    return Err(Error::InvalidArgument(format!(
                        "non-finite entry at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
                if v < 0.0 {
                    return Err(Error::NegativeEntry {
                        row: i + 1,
                        col: j + 1,
                        value: v,
                    });
                }
            }
        }
        for i in 0..ell {
            for j in i + 1..ell {
                let (upper, lower) = (data[i * ell + j], data[j * ell + i]);
                if (upper - lower).abs() > SYMMETRY_TOL * upper.max(lower) {
                    return Err(Error::Asymmetric {
                        row: i + 1,
                        col: j + 1,
                        upper,
                        lower,
                    });
                }
                let mean = 0.5 * (upper + lower);
                data[i * ell + j] = mean;
                data[j * ell + i] = mean;
            }
        }
        let trace = (0..ell).map(|i| data[i * ell + i]).sum();
        Ok(SymNonnegMatrix { ell, data, trace })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<SymNonnegMatrix> {
        let ell = rows.len();
        if let Some(bad) = rows.iter().position(|r| r.len() != ell) {
            return Err(Error::InvalidArgument(format!(
                "row {} has {} entries, expected {ell}",
                bad + 1,
                rows[bad].len()
            )));
        }
        SymNonnegMatrix::from_dense(ell, rows.concat())
    }

    pub fn identity(ell: usize) -> Result<SymNonnegMatrix> {
        let mut data = vec![0.0; ell * ell];
        for i in 0..ell {
            data[i * ell + i] = 1.0;
        }
        SymNonnegMatrix::from_dense(ell, data)
    }

    pub fn zeros(ell: usize) -> Result<SymNonnegMatrix> {
        SymNonnegMatrix::from_dense(ell, vec![0.0; ell * ell])
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn trace(&self) -> f64 {
        self.trace
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.ell + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.ell..(i + 1) * self.ell]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    /// `out = R x`, each row summed left to right.
    pub fn apply(&self, x: &[f64], out: &mut [f64]) {
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.row(i).iter().zip(x).map(|(r, v)| r * v).sum();
        }
    }

    /// `sqrt(Σ r_ij²)`.
    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// Largest row sum, an upper bound on the spectral radius.
    pub fn max_row_sum(&self) -> f64 {
        (0..self.ell)
            .map(|i| self.row(i).iter().sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// Irreducible iff the graph of nonzero off-diagonal entries is connected.
    pub fn is_irreducible(&self) -> bool {
        let n = self.ell;
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if !seen[j] && j != i && self.get(i, j) != 0.0 {
                    seen[j] = true;
                    count += 1;
                    stack.push(j);
                }
            }
        }
        count == n
    }
}

/// 0/1 adjacency matrix of `g`.
pub fn adjacency_matrix(g: &Graph) -> SymNonnegMatrix {
    let n = g.n();
    let mut data = vec![0.0; n * n];
    for (u, v) in g.edges() {
        data[u * n + v] = 1.0;
        data[v * n + u] = 1.0;
    }
    SymNonnegMatrix {
        ell: n,
        data,
        trace: 0.0,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Layout {
    Coordinate,
    Array,
}

/// Reads a Matrix Market `matrix` of field `real` or `integer` with
/// `symmetric` or `general` storage, in coordinate or array layout.
/// Coordinate duplicates are summed.
pub fn parse_matrix_market(text: &str) -> Result<SymNonnegMatrix> {
    let err = |msg: String| Error::MatrixMarket(msg);
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| err("empty input".into()))?;
    let words: Vec<String> = header.split_whitespace().map(str::to_ascii_lowercase).collect();
    if words.len() != 5 || words[0] != "%%matrixmarket" || words[1] != "matrix" {
        return Err(err(format!("bad header `{header}`")));
    }
    let layout = match words[2].as_str() {
        "coordinate" => Layout::Coordinate,
        "array" => Layout::Array,
        other => return Err(err(format!("unsupported format `{other}`"))),
    };
    match words[3].as_str() {
        "real" | "integer" => {}
        other => return Err(err(format!("unsupported field `{other}`"))),
    }
    let symmetric = match words[4].as_str() {
        "symmetric" => true,
        "general" => false,
        other => return Err(err(format!("unsupported symmetry `{other}`"))),
    };

    let mut body = lines.filter(|(_, l)| {
        let t = l.trim();
        !t.is_empty() && !t.starts_with('%')
    });
    let (size_no, size_line) = body.next().ok_or_else(|| err("missing size line".into()))?;
    let sizes: Vec<usize> = size_line
        .split_whitespace()
        .map(|t| t.parse())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| err(format!("line {}: bad size line", size_no + 1)))?;
    let expected_sizes = if layout == Layout::Coordinate { 3 } else { 2 };
    if sizes.len() != expected_sizes {
        return Err(err(format!("line {}: bad size line", size_no + 1)));
    }
    let (rows, cols) = (sizes[0], sizes[1]);
    if rows != cols {
        return Err(err(format!("matrix is {rows}x{cols}, not square")));
    }
    let ell = rows;
    if ell == 0 {
        return Err(err("matrix order must be at least 1".into()));
    }
    let mut data = vec![0.0; ell * ell];

    let parse_value = |line_no: usize, tok: &str| -> Result<f64> {
        tok.parse::<f64>()
            .map_err(|_| err(format!("line {}: bad value `{tok}`", line_no + 1)))
    };
    match layout {
        Layout::Coordinate => {
            let nnz = sizes[2];
            let mut seen = 0;
            for (line_no, line) in body {
                let toks: Vec<&str> = line.split_whitespace().collect();
                if toks.len() != 3 {
                    return Err(err(format!("line {}: expected `i j value`", line_no + 1)));
                }
                let index = |tok: &str| -> Result<usize> {
                    match tok.parse::<usize>() {
                        Ok(i) if (1..=ell).contains(&i) => Ok(i - 1),
                        _ => Err(err(format!("line {}: bad index `{tok}`", line_no + 1))),
                    }
                };
                let (i, j) = (index(toks[0])?, index(toks[1])?);
                let v = parse_value(line_no, toks[2])?;
                data[i * ell + j] += v;
                if symmetric && i != j {
                    data[j * ell + i] += v;
                }
                seen += 1;
            }
            if seen != nnz {
                return Err(err(format!("expected {nnz} entries, found {seen}")));
            }
        }
        Layout::Array => {
            // column-major; symmetric storage lists the lower triangle only
            let mut slots = (0..ell).flat_map(|j| {
                let start = if symmetric { j } else { 0 };
                (start..ell).map(move |i| (i, j))
            });
            for (line_no, line) in body {
                for tok in line.split_whitespace() {
                    let (i, j) = slots
                        .next()
                        .ok_or_else(|| err(format!("line {}: too many values", line_no + 1)))?;
                    let v = parse_value(line_no, tok)?;
                    data[i * ell + j] = v;
                    if symmetric {
                        data[j * ell + i] = v;
                    }
                }
            }
            if slots.next().is_some() {
                return Err(err("too few values".into()));
            }
        }
    }
    SymNonnegMatrix::from_dense(ell, data)
}

/// Writes the lower-triangle nonzeros in coordinate symmetric form with
/// round-trip precision.
pub fn to_matrix_market(r: &SymNonnegMatrix) -> String {
    let ell = r.ell();
    let entries: Vec<(usize, usize, f64)> = (0..ell)
        .flat_map(|j| (j..ell).map(move |i| (i, j)))
        .map(|(i, j)| (i, j, r.get(i, j)))
        .filter(|&(_, _, v)| v != 0.0)
        .collect();
    let mut out = String::from("%%MatrixMarket matrix coordinate real symmetric\n");
    out.push_str(&format!("{ell} {ell} {}\n", entries.len()));
    for (i, j, v) in entries {
        out.push_str(&format!("{} {} {:?}\n", i + 1, j + 1, v));
    }
    out
}
