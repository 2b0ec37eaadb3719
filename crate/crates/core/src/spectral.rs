//! Exact reference quantities: eigenvalues by cyclic Jacobi rotations, the
//! Estrada index, spectral moments and an independent power-iteration check
//! of the spectral radius.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::euclidean;
use crate::matrix::SymNonnegMatrix;

/// Sweep cap for the Jacobi solver.
pub const MAX_SWEEPS: usize = 50;
/// Off-diagonal stopping threshold, relative to the Frobenius norm.
pub const JACOBI_TOL: f64 = 1e-12;

/// Eigenvalues sorted in descending order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    /// Largest off-diagonal magnitude when the solver stopped.
    pub residual: f64,
    pub sweeps: usize,
}

impl Spectrum {
    pub fn order(&self) -> usize {
        self.eigenvalues.len()
    }

    /// Largest eigenvalue. For a nonnegative matrix this is the spectral radius.
    pub fn largest(&self) -> f64 {
        self.eigenvalues[0]
    }
}

/// All eigenvalues of `r`.
///
/// Cyclic Jacobi: each sweep rotates away every upper-triangle entry in
/// row-major order. Stops when the largest off-diagonal magnitude is at most
/// `1e-12 · ‖R‖_F`, or fails after [`MAX_SWEEPS`] sweeps.
pub fn eigenvalues(r: &SymNonnegMatrix) -> Result<Spectrum> {
    let n = r.ell();
    let mut a = r.as_slice().to_vec();
    let threshold = JACOBI_TOL * r.frobenius_norm();
    let off_max = |a: &[f64]| {
        let mut worst = 0.0f64;
        for p in 0..n {
            for q in p + 1..n {
                worst = worst.max(a[p * n + q].abs());
            }
        }
        worst
    };

    let mut sweeps = 0;
    let mut residual = off_max(&a);
    while residual > threshold {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, residual });
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, n, p, q);
            }
        }
        sweeps += 1;
        residual = off_max(&a);
    }

    let mut eigenvalues: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eigenvalues.sort_by(|x, y| y.total_cmp(x));
    Ok(Spectrum {
        eigenvalues,
        residual,
        sweeps,
    })
}

/// One Jacobi rotation zeroing `a[p][q]` of the full symmetric buffer.
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let (app, aqq) = (a[p * n + p], a[q * n + q]);
    let theta = (aqq - app) / (2.0 * apq);
    // smaller root of t² + 2θt - 1 = 0
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let tau = s / (1.0 + c);

    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let g = a[k * n + p];
        let h = a[k * n + q];
        let new_p = g - s * (h + g * tau);
        let new_q = h + s * (g - h * tau);
        a[k * n + p] = new_p;
        a[p * n + k] = new_p;
        a[k * n + q] = new_q;
        a[q * n + k] = new_q;
    }
}

/// `Σ exp(λ_i)`, accumulated from the smallest eigenvalue upwards.
pub fn estrada_index(s: &Spectrum) -> f64 {
    s.eigenvalues.iter().rev().map(|l| l.exp()).sum()
}

/// `M_k = Σ λ_i^k`.
pub fn spectral_moment(s: &Spectrum, k: u32) -> f64 {
    s.eigenvalues.iter().map(|l| l.powi(k as i32)).sum()
}

/// Spectral radius by power iteration from the all-ones vector.
///
/// Iterates on `R + σI` with `σ` half the largest row sum, so a `-ρ`
/// eigenvalue (bipartite structure) cannot tie with the Perron value. Returns
/// the Rayleigh quotient `vᵀRv` once the residual `‖Rv - θv‖` drops to
/// `tol · max(1, |θ|)`, or after `kmax` iterations.
pub fn power_radius(r: &SymNonnegMatrix, tol: f64, kmax: usize) -> Result<f64> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    if kmax == 0 {
        return Err(Error::InvalidArgument("kmax must be at least 1".into()));
    }
    let n = r.ell();
    let shift = 0.5 * r.max_row_sum();
    let mut v = vec![1.0 / (n as f64).sqrt(); n];
    let mut w = vec![0.0; n];
    let mut theta = 0.0;
    for _ in 0..kmax {
        r.apply(&v, &mut w);
        if w.iter().all(|&x| x == 0.0) {
            return Ok(0.0);
        }
        theta = v.iter().zip(&w).map(|(a, b)| a * b).sum();
        let res = v
            .iter()
            .zip(&w)
            .map(|(a, b)| (b - theta * a).powi(2))
            .sum::<f64>()
            .sqrt();
        if res <= tol * theta.abs().max(1.0) {
            break;
        }
        for (vi, wi) in v.iter_mut().zip(&w) {
            *vi = wi + shift * *vi;
        }
        let norm = euclidean(&v);
        v.iter_mut().for_each(|x| *x /= norm);
    }
    Ok(theta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family, Graph};
    use crate::matrix::adjacency_matrix;

    fn spectrum_of(f: Family) -> Spectrum {
        eigenvalues(&adjacency_matrix(&generate(f).unwrap())).unwrap()
    }

    #[test]
    fn k4_spectrum() {
        let s = spectrum_of(Family::Complete(4));
        let expect = [3.0, -1.0, -1.0, -1.0];
        for (got, want) in s.eigenvalues.iter().zip(expect) {
            assert!((got - want).abs() < 1e-9, "{:?}", s.eigenvalues);
        }
    }

    #[test]
    fn k23_spectrum() {
        let s = spectrum_of(Family::CompleteBipartite(2, 3));
        let r6 = 6f64.sqrt();
        let expect = [r6, 0.0, 0.0, 0.0, -r6];
        for (got, want) in s.eigenvalues.iter().zip(expect) {
            assert!((got - want).abs() < 1e-9, "{:?}", s.eigenvalues);
        }
    }

    #[test]
    fn zero_matrix_spectrum() {
        let s = eigenvalues(&SymNonnegMatrix::zeros(4).unwrap()).unwrap();
        assert_eq!(s.eigenvalues, vec![0.0; 4]);
        assert_eq!(s.sweeps, 0);
        assert_eq!(estrada_index(&s), 4.0);
    }

    #[test]
    fn one_by_one() {
        let r = SymNonnegMatrix::from_rows(&[vec![2.5]]).unwrap();
        let s = eigenvalues(&r).unwrap();
        assert_eq!(s.eigenvalues, vec![2.5]);
    }

    #[test]
    fn estrada_examples() {
        let ee = estrada_index(&spectrum_of(Family::Complete(4)));
        assert!((ee - 21.189).abs() < 5e-3);
        assert!((ee - (3f64.exp() + 3.0 * (-1f64).exp())).abs() < 1e-12);
        let ee = estrada_index(&spectrum_of(Family::CompleteBipartite(2, 3)));
        assert!((ee - 14.669).abs() < 5e-3);
        let edgeless = eigenvalues(&adjacency_matrix(&Graph::empty(7).unwrap())).unwrap();
        assert_eq!(estrada_index(&edgeless), 7.0);
    }

    #[test]
    fn p4_estrada_from_golden_ratio() {
        // eigenvalues of P4 are ±φ and ±1/φ
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        let expect = 2.0 * phi.cosh() + 2.0 * (1.0 / phi).cosh();
        let ee = estrada_index(&spectrum_of(Family::Path(4)));
        assert!((ee - expect).abs() < 1e-12, "{ee} vs {expect}");
    }

    #[test]
    fn moments_k4() {
        let s = spectrum_of(Family::Complete(4));
        assert_eq!(spectral_moment(&s, 0), 4.0);
        assert!(spectral_moment(&s, 1).abs() < 1e-12);
        assert!((spectral_moment(&s, 2) - 12.0).abs() < 1e-12);
        assert!((spectral_moment(&s, 3) - 24.0).abs() < 1e-11);
    }

    #[test]
    fn power_radius_examples() {
        let k4 = adjacency_matrix(&generate(Family::Complete(4)).unwrap());
        assert!((power_radius(&k4, 1e-13, 10_000).unwrap() - 3.0).abs() < 1e-9);
        let z = SymNonnegMatrix::zeros(3).unwrap();
        assert_eq!(power_radius(&z, 1e-13, 10).unwrap(), 0.0);
        let k23 = adjacency_matrix(&generate(Family::CompleteBipartite(2, 3)).unwrap());
        let rho = power_radius(&k23, 1e-13, 10_000).unwrap();
        assert!((rho - 6f64.sqrt()).abs() < 1e-9, "{rho}");
        assert!(power_radius(&k4, 0.0, 10).is_err());
        assert!(power_radius(&k4, 1e-9, 0).is_err());
    }

    #[test]
    fn trace_is_preserved() {
        let r = SymNonnegMatrix::from_rows(&[
            vec![2.0, 1.0, 0.5],
            vec![1.0, 0.0, 3.0],
            vec![0.5, 3.0, 1.0],
        ])
        .unwrap();
        let s = eigenvalues(&r).unwrap();
        let sum: f64 = s.eigenvalues.iter().sum();
        assert!((sum - r.trace()).abs() <= 1e-9 * r.trace().abs().max(1.0));
        assert!(s.residual <= JACOBI_TOL * r.frobenius_norm());
    }
}
