//! Estrada index of graphs and nonnegative symmetric matrices.
//!
//! The Estrada index `EE = Σ exp(λ_i)` is computed exactly from a dense Jacobi
//! eigensolve, and bounded from below by increasing ladders driven by walk
//! counts. For a graph the ladder uses
//!
//! ```text
//! γ(k) = sqrt( Σ_i d_{k+1}(i)^2 / Σ_i d_k(i)^2 )
//! ```
//!
//! where `d_k(i)` counts walks of length `k` starting at vertex `i`. `γ(k)`
//! increases towards the spectral radius, so `exp(γ) + n - 1 - γ` (and
//! `2 cosh(γ) + n - 2` for bipartite graphs) increase towards the limiting
//! lower bound. The same ladder on a nonnegative symmetric matrix `R`, started
//! from the all-ones vector, gives `exp(ξ) + ℓ - 1 + Tr(R) - ξ`.
//!
//! ```
//! use estrada_core::{bounds, graph::{generate, Family}};
//!
//! let k4 = generate(Family::Complete(4)).unwrap();
//! let table = bounds::bound_table_graph(&k4, 1000, 1e-10).unwrap();
//! assert!((table.exact_ee - 21.189).abs() < 5e-3);
//! assert!(table.rows.iter().all(|r| (r.seq_value - 3.0).abs() < 1e-12));
//! ```

pub mod bounds;
pub mod error;
pub mod graph;
pub mod matrix;
pub mod plot;
pub mod report;
pub mod spectral;
pub mod verify;

pub use bounds::{
    bound_bipartite, bound_general, bound_matrix, bound_table_graph, bound_table_matrix,
    equality_certificate, gamma_sequence, xi_sequence, BoundRow, BoundTable, EqualityCertificate,
    RatioSequence, SequenceKind, Source, Termination, Theorem,
};
pub use error::{Error, Result};
pub use graph::{Bipartition, Family, Graph, GraphClassification, KDegreeVector, Ratio};
pub use matrix::SymNonnegMatrix;
pub use spectral::{eigenvalues, estrada_index, power_radius, spectral_moment, Spectrum};

/// Iteration cap used when the caller does not pick one.
pub const DEFAULT_KMAX: usize = 1000;
/// Successive-difference tolerance used when the caller does not pick one.
pub const DEFAULT_TOL: f64 = 1e-10;
