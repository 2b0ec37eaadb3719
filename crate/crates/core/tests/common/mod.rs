#![allow(dead_code)]

use estrada_core::{Graph, SymNonnegMatrix};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Random spanning tree plus independent extra edges with a random density.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (rng.random_range(0..i), i)).collect();
    let p: f64 = rng.random_range(0.0..0.5);
    for i in 0..n {
        for j in i + 1..n {
            if rng.random::<f64>() < p {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// G(n, p) with a random `p`; may be disconnected.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let p: f64 = rng.random();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random::<f64>() < p {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Entries uniform in [0, 1], mirrored from the upper triangle.
pub fn random_matrix(rng: &mut ChaCha8Rng, ell: usize) -> SymNonnegMatrix {
    let mut data = vec![0.0; ell * ell];
    for i in 0..ell {
        for j in i..ell {
            let v: f64 = rng.random();
            data[i * ell + j] = v;
            data[j * ell + i] = v;
        }
    }
    SymNonnegMatrix::from_dense(ell, data).unwrap()
}

/// `A^k 1` by repeated integer matrix-vector products on the dense 0/1 matrix.
pub fn walks_by_matrix_power(g: &Graph, k: usize) -> Vec<u128> {
    let n = g.n();
    let a: Vec<Vec<u128>> = (0..n)
        .map(|i| (0..n).map(|j| u128::from(g.has_edge(i, j))).collect())
        .collect();
    // P = A^k, then P·1
    let mut p: Vec<Vec<u128>> = (0..n)
        .map(|i| (0..n).map(|j| u128::from(i == j)).collect())
        .collect();
    for _ in 0..k {
        p = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|l| p[i][l] * a[l][j]).sum())
                    .collect()
            })
            .collect();
    }
    p.iter().map(|row| row.iter().sum()).collect()
}

/// Every labelled graph on `n` vertices, edges taken from the bits of a mask
/// over the pairs `(i, j)`, `i < j`, in lexicographic order.
pub fn all_labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let count = 1u64 << pairs.len();
    (0..count).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edges(n, edges).unwrap()
    })
}
