mod common;

use common::{random_connected, random_graph, random_matrix};
use estrada_core::bounds::{bound_table_graph, bound_table_matrix, gamma_sequence, xi_sequence};
use estrada_core::graph::{parse_edge_list, parse_graph6, to_edge_list, to_graph6, Graph};
use estrada_core::matrix::adjacency_matrix;
use estrada_core::spectral::eigenvalues;
use estrada_core::verify::{verify_graph, verify_matrix};
use estrada_core::{bound_general, Error};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(80)) {
        prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in arb_graph(30)) {
        prop_assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn graph6_parser_never_panics(s in "[?-~]{0,20}") {
        let _ = parse_graph6(&s);
    }
}

#[test]
fn ladders_are_monotone_and_bounded() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..200 {
        let n = rng.random_range(3..=40);
        let g = random_connected(&mut rng, n);
        let seq = gamma_sequence(&g, 1000, 1e-10).unwrap();
        let lambda = eigenvalues(&adjacency_matrix(&g)).unwrap().largest();
        for w in seq.values.windows(2) {
            assert!(w[1] >= w[0] - 1e-12 * w[0], "{} then {}", w[0], w[1]);
        }
        assert!(seq.final_estimate <= lambda + 1e-8 * lambda.max(1.0));
        let t = bound_table_graph(&g, 1000, 1e-10).unwrap();
        for r in &t.rows {
            assert!(r.best_bound() <= t.exact_ee * (1.0 + 1e-9));
        }
        let v = verify_graph(&g, 1000, 1e-10).unwrap();
        assert!(v.passed(), "{:?}", v.violations);
    }
}

#[test]
fn gamma_and_xi_agree_on_adjacency_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for _ in 0..200 {
        let n = rng.random_range(2..=40);
        let g = random_connected(&mut rng, n);
        let a = gamma_sequence(&g, 1000, 1e-10).unwrap();
        let b = xi_sequence(&adjacency_matrix(&g), 1000, 1e-10).unwrap();
        assert_eq!(a.values.len(), b.values.len());
        for (x, y) in a.values.iter().zip(&b.values) {
            assert!((x - y).abs() <= 1e-12 * x.abs());
        }
    }
}

#[test]
fn seed_inequality_holds() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    for _ in 0..200 {
        let ell = rng.random_range(1..=30);
        let r = random_matrix(&mut rng, ell);
        let xi0 = xi_sequence(&r, 0, 1e-10).unwrap().values[0];
        let floor = r.frobenius_norm() / (ell as f64).sqrt();
        assert!(xi0 >= floor * (1.0 - 1e-12), "{xi0} < {floor}");
        let v = verify_matrix(&r, 1000, 1e-10).unwrap();
        assert!(v.passed(), "{:?}", v.violations);
    }
}

#[test]
fn baseline_never_beats_the_first_rung() {
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    for _ in 0..200 {
        let n = rng.random_range(2..=30);
        let g = random_connected(&mut rng, n);
        let t = bound_table_graph(&g, 1000, 1e-10).unwrap();
        let baseline = t.baseline_2m_over_n.unwrap();
        let avg = 2.0 * g.m() as f64 / n as f64;
        assert!((baseline - bound_general(avg, n).unwrap()).abs() <= 1e-12 * baseline);
        for r in &t.rows {
            assert!(r.bound_general.unwrap() >= baseline - 1e-12 * baseline);
        }
    }
}

#[test]
fn disconnected_graphs_are_rejected_by_the_graph_path_only() {
    let mut rng = ChaCha8Rng::seed_from_u64(35);
    let mut seen = 0;
    while seen < 30 {
        let g = random_graph(&mut rng, 12);
        if g.is_connected() {
            continue;
        }
        seen += 1;
        assert!(matches!(
            bound_table_graph(&g, 100, 1e-10),
            Err(Error::Disconnected { .. })
        ));
        let t = bound_table_matrix(&adjacency_matrix(&g), 100, 1e-10).unwrap();
        assert!(t.reducible);
        let ee = t.exact_ee;
        assert!(t.matrix_column().iter().all(|&b| b <= ee * (1.0 + 1e-9)));
    }
}
