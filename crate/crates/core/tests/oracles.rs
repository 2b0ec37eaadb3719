//! Checks against independent oracles: brute-force matrix powers, a
//! third-party graph6 encoder, the power method, and closed-form spectra.

mod common;

use common::{all_labelled_graphs, random_connected, random_graph, random_matrix, walks_by_matrix_power};
use estrada_core::bounds::{bound_table_graph, bound_table_matrix, gamma_sequence, xi_sequence};
use estrada_core::graph::{
    classify, generate, is_bipartite, k_degrees, parse_graph6, to_graph6, triangle_count, Family,
};
use estrada_core::matrix::adjacency_matrix;
use estrada_core::spectral::{eigenvalues, estrada_index, power_radius, spectral_moment};
use estrada_core::{bound_general, Termination};
use petgraph::graph6::ToGraph6;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn petgraph_encoding(g: &estrada_core::Graph) -> String {
    let mut pg = petgraph::Graph::<(), (), petgraph::Undirected>::new_undirected();
    let nodes: Vec<_> = (0..g.n()).map(|_| pg.add_node(())).collect();
    for (u, v) in g.edges() {
        pg.add_edge(nodes[u], nodes[v], ());
    }
    pg.graph6_string()
}

#[test]
fn graph6_matches_reference_encoder_for_all_four_vertex_graphs() {
    let mut seen = 0;
    for g in all_labelled_graphs(4) {
        let ours = to_graph6(&g);
        assert_eq!(ours, petgraph_encoding(&g), "{g:?}");
        assert_eq!(parse_graph6(&ours).unwrap(), g);
        seen += 1;
    }
    assert_eq!(seen, 64);
    let k4 = generate(Family::Complete(4)).unwrap();
    assert_eq!(petgraph_encoding(&k4), "C~");
    let empty = estrada_core::Graph::empty(4).unwrap();
    assert_eq!(petgraph_encoding(&empty), "C?");
}

#[test]
fn graph6_round_trip_up_to_six_vertices() {
    for n in 1..=6 {
        for g in all_labelled_graphs(n) {
            let s = to_graph6(&g);
            assert_eq!(parse_graph6(&s).unwrap(), g);
            assert_eq!(to_graph6(&parse_graph6(&s).unwrap()), s);
        }
    }
}

#[test]
fn graph6_matches_reference_on_random_larger_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for n in [7, 13, 40, 62, 63, 100] {
        let g = random_graph(&mut rng, n);
        assert_eq!(to_graph6(&g), petgraph_encoding(&g), "n = {n}");
    }
}

#[test]
fn k_degrees_match_matrix_powers() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..60 {
        let n = 1 + (rand::Rng::random_range(&mut rng, 0..12));
        let g = random_graph(&mut rng, n);
        for k in 0..=6 {
            let kd = k_degrees(&g, k);
            assert_eq!(kd.exact().unwrap(), walks_by_matrix_power(&g, k).as_slice());
        }
    }
}

#[test]
fn k_degree_recurrence_is_consistent() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..40 {
        let g = random_graph(&mut rng, 15);
        for k in 0..8 {
            let cur = k_degrees(&g, k);
            let next = k_degrees(&g, k + 1);
            let cur = cur.exact().unwrap();
            let lhs: u128 = next.exact().unwrap().iter().sum();
            let rhs: u128 = (0..g.n())
                .map(|i| g.neighbors(i).iter().map(|&j| cur[j]).sum::<u128>())
                .sum();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn gamma_matches_walk_count_ratio() {
    // normalized iteration against sqrt(Σ d_{k+1}² / Σ d_k²) in exact integers
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..50 {
        let g = random_connected(&mut rng, 12);
        let seq = gamma_sequence(&g, 6, 1e-300).unwrap();
        for (k, &gamma) in seq.values.iter().enumerate() {
            let num: u128 = walks_by_matrix_power(&g, k + 1).iter().map(|x| x * x).sum();
            let den: u128 = walks_by_matrix_power(&g, k).iter().map(|x| x * x).sum();
            let expect = (num as f64 / den as f64).sqrt();
            assert!((gamma - expect).abs() <= 1e-12 * expect, "k={k}: {gamma} vs {expect}");
        }
    }
}

#[test]
fn p4_k_degrees_follow_the_fibonacci_pattern() {
    let p4 = generate(Family::Path(4)).unwrap();
    let d: Vec<Vec<u128>> = (0..8).map(|k| k_degrees(&p4, k).exact().unwrap().to_vec()).collect();
    for k in 1..8 {
        // ends copy the inner vertices, inner vertices sum an end and the other inner
        assert_eq!(d[k][0], d[k - 1][1]);
        assert_eq!(d[k][1], d[k - 1][0] + d[k - 1][2]);
        assert_eq!(d[k][0], d[k][3]);
        assert_eq!(d[k][1], d[k][2]);
    }
}

#[test]
fn moment_identities_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..300 {
        let n = rand::Rng::random_range(&mut rng, 1..=30);
        let g = random_graph(&mut rng, n);
        let s = eigenvalues(&adjacency_matrix(&g)).unwrap();
        let (nf, two_m) = (n as f64, 2.0 * g.m() as f64);
        let six_t = 6.0 * triangle_count(&g) as f64;
        assert_eq!(spectral_moment(&s, 0), nf);
        assert!(spectral_moment(&s, 1).abs() <= 1e-9 * nf);
        assert!((spectral_moment(&s, 2) - two_m).abs() <= 1e-8 * two_m.max(1.0));
        assert!((spectral_moment(&s, 3) - six_t).abs() <= 1e-7 * six_t.max(1.0));
    }
}

#[test]
fn eigensolver_agrees_with_power_method() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..200 {
        let ell = rand::Rng::random_range(&mut rng, 1..=30);
        let r = random_matrix(&mut rng, ell);
        let lambda = eigenvalues(&r).unwrap().largest();
        let rho = power_radius(&r, 1e-12, 100_000).unwrap();
        assert!((lambda - rho).abs() <= 1e-7 * lambda.max(1.0), "{lambda} vs {rho}");
    }
}

#[test]
fn spectrum_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for _ in 0..100 {
        let ell = rand::Rng::random_range(&mut rng, 1..=25);
        let r = random_matrix(&mut rng, ell);
        let s = eigenvalues(&r).unwrap();
        assert_eq!(s.order(), ell);
        assert!(s.eigenvalues.windows(2).all(|w| w[0] >= w[1]));
        let sum: f64 = s.eigenvalues.iter().sum();
        assert!((sum - r.trace()).abs() <= 1e-9 * r.trace().abs().max(1.0));
        let fro2 = r.frobenius_norm().powi(2);
        assert!((fro2 - spectral_moment(&s, 2)).abs() <= 1e-9 * fro2);
        assert!(estrada_index(&s) > 0.0);
    }
}

#[test]
fn bipartite_spectra_are_symmetric() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut checked = 0;
    while checked < 100 {
        let n = rand::Rng::random_range(&mut rng, 2..=20);
        let g = random_connected(&mut rng, n);
        if is_bipartite(&g).is_none() {
            continue;
        }
        assert_eq!(triangle_count(&g), 0);
        let s = eigenvalues(&adjacency_matrix(&g)).unwrap().eigenvalues;
        let n = s.len();
        for i in 0..n {
            assert!((s[i] + s[n - 1 - i]).abs() <= 1e-8);
        }
        checked += 1;
    }
}

#[test]
fn closed_form_spectra() {
    // K_n: n-1 and -1; C_n: 2cos(2πj/n); K_{p,q}: ±sqrt(pq) and zeros
    for n in 2..=9 {
        let s = eigenvalues(&adjacency_matrix(&generate(Family::Complete(n)).unwrap())).unwrap();
        assert!((s.largest() - (n - 1) as f64).abs() < 1e-10);
        assert!(s.eigenvalues[1..].iter().all(|x| (x + 1.0).abs() < 1e-10));
    }
    for n in 3..=12 {
        let s = eigenvalues(&adjacency_matrix(&generate(Family::Cycle(n)).unwrap())).unwrap();
        let mut expect: Vec<f64> = (0..n)
            .map(|j| 2.0 * (2.0 * std::f64::consts::PI * j as f64 / n as f64).cos())
            .collect();
        expect.sort_by(|a, b| b.total_cmp(a));
        for (a, b) in s.eigenvalues.iter().zip(&expect) {
            assert!((a - b).abs() < 1e-10, "C{n}: {a} vs {b}");
        }
        let ee: f64 = expect.iter().map(|x| x.exp()).sum();
        assert!((estrada_index(&s) - ee).abs() < 1e-9);
    }
    for (p, q) in [(1, 1), (1, 5), (2, 3), (3, 3), (4, 7)] {
        let g = generate(Family::CompleteBipartite(p, q)).unwrap();
        let s = eigenvalues(&adjacency_matrix(&g)).unwrap().eigenvalues;
        let r = ((p * q) as f64).sqrt();
        assert!((s[0] - r).abs() < 1e-10 && (s[s.len() - 1] + r).abs() < 1e-10);
        assert!(s[1..s.len() - 1].iter().all(|x| x.abs() < 1e-10));
    }
}

#[test]
fn xi_converges_to_the_eigensolver_radius() {
    let mut rng = ChaCha8Rng::seed_from_u64(18);
    for _ in 0..50 {
        let mut r = random_matrix(&mut rng, 5);
        // zero the diagonal
        let mut data = r.as_slice().to_vec();
        for i in 0..5 {
            data[i * 5 + i] = 0.0;
        }
        r = estrada_core::SymNonnegMatrix::from_dense(5, data).unwrap();
        let seq = xi_sequence(&r, 1000, 1e-14).unwrap();
        assert!(matches!(seq.terminated_by, Termination::Converged { .. }));
        assert!(seq.values.windows(2).all(|w| w[1] >= w[0] * (1.0 - 1e-12)));
        let rho = eigenvalues(&r).unwrap().largest();
        assert!((seq.final_estimate - rho).abs() <= 1e-9 * rho);
    }
}

#[test]
fn matrix_tables_stay_below_the_eigensolver_index() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for _ in 0..50 {
        let r = random_matrix(&mut rng, 6);
        let t = bound_table_matrix(&r, 1000, 1e-10).unwrap();
        let ee = estrada_index(&eigenvalues(&r).unwrap());
        let col = t.matrix_column();
        assert!(col.windows(2).all(|w| w[1] >= w[0] - 1e-12 * w[0]));
        assert!(col.iter().all(|&b| b <= ee * (1.0 + 1e-9)));
    }
}

#[test]
fn classification_invariants() {
    let mut graphs: Vec<estrada_core::Graph> = all_labelled_graphs(5).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    graphs.extend((0..100).map(|_| random_graph(&mut rng, 9)));
    for g in &graphs {
        let c = classify(g);
        if let Some(r) = c.regular {
            assert_eq!(c.semiregular, Some((r, r)));
            assert_eq!(c.pseudoregular.map(|m| m.to_f64()), Some(r as f64));
        }
        if let Some(mu) = c.pseudoregular {
            let sq = c.semipseudoregular.expect("pseudoregular implies semipseudoregular");
            assert!(sq.same_value(estrada_core::Ratio::new(mu.num * mu.num, mu.den * mu.den)));
        }
        if let Some((a, b)) = c.semiregular {
            let mu = c.semipseudoregular.expect("semiregular implies semipseudoregular");
            assert!(mu.same_value(estrada_core::Ratio::new(a * b, 1)));
        }
        assert_eq!(c.strictly_semiregular, c.semiregular.is_some() && c.regular.is_none());
        assert_eq!(
            c.strictly_pseudosemiregular,
            c.pseudosemiregular.is_some() && c.pseudoregular.is_none()
        );
        assert_eq!(
            c.strictly_semipseudoregular,
            c.semipseudoregular.is_some() && c.pseudoregular.is_none()
        );
        if c.is_bipartite() {
            assert_eq!(triangle_count(g), 0);
        }
    }
}

#[test]
fn complete_bipartite_classes() {
    for p in 1..=5 {
        for q in 1..=5 {
            let c = classify(&generate(Family::CompleteBipartite(p, q)).unwrap());
            if p == q {
                assert_eq!(c.regular, Some(p as u64));
                assert!(!c.strictly_semiregular);
            } else {
                assert!(c.strictly_semiregular, "K_{p},{q}");
                assert_eq!(c.regular, None);
            }
        }
    }
}

#[test]
fn pseudoregular_graphs_have_constant_ladders() {
    // regular graphs are harmonic: γ(k) = λ₁ for every k
    for g in [
        generate(Family::Complete(6)).unwrap(),
        generate(Family::Cycle(9)).unwrap(),
        estrada_core::graph::parse_graph6("IheA@GUAo").unwrap(), // Petersen
    ] {
        let c = classify(&g);
        assert!(c.pseudoregular.is_some());
        let lambda = eigenvalues(&adjacency_matrix(&g)).unwrap().largest();
        let seq = gamma_sequence(&g, 20, 1e-10).unwrap();
        assert!(seq.values.iter().all(|x| (x - lambda).abs() <= 1e-10 * lambda));
    }
}

#[test]
fn bounds_converge_to_the_limit() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let tol = 1e-10;
    for _ in 0..200 {
        let n = rand::Rng::random_range(&mut rng, 3..=30);
        let g = random_connected(&mut rng, n);
        let t = bound_table_graph(&g, 1000, tol).unwrap();
        if !matches!(t.terminated_by, Termination::Converged { .. }) {
            continue;
        }
        let lambda = t.spectral_radius;
        let last = t.last_row().seq_value;
        let diff = (bound_general(last, n).unwrap() - bound_general(lambda, n).unwrap()).abs();
        assert!(diff <= 10.0 * tol * lambda.exp(), "diff {diff:e}, λ₁ {lambda}");
    }
}
