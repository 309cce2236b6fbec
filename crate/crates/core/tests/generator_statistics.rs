use netvuln::generators::{barabasi_albert, erdos_renyi, extract_giant, watts_strogatz};
use netvuln::metrics::{average_clustering, ClusteringConvention};
use netvuln::{GeneratorSpec, Model, ModelKind};

#[test]
fn erdos_renyi_edge_count_matches_its_expectation() {
    let (n, p) = (200usize, 0.03);
    let pairs = (n * (n - 1) / 2) as f64;
    let seeds = 50;
    let counts: Vec<f64> = (0..seeds)
        .map(|s| erdos_renyi(n, p, s).unwrap().edge_count() as f64)
        .collect();
    let mean = counts.iter().sum::<f64>() / seeds as f64;
    let sd = (pairs * p * (1.0 - p)).sqrt();
    let standard_error = sd / (seeds as f64).sqrt();
    assert!(
        (mean - pairs * p).abs() < 3.0 * standard_error,
        "mean {mean}, expected {}",
        pairs * p
    );
}

#[test]
fn erdos_renyi_degree_is_binomial_on_average() {
    let n = 500;
    let p = 6.0 / 499.0;
    let degrees: Vec<f64> = (0..10)
        .map(|s| {
            let g = erdos_renyi(n, p, s).unwrap();
            2.0 * g.edge_count() as f64 / n as f64
        })
        .collect();
    let mean = degrees.iter().sum::<f64>() / degrees.len() as f64;
    assert!((5.5..=6.5).contains(&mean), "{mean}");
}

#[test]
fn watts_strogatz_preserves_edges_and_lattice_clustering() {
    let lattice = watts_strogatz(500, 6, 0.0, 1).unwrap();
    assert!(lattice.nodes().all(|v| lattice.degree(v) == 6));
    assert!((average_clustering(&lattice, ClusteringConvention::default()) - 0.6).abs() < 1e-12);
    for seed in 0..10 {
        let g = watts_strogatz(500, 6, 0.1, seed).unwrap();
        assert_eq!(g.edge_count(), 1500);
        let c = average_clustering(&g, ClusteringConvention::default());
        assert!(c < 0.6 && c > 0.3, "seed {seed}: {c}");
    }
    let random = watts_strogatz(500, 6, 1.0, 3).unwrap();
    assert_eq!(random.edge_count(), 1500);
    assert!(average_clustering(&random, ClusteringConvention::default()) < 0.1);
}

#[test]
fn barabasi_albert_has_a_heavy_tail() {
    for seed in 0..10 {
        let g = barabasi_albert(500, 3, seed).unwrap();
        assert_eq!(g.edge_count(), 1494);
        assert!(g.is_connected());
        let max = g.nodes().map(|v| g.degree(v)).max().unwrap();
        let min = g.nodes().map(|v| g.degree(v)).min().unwrap();
        assert!(max > 30, "seed {seed}: max degree {max}");
        assert!(min >= 3);
    }
}

#[test]
fn seeds_reproduce_and_differ() {
    for kind in ModelKind::ALL {
        let spec = GeneratorSpec::new(Model::with_average_degree(kind, 300, 6.0), 300, 17);
        let a = spec.generate().unwrap();
        let b = spec.generate().unwrap();
        assert_eq!(a.edges().collect::<Vec<_>>(), b.edges().collect::<Vec<_>>());
        let c = spec.with_seed(18).generate().unwrap();
        assert_ne!(a.edges().collect::<Vec<_>>(), c.edges().collect::<Vec<_>>(), "{kind:?}");
    }
}

#[test]
fn giant_component_of_a_sparse_graph() {
    let g = erdos_renyi(400, 1.2 / 399.0, 5).unwrap();
    assert!(!g.is_connected());
    let giant = extract_giant(&g).unwrap();
    assert!(giant.is_connected());
    assert_eq!(giant.node_count(), g.largest_connected_component().1);
    assert_eq!(giant.id_bound(), giant.node_count());
}
