//! Seeded Erdős–Rényi, Watts–Strogatz and Barabási–Albert generators.
//!
//! All randomness comes from ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded
//! with `seed_from_u64(seed)`. Each model draws from its own stream, set
//! with `set_stream`: 1 for Erdős–Rényi, 2 for Watts–Strogatz, 3 for
//! Barabási–Albert. Uniform reals are `rng.gen::<f64>()` in `[0, 1)` and
//! uniform integers are `rng.gen_range(0..bound)`. Given these rules the
//! edge set is a pure function of `(model, n, parameters, seed)`.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

/// Rewiring probability used when none is given.
pub const DEFAULT_REWIRING: f64 = 0.1;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "snake_case")]
pub enum Model {
    ErdosRenyi { p: f64 },
    WattsStrogatz { k: usize, beta: f64 },
    BarabasiAlbert { m: usize },
}

impl Model {
    pub fn short_name(&self) -> &'static str {
        match self {
            Model::ErdosRenyi { .. } => "er",
            Model::WattsStrogatz { .. } => "ws",
            Model::BarabasiAlbert { .. } => "ba",
        }
    }

    fn stream(&self) -> u64 {
        match self {
            Model::ErdosRenyi { .. } => 1,
            Model::WattsStrogatz { .. } => 2,
            Model::BarabasiAlbert { .. } => 3,
        }
    }

    /// Parameters targeting a mean degree of `avg_degree` on `n` nodes:
    /// `p = avg/(n-1)`, `k = avg` rounded to an even count, `m = avg/2`.
    pub fn with_average_degree(kind: ModelKind, n: usize, avg_degree: f64) -> Model {
        match kind {
            ModelKind::ErdosRenyi => Model::ErdosRenyi {
                p: if n > 1 { avg_degree / (n - 1) as f64 } else { 0.0 },
            },
            ModelKind::WattsStrogatz => Model::WattsStrogatz {
                k: 2 * ((avg_degree / 2.0).round() as usize),
                beta: DEFAULT_REWIRING,
            },
            ModelKind::BarabasiAlbert => Model::BarabasiAlbert {
                m: (avg_degree / 2.0).round() as usize,
            },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModelKind {
    ErdosRenyi,
    WattsStrogatz,
    BarabasiAlbert,
}

impl ModelKind {
    pub const ALL: [ModelKind; 3] = [
        ModelKind::ErdosRenyi,
        ModelKind::WattsStrogatz,
        ModelKind::BarabasiAlbert,
    ];
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    #[serde(flatten)]
    pub model: Model,
    pub n: usize,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn new(model: Model, n: usize, seed: u64) -> Self {
        GeneratorSpec { model, n, seed }
    }

    pub fn with_seed(self, seed: u64) -> Self {
        GeneratorSpec { seed, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        let bad = |msg: String| Err(Error::InvalidArgument(msg));
        match self.model {
            Model::ErdosRenyi { p } => {
                if !(0.0..=1.0).contains(&p) {
                    return bad(format!("edge probability {p} outside [0, 1]"));
                }
            }
            Model::WattsStrogatz { k, beta } => {
                if k % 2 != 0 || k == 0 || k >= n {
                    return bad(format!("lattice degree k={k} must be even with 0 < k < n={n}"));
                }
                if !(0.0..=1.0).contains(&beta) {
                    return bad(format!("rewiring probability {beta} outside [0, 1]"));
                }
            }
            Model::BarabasiAlbert { m } => {
                if m == 0 || m >= n {
                    return bad(format!("attachment count m={m} must satisfy 1 <= m < n={n}"));
                }
            }
        }
        Ok(())
    }

    pub fn generate(&self) -> Result<Graph> {
        self.validate()?;
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(self.model.stream());
        Ok(match self.model {
            Model::ErdosRenyi { p } => erdos_renyi_with(self.n, p, &mut rng),
            Model::WattsStrogatz { k, beta } => watts_strogatz_with(self.n, k, beta, &mut rng),
            Model::BarabasiAlbert { m } => barabasi_albert_with(self.n, m, &mut rng),
        })
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.model {
            Model::ErdosRenyi { p } => write!(f, "er(n={}, p={p})", self.n),
            Model::WattsStrogatz { k, beta } => write!(f, "ws(n={}, k={k}, beta={beta})", self.n),
            Model::BarabasiAlbert { m } => write!(f, "ba(n={}, m={m})", self.n),
        }
    }
}

pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph> {
    GeneratorSpec::new(Model::ErdosRenyi { p }, n, seed).generate()
}

pub fn watts_strogatz(n: usize, k: usize, beta: f64, seed: u64) -> Result<Graph> {
    GeneratorSpec::new(Model::WattsStrogatz { k, beta }, n, seed).generate()
}

pub fn barabasi_albert(n: usize, m: usize, seed: u64) -> Result<Graph> {
    GeneratorSpec::new(Model::BarabasiAlbert { m }, n, seed).generate()
}

// Pairs (u, v), u < v, in lexicographic order; one uniform draw each.
fn erdos_renyi_with(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(edges, n)
}

// Ring lattice, then one pass per neighbor offset j = 1..=k/2. For each
// node u in order, the lattice edge (u, u+j) is rewired with probability
// beta to (u, w), w drawn uniformly until it is neither u nor an existing
// neighbor. Nodes already adjacent to everyone are skipped.
fn watts_strogatz_with(n: usize, k: usize, beta: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut adj: Vec<Vec<bool>> = vec![vec![false; n]; n];
    let mut deg = vec![0usize; n];
    let link = |adj: &mut Vec<Vec<bool>>, deg: &mut Vec<usize>, u: usize, v: usize, on: bool| {
        adj[u][v] = on;
        adj[v][u] = on;
        if on {
            deg[u] += 1;
            deg[v] += 1;
        } else {
            deg[u] -= 1;
            deg[v] -= 1;
        }
    };
    for u in 0..n {
        for j in 1..=k / 2 {
            link(&mut adj, &mut deg, u, (u + j) % n, true);
        }
    }
    for j in 1..=k / 2 {
        for u in 0..n {
            let v = (u + j) % n;
            if rng.gen::<f64>() >= beta {
                continue;
            }
            if !adj[u][v] || deg[u] >= n - 1 {
                continue;
            }
            let w = loop {
                let w = rng.gen_range(0..n);
                if w != u && !adj[u][w] {
                    break w;
                }
            };
            link(&mut adj, &mut deg, u, v, false);
            link(&mut adj, &mut deg, u, w, true);
        }
    }
    let edges = (0..n).flat_map(|u| {
        let row = &adj[u];
        (u + 1..n).filter(move |&v| row[v]).map(move |v| (u, v))
    });
    Graph::from_edges(edges.collect::<Vec<_>>(), n)
}

// Seed clique on nodes 0..m. Node v = m..n then picks m distinct targets
// by drawing uniformly from the endpoint list (one entry per edge end, so
// degree-proportional), redrawing duplicates. With m = 1 the seed node has
// no edges yet and node 1 attaches to it directly.
fn barabasi_albert_with(n: usize, m: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges: Vec<(NodeId, NodeId)> = Vec::new();
    let mut endpoints: Vec<NodeId> = Vec::new();
    for u in 0..m {
        for v in u + 1..m {
            edges.push((u, v));
            endpoints.extend([u, v]);
        }
    }
    let mut targets: Vec<NodeId> = Vec::with_capacity(m);
    for v in m..n {
        targets.clear();
        if endpoints.is_empty() {
            targets.extend(0..v);
        } else {
            while targets.len() < m {
                let t = endpoints[rng.gen_range(0..endpoints.len())];
                if !targets.contains(&t) {
                    targets.push(t);
                }
            }
        }
        for &t in &targets {
            edges.push((t, v));
            endpoints.extend([t, v]);
        }
    }
    Graph::from_edges(edges, n)
}

/// The largest connected component as a standalone graph with ids
/// compacted in original-id order. Labels are carried over; unlabeled
/// inputs are labeled with their original ids.
pub fn extract_giant(g: &Graph) -> Result<Graph> {
    if g.is_empty() {
        return Err(Error::Domain(
            "cannot extract the giant component of an empty graph".into(),
        ));
    }
    let (lcc, _) = g.largest_connected_component();
    let (giant, original) = g.induced_subgraph(&lcc)?;
    if giant.labels().is_some() {
        Ok(giant)
    } else {
        giant.with_labels(original.iter().map(ToString::to_string).collect())
    }
}
