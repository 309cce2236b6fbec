//! Brute-force reference implementations shared by the integration tests.
//!
//! Everything here works on a plain adjacency matrix and all-pairs
//! Floyd–Warshall distances, so it shares no code path with the library's
//! breadth-first searches, Brandes accumulation or component tracking.

#![allow(dead_code)]

use netvuln::{Graph, NodeId};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const INF: usize = usize::MAX / 4;

#[derive(Clone, Debug)]
pub struct Dense {
    /// `alive[v]` is false once v has been removed.
    pub alive: Vec<bool>,
    pub adj: Vec<Vec<bool>>,
}

impl Dense {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![vec![false; n]; n];
        for &(u, v) in edges {
            if u != v {
                adj[u][v] = true;
                adj[v][u] = true;
            }
        }
        Dense {
            alive: vec![true; n],
            adj,
        }
    }

    pub fn to_graph(&self) -> Graph {
        let n = self.alive.len();
        let edges: Vec<(NodeId, NodeId)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| self.adj[u][v])
            .collect();
        Graph::from_edges(edges, n)
    }

    pub fn nodes(&self) -> Vec<usize> {
        (0..self.alive.len()).filter(|&v| self.alive[v]).collect()
    }

    pub fn remove(&mut self, victims: &[usize]) {
        for &v in victims {
            self.alive[v] = false;
        }
    }

    fn linked(&self, u: usize, v: usize) -> bool {
        self.alive[u] && self.alive[v] && self.adj[u][v]
    }

    /// Floyd–Warshall over live nodes; dead rows and columns stay at INF.
    pub fn distances(&self) -> Vec<Vec<usize>> {
        let n = self.alive.len();
        let mut d = vec![vec![INF; n]; n];
        for u in self.nodes() {
            d[u][u] = 0;
            for v in self.nodes() {
                if self.linked(u, v) {
                    d[u][v] = 1;
                }
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if d[i][k] + d[k][j] < d[i][j] {
                        d[i][j] = d[i][k] + d[k][j];
                    }
                }
            }
        }
        d
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.alive.len()).filter(|&u| self.linked(v, u)).count()
    }

    /// Components from the distance matrix, each sorted, largest first
    /// with ties to the smaller minimum id.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let d = self.distances();
        let mut seen = vec![false; self.alive.len()];
        let mut out = Vec::new();
        for s in self.nodes() {
            if seen[s] {
                continue;
            }
            let comp: Vec<usize> = self.nodes().into_iter().filter(|&v| d[s][v] < INF).collect();
            for &v in &comp {
                seen[v] = true;
            }
            out.push(comp);
        }
        out.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
        out
    }

    pub fn restricted(&self, keep: &[usize]) -> Dense {
        let mut g = self.clone();
        for v in 0..g.alive.len() {
            g.alive[v] = keep.contains(&v);
        }
        g
    }
}

/// Counts shortest s–t paths through each node by walking every path.
fn walk(d: &[Vec<usize>], g: &Dense, u: usize, t: usize, path: &mut Vec<usize>, counts: &mut [f64], total: &mut f64) {
    if u == t {
        *total += 1.0;
        for &v in &path[1..path.len() - 1] {
            counts[v] += 1.0;
        }
        return;
    }
    for w in g.nodes() {
        if g.adj[u][w] && d[w][t] + 1 == d[u][t] {
            path.push(w);
            walk(d, g, w, t, path, counts, total);
            path.pop();
        }
    }
}

/// Betweenness by enumerating all shortest paths of every unordered pair.
pub fn betweenness(g: &Dense) -> Vec<(usize, f64)> {
    let d = g.distances();
    let n = g.alive.len();
    let mut score = vec![0.0; n];
    let nodes = g.nodes();
    for (i, &s) in nodes.iter().enumerate() {
        for &t in &nodes[i + 1..] {
            if d[s][t] >= INF {
                continue;
            }
            let mut counts = vec![0.0; n];
            let mut total = 0.0;
            walk(&d, g, s, t, &mut vec![s], &mut counts, &mut total);
            for v in 0..n {
                score[v] += counts[v] / total;
            }
        }
    }
    nodes.into_iter().map(|v| (v, score[v])).collect()
}

pub fn eccentricity(g: &Dense) -> Vec<(usize, usize)> {
    let d = g.distances();
    g.nodes()
        .into_iter()
        .map(|v| (v, g.nodes().into_iter().map(|u| d[v][u]).max().unwrap()))
        .collect()
}

pub fn remoteness(g: &Dense) -> Vec<(usize, usize)> {
    let d = g.distances();
    g.nodes()
        .into_iter()
        .map(|v| (v, g.nodes().into_iter().map(|u| d[v][u]).sum()))
        .collect()
}

pub fn degrees(g: &Dense) -> Vec<(usize, usize)> {
    g.nodes().into_iter().map(|v| (v, g.degree(v))).collect()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Kind {
    Betweenness,
    Eccentricity,
    Degree,
    Remoteness,
}

pub fn kind_of(k: netvuln::CentralityKind) -> Kind {
    match k {
        netvuln::CentralityKind::Betweenness => Kind::Betweenness,
        netvuln::CentralityKind::Eccentricity => Kind::Eccentricity,
        netvuln::CentralityKind::Degree => Kind::Degree,
        netvuln::CentralityKind::Remoteness => Kind::Remoteness,
    }
}

pub fn oracle_scores(g: &Dense, kind: Kind) -> Vec<(usize, f64)> {
    let real = |v: Vec<(usize, usize)>| v.into_iter().map(|(a, b)| (a, b as f64)).collect();
    match kind {
        Kind::Betweenness => betweenness(g),
        Kind::Eccentricity => real(eccentricity(g)),
        Kind::Degree => real(degrees(g)),
        Kind::Remoteness => real(remoteness(g)),
    }
}

fn near(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9 * a.abs().max(b.abs()) + 1e-12
}

/// Score-ordered groups, most central first (max for degree and
/// betweenness, min otherwise).
pub fn oracle_tiers(g: &Dense, kind: Kind) -> Vec<Vec<usize>> {
    let mut scores = oracle_scores(g, kind);
    let higher = matches!(kind, Kind::Degree | Kind::Betweenness);
    let mut tiers = Vec::new();
    while !scores.is_empty() {
        let best = scores
            .iter()
            .map(|s| s.1)
            .fold(if higher { f64::MIN } else { f64::MAX }, |a, b| {
                if higher {
                    a.max(b)
                } else {
                    a.min(b)
                }
            });
        let (tier, rest): (Vec<_>, Vec<_>) = scores.into_iter().partition(|s| near(s.1, best));
        tiers.push(tier.into_iter().map(|s| s.0).collect());
        scores = rest;
    }
    tiers
}

/// The removal sets an attack must produce, step by step.
pub fn oracle_attack(g: &Dense, kind: Kind, recalculated: bool) -> Vec<Vec<usize>> {
    let mut g = g.clone();
    let mut steps = Vec::new();
    let lcc_size = |g: &Dense| g.components().first().map_or(0, Vec::len);
    if recalculated {
        while lcc_size(&g) > 3 {
            let lcc = g.components().swap_remove(0);
            let victims = oracle_tiers(&g.restricted(&lcc), kind).swap_remove(0);
            g.remove(&victims);
            steps.push(victims);
        }
    } else {
        for tier in oracle_tiers(&g, kind) {
            let victims: Vec<usize> = tier.into_iter().filter(|&v| g.alive[v]).collect();
            g.remove(&victims);
            steps.push(victims);
            if lcc_size(&g) <= 3 {
                break;
            }
        }
    }
    steps
}

/// A named test graph: (name, node count, edges).
pub type Case = (String, usize, Vec<(usize, usize)>);

/// Paths, cycles, stars and cliques on up to `max_n` nodes, then `random`
/// connected graphs on 2..=max_n nodes.
pub fn corpus(max_n: usize, random: usize, seed: u64) -> Vec<Case> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        out.push((format!("P{n}"), n, (1..n).map(|v| (v - 1, v)).collect()));
        if n >= 3 {
            out.push((format!("C{n}"), n, (0..n).map(|v| (v, (v + 1) % n)).collect()));
        }
        out.push((format!("S{}", n - 1), n, (1..n).map(|v| (0, v)).collect()));
        out.push((
            format!("K{n}"),
            n,
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..random {
        let n = rng.gen_range(2..=max_n);
        out.push((format!("random#{i}"), n, random_connected_edges(&mut rng, n)));
    }
    out
}

/// Random spanning tree plus each other pair with probability 0.3, under a
/// random relabeling.
pub fn random_connected_edges(rng: &mut ChaCha8Rng, n: usize) -> Vec<(usize, usize)> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((perm[rng.gen_range(0..v)], perm[v]));
    }
    let density = rng.gen_range(0.0..0.6);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < density {
                edges.push((u, v));
            }
        }
    }
    edges
}
