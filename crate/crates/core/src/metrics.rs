//! Summary statistics of a network: size, components, diameter, radius,
//! characteristic path length, average degree and clustering.

use serde::{Deserialize, Serialize};

use crate::centrality::all_sources;
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

/// How nodes with fewer than two neighbors enter the mean clustering
/// coefficient.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClusteringConvention {
    /// They count as zero and the mean runs over every node.
    #[default]
    LowDegreeAsZero,
    /// They are left out of the mean.
    ExcludeLowDegree,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NetworkStats {
    pub node_count: usize,
    pub edge_count: usize,
    pub ncc: usize,
    pub diameter: usize,
    pub radius: usize,
    /// Ordered pairs `(u, v)`, `u != v`, at finite distance.
    pub connected_pair_count: u64,
    pub characteristic_path_length: f64,
    pub average_degree: f64,
    pub clustering_coefficient: f64,
}

/// `2 * (edges among neighbors) / (d * (d - 1))`, or `None` when `v` has
/// fewer than two neighbors.
pub fn local_clustering(g: &Graph, v: NodeId) -> Result<Option<f64>> {
    if !g.contains(v) {
        return Err(Error::UnknownNode(v));
    }
    let nbrs = g.neighbors(v);
    let d = nbrs.len();
    if d < 2 {
        return Ok(None);
    }
    let mut links = 0usize;
    for (i, &a) in nbrs.iter().enumerate() {
        links += nbrs[i + 1..].iter().filter(|&&b| g.has_edge(a, b)).count();
    }
    Ok(Some(2.0 * links as f64 / (d * (d - 1)) as f64))
}

pub fn average_clustering(g: &Graph, convention: ClusteringConvention) -> f64 {
    let mut sum = 0.0;
    let mut counted = 0usize;
    for v in g.nodes() {
        match local_clustering(g, v).expect("node is present") {
            Some(c) => {
                sum += c;
                counted += 1;
            }
            None if convention == ClusteringConvention::LowDegreeAsZero => counted += 1,
            None => {}
        }
    }
    if counted == 0 {
        0.0
    } else {
        sum / counted as f64
    }
}

pub fn network_stats(g: &Graph) -> Result<NetworkStats> {
    network_stats_with(g, ClusteringConvention::default())
}

/// Exact statistics via a breadth-first search from every node. On a
/// disconnected graph, diameter and radius describe the largest component
/// while the path length averages over all connected ordered pairs.
pub fn network_stats_with(g: &Graph, convention: ClusteringConvention) -> Result<NetworkStats> {
    if g.is_empty() {
        return Err(Error::Domain("statistics of an empty graph".into()));
    }
    let parts = g.connected_components();
    let mut in_lcc = vec![false; g.id_bound()];
    for &v in parts.largest().unwrap_or(&[]) {
        in_lcc[v] = true;
    }

    // (eccentricity, reached count, distance sum) per source.
    let sweeps = all_sources(g, |_, dist, order| {
        let ecc = order.last().map_or(0, |&far| dist[far]);
        let sum: u64 = order.iter().map(|&v| dist[v] as u64).sum();
        (ecc, order.len() as u64 - 1, sum)
    });

    let mut diameter = 0;
    let mut radius = usize::MAX;
    let mut pairs = 0u64;
    let mut total = 0u64;
    for &(v, (ecc, reached, sum)) in &sweeps {
        pairs += reached;
        total += sum;
        if in_lcc[v] {
            diameter = diameter.max(ecc);
            radius = radius.min(ecc);
        }
    }

    Ok(NetworkStats {
        node_count: g.node_count(),
        edge_count: g.edge_count(),
        ncc: parts.len(),
        diameter,
        radius,
        connected_pair_count: pairs,
        characteristic_path_length: if pairs == 0 { 0.0 } else { total as f64 / pairs as f64 },
        average_degree: 2.0 * g.edge_count() as f64 / g.node_count() as f64,
        clustering_coefficient: average_clustering(g, convention),
    })
}
