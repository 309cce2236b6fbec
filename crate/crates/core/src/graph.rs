//! Undirected simple graphs with stable node identifiers.
//!
//! Node ids are dense `usize` indices fixed at construction. Removing nodes
//! never renumbers the survivors, so ids recorded in an attack trace always
//! refer to the original network. [`Graph::induced_subgraph`] is the one
//! place where ids are compacted, and it hands back the mapping.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};

pub type NodeId = usize;

/// Sentinel distance for nodes not reached by a breadth-first search.
pub(crate) const UNREACHED: usize = usize::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    present: Vec<bool>,
    // Sorted, deduplicated neighbor lists; empty for absent ids.
    adj: Vec<Vec<NodeId>>,
    labels: Option<Vec<String>>,
    node_count: usize,
    edge_count: usize,
}

/// Counts of input items discarded while building a simple graph.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BuildReport {
    pub self_loops: usize,
    pub duplicate_edges: usize,
}

impl BuildReport {
    pub fn dropped(&self) -> usize {
        self.self_loops + self.duplicate_edges
    }
}

impl Graph {
    /// A graph of `n` isolated nodes `0..n`.
    pub fn empty(n: usize) -> Self {
        Graph {
            present: vec![true; n],
            adj: vec![Vec::new(); n],
            labels: None,
            node_count: n,
            edge_count: 0,
        }
    }

    /// Builds a simple graph from an edge list. Self-loops and repeated
    /// edges (in either orientation) are dropped. The node set is
    /// `0..max(n_hint, largest endpoint + 1)`.
    pub fn from_edges<I>(edges: I, n_hint: usize) -> Self
    where
        I: IntoIterator<Item = (NodeId, NodeId)>,
    {
        Self::from_edges_reported(edges, n_hint).0
    }

    pub fn from_edges_reported<I>(edges: I, n_hint: usize) -> (Self, BuildReport)
    where
        I: IntoIterator<Item = (NodeId, NodeId)>,
    {
        let mut report = BuildReport::default();
        let mut adj: Vec<Vec<NodeId>> = vec![Vec::new(); n_hint];
        let mut raw = 0usize;
        for (u, v) in edges {
            if u == v {
                report.self_loops += 1;
                continue;
            }
            let hi = u.max(v);
            if hi >= adj.len() {
                adj.resize_with(hi + 1, Vec::new);
            }
            adj[u].push(v);
            adj[v].push(u);
            raw += 1;
        }
        let mut half_degree_sum = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            half_degree_sum += list.len();
        }
        let edge_count = half_degree_sum / 2;
        report.duplicate_edges = raw - edge_count;
        let n = adj.len();
        let g = Graph {
            present: vec![true; n],
            adj,
            labels: None,
            node_count: n,
            edge_count,
        };
        (g, report)
    }

    /// Attaches display labels, one per id in `0..id_bound()`.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.id_bound() {
            return Err(Error::InvalidArgument(format!(
                "expected {} labels, got {}",
                self.id_bound(),
                labels.len()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// One past the largest id ever assigned; removed ids stay reserved.
    pub fn id_bound(&self) -> usize {
        self.present.len()
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.node_count == 0
    }

    pub fn contains(&self, v: NodeId) -> bool {
        self.present.get(v).copied().unwrap_or(false)
    }

    /// Present node ids in increasing order.
    pub fn nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.present.iter().enumerate().filter_map(|(v, &p)| p.then_some(v))
    }

    /// Neighbors of `v` in increasing order. Absent ids have none.
    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        self.adj.get(v).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.neighbors(v).len()
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Each undirected edge once, as `(u, v)` with `u < v`, in
    /// lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().copied().filter(move |&v| u < v).map(move |v| (u, v)))
    }

    pub fn label(&self, v: NodeId) -> Option<&str> {
        self.labels.as_ref().and_then(|l| l.get(v)).map(String::as_str)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// The label of `v`, falling back to its numeric id.
    pub fn display_label(&self, v: NodeId) -> String {
        self.label(v).map_or_else(|| v.to_string(), str::to_owned)
    }

    fn check_node(&self, v: NodeId) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::UnknownNode(v))
        }
    }

    /// Returns a copy without `victims` and every edge incident on them.
    /// Surviving nodes keep their ids.
    pub fn remove_nodes(&self, victims: &[NodeId]) -> Result<Graph> {
        for &v in victims {
            self.check_node(v)?;
        }
        let mut g = self.clone();
        g.remove_in_place(victims);
        Ok(g)
    }

    pub(crate) fn remove_in_place(&mut self, victims: &[NodeId]) {
        let mut doomed = vec![false; self.id_bound()];
        let mut any = false;
        for &v in victims {
            if self.present[v] && !doomed[v] {
                doomed[v] = true;
                any = true;
            }
        }
        if !any {
            return;
        }
        let mut touched = Vec::new();
        for v in 0..self.id_bound() {
            if !doomed[v] {
                continue;
            }
            for &u in &self.adj[v] {
                if !doomed[u] {
                    touched.push(u);
                }
            }
            self.edge_count -= self.adj[v].iter().filter(|&&u| !doomed[u] || u > v).count();
            self.adj[v] = Vec::new();
            self.present[v] = false;
            self.node_count -= 1;
        }
        touched.sort_unstable();
        touched.dedup();
        for u in touched {
            self.adj[u].retain(|&w| !doomed[w]);
        }
    }

    /// Keeps only the nodes in `keep` (ids preserved).
    pub(crate) fn restrict_to(&self, keep: &[NodeId]) -> Graph {
        let mut kept = vec![false; self.id_bound()];
        for &v in keep {
            kept[v] = true;
        }
        let victims: Vec<NodeId> = self.nodes().filter(|&v| !kept[v]).collect();
        let mut g = self.clone();
        g.remove_in_place(&victims);
        g
    }

    /// The subgraph induced by `nodes` with ids compacted to
    /// `0..nodes.len()` in increasing original-id order. Returns the graph
    /// and the map from new id to original id. Labels are carried over.
    pub fn induced_subgraph(&self, nodes: &[NodeId]) -> Result<(Graph, Vec<NodeId>)> {
        let mut original: Vec<NodeId> = nodes.to_vec();
        original.sort_unstable();
        original.dedup();
        let mut new_id = vec![UNREACHED; self.id_bound()];
        for (i, &v) in original.iter().enumerate() {
            self.check_node(v)?;
            new_id[v] = i;
        }
        let edges = original.iter().flat_map(|&u| {
            let new_id = &new_id;
            self.neighbors(u)
                .iter()
                .filter(move |&&v| u < v && new_id[v] != UNREACHED)
                .map(move |&v| (new_id[u], new_id[v]))
        });
        let mut g = Graph::from_edges(edges, original.len());
        if let Some(labels) = &self.labels {
            g.labels = Some(original.iter().map(|&v| labels[v].clone()).collect());
        }
        Ok((g, original))
    }

    /// Breadth-first search from `source` writing hop counts into `dist`
    /// (length `id_bound()`), which must be pre-filled with [`UNREACHED`].
    /// Returns the visit order.
    pub(crate) fn bfs_fill(
        &self,
        source: NodeId,
        dist: &mut [usize],
        queue: &mut VecDeque<NodeId>,
        order: &mut Vec<NodeId>,
    ) {
        order.clear();
        queue.clear();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            let next = dist[u] + 1;
            for &w in &self.adj[u] {
                if dist[w] == UNREACHED {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
    }

    /// Hop distances from `source` to every node in its component.
    pub fn bfs_distances(&self, source: NodeId) -> Result<BTreeMap<NodeId, usize>> {
        self.check_node(source)?;
        let mut dist = vec![UNREACHED; self.id_bound()];
        let mut order = Vec::new();
        self.bfs_fill(source, &mut dist, &mut VecDeque::new(), &mut order);
        Ok(order.into_iter().map(|v| (v, dist[v])).collect())
    }

    pub fn connected_components(&self) -> ComponentPartition {
        let mut seen = vec![false; self.id_bound()];
        let mut components = Vec::new();
        let mut queue = VecDeque::new();
        for s in self.nodes() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        // Components were discovered in increasing order of their minimum
        // id, so a stable sort leaves size ties broken by that minimum.
        components.sort_by_key(|c| std::cmp::Reverse(c.len()));
        ComponentPartition { components }
    }

    /// The largest component (sorted ids) and its size. Ties go to the
    /// component holding the smallest id. Empty graphs give `([], 0)`.
    pub fn largest_connected_component(&self) -> (Vec<NodeId>, usize) {
        let mut parts = self.connected_components().components;
        if parts.is_empty() {
            return (Vec::new(), 0);
        }
        let lcc = parts.swap_remove(0);
        let size = lcc.len();
        (lcc, size)
    }

    /// True for graphs with exactly one component. The empty graph is not
    /// connected.
    pub fn is_connected(&self) -> bool {
        match self.nodes().next() {
            None => false,
            Some(s) => {
                let mut dist = vec![UNREACHED; self.id_bound()];
                let mut order = Vec::new();
                self.bfs_fill(s, &mut dist, &mut VecDeque::new(), &mut order);
                order.len() == self.node_count
            }
        }
    }
}

/// Connected components, largest first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentPartition {
    /// Each component's ids in increasing order; sizes non-increasing.
    pub components: Vec<Vec<NodeId>>,
}

impl ComponentPartition {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn largest(&self) -> Option<&[NodeId]> {
        self.components.first().map(Vec::as_slice)
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.components.iter().map(Vec::len).collect()
    }
}

/// Small named graphs used throughout the tests and the demo.
pub mod named {
    use super::{Graph, NodeId};

    pub fn path(n: usize) -> Graph {
        Graph::from_edges((1..n).map(|v| (v - 1, v)), n)
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 nodes");
        Graph::from_edges((0..n).map(|v| (v, (v + 1) % n)), n)
    }

    /// `K_{1,leaves}` with the hub at id 0.
    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges((1..=leaves).map(|v| (0, v)), leaves + 1)
    }

    pub fn complete(n: usize) -> Graph {
        let edges: Vec<(NodeId, NodeId)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::from_edges(edges, n)
    }
}
