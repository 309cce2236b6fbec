//! Exact degree, eccentricity, remoteness and betweenness, and the
//! partition of nodes into equal-score tiers that drives the attacks.
//!
//! Eccentricity and remoteness are lower-is-central and are only defined on
//! connected graphs. Degree and betweenness are higher-is-central.
//!
//! Betweenness is unnormalized and counts unordered pairs `{s, t}` with
//! `s != v != t`. It is accumulated per source with Brandes' dependency
//! recursion. Sources are processed in fixed blocks of [`SOURCE_BLOCK`]
//! consecutive ids; each block is summed in id order and block totals are
//! then added in block order. The `parallel` feature only changes which
//! thread computes a block, so scores are bit-identical with or without it.

use std::cmp::Ordering;
use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId, UNREACHED};

/// Number of consecutive sources summed together before the block totals
/// are combined.
pub const SOURCE_BLOCK: usize = 32;

/// Relative tolerance under which two real scores share a tier.
pub const TIER_REL_TOL: f64 = 1e-9;
/// Absolute floor for [`TIER_REL_TOL`], so near-zero scores tie.
pub const TIER_ABS_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CentralityKind {
    Betweenness,
    Eccentricity,
    Degree,
    Remoteness,
}

impl CentralityKind {
    /// In the order used for strategy codes: B, C, D, M.
    pub const ALL: [CentralityKind; 4] = [
        CentralityKind::Betweenness,
        CentralityKind::Eccentricity,
        CentralityKind::Degree,
        CentralityKind::Remoteness,
    ];

    pub fn higher_is_central(self) -> bool {
        matches!(self, CentralityKind::Degree | CentralityKind::Betweenness)
    }

    /// Letter of the center this measure defines: betweenness center (B),
    /// graph center (C), degree center (D), median (M).
    pub fn code(self) -> char {
        match self {
            CentralityKind::Betweenness => 'B',
            CentralityKind::Eccentricity => 'C',
            CentralityKind::Degree => 'D',
            CentralityKind::Remoteness => 'M',
        }
    }

    pub fn from_code(c: char) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.code() == c.to_ascii_uppercase())
    }

    pub fn name(self) -> &'static str {
        match self {
            CentralityKind::Betweenness => "betweenness",
            CentralityKind::Eccentricity => "eccentricity",
            CentralityKind::Degree => "degree",
            CentralityKind::Remoteness => "remoteness",
        }
    }
}

impl fmt::Display for CentralityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CentralityKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        Self::ALL
            .into_iter()
            .find(|k| k.name() == lower)
            .or_else(|| {
                let mut chars = s.chars();
                match (chars.next(), chars.next()) {
                    (Some(c), None) => Self::from_code(c),
                    _ => None,
                }
            })
            .ok_or_else(|| Error::InvalidArgument(format!("unknown centrality {s:?}")))
    }
}

/// One group of nodes sharing a score.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Tier {
    pub score: f64,
    pub nodes: Vec<NodeId>,
}

/// Nodes grouped by score, most central tier first.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CentralityTiers {
    pub kind: CentralityKind,
    pub tiers: Vec<Tier>,
}

impl CentralityTiers {
    pub fn len(&self) -> usize {
        self.tiers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiers.is_empty()
    }
}

pub fn degrees(g: &Graph) -> BTreeMap<NodeId, usize> {
    g.nodes().map(|v| (v, g.degree(v))).collect()
}

fn require_connected(g: &Graph, what: &str) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else if g.is_empty() {
        Err(Error::Domain(format!("{what} of an empty graph")))
    } else {
        Err(Error::Domain(format!("{what} requires a connected graph")))
    }
}

struct BfsScratch {
    dist: Vec<usize>,
    queue: VecDeque<NodeId>,
    order: Vec<NodeId>,
}

impl BfsScratch {
    fn new(bound: usize) -> Self {
        BfsScratch {
            dist: vec![UNREACHED; bound],
            queue: VecDeque::new(),
            order: Vec::new(),
        }
    }

    fn run(&mut self, g: &Graph, s: NodeId) {
        for &v in &self.order {
            self.dist[v] = UNREACHED;
        }
        g.bfs_fill(s, &mut self.dist, &mut self.queue, &mut self.order);
    }
}

/// Applies `per_source` to a BFS from every node, returning results in
/// source order.
pub(crate) fn all_sources<T, F>(g: &Graph, per_source: F) -> Vec<(NodeId, T)>
where
    T: Send,
    F: Fn(NodeId, &[usize], &[NodeId]) -> T + Sync,
{
    let sources: Vec<NodeId> = g.nodes().collect();
    let bound = g.id_bound();
    let visit = |scratch: &mut BfsScratch, s: NodeId| {
        scratch.run(g, s);
        (s, per_source(s, &scratch.dist, &scratch.order))
    };
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        sources
            .par_iter()
            .map_init(|| BfsScratch::new(bound), |scratch, &s| visit(scratch, s))
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        let mut scratch = BfsScratch::new(bound);
        sources.iter().map(|&s| visit(&mut scratch, s)).collect()
    }
}

/// Largest hop distance from each node. Requires a connected graph.
pub fn eccentricities(g: &Graph) -> Result<BTreeMap<NodeId, usize>> {
    require_connected(g, "eccentricity")?;
    Ok(
        all_sources(g, |_, dist, order| order.last().map_or(0, |&far| dist[far]))
            .into_iter()
            .collect(),
    )
}

/// Sum of hop distances from each node. Requires a connected graph.
pub fn remoteness(g: &Graph) -> Result<BTreeMap<NodeId, usize>> {
    require_connected(g, "remoteness")?;
    Ok(
        all_sources(g, |_, dist, order| order.iter().map(|&v| dist[v]).sum::<usize>())
            .into_iter()
            .collect(),
    )
}

/// Brandes single-source pass: dependencies of `s` on every node.
fn accumulate_source(g: &Graph, s: NodeId, scratch: &mut BrandesScratch, into: &mut [f64]) {
    let BrandesScratch {
        dist,
        sigma,
        delta,
        order,
        queue,
    } = scratch;
    for &v in order.iter() {
        dist[v] = UNREACHED;
        sigma[v] = 0.0;
        delta[v] = 0.0;
    }
    order.clear();
    queue.clear();
    dist[s] = 0;
    sigma[s] = 1.0;
    queue.push_back(s);
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for &w in g.neighbors(u) {
            if dist[w] == UNREACHED {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
            if dist[w] == dist[u] + 1 {
                sigma[w] += sigma[u];
            }
        }
    }
    // Predecessors of w are exactly its neighbors one layer closer to s.
    for &w in order.iter().rev() {
        let coeff = (1.0 + delta[w]) / sigma[w];
        for &u in g.neighbors(w) {
            if dist[u] != UNREACHED && dist[u] + 1 == dist[w] {
                delta[u] += sigma[u] * coeff;
            }
        }
        if w != s {
            into[w] += delta[w];
        }
    }
}

struct BrandesScratch {
    dist: Vec<usize>,
    sigma: Vec<f64>,
    delta: Vec<f64>,
    order: Vec<NodeId>,
    queue: VecDeque<NodeId>,
}

impl BrandesScratch {
    fn new(bound: usize) -> Self {
        BrandesScratch {
            dist: vec![UNREACHED; bound],
            sigma: vec![0.0; bound],
            delta: vec![0.0; bound],
            order: Vec::new(),
            queue: VecDeque::new(),
        }
    }
}

/// Exact unnormalized betweenness over unordered pairs. Disconnected
/// graphs are handled per component.
pub fn betweenness(g: &Graph) -> BTreeMap<NodeId, f64> {
    let sources: Vec<NodeId> = g.nodes().collect();
    let bound = g.id_bound();
    let block_sum = |block: &[NodeId]| {
        let mut scratch = BrandesScratch::new(bound);
        let mut partial = vec![0.0; bound];
        for &s in block {
            accumulate_source(g, s, &mut scratch, &mut partial);
        }
        partial
    };
    #[cfg(feature = "parallel")]
    let partials: Vec<Vec<f64>> = {
        use rayon::prelude::*;
        sources.par_chunks(SOURCE_BLOCK).map(block_sum).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let partials: Vec<Vec<f64>> = sources.chunks(SOURCE_BLOCK).map(block_sum).collect();

    let mut total = vec![0.0; bound];
    for partial in &partials {
        for (t, p) in total.iter_mut().zip(partial) {
            *t += p;
        }
    }
    // Every unordered pair was seen from both endpoints.
    g.nodes().map(|v| (v, total[v] / 2.0)).collect()
}

/// Scores of `kind` as reals, one per node.
pub fn scores(g: &Graph, kind: CentralityKind) -> Result<BTreeMap<NodeId, f64>> {
    let to_real = |m: BTreeMap<NodeId, usize>| m.into_iter().map(|(v, s)| (v, s as f64)).collect();
    Ok(match kind {
        CentralityKind::Degree => to_real(degrees(g)),
        CentralityKind::Eccentricity => to_real(eccentricities(g)?),
        CentralityKind::Remoteness => to_real(remoteness(g)?),
        CentralityKind::Betweenness => betweenness(g),
    })
}

pub(crate) fn same_score(a: f64, b: f64) -> bool {
    let scale = a.abs().max(b.abs());
    (a - b).abs() <= (TIER_REL_TOL * scale).max(TIER_ABS_TOL)
}

/// Groups scored nodes into tiers, most central first. Within a tier,
/// nodes are listed by increasing id.
pub fn tiers_from_scores(kind: CentralityKind, scores: &BTreeMap<NodeId, f64>) -> CentralityTiers {
    let mut ranked: Vec<(NodeId, f64)> = scores.iter().map(|(&v, &s)| (v, s)).collect();
    let toward_center = |a: f64, b: f64| {
        let ord = a.partial_cmp(&b).unwrap_or(Ordering::Equal);
        if kind.higher_is_central() {
            ord.reverse()
        } else {
            ord
        }
    };
    ranked.sort_by(|a, b| toward_center(a.1, b.1).then(a.0.cmp(&b.0)));

    let mut tiers: Vec<Tier> = Vec::new();
    for (v, s) in ranked {
        match tiers.last_mut() {
            Some(tier) if same_score(tier.score, s) => tier.nodes.push(v),
            _ => tiers.push(Tier {
                score: s,
                nodes: vec![v],
            }),
        }
    }
    for tier in &mut tiers {
        tier.nodes.sort_unstable();
    }
    CentralityTiers { kind, tiers }
}

pub fn centrality_tiers(g: &Graph, kind: CentralityKind) -> Result<CentralityTiers> {
    if g.is_empty() {
        return Err(Error::Domain("centrality of an empty graph".into()));
    }
    Ok(tiers_from_scores(kind, &scores(g, kind)?))
}

/// Every node attaining the most central score of `kind`.
pub fn central_set(g: &Graph, kind: CentralityKind) -> Result<Vec<NodeId>> {
    let mut tiers = centrality_tiers(g, kind)?.tiers;
    Ok(tiers.swap_remove(0).nodes)
}
