//! Center-based node-removal attacks.
//!
//! An attack repeatedly removes a whole tier of equally central nodes and
//! records the size of the largest connected component (LCC) afterwards,
//! stopping once the LCC has at most [`DESTROYED_LCC`] nodes.
//!
//! * Recalculated attacks (RB, RC, RD, RM) recompute the central set on
//!   the current LCC before every removal.
//! * Initial attacks (IB, IC, ID, IM) rank the untouched network once and
//!   remove its tiers in order. Tier members that have already fallen out
//!   of the LCC are still removed and counted.
//!
//! `f` is the removed count over the size `N` of the graph handed to the
//! attack, and `lcc_prime` is the LCC size over `N`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::centrality::{central_set, centrality_tiers, CentralityKind};
use crate::error::{Error, Result};
use crate::generators::{extract_giant, GeneratorSpec};
use crate::graph::{Graph, NodeId};

/// An LCC of this size or smaller counts as destroyed.
pub const DESTROYED_LCC: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Information {
    Initial,
    Recalculated,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AttackStrategy {
    pub info: Information,
    pub kind: CentralityKind,
}

impl AttackStrategy {
    /// IB, IC, ID, IM, RB, RC, RD, RM.
    pub const ALL: [AttackStrategy; 8] = {
        use CentralityKind::*;
        use Information::*;
        [
            AttackStrategy {
                info: Initial,
                kind: Betweenness,
            },
            AttackStrategy {
                info: Initial,
                kind: Eccentricity,
            },
            AttackStrategy {
                info: Initial,
                kind: Degree,
            },
            AttackStrategy {
                info: Initial,
                kind: Remoteness,
            },
            AttackStrategy {
                info: Recalculated,
                kind: Betweenness,
            },
            AttackStrategy {
                info: Recalculated,
                kind: Eccentricity,
            },
            AttackStrategy {
                info: Recalculated,
                kind: Degree,
            },
            AttackStrategy {
                info: Recalculated,
                kind: Remoteness,
            },
        ]
    };

    pub const fn new(info: Information, kind: CentralityKind) -> Self {
        AttackStrategy { info, kind }
    }

    pub fn initial(kind: CentralityKind) -> Self {
        Self::new(Information::Initial, kind)
    }

    pub fn recalculated(kind: CentralityKind) -> Self {
        Self::new(Information::Recalculated, kind)
    }

    pub fn code(self) -> String {
        let prefix = match self.info {
            Information::Initial => 'I',
            Information::Recalculated => 'R',
        };
        format!("{prefix}{}", self.kind.code())
    }

    /// Position in [`AttackStrategy::ALL`], used for stable ordering and
    /// chart colors.
    pub fn index(self) -> usize {
        Self::ALL
            .iter()
            .position(|&s| s == self)
            .expect("every strategy is listed")
    }

    /// Parses a comma-separated list of codes; `all` expands to every
    /// strategy. Duplicates are dropped, first occurrence wins.
    pub fn parse_list(list: &str) -> Result<Vec<AttackStrategy>> {
        let mut out: Vec<AttackStrategy> = Vec::new();
        for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let parsed: Vec<AttackStrategy> = if item.eq_ignore_ascii_case("all") {
                Self::ALL.to_vec()
            } else {
                vec![item.parse()?]
            };
            for s in parsed {
                if !out.contains(&s) {
                    out.push(s);
                }
            }
        }
        if out.is_empty() {
            return Err(Error::InvalidArgument("no attack strategy given".into()));
        }
        Ok(out)
    }

    pub fn run(self, g: &Graph) -> Result<AttackTrace> {
        match self.info {
            Information::Initial => run_initial(g, self.kind),
            Information::Recalculated => run_recalculated(g, self.kind),
        }
    }
}

impl fmt::Display for AttackStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.code())
    }
}

impl FromStr for AttackStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::InvalidArgument(format!("unknown strategy code {s:?}"));
        let mut chars = s.trim().chars();
        let (Some(info), Some(kind), None) = (chars.next(), chars.next(), chars.next()) else {
            return Err(unknown());
        };
        let info = match info.to_ascii_uppercase() {
            'I' => Information::Initial,
            'R' => Information::Recalculated,
            _ => return Err(unknown()),
        };
        let kind = CentralityKind::from_code(kind).ok_or_else(unknown)?;
        Ok(AttackStrategy { info, kind })
    }
}

impl Serialize for AttackStrategy {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.code())
    }
}

impl<'de> Deserialize<'de> for AttackStrategy {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let code = String::deserialize(d)?;
        code.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceRow {
    pub iteration: usize,
    /// Ids removed in this iteration, increasing.
    pub removed: Vec<NodeId>,
    pub removed_cum: usize,
    pub f: f64,
    pub lcc_size: usize,
    pub lcc_prime: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AttackTrace {
    pub strategy: AttackStrategy,
    pub initial_n: usize,
    /// Row 0 is the untouched network.
    pub rows: Vec<TraceRow>,
    /// False only if an initial attack ran out of tiers before the LCC
    /// fell to [`DESTROYED_LCC`].
    pub destroyed: bool,
}

impl AttackTrace {
    fn start(strategy: AttackStrategy, g: &Graph) -> Self {
        let n = g.node_count();
        AttackTrace {
            strategy,
            initial_n: n,
            rows: vec![TraceRow {
                iteration: 0,
                removed: Vec::new(),
                removed_cum: 0,
                f: 0.0,
                lcc_size: n,
                lcc_prime: 1.0,
            }],
            destroyed: false,
        }
    }

    fn push(&mut self, mut removed: Vec<NodeId>, lcc_size: usize) {
        removed.sort_unstable();
        let last = self.rows.last().expect("row 0 exists");
        let n = self.initial_n as f64;
        let removed_cum = last.removed_cum + removed.len();
        self.rows.push(TraceRow {
            iteration: last.iteration + 1,
            removed,
            removed_cum,
            f: removed_cum as f64 / n,
            lcc_size,
            lcc_prime: lcc_size as f64 / n,
        });
        self.destroyed = lcc_size <= DESTROYED_LCC;
    }

    pub fn last(&self) -> &TraceRow {
        self.rows.last().expect("row 0 exists")
    }

    pub fn iterations(&self) -> usize {
        self.rows.len() - 1
    }

    /// `f` at which the attack stopped.
    pub fn destruction_f(&self) -> f64 {
        self.last().f
    }

    /// LCC′ after removing a fraction `f`, reading the trace as a right-
    /// continuous step function.
    pub fn lcc_prime_at(&self, f: f64) -> f64 {
        self.rows
            .iter()
            .take_while(|r| r.f <= f)
            .last()
            .map_or(1.0, |r| r.lcc_prime)
    }
}

fn check_attackable(g: &Graph) -> Result<()> {
    if g.node_count() <= DESTROYED_LCC {
        return Err(Error::Domain(format!(
            "network of {} nodes is already destroyed",
            g.node_count()
        )));
    }
    if !g.is_connected() {
        return Err(Error::Domain(
            "attacks start from a connected network; extract the giant component first".into(),
        ));
    }
    Ok(())
}

/// Recompute the central set of the current LCC, remove it from the whole
/// graph, repeat until the LCC has at most three nodes.
pub fn run_recalculated(g: &Graph, kind: CentralityKind) -> Result<AttackTrace> {
    check_attackable(g)?;
    let mut trace = AttackTrace::start(AttackStrategy::recalculated(kind), g);
    let mut current = g.clone();
    let (mut lcc, mut size) = current.largest_connected_component();
    while size > DESTROYED_LCC {
        let component = current.restrict_to(&lcc);
        let victims = central_set(&component, kind)?;
        current.remove_in_place(&victims);
        (lcc, size) = current.largest_connected_component();
        trace.push(victims, size);
    }
    Ok(trace)
}

/// Rank the untouched network once, then remove its tiers in order.
pub fn run_initial(g: &Graph, kind: CentralityKind) -> Result<AttackTrace> {
    check_attackable(g)?;
    let tiers = centrality_tiers(g, kind)?;
    let mut trace = AttackTrace::start(AttackStrategy::initial(kind), g);
    let mut current = g.clone();
    for tier in tiers.tiers {
        let victims: Vec<NodeId> = tier.nodes.into_iter().filter(|&v| current.contains(v)).collect();
        current.remove_in_place(&victims);
        let (_, size) = current.largest_connected_component();
        trace.push(victims, size);
        if size <= DESTROYED_LCC {
            break;
        }
    }
    Ok(trace)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AttackSummary {
    pub destruction_f: f64,
    /// Mean LCC′ over all rows including row 0; lower means a more
    /// damaging attack.
    pub robustness_index: f64,
    pub iterations: usize,
}

pub fn summarize(trace: &AttackTrace) -> AttackSummary {
    let rows = &trace.rows;
    AttackSummary {
        destruction_f: trace.destruction_f(),
        robustness_index: rows.iter().map(|r| r.lcc_prime).sum::<f64>() / rows.len() as f64,
        iterations: trace.iterations(),
    }
}

/// One (strategy, seed) cell of a sweep.
#[derive(Debug)]
pub struct SweepRun {
    pub strategy: AttackStrategy,
    pub seed: u64,
    pub outcome: Result<AttackTrace>,
}

/// For each run `r`, generates `spec` with seed `base_seed + r`, extracts
/// its giant component and attacks it with every strategy. Results are
/// ordered by strategy (as listed), then seed. A failing run does not stop
/// the others.
pub fn sweep(
    spec: &GeneratorSpec,
    strategies: &[AttackStrategy],
    runs: usize,
    base_seed: u64,
) -> Result<Vec<SweepRun>> {
    if runs == 0 {
        return Err(Error::InvalidArgument("a sweep needs at least one run".into()));
    }
    spec.validate()?;
    let seeds: Vec<u64> = (0..runs as u64).map(|r| base_seed.wrapping_add(r)).collect();
    let giant_for = |seed: u64| spec.with_seed(seed).generate().and_then(|g| extract_giant(&g));

    let cells: Vec<(usize, u64)> = (0..strategies.len())
        .flat_map(|s| seeds.iter().map(move |&seed| (s, seed)))
        .collect();

    let giants: Vec<Result<Graph>>;
    let run_cell = |giants: &[Result<Graph>], (s, seed): (usize, u64)| {
        let idx = (seed.wrapping_sub(base_seed)) as usize;
        let outcome = match &giants[idx] {
            Ok(g) => strategies[s].run(g),
            Err(e) => Err(Error::InvalidArgument(format!("generating seed {seed}: {e}"))),
        };
        SweepRun {
            strategy: strategies[s],
            seed,
            outcome,
        }
    };

    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        giants = seeds.par_iter().map(|&s| giant_for(s)).collect();
        Ok(cells.into_par_iter().map(|c| run_cell(&giants, c)).collect())
    }
    #[cfg(not(feature = "parallel"))]
    {
        giants = seeds.iter().map(|&s| giant_for(s)).collect();
        Ok(cells.into_iter().map(|c| run_cell(&giants, c)).collect())
    }
}
