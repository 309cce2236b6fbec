use std::io::Read;

use super::{read_text, ParsedGraph, MAX_DECLARED_NODES};
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

#[derive(Clone, Copy, PartialEq)]
enum Section {
    Vertices,
    Pairs,
    Lists,
    Other,
}

/// Reads the subset of Pajek `.net` used by network datasets:
///
/// ```text
/// *Vertices 3
/// 1 "first"
/// 2 "second"
/// *Edges
/// 1 2 5.0
/// 2 3
/// ```
///
/// Vertex lines are optional and supply labels. `*Edges` and `*Arcs` hold
/// endpoint pairs, `*Edgeslist` and `*Arcslist` hold a node followed by
/// its neighbors. Arcs become undirected edges and weights are ignored.
/// Lines starting with `%` are comments; other `*` sections are skipped.
pub fn read_pajek<R: Read>(reader: R) -> Result<ParsedGraph> {
    let text = read_text(reader)?;
    let mut n: Option<usize> = None;
    let mut labels: Vec<String> = Vec::new();
    let mut edges: Vec<(NodeId, NodeId)> = Vec::new();
    let mut section = Section::Other;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('%') {
            continue;
        }
        if let Some(header) = line.strip_prefix('*') {
            let mut parts = header.split_whitespace();
            let name = parts.next().unwrap_or("").to_ascii_lowercase();
            section = match name.as_str() {
                "vertices" | "nodes" => {
                    if n.is_some() {
                        return Err(Error::parse(lineno, "repeated *Vertices header"));
                    }
                    let count = parts
                        .next()
                        .and_then(|c| c.parse::<usize>().ok())
                        .ok_or_else(|| Error::parse(lineno, "*Vertices needs a node count"))?;
                    if count > MAX_DECLARED_NODES {
                        return Err(Error::parse(
                            lineno,
                            format!("{count} vertices exceeds the supported maximum"),
                        ));
                    }
                    n = Some(count);
                    labels = (1..=count).map(|i| i.to_string()).collect();
                    Section::Vertices
                }
                "edges" | "arcs" => Section::Pairs,
                "edgeslist" | "arcslist" => Section::Lists,
                _ => Section::Other,
            };
            if matches!(section, Section::Pairs | Section::Lists) && n.is_none() {
                return Err(Error::parse(lineno, "edge section before *Vertices header"));
            }
            continue;
        }
        let Some(count) = n else {
            return Err(Error::parse(lineno, "missing *Vertices header"));
        };
        let endpoint = |tok: &str| -> Result<NodeId> {
            let i: usize = tok
                .parse()
                .map_err(|_| Error::parse(lineno, format!("bad vertex number {tok:?}")))?;
            if i == 0 || i > count {
                return Err(Error::parse(lineno, format!("vertex {i} outside 1..{count}")));
            }
            Ok(i - 1)
        };
        match section {
            Section::Vertices => {
                let (first, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
                let v = endpoint(first)?;
                if let Some(label) = vertex_label(rest.trim()) {
                    labels[v] = label;
                }
            }
            Section::Pairs => {
                let mut tokens = line.split_whitespace();
                let (Some(a), Some(b)) = (tokens.next(), tokens.next()) else {
                    return Err(Error::parse(lineno, format!("expected an endpoint pair, got {line:?}")));
                };
                edges.push((endpoint(a)?, endpoint(b)?));
            }
            Section::Lists => {
                let mut tokens = line.split_whitespace();
                let u = endpoint(tokens.next().expect("line is non-empty"))?;
                for t in tokens {
                    edges.push((u, endpoint(t)?));
                }
            }
            Section::Other => {}
        }
    }

    let n = n.ok_or_else(|| Error::parse(1, "missing *Vertices header"))?;
    let (graph, report) = Graph::from_edges_reported(edges, n);
    let graph = graph.with_labels(labels)?;
    Ok(ParsedGraph { graph, report })
}

fn vertex_label(rest: &str) -> Option<String> {
    if let Some(quoted) = rest.strip_prefix('"') {
        let end = quoted.find('"').unwrap_or(quoted.len());
        return Some(quoted[..end].to_owned());
    }
    rest.split_whitespace().next().map(str::to_owned)
}
