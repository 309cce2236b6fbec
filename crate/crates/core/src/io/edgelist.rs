use std::collections::HashMap;
use std::io::{Read, Write};

use super::{read_text, ParsedGraph};
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

/// Reads whitespace-separated `u v` pairs, one per line. Lines starting
/// with `#` are comments. A numeric third column (a weight) is ignored.
/// Tokens become node labels, numbered in order of first appearance.
pub fn read_edge_list<R: Read>(reader: R) -> Result<ParsedGraph> {
    let text = read_text(reader)?;
    let mut ids: HashMap<&str, NodeId> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut edges = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let ok = match tokens.len() {
            2 => true,
            3 => tokens[2].parse::<f64>().is_ok(),
            _ => false,
        };
        if !ok {
            return Err(Error::parse(idx + 1, format!("expected `u v`, got {line:?}")));
        }
        let u = intern(&mut ids, &mut labels, tokens[0]);
        let v = intern(&mut ids, &mut labels, tokens[1]);
        edges.push((u, v));
    }
    let n = labels.len();
    let (graph, report) = Graph::from_edges_reported(edges, n);
    let graph = graph.with_labels(labels)?;
    Ok(ParsedGraph { graph, report })
}

fn intern<'a>(ids: &mut HashMap<&'a str, NodeId>, labels: &mut Vec<String>, tok: &'a str) -> NodeId {
    *ids.entry(tok).or_insert_with(|| {
        labels.push(tok.to_owned());
        labels.len() - 1
    })
}

/// Writes one `u v` line per edge (labels when present), preceded by a
/// comment with the node and edge counts. Isolated nodes are not
/// representable and only show up in the count.
pub fn write_edge_list<W: Write>(g: &Graph, mut out: W) -> Result<()> {
    writeln!(out, "# nodes {} edges {}", g.node_count(), g.edge_count())?;
    for (u, v) in g.edges() {
        writeln!(out, "{} {}", g.display_label(u), g.display_label(v))?;
    }
    out.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Result<ParsedGraph> {
        read_edge_list(s.as_bytes())
    }

    #[test]
    fn labels_are_interned() {
        let p = parse("a b\nb c").unwrap();
        assert_eq!((p.graph.node_count(), p.graph.edge_count()), (3, 2));
        assert_eq!(p.graph.labels().unwrap(), ["a", "b", "c"]);
    }

    #[test]
    fn comments_and_blank_lines() {
        let p = parse("# comment\n\n0 1\n").unwrap();
        assert_eq!((p.graph.node_count(), p.graph.edge_count()), (2, 1));
    }

    #[test]
    fn self_loop_is_reported() {
        let p = parse("x x").unwrap();
        assert_eq!((p.graph.node_count(), p.graph.edge_count()), (1, 0));
        assert_eq!(p.report.self_loops, 1);
        let p = parse("a b\nb a\na b 2.5").unwrap();
        assert_eq!(p.report.duplicate_edges, 2);
    }

    #[test]
    fn malformed_lines_carry_line_numbers() {
        match parse("0 1\n2\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        assert!(parse("0 1 heavy").is_err());
        assert!(parse("0 1 2 3").is_err());
    }

    #[test]
    fn writes_labels() {
        let g = parse("b a\na c").unwrap().graph;
        let mut out = Vec::new();
        write_edge_list(&g, &mut out).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), "# nodes 3 edges 2\nb a\na c\n");
    }
}
