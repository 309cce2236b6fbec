//! Graph file readers and result writers.

mod edgelist;
mod gml;
mod pajek;
mod trace_csv;

use std::fmt;
use std::io::Read;
use std::path::Path;
use std::str::FromStr;

pub use edgelist::{read_edge_list, write_edge_list};
pub use gml::read_gml;
pub use pajek::read_pajek;
pub use trace_csv::{write_trace_csv, LabeledTrace, CSV_HEADER};

use crate::error::{Error, Result};
use crate::graph::{BuildReport, Graph};

/// Declared node counts above this are rejected rather than allocated.
pub const MAX_DECLARED_NODES: usize = 1 << 20;

/// A parsed graph and what was dropped on the way in.
#[derive(Clone, Debug)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub report: BuildReport,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Pajek,
    Gml,
}

impl GraphFormat {
    /// Guesses from the file extension: `.gml`, `.net`/`.paj`, else edge
    /// list.
    pub fn from_path(path: &Path) -> GraphFormat {
        match path
            .extension()
            .and_then(|e| e.to_str())
            .map(str::to_ascii_lowercase)
            .as_deref()
        {
            Some("gml") => GraphFormat::Gml,
            Some("net") | Some("paj") => GraphFormat::Pajek,
            _ => GraphFormat::EdgeList,
        }
    }

    pub fn read<R: Read>(self, reader: R) -> Result<ParsedGraph> {
        match self {
            GraphFormat::EdgeList => read_edge_list(reader),
            GraphFormat::Pajek => read_pajek(reader),
            GraphFormat::Gml => read_gml(reader),
        }
    }
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "edgelist" | "edges" | "txt" => Ok(GraphFormat::EdgeList),
            "pajek" | "net" => Ok(GraphFormat::Pajek),
            "gml" => Ok(GraphFormat::Gml),
            _ => Err(Error::InvalidArgument(format!("unknown graph format {s:?}"))),
        }
    }
}

impl fmt::Display for GraphFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphFormat::EdgeList => "edgelist",
            GraphFormat::Pajek => "pajek",
            GraphFormat::Gml => "gml",
        })
    }
}

fn read_text<R: Read>(mut reader: R) -> Result<String> {
    let mut bytes = Vec::new();
    reader.read_to_end(&mut bytes)?;
    String::from_utf8(bytes).or_else(|e| {
        // Older GML distributions are Latin-1; decode byte-for-byte.
        Ok(e.into_bytes().into_iter().map(char::from).collect())
    })
}
