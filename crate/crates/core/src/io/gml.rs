use std::collections::HashMap;
use std::io::Read;

use super::{read_text, ParsedGraph};
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

#[derive(Debug)]
enum Value {
    Number(String),
    Text(String),
    List(Vec<Entry>),
}

#[derive(Debug)]
struct Entry {
    key: String,
    value: Value,
    line: usize,
}

#[derive(Debug, PartialEq)]
enum Token<'a> {
    Open,
    Close,
    Word(&'a str),
    Text(&'a str),
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
    line: usize,
}

impl<'a> Lexer<'a> {
    fn next_token(&mut self) -> Result<Option<(Token<'a>, usize)>> {
        let bytes = self.src.as_bytes();
        loop {
            while self.pos < bytes.len() && bytes[self.pos].is_ascii_whitespace() {
                if bytes[self.pos] == b'\n' {
                    self.line += 1;
                }
                self.pos += 1;
            }
            if self.pos < bytes.len() && bytes[self.pos] == b'#' {
                while self.pos < bytes.len() && bytes[self.pos] != b'\n' {
                    self.pos += 1;
                }
                continue;
            }
            break;
        }
        if self.pos >= bytes.len() {
            return Ok(None);
        }
        let line = self.line;
        let start = self.pos;
        let token = match bytes[start] {
            b'[' => {
                self.pos += 1;
                Token::Open
            }
            b']' => {
                self.pos += 1;
                Token::Close
            }
            b'"' => {
                let body = start + 1;
                let Some(len) = self.src[body..].find('"') else {
                    return Err(Error::parse(line, "unterminated string"));
                };
                let text = &self.src[body..body + len];
                self.line += text.matches('\n').count();
                self.pos = body + len + 1;
                Token::Text(text)
            }
            _ => {
                while self.pos < bytes.len()
                    && !bytes[self.pos].is_ascii_whitespace()
                    && !matches!(bytes[self.pos], b'[' | b']' | b'"')
                {
                    self.pos += 1;
                }
                Token::Word(&self.src[start..self.pos])
            }
        };
        Ok(Some((token, line)))
    }
}

fn is_key(word: &str) -> bool {
    let mut chars = word.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Deepest list nesting accepted.
const MAX_DEPTH: usize = 64;

type OpenList = (Vec<Entry>, Option<(String, usize)>);

fn parse_tree(src: &str) -> Result<Vec<Entry>> {
    let mut lexer = Lexer { src, pos: 0, line: 1 };
    // Each open list with the key (and line) that introduced it.
    let mut stack: Vec<OpenList> = vec![(Vec::new(), None)];
    while let Some((token, line)) = lexer.next_token()? {
        match token {
            Token::Close => {
                let (items, opener) = stack.pop().expect("root stays on the stack");
                let Some((key, line)) = opener else {
                    return Err(Error::parse(line, "unbalanced ']'"));
                };
                let parent = &mut stack.last_mut().expect("root stays on the stack").0;
                parent.push(Entry {
                    key,
                    value: Value::List(items),
                    line,
                });
            }
            Token::Word(key) if is_key(key) => {
                let Some((value, _)) = lexer.next_token()? else {
                    return Err(Error::parse(line, format!("key {key:?} has no value")));
                };
                let value = match value {
                    Token::Open => {
                        if stack.len() > MAX_DEPTH {
                            return Err(Error::parse(line, "lists nested too deeply"));
                        }
                        stack.push((Vec::new(), Some((key.to_owned(), line))));
                        continue;
                    }
                    Token::Close => return Err(Error::parse(line, format!("key {key:?} has no value"))),
                    Token::Text(t) => Value::Text(t.to_owned()),
                    Token::Word(w) if w.parse::<f64>().is_ok() => Value::Number(w.to_owned()),
                    Token::Word(w) => return Err(Error::parse(line, format!("bad value {w:?} for key {key:?}"))),
                };
                stack.last_mut().expect("root stays on the stack").0.push(Entry {
                    key: key.to_owned(),
                    value,
                    line,
                });
            }
            other => return Err(Error::parse(line, format!("expected a key, found {other:?}"))),
        }
    }
    if stack.len() != 1 {
        let (_, opener) = stack.pop().expect("checked length");
        let line = opener.map_or(lexer.line, |(_, l)| l);
        return Err(Error::parse(line, "unbalanced '[': list never closed"));
    }
    Ok(stack.pop().expect("checked length").0)
}

fn integer(entry: &Entry) -> Result<i64> {
    match &entry.value {
        Value::Number(s) => s
            .parse::<i64>()
            .or_else(|_| match s.parse::<f64>() {
                Ok(x) if x.fract() == 0.0 && x.abs() < 9e15 => Ok(x as i64),
                _ => Err(()),
            })
            .map_err(|_| Error::parse(entry.line, format!("{} must be an integer", entry.key))),
        _ => Err(Error::parse(entry.line, format!("{} must be an integer", entry.key))),
    }
}

fn field<'a>(items: &'a [Entry], key: &str) -> Option<&'a Entry> {
    items.iter().find(|e| e.key == key)
}

/// Reads `graph [ node [ id I label "L" ] ... edge [ source I target I ] ]`.
/// Node ids may be any integers and are numbered densely in declaration
/// order. Unknown keys (weights, coordinates, `directed`) are skipped and
/// the graph is treated as undirected.
pub fn read_gml<R: Read>(reader: R) -> Result<ParsedGraph> {
    let text = read_text(reader)?;
    let tree = parse_tree(&text)?;
    let graph_entry = tree
        .iter()
        .find(|e| e.key == "graph")
        .ok_or_else(|| Error::parse(1, "no `graph [ ... ]` block"))?;
    let Value::List(items) = &graph_entry.value else {
        return Err(Error::parse(graph_entry.line, "`graph` must be a list"));
    };

    let mut ids: HashMap<i64, NodeId> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    for entry in items.iter().filter(|e| e.key == "node") {
        let Value::List(node) = &entry.value else {
            return Err(Error::parse(entry.line, "`node` must be a list"));
        };
        let id_entry = field(node, "id").ok_or_else(|| Error::parse(entry.line, "node without id"))?;
        let id = integer(id_entry)?;
        if ids.insert(id, labels.len()).is_some() {
            return Err(Error::parse(id_entry.line, format!("duplicate node id {id}")));
        }
        let label = match field(node, "label").map(|e| &e.value) {
            Some(Value::Text(t)) | Some(Value::Number(t)) => t.clone(),
            _ => id.to_string(),
        };
        labels.push(label);
    }

    let mut edges = Vec::new();
    for entry in items.iter().filter(|e| e.key == "edge") {
        let Value::List(edge) = &entry.value else {
            return Err(Error::parse(entry.line, "`edge` must be a list"));
        };
        let end = |key: &str| -> Result<NodeId> {
            let e = field(edge, key).ok_or_else(|| Error::parse(entry.line, format!("edge without {key}")))?;
            let id = integer(e)?;
            ids.get(&id)
                .copied()
                .ok_or_else(|| Error::parse(e.line, format!("edge references undeclared node {id}")))
        };
        edges.push((end("source")?, end("target")?));
    }

    let (graph, report) = Graph::from_edges_reported(edges, labels.len());
    let graph = graph.with_labels(labels)?;
    Ok(ParsedGraph { graph, report })
}
