//! Plain-text edge lists.
//!
//! ```text
//! n m
//! u v
//! ...
//! ```
//!
//! The header gives node and edge counts, followed by exactly `m` lines of
//! `u v` with `u < v`, ASCII decimal, every line `\n`-terminated. Writing a
//! graph always produces its canonical, sorted edge list, so reading and
//! writing round-trip byte for byte.

use std::fmt::Write as _;
use std::io::{BufRead, Write};

use sparsenet_core::{Graph, GraphError};

#[derive(Debug, thiserror::Error)]
pub enum EdgeListError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub fn to_string(g: &Graph) -> String {
    let mut out = String::with_capacity(16 + 12 * g.edge_count());
    writeln!(out, "{} {}", g.node_count(), g.edge_count()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn write(g: &Graph, mut w: impl Write) -> std::io::Result<()> {
    w.write_all(to_string(g).as_bytes())
}

pub fn parse(text: &str) -> Result<Graph, EdgeListError> {
    read(text.as_bytes())
}

pub fn read(r: impl BufRead) -> Result<Graph, EdgeListError> {
    let mut lines = r.lines();
    let header = lines.next().transpose()?.ok_or_else(|| EdgeListError::Syntax {
        line: 1,
        msg: "missing header".into(),
    })?;
    let (n, m) = parse_pair(&header, 1)?;
    let mut edges = Vec::with_capacity(m);
    for (i, line) in lines.enumerate() {
        let line_no = i + 2;
        let line = line?;
        if edges.len() == m {
            return Err(EdgeListError::Syntax {
                line: line_no,
                msg: format!("more than the {m} declared edges"),
            });
        }
        let (u, v) = parse_pair(&line, line_no)?;
        if u >= v {
            // Self-loops get the graph error; otherwise orientation is wrong.
            if u == v {
                return Err(EdgeListError::Graph {
                    line: line_no,
                    source: GraphError::SelfLoop(u),
                });
            }
            return Err(EdgeListError::Syntax {
                line: line_no,
                msg: format!("edge {u} {v} must be written with u < v"),
            });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(EdgeListError::Syntax {
            line: edges.len() + 2,
            msg: format!("expected {m} edges, found {}", edges.len()),
        });
    }
    Graph::new(n, &edges).map_err(|source| EdgeListError::Graph {
        line: locate(&edges, &source),
        source,
    })
}

fn locate(edges: &[(usize, usize)], err: &GraphError) -> usize {
    let idx = match *err {
        GraphError::DuplicateEdge(u, v) => edges
            .iter()
            .enumerate()
            .filter(|&(_, &e)| e == (u, v))
            .map(|(i, _)| i)
            .nth(1),
        GraphError::NodeOutOfRange(x) => edges.iter().position(|&(u, v)| u == x || v == x),
        _ => None,
    };
    idx.map_or(1, |i| i + 2)
}

fn parse_pair(line: &str, line_no: usize) -> Result<(usize, usize), EdgeListError> {
    let syntax = |msg: &str| EdgeListError::Syntax {
        line: line_no,
        msg: msg.to_string(),
    };
    let (a, b) = line
        .split_once(' ')
        .ok_or_else(|| syntax("expected two space-separated integers"))?;
    let num = |s: &str| {
        if s.is_empty() || !s.bytes().all(|c| c.is_ascii_digit()) {
            Err(syntax("expected a decimal integer"))
        } else {
            s.parse::<usize>().map_err(|_| syntax("integer out of range"))
        }
    };
    Ok((num(a)?, num(b)?))
}
