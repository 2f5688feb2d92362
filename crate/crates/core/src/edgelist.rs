//! Plain-text edge lists.
//!
//! ```text
//! # comment lines start with '#'
//! # labels: 1 2 3 4
//! 4
//! 0 1
//! 1 2
//! 2 3
//! ```
//!
//! The first non-comment line is the vertex count, every following line one
//! 0-based edge `u v`. An optional `# labels:` comment names each vertex in id
//! order. Written edge lists are byte-stable: edges are emitted as `u < v`
//! sorted lexicographically.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeList {
    pub graph: Graph,
    /// Vertex names in id order, from a `# labels:` line.
    pub labels: Option<Vec<String>>,
    /// `# key: value` annotations other than `labels`, in file order.
    pub annotations: Vec<(String, String)>,
}

impl EdgeList {
    /// Resolves a vertex token: a label when the file carries labels, an id otherwise.
    pub fn resolve(&self, token: &str) -> Result<Vertex> {
        let token = token.trim();
        if let Some(labels) = &self.labels {
            return labels
                .iter()
                .position(|l| l == token)
                .ok_or_else(|| Error::InvalidInput(format!("no vertex labelled {token:?}")));
        }
        let v: Vertex = token.parse().map_err(|_| Error::InvalidInput(format!("bad vertex id {token:?}")))?;
        if v >= self.graph.order() {
            return Err(Error::VertexOutOfRange { vertex: v, order: self.graph.order() });
        }
        Ok(v)
    }

    pub fn label(&self, v: Vertex) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }
}

pub fn parse_edge_list(text: &str) -> Result<EdgeList> {
    let mut order: Option<usize> = None;
    let mut edges = Vec::new();
    let mut labels = None;
    let mut annotations = Vec::new();
    let err = |line: usize, message: String| Error::Parse { line, message };

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if let Some((key, value)) = comment.split_once(':') {
                let (key, value) = (key.trim(), value.trim());
                if key == "labels" {
                    labels = Some(value.split_whitespace().map(str::to_string).collect::<Vec<_>>());
                } else if !key.is_empty() && !key.contains(char::is_whitespace) {
                    annotations.push((key.to_string(), value.to_string()));
                }
            }
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let number = |s: &str| s.parse::<usize>().map_err(|_| err(line_no, format!("expected a non-negative integer, got {s:?}")));
        match (order, fields.as_slice()) {
            (None, [n]) => order = Some(number(n)?),
            (None, _) => return Err(err(line_no, "expected the vertex count".into())),
            (Some(_), [u, v]) => edges.push((number(u)?, number(v)?, line_no)),
            (Some(_), _) => return Err(err(line_no, "expected an edge `u v`".into())),
        }
    }
    let order = order.ok_or_else(|| err(text.lines().count().max(1), "missing vertex count".into()))?;
    for &(u, v, line) in &edges {
        if u >= order || v >= order {
            return Err(err(line, format!("edge ({u}, {v}) has an endpoint outside 0..{order}")));
        }
        if u == v {
            return Err(err(line, format!("self-loop at vertex {u}")));
        }
    }
    if let Some(l) = &labels {
        if l.len() != order {
            return Err(err(1, format!("{} labels for {order} vertices", l.len())));
        }
    }
    let graph = Graph::new(order, edges.into_iter().map(|(u, v, _)| (u, v)))?;
    Ok(EdgeList { graph, labels, annotations })
}

/// Emits annotation comments, then `n`, then the sorted edges.
pub fn write_edge_list(graph: &Graph, labels: Option<&[String]>, annotations: &[(String, String)]) -> String {
    let mut out = String::new();
    for (k, v) in annotations {
        writeln!(out, "# {k}: {v}").unwrap();
    }
    if let Some(labels) = labels {
        writeln!(out, "# labels: {}", labels.join(" ")).unwrap();
    }
    writeln!(out, "{}", graph.order()).unwrap();
    for (u, v) in graph.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Graphviz rendering; labels, when given, become node labels.
pub fn to_dot(graph: &Graph, labels: Option<&[String]>) -> String {
    let mut out = String::from("graph G {\n");
    for v in graph.vertices() {
        match labels {
            Some(l) => writeln!(out, "  {v} [label=\"{}\"];", l[v]).unwrap(),
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for (u, v) in graph.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}
