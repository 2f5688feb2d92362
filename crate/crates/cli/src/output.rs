//! Report emission. Every item is given in both renderings at the call site,
//! and the chosen format decides which one is printed.

use std::io::{self, Write};

use serde_json::{json, Value};

use primetree::{ConditionReport, EdgeList, Graph, VertexSet, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Records,
}

pub struct Out {
    format: Format,
    dot: bool,
    sink: io::BufWriter<io::Stdout>,
    /// Set once any requested check fails.
    pub failed: bool,
}

impl Out {
    pub fn new(format: Format, dot: bool) -> Self {
        Out { format, dot, sink: io::BufWriter::new(io::stdout()), failed: false }
    }

    pub fn emit(&mut self, text: impl AsRef<str>, record: Value) {
        let line = match self.format {
            Format::Text => text.as_ref().to_string(),
            Format::Records => record.to_string(),
        };
        // a closed pipe is not worth a panic
        let _ = writeln!(self.sink, "{line}");
    }

    pub fn command(&mut self, args: &[String]) {
        self.emit(format!("# primetree {}", args.join(" ")), json!({"record": "command", "args": args}));
    }

    pub fn verdict(&mut self, check: &str, holds: bool) {
        self.failed |= !holds;
        self.emit(format!("{check}: {holds}"), json!({"record": "verdict", "check": check, "holds": holds}));
    }

    pub fn info(&mut self, key: &str, value: impl Into<Value> + ToString + Clone) {
        self.emit(format!("{key}: {}", value.to_string()), json!({"record": "value", "key": key, "value": value.into()}));
    }

    pub fn set(&mut self, key: &str, set: &VertexSet, names: &Names) {
        self.emit(format!("{key}: {}", names.show(set)), json!({"record": "set", "key": key, "ids": set, "labels": names.labels(set)}));
    }

    pub fn conditions(&mut self, check: &str, report: &ConditionReport, names: &Names) {
        for c in &report.conditions {
            let status = match c.witness {
                None => "holds".to_string(),
                Some(w) => format!("FAILS at {}", names.show_list(&w.vertices())),
            };
            self.emit(
                format!("({}) {}: {status}", c.index, c.statement),
                json!({
                    "record": "condition",
                    "check": check,
                    "index": c.index,
                    "statement": c.statement,
                    "holds": c.holds,
                    "witness": c.witness.map(|w| json!({"ids": w.vertices(), "labels": names.label_list(&w.vertices())})),
                }),
            );
        }
        self.verdict(check, report.overall);
    }

    /// An edge list, or DOT when `--dot` was given.
    pub fn graph(&mut self, graph: &Graph, labels: Option<&[String]>, annotations: &[(String, String)]) {
        let dot = primetree::edgelist::to_dot(graph, labels);
        match self.format {
            Format::Text => {
                let body = if self.dot { dot } else { primetree::write_edge_list(graph, labels, annotations) };
                let _ = self.sink.write_all(body.as_bytes());
            }
            Format::Records => {
                let mut record = json!({
                    "record": "graph",
                    "n": graph.order(),
                    "edges": graph.edges().collect::<Vec<_>>(),
                    "labels": labels,
                    "annotations": annotations.iter().map(|(k, v)| json!([k, v])).collect::<Vec<_>>(),
                });
                if self.dot {
                    record["dot"] = Value::String(dot);
                }
                self.emit("", record);
            }
        }
    }

    pub fn blank(&mut self) {
        if self.format == Format::Text {
            let _ = writeln!(self.sink);
        }
    }

    pub fn finish(mut self) -> bool {
        let _ = self.sink.flush();
        !self.failed
    }
}

/// Vertex naming for echoes: labels when the input has them, ids always.
pub struct Names {
    labels: Option<Vec<String>>,
}

impl Names {
    pub fn of(list: &EdgeList) -> Self {
        Names { labels: list.labels.clone() }
    }

    pub fn labels(&self, set: &VertexSet) -> Option<Vec<String>> {
        self.label_list(set.as_slice())
    }

    pub fn label_list(&self, vs: &[Vertex]) -> Option<Vec<String>> {
        self.labels.as_ref().map(|l| vs.iter().map(|&v| l[v].clone()).collect())
    }

    pub fn show(&self, set: &VertexSet) -> String {
        self.show_list(set.as_slice())
    }

    pub fn show_list(&self, vs: &[Vertex]) -> String {
        let ids = vs.iter().map(Vertex::to_string).collect::<Vec<_>>().join(", ");
        match self.label_list(vs) {
            Some(l) => format!("{{{}}} (ids {{{ids}}})", l.join(", ")),
            None => format!("{{{ids}}}"),
        }
    }
}
