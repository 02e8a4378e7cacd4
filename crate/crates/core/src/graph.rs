//! Finite directed multigraphs and their text format.
//!
//! ```text
//! # comment
//! vertex x
//! vertex y
//! edge a x x
//! edge e x y
//! ```
//!
//! Identifiers are ASCII alphanumeric tokens (underscores allowed). Edges
//! may reference vertices declared anywhere in the file.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub(crate) u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub(crate) u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl EdgeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct EdgeData {
    name: String,
    source: VertexId,
    target: VertexId,
}

/// A finite directed multigraph with named vertices and edges. Loops and
/// parallel edges are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_names: Vec<String>,
    vertex_index: HashMap<String, VertexId>,
    edges: Vec<EdgeData>,
    edge_index: HashMap<String, EdgeId>,
    // outgoing edges per vertex, ordered by edge name
    out: Vec<Vec<EdgeId>>,
}

pub(crate) fn is_identifier(token: &str) -> bool {
    !token.is_empty() && token.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Graph {
    /// Builds a graph from vertex names and `(edge, source, target)` triples.
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: AsRef<str>,
        E: IntoIterator<Item = (String, String, String)>,
    {
        let mut vertex_names = Vec::new();
        let mut vertex_index = HashMap::new();
        for v in vertices {
            let v = v.as_ref();
            if !is_identifier(v) {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("invalid vertex id `{v}`"),
                });
            }
            let id = VertexId(vertex_names.len() as u32);
            if vertex_index.insert(v.to_string(), id).is_some() {
                return Err(Error::DuplicateId(v.to_string()));
            }
            vertex_names.push(v.to_string());
        }

        let mut edge_data = Vec::new();
        let mut edge_index = HashMap::new();
        for (name, source, target) in edges {
            if !is_identifier(&name) {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("invalid edge id `{name}`"),
                });
            }
            if vertex_index.contains_key(&name) {
                return Err(Error::DuplicateId(name));
            }
            let source = *vertex_index
                .get(&source)
                .ok_or_else(|| Error::UnknownVertex(source.clone()))?;
            let target = *vertex_index
                .get(&target)
                .ok_or_else(|| Error::UnknownVertex(target.clone()))?;
            let id = EdgeId(edge_data.len() as u32);
            if edge_index.insert(name.clone(), id).is_some() {
                return Err(Error::DuplicateId(name));
            }
            edge_data.push(EdgeData {
                name,
                source,
                target,
            });
        }

        if vertex_names.is_empty() || edge_data.is_empty() {
            return Err(Error::EmptyGraph);
        }

        let mut out = vec![Vec::new(); vertex_names.len()];
        for (i, e) in edge_data.iter().enumerate() {
            out[e.source.index()].push(EdgeId(i as u32));
        }
        for list in &mut out {
            list.sort_by(|a, b| edge_data[a.index()].name.cmp(&edge_data[b.index()].name));
        }

        Ok(Graph {
            vertex_names,
            vertex_index,
            edges: edge_data,
            edge_index,
            out,
        })
    }

    /// Returns a copy of this graph with one more edge.
    pub fn with_edge(&self, name: &str, source: &str, target: &str) -> Result<Self> {
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .map(|e| {
                (
                    e.name.clone(),
                    self.vertex_name(e.source).to_string(),
                    self.vertex_name(e.target).to_string(),
                )
            })
            .collect();
        edges.push((name.to_string(), source.to_string(), target.to_string()));
        Graph::new(&self.vertex_names, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_names.len() as u32).map(VertexId)
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edges.len() as u32).map(EdgeId)
    }

    pub fn vertex(&self, name: &str) -> Result<VertexId> {
        self.vertex_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn edge(&self, name: &str) -> Result<EdgeId> {
        self.edge_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownEdge(name.to_string()))
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        v.index() < self.vertex_names.len()
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertex_names[v.index()]
    }

    pub fn edge_name(&self, e: EdgeId) -> &str {
        &self.edges[e.index()].name
    }

    pub fn source(&self, e: EdgeId) -> VertexId {
        self.edges[e.index()].source
    }

    pub fn target(&self, e: EdgeId) -> VertexId {
        self.edges[e.index()].target
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        self.source(e) == self.target(e)
    }

    /// Outgoing edges of `v`, ordered by edge name.
    pub fn out_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.out[v.index()]
    }

    /// Renders the graph in its text format. Parsing the output yields an
    /// equal graph.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for v in &self.vertex_names {
            s.push_str("vertex ");
            s.push_str(v);
            s.push('\n');
        }
        for e in &self.edges {
            s.push_str(&format!(
                "edge {} {} {}\n",
                e.name,
                self.vertex_names[e.source.index()],
                self.vertex_names[e.target.index()]
            ));
        }
        s
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let bad = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            match tokens.as_slice() {
                ["vertex", id] => {
                    if !is_identifier(id) {
                        return Err(bad(format!("invalid vertex id `{id}`")));
                    }
                    vertices.push(id.to_string());
                }
                ["edge", id, source, target] => {
                    for t in [id, source, target] {
                        if !is_identifier(t) {
                            return Err(bad(format!("invalid identifier `{t}`")));
                        }
                    }
                    edges.push((id.to_string(), source.to_string(), target.to_string()));
                }
                _ => return Err(bad(format!("unrecognised line `{line}`"))),
            }
        }
        Graph::new(vertices, edges)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
