//! Directed paths in a [`Graph`].
//!
//! Edges are stored in traversal order: the leftmost edge is traversed
//! first. A suffix is a final traversed segment, so the empty path at the
//! terminal vertex is a suffix of every path.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};

/// A directed path: a base vertex followed by incidence-consistent edges.
///
/// `vertices` always has one more entry than `edges`, so prefixes and
/// suffixes can be cut without consulting the graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    vertices: Vec<VertexId>,
    edges: Vec<EdgeId>,
}

fn vertex_label(v: VertexId) -> String {
    format!("#{}", v.index())
}

impl Path {
    pub fn empty(v: VertexId) -> Self {
        Path {
            vertices: vec![v],
            edges: Vec::new(),
        }
    }

    pub fn edge(graph: &Graph, e: EdgeId) -> Self {
        Path {
            vertices: vec![graph.source(e), graph.target(e)],
            edges: vec![e],
        }
    }

    /// Builds a non-empty path from consecutive edges.
    pub fn from_edges(graph: &Graph, edges: &[EdgeId]) -> Result<Self> {
        let (&first, rest) = edges
            .split_first()
            .ok_or_else(|| Error::InvalidSubsemigroup("empty edge list".into()))?;
        let mut path = Path::edge(graph, first);
        for &e in rest {
            if graph.source(e) != path.target() {
                return Err(Error::NotIncident(
                    graph.edge_name(*path.edges.last().unwrap()).to_string(),
                    graph.edge_name(e).to_string(),
                ));
            }
            path.edges.push(e);
            path.vertices.push(graph.target(e));
        }
        Ok(path)
    }

    /// Builds a non-empty path from edge names.
    pub fn from_names(graph: &Graph, names: &[&str]) -> Result<Self> {
        let edges = names
            .iter()
            .map(|n| graph.edge(n))
            .collect::<Result<Vec<_>>>()?;
        Path::from_edges(graph, &edges)
    }

    /// Initial vertex.
    pub fn source(&self) -> VertexId {
        self.vertices[0]
    }

    /// Terminal vertex.
    pub fn target(&self) -> VertexId {
        *self.vertices.last().unwrap()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    /// Visited vertices in order, with repetitions.
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn first_edge(&self) -> Option<EdgeId> {
        self.edges.first().copied()
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edges.contains(&e)
    }

    pub fn concat(&self, other: &Path) -> Result<Path> {
        if self.target() != other.source() {
            return Err(Error::CompositionUndefined {
                end: vertex_label(self.target()),
                start: vertex_label(other.source()),
            });
        }
        Ok(self.concat_unchecked(other))
    }

    pub(crate) fn concat_unchecked(&self, other: &Path) -> Path {
        debug_assert_eq!(self.target(), other.source());
        let mut vertices = Vec::with_capacity(self.vertices.len() + other.edges.len());
        vertices.extend_from_slice(&self.vertices);
        vertices.extend_from_slice(&other.vertices[1..]);
        let mut edges = Vec::with_capacity(self.edges.len() + other.edges.len());
        edges.extend_from_slice(&self.edges);
        edges.extend_from_slice(&other.edges);
        Path { vertices, edges }
    }

    /// The first `k` edges.
    pub fn prefix(&self, k: usize) -> Path {
        Path {
            vertices: self.vertices[..=k].to_vec(),
            edges: self.edges[..k].to_vec(),
        }
    }

    /// The last `k` edges.
    pub fn suffix(&self, k: usize) -> Path {
        let start = self.len() - k;
        Path {
            vertices: self.vertices[start..].to_vec(),
            edges: self.edges[start..].to_vec(),
        }
    }

    /// All suffixes, longest (the path itself) first, ending with the empty
    /// path at the terminal vertex.
    pub fn suffixes(&self) -> impl Iterator<Item = Path> + '_ {
        (0..=self.len()).rev().map(move |k| self.suffix(k))
    }

    /// `true` iff `self` is a final segment of `u`.
    pub fn is_suffix_of(&self, u: &Path) -> bool {
        self.len() <= u.len()
            && self.target() == u.target()
            && u.edges.ends_with(&self.edges)
            && (self.len() < u.len() || self.source() == u.source())
    }

    pub fn is_prefix_of(&self, u: &Path) -> bool {
        self.source() == u.source() && u.edges.starts_with(&self.edges)
    }

    /// If `self = p.suffix`, returns `p`.
    pub fn strip_suffix(&self, suffix: &Path) -> Option<Path> {
        suffix
            .is_suffix_of(self)
            .then(|| self.prefix(self.len() - suffix.len()))
    }

    /// If `self = prefix.q`, returns `q`.
    pub fn strip_prefix(&self, prefix: &Path) -> Option<Path> {
        prefix
            .is_prefix_of(self)
            .then(|| self.suffix(self.len() - prefix.len()))
    }

    pub fn is_circuit(&self) -> bool {
        !self.is_empty() && self.source() == self.target()
    }

    /// `k`-fold concatenation of a circuit with itself; `k = 0` gives the
    /// empty path at its base.
    pub fn power(&self, k: usize) -> Path {
        debug_assert!(self.source() == self.target());
        let mut out = Path::empty(self.source());
        for _ in 0..k {
            out = out.concat_unchecked(self);
        }
        out
    }

    /// Moves the first `k` edges of a circuit to its end.
    pub fn rotate_left(&self, k: usize) -> Path {
        debug_assert!(self.source() == self.target());
        let k = if self.is_empty() { 0 } else { k % self.len() };
        self.suffix(self.len() - k)
            .concat_unchecked(&self.prefix(k))
    }

    /// Shortest circuit `r` with `self = r^n`, together with `n`.
    pub fn primitive_root(&self) -> Result<(Path, usize)> {
        if !self.is_circuit() {
            return Err(Error::NotACircuit(format!("{} edge path", self.len())));
        }
        let n = self.len();
        for period in 1..=n {
            if n.is_multiple_of(period)
                && (period..n).all(|i| self.edges[i] == self.edges[i - period])
            {
                return Ok((self.prefix(period), n / period));
            }
        }
        unreachable!("the full length is always a period")
    }

    /// Shortlex order on edge sequences, then base vertex.
    pub fn shortlex_cmp(&self, other: &Path) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.edges.cmp(&other.edges))
            .then_with(|| self.source().cmp(&other.source()))
    }

    pub fn display<'a>(&'a self, graph: &'a Graph) -> PathDisplay<'a> {
        PathDisplay { path: self, graph }
    }
}

pub fn suffix_comparable(u: &Path, v: &Path) -> bool {
    u.is_suffix_of(v) || v.is_suffix_of(u)
}

/// Splits `u = p.u'` and `v = p.v'` with `p` the longest common prefix.
pub fn strip_common_prefix(u: &Path, v: &Path) -> Result<(Path, Path, Path)> {
    if u.source() != v.source() {
        return Err(Error::InitialVertexMismatch {
            left: vertex_label(u.source()),
            right: vertex_label(v.source()),
        });
    }
    let k = common_prefix_len(u, v);
    Ok((u.prefix(k), u.suffix(u.len() - k), v.suffix(v.len() - k)))
}

pub(crate) fn common_prefix_len(u: &Path, v: &Path) -> usize {
    u.edges
        .iter()
        .zip(&v.edges)
        .take_while(|(a, b)| a == b)
        .count()
}

/// `true` iff `p = uv` and `q = vu` for some paths `u`, `v`.
pub fn paths_conjugate(p: &Path, q: &Path) -> bool {
    rotation_offset(p, q).is_some()
}

/// Smallest `k` with `q = p.rotate_left(k)`, i.e. `p = u.v`, `q = v.u`
/// with `|u| = k`.
pub fn rotation_offset(p: &Path, q: &Path) -> Option<usize> {
    if p.len() != q.len() {
        return None;
    }
    if p.is_empty() {
        return (p == q).then_some(0);
    }
    if p == q {
        return Some(0);
    }
    if !p.is_circuit() || !q.is_circuit() {
        return None;
    }
    let n = p.len();
    (1..n).find(|&k| (0..n).all(|i| q.edges[i] == p.edges[(i + k) % n]))
}

pub struct PathDisplay<'a> {
    path: &'a Path,
    graph: &'a Graph,
}

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_empty() {
            return write!(f, "@{}", self.graph.vertex_name(self.path.source()));
        }
        for (i, &e) in self.path.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            f.write_str(self.graph.edge_name(e))?;
        }
        Ok(())
    }
}
