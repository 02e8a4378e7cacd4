//! Search for a directed circuit reachable from a path without reusing the
//! path's edges: the witness that a chain or loop-cycle subsemigroup has
//! infinite index.

use std::collections::{HashSet, VecDeque};

use crate::graph::{EdgeId, Graph, VertexId};
use crate::path::Path;

/// A circuit `c`, a vertex `v0` on the anchor path and a connecting path
/// `g` from `v0` to the base of `c`. `g` shares no edge with `c` or with
/// the anchor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EscapeWitness {
    pub circuit: Path,
    pub connector: Path,
    pub vertex: VertexId,
}

impl EscapeWitness {
    /// Re-checks the witness conditions against `anchor`.
    pub fn is_valid_for(&self, anchor: &Path, forbidden_loop: Option<EdgeId>) -> bool {
        let c = &self.circuit;
        let g = &self.connector;
        let distinct_edges: HashSet<_> = g.edges().iter().collect();
        c.is_circuit()
            && anchor.vertices().contains(&self.vertex)
            && g.source() == self.vertex
            && c.vertices().contains(&g.target())
            && distinct_edges.len() == g.len()
            && g.edges()
                .iter()
                .all(|e| !c.contains_edge(*e) && !anchor.contains_edge(*e))
            && forbidden_loop.is_none_or(|a| c.edges().iter().any(|&e| e != a))
    }
}

/// Every vertex-simple directed circuit, each listed once starting from its
/// smallest vertex, sorted shortest first and then by edge sequence.
pub fn simple_circuits(graph: &Graph) -> Vec<Path> {
    let mut found = Vec::new();
    for start in graph.vertices() {
        // (current path, next out-edge index)
        let mut stack: Vec<(Path, usize)> = vec![(Path::empty(start), 0)];
        while let Some((path, next)) = stack.last_mut() {
            let out = graph.out_edges(path.target());
            let Some(&e) = out.get(*next) else {
                stack.pop();
                continue;
            };
            *next += 1;
            let t = graph.target(e);
            if t == start {
                found.push(path.concat_unchecked(&Path::edge(graph, e)));
            } else if t > start && !path.vertices().contains(&t) {
                let extended = path.concat_unchecked(&Path::edge(graph, e));
                stack.push((extended, 0));
            }
        }
    }
    found.sort_by(|a, b| a.shortlex_cmp(b));
    found
}

/// Looks for a circuit `c` and a possibly empty path `g` from a vertex of
/// `anchor` to a vertex of `c`, with `g` edge-disjoint from `c` and from
/// `anchor`. When `forbidden_loop` is given, `c` must use some other edge.
///
/// Only simple circuits and shortest connectors are tried; any witness can
/// be shortened to that form.
pub fn find_escape_circuit(
    graph: &Graph,
    anchor: &Path,
    forbidden_loop: Option<EdgeId>,
) -> Option<EscapeWitness> {
    let mut sources: Vec<VertexId> = Vec::new();
    for &v in anchor.vertices() {
        if !sources.contains(&v) {
            sources.push(v);
        }
    }

    for c in simple_circuits(graph) {
        if let Some(a) = forbidden_loop {
            if c.edges().iter().all(|&e| e == a) {
                continue;
            }
        }
        let blocked = |e: EdgeId| c.contains_edge(e) || anchor.contains_edge(e);
        let on_circuit: HashSet<VertexId> = c.vertices().iter().copied().collect();
        if let Some(g) = shortest_connector(graph, &sources, &on_circuit, &blocked) {
            let hit = g.target();
            let offset = c.vertices().iter().position(|&v| v == hit).unwrap();
            return Some(EscapeWitness {
                circuit: c.rotate_left(offset),
                vertex: g.source(),
                connector: g,
            });
        }
    }
    None
}

/// Multi-source BFS, seeded in the given order.
fn shortest_connector(
    graph: &Graph,
    sources: &[VertexId],
    targets: &HashSet<VertexId>,
    blocked: &dyn Fn(EdgeId) -> bool,
) -> Option<Path> {
    let mut parent: Vec<Option<Option<EdgeId>>> = vec![None; graph.vertex_count()];
    let mut queue = VecDeque::new();
    for &s in sources {
        if parent[s.index()].is_none() {
            parent[s.index()] = Some(None);
            queue.push_back(s);
        }
    }
    while let Some(u) = queue.pop_front() {
        if targets.contains(&u) {
            let mut edges = Vec::new();
            let mut cur = u;
            while let Some(Some(e)) = parent[cur.index()] {
                edges.push(e);
                cur = graph.source(e);
            }
            edges.reverse();
            return Some(if edges.is_empty() {
                Path::empty(u)
            } else {
                Path::from_edges(graph, &edges).expect("BFS tree edges are consecutive")
            });
        }
        for &e in graph.out_edges(u) {
            let t = graph.target(e);
            if !blocked(e) && parent[t.index()].is_none() {
                parent[t.index()] = Some(Some(e));
                queue.push_back(t);
            }
        }
    }
    None
}
