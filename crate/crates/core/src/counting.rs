//! Path counting: the number of directed paths leaving a vertex, and the
//! restricted count `N` used by the index formulas.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::path::Path;

/// A non-negative integer or infinity. Finite values are exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Count {
    Finite(u128),
    Infinite,
}

impl Count {
    pub fn is_finite(self) -> bool {
        matches!(self, Count::Finite(_))
    }

    pub fn finite(self) -> Option<u128> {
        match self {
            Count::Finite(n) => Some(n),
            Count::Infinite => None,
        }
    }

    pub fn checked_add(self, other: Count) -> Result<Count> {
        match (self, other) {
            (Count::Finite(a), Count::Finite(b)) => a
                .checked_add(b)
                .map(Count::Finite)
                .ok_or(Error::CountOverflow),
            _ => Ok(Count::Infinite),
        }
    }

    /// Scales by a finite factor; `0 * Infinite` is 0.
    pub fn checked_scale(self, factor: u128) -> Result<Count> {
        match self {
            _ if factor == 0 => Ok(Count::Finite(0)),
            Count::Finite(a) => a
                .checked_mul(factor)
                .map(Count::Finite)
                .ok_or(Error::CountOverflow),
            Count::Infinite => Ok(Count::Infinite),
        }
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Count::Finite(n) => write!(f, "{n}"),
            Count::Infinite => f.write_str("infinite"),
        }
    }
}

fn check_vertex(graph: &Graph, v: VertexId) -> Result<()> {
    if graph.contains_vertex(v) {
        Ok(())
    } else {
        Err(Error::UnknownVertex(format!("#{}", v.index())))
    }
}

/// Counts paths (including the empty one) starting at `v` and using only
/// edges accepted by `allowed`.
pub(crate) fn count_paths_filtered(
    graph: &Graph,
    v: VertexId,
    allowed: &dyn Fn(EdgeId) -> bool,
) -> Result<Count> {
    const UNSEEN: u8 = 0;
    const OPEN: u8 = 1;
    const DONE: u8 = 2;

    let n = graph.vertex_count();
    let mut state = vec![UNSEEN; n];
    let mut count = vec![0u128; n];
    // (vertex, index of next outgoing edge to visit)
    let mut stack: Vec<(VertexId, usize)> = vec![(v, 0)];
    state[v.index()] = OPEN;

    while let Some(&mut (u, ref mut next)) = stack.last_mut() {
        let out = graph.out_edges(u);
        if let Some(&e) = out.get(*next) {
            *next += 1;
            if !allowed(e) {
                continue;
            }
            let t = graph.target(e);
            match state[t.index()] {
                UNSEEN => {
                    state[t.index()] = OPEN;
                    stack.push((t, 0));
                }
                // a cycle is reachable from v
                OPEN => return Ok(Count::Infinite),
                _ => {}
            }
        } else {
            let mut total: u128 = 1;
            for &e in out.iter().filter(|&&e| allowed(e)) {
                total = total
                    .checked_add(count[graph.target(e).index()])
                    .ok_or(Error::CountOverflow)?;
            }
            count[u.index()] = total;
            state[u.index()] = DONE;
            stack.pop();
        }
    }
    Ok(Count::Finite(count[v.index()]))
}

/// Number of directed paths with initial vertex `v`, the empty path
/// included. Infinite exactly when a directed cycle is reachable from `v`.
pub fn count_paths_from(graph: &Graph, v: VertexId) -> Result<Count> {
    check_vertex(graph, v)?;
    count_paths_filtered(graph, v, &|_| true)
}

/// `N` for the graph with `removed` deleted: paths from `v` whose first edge
/// is not an edge of `w`. The empty path at `v` always counts.
pub fn count_n(graph: &Graph, v: VertexId, w: &Path, removed: &HashSet<EdgeId>) -> Result<Count> {
    check_vertex(graph, v)?;
    let allowed = |e: EdgeId| !removed.contains(&e);
    let mut total = Count::Finite(1);
    for &e in graph.out_edges(v) {
        if !allowed(e) || w.contains_edge(e) {
            continue;
        }
        let tail = count_paths_filtered(graph, graph.target(e), &allowed)?;
        total = total.checked_add(tail)?;
        if total == Count::Infinite {
            break;
        }
    }
    Ok(total)
}
