//! Elements of the graph inverse semigroup S(G) and their arithmetic.
//!
//! A non-zero element is a pair `(v, w)` of paths with a common initial
//! vertex. The product is
//!
//! ```text
//! (t, u)(v, w) = (t, p.w)   if u = p.v
//!              = (p.t, w)   if v = p.u
//!              = 0          otherwise
//! ```
//!
//! and the natural partial order descends by prepending a common prefix to
//! both components.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::path::{common_prefix_len, Path};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Element {
    Zero,
    Pair(Path, Path),
}

impl Element {
    pub fn pair(left: Path, right: Path) -> Result<Self> {
        if left.source() != right.source() {
            return Err(Error::InitialVertexMismatch {
                left: format!("#{}", left.source().index()),
                right: format!("#{}", right.source().index()),
            });
        }
        Ok(Element::Pair(left, right))
    }

    pub(crate) fn pair_unchecked(left: Path, right: Path) -> Self {
        debug_assert_eq!(left.source(), right.source());
        Element::Pair(left, right)
    }

    /// The idempotent `(p, p)`.
    pub fn idempotent(p: Path) -> Self {
        Element::Pair(p.clone(), p)
    }

    /// The idempotent at the empty path of `v`.
    pub fn vertex(v: VertexId) -> Self {
        Element::idempotent(Path::empty(v))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Element::Zero)
    }

    pub fn is_idempotent(&self) -> bool {
        match self {
            Element::Zero => true,
            Element::Pair(l, r) => l == r,
        }
    }

    pub fn components(&self) -> Option<(&Path, &Path)> {
        match self {
            Element::Zero => None,
            Element::Pair(l, r) => Some((l, r)),
        }
    }

    /// Larger of the two component lengths; 0 for Zero.
    pub fn max_len(&self) -> usize {
        self.components().map_or(0, |(l, r)| l.len().max(r.len()))
    }

    pub fn inverse(&self) -> Element {
        match self {
            Element::Zero => Element::Zero,
            Element::Pair(l, r) => Element::Pair(r.clone(), l.clone()),
        }
    }

    pub fn multiply(&self, other: &Element) -> Element {
        let (Element::Pair(t, u), Element::Pair(v, w)) = (self, other) else {
            return Element::Zero;
        };
        if let Some(p) = u.strip_suffix(v) {
            Element::pair_unchecked(t.clone(), p.concat_unchecked(w))
        } else if let Some(p) = v.strip_suffix(u) {
            Element::pair_unchecked(p.concat_unchecked(t), w.clone())
        } else {
            Element::Zero
        }
    }

    /// `self * self^-1`.
    pub fn range_idempotent(&self) -> Element {
        match self {
            Element::Zero => Element::Zero,
            Element::Pair(l, _) => Element::idempotent(l.clone()),
        }
    }

    /// Natural partial order: `0` is below everything; `(t,u) <= (v,w)` iff
    /// `t = p.v` and `u = p.w` for a common path `p`.
    pub fn natural_leq(&self, other: &Element) -> bool {
        match (self, other) {
            (Element::Zero, _) => true,
            (_, Element::Zero) => false,
            (Element::Pair(t, u), Element::Pair(v, w)) => {
                match (t.strip_suffix(v), u.strip_suffix(w)) {
                    (Some(p1), Some(p2)) => p1 == p2,
                    _ => false,
                }
            }
        }
    }

    /// Every element at or above `self`, starting with `self` and ending
    /// with the maximal one.
    pub fn up_set(&self) -> Result<Vec<Element>> {
        let (v, w) = self.components().ok_or(Error::InfiniteUpSet)?;
        let k = common_prefix_len(v, w);
        Ok((0..=k)
            .map(|i| Element::pair_unchecked(v.suffix(v.len() - i), w.suffix(w.len() - i)))
            .collect())
    }

    /// The maximal element above `self` (strip the longest common prefix).
    pub fn up_max(&self) -> Element {
        match self {
            Element::Zero => Element::Zero,
            Element::Pair(v, w) => {
                let k = common_prefix_len(v, w);
                Element::pair_unchecked(v.suffix(v.len() - k), w.suffix(w.len() - k))
            }
        }
    }

    pub fn display<'a>(&'a self, graph: &'a Graph) -> ElementDisplay<'a> {
        ElementDisplay {
            element: self,
            graph,
        }
    }
}

/// Every path in `graph` starting at `v` with at most `max_len` edges, in
/// depth-first order with edges visited by name.
pub fn paths_from(graph: &Graph, v: VertexId, max_len: usize) -> Vec<Path> {
    let mut out = Vec::new();
    let mut stack = vec![Path::empty(v)];
    while let Some(p) = stack.pop() {
        if p.len() < max_len {
            for &e in graph.out_edges(p.target()).iter().rev() {
                stack.push(p.concat_unchecked(&Path::edge(graph, e)));
            }
        }
        out.push(p);
    }
    out
}

/// Zero followed by every non-zero element whose components each have at
/// most `max_len` edges.
pub fn enumerate_elements(graph: &Graph, max_len: usize) -> Vec<Element> {
    let mut out = vec![Element::Zero];
    for v in graph.vertices() {
        let paths = paths_from(graph, v, max_len);
        for l in &paths {
            for r in &paths {
                out.push(Element::pair_unchecked(l.clone(), r.clone()));
            }
        }
    }
    out
}

pub struct ElementDisplay<'a> {
    element: &'a Element,
    graph: &'a Graph,
}

impl fmt::Display for ElementDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.element {
            Element::Zero => f.write_str("0"),
            Element::Pair(l, r) => {
                write!(f, "({}|{})", l.display(self.graph), r.display(self.graph))
            }
        }
    }
}
