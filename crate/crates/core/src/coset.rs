//! Right cosets `↑(L t)` of closed inverse subsemigroups and their index.

use std::collections::HashSet;

use crate::closed::ClosedInvSub;
use crate::counting::{count_n, Count};
use crate::element::{enumerate_elements, Element};
use crate::error::{Error, Result};
use crate::escape::find_escape_circuit;
use crate::graph::{EdgeId, Graph, VertexId};
use crate::path::Path;

/// A right coset `↑(L t)`, `t t⁻¹ ∈ L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coset {
    subsemigroup: ClosedInvSub,
    representative: Element,
    canonical: Element,
}

impl Coset {
    pub fn subsemigroup(&self) -> &ClosedInvSub {
        &self.subsemigroup
    }

    /// The representative the coset was built from.
    pub fn representative(&self) -> &Element {
        &self.representative
    }

    /// A short representative reached by absorbing what `L` can absorb.
    pub fn canonical(&self) -> &Element {
        &self.canonical
    }

    pub fn contains(&self, x: &Element) -> bool {
        same_coset(&self.subsemigroup, x, &self.representative).unwrap_or(false)
    }

    pub fn same_as(&self, other: &Coset) -> bool {
        self.subsemigroup == other.subsemigroup && self.contains(&other.representative)
    }
}

fn check_representative(l: &ClosedInvSub, t: &Element) -> Result<()> {
    if t.is_zero() {
        return Err(Error::NotACoset("0 cannot represent a coset".into()));
    }
    if !l.contains(&t.range_idempotent()) {
        return Err(Error::NotACoset("t t^-1 is not in the subsemigroup".into()));
    }
    Ok(())
}

fn size_key(x: &Element) -> (usize, Path, Path) {
    let (l, r) = x.components().expect("non-zero");
    (l.len() + r.len(), l.clone(), r.clone())
}

fn smaller(a: &Element, b: &Element) -> bool {
    let (ka, kb) = (size_key(a), size_key(b));
    ka.0.cmp(&kb.0)
        .then_with(|| ka.1.shortlex_cmp(&kb.1))
        .then_with(|| ka.2.shortlex_cmp(&kb.2))
        .is_lt()
}

pub fn coset_of(l: &ClosedInvSub, t: &Element) -> Result<Coset> {
    check_representative(l, t)?;
    let mut best = t.up_max();
    if l.is_proper() {
        loop {
            let probe = l
                .bounded_elements(best.max_len())
                .expect("proper subsemigroups enumerate");
            let mut next = best.clone();
            for x in &probe {
                let y = x.multiply(&best);
                if !y.is_zero() {
                    let y = y.up_max();
                    if smaller(&y, &next) {
                        next = y;
                    }
                }
            }
            if next == best {
                break;
            }
            best = next;
        }
    }
    Ok(Coset {
        subsemigroup: l.clone(),
        representative: t.clone(),
        canonical: best,
    })
}

/// `a` and `b` lie in the same coset iff `a b⁻¹ ∈ L`.
pub fn same_coset(l: &ClosedInvSub, a: &Element, b: &Element) -> Result<bool> {
    check_representative(l, a)?;
    check_representative(l, b)?;
    Ok(l.contains(&a.multiply(&b.inverse())))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessKind {
    /// A circuit reachable from the defining path without reusing its edges.
    EscapeCircuit,
    /// A cycle-type circuit with at least two distinct edges.
    MultiEdgeCycle,
    /// Every infinite chain has infinite index.
    InfiniteChain,
}

impl WitnessKind {
    pub fn as_str(self) -> &'static str {
        match self {
            WitnessKind::EscapeCircuit => "escape-circuit",
            WitnessKind::MultiEdgeCycle => "multi-edge-cycle",
            WitnessKind::InfiniteChain => "infinite-chain",
        }
    }
}

/// Evidence for an infinite index: a circuit, a path and a vertex whose
/// meaning depends on `kind`. For an escape circuit `path` is the connector
/// from `vertex` (on the defining path) to the circuit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfiniteWitness {
    pub kind: WitnessKind,
    pub circuit: Path,
    pub path: Path,
    pub vertex: VertexId,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IndexVerdict {
    Finite(u128),
    Infinite(InfiniteWitness),
}

impl IndexVerdict {
    pub fn count(&self) -> Count {
        match self {
            IndexVerdict::Finite(n) => Count::Finite(*n),
            IndexVerdict::Infinite(_) => Count::Infinite,
        }
    }
}

fn distinct_vertices(p: &Path) -> Vec<VertexId> {
    let mut out = Vec::new();
    for &v in p.vertices() {
        if !out.contains(&v) {
            out.push(v);
        }
    }
    out
}

fn escape_witness(
    graph: &Graph,
    anchor: &Path,
    forbidden: Option<EdgeId>,
) -> Option<InfiniteWitness> {
    find_escape_circuit(graph, anchor, forbidden).map(|w| InfiniteWitness {
        kind: WitnessKind::EscapeCircuit,
        circuit: w.circuit,
        path: w.connector,
        vertex: w.vertex,
    })
}

fn finite(count: Count) -> u128 {
    count
        .finite()
        .expect("no escape circuit means every restricted count is finite")
}

/// The index `[S(G) : L]` together with a witness when it is infinite.
pub fn index_verdict(graph: &Graph, l: &ClosedInvSub) -> Result<IndexVerdict> {
    match l {
        ClosedInvSub::Improper => Ok(IndexVerdict::Finite(1)),
        ClosedInvSub::InfiniteChain { circuit, path } => {
            Ok(IndexVerdict::Infinite(InfiniteWitness {
                kind: WitnessKind::InfiniteChain,
                circuit: circuit.clone(),
                path: path.clone(),
                vertex: path.source(),
            }))
        }
        ClosedInvSub::FiniteChain(w) => {
            if let Some(witness) = escape_witness(graph, w, None) {
                return Ok(IndexVerdict::Infinite(witness));
            }
            let vertices = distinct_vertices(w);
            assert_eq!(
                vertices.len(),
                w.len() + 1,
                "finite index forces a vertex-simple path"
            );
            let none = HashSet::new();
            let mut total: u128 = 0;
            for v in vertices {
                total = total
                    .checked_add(finite(count_n(graph, v, w, &none)?))
                    .ok_or(Error::CountOverflow)?;
            }
            Ok(IndexVerdict::Finite(total))
        }
        ClosedInvSub::Cycle { circuit, path } => {
            let distinct: HashSet<EdgeId> = circuit.edges().iter().copied().collect();
            if distinct.len() >= 2 {
                return Ok(IndexVerdict::Infinite(InfiniteWitness {
                    kind: WitnessKind::MultiEdgeCycle,
                    circuit: circuit.clone(),
                    path: path.clone(),
                    vertex: circuit.source(),
                }));
            }
            // circuit = a^m for a loop a
            let a = circuit.edges()[0];
            let m = circuit.len() as u128;
            if let Some(witness) = escape_witness(graph, path, Some(a)) {
                return Ok(IndexVerdict::Infinite(witness));
            }
            let loop_path = Path::edge(graph, a);
            let none = HashSet::new();
            let without_a: HashSet<EdgeId> = [a].into();
            let mut total =
                Count::Finite(finite(count_n(graph, graph.source(a), &loop_path, &none)?))
                    .checked_scale(m - 1)?;
            for v in distinct_vertices(path) {
                total = total.checked_add(count_n(graph, v, path, &without_a)?)?;
            }
            Ok(IndexVerdict::Finite(finite(total)))
        }
    }
}

pub fn index(graph: &Graph, l: &ClosedInvSub) -> Result<Count> {
    index_verdict(graph, l).map(|v| v.count())
}

/// Every path from `v` whose first edge passes `first` and whose edges all
/// pass `allowed`; the empty path first. Only called when the set is finite.
fn paths_with_first_edge(
    graph: &Graph,
    v: VertexId,
    first: &dyn Fn(EdgeId) -> bool,
    allowed: &dyn Fn(EdgeId) -> bool,
) -> Vec<Path> {
    let mut out = vec![Path::empty(v)];
    let mut stack: Vec<Path> = graph
        .out_edges(v)
        .iter()
        .rev()
        .filter(|&&e| first(e) && allowed(e))
        .map(|&e| Path::edge(graph, e))
        .collect();
    while let Some(p) = stack.pop() {
        for &e in graph.out_edges(p.target()).iter().rev() {
            if allowed(e) {
                stack.push(p.concat_unchecked(&Path::edge(graph, e)));
            }
        }
        out.push(p);
    }
    out
}

/// One representative per coset, suffixes of the defining path taken
/// longest first.
pub fn coset_representatives(graph: &Graph, l: &ClosedInvSub) -> Result<Vec<Element>> {
    if let IndexVerdict::Infinite(_) = index_verdict(graph, l)? {
        return Err(Error::InfiniteIndex);
    }
    let mut reps = Vec::new();
    match l {
        ClosedInvSub::Improper => {
            let v = graph.vertices().next().expect("graphs are non-empty");
            reps.push(Element::vertex(v));
        }
        ClosedInvSub::FiniteChain(w) => {
            for s in w.suffixes() {
                let ts =
                    paths_with_first_edge(graph, s.source(), &|e| !w.contains_edge(e), &|_| true);
                reps.extend(
                    ts.into_iter()
                        .map(|t| Element::pair_unchecked(s.clone(), t)),
                );
            }
        }
        ClosedInvSub::Cycle { circuit, path: d } => {
            let a = circuit.edges()[0];
            for s in d.suffixes() {
                let ts =
                    paths_with_first_edge(graph, s.source(), &|e| !d.contains_edge(e), &|e| e != a);
                reps.extend(
                    ts.into_iter()
                        .map(|t| Element::pair_unchecked(s.clone(), t)),
                );
            }
            let base = graph.source(a);
            let tails = paths_with_first_edge(graph, base, &|e| e != a, &|_| true);
            let loop_path = Path::edge(graph, a);
            for j in 1..circuit.len() {
                let prefix = loop_path.power(j);
                for t in &tails {
                    reps.push(Element::pair_unchecked(
                        d.clone(),
                        prefix.concat_unchecked(t),
                    ));
                }
            }
        }
        ClosedInvSub::InfiniteChain { .. } => unreachable!("infinite chains have infinite index"),
    }
    Ok(reps)
}

/// Elements of `↑(L t)` whose components have at most `max_len` edges.
/// Exact for finite chains once `max_len >= |w| + |t|`.
pub fn coset_elements_bounded(
    graph: &Graph,
    l: &ClosedInvSub,
    t: &Element,
    max_len: usize,
) -> Result<Vec<Element>> {
    check_representative(l, t)?;
    if !l.is_proper() {
        return Ok(enumerate_elements(graph, max_len));
    }
    let probe = l
        .bounded_elements(max_len + t.max_len())
        .expect("proper subsemigroups enumerate");
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for x in &probe {
        let y = x.multiply(t);
        // xt is never 0: every path of a proper L is suffix comparable with t's
        for z in y.up_set()? {
            if z.max_len() <= max_len && seen.insert(z.clone()) {
                out.push(z);
            }
        }
    }
    Ok(out)
}
