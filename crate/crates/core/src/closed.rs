//! Proper closed inverse subsemigroups of S(G).
//!
//! Every proper closed inverse subsemigroup is one of
//!
//! * a finite chain `{(q,q) : q a suffix of w}`,
//! * an infinite chain of idempotents; only eventually periodic chains
//!   `{(s,s) : s a suffix of c^k.q}` are representable,
//! * a cycle type `L(p,d) = {(v.p^r.d, v.p^s.d) : v a suffix of p, r,s >= 0}
//!   ∪ {(q,q) : q a suffix of d}` for a circuit `p` and a path `d` from the
//!   base of `p` that shares no first edge with `p`.
//!
//! The only closed inverse subsemigroup containing 0 is S(G) itself.

use std::collections::HashSet;
use std::fmt;

use num_integer::Integer;

use crate::element::{enumerate_elements, Element};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::path::{suffix_comparable, Path};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    FiniteChain,
    InfiniteChain,
    Cycle,
    Improper,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::FiniteChain => "finite-chain",
            Kind::InfiniteChain => "infinite-chain",
            Kind::Cycle => "cycle",
            Kind::Improper => "improper",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ClosedInvSub {
    /// Up-closure of `(w, w)`.
    FiniteChain(Path),
    /// Idempotents on suffixes of `circuit^k . path`. Always canonical:
    /// primitive circuit based at the start of `path`, and `path` shares no
    /// first edge with `circuit`.
    InfiniteChain { circuit: Path, path: Path },
    /// `L(circuit, path)`.
    Cycle { circuit: Path, path: Path },
    /// The whole semigroup.
    Improper,
}

impl ClosedInvSub {
    pub fn finite_chain(w: Path) -> Result<Self> {
        Ok(ClosedInvSub::FiniteChain(w))
    }

    pub fn cycle(p: Path, d: Path) -> Result<Self> {
        if !p.is_circuit() {
            return Err(Error::NotACircuit(
                "cycle generator must be a circuit".into(),
            ));
        }
        if d.source() != p.source() {
            return Err(Error::InvalidSubsemigroup(
                "path must start at the base of the circuit".into(),
            ));
        }
        if d.first_edge().is_some() && d.first_edge() == p.first_edge() {
            return Err(Error::InvalidSubsemigroup(
                "circuit and path share a non-trivial prefix".into(),
            ));
        }
        Ok(ClosedInvSub::Cycle {
            circuit: p,
            path: d,
        })
    }

    /// Builds the chain of suffixes of `c^k . q`, reduced to canonical form.
    pub fn infinite_chain(c: Path, q: Path) -> Result<Self> {
        if !c.is_circuit() {
            return Err(Error::NotACircuit("chain period must be a circuit".into()));
        }
        if q.source() != c.source() {
            return Err(Error::InvalidSubsemigroup(
                "path must start at the base of the circuit".into(),
            ));
        }
        let (mut circuit, _) = c.primitive_root()?;
        let mut path = q;
        // absorb a leading edge of the path into the periodic part
        while path.first_edge().is_some() && path.first_edge() == circuit.first_edge() {
            path = path.suffix(path.len() - 1);
            circuit = circuit.rotate_left(1);
        }
        Ok(ClosedInvSub::InfiniteChain { circuit, path })
    }

    /// Validating constructor keyed by kind.
    pub fn make(kind: Kind, paths: &[Path]) -> Result<Self> {
        match (kind, paths) {
            (Kind::FiniteChain, [w]) => Self::finite_chain(w.clone()),
            (Kind::InfiniteChain, [c, q]) => Self::infinite_chain(c.clone(), q.clone()),
            (Kind::Cycle, [p, d]) => Self::cycle(p.clone(), d.clone()),
            (Kind::Improper, []) => Ok(ClosedInvSub::Improper),
            _ => Err(Error::InvalidSubsemigroup(format!(
                "{kind} takes a different number of paths"
            ))),
        }
    }

    pub fn kind(&self) -> Kind {
        match self {
            ClosedInvSub::FiniteChain(_) => Kind::FiniteChain,
            ClosedInvSub::InfiniteChain { .. } => Kind::InfiniteChain,
            ClosedInvSub::Cycle { .. } => Kind::Cycle,
            ClosedInvSub::Improper => Kind::Improper,
        }
    }

    pub fn is_proper(&self) -> bool {
        !matches!(self, ClosedInvSub::Improper)
    }

    /// Initial vertex of the defining path of a finite chain.
    pub fn root(&self) -> Result<VertexId> {
        match self {
            ClosedInvSub::FiniteChain(w) => Ok(w.source()),
            other => Err(Error::WrongType {
                expected: Kind::FiniteChain.as_str(),
                actual: other.kind().as_str(),
            }),
        }
    }

    /// `(w, w)` for a finite chain on `w`.
    pub fn min_idempotent(&self) -> Result<Element> {
        match self {
            ClosedInvSub::FiniteChain(w) => Ok(Element::idempotent(w.clone())),
            other => Err(Error::WrongType {
                expected: Kind::FiniteChain.as_str(),
                actual: other.kind().as_str(),
            }),
        }
    }

    pub fn contains(&self, x: &Element) -> bool {
        let (l, r) = match (self, x) {
            (ClosedInvSub::Improper, _) => return true,
            (_, Element::Zero) => return false,
            (_, Element::Pair(l, r)) => (l, r),
        };
        match self {
            ClosedInvSub::Improper => true,
            ClosedInvSub::FiniteChain(w) => l == r && l.is_suffix_of(w),
            ClosedInvSub::InfiniteChain { circuit, path } => {
                l == r && l.is_suffix_of(&periodic_word(circuit, path, l.len()))
            }
            ClosedInvSub::Cycle { circuit, path } => {
                if l == r && l.is_suffix_of(path) {
                    return true;
                }
                let (Some(y1), Some(y2)) = (l.strip_suffix(path), r.strip_suffix(path)) else {
                    return false;
                };
                let n = circuit.len();
                y1.len() % n == y2.len() % n
                    && y1.is_suffix_of(&circuit.power(y1.len() / n + 1))
                    && y2.is_suffix_of(&circuit.power(y2.len() / n + 1))
            }
        }
    }

    /// Every element whose components have at most `max_len` edges, in a
    /// deterministic order. `None` for the improper subsemigroup, which
    /// needs the graph (see [`ClosedInvSub::elements_in`]).
    pub fn bounded_elements(&self, max_len: usize) -> Option<Vec<Element>> {
        let mut out = Vec::new();
        match self {
            ClosedInvSub::Improper => return None,
            ClosedInvSub::FiniteChain(w) => {
                out.extend(
                    w.suffixes()
                        .filter(|q| q.len() <= max_len)
                        .map(Element::idempotent),
                );
            }
            ClosedInvSub::InfiniteChain { circuit, path } => {
                let word = periodic_word(circuit, path, max_len);
                out.extend(
                    word.suffixes()
                        .filter(|q| q.len() <= max_len)
                        .map(Element::idempotent),
                );
            }
            ClosedInvSub::Cycle { circuit, path } => {
                let mut seen = HashSet::new();
                let n = circuit.len();
                if path.len() <= max_len {
                    let room = max_len - path.len();
                    let word = circuit.power(room / n + 1);
                    for l1 in 0..=room {
                        for l2 in (l1 % n..=room).step_by(n) {
                            let y1 = word.suffix(l1).concat_unchecked(path);
                            let y2 = word.suffix(l2).concat_unchecked(path);
                            let x = Element::pair_unchecked(y1, y2);
                            if seen.insert(x.clone()) {
                                out.push(x);
                            }
                        }
                    }
                }
                for q in path.suffixes().filter(|q| q.len() <= max_len) {
                    let x = Element::idempotent(q);
                    if seen.insert(x.clone()) {
                        out.push(x);
                    }
                }
            }
        }
        Some(out)
    }

    /// Like [`ClosedInvSub::bounded_elements`], falling back to a full
    /// enumeration of `graph` for the improper subsemigroup.
    pub fn elements_in(&self, graph: &Graph, max_len: usize) -> Vec<Element> {
        self.bounded_elements(max_len)
            .unwrap_or_else(|| enumerate_elements(graph, max_len))
    }
}

/// `circuit^k . path` with `k` large enough that every suffix of length at
/// most `len` appears.
fn periodic_word(circuit: &Path, path: &Path, len: usize) -> Path {
    circuit
        .power(len / circuit.len() + 1)
        .concat_unchecked(path)
}

/// Reduces a non-idempotent `(u, p.u)` by stripping the common prefix, then
/// splits the circuit into primitive root and exponent.
fn normalise_generator(short: &Path, long: &Path) -> Result<(Path, Path, usize)> {
    let mut p = long
        .strip_suffix(short)
        .expect("suffix comparability was checked");
    let mut d = short.clone();
    while d.first_edge().is_some() && d.first_edge() == p.first_edge() {
        d = d.suffix(d.len() - 1);
        p = p.rotate_left(1);
    }
    let (root, exponent) = p.primitive_root()?;
    Ok((root, d, exponent))
}

/// The smallest closed inverse subsemigroup containing `gens`.
pub fn generated(gens: &[Element]) -> Result<ClosedInvSub> {
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let mut paths: Vec<&Path> = Vec::new();
    for g in gens {
        let Some((l, r)) = g.components() else {
            return Ok(ClosedInvSub::Improper);
        };
        paths.push(l);
        paths.push(r);
    }
    // two non-comparable paths give idempotents whose product is 0
    for (i, u) in paths.iter().enumerate() {
        if paths[i + 1..].iter().any(|v| !suffix_comparable(u, v)) {
            return Ok(ClosedInvSub::Improper);
        }
    }

    let mut periodic: Option<(Path, Path)> = None;
    let mut exponent = 0usize;
    for g in gens.iter().filter(|g| !g.is_idempotent()) {
        let (l, r) = g.components().unwrap();
        let (short, long) = if l.len() <= r.len() { (l, r) } else { (r, l) };
        let (root, d, k) = normalise_generator(short, long)?;
        match &periodic {
            None => periodic = Some((root, d)),
            Some((root0, d0)) if *root0 == root && *d0 == d => {}
            Some(_) => return Ok(ClosedInvSub::Improper),
        }
        exponent = exponent.gcd(&k);
    }

    let result = match periodic {
        None => {
            let longest = paths.iter().max_by_key(|p| p.len()).unwrap();
            ClosedInvSub::FiniteChain((*longest).clone())
        }
        Some((root, d)) => ClosedInvSub::cycle(root.power(exponent), d)?,
    };
    if gens.iter().all(|g| result.contains(g)) {
        Ok(result)
    } else {
        Ok(ClosedInvSub::Improper)
    }
}
