//! Brute-force ground truth over a bounded slice of `S(G)`.
//!
//! Nothing here uses the structure theory: saturation applies the
//! semigroup operations until nothing new appears, and the index profile
//! counts coset classes by pairwise comparison.

use std::collections::HashSet;

use crate::closed::ClosedInvSub;
use crate::element::{enumerate_elements, Element};
use crate::graph::Graph;

pub const DEFAULT_MAX_LEN: usize = 8;

/// All elements whose components have at most `max_len` edges, plus 0.
#[derive(Debug, Clone)]
pub struct BoundedUniverse {
    graph: Graph,
    max_len: usize,
    elements: Vec<Element>,
}

impl BoundedUniverse {
    pub fn new(graph: Graph, max_len: usize) -> Self {
        let elements = enumerate_elements(&graph, max_len);
        BoundedUniverse {
            graph,
            max_len,
            elements,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn contains(&self, x: &Element) -> bool {
        x.max_len() <= self.max_len
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Saturation {
    /// In universe order.
    pub elements: Vec<Element>,
    pub contains_zero: bool,
}

/// The smallest subset of the universe containing `gens` and closed under
/// products that stay inside the universe, inverses and up-sets.
/// Generators outside the universe are ignored.
pub fn closure_saturate(universe: &BoundedUniverse, gens: &[Element]) -> Saturation {
    let mut found: HashSet<Element> = HashSet::new();
    let mut members: Vec<Element> = Vec::new();
    let mut queue: Vec<Element> = gens
        .iter()
        .filter(|g| universe.contains(g))
        .cloned()
        .collect();

    while let Some(x) = queue.pop() {
        if found.contains(&x) {
            continue;
        }
        if x.is_zero() {
            // everything lies above 0
            return Saturation {
                elements: universe.elements().to_vec(),
                contains_zero: true,
            };
        }
        found.insert(x.clone());
        members.push(x.clone());

        let mut fresh = vec![x.inverse()];
        fresh.extend(x.up_set().expect("non-zero"));
        for y in &members {
            fresh.push(x.multiply(y));
            fresh.push(y.multiply(&x));
        }
        queue.extend(
            fresh
                .into_iter()
                .filter(|z| universe.contains(z) && !found.contains(z)),
        );
    }

    let elements = universe
        .elements()
        .iter()
        .filter(|x| found.contains(*x))
        .cloned()
        .collect();
    Saturation {
        elements,
        contains_zero: false,
    }
}

/// For each bound `b = 0..=max_len`, the number of classes of
/// `{t : components ≤ b, t t⁻¹ ∈ L}` under `a b⁻¹ ∈ L`.
pub fn index_profile(universe: &BoundedUniverse, l: &ClosedInvSub) -> Vec<(usize, usize)> {
    let mut candidates: Vec<&Element> = universe
        .elements()
        .iter()
        .filter(|t| !t.is_zero() && l.contains(&t.range_idempotent()))
        .collect();
    candidates.sort_by_key(|t| t.max_len());

    let mut classes: Vec<Element> = Vec::new();
    let mut profile = Vec::with_capacity(universe.max_len() + 1);
    let mut next = candidates.iter().peekable();
    for bound in 0..=universe.max_len() {
        while let Some(t) = next.next_if(|t| t.max_len() <= bound) {
            if !classes
                .iter()
                .any(|r| l.contains(&t.multiply(&r.inverse())))
            {
                classes.push((*t).clone());
            }
        }
        profile.push((bound, classes.len()));
    }
    profile
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProfileShape {
    /// The last two counts agree.
    Stable(usize),
    /// Still moving, and the count at `max_len` exceeds the count at
    /// `max_len / 2`.
    Growing,
    Undecided,
}

/// Reads a profile as a heuristic verdict; never a proof either way.
pub fn profile_shape(profile: &[(usize, usize)]) -> ProfileShape {
    let [.., (_, before), (max, last)] = *profile else {
        return ProfileShape::Undecided;
    };
    if before == last {
        ProfileShape::Stable(last)
    } else if last > profile[max / 2].1 {
        ProfileShape::Growing
    } else {
        ProfileShape::Undecided
    }
}
