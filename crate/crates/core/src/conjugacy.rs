//! Conjugacy of proper closed inverse subsemigroups.
//!
//! `L` and `K` are conjugate when some `c = (s, t)` satisfies
//! `c⁻¹ L c ⊆ K` and `c K c⁻¹ ⊆ L`. Conjugacy preserves the kind, and
//!
//! * finite chains are conjugate iff their roots agree;
//! * cycle types `L(p,d)`, `L(q,k)` iff `p` and `q` are conjugate circuits;
//! * (eventually periodic) infinite chains iff their primitive periods are
//!   rotations of each other. The left-extension sets of deep suffixes are
//!   the truncations of the purely periodic left-infinite word, and two such
//!   words agree exactly when the primitive periods are rotations.

use crate::closed::ClosedInvSub;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::path::{paths_conjugate, rotation_offset};

fn require_proper(l: &ClosedInvSub) -> Result<()> {
    if l.is_proper() {
        Ok(())
    } else {
        Err(Error::ImproperArgument)
    }
}

pub fn are_conjugate(l: &ClosedInvSub, k: &ClosedInvSub) -> Result<bool> {
    require_proper(l)?;
    require_proper(k)?;
    Ok(match (l, k) {
        (ClosedInvSub::FiniteChain(u), ClosedInvSub::FiniteChain(v)) => u.source() == v.source(),
        (ClosedInvSub::Cycle { circuit: p, .. }, ClosedInvSub::Cycle { circuit: q, .. }) => {
            paths_conjugate(p, q)
        }
        (
            ClosedInvSub::InfiniteChain { circuit: c1, .. },
            ClosedInvSub::InfiniteChain { circuit: c2, .. },
        ) => paths_conjugate(c1, c2),
        _ => false,
    })
}

/// An element `c` with `c⁻¹ L c ⊆ K` and `c K c⁻¹ ⊆ L`, when one exists.
pub fn conjugator(l: &ClosedInvSub, k: &ClosedInvSub) -> Result<Option<Element>> {
    require_proper(l)?;
    require_proper(k)?;
    let found = match (l, k) {
        (ClosedInvSub::FiniteChain(u), ClosedInvSub::FiniteChain(v)) => {
            (u.source() == v.source()).then(|| Element::pair_unchecked(u.clone(), v.clone()))
        }
        (
            ClosedInvSub::Cycle {
                circuit: p,
                path: d,
            },
            ClosedInvSub::Cycle {
                circuit: q,
                path: kp,
            },
        ) => rotation_offset(p, q).map(|offset| {
            // p = u.v, q = v.u
            let v = p.suffix(p.len() - offset);
            Element::pair_unchecked(v.concat_unchecked(d), kp.clone())
        }),
        (
            ClosedInvSub::InfiniteChain {
                circuit: c1,
                path: q1,
            },
            ClosedInvSub::InfiniteChain {
                circuit: c2,
                path: q2,
            },
        ) => rotation_offset(c1, c2).and_then(|offset| {
            // c1 = x.y, c2 = y.x, so c2^k.q2 extends to c1^k.x.q2
            let x = c1.prefix(offset);
            let c = Element::pair_unchecked(q1.clone(), x.concat_unchecked(q2));
            let bound = q1.len() + x.len() + q2.len() + 2 * c1.len();
            conjugates_within(l, k, &c, bound).then_some(c)
        }),
        _ => None,
    };
    Ok(found)
}

/// Checks `c⁻¹ x c ∈ K` for every `x ∈ L` and `c y c⁻¹ ∈ L` for every
/// `y ∈ K`, over elements with components of at most `bound` edges.
pub fn conjugates_within(l: &ClosedInvSub, k: &ClosedInvSub, c: &Element, bound: usize) -> bool {
    let (Some(ls), Some(ks)) = (l.bounded_elements(bound), k.bounded_elements(bound)) else {
        return false;
    };
    let inv = c.inverse();
    ls.iter().all(|x| k.contains(&inv.multiply(x).multiply(c)))
        && ks.iter().all(|y| l.contains(&c.multiply(y).multiply(&inv)))
}
