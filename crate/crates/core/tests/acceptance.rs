//! The nine acceptance criteria, one pass/fail line each.
//!
//! Run with `cargo test -p gis-core --test acceptance -- --nocapture` to see
//! the report. Criterion 1 is known to fail as literally stated (the
//! closed-form count excludes the adjoined zero); `chain_count_excludes_zero`
//! pins the exact discrepancy.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use gis_core::conjugacy::conjugates_within;
use gis_core::element::paths_from;
use gis_core::literal::{parse_element, parse_path, parse_subsemigroup};
use gis_core::oracle::{closure_saturate, index_profile, BoundedUniverse};
use gis_core::{
    are_conjugate, conjugator, coset_elements_bounded, coset_representatives, enumerate_elements,
    fixtures, generated, index, index_verdict, same_coset, ClosedInvSub, Count, Element, Graph,
    IndexVerdict, Path,
};

type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

/// Criteria expected to report FAIL; each has a ledger entry.
const KNOWN_FAILING: &[u32] = &[1];

fn chain_literal(n: usize) -> String {
    let w: Vec<String> = (1..=n).rev().map(|i| format!("e{i}")).collect();
    format!("chain {}", w.join("."))
}

fn sub(g: &Graph, lit: &str) -> ClosedInvSub {
    parse_subsemigroup(g, lit).unwrap_or_else(|e| panic!("{lit}: {e}"))
}

fn el(g: &Graph, lit: &str) -> Element {
    parse_element(g, lit).unwrap_or_else(|e| panic!("{lit}: {e}"))
}

fn set(xs: Vec<Element>) -> HashSet<Element> {
    xs.into_iter().collect()
}

fn chain_cardinality() -> Check {
    for n in 1..=6u128 {
        let total = enumerate_elements(&fixtures::chain(n as usize), n as usize).len() as u128;
        let formula = (n + 1) * (n + 2) * (2 * n + 3) / 6;
        ensure!(
            total == formula,
            "n={n}: {total} elements including 0, formula {formula}"
        );
    }
    Ok(())
}

fn chain_index() -> Check {
    for n in 1..=6usize {
        let g = fixtures::chain(n);
        let l = sub(&g, &chain_literal(n));
        let idx = index(&g, &l).map_err(|e| e.to_string())?;
        ensure!(idx == Count::Finite(n as u128 + 1), "n={n}: index {idx}");

        let reps = coset_representatives(&g, &l).map_err(|e| e.to_string())?;
        ensure!(reps.len() == n + 1, "n={n}: {} representatives", reps.len());
        for (i, a) in reps.iter().enumerate() {
            for b in &reps[i + 1..] {
                ensure!(
                    !same_coset(&l, a, b).unwrap(),
                    "n={n}: representatives share a coset"
                );
            }
        }

        // coset sizes, cross-checked against the membership test a b⁻¹ ∈ L
        let bound = 2 * n;
        let universe = enumerate_elements(&g, bound);
        let mut sizes = Vec::new();
        for t in &reps {
            let coset = coset_elements_bounded(&g, &l, t, bound).map_err(|e| e.to_string())?;
            let by_oracle = universe
                .iter()
                .filter(|s| !s.is_zero() && l.contains(&s.range_idempotent()))
                .filter(|s| same_coset(&l, s, t).unwrap())
                .count();
            ensure!(
                coset.len() == by_oracle,
                "n={n}: coset of {t:?} has {} vs {by_oracle}",
                coset.len()
            );
            sizes.push(coset.len());
        }
        sizes.sort_unstable();
        ensure!(
            sizes == (1..=n + 1).collect::<Vec<_>>(),
            "n={n}: coset sizes {sizes:?}"
        );
        ensure!(
            sizes.iter().sum::<usize>() == (n + 1) * (n + 2) / 2,
            "n={n}: coset sizes sum"
        );
    }
    Ok(())
}

const LOOPX_REPRESENTATIVES: [&str; 12] = [
    "(@z|@z)",
    "(f|@y)",
    "(f|k)",
    "(e.f|@x)",
    "(e.f|g)",
    "(e.f|g.h)",
    "(e.f|a)",
    "(e.f|a.g)",
    "(e.f|a.g.h)",
    "(e.f|a.e)",
    "(e.f|a.e.k)",
    "(e.f|a.e.f)",
];

fn loopx_example() -> Check {
    let g = fixtures::loopx();
    let l = sub(&g, "cycle a.a e.f");
    let idx = index(&g, &l).map_err(|e| e.to_string())?;
    ensure!(idx == Count::Finite(12), "index {idx}");

    let ours = coset_representatives(&g, &l).map_err(|e| e.to_string())?;
    let listed: Vec<Element> = LOOPX_REPRESENTATIVES.iter().map(|s| el(&g, s)).collect();
    ensure!(ours.len() == 12, "{} representatives", ours.len());
    // a bijection under same_coset: every listed element matches exactly one of ours
    for x in &listed {
        let hits = ours
            .iter()
            .filter(|y| same_coset(&l, x, y).unwrap())
            .count();
        ensure!(
            hits == 1,
            "{} matches {hits} emitted representatives",
            x.display(&g)
        );
    }
    for y in &ours {
        let hits = listed
            .iter()
            .filter(|x| same_coset(&l, x, y).unwrap())
            .count();
        ensure!(
            hits == 1,
            "{} matches {hits} listed representatives",
            y.display(&g)
        );
    }
    Ok(())
}

fn loop1_index() -> Check {
    let g = fixtures::loop1();
    for m in 1..=6usize {
        let p = vec!["a"; m].join(".");
        let idx = index(&g, &sub(&g, &format!("cycle {p} @x"))).map_err(|e| e.to_string())?;
        ensure!(idx == Count::Finite(m as u128), "m={m}: {idx}");
    }
    for k in 0..=4usize {
        let w = if k == 0 {
            "@x".to_string()
        } else {
            vec!["a"; k].join(".")
        };
        let idx = index(&g, &sub(&g, &format!("chain {w}"))).map_err(|e| e.to_string())?;
        ensure!(idx == Count::Infinite, "chain a^{k}: {idx}");
    }
    let idx = index(&g, &sub(&g, "infchain a @x")).map_err(|e| e.to_string())?;
    ensure!(idx == Count::Infinite, "infinite chain: {idx}");
    Ok(())
}

/// The escape conditions checked directly on the witness' edge lists.
fn escape_conditions_hold(
    anchor: &Path,
    a: gis_core::EdgeId,
    circuit: &Path,
    g: &Path,
    v0: gis_core::VertexId,
) -> Check {
    ensure!(
        !circuit.is_empty() && circuit.source() == circuit.target(),
        "not a circuit"
    );
    ensure!(
        circuit.edges().iter().any(|&e| e != a),
        "circuit uses only the loop"
    );
    ensure!(anchor.vertices().contains(&v0), "v0 is not on the anchor");
    ensure!(g.source() == v0, "connector does not start at v0");
    ensure!(
        circuit.vertices().contains(&g.target()),
        "connector misses the circuit"
    );
    for e in g.edges() {
        ensure!(
            !circuit.edges().contains(e),
            "connector shares an edge with the circuit"
        );
        ensure!(
            !anchor.edges().contains(e),
            "connector shares an edge with the anchor"
        );
    }
    Ok(())
}

fn infinite_index_criteria() -> Check {
    let p2 = fixtures::bouquet(2);
    let idx = index(&p2, &sub(&p2, "cycle a.b @o")).map_err(|e| e.to_string())?;
    ensure!(idx == Count::Infinite, "P2 ab-cycle: {idx}");

    let g = fixtures::loopx()
        .with_edge("fp", "z", "x")
        .map_err(|e| e.to_string())?;
    let l = sub(&g, "cycle a.a e.f");
    let IndexVerdict::Infinite(w) = index_verdict(&g, &l).map_err(|e| e.to_string())? else {
        return Err("augmented LOOPX reported a finite index".into());
    };
    let anchor = parse_path(&g, "e.f").unwrap();
    escape_conditions_hold(&anchor, g.edge("a").unwrap(), &w.circuit, &w.path, w.vertex)
}

/// The subsemigroups of criteria 2–5 with their formula verdicts.
fn verdict_catalogue() -> Vec<(String, Graph, ClosedInvSub)> {
    let mut out = Vec::new();
    for n in 1..=6 {
        let g = fixtures::chain(n);
        out.push((format!("chain{n}"), g.clone(), sub(&g, &chain_literal(n))));
    }
    let g = fixtures::loopx();
    out.push(("loopx".into(), g.clone(), sub(&g, "cycle a.a e.f")));
    let g = fixtures::loop1();
    for m in 1..=6 {
        out.push((
            "loop1".into(),
            g.clone(),
            sub(&g, &format!("cycle {} @x", vec!["a"; m].join("."))),
        ));
    }
    for w in ["@x", "a", "a.a", "a.a.a", "a.a.a.a"] {
        out.push(("loop1".into(), g.clone(), sub(&g, &format!("chain {w}"))));
    }
    out.push(("loop1".into(), g.clone(), sub(&g, "infchain a @x")));
    let g = fixtures::bouquet(2);
    out.push(("bouquet2".into(), g.clone(), sub(&g, "cycle a.b @o")));
    let g = fixtures::loopx_escape();
    out.push(("loopx-escape".into(), g.clone(), sub(&g, "cycle a.a e.f")));
    out
}

fn oracle_concordance() -> Check {
    const MAX: usize = 8;
    for (name, g, l) in verdict_catalogue() {
        let verdict = index(&g, &l).map_err(|e| e.to_string())?;
        let profile = index_profile(&BoundedUniverse::new(g.clone(), MAX), &l);
        let at = |b: usize| profile[b].1;
        match verdict {
            Count::Finite(n) => ensure!(
                at(MAX) as u128 == n && at(MAX - 1) == at(MAX),
                "{name} {l:?}: index {n}, profile {profile:?}"
            ),
            Count::Infinite => ensure!(
                at(MAX) > at(MAX / 2) && at(MAX) > at(MAX - 1),
                "{name} {l:?}: infinite index, profile {profile:?}"
            ),
        }
    }
    Ok(())
}

fn is_rotation(p: &Path, q: &Path) -> bool {
    p.len() == q.len() && (0..p.len().max(1)).any(|k| p.rotate_left(k) == *q)
}

/// Proper subsemigroups of a fixture: chains, cycles and infinite chains
/// over short paths.
fn proper_catalogue(g: &Graph) -> Vec<ClosedInvSub> {
    let mut paths = Vec::new();
    for v in g.vertices() {
        paths.extend(paths_from(g, v, 2));
    }
    let mut out = Vec::new();
    for w in &paths {
        out.push(ClosedInvSub::finite_chain(w.clone()).unwrap());
    }
    for p in paths.iter().filter(|p| !p.is_empty() && p.is_circuit()) {
        for d in paths
            .iter()
            .filter(|d| d.source() == p.target() && d.len() <= 1)
        {
            if d.first_edge().is_some() && d.first_edge() == p.first_edge() {
                continue;
            }
            out.push(ClosedInvSub::cycle(p.clone(), d.clone()).unwrap());
            out.push(ClosedInvSub::infinite_chain(p.clone(), d.clone()).unwrap());
        }
    }
    let mut seen = HashSet::new();
    out.retain(|l| seen.insert(format!("{l:?}")));
    out
}

fn conjugacy_suite() -> Check {
    for n in [2usize, 3] {
        let g = fixtures::bouquet(n);
        let cat = proper_catalogue(&g);
        for l in &cat {
            for k in &cat {
                let conj = are_conjugate(l, k).unwrap();
                let expected = match (l, k) {
                    (
                        ClosedInvSub::Cycle { circuit: p, .. },
                        ClosedInvSub::Cycle { circuit: q, .. },
                    ) => Some(is_rotation(p, q)),
                    (ClosedInvSub::FiniteChain(u), ClosedInvSub::FiniteChain(v)) => {
                        Some(u.source() == v.source())
                    }
                    _ if l.kind() != k.kind() => Some(false),
                    _ => None,
                };
                if let Some(e) = expected {
                    ensure!(conj == e, "P{n}: {l:?} ~ {k:?} is {conj}, expected {e}");
                }
                let c = conjugator(l, k).unwrap();
                ensure!(
                    c.is_some() == conj,
                    "P{n}: conjugator disagrees for {l:?}, {k:?}"
                );
                if let Some(c) = c {
                    ensure!(
                        conjugates_within(l, k, &c, 8),
                        "P{n}: conjugator {c:?} fails for {l:?}, {k:?}"
                    );
                }
            }
        }
    }

    // non-rotations admit no conjugating pair among short paths
    let g = fixtures::bouquet(2);
    let short: Vec<Path> = paths_from(&g, g.vertex("o").unwrap(), 3);
    let cycles: Vec<ClosedInvSub> = ["a", "b", "a.b", "b.a", "a.a"]
        .iter()
        .map(|p| sub(&g, &format!("cycle {p} @o")))
        .collect();
    for l in &cycles {
        for k in &cycles {
            if are_conjugate(l, k).unwrap() {
                continue;
            }
            for s in &short {
                for t in &short {
                    let c = Element::pair(s.clone(), t.clone()).unwrap();
                    ensure!(
                        !conjugates_within(l, k, &c, 6),
                        "{c:?} conjugates {l:?} to {k:?}"
                    );
                }
            }
        }
    }

    // conjugacy is an equivalence relation, and preserves idempotent-only
    // and minimum-idempotent status
    for g in [fixtures::loopx(), fixtures::bouquet(2), fixtures::loop1()] {
        let cat = proper_catalogue(&g);
        let rel: Vec<Vec<bool>> = cat
            .iter()
            .map(|l| cat.iter().map(|k| are_conjugate(l, k).unwrap()).collect())
            .collect();
        for i in 0..cat.len() {
            ensure!(rel[i][i], "not reflexive at {:?}", cat[i]);
            for j in 0..cat.len() {
                ensure!(rel[i][j] == rel[j][i], "not symmetric");
                if rel[i][j] {
                    let transitive = rel[j].iter().zip(&rel[i]).all(|(jk, ik)| !jk || *ik);
                    ensure!(transitive, "not transitive");
                    let idem_only = |l: &ClosedInvSub| {
                        l.bounded_elements(6)
                            .unwrap()
                            .iter()
                            .all(Element::is_idempotent)
                    };
                    let has_min = |l: &ClosedInvSub| l.min_idempotent().is_ok();
                    if idem_only(&cat[i]) {
                        ensure!(
                            idem_only(&cat[j]),
                            "{:?} ~ {:?} but only one is idempotent",
                            cat[i],
                            cat[j]
                        );
                    }
                    if has_min(&cat[i]) {
                        ensure!(
                            has_min(&cat[j]),
                            "{:?} ~ {:?} but only one has a minimum idempotent",
                            cat[i],
                            cat[j]
                        );
                    }
                }
            }
        }
    }
    Ok(())
}

fn all_fixtures() -> Vec<(&'static str, Graph)> {
    vec![
        ("loop1", fixtures::loop1()),
        ("loopx", fixtures::loopx()),
        ("loopx-escape", fixtures::loopx_escape()),
        ("chain3", fixtures::chain(3)),
        ("bouquet2", fixtures::bouquet(2)),
        ("bouquet3", fixtures::bouquet(3)),
    ]
}

/// Visits all index tuples when there are at most `limit`, otherwise a
/// deterministic sample of `limit` of them.
fn tuples<const K: usize>(n: usize, limit: usize, mut f: impl FnMut([usize; K]) -> Check) -> Check {
    let total = n.checked_pow(K as u32).unwrap_or(usize::MAX);
    if total <= limit {
        for mut code in 0..total {
            let mut idx = [0; K];
            for slot in &mut idx {
                *slot = code % n;
                code /= n;
            }
            f(idx)?;
        }
    } else {
        let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
        for _ in 0..limit {
            let mut idx = [0; K];
            for slot in &mut idx {
                // splitmix64
                state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
                let mut z = state;
                z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
                z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
                *slot = ((z ^ (z >> 31)) % n as u64) as usize;
            }
            f(idx)?;
        }
    }
    Ok(())
}

fn meet(u: &Path, v: &Path) -> Option<Path> {
    if u.is_suffix_of(v) {
        Some(v.clone())
    } else if v.is_suffix_of(u) {
        Some(u.clone())
    } else {
        None
    }
}

fn algebraic_properties() -> Check {
    for (name, g) in all_fixtures() {
        let small = enumerate_elements(&g, 3);
        tuples::<3>(small.len(), 400_000, |[i, j, k]| {
            let (a, b, c) = (&small[i], &small[j], &small[k]);
            ensure!(
                a.multiply(b).multiply(c) == a.multiply(&b.multiply(c)),
                "{name}: associativity"
            );
            Ok(())
        })?;

        let big = enumerate_elements(&g, 6);
        for a in &big {
            let inv = a.inverse();
            ensure!(a.multiply(&inv).multiply(a) == *a, "{name}: a a⁻¹ a = a");
            ensure!(
                inv.multiply(a).multiply(&inv) == inv,
                "{name}: a⁻¹ a a⁻¹ = a⁻¹"
            );
            ensure!(a.natural_leq(a), "{name}: reflexivity");
        }
        tuples::<2>(big.len(), 300_000, |[i, j]| {
            let (a, b) = (&big[i], &big[j]);
            let leq = a.natural_leq(b);
            ensure!(
                leq == (*a == a.multiply(&a.inverse()).multiply(b)),
                "{name}: a ≤ b iff a = (a a⁻¹) b"
            );
            if leq && b.natural_leq(a) {
                ensure!(a == b, "{name}: antisymmetry");
            }
            if leq && !a.is_zero() && a.is_idempotent() {
                ensure!(b.is_idempotent(), "{name}: E*-unitary");
            }
            if let (Element::Pair(u, u2), Element::Pair(v, v2)) = (a, b) {
                if u == u2 && v == v2 {
                    let expected = meet(u, v).map_or(Element::Zero, Element::idempotent);
                    ensure!(a.multiply(b) == expected, "{name}: idempotent meet");
                }
            }
            Ok(())
        })?;
        tuples::<3>(small.len(), 100_000, |[i, j, k]| {
            let (a, b, c) = (&small[i], &small[j], &small[k]);
            if a.natural_leq(b) && b.natural_leq(c) {
                ensure!(a.natural_leq(c), "{name}: transitivity");
            }
            Ok(())
        })?;

        // membership is up-closed, inverse-closed and product-closed
        for l in proper_catalogue(&g) {
            let slice = l.bounded_elements(4).unwrap();
            for x in &slice {
                ensure!(l.contains(&x.inverse()), "{name}: {l:?} not inverse closed");
                for y in x.up_set().unwrap() {
                    ensure!(l.contains(&y), "{name}: {l:?} not up closed");
                }
                for y in &slice {
                    let z = x.multiply(y);
                    ensure!(
                        !z.is_zero() && l.contains(&z),
                        "{name}: {l:?} not product closed"
                    );
                }
            }
        }
    }

    // cosets: ↑(C C⁻¹) is L, cosets are disjoint or equal, and
    // a, b share a coset iff a b⁻¹ ∈ L
    const B: usize = 5;
    let cases = [
        (fixtures::chain(3), "chain e3.e2.e1"),
        (fixtures::loopx(), "cycle a.a e.f"),
        (fixtures::loop1(), "cycle a.a.a @x"),
    ];
    for (g, lit) in cases {
        let l = sub(&g, lit);
        let universe = BoundedUniverse::new(g.clone(), B);
        let l_slice = set(l.elements_in(&g, B));
        let reps = coset_representatives(&g, &l).unwrap();
        let cosets: Vec<HashSet<Element>> = reps
            .iter()
            .map(|t| set(coset_elements_bounded(&g, &l, t, B).unwrap()))
            .collect();
        for coset in &cosets {
            let products: Vec<Element> = coset
                .iter()
                .flat_map(|x| coset.iter().map(move |y| x.multiply(&y.inverse())))
                .collect();
            let saturated = set(closure_saturate(&universe, &products).elements);
            let up: HashSet<Element> = products
                .iter()
                .flat_map(|p| p.up_set().unwrap())
                .filter(|x| universe.contains(x))
                .collect();
            ensure!(up.is_subset(&l_slice), "{lit}: ↑(C C⁻¹) leaves L");
            ensure!(
                saturated == l_slice,
                "{lit}: ↑(C C⁻¹) does not saturate to L"
            );
        }
        for (i, c) in cosets.iter().enumerate() {
            for d in &cosets[i + 1..] {
                ensure!(c.is_disjoint(d), "{lit}: distinct cosets overlap");
            }
        }
        let members: Vec<&Element> = cosets.iter().flatten().collect();
        for a in &members {
            for b in &members {
                let together = cosets.iter().any(|c| c.contains(*a) && c.contains(*b));
                ensure!(
                    same_coset(&l, a, b).unwrap() == together,
                    "{lit}: same_coset disagrees"
                );
            }
        }
    }
    Ok(())
}

/// (p, d, normal form of L(p, d))
type GenerationCase = (&'static str, &'static str, &'static str);

fn generation() -> Check {
    const MAX: usize = 8;
    let cases: Vec<(Graph, Vec<GenerationCase>)> = vec![
        (
            fixtures::loop1(),
            vec![
                ("a", "@x", "cycle a @x"),
                ("a.a", "@x", "cycle a.a @x"),
                ("a.a.a", "@x", "cycle a.a.a @x"),
            ],
        ),
        (
            fixtures::loopx(),
            vec![
                ("a", "@x", "cycle a @x"),
                ("a.a", "e.f", "cycle a.a e.f"),
                ("a", "e", "cycle a e"),
                ("a.a.a", "g.h", "cycle a.a.a g.h"),
            ],
        ),
        (
            fixtures::bouquet(2),
            vec![
                ("a.b", "@o", "cycle a.b @o"),
                ("b.a", "@o", "cycle b.a @o"),
                ("a.a.b", "b", "cycle a.a.b b"),
                ("a", "b.b", "cycle a b.b"),
                ("a.b.b", "a", "cycle b.b.a @o"),
                ("a.b", "a.b", "cycle a.b @o"),
            ],
        ),
    ];
    for (g, triples) in cases {
        let universe = BoundedUniverse::new(g.clone(), MAX);
        for (p, d, normal) in triples {
            let (pp, dd) = (parse_path(&g, p).unwrap(), parse_path(&g, d).unwrap());
            let gen = Element::pair(dd.clone(), pp.concat(&dd).unwrap()).unwrap();
            let l = generated(std::slice::from_ref(&gen)).map_err(|e| e.to_string())?;
            let expected = sub(&g, normal);
            let sat = closure_saturate(&universe, &[gen]);
            ensure!(!sat.contains_zero, "({d}, {p}.{d}) saturates to 0");
            let sat = set(sat.elements);
            ensure!(
                set(l.elements_in(&g, MAX)) == sat,
                "generated({d}, {p}.{d}) = {l:?} disagrees with saturation"
            );
            ensure!(
                l == expected,
                "generated({d}, {p}.{d}) = {l:?}, expected {normal}"
            );
            ensure!(
                set(expected.elements_in(&g, MAX)) == sat,
                "{normal} disagrees with saturation"
            );
        }
    }
    let g = fixtures::loop1();
    let gens = [el(&g, "(@x|a.a)"), el(&g, "(@x|a.a.a)")];
    let l = generated(&gens).map_err(|e| e.to_string())?;
    ensure!(l == sub(&g, "cycle a @x"), "gcd case gave {l:?}");
    let sat = set(closure_saturate(&BoundedUniverse::new(g.clone(), MAX), &gens).elements);
    ensure!(
        set(l.elements_in(&g, MAX)) == sat,
        "gcd case disagrees with saturation"
    );
    Ok(())
}

type Criterion = (u32, &'static str, Duration, fn() -> Check);

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        (
            1,
            "chain-graph cardinality",
            Duration::from_secs(1),
            chain_cardinality,
        ),
        (2, "chain-graph index", Duration::from_secs(1), chain_index),
        (
            3,
            "LOOPX index 12 and representatives",
            Duration::from_secs(1),
            loopx_example,
        ),
        (
            4,
            "bicyclic-with-zero index",
            Duration::from_secs(1),
            loop1_index,
        ),
        (
            5,
            "infinite-index criteria",
            Duration::from_secs(1),
            infinite_index_criteria,
        ),
        (
            6,
            "oracle concordance",
            Duration::from_secs(30),
            oracle_concordance,
        ),
        (
            7,
            "conjugacy suite",
            Duration::from_secs(10),
            conjugacy_suite,
        ),
        (
            8,
            "algebraic properties",
            Duration::from_secs(60),
            algebraic_properties,
        ),
        (9, "generation", Duration::from_secs(30), generation),
    ];
    let mut unexpected = Vec::new();
    for (id, name, budget, check) in criteria {
        let start = Instant::now();
        let mut outcome = check();
        let elapsed = start.elapsed();
        if outcome.is_ok() && elapsed > budget {
            outcome = Err(format!("took {elapsed:?}, budget {budget:?}"));
        }
        match &outcome {
            Ok(()) => println!("criterion {id} PASS  {name} ({elapsed:.2?})"),
            Err(why) => println!("criterion {id} FAIL  {name} ({elapsed:.2?}): {why}"),
        }
        if outcome.is_ok() == KNOWN_FAILING.contains(&id) {
            unexpected.push(id);
        }
    }
    assert!(
        unexpected.is_empty(),
        "criteria with unexpected outcome: {unexpected:?}"
    );
}

/// The closed form counts the non-zero elements; with the adjoined zero
/// the bounded enumeration has exactly one more.
#[test]
fn chain_count_excludes_zero() {
    for n in 1..=6usize {
        let all = enumerate_elements(&fixtures::chain(n), n);
        let nonzero = all.iter().filter(|x| !x.is_zero()).count();
        assert_eq!(nonzero, (n + 1) * (n + 2) * (2 * n + 3) / 6);
        assert_eq!(all.len(), nonzero + 1);
    }
}
