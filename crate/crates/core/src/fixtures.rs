//! Named example graphs.
//!
//! | name           | graph                                                        |
//! |----------------|--------------------------------------------------------------|
//! | `chain<n>`     | `v_n -e_n-> v_{n-1} -> ... -e_1-> v_0`                       |
//! | `loop1`        | vertex `x` with one loop `a`                                 |
//! | `loopx`        | loop `a` at `x`; `e: x->y`, `f: y->z`, `g: x->xp`, `h: xp->yp`, `k: y->yp` |
//! | `loopx-escape` | `loopx` plus `fp: z->x`                                      |
//! | `bouquet<n>`   | vertex `o` with loops `a`, `b`, ... (`n <= 26`)              |

use crate::error::{Error, Result};
use crate::graph::Graph;

fn triple(e: &str, s: &str, t: &str) -> (String, String, String) {
    (e.to_string(), s.to_string(), t.to_string())
}

pub fn chain(n: usize) -> Graph {
    assert!(n >= 1, "chain needs at least one edge");
    let vertices: Vec<String> = (0..=n).map(|i| format!("v{i}")).collect();
    let edges = (1..=n).map(|i| (format!("e{i}"), format!("v{i}"), format!("v{}", i - 1)));
    Graph::new(vertices, edges).expect("chain fixture is well formed")
}

pub fn loop1() -> Graph {
    Graph::new(["x"], [triple("a", "x", "x")]).expect("loop1 fixture is well formed")
}

pub fn loopx() -> Graph {
    Graph::new(
        ["x", "y", "z", "xp", "yp"],
        [
            triple("a", "x", "x"),
            triple("e", "x", "y"),
            triple("f", "y", "z"),
            triple("g", "x", "xp"),
            triple("h", "xp", "yp"),
            triple("k", "y", "yp"),
        ],
    )
    .expect("loopx fixture is well formed")
}

pub fn loopx_escape() -> Graph {
    loopx()
        .with_edge("fp", "z", "x")
        .expect("loopx-escape fixture is well formed")
}

pub fn bouquet(n: usize) -> Graph {
    assert!((1..=26).contains(&n), "bouquet size must be in 1..=26");
    let edges = (0..n).map(|i| {
        let name = ((b'a' + i as u8) as char).to_string();
        (name, "o".to_string(), "o".to_string())
    });
    Graph::new(["o"], edges).expect("bouquet fixture is well formed")
}

/// Names accepted by [`by_name`], with the parametrised families shown once.
pub const NAMES: &[&str] = &["chain<n>", "loop1", "loopx", "loopx-escape", "bouquet<n>"];

pub fn by_name(name: &str) -> Result<Graph> {
    let unknown = || Error::Parse {
        line: 0,
        message: format!("unknown fixture `{name}`"),
    };
    let param = |prefix: &str, max: usize| -> Option<usize> {
        let n: usize = name.strip_prefix(prefix)?.parse().ok()?;
        (1..=max).contains(&n).then_some(n)
    };
    match name {
        "loop1" => Ok(loop1()),
        "loopx" => Ok(loopx()),
        "loopx-escape" => Ok(loopx_escape()),
        _ => {
            if let Some(n) = param("chain", 64) {
                Ok(chain(n))
            } else if let Some(n) = param("bouquet", 26) {
                Ok(bouquet(n))
            } else {
                Err(unknown())
            }
        }
    }
}
