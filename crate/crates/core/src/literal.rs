//! Text literals for paths, elements and closed inverse subsemigroups.
//!
//! * path: `e.f` (edges in traversal order) or `@x` (empty path at `x`)
//! * element: `(v|w)` with path literals `v`, `w`, or `0`
//! * subsemigroup: `chain <path>`, `cycle <circuit> <path>`,
//!   `infchain <circuit> <path>`, `improper`
//!
//! Formatting is the inverse of parsing.

use crate::closed::ClosedInvSub;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::graph::{is_identifier, Graph};
use crate::path::Path;

fn malformed(what: &str, text: &str) -> Error {
    Error::Parse {
        line: 0,
        message: format!("malformed {what} literal `{text}`"),
    }
}

pub fn parse_path(graph: &Graph, text: &str) -> Result<Path> {
    let text = text.trim();
    if let Some(v) = text.strip_prefix('@') {
        if !is_identifier(v) {
            return Err(malformed("path", text));
        }
        return Ok(Path::empty(graph.vertex(v)?));
    }
    let names: Vec<&str> = text.split('.').collect();
    if names.iter().any(|n| !is_identifier(n)) {
        return Err(malformed("path", text));
    }
    Path::from_names(graph, &names)
}

pub fn parse_element(graph: &Graph, text: &str) -> Result<Element> {
    let text = text.trim();
    if text == "0" {
        return Ok(Element::Zero);
    }
    let inner = text
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| malformed("element", text))?;
    let (l, r) = inner
        .split_once('|')
        .ok_or_else(|| malformed("element", text))?;
    Element::pair(parse_path(graph, l)?, parse_path(graph, r)?)
}

pub fn parse_subsemigroup(graph: &Graph, text: &str) -> Result<ClosedInvSub> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    match tokens.as_slice() {
        ["improper"] => Ok(ClosedInvSub::Improper),
        ["chain", w] => ClosedInvSub::finite_chain(parse_path(graph, w)?),
        ["cycle", p, d] => ClosedInvSub::cycle(parse_path(graph, p)?, parse_path(graph, d)?),
        ["infchain", c, q] => {
            ClosedInvSub::infinite_chain(parse_path(graph, c)?, parse_path(graph, q)?)
        }
        _ => Err(malformed("subsemigroup", text.trim())),
    }
}

pub fn format_path(graph: &Graph, p: &Path) -> String {
    p.display(graph).to_string()
}

pub fn format_element(graph: &Graph, x: &Element) -> String {
    x.display(graph).to_string()
}

pub fn format_subsemigroup(graph: &Graph, l: &ClosedInvSub) -> String {
    match l {
        ClosedInvSub::Improper => "improper".to_string(),
        ClosedInvSub::FiniteChain(w) => format!("chain {}", format_path(graph, w)),
        ClosedInvSub::Cycle { circuit, path } => format!(
            "cycle {} {}",
            format_path(graph, circuit),
            format_path(graph, path)
        ),
        ClosedInvSub::InfiniteChain { circuit, path } => format!(
            "infchain {} {}",
            format_path(graph, circuit),
            format_path(graph, path)
        ),
    }
}
