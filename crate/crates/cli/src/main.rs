use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gis_core::literal::{
    format_element, format_path, format_subsemigroup, parse_element, parse_subsemigroup,
};
use gis_core::oracle::{self, BoundedUniverse, ProfileShape};
use gis_core::{fixtures, ClosedInvSub, Element, Error, Graph, IndexVerdict};
use serde_json::{json, Value};

/// Graph inverse semigroup calculator.
///
/// GRAPH is a graph file or a fixture name (chain<n>, loop1, loopx,
/// loopx-escape, bouquet<n>). Paths are written `e.f` or `@v`, elements
/// `(v|w)` or `0`, subsemigroups `chain w`, `cycle p d`, `infchain c q`,
/// `improper`.
#[derive(Parser, Debug)]
#[command(name = "gis", version)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Component length bound for the oracle verbs.
    #[arg(long, global = true, default_value_t = oracle::DEFAULT_MAX_LEN)]
    maxlen: usize,

    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Product of two elements.
    Multiply { graph: String, x: String, y: String },
    /// Inverse of an element.
    Inverse { graph: String, x: String },
    /// Natural partial order: is x ≤ y?
    Leq { graph: String, x: String, y: String },
    /// Membership of an element in a closed inverse subsemigroup.
    Member {
        graph: String,
        sub: String,
        x: String,
    },
    /// Closed inverse subsemigroup generated by the elements.
    Closure {
        graph: String,
        #[arg(required = true)]
        gens: Vec<String>,
    },
    /// Type of a closed inverse subsemigroup.
    Classify { graph: String, sub: String },
    /// Index in S(G), with a witness when infinite.
    Index { graph: String, sub: String },
    /// One representative per right coset.
    Cosets { graph: String, sub: String },
    /// Do two elements represent the same right coset?
    SameCoset {
        graph: String,
        sub: String,
        x: String,
        y: String,
    },
    /// Conjugacy of two proper closed inverse subsemigroups.
    Conjugate {
        graph: String,
        left: String,
        right: String,
    },
    /// Brute-force coset counts per length bound.
    OracleIndex { graph: String, sub: String },
    /// Brute-force closure of generators inside a bounded universe.
    OracleClosure {
        graph: String,
        #[arg(required = true)]
        gens: Vec<String>,
    },
    /// List fixture names, or print one fixture as a graph file.
    Fixtures { name: Option<String> },
}

impl Verb {
    fn name(&self) -> &'static str {
        match self {
            Verb::Multiply { .. } => "multiply",
            Verb::Inverse { .. } => "inverse",
            Verb::Leq { .. } => "leq",
            Verb::Member { .. } => "member",
            Verb::Closure { .. } => "closure",
            Verb::Classify { .. } => "classify",
            Verb::Index { .. } => "index",
            Verb::Cosets { .. } => "cosets",
            Verb::SameCoset { .. } => "same-coset",
            Verb::Conjugate { .. } => "conjugate",
            Verb::OracleIndex { .. } => "oracle-index",
            Verb::OracleClosure { .. } => "oracle-closure",
            Verb::Fixtures { .. } => "fixtures",
        }
    }
}

/// Exit 2 for anything that fails while reading input, 1 otherwise.
struct Failure {
    code: u8,
    error: Error,
}

fn reading(error: Error) -> Failure {
    let code = match error {
        Error::Parse { .. }
        | Error::UnknownEdge(_)
        | Error::UnknownVertex(_)
        | Error::NotIncident(..)
        | Error::DuplicateId(_)
        | Error::EmptyGraph => 2,
        _ => 1,
    };
    Failure { code, error }
}

fn domain(error: Error) -> Failure {
    Failure { code: 1, error }
}

struct Output {
    text: String,
    result: Value,
    witness: Option<Value>,
}

impl Output {
    fn new(text: impl Into<String>, result: Value) -> Self {
        Output {
            text: text.into(),
            result,
            witness: None,
        }
    }
}

fn load_graph(source: &str) -> Result<Graph, Failure> {
    let path = std::path::Path::new(source);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| {
            reading(Error::Parse {
                line: 0,
                message: format!("cannot read `{source}`: {e}"),
            })
        })?;
        text.parse().map_err(reading)
    } else {
        fixtures::by_name(source).map_err(|_| {
            reading(Error::Parse {
                line: 0,
                message: format!("`{source}` is neither a readable file nor a fixture name"),
            })
        })
    }
}

fn element(g: &Graph, text: &str) -> Result<Element, Failure> {
    parse_element(g, text).map_err(reading)
}

fn elements(g: &Graph, texts: &[String]) -> Result<Vec<Element>, Failure> {
    texts.iter().map(|t| element(g, t)).collect()
}

fn subsemigroup(g: &Graph, text: &str) -> Result<ClosedInvSub, Failure> {
    parse_subsemigroup(g, text).map_err(reading)
}

fn u128_json(n: u128) -> Value {
    u64::try_from(n).map_or_else(|_| json!(n.to_string()), |n| json!(n))
}

fn element_list(g: &Graph, xs: &[Element]) -> (String, Value) {
    let shown: Vec<String> = xs.iter().map(|x| format_element(g, x)).collect();
    (shown.join("\n"), json!(shown))
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let out = match &cli.verb {
        Verb::Multiply { graph, x, y } => {
            let g = load_graph(graph)?;
            let z = element(&g, x)?.multiply(&element(&g, y)?);
            let s = format_element(&g, &z);
            Output::new(s.clone(), json!(s))
        }
        Verb::Inverse { graph, x } => {
            let g = load_graph(graph)?;
            let s = format_element(&g, &element(&g, x)?.inverse());
            Output::new(s.clone(), json!(s))
        }
        Verb::Leq { graph, x, y } => {
            let g = load_graph(graph)?;
            let b = element(&g, x)?.natural_leq(&element(&g, y)?);
            Output::new(b.to_string(), json!(b))
        }
        Verb::Member { graph, sub, x } => {
            let g = load_graph(graph)?;
            let l = subsemigroup(&g, sub)?;
            let b = l.contains(&element(&g, x)?);
            Output::new(b.to_string(), json!(b))
        }
        Verb::Closure { graph, gens } => {
            let g = load_graph(graph)?;
            let l = gis_core::generated(&elements(&g, gens)?).map_err(domain)?;
            let s = format_subsemigroup(&g, &l);
            Output::new(
                s.clone(),
                json!({ "kind": l.kind().as_str(), "literal": s }),
            )
        }
        Verb::Classify { graph, sub } => {
            let g = load_graph(graph)?;
            let k = subsemigroup(&g, sub)?.kind().as_str();
            Output::new(k, json!(k))
        }
        Verb::Index { graph, sub } => {
            let g = load_graph(graph)?;
            let l = subsemigroup(&g, sub)?;
            match gis_core::index_verdict(&g, &l).map_err(domain)? {
                IndexVerdict::Finite(n) => {
                    Output::new(format!("finite {n}"), json!({ "finite": u128_json(n) }))
                }
                IndexVerdict::Infinite(w) => {
                    let witness = json!({
                        "kind": w.kind.as_str(),
                        "circuit": format_path(&g, &w.circuit),
                        "path": format_path(&g, &w.path),
                        "vertex": g.vertex_name(w.vertex),
                    });
                    let text = format!(
                        "infinite\nwitness {} circuit {} path {} vertex {}",
                        w.kind.as_str(),
                        format_path(&g, &w.circuit),
                        format_path(&g, &w.path),
                        g.vertex_name(w.vertex)
                    );
                    Output::new(text, json!({ "infinite": true, "witness": witness }))
                }
            }
        }
        Verb::Cosets { graph, sub } => {
            let g = load_graph(graph)?;
            let l = subsemigroup(&g, sub)?;
            let reps = gis_core::coset_representatives(&g, &l).map_err(domain)?;
            let (text, value) = element_list(&g, &reps);
            Output::new(text, value)
        }
        Verb::SameCoset { graph, sub, x, y } => {
            let g = load_graph(graph)?;
            let l = subsemigroup(&g, sub)?;
            let b = gis_core::same_coset(&l, &element(&g, x)?, &element(&g, y)?).map_err(domain)?;
            Output::new(b.to_string(), json!(b))
        }
        Verb::Conjugate { graph, left, right } => {
            let g = load_graph(graph)?;
            let (l, k) = (subsemigroup(&g, left)?, subsemigroup(&g, right)?);
            let conjugate = gis_core::are_conjugate(&l, &k).map_err(domain)?;
            let c = gis_core::conjugator(&l, &k).map_err(domain)?;
            let mut out = Output::new(conjugate.to_string(), json!(conjugate));
            if let Some(c) = c {
                let s = format_element(&g, &c);
                out.text.push_str(&format!("\nconjugator {s}"));
                out.witness = Some(json!(s));
            }
            out
        }
        Verb::OracleIndex { graph, sub } => {
            let g = load_graph(graph)?;
            let l = subsemigroup(&g, sub)?;
            let profile = oracle::index_profile(&BoundedUniverse::new(g, cli.maxlen), &l);
            let shape = match oracle::profile_shape(&profile) {
                ProfileShape::Stable(n) => format!("stable {n}"),
                ProfileShape::Growing => "growing".to_string(),
                ProfileShape::Undecided => "undecided".to_string(),
            };
            let mut text: Vec<String> = profile.iter().map(|(b, n)| format!("{b} {n}")).collect();
            text.push(shape.clone());
            Output::new(
                text.join("\n"),
                json!({ "profile": profile, "shape": shape }),
            )
        }
        Verb::OracleClosure { graph, gens } => {
            let g = load_graph(graph)?;
            let gens = elements(&g, gens)?;
            let u = BoundedUniverse::new(g.clone(), cli.maxlen);
            let sat = oracle::closure_saturate(&u, &gens);
            let (list, value) = element_list(&g, &sat.elements);
            let text = format!("contains-zero {}\n{list}", sat.contains_zero);
            Output::new(
                text.trim_end().to_string(),
                json!({ "contains_zero": sat.contains_zero, "elements": value }),
            )
        }
        Verb::Fixtures { name: None } => {
            Output::new(fixtures::NAMES.join("\n"), json!(fixtures::NAMES))
        }
        Verb::Fixtures { name: Some(name) } => {
            let text = fixtures::by_name(name).map_err(reading)?.to_text();
            Output::new(text.trim_end().to_string(), json!(text))
        }
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let verb = cli.verb.name();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                let mut doc = json!({ "verb": verb, "result": out.result });
                if let Some(w) = out.witness {
                    doc["witness"] = w;
                }
                println!("{doc}");
            } else {
                println!("{}", out.text);
            }
            ExitCode::SUCCESS
        }
        Err(Failure { code, error }) => {
            if cli.json {
                let doc = json!({
                    "verb": verb,
                    "error": { "category": error.category(), "message": error.to_string() },
                });
                println!("{doc}");
            }
            eprintln!("error[{}]: {error}", error.category());
            ExitCode::from(code)
        }
    }
}
