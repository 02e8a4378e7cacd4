//! Graph inverse semigroups `S(G)` of finite directed multigraphs: element
//! arithmetic, closed inverse subsemigroups, conjugacy and coset indices,
//! with a brute-force oracle for cross-checking.

pub mod closed;
pub mod conjugacy;
pub mod coset;
pub mod counting;
pub mod element;
pub mod error;
pub mod escape;
pub mod fixtures;
pub mod graph;
pub mod literal;
pub mod oracle;
pub mod path;

pub use closed::{generated, ClosedInvSub, Kind};
pub use conjugacy::{are_conjugate, conjugator};
pub use coset::{
    coset_elements_bounded, coset_of, coset_representatives, index, index_verdict, same_coset,
    Coset, IndexVerdict, InfiniteWitness, WitnessKind,
};
pub use counting::Count;
pub use element::{enumerate_elements, Element};
pub use error::{Error, Result};
pub use graph::{EdgeId, Graph, VertexId};
pub use path::Path;
