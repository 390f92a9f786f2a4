//! Finite group construction, non-commuting graphs, matroid recognition,
//! and clique-number computation with independent cross-checks.

pub mod analysis;
pub mod bitset;
pub mod cayley;
pub mod error;
pub mod families;
pub mod graph;
pub mod group;
pub mod matroid;
pub mod perm;
pub mod report;
pub mod sweep;
pub mod verify;

pub use analysis::{build_ncg, ChiPredicate, NcgContext};
pub use error::{Error, Result};
pub use families::{build, parse_spec, BuiltGroup, GroupSpec};
pub use graph::SimpleGraph;
pub use group::{FiniteGroup, LazyPermGroup, PermKind};
pub use matroid::SimplicialComplex;
pub use perm::Perm;
pub use report::{analyze, AnalysisReport, AnalyzeOptions, Computed};
pub use verify::{all_passed, run_verification, ClaimResult, ClaimStatus, VerifyConfig};
