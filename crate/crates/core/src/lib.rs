//! Independence complexes of graphs, with exact integral homology as the
//! ground truth for a collection of combinatorial splitting rules.
//!
//! The crate has three layers:
//!
//! * exact data: [`graph::Graph`] (bitset adjacency) and
//!   [`complex::Complex`] (explicit face lists), with reduced integral
//!   homology computed by Smith normal form in [`homology`];
//! * symbolic data: wedge-of-spheres expressions in [`homotopy`] produced
//!   by the recursions in [`recursion`] for independence complexes of
//!   powers of paths and cycles;
//! * rules: certificate-checked graph reductions in [`rewrite`] and
//!   [`script`], the staged cycle-power construction in [`cnr`], and the
//!   verification suites in [`suites`] that test every symbolic claim
//!   against the homology oracle.
//!
//! ```
//! use indtopo::{graph, homology, recursion, Budgets};
//!
//! let budgets = Budgets::default();
//! // exact reduced homology of the independence complex of a 12-cycle
//! let oracle = homology::ind_homology(&graph::cycle(12), &budgets)?;
//! // the same answer out of the splitting recursion
//! let predicted = recursion::Predictor::new()
//!     .cycle_power(12, 1, &budgets)?
//!     .to_signature()?;
//! assert_eq!(oracle, predicted);
//! assert_eq!(oracle.render(), "{3:2}");
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod bitset;
pub mod cnr;
pub mod complex;
pub mod config;
pub mod graph;
pub mod homology;
pub mod homotopy;
pub mod recursion;
pub mod rewrite;
pub mod script;
pub mod suites;

pub use config::Budgets;
pub use graph::Graph;
pub use homology::HomologySignature;
pub use homotopy::HomotopyExpr;
