//! Exact enumeration of rectangular-tile tilings of floors and rooms.
//!
//! A tiling is built front to back: each step covers the first uncovered
//! cell with one tile, the boundary of the covered region is tracked as a
//! height profile, and the profiles reachable from the flat start form a
//! finite digraph. Complete tilings correspond one-to-one with closed walks
//! at the flat profile, so counting tilings reduces to powering the graph's
//! transfer matrix with big-integer arithmetic. The rational generating
//! function of any such count can then be reconstructed exactly from enough
//! series terms.
//!
//! Modules:
//! - [`shapes`]: prototiles/bricks and their axis orientations.
//! - [`frontier`]: height profiles and the canonical placement rule.
//! - [`graph`]: reachable-state digraphs, pruning, transfer matrices.
//! - [`series`]: big-integer walk counting and irreducible decompositions.
//! - [`ratfun`]: exact polynomial arithmetic and recurrence detection.
//! - [`oracle`]: independent brute-force counts for cross-validation.
//! - [`catalog`]: reference fixtures and the regression runner.

pub mod catalog;
pub mod error;
pub mod frontier;
pub mod graph;
pub mod oracle;
pub mod ratfun;
pub mod series;
pub mod shapes;

pub use error::{Error, Result};
pub use frontier::{CellIndex, Frontier};
pub use graph::{StateGraph, TransferMatrix, DEFAULT_NODE_CAP};
pub use ratfun::{Poly, RatFun};
pub use series::Series;
pub use shapes::{area_divisible, Orientation, Region, Shape};
