//! Exact tiling counts for dungeon regions of the triangular lattice with
//! altitudes, and instance-level checkers for the identities that govern them.

pub mod contour;
pub mod count;
pub mod error;
pub mod forms;
pub mod graph;
pub mod harness;
pub mod iso;
pub mod lattice;
pub mod matching;
pub mod random;
pub mod reduce;
pub mod render;
pub mod region;
pub mod split;
pub mod verify;

pub use count::{count, CountConfig, Method};
pub use contour::{derive_contour, ContourParams, Triple};
pub use error::{Error, Result};
pub use graph::PlanarGraph;
pub use region::{build_aztec, build_d, build_e, build_hd, Region, RegionKind};
