//! Exact set calculus for distinct-distance problems on Cartesian products.
//!
//! The crate computes difference, squared-distance, product, ratio and slope
//! sets in exact rational arithmetic, audits the inequalities relating them,
//! and searches integer sets `A` whose grid `A × A` spans few distances.

mod collect;
pub mod error;
pub mod geometry;
pub mod numset;
pub mod scalar;
pub mod search;
pub mod setcalc;
pub mod verify;

pub use error::{Error, Result};
pub use numset::NumSet;
pub use scalar::Scalar;
pub use setcalc::Limits;
