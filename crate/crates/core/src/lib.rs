//! Exact reduction theory for formal connections on the punctured disc.
//!
//! Scalars are exact rationals, series carry their own truncation, and every
//! reduction engine returns a gauge word that replays to its output.

pub mod error;
pub mod lie;
pub mod parahoric;
pub mod reduction;
pub mod series;

pub use error::{Error, Result};
