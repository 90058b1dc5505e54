//! Exact scalars and truncated Laurent series.

mod laurent;
mod rat;

pub use laurent::{tadd, tmul, LaurentSeries, EXACT};
pub use rat::*;

/// Degree of the cover `z = ζ^b` a value lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RamifiedContext {
    pub b: i64,
}

impl RamifiedContext {
    pub fn new(b: i64) -> Self {
        assert!(b >= 1, "cover degree must be positive");
        RamifiedContext { b }
    }

    pub fn base() -> Self {
        RamifiedContext { b: 1 }
    }

    pub fn compose(self, k: i64) -> Self {
        RamifiedContext::new(tmul(self.b, k))
    }
}

impl Default for RamifiedContext {
    fn default() -> Self {
        Self::base()
    }
}
