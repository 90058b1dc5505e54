use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("inverse of the zero series")]
    ZeroInverse,
    #[error("exact non-monomial series has no finite inverse; truncate it first")]
    InfiniteExpansion,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("exponential does not terminate: {0}")]
    NonConvergent(String),
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("element is not in the ambient subalgebra")]
    NotInAmbient,
    #[error("linear system is inconsistent: {0}")]
    Inconsistent(String),
    #[error("matrix is not invertible over the Laurent series field")]
    NotInvertible,
    #[error("element is not in the parahoric subalgebra")]
    NotParahoric,
    #[error("the connection is zero")]
    ZeroConnection,
    #[error("scale {0} too small: some grading value has absolute value >= 1")]
    ScaleTooSmall(i64),
    #[error("order {0} is too low for this reduction (needs > 1)")]
    OrderTooLow(i64),
    #[error("semisimple part of the leading datum is zero")]
    ZeroSemisimplePart,
    #[error("semisimple list is not pairwise commuting, not semisimple, or not grade zero")]
    NonCommutingList,
    #[error("centralizer is not a Cartan subalgebra")]
    NotCartan,
    #[error("leading datum is not a nonzero nilpotent")]
    NotNilpotentLeading,
    #[error("weight is not integral")]
    NotIntegerWeight,
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("no progress: {0}")]
    NoProgress(String),
    #[error("connection is not logarithmic and parahoric for this weight")]
    NotLogarithmic,
    #[error("a field extension beyond the rationals is required: {0}")]
    FieldExtensionNeeded(String),
    #[error("bounded search exhausted: {0}")]
    SearchExhausted(String),
    #[error("window {0} exceeds the available truncation")]
    WindowTooLarge(i64),
    #[error("Levi splitting of the leading term failed: {0}")]
    LeviSplitFailed(String),
    #[error("invalid gauge word: {0}")]
    InvalidWord(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
