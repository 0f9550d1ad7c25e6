//! Crate-wide error type.

use thiserror::Error;

/// Errors reported by the palstar library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Alphabets need at least two letters.
    #[error("alphabet must have at least 2 letters (got {0})")]
    AlphabetTooSmall(u32),

    /// A word was built with a symbol index outside the alphabet.
    #[error("symbol {symbol} out of range for a {k}-letter alphabet")]
    SymbolOutOfRange { symbol: u32, k: u32 },

    /// A letter mapped to an index outside the declared alphabet.
    #[error("letter '{letter}' is outside the declared {k}-letter alphabet")]
    LetterOutOfRange { letter: char, k: u32 },

    /// Borderedness is not defined for the empty word.
    #[error("the empty word has no borderedness status")]
    EmptyWord,

    /// Exhaustive enumeration would exceed the configured budget.
    #[error("enumerating {words} words exceeds the budget of {budget}")]
    BudgetExceeded { words: u128, budget: u64 },

    /// The input is not a concatenation of even-length palindromes.
    #[error("not a palstar: stuck at position {position}")]
    NotAPalstar { position: usize },

    /// Geometric tail bound only converges for 0 < x < 1/k.
    #[error("tail bound diverges: x must satisfy 0 < x < 1/k")]
    DivergentTail,

    /// Taking a reciprocal of an enclosure that touches zero or below.
    #[error("enclosure endpoints must be strictly positive")]
    NonPositiveEnclosure,

    /// Series inversion needs a nonzero leading coefficient.
    #[error("series has a zero leading coefficient")]
    ZeroLeadingCoefficient,

    /// The 1/k expansion kept changing up to the configured ceiling.
    #[error("expansion coefficients did not stabilize for any n <= {max_n}")]
    NoStabilization { max_n: usize },

    /// Catch-all for malformed arguments.
    #[error("{0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
