use thiserror::Error;

/// Errors raised by parsing, normalization, tokenization and vocabulary
/// operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernError {
    /// The document does not start with a `**kern` exclusive interpretation
    /// line.
    #[error("malformed header: {0}")]
    MalformedHeader(String),

    /// A line's cell count disagrees with the number of active spines.
    #[error("spine mismatch at line {line}: expected {expected} cells, found {found}")]
    SpineMismatch {
        line: usize,
        expected: usize,
        found: usize,
    },

    /// A character in a data cell is not matched by the component grammar.
    #[error("unknown component {character:?} in symbol {symbol:?} (line {line})")]
    UnknownComponent {
        symbol: String,
        character: char,
        line: usize,
    },

    /// Token fragments between markup tokens do not reassemble into a
    /// grammatical symbol.
    #[error("dangling fragment: cell {cell:?} does not reassemble into a valid symbol")]
    DanglingFragment { cell: String },

    /// `build_vocabulary` received sequences with different schemes.
    #[error("mixed schemes in corpus: {0} and {1}")]
    MixedSchemes(String, String),

    /// `encode_ids` met a token outside the vocabulary.
    #[error("unknown token {0:?}")]
    UnknownToken(String),

    /// `decode_ids` met an id outside `[0, |V|)`.
    #[error("id {id} out of range for vocabulary of size {size}")]
    IdOutOfRange { id: u32, size: usize },
}
