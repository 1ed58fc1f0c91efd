//! Humdrum **kern encoding tooling.
//!
//! This crate parses **kern documents into a line/spine structure, rewrites
//! symbols into a canonical component order, and converts documents into
//! token sequences under three schemes:
//!
//! - `kern`: one token per spine cell (`8e-J`)
//! - `ekern`: split by graphical meaning (`8e`, `-`, `J`)
//! - `bekern`: split into minimum semantic elements (`8`, `e`, `-`, `J`)
//!
//! Spine boundaries inside a line are marked with the `<t>` token and line
//! boundaries with `<b>`, so a whole document round-trips between its text
//! form and any token scheme. Vocabularies map tokens to dense ids with a
//! fixed reserved prefix (`<pad>`, `<sot>`, `<eot>`, `<t>`, `<b>`).

mod document;
mod error;
mod symbol;
mod tokenize;
mod vocab;

pub use document::{parse_kern, serialize, KernDocument, KernLine, LineKind};
pub use error::KernError;
pub use symbol::{normalize, normalize_symbol, ComponentKind, KernSymbol};
pub use tokenize::{convert, detokenize, split_cell, tokenize, EncodingScheme, TokenSequence};
pub use vocab::{
    build_vocabulary, decode_ids, encode_ids, Vocabulary, RESERVED_TOKENS, TOKEN_BREAK,
    TOKEN_EOT, TOKEN_PAD, TOKEN_SOT, TOKEN_TAB,
};
