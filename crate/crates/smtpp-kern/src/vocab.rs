use std::collections::HashMap;

use crate::error::KernError;
use crate::tokenize::{EncodingScheme, TokenSequence};

pub const TOKEN_PAD: &str = "<pad>";
pub const TOKEN_SOT: &str = "<sot>";
pub const TOKEN_EOT: &str = "<eot>";
pub const TOKEN_TAB: &str = "<t>";
pub const TOKEN_BREAK: &str = "<b>";

/// Reserved control tokens, in id order. Their ids form the fixed prefix
/// 0..5 of every vocabulary.
pub const RESERVED_TOKENS: [&str; 5] = [TOKEN_PAD, TOKEN_SOT, TOKEN_EOT, TOKEN_TAB, TOKEN_BREAK];

/// Bijective token ↔ id map with dense ids and the reserved prefix
/// `<pad>`=0, `<sot>`=1, `<eot>`=2, `<t>`=3, `<b>`=4.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vocabulary {
    tokens: Vec<String>,
    ids: HashMap<String, u32>,
    pub scheme: EncodingScheme,
}

impl Vocabulary {
    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        false // the reserved prefix is always present
    }

    pub fn id_of(&self, token: &str) -> Option<u32> {
        self.ids.get(token).copied()
    }

    pub fn token_of(&self, id: u32) -> Option<&str> {
        self.tokens.get(id as usize).map(String::as_str)
    }

    pub fn pad_id(&self) -> u32 {
        0
    }

    pub fn sot_id(&self) -> u32 {
        1
    }

    pub fn eot_id(&self) -> u32 {
        2
    }

    /// All tokens in id order.
    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    /// Rebuild a vocabulary from an id-ordered token list (checkpoint load).
    pub fn from_tokens(tokens: Vec<String>, scheme: EncodingScheme) -> Result<Self, KernError> {
        for (i, reserved) in RESERVED_TOKENS.iter().enumerate() {
            if tokens.get(i).map(String::as_str) != Some(*reserved) {
                return Err(KernError::UnknownToken(format!(
                    "vocabulary missing reserved prefix token {reserved}"
                )));
            }
        }
        let mut ids = HashMap::with_capacity(tokens.len());
        for (i, t) in tokens.iter().enumerate() {
            if ids.insert(t.clone(), i as u32).is_some() {
                return Err(KernError::UnknownToken(format!("duplicate token {t:?}")));
            }
        }
        Ok(Self {
            tokens,
            ids,
            scheme,
        })
    }
}

/// Build a vocabulary from a corpus of same-scheme sequences: the reserved
/// prefix followed by distinct corpus tokens, id-ordered by first occurrence.
pub fn build_vocabulary(corpus: &[TokenSequence]) -> Result<Vocabulary, KernError> {
    let scheme = corpus
        .first()
        .map(|s| s.scheme)
        .unwrap_or(EncodingScheme::Bekern);
    for seq in corpus {
        if seq.scheme != scheme {
            return Err(KernError::MixedSchemes(
                scheme.name().into(),
                seq.scheme.name().into(),
            ));
        }
    }

    let mut tokens: Vec<String> = RESERVED_TOKENS.iter().map(|s| s.to_string()).collect();
    let mut ids: HashMap<String, u32> = tokens
        .iter()
        .enumerate()
        .map(|(i, t)| (t.clone(), i as u32))
        .collect();
    for seq in corpus {
        for tok in &seq.tokens {
            if !ids.contains_key(tok) {
                ids.insert(tok.clone(), tokens.len() as u32);
                tokens.push(tok.clone());
            }
        }
    }
    Ok(Vocabulary {
        tokens,
        ids,
        scheme,
    })
}

/// Map tokens to ids. Every token must be known.
pub fn encode_ids(seq: &TokenSequence, vocab: &Vocabulary) -> Result<Vec<u32>, KernError> {
    seq.tokens
        .iter()
        .map(|t| {
            vocab
                .id_of(t)
                .ok_or_else(|| KernError::UnknownToken(t.clone()))
        })
        .collect()
}

/// Map ids back to tokens. Every id must be in range.
pub fn decode_ids(ids: &[u32], vocab: &Vocabulary) -> Result<TokenSequence, KernError> {
    let tokens = ids
        .iter()
        .map(|&id| {
            vocab
                .token_of(id)
                .map(str::to_owned)
                .ok_or(KernError::IdOutOfRange {
                    id,
                    size: vocab.len(),
                })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(TokenSequence::new(tokens, vocab.scheme))
}
