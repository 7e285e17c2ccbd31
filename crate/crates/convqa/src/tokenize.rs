//! Whitespace/punctuation tokenizer with byte offsets, plus the hashed
//! vocabulary used by the in-tree backbone.
//!
//! Tokens are maximal runs of alphanumeric characters; every other
//! non-whitespace character becomes a single-character token. Offsets are
//! byte offsets into the source string, so an answer span can always be
//! reconstructed by slicing.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TokenSpan {
    pub text: String,
    /// Byte offset of the first byte of the token.
    pub start: usize,
    /// Byte offset one past the last byte of the token.
    pub end: usize,
}

pub fn tokenize(text: &str) -> Vec<TokenSpan> {
    let mut tokens = Vec::new();
    let mut run_start: Option<usize> = None;
    for (idx, ch) in text.char_indices() {
        if ch.is_alphanumeric() {
            if run_start.is_none() {
                run_start = Some(idx);
            }
        } else {
            if let Some(start) = run_start.take() {
                tokens.push(TokenSpan {
                    text: text[start..idx].to_string(),
                    start,
                    end: idx,
                });
            }
            if !ch.is_whitespace() {
                let end = idx + ch.len_utf8();
                tokens.push(TokenSpan {
                    text: text[idx..end].to_string(),
                    start: idx,
                    end,
                });
            }
        }
    }
    if let Some(start) = run_start {
        tokens.push(TokenSpan {
            text: text[start..].to_string(),
            start,
            end: text.len(),
        });
    }
    tokens
}

/// Convert a code-point offset (the convention of the source datasets) into
/// a byte offset. Returns `None` if the offset is past the end of the text.
pub fn char_to_byte_offset(text: &str, char_offset: usize) -> Option<usize> {
    if char_offset == 0 {
        return Some(0);
    }
    let mut count = 0;
    for (idx, _) in text.char_indices() {
        if count == char_offset {
            return Some(idx);
        }
        count += 1;
    }
    if count == char_offset {
        Some(text.len())
    } else {
        None
    }
}

/// FNV-1a 64-bit hash; fixed constants so token ids are stable across
/// processes and platforms, unlike the std hasher.
pub fn fnv1a(bytes: &[u8]) -> u64 {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        hash ^= u64::from(b);
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

/// Hashing vocabulary: token text (lowercased) → id in `[0, size)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HashVocab {
    pub size: u32,
}

impl HashVocab {
    pub fn new(size: u32) -> Self {
        assert!(size > 0, "vocab size must be positive");
        HashVocab { size }
    }

    pub fn id(&self, token_text: &str) -> u32 {
        let lowered = token_text.to_lowercase();
        (fnv1a(lowered.as_bytes()) % u64::from(self.size)) as u32
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splits_words_and_punctuation() {
        let toks = tokenize("Warsaw, Poland.");
        let texts: Vec<&str> = toks.iter().map(|t| t.text.as_str()).collect();
        assert_eq!(texts, vec!["Warsaw", ",", "Poland", "."]);
        // offsets slice back to the token text
        for t in &toks {
            assert_eq!(&"Warsaw, Poland."[t.start..t.end], t.text);
        }
    }

    #[test]
    fn empty_and_whitespace_only() {
        assert!(tokenize("").is_empty());
        assert!(tokenize("  \t\n").is_empty());
    }

    #[test]
    fn char_offset_conversion_handles_multibyte() {
        let s = "café au lait";
        // code point 4 is the space after "café", byte offset 5
        assert_eq!(char_to_byte_offset(s, 4), Some(5));
        assert_eq!(char_to_byte_offset(s, 0), Some(0));
        assert_eq!(char_to_byte_offset(s, s.chars().count()), Some(s.len()));
        assert_eq!(char_to_byte_offset(s, 100), None);
    }

    #[test]
    fn vocab_ids_are_stable_and_case_insensitive() {
        let vocab = HashVocab::new(512);
        assert_eq!(vocab.id("She"), vocab.id("she"));
        assert!(vocab.id("anything") < 512);
        // frozen value: FNV-1a is fixed, so this must never change
        assert_eq!(fnv1a(b"cannotanswer") % 512, u64::from(vocab.id("CANNOTANSWER")));
    }
}
