//! Dialogue corpora: domain types, loaders for the three on-disk formats,
//! dev splitting, history windows, and question-pair construction.

mod canard;
mod canonical;
mod coqa;
mod pairs;
mod quac;
mod split;

pub use canard::load_canard;
pub use canonical::{load_canonical, write_canonical};
pub use coqa::load_coqa_like;
pub use pairs::{build_pairs, PairingError, PairingOutcome};
pub use quac::load_quac_like;
pub use split::split_dev;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tokenize::{tokenize, TokenSpan};

/// The unanswerable marker used by QuAC-style corpora, both as answer text
/// and as the token sequence appended to every document.
pub const SENTINEL: &str = "CANNOTANSWER";

/// Sentinel value used in place of char offsets for unanswerable turns.
pub const NO_SPAN: i64 = -1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Document {
    pub id: String,
    /// Full evidence text, with the sentinel appended exactly once.
    pub text: String,
    pub tokens: Vec<TokenSpan>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub title: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub domain: Option<String>,
}

impl Document {
    /// Build a document from raw text, appending the sentinel if the text
    /// does not already end with it.
    pub fn new(id: impl Into<String>, text: &str) -> Result<Document> {
        let mut full = text.trim_end().to_string();
        if full.is_empty() {
            return Err(Error::Validation(format!(
                "document {:?} has empty text",
                id.into()
            )));
        }
        if !full.ends_with(SENTINEL) {
            full.push(' ');
            full.push_str(SENTINEL);
        }
        let tokens = tokenize(&full);
        Ok(Document {
            id: id.into(),
            text: full,
            tokens,
            title: None,
            domain: None,
        })
    }

    /// Document-token indices of the trailing sentinel sequence.
    pub fn sentinel_token_range(&self) -> std::ops::Range<usize> {
        // the sentinel is a single alphanumeric run, hence a single token
        debug_assert!(self
            .tokens
            .last()
            .is_some_and(|t| t.text == SENTINEL));
        self.tokens.len() - 1..self.tokens.len()
    }

    /// Byte range of the sentinel in `text`.
    pub fn sentinel_char_range(&self) -> std::ops::Range<usize> {
        let t = &self.tokens[self.tokens.len() - 1];
        t.start..t.end
    }

    /// Smallest token range covering the byte span `[start, end)`.
    /// Returns `None` when no token overlaps the span.
    pub fn char_span_to_token_range(&self, start: usize, end: usize) -> Option<(usize, usize)> {
        let mut first = None;
        let mut last = None;
        for (i, t) in self.tokens.iter().enumerate() {
            if t.end > start && t.start < end {
                if first.is_none() {
                    first = Some(i);
                }
                last = Some(i);
            }
        }
        Some((first?, last?))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Turn {
    /// 1-based position within the dialogue.
    pub turn_index: u32,
    pub question: String,
    pub answer_text: String,
    /// Byte offset into the document text, or -1 for unanswerable.
    pub answer_char_start: i64,
    pub answer_char_end: i64,
    /// Question id from the source corpus, when it has one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source_id: Option<String>,
    /// Additional reference answers beyond `answer_text` (used for F1 and
    /// for the human-performance side of HEQ).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub references: Vec<String>,
}

impl Turn {
    pub fn is_unanswerable(&self) -> bool {
        self.answer_char_start == NO_SPAN
    }

    /// Stable per-question id: the corpus id when present, otherwise
    /// `{dialogue_id}#q{turn_index}`.
    pub fn question_id(&self, dialogue_id: &str) -> String {
        match &self.source_id {
            Some(id) => id.clone(),
            None => format!("{dialogue_id}#q{}", self.turn_index),
        }
    }

    /// All gold answer strings, primary first.
    pub fn all_references(&self) -> Vec<&str> {
        let mut refs = vec![self.answer_text.as_str()];
        refs.extend(self.references.iter().map(|s| s.as_str()));
        refs
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Dialogue {
    pub id: String,
    pub document: Document,
    pub turns: Vec<Turn>,
}

impl Dialogue {
    /// Check the documented invariants: contiguous 1-based turn indices,
    /// at least one turn, and every non-sentinel span reconstructing its
    /// answer text from the document.
    pub fn validate(&self) -> Result<()> {
        if self.turns.is_empty() {
            return Err(Error::Validation(format!(
                "dialogue {} has no turns",
                self.id
            )));
        }
        for (i, turn) in self.turns.iter().enumerate() {
            if turn.turn_index as usize != i + 1 {
                return Err(Error::Validation(format!(
                    "dialogue {}: turn indices not contiguous at position {}",
                    self.id,
                    i + 1
                )));
            }
            if turn.is_unanswerable() {
                if turn.answer_char_end != NO_SPAN {
                    return Err(Error::Validation(format!(
                        "dialogue {} turn {}: mixed sentinel offsets",
                        self.id, turn.turn_index
                    )));
                }
                continue;
            }
            let (s, e) = (turn.answer_char_start as usize, turn.answer_char_end as usize);
            if s > e || e > self.document.text.len() {
                return Err(Error::Validation(format!(
                    "dialogue {} turn {}: span {}..{} out of bounds",
                    self.id, turn.turn_index, s, e
                )));
            }
            if &self.document.text[s..e] != turn.answer_text {
                return Err(Error::Validation(format!(
                    "dialogue {} turn {}: span text {:?} does not match offsets {}..{}",
                    self.id,
                    turn.turn_index,
                    turn.answer_text,
                    s,
                    e
                )));
            }
        }
        Ok(())
    }

    /// Gold span of a turn in document-token coordinates (inclusive);
    /// unanswerable turns map to the sentinel tokens.
    pub fn gold_token_span(&self, turn: &Turn) -> Result<(usize, usize)> {
        if turn.is_unanswerable() {
            let r = self.document.sentinel_token_range();
            return Ok((r.start, r.end - 1));
        }
        self.document
            .char_span_to_token_range(turn.answer_char_start as usize, turn.answer_char_end as usize)
            .ok_or_else(|| {
                Error::Validation(format!(
                    "dialogue {} turn {}: answer span covers no tokens",
                    self.id, turn.turn_index
                ))
            })
    }
}

/// The (question, answer) pairs preceding some turn, oldest first.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConversationHistory {
    pub entries: Vec<(String, String)>,
}

impl ConversationHistory {
    pub fn empty() -> Self {
        ConversationHistory { entries: Vec::new() }
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }
}

/// Last `min(k, t-1)` turns before turn `t`, in order.
pub fn history_window(dialogue: &Dialogue, t: u32, k: usize) -> Result<ConversationHistory> {
    let turn_count = dialogue.turns.len() as u32;
    if t < 1 || t > turn_count {
        return Err(Error::Argument(format!(
            "turn index {t} out of range 1..={turn_count} for dialogue {}",
            dialogue.id
        )));
    }
    let prior = (t - 1) as usize;
    let take = prior.min(k);
    let entries = dialogue.turns[prior - take..prior]
        .iter()
        .map(|turn| (turn.question.clone(), turn.answer_text.clone()))
        .collect();
    Ok(ConversationHistory { entries })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Human,
    Synthetic,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuestionPair {
    pub dialogue_id: String,
    pub turn_index: u32,
    pub original: String,
    pub self_contained: String,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RewriteRecord {
    pub dialogue_id: String,
    pub turn_index: u32,
    pub history_texts: Vec<String>,
    pub original: String,
    pub rewrite: String,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixture_dialogue() -> Dialogue {
        let document = Document::new("doc-1", "Ada Lovelace wrote the first program.").unwrap();
        let turns = (1..=5)
            .map(|t| Turn {
                turn_index: t,
                question: format!("q{t}"),
                answer_text: "Ada".to_string(),
                answer_char_start: 0,
                answer_char_end: 3,
                source_id: None,
                references: Vec::new(),
            })
            .collect();
        Dialogue {
            id: "d1".to_string(),
            document,
            turns,
        }
    }

    #[test]
    fn document_appends_sentinel_once() {
        let d = Document::new("x", "Some text.").unwrap();
        assert!(d.text.ends_with(SENTINEL));
        let again = Document::new("x", &d.text).unwrap();
        assert_eq!(again.text.matches(SENTINEL).count(), 1);
        assert_eq!(d.tokens[d.sentinel_token_range().start].text, SENTINEL);
    }

    #[test]
    fn history_window_first_turn_is_empty() {
        let d = fixture_dialogue();
        assert!(history_window(&d, 1, 5).unwrap().is_empty());
    }

    #[test]
    fn history_window_k1_is_previous_turn() {
        let d = fixture_dialogue();
        let h = history_window(&d, 4, 1).unwrap();
        assert_eq!(h.entries, vec![("q3".to_string(), "Ada".to_string())]);
    }

    #[test]
    fn history_window_matches_direct_slice() {
        // slice oracle: t=5, k=3 → turns 2,3,4 in order
        let d = fixture_dialogue();
        let h = history_window(&d, 5, 3).unwrap();
        let oracle: Vec<(String, String)> = d.turns[1..4]
            .iter()
            .map(|t| (t.question.clone(), t.answer_text.clone()))
            .collect();
        assert_eq!(h.entries, oracle);
    }

    #[test]
    fn history_window_length_property() {
        let d = fixture_dialogue();
        for t in 1..=5u32 {
            for k in 0..8usize {
                let h = history_window(&d, t, k).unwrap();
                assert_eq!(h.len(), k.min((t - 1) as usize));
            }
        }
        assert!(history_window(&d, 0, 1).is_err());
        assert!(history_window(&d, 6, 1).is_err());
    }

    #[test]
    fn span_reconstruction_invariant() {
        let d = fixture_dialogue();
        d.validate().unwrap();
        let mut bad = d.clone();
        bad.turns[0].answer_char_end = 4; // "Ada " != "Ada"
        assert!(bad.validate().is_err());
    }

    #[test]
    fn gold_token_span_for_sentinel_turn() {
        let mut d = fixture_dialogue();
        d.turns[0].answer_char_start = NO_SPAN;
        d.turns[0].answer_char_end = NO_SPAN;
        d.turns[0].answer_text = SENTINEL.to_string();
        let span = d.gold_token_span(&d.turns[0]).unwrap();
        let sent = d.document.sentinel_token_range();
        assert_eq!(span, (sent.start, sent.end - 1));
    }
}
