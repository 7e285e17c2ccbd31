//! Loader for CoQA-style JSON files.
//!
//! The rationale span (`span_start`/`span_end`) becomes the extractive gold
//! span; the free-form `input_text` is kept as an extra reference for F1.

use std::fs::File;
use std::io::BufReader;
use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::tokenize::char_to_byte_offset;

use super::{Dialogue, Document, Turn, NO_SPAN, SENTINEL};

#[derive(Deserialize)]
struct CoqaFile {
    data: Vec<CoqaStory>,
}

#[derive(Deserialize)]
struct CoqaStory {
    id: String,
    source: String,
    story: String,
    questions: Vec<CoqaQuestion>,
    answers: Vec<CoqaAnswer>,
}

#[derive(Deserialize)]
struct CoqaQuestion {
    input_text: String,
    turn_id: u32,
}

#[derive(Deserialize)]
struct CoqaAnswer {
    input_text: String,
    span_start: i64,
    span_end: i64,
    #[serde(default)]
    span_text: Option<String>,
    turn_id: u32,
}

pub fn load_coqa_like(path: impl AsRef<Path>) -> Result<Vec<Dialogue>> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| Error::Parse {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    let parsed: CoqaFile = serde_json::from_reader(BufReader::new(file)).map_err(|e| Error::Parse {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;

    let mut dialogues = Vec::new();
    for story in parsed.data {
        if story.questions.len() != story.answers.len() {
            return Err(Error::Validation(format!(
                "story {}: {} questions but {} answers",
                story.id,
                story.questions.len(),
                story.answers.len()
            )));
        }
        let mut document = Document::new(story.id.clone(), &story.story)?;
        document.domain = Some(story.source.clone());
        let mut turns = Vec::with_capacity(story.questions.len());
        for (i, (q, a)) in story.questions.iter().zip(story.answers.iter()).enumerate() {
            if q.turn_id != a.turn_id {
                return Err(Error::Validation(format!(
                    "story {}: question turn_id {} does not match answer turn_id {}",
                    story.id, q.turn_id, a.turn_id
                )));
            }
            let source_id = Some(format!("{}#q{}", story.id, q.turn_id));
            let turn = if a.span_start < 0 {
                Turn {
                    turn_index: (i + 1) as u32,
                    question: q.input_text.clone(),
                    answer_text: SENTINEL.to_string(),
                    answer_char_start: NO_SPAN,
                    answer_char_end: NO_SPAN,
                    source_id,
                    references: vec![a.input_text.clone()],
                }
            } else {
                let start = char_to_byte_offset(&document.text, a.span_start as usize)
                    .ok_or_else(|| {
                        Error::Validation(format!(
                            "story {}: span_start {} out of range",
                            story.id, a.span_start
                        ))
                    })?;
                let end = char_to_byte_offset(&document.text, a.span_end as usize).ok_or_else(
                    || {
                        Error::Validation(format!(
                            "story {}: span_end {} out of range",
                            story.id, a.span_end
                        ))
                    },
                )?;
                let span_text = document.text[start..end].to_string();
                if let Some(declared) = &a.span_text {
                    if declared != &span_text {
                        return Err(Error::Validation(format!(
                            "story {}: span_text {:?} does not match story slice {:?}",
                            story.id, declared, span_text
                        )));
                    }
                }
                Turn {
                    turn_index: (i + 1) as u32,
                    question: q.input_text.clone(),
                    answer_text: span_text,
                    answer_char_start: start as i64,
                    answer_char_end: end as i64,
                    source_id,
                    // the abstractive answer is scored by F1 alongside the span
                    references: vec![a.input_text.clone()],
                }
            };
            turns.push(turn);
        }
        let dialogue = Dialogue {
            id: story.id,
            document,
            turns,
        };
        dialogue.validate()?;
        dialogues.push(dialogue);
    }
    Ok(dialogues)
}
