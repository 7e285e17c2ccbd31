//! Loader for QuAC-style JSON files.

use std::fs::File;
use std::io::BufReader;
use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::tokenize::char_to_byte_offset;

use super::{Dialogue, Document, Turn, NO_SPAN, SENTINEL};

#[derive(Deserialize)]
struct QuacFile {
    data: Vec<QuacArticle>,
}

#[derive(Deserialize)]
struct QuacArticle {
    #[serde(default)]
    title: Option<String>,
    paragraphs: Vec<QuacParagraph>,
}

#[derive(Deserialize)]
struct QuacParagraph {
    id: String,
    context: String,
    qas: Vec<QuacQa>,
}

#[derive(Deserialize)]
struct QuacQa {
    id: String,
    question: String,
    answers: Vec<QuacAnswer>,
}

#[derive(Deserialize)]
struct QuacAnswer {
    text: String,
    answer_start: i64,
}

/// Load a QuAC-format file. Every QA item becomes a [`Turn`]; answers whose
/// text equals the unanswerable marker get sentinel offsets; the marker is
/// appended to each document exactly once.
pub fn load_quac_like(path: impl AsRef<Path>) -> Result<Vec<Dialogue>> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| Error::Parse {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    let parsed: QuacFile = serde_json::from_reader(BufReader::new(file)).map_err(|e| Error::Parse {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;

    let mut dialogues = Vec::new();
    for article in parsed.data {
        for para in article.paragraphs {
            let mut document = Document::new(para.id.clone(), &para.context)?;
            document.title = article.title.clone();
            let mut turns = Vec::with_capacity(para.qas.len());
            for (i, qa) in para.qas.into_iter().enumerate() {
                let primary = qa.answers.first().ok_or_else(|| {
                    Error::Validation(format!("dialogue {}: qa {} has no answers", para.id, qa.id))
                })?;
                let references: Vec<String> = qa
                    .answers
                    .iter()
                    .skip(1)
                    .map(|a| a.text.clone())
                    .collect();
                let turn = if primary.text == SENTINEL {
                    Turn {
                        turn_index: (i + 1) as u32,
                        question: qa.question,
                        answer_text: SENTINEL.to_string(),
                        answer_char_start: NO_SPAN,
                        answer_char_end: NO_SPAN,
                        source_id: Some(qa.id),
                        references,
                    }
                } else {
                    let start = char_to_byte_offset(&document.text, primary.answer_start as usize)
                        .ok_or_else(|| {
                            Error::Validation(format!(
                                "dialogue {}: answer_start {} out of range",
                                para.id, primary.answer_start
                            ))
                        })?;
                    let end = start + primary.text.len();
                    Turn {
                        turn_index: (i + 1) as u32,
                        question: qa.question,
                        answer_text: primary.text.clone(),
                        answer_char_start: start as i64,
                        answer_char_end: end as i64,
                        source_id: Some(qa.id),
                        references,
                    }
                };
                turns.push(turn);
            }
            let dialogue = Dialogue {
                id: para.id.clone(),
                document,
                turns,
            };
            dialogue.validate()?;
            dialogues.push(dialogue);
        }
    }
    Ok(dialogues)
}
