//! Loader for CANARD-style rewrite files.

use std::collections::BTreeSet;
use std::fs::File;
use std::io::BufReader;
use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};

use super::RewriteRecord;

#[derive(Deserialize)]
struct CanardEntry {
    #[serde(rename = "History")]
    history: Vec<String>,
    #[serde(rename = "Question")]
    question: String,
    #[serde(rename = "Rewrite")]
    rewrite: Option<String>,
    #[serde(rename = "QuAC_dialog_id")]
    dialog_id: String,
    /// 1-based turn index within the dialogue.
    #[serde(rename = "Question_no")]
    question_no: u32,
}

/// Load a CANARD-format file: one [`RewriteRecord`] per entry, keyed by
/// `(dialogue_id, turn_index)`.
pub fn load_canard(path: impl AsRef<Path>) -> Result<Vec<RewriteRecord>> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| Error::Parse {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    let entries: Vec<CanardEntry> =
        serde_json::from_reader(BufReader::new(file)).map_err(|e| Error::Parse {
            path: path.to_path_buf(),
            message: e.to_string(),
        })?;

    let mut seen = BTreeSet::new();
    let mut records = Vec::with_capacity(entries.len());
    for entry in entries {
        let key = (entry.dialog_id.clone(), entry.question_no);
        if !seen.insert(key) {
            return Err(Error::Validation(format!(
                "duplicate rewrite record for dialogue {} turn {}",
                entry.dialog_id, entry.question_no
            )));
        }
        let rewrite = match entry.rewrite {
            Some(r) if !r.trim().is_empty() => r,
            _ => {
                return Err(Error::Validation(format!(
                    "rewrite missing or empty for dialogue {} turn {}",
                    entry.dialog_id, entry.question_no
                )))
            }
        };
        records.push(RewriteRecord {
            dialogue_id: entry.dialog_id,
            turn_index: entry.question_no,
            history_texts: entry.history,
            original: entry.question,
            rewrite,
        });
    }
    Ok(records)
}
