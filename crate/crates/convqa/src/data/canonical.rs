//! Canonical internal dialogue serialization: one JSON object per line,
//! UTF-8, keys sorted. Byte-stable, so fixtures can be diffed.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use crate::error::{Error, Result};

use super::Dialogue;

pub fn write_canonical(dialogues: &[Dialogue], path: impl AsRef<Path>) -> Result<()> {
    let mut out = BufWriter::new(File::create(path.as_ref())?);
    for dialogue in dialogues {
        // round-trip through Value: serde_json's map is a BTreeMap, which
        // sorts the keys
        let value = serde_json::to_value(dialogue)
            .map_err(|e| Error::Validation(format!("serialize {}: {e}", dialogue.id)))?;
        serde_json::to_writer(&mut out, &value)
            .map_err(|e| Error::Validation(format!("write {}: {e}", dialogue.id)))?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}

pub fn load_canonical(path: impl AsRef<Path>) -> Result<Vec<Dialogue>> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| Error::Parse {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    let mut dialogues = Vec::new();
    for (lineno, line) in BufReader::new(file).lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let dialogue: Dialogue = serde_json::from_str(&line).map_err(|e| Error::Parse {
            path: path.to_path_buf(),
            message: format!("line {}: {e}", lineno + 1),
        })?;
        dialogue.validate()?;
        dialogues.push(dialogue);
    }
    Ok(dialogues)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::{Document, Turn};
    use tempfile::tempdir;

    #[test]
    fn round_trip_is_structurally_identical_and_byte_stable() {
        let document = Document::new("doc", "Grace Hopper built a compiler.").unwrap();
        let dialogue = Dialogue {
            id: "d".to_string(),
            document,
            turns: vec![Turn {
                turn_index: 1,
                question: "Who built a compiler?".to_string(),
                answer_text: "Grace Hopper".to_string(),
                answer_char_start: 0,
                answer_char_end: 12,
                source_id: None,
                references: Vec::new(),
            }],
        };
        let dir = tempdir().unwrap();
        let path = dir.path().join("c.jsonl");
        write_canonical(std::slice::from_ref(&dialogue), &path).unwrap();
        let reloaded = load_canonical(&path).unwrap();
        assert_eq!(reloaded, vec![dialogue]);

        let first = std::fs::read(&path).unwrap();
        write_canonical(&reloaded, &path).unwrap();
        assert_eq!(first, std::fs::read(&path).unwrap());
    }
}
