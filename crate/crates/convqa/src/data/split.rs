//! Deterministic dialogue-level train/dev splitting.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use crate::error::{Error, Result};

use super::Dialogue;

/// Randomly sample `fraction` of the dialogues as a dev set. Sampling is at
/// dialogue granularity, deterministic given `seed`, and the two halves
/// partition the input.
pub fn split_dev(
    dialogues: Vec<Dialogue>,
    fraction: f64,
    seed: u64,
) -> Result<(Vec<Dialogue>, Vec<Dialogue>)> {
    if !(fraction > 0.0 && fraction < 1.0) {
        return Err(Error::Argument(format!(
            "dev fraction must be in (0, 1), got {fraction}"
        )));
    }
    let dev_count = (fraction * dialogues.len() as f64).floor() as usize;
    if dev_count < 1 {
        return Err(Error::Argument(format!(
            "fraction {fraction} of {} dialogues leaves no dev set",
            dialogues.len()
        )));
    }
    let mut order: Vec<usize> = (0..dialogues.len()).collect();
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    order.shuffle(&mut rng);
    let dev_indices: std::collections::BTreeSet<usize> =
        order[..dev_count].iter().copied().collect();

    let mut train = Vec::with_capacity(dialogues.len() - dev_count);
    let mut dev = Vec::with_capacity(dev_count);
    for (i, dialogue) in dialogues.into_iter().enumerate() {
        if dev_indices.contains(&i) {
            dev.push(dialogue);
        } else {
            train.push(dialogue);
        }
    }
    Ok((train, dev))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::{Document, Turn};
    use std::collections::BTreeSet;

    fn dialogues(n: usize) -> Vec<Dialogue> {
        (0..n)
            .map(|i| Dialogue {
                id: format!("d{i}"),
                document: Document::new(format!("d{i}"), "text body").unwrap(),
                turns: vec![Turn {
                    turn_index: 1,
                    question: "q".to_string(),
                    answer_text: "text".to_string(),
                    answer_char_start: 0,
                    answer_char_end: 4,
                    source_id: None,
                    references: Vec::new(),
                }],
            })
            .collect()
    }

    #[test]
    fn five_percent_of_hundred_is_five() {
        let (train, dev) = split_dev(dialogues(100), 0.05, 13).unwrap();
        assert_eq!(dev.len(), 5);
        assert_eq!(train.len(), 95);
    }

    #[test]
    fn same_seed_same_partition() {
        let a = split_dev(dialogues(100), 0.05, 99).unwrap();
        let b = split_dev(dialogues(100), 0.05, 99).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn partition_is_disjoint_and_exhaustive() {
        // set-equality oracle on 40 dialogues at 5%
        let input = dialogues(40);
        let all: BTreeSet<String> = input.iter().map(|d| d.id.clone()).collect();
        let (train, dev) = split_dev(input, 0.05, 7).unwrap();
        assert_eq!(dev.len(), 2);
        let mut union: BTreeSet<String> = train.iter().map(|d| d.id.clone()).collect();
        let dev_ids: BTreeSet<String> = dev.iter().map(|d| d.id.clone()).collect();
        assert!(union.is_disjoint(&dev_ids));
        union.extend(dev_ids);
        assert_eq!(union, all);
    }

    #[test]
    fn rejects_bad_fractions() {
        assert!(split_dev(dialogues(10), 0.0, 1).is_err());
        assert!(split_dev(dialogues(10), 1.0, 1).is_err());
        assert!(split_dev(dialogues(10), 0.05, 1).is_err()); // 0.5 dialogues
    }
}
