use serde::Serialize;

use crate::word::Word;

/// Version tag carried by serialized traces.
pub const TRACE_VERSION: u32 = 1;

/// One elementary edit applied while building an image permutation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "op", rename_all = "kebab-case")]
pub enum Substitution {
    /// Every occurrence of letter `from` becomes `to`.
    Rename { from: u32, to: u32 },
    /// The letter at `position` changes.
    Overwrite { position: usize, from: u32, to: u32 },
    /// `letter` is inserted so that it lands at `position`.
    Insert { position: usize, letter: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub step: usize,
    pub description: String,
    #[serde(rename = "word-before")]
    pub word_before: Word,
    #[serde(rename = "word-after")]
    pub word_after: Word,
    pub substitutions: Vec<Substitution>,
}

pub(crate) struct Trace(Option<Vec<TraceStep>>);

impl Trace {
    pub fn off() -> Self {
        Trace(None)
    }

    pub fn on() -> Self {
        Trace(Some(Vec::new()))
    }

    pub fn record(
        &mut self,
        description: impl FnOnce() -> String,
        before: &[u32],
        after: &[u32],
        substitutions: impl FnOnce() -> Vec<Substitution>,
    ) {
        if let Some(steps) = &mut self.0 {
            steps.push(TraceStep {
                step: steps.len() + 1,
                description: description(),
                word_before: unchecked_word(before),
                word_after: unchecked_word(after),
                substitutions: substitutions(),
            });
        }
    }

    pub fn into_steps(self) -> Vec<TraceStep> {
        self.0.unwrap_or_default()
    }
}

fn unchecked_word(letters: &[u32]) -> Word {
    Word::new(letters.to_vec()).expect("intermediate words have distinct letters")
}

pub(crate) fn renames(pairs: &[(u32, u32)]) -> Vec<Substitution> {
    pairs
        .iter()
        .map(|&(from, to)| Substitution::Rename { from, to })
        .collect()
}
