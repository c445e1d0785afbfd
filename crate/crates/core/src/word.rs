//! Words of distinct positive letters and permutations of `1..=n`.
//!
//! Positions and letters are 1-based throughout. A [`Word`] dereferences to
//! its letter slice, so `w[0]` is the letter at position 1.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A finite sequence of pairwise distinct positive integers.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&l| l == 0) {
            return Err(Error::InvalidWord(format!("letter {bad} is not positive")));
        }
        let mut sorted = letters.clone();
        sorted.sort_unstable();
        if let Some(pair) = sorted.windows(2).find(|p| p[0] == p[1]) {
            return Err(Error::InvalidWord(format!("letter {} repeats", pair[0])));
        }
        Ok(Word(letters))
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<u32> {
        self.0
    }

    /// Letter at 1-based position `i`.
    pub fn at(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    /// Human-readable form: single digits juxtaposed, larger letters in
    /// parentheses, e.g. `93826(10)5417`.
    pub fn compact(&self) -> String {
        compact_string(&self.0)
    }
}

/// Letters separated by single spaces.
pub(crate) fn text_string(letters: &[u32]) -> String {
    letters
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub(crate) fn compact_string(letters: &[u32]) -> String {
    let mut out = String::with_capacity(letters.len() + 4);
    for &l in letters {
        if l < 10 {
            out.push(char::from(b'0' + l as u8));
        } else {
            out.push('(');
            out.push_str(&l.to_string());
            out.push(')');
        }
    }
    out
}

impl Deref for Word {
    type Target = [u32];

    fn deref(&self) -> &[u32] {
        &self.0
    }
}

/// Letters separated by single spaces. A lone letter above 9 is written in
/// the parenthesized compact form so that it parses back unchanged.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0[..] {
            [l] if l >= 10 => return write!(f, "({l})"),
            _ => {}
        }
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({})", self.compact())
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts the canonical separated form (`"8 3 6 2"`, commas also allowed)
    /// or, when no separator is present, the compact display form.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let letters = if s.contains(|c: char| c.is_whitespace() || c == ',') {
            parse_separated(s)?
        } else {
            parse_compact(s)?
        };
        Word::new(letters)
    }
}

fn parse_separated(s: &str) -> Result<Vec<u32>> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u32>().map_err(|e| Error::Parse {
                token: t.to_string(),
                reason: e.to_string(),
            })
        })
        .collect()
}

fn parse_compact(s: &str) -> Result<Vec<u32>> {
    let mut letters = Vec::new();
    let mut chars = s.char_indices().peekable();
    while let Some((start, ch)) = chars.next() {
        match ch {
            '0'..='9' => letters.push(ch as u32 - '0' as u32),
            '(' => {
                let mut digits = String::new();
                let mut closed = false;
                for (_, c) in chars.by_ref() {
                    if c == ')' {
                        closed = true;
                        break;
                    }
                    digits.push(c);
                }
                if !closed {
                    return Err(Error::Parse {
                        token: s[start..].to_string(),
                        reason: "unclosed parenthesis".into(),
                    });
                }
                let value = digits.parse::<u32>().map_err(|e| Error::Parse {
                    token: format!("({digits})"),
                    reason: e.to_string(),
                })?;
                letters.push(value);
            }
            _ => {
                return Err(Error::Parse {
                    token: ch.to_string(),
                    reason: "expected a digit or `(`".into(),
                })
            }
        }
    }
    Ok(letters)
}

/// A word whose letter set is exactly `{1, …, n}`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Permutation(Word);

impl Permutation {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        let n = letters.len();
        let mut seen = vec![false; n + 1];
        for &l in &letters {
            let idx = l as usize;
            if idx == 0 || idx > n {
                return Err(Error::NotAPermutation {
                    len: n,
                    detail: format!("letter {l} outside 1..={n}"),
                });
            }
            if std::mem::replace(&mut seen[idx], true) {
                return Err(Error::NotAPermutation {
                    len: n,
                    detail: format!("letter {l} repeats"),
                });
            }
        }
        Ok(Permutation(Word(letters)))
    }

    /// Caller guarantees the letters form a permutation.
    pub(crate) fn from_vec_unchecked(letters: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(letters.clone()).is_ok(), "{letters:?}");
        Permutation(Word(letters))
    }

    pub fn identity(n: usize) -> Self {
        Permutation(Word((1..=n as u32).collect()))
    }

    pub fn from_word(w: Word) -> Result<Self> {
        Permutation::new(w.0)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn as_word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }

    pub fn into_letters(self) -> Vec<u32> {
        self.0 .0
    }

    pub fn at(&self, i: usize) -> u32 {
        self.0.at(i)
    }

    pub fn compact(&self) -> String {
        self.0.compact()
    }
}

impl Deref for Permutation {
    type Target = [u32];

    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl AsRef<Word> for Permutation {
    fn as_ref(&self) -> &Word {
        &self.0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({})", self.compact())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::from_word(s.parse()?)
    }
}

impl TryFrom<Word> for Permutation {
    type Error = Error;

    fn try_from(w: Word) -> Result<Self> {
        Permutation::from_word(w)
    }
}
