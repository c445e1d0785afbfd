//! Space labelings that drive the insertion maps.
//!
//! For a word of length `m` there are `m + 1` spaces, numbered `1..=m+1`;
//! space `j ≤ m` sits immediately before position `j` and space `m + 1` after
//! the last letter. Every scheme assigns the labels `0..=m` bijectively and
//! gives the final space label 0.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::stats;
use crate::word::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scheme {
    /// Rawlings' r-maj-labeling.
    Rmaj,
    /// den-labeling of the index sequence, with insertion letters.
    Den,
    /// r-level-den-labeling of the index sequence.
    Rden,
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rmaj" => Ok(Scheme::Rmaj),
            "den" => Ok(Scheme::Den),
            "rden" => Ok(Scheme::Rden),
            _ => Err(Error::Unknown {
                what: "scheme",
                value: s.to_string(),
            }),
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scheme::Rmaj => "rmaj",
            Scheme::Den => "den",
            Scheme::Rden => "rden",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpaceLabeling {
    pub scheme: Scheme,
    /// `labels[j - 1]` is the label of space `j`.
    pub labels: Vec<usize>,
    /// Den scheme only: `insertion_letters[j - 1]` belongs to space `j`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub insertion_letters: Option<Vec<u32>>,
}

impl SpaceLabeling {
    /// Spaces listed in `first` get labels `1, 2, …` in that order, the other
    /// non-final spaces continue left to right, the final space gets 0.
    fn assign(scheme: Scheme, m: usize, first: impl IntoIterator<Item = usize>) -> Self {
        let mut labels = vec![usize::MAX; m + 1];
        labels[m] = 0;
        let mut next = 1;
        for space in first {
            debug_assert_eq!(labels[space - 1], usize::MAX, "space {space} twice");
            labels[space - 1] = next;
            next += 1;
        }
        for label in labels.iter_mut().filter(|l| **l == usize::MAX) {
            *label = next;
            next += 1;
        }
        SpaceLabeling {
            scheme,
            labels,
            insertion_letters: None,
        }
    }

    /// Length of the labeled word.
    pub fn m(&self) -> usize {
        self.labels.len() - 1
    }

    pub fn label_of_space(&self, space: usize) -> usize {
        self.labels[space - 1]
    }

    /// The 1-based space carrying label `c`.
    pub fn space_of_label(&self, c: usize) -> Result<usize> {
        if c > self.m() {
            return Err(Error::LabelOutOfRange { c, max: self.m() });
        }
        Ok(self.labels.iter().position(|&l| l == c).unwrap() + 1)
    }

    pub fn insertion_letter(&self, space: usize) -> Option<u32> {
        self.insertion_letters.as_ref().map(|v| v[space - 1])
    }
}

pub(crate) fn check_level(r: usize, n: usize) -> Result<()> {
    if r == 0 || r >= n {
        return Err(Error::LevelOutOfRange {
            r,
            n,
            requirement: "1 <= r < n",
        });
    }
    Ok(())
}

/// The letter set `S(π)` of the r-maj scheme for `π ∈ S_{n-1}`: letters that
/// end an r-descent, together with letters greater than `n - r`.
pub fn s_set(pi: &Permutation, r: usize) -> Vec<u32> {
    let n = pi.n() + 1;
    let mut out: Vec<u32> = pi
        .iter()
        .enumerate()
        .filter(|&(k, &l)| {
            let after_r_descent = k > 0 && pi[k - 1] as usize >= l as usize + r;
            after_r_descent || l as usize + r > n
        })
        .map(|(_, &l)| l)
        .collect();
    out.sort_unstable();
    out
}

/// r-maj-labeling of `π ∈ S_{n-1}` for inserting `n`.
pub fn rmaj_labeling(pi: &Permutation, r: usize) -> Result<SpaceLabeling> {
    let m = pi.n();
    check_level(r, m + 1)?;
    let s = s_set(pi, r);
    let marked = (1..=m)
        .rev()
        .filter(|&j| s.binary_search(&pi[j - 1]).is_ok());
    Ok(SpaceLabeling::assign(Scheme::Rmaj, m, marked))
}

/// den-labeling of the index sequence `1..n-1` of `π`, with insertion letters.
pub fn den_labeling(pi: &Permutation) -> SpaceLabeling {
    let m = pi.n();
    let n = m as u32 + 1;
    let e = stats::excedance_letters(pi);
    // e_s, …, e_1 get labels 1, …, s
    let mut lab = SpaceLabeling::assign(Scheme::Den, m, e.iter().rev().map(|&l| l as usize));
    let letters = (1..=m + 1)
        .map(|j| e.iter().copied().find(|&l| l as usize >= j).unwrap_or(n))
        .collect();
    lab.insertion_letters = Some(letters);
    lab
}

/// r-level-den-labeling of the index sequence of `π ∈ S_{n-1}`.
pub fn rden_labeling(pi: &Permutation, r: usize) -> Result<SpaceLabeling> {
    let m = pi.n();
    check_level(r, m + 1)?;
    let e = stats::level_excedance_letters(pi, r);
    let (_, b) = stats::ab_sets(pi, r);
    let first = e.iter().rev().map(|&l| l as usize).chain(b);
    Ok(SpaceLabeling::assign(Scheme::Rden, m, first))
}
