//! The free monoid on the 0-generators.

use alloc::vec::Vec;
use core::ops::Range;

use crate::error::{Error, Result};

/// Index of a 0-generator inside its polygraph's Σ₀.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u32);

/// An element of Σ₀*. The empty word is the monoid unit.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        Word(letters.into_iter().collect())
    }

    /// Shorthand for tests and examples: each index becomes a letter.
    pub fn from_indices(indices: &[u32]) -> Self {
        Word(indices.iter().copied().map(Letter).collect())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// `u · self · v`.
    pub fn whisker(&self, left: &Word, right: &Word) -> Word {
        let mut letters = Vec::with_capacity(left.len() + self.len() + right.len());
        letters.extend_from_slice(&left.0);
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&right.0);
        Word(letters)
    }

    /// The factor `self[range]`. Panics if the range is out of bounds.
    pub fn factor(&self, range: Range<usize>) -> Word {
        Word(self.0[range].to_vec())
    }

    pub fn prefix(&self, len: usize) -> Word {
        self.factor(0..len)
    }

    pub fn suffix_from(&self, start: usize) -> Word {
        self.factor(start..self.len())
    }

    /// Whether `pattern` occurs at `start`.
    pub fn has_factor_at(&self, pattern: &Word, start: usize) -> bool {
        start + pattern.len() <= self.len() && self.0[start..start + pattern.len()] == pattern.0[..]
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word(letters)
    }
}

pub fn concat(w1: &Word, w2: &Word) -> Word {
    w1.concat(w2)
}

/// All start indices of `pattern` in `w`, ascending, overlapping occurrences
/// included.
pub fn find_occurrences(pattern: &Word, w: &Word) -> Result<Vec<usize>> {
    if pattern.is_empty() {
        return Err(Error::EmptyPattern);
    }
    if pattern.len() > w.len() {
        return Ok(Vec::new());
    }
    Ok((0..=w.len() - pattern.len()).filter(|&i| w.has_factor_at(pattern, i)).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OverlapKind {
    /// A proper suffix of the first pattern is a proper prefix of the second.
    SuffixPrefix,
    /// The second pattern is a factor of the first.
    Inclusion,
}

/// A superposition of two patterns: the first starts at index 0 of
/// `superposition`, the second at `offset`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Overlap {
    pub kind: OverlapKind,
    pub offset: usize,
    pub superposition: Word,
}

/// Every way of superposing `l2` on `l1` so that they share at least one
/// letter, with `l1` anchored at index 0. The full overlap of a pattern with
/// an equal pattern at offset 0 is omitted.
pub fn overlaps(l1: &Word, l2: &Word) -> Vec<Overlap> {
    overlaps_with(l1, l2, l1 != l2)
}

/// As [`overlaps`], but `include_full` controls whether an offset-0
/// inclusion of equal patterns is reported. Distinct rules with equal
/// left-hand sides need it.
pub(crate) fn overlaps_with(l1: &Word, l2: &Word, include_full: bool) -> Vec<Overlap> {
    let mut found = Vec::new();
    if l1.is_empty() || l2.is_empty() {
        return found;
    }
    for offset in 0..l1.len() {
        if offset + l2.len() <= l1.len() {
            if offset == 0 && l1.len() == l2.len() && !include_full {
                continue;
            }
            if l1.has_factor_at(l2, offset) {
                found.push(Overlap {
                    kind: OverlapKind::Inclusion,
                    offset,
                    superposition: l1.clone(),
                });
            }
        } else if offset > 0 {
            let shared = l1.len() - offset;
            if l1.0[offset..] == l2.0[..shared] {
                found.push(Overlap {
                    kind: OverlapKind::SuffixPrefix,
                    offset,
                    superposition: l1.concat(&l2.suffix_from(shared)),
                });
            }
        }
    }
    found
}
