//! Local branchings and critical branching enumeration.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::polygraph::Polygraph;
use crate::rewrite::RewriteStep;
use crate::word::{overlaps_with, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BranchingKind {
    Aspherical,
    Peiffer,
    Overlapping,
}

/// Two coinitial rewriting steps.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Branching {
    pub first: RewriteStep,
    pub second: RewriteStep,
    pub kind: BranchingKind,
    /// Overlapping and with no common context left to strip.
    pub critical: bool,
}

impl Branching {
    pub fn source(&self) -> Word {
        self.first.source()
    }

    pub fn swapped(&self) -> Branching {
        Branching {
            first: self.second.clone(),
            second: self.first.clone(),
            kind: self.kind,
            critical: self.critical,
        }
    }
}

pub fn classify_branching(first: &RewriteStep, second: &RewriteStep) -> Result<Branching> {
    if first.source() != second.source() {
        return Err(Error::SourceMismatch);
    }
    let kind = if first == second {
        BranchingKind::Aspherical
    } else if first.end() <= second.start() || second.end() <= first.start() {
        BranchingKind::Peiffer
    } else {
        BranchingKind::Overlapping
    };
    let critical = kind == BranchingKind::Overlapping
        && first.left.len().min(second.left.len()) == 0
        && first.right.len().min(second.right.len()) == 0;
    Ok(Branching { first: first.clone(), second: second.clone(), kind, critical })
}

/// Critical branchings in rule-pair declaration order, then by offset.
///
/// Each unordered pair appears once; `first` is the redex starting at 0,
/// the longer redex on a tie, and the earlier rule on a further tie.
pub fn critical_branchings(p: &Polygraph) -> Vec<Branching> {
    let mut found: Vec<Branching> = Vec::new();
    for r1 in p.rules() {
        for r2 in p.rules() {
            if r1.lhs.is_empty() || r2.lhs.is_empty() {
                continue;
            }
            let include_full = r1.id != r2.id;
            for overlap in overlaps_with(&r1.lhs, &r2.lhs, include_full) {
                let word = &overlap.superposition;
                let first =
                    RewriteStep::new(Word::empty(), r1.clone(), word.suffix_from(r1.lhs.len()));
                let second = RewriteStep::new(
                    word.prefix(overlap.offset),
                    r2.clone(),
                    word.suffix_from(overlap.offset + r2.lhs.len()),
                );
                let keep_order = overlap.offset > 0
                    || r1.lhs.len() > r2.lhs.len()
                    || (r1.lhs.len() == r2.lhs.len() && r1.id < r2.id);
                let (first, second) = if keep_order { (first, second) } else { (second, first) };
                let branching =
                    Branching { first, second, kind: BranchingKind::Overlapping, critical: true };
                if !found.contains(&branching) {
                    found.push(branching);
                }
            }
        }
    }
    found
}
