//! Rewriting steps, paths, zig-zags and normalization.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::polygraph::{Polygraph, Rule};
use crate::word::{find_occurrences, Letter, Word};

/// Fuel used when the caller does not choose one.
pub const DEFAULT_FUEL: usize = 10_000;

/// The 1-cell `u f v`: rule `f` applied in the context `(u, v)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RewriteStep {
    pub left: Word,
    pub rule: Arc<Rule>,
    pub right: Word,
}

impl RewriteStep {
    pub fn new(left: Word, rule: Arc<Rule>, right: Word) -> Self {
        RewriteStep { left, rule, right }
    }

    pub fn source(&self) -> Word {
        self.rule.lhs.whisker(&self.left, &self.right)
    }

    pub fn target(&self) -> Word {
        self.rule.rhs.whisker(&self.left, &self.right)
    }

    /// Index of the redex in the source word.
    pub fn start(&self) -> usize {
        self.left.len()
    }

    /// One past the last index of the redex in the source word.
    pub fn end(&self) -> usize {
        self.left.len() + self.rule.lhs.len()
    }

    pub fn whisker(&self, left: &Word, right: &Word) -> RewriteStep {
        RewriteStep {
            left: left.concat(&self.left),
            rule: self.rule.clone(),
            right: self.right.concat(right),
        }
    }
}

pub fn apply_step(step: &RewriteStep) -> Word {
    step.target()
}

/// A composite of rewriting steps in Σ₁*. The empty path is the identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    source: Word,
    steps: Vec<RewriteStep>,
}

impl Path {
    pub fn new(source: Word, steps: Vec<RewriteStep>) -> Result<Self> {
        let mut at = source.clone();
        for (position, step) in steps.iter().enumerate() {
            if step.source() != at {
                return Err(Error::EndpointMismatch { position });
            }
            at = step.target();
        }
        Ok(Path { source, steps })
    }

    pub fn identity(word: Word) -> Self {
        Path { source: word, steps: Vec::new() }
    }

    pub fn source(&self) -> &Word {
        &self.source
    }

    pub fn target(&self) -> Word {
        self.steps.last().map_or_else(|| self.source.clone(), RewriteStep::target)
    }

    pub fn steps(&self) -> &[RewriteStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Sequential composition `self ⋆ other`.
    pub fn then(&self, other: &Path) -> Result<Path> {
        if self.target() != other.source {
            return Err(Error::EndpointMismatch { position: self.len() });
        }
        let mut steps = self.steps.clone();
        steps.extend(other.steps.iter().cloned());
        Ok(Path { source: self.source.clone(), steps })
    }

    pub fn whisker(&self, left: &Word, right: &Word) -> Path {
        Path {
            source: self.source.whisker(left, right),
            steps: self.steps.iter().map(|s| s.whisker(left, right)).collect(),
        }
    }

    /// Splits off the first step: `self = first ⋆ rest`.
    pub fn split_first(&self) -> Option<(&RewriteStep, Path)> {
        let (first, rest) = self.steps.split_first()?;
        Some((first, Path { source: first.target(), steps: rest.to_vec() }))
    }
}

impl From<RewriteStep> for Path {
    fn from(step: RewriteStep) -> Self {
        Path { source: step.source(), steps: alloc::vec![step] }
    }
}

/// Monoid product of 1-cells, interleaved left first:
/// `(f · source(g)) ⋆ (target(f) · g)`.
pub fn path_product(f: &Path, g: &Path) -> Path {
    let first = f.whisker(&Word::empty(), g.source());
    let second = g.whisker(&f.target(), &Word::empty());
    let mut steps = first.steps;
    steps.extend(second.steps);
    Path { source: f.source.concat(&g.source), steps }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

/// A step or its formal inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedStep {
    pub step: RewriteStep,
    pub sign: Sign,
}

impl SignedStep {
    pub fn pos(step: RewriteStep) -> Self {
        SignedStep { step, sign: Sign::Pos }
    }

    pub fn neg(step: RewriteStep) -> Self {
        SignedStep { step, sign: Sign::Neg }
    }

    pub fn source(&self) -> Word {
        match self.sign {
            Sign::Pos => self.step.source(),
            Sign::Neg => self.step.target(),
        }
    }

    pub fn target(&self) -> Word {
        match self.sign {
            Sign::Pos => self.step.target(),
            Sign::Neg => self.step.source(),
        }
    }

    pub fn inverse(&self) -> SignedStep {
        SignedStep { step: self.step.clone(), sign: self.sign.flip() }
    }

    fn cancels(&self, other: &SignedStep) -> bool {
        self.sign != other.sign && self.step == other.step
    }
}

/// Cancels adjacent inverse pairs until none remain.
pub fn reduce(steps: Vec<SignedStep>) -> Vec<SignedStep> {
    let mut out: Vec<SignedStep> = Vec::with_capacity(steps.len());
    for step in steps {
        if out.last().is_some_and(|last| last.cancels(&step)) {
            out.pop();
        } else {
            out.push(step);
        }
    }
    out
}

/// A reduced composite of signed steps: a 1-cell of Σ₁⊤.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZigZag {
    source: Word,
    steps: Vec<SignedStep>,
}

impl ZigZag {
    /// Checks that the steps chain from `source`, then reduces.
    pub fn from_steps(source: Word, steps: Vec<SignedStep>) -> Result<Self> {
        let mut at = source.clone();
        for (position, step) in steps.iter().enumerate() {
            if step.source() != at {
                return Err(Error::EndpointMismatch { position });
            }
            at = step.target();
        }
        Ok(ZigZag { source, steps: reduce(steps) })
    }

    pub fn identity(word: Word) -> Self {
        ZigZag { source: word, steps: Vec::new() }
    }

    pub fn source(&self) -> &Word {
        &self.source
    }

    pub fn target(&self) -> Word {
        self.steps.last().map_or_else(|| self.source.clone(), SignedStep::target)
    }

    pub fn steps(&self) -> &[SignedStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.steps.iter().all(|s| s.sign == Sign::Pos)
    }

    /// The underlying path when every step is positive.
    pub fn to_path(&self) -> Option<Path> {
        self.is_positive().then(|| Path {
            source: self.source.clone(),
            steps: self.steps.iter().map(|s| s.step.clone()).collect(),
        })
    }

    pub fn inverse(&self) -> ZigZag {
        ZigZag {
            source: self.target(),
            steps: self.steps.iter().rev().map(SignedStep::inverse).collect(),
        }
    }

    /// Sequential composition followed by reduction.
    pub fn compose(&self, other: &ZigZag) -> Result<ZigZag> {
        if self.target() != other.source {
            return Err(Error::EndpointMismatch { position: self.len() });
        }
        let mut steps = self.steps.clone();
        steps.extend(other.steps.iter().cloned());
        Ok(ZigZag { source: self.source.clone(), steps: reduce(steps) })
    }

    pub fn whisker(&self, left: &Word, right: &Word) -> ZigZag {
        ZigZag {
            source: self.source.whisker(left, right),
            steps: self
                .steps
                .iter()
                .map(|s| SignedStep { step: s.step.whisker(left, right), sign: s.sign })
                .collect(),
        }
    }

    /// Leading run of steps sharing one sign, and the remainder.
    pub(crate) fn split_sign_run(&self) -> Option<(ZigZag, ZigZag)> {
        let sign = self.steps.first()?.sign;
        let run = self.steps.iter().take_while(|s| s.sign == sign).count();
        let head = ZigZag { source: self.source.clone(), steps: self.steps[..run].to_vec() };
        let tail = ZigZag { source: head.target(), steps: self.steps[run..].to_vec() };
        Some((head, tail))
    }
}

impl From<Path> for ZigZag {
    fn from(path: Path) -> Self {
        ZigZag { source: path.source, steps: path.steps.into_iter().map(SignedStep::pos).collect() }
    }
}

impl From<RewriteStep> for ZigZag {
    fn from(step: RewriteStep) -> Self {
        ZigZag::from(Path::from(step))
    }
}

/// [`path_product`] on zig-zags; the result is reduced.
pub fn zigzag_product(f: &ZigZag, g: &ZigZag) -> ZigZag {
    let first = f.whisker(&Word::empty(), g.source());
    let second = g.whisker(&f.target(), &Word::empty());
    let mut steps = first.steps;
    steps.extend(second.steps);
    ZigZag { source: f.source.concat(&g.source), steps: reduce(steps) }
}

/// Every step with source `w`, by redex start and then rule order.
pub fn applicable_steps(p: &Polygraph, w: &Word) -> Vec<RewriteStep> {
    let mut found = Vec::new();
    for rule in p.rules() {
        let Ok(starts) = find_occurrences(&rule.lhs, w) else { continue };
        for start in starts {
            let left = w.prefix(start);
            let right = w.suffix_from(start + rule.lhs.len());
            found.push((start, rule.id, RewriteStep::new(left, rule.clone(), right)));
        }
    }
    found.sort_by_key(|&(start, id, _)| (start, id));
    found.into_iter().map(|(_, _, step)| step).collect()
}

/// Every step with target `w`, by position of the right-hand side and then
/// rule order. Used to walk backwards along inverse steps.
pub fn inverse_applicable_steps(p: &Polygraph, w: &Word) -> Vec<RewriteStep> {
    let mut found = Vec::new();
    for rule in p.rules() {
        let starts: Vec<usize> = if rule.rhs.is_empty() {
            (0..=w.len()).collect()
        } else {
            find_occurrences(&rule.rhs, w).unwrap_or_default()
        };
        for start in starts {
            let left = w.prefix(start);
            let right = w.suffix_from(start + rule.rhs.len());
            found.push((start, rule.id, RewriteStep::new(left, rule.clone(), right)));
        }
    }
    found.sort_by_key(|&(start, id, _)| (start, id));
    found.into_iter().map(|(_, _, step)| step).collect()
}

pub fn is_normal_form(p: &Polygraph, w: &Word) -> bool {
    applicable_steps(p, w).is_empty()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Least redex start; ties go to the earlier rule.
    #[default]
    Leftmost,
    /// Greatest redex start; ties go to the earlier rule.
    Rightmost,
}

fn choose_step(p: &Polygraph, w: &Word, strategy: Strategy) -> Option<RewriteStep> {
    let mut steps = applicable_steps(p, w);
    match strategy {
        Strategy::Leftmost => (!steps.is_empty()).then(|| steps.swap_remove(0)),
        Strategy::Rightmost => {
            let last_start = steps.last()?.start();
            let index = steps.iter().position(|s| s.start() == last_start)?;
            Some(steps.swap_remove(index))
        }
    }
}

/// Rewrites `w` until no step applies, taking at most `fuel` steps.
pub fn normalize(p: &Polygraph, w: &Word, strategy: Strategy, fuel: usize) -> Result<Path> {
    let mut steps = Vec::new();
    let mut at = w.clone();
    while let Some(step) = choose_step(p, &at, strategy) {
        if steps.len() == fuel {
            return Err(Error::FuelExhausted { fuel });
        }
        at = step.target();
        steps.push(step);
    }
    Ok(Path { source: w.clone(), steps })
}

/// A total order on Σ₀, listed from greatest to least.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Precedence {
    order: Vec<Letter>,
}

impl Precedence {
    pub fn new(greatest_first: Vec<Letter>) -> Self {
        Precedence { order: greatest_first }
    }

    /// Later declared letters are greater.
    pub fn reverse_declaration(p: &Polygraph) -> Self {
        Precedence { order: (0..p.generators().len() as u32).rev().map(Letter).collect() }
    }

    pub fn greatest_first(&self) -> &[Letter] {
        &self.order
    }

    /// Whether the order mentions every letter of `p` exactly once.
    pub fn is_total_for(&self, p: &Polygraph) -> bool {
        let n = p.generators().len();
        let mut seen = alloc::vec![false; n];
        self.order.len() == n
            && self.order.iter().all(|l| {
                let i = l.0 as usize;
                i < n && !core::mem::replace(&mut seen[i], true)
            })
    }

    fn rank(&self, letter: Letter) -> usize {
        // greatest letter gets the highest rank
        self.order.iter().position(|&l| l == letter).map_or(0, |i| self.order.len() - i)
    }

    /// Length first, then lexicographic under the precedence.
    pub fn shortlex_cmp(&self, a: &Word, b: &Word) -> Ordering {
        a.len().cmp(&b.len()).then_with(|| {
            a.letters().iter().map(|&l| self.rank(l)).cmp(b.letters().iter().map(|&l| self.rank(l)))
        })
    }
}

/// True iff every rule strictly decreases in the shortlex order.
pub fn verify_termination_order(p: &Polygraph, precedence: &Precedence) -> bool {
    precedence.is_total_for(p)
        && p.rules().iter().all(|r| precedence.shortlex_cmp(&r.lhs, &r.rhs) == Ordering::Greater)
}
