//! Presentations: cubical 2-polygraphs and their (3,2)/(3,1) extensions.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::cube::{check_shell, Shell};
use crate::word::{Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator0 {
    pub name: String,
}

/// Declaration index of a rule inside Σ₁.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RuleId(pub usize);

/// A 1-generator `lhs -> rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rule {
    pub id: RuleId,
    pub name: String,
    pub lhs: Word,
    pub rhs: Word,
}

/// A 2-generator with its full declared boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareGen {
    pub name: String,
    pub shell: Shell,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Regime {
    /// Σ₀ and Σ₁ only.
    TwoPolygraph,
    /// Square boundaries are positive paths; cells live in Σ₂*.
    ThreeTwo,
    /// Square boundaries may be zig-zags; cells live in Σ₂⊤.
    ThreeOne,
}

impl Regime {
    pub fn allows_inverses(self) -> bool {
        matches!(self, Regime::ThreeOne)
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::TwoPolygraph => "2",
            Regime::ThreeTwo => "3,2",
            Regime::ThreeOne => "3,1",
        })
    }
}

/// A presentation `(Σ₀, Σ₁, Σ₂)`.
///
/// Construction never fails; [`validate_polygraph`] reports whatever is
/// structurally wrong.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polygraph {
    sigma0: Vec<Generator0>,
    sigma1: Vec<Arc<Rule>>,
    sigma2: Vec<Arc<SquareGen>>,
    regime: Regime,
}

impl Polygraph {
    pub fn new(regime: Regime) -> Self {
        Polygraph { sigma0: Vec::new(), sigma1: Vec::new(), sigma2: Vec::new(), regime }
    }

    pub fn add_generator(&mut self, name: impl Into<String>) -> Letter {
        self.sigma0.push(Generator0 { name: name.into() });
        Letter((self.sigma0.len() - 1) as u32)
    }

    pub fn add_rule(&mut self, name: impl Into<String>, lhs: Word, rhs: Word) -> Arc<Rule> {
        let rule = Arc::new(Rule { id: RuleId(self.sigma1.len()), name: name.into(), lhs, rhs });
        self.sigma1.push(rule.clone());
        rule
    }

    pub fn add_square(&mut self, name: impl Into<String>, shell: Shell) -> Arc<SquareGen> {
        let square = Arc::new(SquareGen { name: name.into(), shell });
        self.sigma2.push(square.clone());
        square
    }

    pub fn set_regime(&mut self, regime: Regime) {
        self.regime = regime;
    }

    pub fn regime(&self) -> Regime {
        self.regime
    }

    pub fn generators(&self) -> &[Generator0] {
        &self.sigma0
    }

    pub fn rules(&self) -> &[Arc<Rule>] {
        &self.sigma1
    }

    pub fn squares(&self) -> &[Arc<SquareGen>] {
        &self.sigma2
    }

    pub fn generator(&self, name: &str) -> Option<Letter> {
        self.sigma0.iter().position(|g| g.name == name).map(|i| Letter(i as u32))
    }

    pub fn generator_name(&self, letter: Letter) -> Option<&str> {
        self.sigma0.get(letter.0 as usize).map(|g| g.name.as_str())
    }

    pub fn rule(&self, name: &str) -> Option<&Arc<Rule>> {
        self.sigma1.iter().find(|r| r.name == name)
    }

    pub fn square(&self, name: &str) -> Option<&Arc<SquareGen>> {
        self.sigma2.iter().find(|s| s.name == name)
    }
}

/// Token rules shared by generator, rule and square names. The text formats
/// rely on them to stay unambiguous.
pub fn is_valid_name(name: &str) -> bool {
    !name.is_empty()
        && name != "1"
        && !name.contains("->")
        && !name.starts_with(['+', '-'])
        && !name.contains(|c: char| c.is_whitespace() || "|:();=[]#".contains(c))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    InvalidName,
    DuplicateName,
    UnknownGenerator,
    UnknownRule,
    EmptyLhs,
    ShellCornerMismatch,
    RegimeViolation,
    /// Warning only: a rule whose two sides coincide cannot terminate.
    TrivialRule,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ViolationKind::InvalidName => "invalid name",
            ViolationKind::DuplicateName => "duplicate name",
            ViolationKind::UnknownGenerator => "unknown generator",
            ViolationKind::UnknownRule => "unknown rule",
            ViolationKind::EmptyLhs => "empty left-hand side",
            ViolationKind::ShellCornerMismatch => "shell corner mismatch",
            ViolationKind::RegimeViolation => "regime violation",
            ViolationKind::TrivialRule => "rule with equal sides breaks termination",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    /// Name of the offending generator, rule or square.
    pub subject: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.subject, self.kind)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    /// Hard errors; empty iff the polygraph is valid.
    pub violations: Vec<Violation>,
    pub warnings: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    fn error(&mut self, kind: ViolationKind, subject: &str) {
        self.violations.push(Violation { kind, subject: subject.to_string() });
    }
}

pub fn validate_polygraph(p: &Polygraph) -> ValidationReport {
    let mut report = ValidationReport::default();

    check_names(&mut report, p.sigma0.iter().map(|g| g.name.as_str()));
    check_names(&mut report, p.sigma1.iter().map(|r| r.name.as_str()));
    check_names(&mut report, p.sigma2.iter().map(|s| s.name.as_str()));

    let in_sigma0 = |w: &Word| w.letters().iter().all(|l| (l.0 as usize) < p.sigma0.len());
    for (index, rule) in p.sigma1.iter().enumerate() {
        if rule.id != RuleId(index) {
            report.error(ViolationKind::UnknownRule, &rule.name);
        }
        if !in_sigma0(&rule.lhs) || !in_sigma0(&rule.rhs) {
            report.error(ViolationKind::UnknownGenerator, &rule.name);
        }
        if rule.lhs.is_empty() {
            report.error(ViolationKind::EmptyLhs, &rule.name);
        }
        if rule.lhs == rule.rhs {
            report
                .warnings
                .push(Violation { kind: ViolationKind::TrivialRule, subject: rule.name.clone() });
        }
    }

    if p.regime == Regime::TwoPolygraph && !p.sigma2.is_empty() {
        report.error(ViolationKind::RegimeViolation, "Σ₂");
    }
    for square in &p.sigma2 {
        let edges = square.shell.edges();
        let known = edges
            .iter()
            .flat_map(|e| e.steps())
            .all(|s| p.sigma1.get(s.step.rule.id.0).is_some_and(|r| **r == *s.step.rule));
        if !known {
            report.error(ViolationKind::UnknownRule, &square.name);
        }
        if !edges.iter().all(|e| in_sigma0(e.source())) {
            report.error(ViolationKind::UnknownGenerator, &square.name);
        }
        if !check_shell(&square.shell) {
            report.error(ViolationKind::ShellCornerMismatch, &square.name);
        }
        if p.regime == Regime::ThreeTwo && !edges.iter().all(|e| e.is_positive()) {
            report.error(ViolationKind::RegimeViolation, &square.name);
        }
    }
    report
}

fn check_names<'a>(report: &mut ValidationReport, names: impl Iterator<Item = &'a str>) {
    let mut seen = BTreeSet::new();
    for name in names {
        if !is_valid_name(name) {
            report.error(ViolationKind::InvalidName, name);
        }
        if !seen.insert(name) {
            report.error(ViolationKind::DuplicateName, name);
        }
    }
}
