//! Squier completion and explicit filler synthesis.
//!
//! Given a convergent presentation in which every critical branching is
//! covered by a square generator, the functions here build a cell term for
//! any shell of zig-zags. Every result is checked against the requested
//! boundary before it is returned.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::branching::{classify_branching, critical_branchings, Branching, BranchingKind};
use crate::cube::{face_mismatch, CellTerm, Degeneracy, Rotation, Shell};
use crate::error::{Error, Result};
use crate::polygraph::{validate_polygraph, Polygraph, Regime, SquareGen};
use crate::rewrite::{
    is_normal_form, normalize, verify_termination_order, Path, Precedence, RewriteStep, Strategy,
    ZigZag,
};
use crate::word::Word;

#[derive(Clone, Debug)]
struct Cover {
    branching: Branching,
    /// The covering square, and whether its top is the branching's second
    /// step rather than its first.
    square: Option<(Arc<SquareGen>, bool)>,
}

/// A presentation together with the squares that resolve its critical
/// branchings.
#[derive(Clone, Debug)]
pub struct Completion {
    base: Polygraph,
    added: Vec<Arc<SquareGen>>,
    completed: Polygraph,
    covers: Vec<Cover>,
    fuel: usize,
}

impl Completion {
    /// Uses the squares already declared in `p`, adding none.
    pub fn from_declared(p: &Polygraph, fuel: usize) -> Self {
        Self::assemble(p.clone(), Vec::new(), p.clone(), fuel)
    }

    fn assemble(
        base: Polygraph,
        added: Vec<Arc<SquareGen>>,
        completed: Polygraph,
        fuel: usize,
    ) -> Self {
        let covers = critical_branchings(&completed)
            .into_iter()
            .map(|branching| {
                let first = ZigZag::from(branching.first.clone());
                let second = ZigZag::from(branching.second.clone());
                let square = completed
                    .squares()
                    .iter()
                    .filter(|sq| sq.shell.right.is_positive() && sq.shell.bottom.is_positive())
                    .find_map(|sq| {
                        let (top, left) = (&sq.shell.top, &sq.shell.left);
                        if *top == first && *left == second {
                            Some((sq.clone(), false))
                        } else if *top == second && *left == first {
                            Some((sq.clone(), true))
                        } else {
                            None
                        }
                    });
                Cover { branching, square }
            })
            .collect();
        Completion { base, added, completed, covers, fuel }
    }

    pub fn base(&self) -> &Polygraph {
        &self.base
    }

    pub fn added(&self) -> &[Arc<SquareGen>] {
        &self.added
    }

    /// The base presentation extended by the added squares.
    pub fn polygraph(&self) -> &Polygraph {
        &self.completed
    }

    pub fn fuel(&self) -> usize {
        self.fuel
    }

    /// Whether every critical branching has a covering square.
    pub fn is_complete(&self) -> bool {
        self.covers.iter().all(|c| c.square.is_some())
    }

    fn normal_path(&self, w: &Word) -> Result<Path> {
        normalize(&self.completed, w, Strategy::Leftmost, self.fuel)
    }
}

/// Adds one square per critical branching: top and left are the two steps,
/// right and bottom their leftmost normalizations.
pub fn squier_completion(
    p: &Polygraph,
    precedence: &Precedence,
    fuel: usize,
) -> Result<Completion> {
    if !validate_polygraph(p).is_valid() {
        return Err(Error::InvalidPolygraph);
    }
    if !verify_termination_order(p, precedence) {
        return Err(Error::TerminationUnverified);
    }
    let mut completed = p.clone();
    if completed.regime() == Regime::TwoPolygraph {
        completed.set_regime(Regime::ThreeTwo);
    }
    let mut added = Vec::new();
    let mut index = 0usize;
    for branching in critical_branchings(p) {
        let right = normalize(p, &branching.first.target(), Strategy::Leftmost, fuel)?;
        let bottom = normalize(p, &branching.second.target(), Strategy::Leftmost, fuel)?;
        if right.target() != bottom.target() {
            return Err(Error::NonConvergent);
        }
        let shell = Shell::new(
            ZigZag::from(branching.first.clone()),
            ZigZag::from(bottom),
            ZigZag::from(branching.second.clone()),
            ZigZag::from(right),
        )?;
        let name = loop {
            let candidate = format!("A{index}");
            index += 1;
            if completed.square(&candidate).is_none() {
                break candidate;
            }
        };
        added.push(completed.add_square(name, shell));
    }
    Ok(Completion::assemble(p.clone(), added, completed, fuel))
}

fn expect_faces(cell: CellTerm, shell: &Shell) -> Result<CellTerm> {
    match face_mismatch(&cell, shell) {
        None => Ok(cell),
        Some(face) => Err(Error::FillerRejected { face }),
    }
}

/// A cell with top `f1` and left `f2` whose other two faces are positive
/// paths.
pub fn local_filler(c: &Completion, f1: &RewriteStep, f2: &RewriteStep) -> Result<CellTerm> {
    let branching = classify_branching(f1, f2)?;
    let cell = match branching.kind {
        BranchingKind::Aspherical => {
            CellTerm::degenerate(Degeneracy::GammaMinus, ZigZag::from(f1.clone()))
        }
        BranchingKind::Peiffer => peiffer_filler(f1, f2),
        BranchingKind::Overlapping => overlap_filler(c, f1, f2)?,
    };
    let faces = cell.faces();
    if faces.top != ZigZag::from(f1.clone()) {
        return Err(Error::FillerRejected { face: crate::cube::Face::Top });
    }
    if faces.left != ZigZag::from(f2.clone()) {
        return Err(Error::FillerRejected { face: crate::cube::Face::Left });
    }
    Ok(cell)
}

/// `(ε₁ f)(ε₂ g)` on the cores of two disjoint redexes, split right after
/// the earlier one.
fn peiffer_filler(f1: &RewriteStep, f2: &RewriteStep) -> CellTerm {
    let top_is_left = f1.start() < f2.start();
    let (earlier, later) = if top_is_left { (f1, f2) } else { (f2, f1) };
    let split = earlier.end();
    let left_core = RewriteStep::new(earlier.left.clone(), earlier.rule.clone(), Word::empty());
    let right_core =
        RewriteStep::new(later.left.suffix_from(split), later.rule.clone(), later.right.clone());
    let (left_kind, right_kind) = if top_is_left {
        (Degeneracy::Eps1, Degeneracy::Eps2)
    } else {
        (Degeneracy::Eps2, Degeneracy::Eps1)
    };
    CellTerm::product(
        CellTerm::degenerate(left_kind, ZigZag::from(left_core)),
        CellTerm::degenerate(right_kind, ZigZag::from(right_core)),
    )
}

/// `u · A · v` or `u · T(A) · v` for the critical branching the pair
/// factors through.
fn overlap_filler(c: &Completion, f1: &RewriteStep, f2: &RewriteStep) -> Result<CellTerm> {
    let source = f1.source();
    let start = f1.start().min(f2.start());
    let end = f1.end().max(f2.end());
    let outer_right = source.len() - end;
    let core = |s: &RewriteStep| {
        RewriteStep::new(
            s.left.suffix_from(start),
            s.rule.clone(),
            s.right.prefix(s.right.len() - outer_right),
        )
    };
    let (core1, core2) = (core(f1), core(f2));
    let missing = Error::IncompleteSquares { superposition_len: end - start };
    for cover in &c.covers {
        let b = &cover.branching;
        let swapped = if b.first == core1 && b.second == core2 {
            false
        } else if b.first == core2 && b.second == core1 {
            true
        } else {
            continue;
        };
        let (square, transposed) = cover.square.clone().ok_or(missing)?;
        let mut cell = CellTerm::generator(square)?;
        if transposed != swapped {
            cell = CellTerm::rotate(Rotation::T, cell, Regime::ThreeTwo)?;
        }
        return Ok(CellTerm::whisker(&source.prefix(start), cell, &source.suffix_from(end)));
    }
    Err(missing)
}

/// A cell with top `g`, left `f` and identity right and bottom faces at the
/// common normal form.
pub fn fill_square(c: &Completion, f: &Path, g: &Path) -> Result<CellTerm> {
    if f.source() != g.source() {
        return Err(Error::SourceMismatch);
    }
    let (nf, other) = (f.target(), g.target());
    if !is_normal_form(&c.completed, &nf) || !is_normal_form(&c.completed, &other) {
        return Err(Error::NotNormalForm);
    }
    if nf != other {
        return Err(Error::NonConvergent);
    }
    let cell = square_rec(c, f, g, 0)?;
    let id = ZigZag::identity(nf);
    let expected =
        Shell::from_edges(ZigZag::from(g.clone()), id.clone(), ZigZag::from(f.clone()), id);
    expect_faces(cell, &expected)
}

fn square_rec(c: &Completion, f: &Path, g: &Path, depth: usize) -> Result<CellTerm> {
    if depth > c.fuel {
        return Err(Error::FuelExhausted { fuel: c.fuel });
    }
    let (Some((f1, f2)), Some((g1, g2))) = (f.split_first(), g.split_first()) else {
        return if f.is_empty() && g.is_empty() {
            Ok(CellTerm::id2(f.source().clone()))
        } else {
            Err(Error::NotNormalForm)
        };
    };
    let a = local_filler(c, g1, f1)?;
    let to_path = |z: &ZigZag| z.to_path().ok_or(Error::RegimeViolation);
    let right = to_path(&a.faces().right)?;
    let bottom = to_path(&a.faces().bottom)?;
    let h = c.normal_path(&a.faces().bottom_right())?;
    let (corner, right, bottom) = if h.is_empty() {
        (a, right, bottom)
    } else {
        let extension = CellTerm::horizontal(
            CellTerm::degenerate(Degeneracy::Eps1, ZigZag::from(bottom.clone())),
            CellTerm::degenerate(Degeneracy::GammaPlus, ZigZag::from(h.clone())),
        )?;
        (CellTerm::vertical(a, extension)?, right.then(&h)?, bottom.then(&h)?)
    };
    let upper_right = square_rec(c, &right, &g2, depth + 1)?;
    let lower_left = square_rec(c, &f2, &bottom, depth + 1)?;
    CellTerm::vertical(CellTerm::horizontal(corner, upper_right)?, lower_left)
}

/// A cell with top `f`, left `g1`, right `g2` and identity bottom.
pub fn fill_zigzag(c: &Completion, f: &ZigZag, g1: &Path, g2: &Path) -> Result<CellTerm> {
    if g1.source() != f.source() || *g2.source() != f.target() {
        return Err(Error::SourceMismatch);
    }
    let nf = g1.target();
    if !is_normal_form(&c.completed, &nf) || !is_normal_form(&c.completed, &g2.target()) {
        return Err(Error::NotNormalForm);
    }
    if nf != g2.target() {
        return Err(Error::NonConvergent);
    }
    let cell = zigzag_rec(c, f, g1, g2)?;
    let expected = Shell::from_edges(
        f.clone(),
        ZigZag::identity(nf),
        ZigZag::from(g1.clone()),
        ZigZag::from(g2.clone()),
    );
    expect_faces(cell, &expected)
}

fn zigzag_rec(c: &Completion, f: &ZigZag, g1: &Path, g2: &Path) -> Result<CellTerm> {
    let Some((head, tail)) = f.split_sign_run() else {
        if g1.is_empty() && g2.is_empty() {
            return Ok(CellTerm::id2(f.source().clone()));
        }
        let fold = CellTerm::degenerate(Degeneracy::GammaPlus, ZigZag::from(g2.clone()));
        return CellTerm::vertical(fold, fill_square(c, g1, g2)?);
    };
    if !tail.is_empty() {
        let g3 = c.normal_path(&head.target())?;
        let first = zigzag_rec(c, &head, g1, &g3)?;
        let second = zigzag_rec(c, &tail, &g3, g2)?;
        return CellTerm::horizontal(first, second);
    }
    match head.to_path() {
        Some(path) => {
            let extension = CellTerm::horizontal(
                CellTerm::degenerate(Degeneracy::Eps1, head.clone()),
                CellTerm::degenerate(Degeneracy::GammaPlus, ZigZag::from(g2.clone())),
            )?;
            let below = fill_square(c, g1, &path.then(g2)?)?;
            CellTerm::vertical(extension, below)
        }
        None => {
            let flipped = zigzag_rec(c, &head.inverse(), g2, g1)?;
            CellTerm::rotate(Rotation::S2, flipped, Regime::ThreeOne)
        }
    }
}

/// A filler for an arbitrary shell of zig-zags.
///
/// Each edge is first folded onto the normal form with [`fill_zigzag`]; the
/// four pieces are then oriented with T, S₁ and S₂ and pasted with
/// connections into a single square.
pub fn fill_shell(c: &Completion, s: &Shell) -> Result<CellTerm> {
    if !crate::cube::check_shell(s) {
        return Err(Error::CornerMismatch);
    }
    if s.edges().iter().all(|e| e.is_empty()) {
        return Ok(CellTerm::id2(s.top_left().clone()));
    }
    let n_tl = c.normal_path(s.top_left())?;
    let n_tr = c.normal_path(&s.top_right())?;
    let n_bl = c.normal_path(s.bottom_left())?;
    let n_br = c.normal_path(&s.bottom_right())?;
    let nf = n_tl.target();
    if [&n_tr, &n_bl, &n_br].iter().any(|n| n.target() != nf) {
        return Err(Error::NonConvergent);
    }
    let regime = Regime::ThreeOne;

    let top = fill_zigzag(c, &s.top, &n_tl, &n_tr)?;
    let bottom = fill_zigzag(c, &s.bottom, &n_bl, &n_br)?;
    let middle = CellTerm::vertical(top, CellTerm::rotate(Rotation::S1, bottom, regime)?)?;

    // A cell with identity top and bottom, `edge` on the left and
    // `upper ⋆ lower⁻¹` on the right.
    let side = |edge: &ZigZag, upper: &Path, lower: &Path| -> Result<CellTerm> {
        let folded = fill_zigzag(c, edge, upper, lower)?;
        let cap = CellTerm::degenerate(Degeneracy::GammaPlus, ZigZag::from(upper.clone()));
        let cup = CellTerm::rotate(
            Rotation::S1,
            CellTerm::degenerate(Degeneracy::GammaPlus, ZigZag::from(lower.clone())),
            regime,
        )?;
        let column = CellTerm::vertical(cap, CellTerm::rotate(Rotation::T, folded, regime)?)?;
        CellTerm::vertical(column, cup)
    };
    let left = side(&s.left, &n_tl, &n_bl)?;
    let right = CellTerm::rotate(Rotation::S2, side(&s.right, &n_tr, &n_br)?, regime)?;

    let cell = CellTerm::horizontal(CellTerm::horizontal(left, middle)?, right)?;
    expect_faces(cell, s)
}
