//! Cubical 2-cells as syntax trees with face semantics.
//!
//! A [`CellTerm`] is built only through smart constructors that check the
//! composability of faces, so every term has a well-defined [`Shell`]. The
//! shell of each node is computed once, by structural recursion, when the
//! node is built. Equality of cells is never decided beyond syntax; two
//! cells are interchangeable for every purpose here exactly when their
//! shells agree.

use alloc::sync::Arc;
use core::fmt;

use crate::error::{Error, Result};
use crate::polygraph::{Regime, SquareGen};
use crate::rewrite::{zigzag_product, ZigZag};
use crate::word::Word;

/// The boundary of a square.
///
/// ```text
///   TL ──top──▶ TR
///   │left       │right
///   ▼           ▼
///   BL ─bottom─▶ BR
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Shell {
    pub top: ZigZag,
    pub bottom: ZigZag,
    pub left: ZigZag,
    pub right: ZigZag,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Face {
    Top,
    Bottom,
    Left,
    Right,
}

impl Face {
    pub const ALL: [Face; 4] = [Face::Top, Face::Bottom, Face::Left, Face::Right];
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Face::Top => "top",
            Face::Bottom => "bottom",
            Face::Left => "left",
            Face::Right => "right",
        })
    }
}

impl Shell {
    /// Assembles four edges without checking the corners.
    pub fn from_edges(top: ZigZag, bottom: ZigZag, left: ZigZag, right: ZigZag) -> Self {
        Shell { top, bottom, left, right }
    }

    pub fn new(top: ZigZag, bottom: ZigZag, left: ZigZag, right: ZigZag) -> Result<Self> {
        let shell = Shell { top, bottom, left, right };
        if check_shell(&shell) {
            Ok(shell)
        } else {
            Err(Error::CornerMismatch)
        }
    }

    /// The shell of an identity square at `w`.
    pub fn identity(w: Word) -> Self {
        let id = ZigZag::identity(w);
        Shell { top: id.clone(), bottom: id.clone(), left: id.clone(), right: id }
    }

    pub fn edge(&self, face: Face) -> &ZigZag {
        match face {
            Face::Top => &self.top,
            Face::Bottom => &self.bottom,
            Face::Left => &self.left,
            Face::Right => &self.right,
        }
    }

    pub fn edge_mut(&mut self, face: Face) -> &mut ZigZag {
        match face {
            Face::Top => &mut self.top,
            Face::Bottom => &mut self.bottom,
            Face::Left => &mut self.left,
            Face::Right => &mut self.right,
        }
    }

    /// Edges in the order top, bottom, left, right.
    pub fn edges(&self) -> [&ZigZag; 4] {
        [&self.top, &self.bottom, &self.left, &self.right]
    }

    pub fn top_left(&self) -> &Word {
        self.top.source()
    }

    pub fn top_right(&self) -> Word {
        self.top.target()
    }

    pub fn bottom_left(&self) -> &Word {
        self.bottom.source()
    }

    pub fn bottom_right(&self) -> Word {
        self.bottom.target()
    }

    /// Reflection across the main diagonal.
    pub fn transpose(&self) -> Shell {
        Shell {
            top: self.left.clone(),
            bottom: self.right.clone(),
            left: self.top.clone(),
            right: self.bottom.clone(),
        }
    }

    pub fn is_positive(&self) -> bool {
        self.edges().iter().all(|e| e.is_positive())
    }
}

/// The corner conditions `∂^α ∂₂^β = ∂^β ∂₁^α`.
pub fn check_shell(s: &Shell) -> bool {
    s.top.source() == s.left.source()
        && s.top.target() == *s.right.source()
        && s.left.target() == *s.bottom.source()
        && s.bottom.target() == s.right.target()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Degeneracy {
    /// Constant in direction 1: top = bottom = f.
    Eps1,
    /// Constant in direction 2: left = right = f.
    Eps2,
    /// Connection with top = left = f.
    GammaMinus,
    /// Connection with right = bottom = f.
    GammaPlus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    /// `⋆₁`: first cell above the second.
    Vertical,
    /// `⋆₂`: first cell left of the second.
    Horizontal,
    /// The monoid product.
    Product,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Vertical => "vertical",
            Direction::Horizontal => "horizontal",
            Direction::Product => "product",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rotation {
    /// Transposition.
    T,
    /// Vertical inverse.
    S1,
    /// Horizontal inverse.
    S2,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CellKind {
    Gen(Arc<SquareGen>),
    Degenerate(Degeneracy, ZigZag),
    Id2(Word),
    Comp(Direction, CellTerm, CellTerm),
    Rotate(Rotation, CellTerm),
}

#[derive(Debug, PartialEq, Eq)]
struct CellNode {
    kind: CellKind,
    shell: Shell,
}

/// An immutable, cheaply clonable 2-cell term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellTerm(Arc<CellNode>);

impl CellTerm {
    fn node(kind: CellKind, shell: Shell) -> Self {
        CellTerm(Arc::new(CellNode { kind, shell }))
    }

    pub fn generator(square: Arc<SquareGen>) -> Result<Self> {
        if !check_shell(&square.shell) {
            return Err(Error::CornerMismatch);
        }
        let shell = square.shell.clone();
        Ok(Self::node(CellKind::Gen(square), shell))
    }

    pub fn degenerate(kind: Degeneracy, edge: ZigZag) -> Self {
        let id_source = || ZigZag::identity(edge.source().clone());
        let id_target = || ZigZag::identity(edge.target());
        let shell = match kind {
            Degeneracy::Eps1 => Shell {
                top: edge.clone(),
                bottom: edge.clone(),
                left: id_source(),
                right: id_target(),
            },
            Degeneracy::Eps2 => Shell {
                top: id_source(),
                bottom: id_target(),
                left: edge.clone(),
                right: edge.clone(),
            },
            Degeneracy::GammaMinus => Shell {
                top: edge.clone(),
                bottom: id_target(),
                left: edge.clone(),
                right: id_target(),
            },
            Degeneracy::GammaPlus => Shell {
                top: id_source(),
                bottom: edge.clone(),
                left: id_source(),
                right: edge.clone(),
            },
        };
        Self::node(CellKind::Degenerate(kind, edge), shell)
    }

    pub fn id2(w: Word) -> Self {
        let shell = Shell::identity(w.clone());
        Self::node(CellKind::Id2(w), shell)
    }

    pub fn compose(direction: Direction, a: CellTerm, b: CellTerm) -> Result<Self> {
        let (s, t) = (a.faces(), b.faces());
        let mismatch = |first, second| Error::FaceMismatch { direction, first, second };
        let shell = match direction {
            Direction::Vertical => {
                if s.bottom != t.top {
                    return Err(mismatch(Face::Bottom, Face::Top));
                }
                Shell {
                    top: s.top.clone(),
                    bottom: t.bottom.clone(),
                    left: s.left.compose(&t.left)?,
                    right: s.right.compose(&t.right)?,
                }
            }
            Direction::Horizontal => {
                if s.right != t.left {
                    return Err(mismatch(Face::Right, Face::Left));
                }
                Shell {
                    top: s.top.compose(&t.top)?,
                    bottom: s.bottom.compose(&t.bottom)?,
                    left: s.left.clone(),
                    right: t.right.clone(),
                }
            }
            Direction::Product => Shell {
                top: zigzag_product(&s.top, &t.top),
                bottom: zigzag_product(&s.bottom, &t.bottom),
                left: zigzag_product(&s.left, &t.left),
                right: zigzag_product(&s.right, &t.right),
            },
        };
        Ok(Self::node(CellKind::Comp(direction, a, b), shell))
    }

    pub fn vertical(a: CellTerm, b: CellTerm) -> Result<Self> {
        Self::compose(Direction::Vertical, a, b)
    }

    pub fn horizontal(a: CellTerm, b: CellTerm) -> Result<Self> {
        Self::compose(Direction::Horizontal, a, b)
    }

    pub fn product(a: CellTerm, b: CellTerm) -> Self {
        Self::compose(Direction::Product, a, b).expect("products are always defined")
    }

    /// `u · c · v`, omitting empty contexts.
    pub fn whisker(left: &Word, c: CellTerm, right: &Word) -> Self {
        let mut cell = c;
        if !right.is_empty() {
            cell = Self::product(cell, Self::id2(right.clone()));
        }
        if !left.is_empty() {
            cell = Self::product(Self::id2(left.clone()), cell);
        }
        cell
    }

    /// Applies a rotation, cancelling it against an identical one directly
    /// beneath. S-rotations need the (3,1) regime.
    pub fn rotate(kind: Rotation, c: CellTerm, regime: Regime) -> Result<Self> {
        if kind != Rotation::T && !regime.allows_inverses() {
            return Err(Error::RegimeViolation);
        }
        if let CellKind::Rotate(inner, child) = c.kind() {
            if *inner == kind {
                return Ok(child.clone());
            }
        }
        let s = c.faces();
        let shell = match kind {
            Rotation::T => s.transpose(),
            Rotation::S1 => Shell {
                top: s.bottom.clone(),
                bottom: s.top.clone(),
                left: s.left.inverse(),
                right: s.right.inverse(),
            },
            Rotation::S2 => Shell {
                top: s.top.inverse(),
                bottom: s.bottom.inverse(),
                left: s.right.clone(),
                right: s.left.clone(),
            },
        };
        Ok(Self::node(CellKind::Rotate(kind, c), shell))
    }

    pub fn kind(&self) -> &CellKind {
        &self.0.kind
    }

    pub fn faces(&self) -> &Shell {
        &self.0.shell
    }

    /// Number of nodes, counting shared subterms once per occurrence.
    pub fn size(&self) -> usize {
        match self.kind() {
            CellKind::Comp(_, a, b) => 1 + a.size() + b.size(),
            CellKind::Rotate(_, a) => 1 + a.size(),
            _ => 1,
        }
    }
}

pub fn faces(c: &CellTerm) -> Shell {
    c.faces().clone()
}

/// The first face of `c` that differs from `s`, if any.
pub fn face_mismatch(c: &CellTerm, s: &Shell) -> Option<Face> {
    Face::ALL.into_iter().find(|&face| c.faces().edge(face) != s.edge(face))
}

pub fn validate_filler(c: &CellTerm, s: &Shell) -> bool {
    face_mismatch(c, s).is_none()
}
