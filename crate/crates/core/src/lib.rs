//! Cubical coherence for string rewriting systems.
//!
//! The crate models a monoid presentation as a cubical polygraph: letters
//! (0-cells), rules (1-cells between words) and square generators (2-cells
//! bounded by four rewriting paths). On top of the data model it provides a
//! rewriting engine, critical branching enumeration, a term algebra of
//! cubical 2-cells with face semantics, and a synthesizer that builds an
//! explicit filler for any shell of zig-zags once every critical branching is
//! covered by a square.
//!
//! Everything here is pure computation over `alloc` collections. Text formats,
//! files and the command line live in the `squier` crate.

#![no_std]
#![warn(missing_debug_implementations)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod branching;
pub mod cube;
pub mod error;
pub mod polygraph;
pub mod rewrite;
pub mod squier;
pub mod word;

pub use branching::{classify_branching, critical_branchings, Branching, BranchingKind};
pub use cube::{
    check_shell, faces, validate_filler, CellKind, CellTerm, Degeneracy, Direction, Face, Rotation,
    Shell,
};
pub use error::{Error, Result};
pub use polygraph::{
    validate_polygraph, Generator0, Polygraph, Regime, Rule, RuleId, SquareGen, ValidationReport,
    Violation, ViolationKind,
};
pub use rewrite::{
    applicable_steps, apply_step, inverse_applicable_steps, normalize, path_product,
    verify_termination_order, zigzag_product, Path, Precedence, RewriteStep, Sign, SignedStep,
    Strategy, ZigZag, DEFAULT_FUEL,
};
pub use squier::{
    fill_shell, fill_square, fill_zigzag, local_filler, squier_completion, Completion,
};
pub use word::{concat, find_occurrences, overlaps, Letter, Overlap, OverlapKind, Word};
