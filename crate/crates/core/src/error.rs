use core::fmt;

use crate::cube::{Direction, Face};

/// Failures raised by the rewriting engine, the cell algebra and the filler
/// synthesizer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A search pattern (or rule left-hand side) was the empty word.
    EmptyPattern,
    /// Consecutive 1-cells do not share an endpoint.
    EndpointMismatch { position: usize },
    /// Two steps of a branching do not start at the same word.
    SourceMismatch,
    /// Normalization or a filler recursion ran out of fuel.
    FuelExhausted { fuel: usize },
    /// Composition of two cells whose shared edges differ.
    FaceMismatch { direction: Direction, first: Face, second: Face },
    /// A family of four edges violates the corner conditions of a shell.
    CornerMismatch,
    /// A groupoid-only operation was requested outside the (3,1) regime.
    RegimeViolation,
    /// A 1-cell that must end at a normal form does not.
    NotNormalForm,
    /// Two corners of a shell normalize to different words.
    NonConvergent,
    /// An overlapping branching has no covering square generator.
    IncompleteSquares { superposition_len: usize },
    /// The presentation is not certified terminating by the given order.
    TerminationUnverified,
    /// The presentation failed structural validation.
    InvalidPolygraph,
    /// A synthesized cell does not have the requested boundary.
    FillerRejected { face: Face },
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyPattern => write!(f, "empty left-hand side"),
            Error::EndpointMismatch { position } => {
                write!(f, "endpoint mismatch at step {position}")
            }
            Error::SourceMismatch => write!(f, "branching steps have different sources"),
            Error::FuelExhausted { fuel } => {
                write!(f, "fuel exhausted after {fuel} steps (possible non-termination)")
            }
            Error::FaceMismatch { direction, first, second } => write!(
                f,
                "face mismatch in {direction} composition: {first} of first cell differs from {second} of second"
            ),
            Error::CornerMismatch => write!(f, "shell corner mismatch"),
            Error::RegimeViolation => {
                write!(f, "S-rotation requires the (3,1) regime")
            }
            Error::NotNormalForm => write!(f, "path does not end at a normal form"),
            Error::NonConvergent => {
                write!(f, "shell corners reach different normal forms (non-convergent)")
            }
            Error::IncompleteSquares { superposition_len } => write!(
                f,
                "incomplete Σ₂: no square covers the critical branching on a word of length {superposition_len}"
            ),
            Error::TerminationUnverified => {
                write!(f, "termination not certified by the shortlex order")
            }
            Error::InvalidPolygraph => write!(f, "polygraph failed validation"),
            Error::FillerRejected { face } => write!(f, "face mismatch: {face}"),
        }
    }
}

impl core::error::Error for Error {}
