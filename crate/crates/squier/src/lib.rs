//! Text formats, certificate files and the command line for `squier-core`.

pub mod cert;
pub mod cli;
pub mod error;
pub mod format;
pub mod presentation;

pub use cert::{check_certificate, parse_certificate, write_certificate, Certificate};
pub use error::{CliError, FormatError, ParseError};
pub use presentation::{parse_presentation, write_presentation, Presentation};
pub use squier_core as core;
