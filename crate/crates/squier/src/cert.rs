//! Filler certificates.
//!
//! A certificate file holds the target shell on a `shell` line, then the
//! cell term on one line. Checking only recomputes faces, so it trusts
//! nothing produced by the synthesizer.

use squier_core::cube::face_mismatch;
use squier_core::{CellTerm, Face, Polygraph, Regime, Shell};

use crate::error::ParseError;
use crate::format::{parse_cell, parse_shell, write_cell, write_shell};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub shell: Shell,
    pub cell: CellTerm,
}

pub fn write_certificate(p: &Polygraph, shell: &Shell, cell: &CellTerm) -> String {
    format!("shell {}\n{}\n", write_shell(p, shell), write_cell(p, cell))
}

/// Cells are rebuilt in the (3,1) regime, where every rotation is defined.
pub fn parse_certificate(p: &Polygraph, text: &str) -> Result<Certificate, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let Some((line, header)) = lines.next() else {
        return Err(ParseError::Syntax {
            line: 1,
            column: 1,
            message: "empty certificate".to_owned(),
        });
    };
    let Some(fields) = header.strip_prefix("shell ") else {
        return Err(ParseError::Syntax {
            line,
            column: 1,
            message: "expected `shell top=...`".to_owned(),
        });
    };
    let shell = parse_shell(p, fields).map_err(|e| ParseError::at_line(line, 6, e))?;
    let Some((line, body)) = lines.next() else {
        return Err(ParseError::Syntax {
            line: line + 1,
            column: 1,
            message: "missing cell term".to_owned(),
        });
    };
    let cell =
        parse_cell(p, body, Regime::ThreeOne).map_err(|e| ParseError::at_line(line, 0, e))?;
    if let Some((line, _)) = lines.next() {
        return Err(ParseError::Syntax {
            line,
            column: 1,
            message: "unexpected content after the cell term".to_owned(),
        });
    }
    Ok(Certificate { shell, cell })
}

/// First face on which the certificate disagrees with `target`, checking the
/// cell's computed boundary before the recorded header.
pub fn check_certificate(target: &Shell, cert: &Certificate) -> Result<(), Face> {
    if let Some(face) = face_mismatch(&cert.cell, target) {
        return Err(face);
    }
    match Face::ALL.into_iter().find(|&f| cert.shell.edge(f) != target.edge(f)) {
        Some(face) => Err(face),
        None => Ok(()),
    }
}

/// Parses a certificate and checks it; ill-typed compositions count as a
/// rejection on the face the core reports.
pub fn verify_certificate_text(
    p: &Polygraph,
    target: &Shell,
    text: &str,
) -> Result<(), CheckFailure> {
    let cert = match parse_certificate(p, text) {
        Ok(cert) => cert,
        Err(ParseError::Cell { error: squier_core::Error::FaceMismatch { first, .. }, .. }) => {
            return Err(CheckFailure::Rejected(first))
        }
        Err(e) => return Err(CheckFailure::Malformed(e)),
    };
    check_certificate(target, &cert).map_err(CheckFailure::Rejected)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckFailure {
    Rejected(Face),
    Malformed(ParseError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use squier_core::{Degeneracy, Word, ZigZag};

    fn k1() -> Polygraph {
        crate::presentation::parse_presentation("[generators]\na\n[rules]\nr: a a -> a\n")
            .unwrap()
            .polygraph
    }

    #[test]
    fn round_trip_and_check() {
        let p = k1();
        let edge = crate::format::parse_zigzag(&p, "a a ; 1 | r | 1").unwrap();
        let cell = CellTerm::degenerate(Degeneracy::GammaMinus, edge);
        let shell = cell.faces().clone();
        let text = write_certificate(&p, &shell, &cell);
        let cert = parse_certificate(&p, &text).unwrap();
        assert_eq!(cert, Certificate { shell: shell.clone(), cell });
        assert_eq!(check_certificate(&shell, &cert), Ok(()));

        let mut wrong = shell.clone();
        wrong.top = ZigZag::identity(Word::from_letters([p.generator("a").unwrap(); 2]));
        assert_eq!(check_certificate(&wrong, &cert), Err(Face::Top));
        assert_eq!(
            verify_certificate_text(&p, &wrong, &text),
            Err(CheckFailure::Rejected(Face::Top))
        );
    }

    #[test]
    fn malformed_certificates() {
        let p = k1();
        let shell = Shell::identity(Word::empty());
        assert!(matches!(verify_certificate_text(&p, &shell, ""), Err(CheckFailure::Malformed(_))));
        assert!(matches!(
            verify_certificate_text(
                &p,
                &shell,
                "shell top=1 left=1 right=1 bottom=1\n(id2 1) (id2 1)\n"
            ),
            Err(CheckFailure::Malformed(_))
        ));
        let ill_typed =
            "shell top=1 left=1 right=1 bottom=1\n(v (e1 a a ; 1 | r | 1) (e2 a a ; 1 | r | 1))\n";
        assert!(matches!(
            verify_certificate_text(&p, &shell, ill_typed),
            Err(CheckFailure::Rejected(_))
        ));
    }
}
