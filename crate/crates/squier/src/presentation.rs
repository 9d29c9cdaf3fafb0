//! The `.cp` presentation file.
//!
//! ```text
//! # comments run to the end of the line
//! [generators]
//! a b
//! [rules]
//! s: b a -> a b
//! [squares]
//! A0: top=... left=... right=... bottom=...
//! [precedence]
//! b a
//! [regime]
//! 3,2
//! ```
//!
//! Sections may appear in any order and content may follow a header on the
//! same line. `[precedence]` lists generators from greatest to least. When
//! `[regime]` is absent it is inferred: no squares gives `2`, only positive
//! square edges give `3,2`, anything else `3,1`.

use std::collections::HashMap;

use squier_core::{validate_polygraph, Polygraph, Precedence, Regime, SquareGen, Violation};

use crate::error::{FormatError, ParseError};
use crate::format::{parse_shell_at, parse_word, write_shell, write_word};

/// A parsed presentation file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub polygraph: Polygraph,
    pub precedence: Option<Precedence>,
    pub warnings: Vec<Violation>,
}

impl Presentation {
    /// The declared precedence, or later-declared generators greater.
    pub fn precedence_or_default(&self) -> Precedence {
        self.precedence.clone().unwrap_or_else(|| Precedence::reverse_declaration(&self.polygraph))
    }
}

pub fn parse_regime(text: &str) -> Option<Regime> {
    match text {
        "2" => Some(Regime::TwoPolygraph),
        "3,2" => Some(Regime::ThreeTwo),
        "3,1" => Some(Regime::ThreeOne),
        _ => None,
    }
}

fn inferred_regime(squares: &[std::sync::Arc<SquareGen>]) -> Regime {
    if squares.is_empty() {
        Regime::TwoPolygraph
    } else if squares.iter().all(|s| s.shell.is_positive()) {
        Regime::ThreeTwo
    } else {
        Regime::ThreeOne
    }
}

/// A non-empty piece of section content: 1-based line, 0-based column.
struct Entry<'a> {
    line: usize,
    column: usize,
    text: &'a str,
}

impl Entry<'_> {
    fn error(&self, offset: usize, message: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            line: self.line,
            column: self.column + offset + 1,
            message: message.into(),
        }
    }

    fn lift(&self, offset: usize, e: FormatError) -> ParseError {
        ParseError::at_line(self.line, self.column + offset, e)
    }

    fn tokens(&self) -> impl Iterator<Item = (usize, &str)> {
        let base = self.text.as_ptr() as usize;
        self.text.split_whitespace().map(move |t| (t.as_ptr() as usize - base, t))
    }
}

const SECTIONS: [&str; 5] = ["generators", "rules", "squares", "precedence", "regime"];

pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    let mut sections: HashMap<&str, Vec<Entry>> = HashMap::new();
    let mut current: Option<&str> = None;

    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = raw.split('#').next().unwrap_or_default();
        let indent = content.len() - content.trim_start().len();
        let mut body = content.trim_start();
        let mut column = indent;
        if let Some(rest) = body.strip_prefix('[') {
            let close = rest.find(']').ok_or(ParseError::Syntax {
                line,
                column: column + 1,
                message: "unterminated section header".to_owned(),
            })?;
            let name = rest[..close].trim();
            if !SECTIONS.contains(&name) {
                return Err(ParseError::Syntax {
                    line,
                    column: column + 2,
                    message: format!("unknown section `[{name}]`"),
                });
            }
            if sections.contains_key(name) {
                return Err(ParseError::Syntax {
                    line,
                    column: column + 1,
                    message: format!("section `[{name}]` appears twice"),
                });
            }
            sections.insert(name, Vec::new());
            current = Some(name);
            column += close + 2;
            body = &body[close + 2..];
        }
        if body.trim().is_empty() {
            continue;
        }
        let Some(section) = current else {
            return Err(ParseError::Syntax {
                line,
                column: column + 1,
                message: "content before the first section header".to_owned(),
            });
        };
        sections.entry(section).or_default().push(Entry { line, column, text: body });
    }

    let mut p = Polygraph::new(Regime::TwoPolygraph);
    let mut declared_at: HashMap<String, usize> = HashMap::new();
    let empty = Vec::new();
    let section = |name: &str| sections.get(name).unwrap_or(&empty);

    for entry in section("generators") {
        for (offset, name) in entry.tokens() {
            if declared_at.contains_key(name) {
                return Err(entry.error(offset, format!("duplicate name `{name}`")));
            }
            if !squier_core::polygraph::is_valid_name(name) {
                return Err(entry.error(offset, format!("invalid generator name `{name}`")));
            }
            declared_at.insert(name.to_owned(), entry.line);
            p.add_generator(name);
        }
    }

    for entry in section("rules") {
        let (name, rest) = split_named(entry)?;
        let arrow = rest
            .find("->")
            .ok_or_else(|| entry.error(offset(entry, rest), "expected `lhs -> rhs`"))?;
        let lhs_text = &rest[..arrow];
        let rhs_text = &rest[arrow + 2..];
        let lhs = parse_word(&p, lhs_text).map_err(|e| entry.lift(offset(entry, lhs_text), e))?;
        let rhs = parse_word(&p, rhs_text).map_err(|e| entry.lift(offset(entry, rhs_text), e))?;
        declared_at.entry(name.to_owned()).or_insert(entry.line);
        p.add_rule(name, lhs, rhs);
    }

    for entry in section("squares") {
        let (name, rest) = split_named(entry)?;
        let shell = parse_shell_at(&p, rest, 0).map_err(|e| entry.lift(offset(entry, rest), e))?;
        declared_at.entry(name.to_owned()).or_insert(entry.line);
        p.add_square(name, shell);
    }

    let mut precedence = None;
    if sections.contains_key("precedence") {
        let mut order = Vec::new();
        let mut line = 0;
        for entry in section("precedence") {
            line = entry.line;
            for (offset, name) in entry.tokens() {
                let letter = p
                    .generator(name)
                    .ok_or_else(|| entry.error(offset, format!("unknown generator `{name}`")))?;
                order.push(letter);
            }
        }
        let order = Precedence::new(order);
        if !order.is_total_for(&p) {
            return Err(ParseError::Invalid {
                line,
                message: "precedence must list every generator exactly once".to_owned(),
            });
        }
        precedence = Some(order);
    }

    let regime = match section("regime").as_slice() {
        [] => inferred_regime(p.squares()),
        [entry] => {
            let text = entry.text.trim();
            parse_regime(text).ok_or_else(|| {
                entry.error(
                    offset(entry, text),
                    format!("unknown regime `{text}` (expected 2, 3,2 or 3,1)"),
                )
            })?
        }
        [_, extra, ..] => return Err(extra.error(0, "the regime takes a single value")),
    };
    p.set_regime(regime);

    let report = validate_polygraph(&p);
    if let Some(first) = report.violations.first() {
        let line = declared_at.get(&first.subject).copied().unwrap_or(0);
        let message: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
        return Err(ParseError::Invalid { line, message: message.join("; ") });
    }
    Ok(Presentation { polygraph: p, precedence, warnings: report.warnings })
}

fn offset(entry: &Entry, part: &str) -> usize {
    part.as_ptr() as usize - entry.text.as_ptr() as usize
}

fn split_named<'a>(entry: &Entry<'a>) -> Result<(&'a str, &'a str), ParseError> {
    let (name, rest) =
        entry.text.split_once(':').ok_or_else(|| entry.error(0, "expected `name: ...`"))?;
    let name = name.trim();
    if !squier_core::polygraph::is_valid_name(name) {
        return Err(entry.error(0, format!("invalid name `{name}`")));
    }
    Ok((name, rest))
}

pub fn write_presentation(p: &Polygraph, precedence: Option<&Precedence>) -> String {
    let mut out = String::from("[generators]\n");
    let names: Vec<&str> = p.generators().iter().map(|g| g.name.as_str()).collect();
    out.push_str(&names.join(" "));
    out.push('\n');

    out.push_str("[rules]\n");
    for rule in p.rules() {
        out.push_str(&format!(
            "{}: {} -> {}\n",
            rule.name,
            write_word(p, &rule.lhs),
            write_word(p, &rule.rhs)
        ));
    }

    if !p.squares().is_empty() {
        out.push_str("[squares]\n");
        for square in p.squares() {
            out.push_str(&format!("{}: {}\n", square.name, write_shell(p, &square.shell)));
        }
    }

    if let Some(order) = precedence {
        let names: Vec<&str> =
            order.greatest_first().iter().map(|&l| p.generator_name(l).unwrap_or("?")).collect();
        out.push_str("[precedence]\n");
        out.push_str(&names.join(" "));
        out.push('\n');
    }

    if inferred_regime(p.squares()) != p.regime() {
        out.push_str(&format!("[regime]\n{}\n", p.regime()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const K1: &str = "[generators]\na\n[rules]\nr: a a -> a\n";

    #[test]
    fn parses_and_round_trips() {
        let pres = parse_presentation(K1).unwrap();
        assert_eq!(pres.polygraph.rules().len(), 1);
        assert_eq!(pres.polygraph.regime(), Regime::TwoPolygraph);
        assert_eq!(write_presentation(&pres.polygraph, None), K1);
    }

    #[test]
    fn header_content_and_comments() {
        let text = "# k2\n[generators] a b # letters\n[rules] s: b a -> a b\n[precedence] b a\n";
        let pres = parse_presentation(text).unwrap();
        assert_eq!(pres.polygraph.generators().len(), 2);
        assert_eq!(pres.polygraph.rule("s").unwrap().lhs.len(), 2);
        let order = pres.precedence.clone().unwrap();
        let again = parse_presentation(&write_presentation(&pres.polygraph, Some(&order))).unwrap();
        assert_eq!(again, pres);
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse_presentation("[generators]\na\n[rules]\nr: a b -> a\n").unwrap_err();
        assert_eq!(
            err,
            ParseError::Syntax { line: 4, column: 6, message: "unknown generator `b`".to_owned() }
        );
        let err = parse_presentation("[generators]\na\n[rules]\nr: 1 -> a\n").unwrap_err();
        assert!(
            matches!(&err, ParseError::Invalid { line: 4, message } if message.contains("empty left-hand side")),
            "{err}"
        );
        assert!(parse_presentation("a\n[generators]\n").is_err());
        assert!(parse_presentation("[generators]\na a\n").is_err());
        assert!(parse_presentation("[generators]\na\n[rules]\nr a a -> a\n").is_err());
        assert!(parse_presentation("[generators]\na b\n[precedence]\na\n").is_err());
        assert!(parse_presentation("[generators]\na\n[regime]\n4\n").is_err());
        assert!(parse_presentation("[stuff]\n").is_err());
    }

    #[test]
    fn squares_and_regimes() {
        let text = "[generators]\na\n[rules]\nr: a a -> a\n[squares]\n\
            A0: top=a a a ; 1 | r | a left=a a a ; a | r | 1 right=a a ; 1 | r | 1 bottom=a a ; 1 | r | 1\n";
        let pres = parse_presentation(text).unwrap();
        assert_eq!(pres.polygraph.regime(), Regime::ThreeTwo);
        assert_eq!(write_presentation(&pres.polygraph, None), text);

        let mut p = pres.polygraph.clone();
        p.set_regime(Regime::ThreeOne);
        let written = write_presentation(&p, None);
        assert!(written.ends_with("[regime]\n3,1\n"));
        assert_eq!(parse_presentation(&written).unwrap().polygraph, p);

        let bad = text.replace("bottom=a a ; 1 | r | 1", "bottom=a a");
        let err = parse_presentation(&bad).unwrap_err();
        assert!(err.to_string().contains("shell corner mismatch"), "{err}");
        let mut two = text.to_owned();
        two.push_str("[regime]\n2\n");
        assert!(parse_presentation(&two).is_err());
    }
}
