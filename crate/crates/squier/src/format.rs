//! Line-level text syntax for words, steps, zig-zags, shells and cell terms.
//!
//! Words are whitespace-separated generator names, with `1` for the empty
//! word. A step is `u | rule | v`. A path is its source word followed by
//! `; step` for each step; zig-zags prefix each step with `+` or `-` unless
//! every step is positive. Cell terms are prefix expressions such as
//! `(v (gen A0) (e1 a a ; 1 | r | 1))`.

use std::fmt::Write as _;

use squier_core::{
    CellKind, CellTerm, Degeneracy, Direction, Path, Polygraph, Regime, RewriteStep, Rotation,
    Shell, Sign, SignedStep, Word, ZigZag,
};

use crate::error::FormatError;

type Result<T> = std::result::Result<T, FormatError>;

fn syntax(column: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { column, message: message.into() }
}

/// Byte offset of `part` inside `whole`; both must come from the same buffer.
fn offset_in(whole: &str, part: &str) -> usize {
    (part.as_ptr() as usize).saturating_sub(whole.as_ptr() as usize)
}

pub fn write_word(p: &Polygraph, w: &Word) -> String {
    if w.is_empty() {
        return "1".to_owned();
    }
    let names: Vec<&str> =
        w.letters().iter().map(|&l| p.generator_name(l).unwrap_or("?")).collect();
    names.join(" ")
}

pub fn parse_word(p: &Polygraph, text: &str) -> Result<Word> {
    parse_word_at(p, text, 0)
}

fn parse_word_at(p: &Polygraph, text: &str, base: usize) -> Result<Word> {
    if text.trim().is_empty() {
        return Err(syntax(base, "expected a word (use `1` for the empty word)"));
    }
    let mut letters = Vec::new();
    for token in text.split_whitespace() {
        if token == "1" {
            continue;
        }
        match p.generator(token) {
            Some(letter) => letters.push(letter),
            None => {
                return Err(syntax(
                    base + offset_in(text, token),
                    format!("unknown generator `{token}`"),
                ))
            }
        }
    }
    Ok(Word::from_letters(letters))
}

pub fn write_step(p: &Polygraph, step: &RewriteStep) -> String {
    format!("{} | {} | {}", write_word(p, &step.left), step.rule.name, write_word(p, &step.right))
}

pub fn parse_step(p: &Polygraph, text: &str) -> Result<RewriteStep> {
    parse_step_at(p, text, 0)
}

fn parse_step_at(p: &Polygraph, text: &str, base: usize) -> Result<RewriteStep> {
    let parts: Vec<&str> = text.split('|').collect();
    let [left, rule, right] = parts[..] else {
        return Err(syntax(base, "a step is written `u | rule | v`"));
    };
    let rule_name = rule.trim();
    let rule = p.rule(rule_name).ok_or_else(|| {
        syntax(base + offset_in(text, rule), format!("unknown rule `{rule_name}`"))
    })?;
    Ok(RewriteStep::new(
        parse_word_at(p, left, base)?,
        rule.clone(),
        parse_word_at(p, right, base + offset_in(text, right))?,
    ))
}

pub fn write_zigzag(p: &Polygraph, z: &ZigZag) -> String {
    let signed = !z.is_positive();
    let mut out = write_word(p, z.source());
    for s in z.steps() {
        out.push_str(" ; ");
        if signed {
            out.push_str(match s.sign {
                Sign::Pos => "+ ",
                Sign::Neg => "- ",
            });
        }
        out.push_str(&write_step(p, &s.step));
    }
    out
}

pub fn write_path(p: &Polygraph, path: &Path) -> String {
    write_zigzag(p, &ZigZag::from(path.clone()))
}

/// Parses a zig-zag; unsigned steps are positive. The result is reduced.
pub fn parse_zigzag(p: &Polygraph, text: &str) -> Result<ZigZag> {
    parse_zigzag_at(p, text, 0)
}

fn parse_zigzag_at(p: &Polygraph, text: &str, base: usize) -> Result<ZigZag> {
    let mut segments = text.split(';');
    let head = segments.next().unwrap_or_default();
    let source = parse_word_at(p, head, base)?;
    let mut steps = Vec::new();
    for segment in segments {
        let column = base + offset_in(text, segment);
        let trimmed = segment.trim_start();
        let (sign, body) = match trimmed.chars().next() {
            Some('+') => (Sign::Pos, &trimmed[1..]),
            Some('-') => (Sign::Neg, &trimmed[1..]),
            _ => (Sign::Pos, trimmed),
        };
        let step = parse_step_at(p, body, column)?;
        steps.push(SignedStep { step, sign });
    }
    ZigZag::from_steps(source, steps).map_err(|e| FormatError::Cell { column: base, error: e })
}

pub fn parse_path(p: &Polygraph, text: &str) -> Result<Path> {
    let z = parse_zigzag(p, text)?;
    z.to_path().ok_or_else(|| syntax(0, "expected a path without inverse steps"))
}

const FIELDS: [&str; 4] = ["top", "left", "right", "bottom"];

/// `top=<zigzag> left=<zigzag> right=<zigzag> bottom=<zigzag>`
pub fn write_shell(p: &Polygraph, s: &Shell) -> String {
    format!(
        "top={} left={} right={} bottom={}",
        write_zigzag(p, &s.top),
        write_zigzag(p, &s.left),
        write_zigzag(p, &s.right),
        write_zigzag(p, &s.bottom)
    )
}

/// Parses the four labelled edges in any order, without checking corners.
pub fn parse_shell(p: &Polygraph, text: &str) -> Result<Shell> {
    parse_shell_at(p, text, 0)
}

pub(crate) fn parse_shell_at(p: &Polygraph, text: &str, base: usize) -> Result<Shell> {
    // A field starts at a whitespace-delimited token `name=`.
    let mut starts: Vec<(usize, usize, &str)> = Vec::new();
    let mut at = 0;
    for token in text.split_whitespace() {
        let pos = at + text[at..].find(token).unwrap_or(0);
        at = pos + token.len();
        if let Some((name, _)) = token.split_once('=') {
            if !FIELDS.contains(&name) {
                return Err(syntax(base + pos, format!("unknown shell field `{name}`")));
            }
            starts.push((pos, pos + name.len() + 1, name));
        }
    }
    let mut edges: [Option<ZigZag>; 4] = Default::default();
    for (i, &(pos, value_start, name)) in starts.iter().enumerate() {
        let value_end = starts.get(i + 1).map_or(text.len(), |next| next.0);
        let slot = FIELDS.iter().position(|f| *f == name).unwrap_or_default();
        if edges[slot].is_some() {
            return Err(syntax(base + pos, format!("repeated shell field `{name}`")));
        }
        edges[slot] = Some(parse_zigzag_at(p, &text[value_start..value_end], base + value_start)?);
    }
    let [Some(top), Some(left), Some(right), Some(bottom)] = edges else {
        return Err(syntax(base, "a shell needs top=, left=, right= and bottom="));
    };
    Ok(Shell::from_edges(top, bottom, left, right))
}

/// One labelled edge per line.
pub fn write_shell_file(p: &Polygraph, s: &Shell) -> String {
    format!(
        "top={}\nleft={}\nright={}\nbottom={}\n",
        write_zigzag(p, &s.top),
        write_zigzag(p, &s.left),
        write_zigzag(p, &s.right),
        write_zigzag(p, &s.bottom)
    )
}

pub fn parse_shell_file(p: &Polygraph, text: &str) -> Result<Shell> {
    let joined: Vec<&str> =
        text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).collect();
    parse_shell(p, &joined.join(" "))
}

pub fn write_cell(p: &Polygraph, c: &CellTerm) -> String {
    let mut out = String::new();
    write_cell_into(p, c, &mut out);
    out
}

fn write_cell_into(p: &Polygraph, c: &CellTerm, out: &mut String) {
    match c.kind() {
        CellKind::Gen(square) => {
            let _ = write!(out, "(gen {})", square.name);
        }
        CellKind::Degenerate(kind, edge) => {
            let head = match kind {
                Degeneracy::Eps1 => "e1",
                Degeneracy::Eps2 => "e2",
                Degeneracy::GammaMinus => "g-",
                Degeneracy::GammaPlus => "g+",
            };
            let _ = write!(out, "({head} {})", write_zigzag(p, edge));
        }
        CellKind::Id2(w) => {
            let _ = write!(out, "(id2 {})", write_word(p, w));
        }
        CellKind::Comp(direction, a, b) => {
            let head = match direction {
                Direction::Vertical => "v",
                Direction::Horizontal => "h",
                Direction::Product => "p",
            };
            let _ = write!(out, "({head} ");
            write_cell_into(p, a, out);
            out.push(' ');
            write_cell_into(p, b, out);
            out.push(')');
        }
        CellKind::Rotate(kind, a) => {
            let head = match kind {
                Rotation::T => "T",
                Rotation::S1 => "S1",
                Rotation::S2 => "S2",
            };
            let _ = write!(out, "({head} ");
            write_cell_into(p, a, out);
            out.push(')');
        }
    }
}

/// Parses a cell term, rebuilding it through the checked constructors.
pub fn parse_cell(p: &Polygraph, text: &str, regime: Regime) -> Result<CellTerm> {
    let mut parser = CellParser { p, text, pos: 0, regime };
    let cell = parser.cell()?;
    parser.skip_ws();
    if parser.pos != text.len() {
        return Err(syntax(parser.pos, "trailing input after cell term"));
    }
    Ok(cell)
}

struct CellParser<'a> {
    p: &'a Polygraph,
    text: &'a str,
    pos: usize,
    regime: Regime,
}

impl<'a> CellParser<'a> {
    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.text[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(syntax(self.pos, format!("expected `{c}`")))
        }
    }

    fn head(&mut self) -> &str {
        self.skip_ws();
        let rest = &self.text[self.pos..];
        let len =
            rest.find(|c: char| c.is_whitespace() || c == '(' || c == ')').unwrap_or(rest.len());
        self.pos += len;
        &rest[..len]
    }

    /// Raw text up to the closing parenthesis of the current node.
    fn body(&mut self) -> (usize, &'a str) {
        let start = self.pos;
        let text: &'a str = self.text;
        let rest = &text[start..];
        let len = rest.find(')').unwrap_or(rest.len());
        self.pos += len;
        (start, &rest[..len])
    }

    fn cell(&mut self) -> Result<CellTerm> {
        self.expect('(')?;
        let at = self.pos;
        let built = |error| FormatError::Cell { column: at, error };
        let head = self.head().to_owned();
        let cell = match head.as_str() {
            "v" | "h" | "p" => {
                let a = self.cell()?;
                let b = self.cell()?;
                let direction = match head.as_str() {
                    "v" => Direction::Vertical,
                    "h" => Direction::Horizontal,
                    _ => Direction::Product,
                };
                CellTerm::compose(direction, a, b).map_err(built)?
            }
            "T" | "S1" | "S2" => {
                let kind = match head.as_str() {
                    "T" => Rotation::T,
                    "S1" => Rotation::S1,
                    _ => Rotation::S2,
                };
                let a = self.cell()?;
                CellTerm::rotate(kind, a, self.regime).map_err(built)?
            }
            "e1" | "e2" | "g-" | "g+" => {
                let kind = match head.as_str() {
                    "e1" => Degeneracy::Eps1,
                    "e2" => Degeneracy::Eps2,
                    "g-" => Degeneracy::GammaMinus,
                    _ => Degeneracy::GammaPlus,
                };
                let (start, body) = self.body();
                let edge = parse_zigzag_at(self.p, body, start)?;
                CellTerm::degenerate(kind, edge)
            }
            "id2" => {
                let (start, body) = self.body();
                CellTerm::id2(parse_word_at(self.p, body, start)?)
            }
            "gen" => {
                let name = self.head().to_owned();
                let square = self
                    .p
                    .square(&name)
                    .ok_or_else(|| syntax(at, format!("unknown square generator `{name}`")))?;
                CellTerm::generator(square.clone()).map_err(built)?
            }
            other => return Err(syntax(at, format!("unknown cell constructor `{other}`"))),
        };
        self.expect(')')?;
        Ok(cell)
    }
}
