//! The `squier` command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input or precondition
//! error, 3 fuel exhausted.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path as FsPath, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use squier_core::{
    critical_branchings, fill_shell, normalize, squier_completion, verify_termination_order,
    Completion, Shell, Strategy, DEFAULT_FUEL,
};

use crate::cert::{verify_certificate_text, write_certificate, CheckFailure};
use crate::error::CliError;
use crate::format::{
    parse_shell_file, parse_word, write_path, write_shell, write_step, write_word,
};
use crate::presentation::{parse_presentation, write_presentation, Presentation};

#[derive(Debug, Parser)]
#[command(
    name = "squier",
    version,
    about = "Rewriting, Squier completion and cubical fillers for monoid presentations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Rewrite a word to its normal form.
    Normalize {
        file: PathBuf,
        /// Whitespace-separated generator names; `1` is the empty word.
        word: String,
        #[arg(long, value_enum, default_value_t = StrategyArg::Leftmost)]
        strategy: StrategyArg,
        #[arg(long, default_value_t = DEFAULT_FUEL)]
        fuel: usize,
    },
    /// List the critical branchings.
    Branchings { file: PathBuf },
    /// Add one square per critical branching.
    Complete {
        file: PathBuf,
        /// Output presentation; stdout when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_FUEL)]
        fuel: usize,
    },
    /// Synthesize a certificate filling a shell.
    FillShell {
        file: PathBuf,
        #[arg(long)]
        shell: PathBuf,
        /// Output certificate; stdout when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_FUEL)]
        fuel: usize,
    },
    /// Verify a certificate against a shell by recomputing its faces.
    Check {
        file: PathBuf,
        #[arg(long)]
        shell: PathBuf,
        #[arg(long)]
        cert: PathBuf,
    },
    /// Summarize a presentation.
    Info {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_FUEL)]
        fuel: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StrategyArg {
    Leftmost,
    Rightmost,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Leftmost => Strategy::Leftmost,
            StrategyArg::Rightmost => Strategy::Rightmost,
        }
    }
}

/// Result of one invocation, with everything the process would print.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let mut out = Outcome::default();
    if let Err(e) = execute(cli.command, &mut out) {
        out.code = e.exit_code();
        let _ = writeln!(out.stderr, "error: {e}");
    }
    out
}

fn read(path: &FsPath) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_owned(), source })
}

fn load(path: &FsPath, out: &mut Outcome) -> Result<Presentation, CliError> {
    let pres = parse_presentation(&read(path)?)
        .map_err(|source| CliError::Parse { path: path.to_owned(), source })?;
    for w in &pres.warnings {
        let _ = writeln!(out.stderr, "warning: {w}");
    }
    Ok(pres)
}

fn load_shell(pres: &Presentation, path: &FsPath) -> Result<Shell, CliError> {
    parse_shell_file(&pres.polygraph, &read(path)?)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn emit(output: Option<&FsPath>, text: &str, out: &mut Outcome) -> Result<(), CliError> {
    match output {
        Some(path) => fs::write(path, text)
            .map_err(|source| CliError::Write { path: path.to_owned(), source }),
        None => {
            out.stdout.push_str(text);
            Ok(())
        }
    }
}

fn execute(command: Command, out: &mut Outcome) -> Result<(), CliError> {
    match command {
        Command::Normalize { file, word, strategy, fuel } => {
            let pres = load(&file, out)?;
            let p = &pres.polygraph;
            let w = parse_word(p, &word).map_err(|e| CliError::Input(format!("word: {e}")))?;
            let path = normalize(p, &w, strategy.into(), fuel)?;
            let _ = writeln!(out.stdout, "{}", write_word(p, &path.target()));
            let _ = writeln!(out.stdout, "steps: {}", path.len());
            let _ = writeln!(out.stdout, "path: {}", write_path(p, &path));
        }
        Command::Branchings { file } => {
            let pres = load(&file, out)?;
            let p = &pres.polygraph;
            let crit = critical_branchings(p);
            let _ = writeln!(out.stdout, "critical branchings: {}", crit.len());
            for b in &crit {
                let _ = writeln!(
                    out.stdout,
                    "{}: [{}] [{}]",
                    write_word(p, &b.source()),
                    write_step(p, &b.first),
                    write_step(p, &b.second)
                );
            }
        }
        Command::Complete { file, output, fuel } => {
            let pres = load(&file, out)?;
            let precedence = pres.precedence_or_default();
            let c = squier_completion(&pres.polygraph, &precedence, fuel)?;
            let full = c.polygraph();
            let text = write_presentation(full, pres.precedence.as_ref());
            if output.is_some() {
                let _ = writeln!(out.stdout, "squares added: {}", c.added().len());
                for square in c.added() {
                    let _ = writeln!(
                        out.stdout,
                        "{}: {}",
                        square.name,
                        write_shell(full, &square.shell)
                    );
                }
            }
            emit(output.as_deref(), &text, out)?;
        }
        Command::FillShell { file, shell, output, fuel } => {
            let pres = load(&file, out)?;
            let s = load_shell(&pres, &shell)?;
            let s = Shell::new(s.top, s.bottom, s.left, s.right)?;
            let c = Completion::from_declared(&pres.polygraph, fuel);
            let cell = fill_shell(&c, &s)?;
            let text = write_certificate(&pres.polygraph, &s, &cell);
            if output.is_some() {
                let _ = writeln!(out.stdout, "certificate: {} nodes", cell.size());
            }
            emit(output.as_deref(), &text, out)?;
        }
        Command::Check { file, shell, cert } => {
            let pres = load(&file, out)?;
            let s = load_shell(&pres, &shell)?;
            let text = read(&cert)?;
            match verify_certificate_text(&pres.polygraph, &s, &text) {
                Ok(()) => {
                    let _ = writeln!(out.stdout, "ok");
                }
                Err(CheckFailure::Rejected(face)) => return Err(CliError::Rejected(face)),
                Err(CheckFailure::Malformed(source)) => {
                    return Err(CliError::Parse { path: cert, source })
                }
            }
        }
        Command::Info { file, fuel } => {
            let pres = load(&file, out)?;
            let p = &pres.polygraph;
            let names: Vec<&str> = p.generators().iter().map(|g| g.name.as_str()).collect();
            let precedence = pres.precedence_or_default();
            let order: Vec<&str> = precedence
                .greatest_first()
                .iter()
                .map(|&l| p.generator_name(l).unwrap_or("?"))
                .collect();
            let terminating = verify_termination_order(p, &precedence);
            let complete = Completion::from_declared(p, fuel).is_complete();
            let o = &mut out.stdout;
            let _ = writeln!(o, "generators: {} ({})", names.len(), names.join(" "));
            let _ = writeln!(o, "rules: {}", p.rules().len());
            let _ = writeln!(o, "squares: {}", p.squares().len());
            let _ = writeln!(o, "regime: {}", p.regime());
            let _ = writeln!(o, "critical branchings: {}", critical_branchings(p).len());
            let _ = writeln!(o, "squares cover all critical branchings: {}", yes_no(complete));
            let _ = writeln!(
                o,
                "shortlex termination ({}): {}",
                order.join(" > "),
                yes_no(terminating)
            );
        }
    }
    Ok(())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
