//! `lefschetz`: analyze Lefschetz fibration words from `.lfw` files.
//!
//! Exit status is 0 when every verdict passes, 2 when some verdict fails
//! and 1 on unreadable or malformed input.

mod output;
mod selftest;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lefschetz_core::dsl::{parse, serialize};
use lefschetz_core::families::{fibre_sum, genus1_word, hyperelliptic_word, word_a, word_b, word_c, word_power};
use lefschetz_core::invariants::quick_check;
use lefschetz_core::{Genus, Word};

use output::{Format, Outcome};

#[derive(Parser)]
#[command(name = "lefschetz", version, about = "Invariants of Lefschetz fibrations from monodromy words")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full invariant report for one or more words.
    Analyze {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Treat the fibration as hyperelliptic and check Endo's equality.
        #[arg(long)]
        assume_hyperelliptic: bool,
    },
    /// Write a named family word.
    Generate {
        #[arg(long, value_enum)]
        family: Family,
        /// Defaults to 2 for A, B, C and H, and 1 for E.
        #[arg(long)]
        genus: Option<u32>,
        #[arg(long, default_value_t = 1)]
        power: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Fibre sum of two words of the same genus.
    Sum {
        first: PathBuf,
        second: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Relation, divisibility and Torelli verdicts only.
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the built-in fixture table.
    Selftest,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    #[value(name = "A")]
    A,
    #[value(name = "B")]
    B,
    #[value(name = "C")]
    C,
    #[value(name = "H")]
    H,
    #[value(name = "E")]
    E,
}

const EXIT_FAIL: u8 = 2;
const EXIT_INPUT: u8 = 1;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_INPUT) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_FAIL),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

/// `Ok(passed)` or an input error message.
fn run(command: Command) -> Result<bool, String> {
    match command {
        Command::Analyze { files, format, assume_hyperelliptic } => {
            let mut outcomes = Vec::with_capacity(files.len());
            for path in &files {
                let word = read_word(path)?;
                outcomes.push(Outcome::analyze(path, &word, assume_hyperelliptic).map_err(|e| format!("{}: {e}", path.display()))?);
            }
            emit(&output::render_outcomes(&outcomes, format)?)?;
            Ok(outcomes.iter().all(Outcome::passed))
        }
        Command::Generate { family, genus, power, output } => {
            let word = generate(family, genus, power)?;
            write_word(&word, output.as_deref())?;
            Ok(true)
        }
        Command::Sum { first, second, output } => {
            let word = fibre_sum(&read_word(&first)?, &read_word(&second)?).map_err(|e| e.to_string())?;
            write_word(&word, output.as_deref())?;
            Ok(true)
        }
        Command::Check { file, format } => {
            let verdicts = quick_check(&read_word(&file)?);
            emit(&output::render_verdicts(&file, &verdicts, format)?)?;
            Ok(verdicts.iter().all(|v| v.passed()))
        }
        Command::Selftest => {
            let (text, passed) = selftest::run();
            emit(&text)?;
            Ok(passed)
        }
    }
}

fn read_word(path: &Path) -> Result<Word, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn generate(family: Family, genus: Option<u32>, power: usize) -> Result<Word, String> {
    let default_genus = if matches!(family, Family::E) { 1 } else { 2 };
    let g = genus.unwrap_or(default_genus);
    let base = match family {
        Family::A | Family::B | Family::C if g != 2 => return Err(format!("family is defined at genus 2, not {g}")),
        Family::E if g != 1 => return Err(format!("family E is defined at genus 1, not {g}")),
        Family::A => word_a(),
        Family::B => word_b(),
        Family::C => word_c(),
        Family::E => genus1_word(1).map_err(|e| e.to_string())?,
        Family::H => hyperelliptic_word(Genus::new(g).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?,
    };
    word_power(&base, power).map_err(|e| e.to_string())
}

fn write_word(word: &Word, path: Option<&Path>) -> Result<(), String> {
    let text = serialize(word);
    match path {
        Some(p) => fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => emit(&text),
    }
}

fn emit(text: &str) -> Result<(), String> {
    io::stdout().lock().write_all(text.as_bytes()).map_err(|e| format!("stdout: {e}"))
}
