//! Line-oriented read-eval-print loop.
//!
//! Plain lines are parsed and evaluated; their canonical value goes to
//! standard output, one value per line. Commands are prefixed with `:`:
//!
//! * `:let NAME = EXPR` — bind a name for later lines
//! * `:enumerate N` — list every function of stage `N`
//! * `:check THEORY N` — sweep all structures of sizes `1..=N`
//! * `:quit` — leave the loop
//!
//! Errors are reported on standard error and the loop continues, so a
//! batch file keeps producing output after a bad line.

use std::io::{BufRead, IsTerminal, Write};

use fltk_core::hierarchy::{enumerate_stage, StageIndex};

use crate::eval::Session;
use crate::parser::parse;
use crate::printer::print_fun;
use crate::report::{render_text, sweep_rows, theory_named};

/// Runs the loop over arbitrary line sources; returns the process exit
/// code (always 0 — individual line failures are reported, not fatal).
pub fn run(
    session: &mut Session,
    input: impl BufRead,
    out: &mut impl Write,
    err: &mut impl Write,
    prompt: bool,
) -> std::io::Result<i32> {
    if prompt {
        write!(out, "fltk> ")?;
        out.flush()?;
    }
    for line in input.lines() {
        let line = line?;
        let trimmed = line.trim();
        if !trimmed.is_empty() {
            match handle_line(session, trimmed, out, err)? {
                LineOutcome::Continue => {}
                LineOutcome::Quit => return Ok(0),
            }
        }
        if prompt {
            write!(out, "fltk> ")?;
            out.flush()?;
        }
    }
    Ok(0)
}

/// Runs the loop on the process's standard streams, prompting only when
/// standard input is a terminal.
pub fn run_stdio(session: &mut Session) -> std::io::Result<i32> {
    let stdin = std::io::stdin();
    let prompt = stdin.is_terminal();
    let mut out = std::io::stdout();
    let mut err = std::io::stderr();
    run(session, stdin.lock(), &mut out, &mut err, prompt)
}

enum LineOutcome {
    Continue,
    Quit,
}

fn handle_line(
    session: &mut Session,
    line: &str,
    out: &mut impl Write,
    err: &mut impl Write,
) -> std::io::Result<LineOutcome> {
    if let Some(command) = line.strip_prefix(':') {
        return command_line(session, command, out, err);
    }
    match parse(line) {
        Ok(term) => match session.eval(&term) {
            Ok(v) => writeln!(out, "{}", session.show(v))?,
            Err(e) => writeln!(err, "error: {e}")?,
        },
        Err(e) => writeln!(err, "error: {e}")?,
    }
    Ok(LineOutcome::Continue)
}

fn command_line(
    session: &mut Session,
    command: &str,
    out: &mut impl Write,
    err: &mut impl Write,
) -> std::io::Result<LineOutcome> {
    let mut words = command.split_whitespace();
    match words.next() {
        Some("quit") => return Ok(LineOutcome::Quit),
        Some("let") => {
            let rest = command.strip_prefix("let").unwrap_or(command).trim_start();
            let Some((name, expr)) = split_binding(rest) else {
                writeln!(err, "error: usage: :let NAME = EXPR")?;
                return Ok(LineOutcome::Continue);
            };
            match parse(expr) {
                Ok(term) => match session.eval(&term) {
                    Ok(v) => {
                        session.bind(name, v);
                        writeln!(out, "{}", session.show(v))?;
                    }
                    Err(e) => writeln!(err, "error: {e}")?,
                },
                Err(e) => writeln!(err, "error: {e}")?,
            }
        }
        Some("enumerate") => match words.next().and_then(|w| w.parse::<u32>().ok()) {
            Some(n) if n >= 1 => {
                match StageIndex::new(n).map(|s| enumerate_stage(&mut session.funs, s)) {
                    Some(Ok(members)) => {
                        for f in members {
                            writeln!(out, "{}", print_fun(&session.funs, f))?;
                        }
                    }
                    Some(Err(e)) => writeln!(err, "error: {e}")?,
                    None => unreachable!("n >= 1 was checked"),
                }
            }
            _ => writeln!(err, "error: usage: :enumerate N (stage number from 1)")?,
        },
        Some("check") => {
            let theory = words.next().and_then(theory_named);
            let max = words.next().and_then(|w| w.parse::<usize>().ok());
            match (theory, max) {
                (Some(t), Some(max)) if max >= 1 => match sweep_rows(t, max) {
                    Ok(rows) => write!(out, "{}", render_text(&rows))?,
                    Err(e) => writeln!(err, "error: {e}")?,
                },
                _ => writeln!(err, "error: usage: :check flt|fst|lt MAX_SIZE")?,
            }
        }
        Some(other) => writeln!(err, "error: unknown command `:{other}`")?,
        None => writeln!(err, "error: empty command")?,
    }
    Ok(LineOutcome::Continue)
}

/// Splits `NAME = EXPR` (the `=` is optional) into the name and the
/// expression text.
fn split_binding(rest: &str) -> Option<(String, &str)> {
    let name_end = rest.find(|c: char| !c.is_ascii_lowercase())?;
    let name = &rest[..name_end];
    if name.is_empty() {
        return None;
    }
    let mut expr = rest[name_end..].trim_start();
    if let Some(stripped) = expr.strip_prefix('=') {
        expr = stripped.trim_start();
    }
    if expr.is_empty() {
        return None;
    }
    Some((name.to_string(), expr))
}
