//! The `fltk` command-line tool.
//!
//! Exit codes: 0 on success, 1 on user errors (syntax, arity, type,
//! mismatched arrows, out-of-range sizes), 2 on internal invariant
//! breaches (panics, violated laws, a breached node cap).

use std::io::{BufRead, Write};
use std::panic::AssertUnwindSafe;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use fltk_cli::cat::{check_laws, product_search};
use fltk_cli::eval::{Session, Value};
use fltk_cli::parser::parse;
use fltk_cli::printer::print_fun;
use fltk_cli::repl;
use fltk_cli::report::{render_json, render_text, sweep_cap, sweep_rows, theory_named};
use fltk_core::hierarchy::{count_p, enumerate_stage, is_fevel, stage_report, StageIndex};
use fltk_core::translate::{to_fun, to_set};

/// Hereditarily finite partial functions: evaluate, enumerate, translate,
/// and model-check.
#[derive(Parser)]
#[command(name = "fltk", version, about)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate one expression and print its canonical value.
    Eval {
        /// Expression, e.g. "apply([0->0],0)" or "tofun(set{set{}})".
        expr: String,
    },
    /// Interactive (or batch) read-eval-print loop.
    Repl,
    /// List every function of a stage, or only count them.
    Enumerate {
        /// Stage number, starting at 1.
        #[arg(long)]
        stage: u32,
        /// Print the exact cardinality instead of the elements.
        #[arg(long)]
        count_only: bool,
    },
    /// Show the fevels among a stage's functions.
    Fevels {
        /// Stage number, starting at 1.
        #[arg(long = "within-stage")]
        within_stage: u32,
    },
    /// Exhaustively check an axiom system over all small structures.
    Check {
        /// Axiom system: flt, fst, or lt.
        #[arg(long)]
        theory: String,
        /// Check every structure size from 1 to this bound.
        #[arg(long)]
        max_size: usize,
        /// Output format: text or json.
        #[arg(long, default_value = "text")]
        report: String,
    },
    /// Translate canonical terms between the function and set sorts,
    /// one term per input line.
    Translate {
        /// Direction: i (functions to sets) or j (sets to functions).
        #[arg(long)]
        dir: String,
    },
    /// Categorial checks.
    Cat {
        #[command(subcommand)]
        cmd: CatCmd,
    },
    /// Print the exact number of functions found at a stage.
    #[command(name = "count-p")]
    CountP {
        /// Stage number, starting at 1.
        n: u32,
    },
}

#[derive(Subcommand)]
enum CatCmd {
    /// Verify the identity and associativity laws over one stage.
    Laws {
        /// Stage number, starting at 1.
        #[arg(long)]
        stage: u32,
    },
    /// Search for a product cone over two small funsets.
    Product {
        /// Cardinality of the left funset (0 to 2).
        #[arg(long = "cardA")]
        card_a: usize,
        /// Cardinality of the right funset (0 to 2).
        #[arg(long = "cardB")]
        card_b: usize,
        /// Emit the result as JSON.
        #[arg(long)]
        report: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match std::panic::catch_unwind(AssertUnwindSafe(|| run(cli))) {
        Ok(code) => ExitCode::from(code),
        // The default panic hook has already printed the diagnostic.
        Err(_) => ExitCode::from(2),
    }
}

/// Reads the interning-table cap from FLTK_MAX_NODES (default ten
/// million nodes); the kernel aborts with a panic — exit code 2 —
/// when a computation would pass it.
fn session_from_env() -> Result<Session, String> {
    match std::env::var("FLTK_MAX_NODES") {
        Ok(text) => match text.trim().parse::<usize>() {
            Ok(cap) if cap >= 1 => Ok(Session::with_node_cap(cap)),
            _ => Err(format!(
                "FLTK_MAX_NODES must be a positive node count, got `{text}`"
            )),
        },
        Err(std::env::VarError::NotPresent) => Ok(Session::new()),
        Err(e) => Err(format!("FLTK_MAX_NODES is unreadable: {e}")),
    }
}

fn fail(message: impl std::fmt::Display) -> u8 {
    eprintln!("error: {message}");
    1
}

fn stage_index(n: u32) -> Result<StageIndex, String> {
    StageIndex::new(n).ok_or_else(|| format!("stages start at 1, got {n}"))
}

fn run(cli: Cli) -> u8 {
    match cli.cmd {
        Cmd::Eval { expr } => {
            let mut session = match session_from_env() {
                Ok(s) => s,
                Err(e) => return fail(e),
            };
            let term = match parse(&expr) {
                Ok(t) => t,
                Err(e) => return fail(e),
            };
            match session.eval(&term) {
                Ok(v) => {
                    println!("{}", session.show(v));
                    0
                }
                Err(e) => fail(e),
            }
        }
        Cmd::Repl => {
            let mut session = match session_from_env() {
                Ok(s) => s,
                Err(e) => return fail(e),
            };
            match repl::run_stdio(&mut session) {
                Ok(code) => u8::try_from(code).unwrap_or(2),
                Err(e) => fail(format!("io failure: {e}")),
            }
        }
        Cmd::Enumerate { stage, count_only } => {
            let s = match stage_index(stage) {
                Ok(s) => s,
                Err(e) => return fail(e),
            };
            if count_only {
                match count_p(s) {
                    Ok(n) => {
                        println!("{n}");
                        0
                    }
                    Err(e) => fail(e),
                }
            } else {
                let mut session = match session_from_env() {
                    Ok(s) => s,
                    Err(e) => return fail(e),
                };
                match enumerate_stage(&mut session.funs, s) {
                    Ok(members) => {
                        let mut out = std::io::stdout().lock();
                        for f in members {
                            writeln!(out, "{}", print_fun(&session.funs, f))
                                .expect("stdout is writable");
                        }
                        0
                    }
                    Err(e) => fail(e),
                }
            }
        }
        Cmd::Fevels { within_stage } => {
            let s = match stage_index(within_stage) {
                Ok(s) => s,
                Err(e) => return fail(e),
            };
            let mut session = match session_from_env() {
                Ok(s) => s,
                Err(e) => return fail(e),
            };
            let report = match stage_report(&mut session.funs, s) {
                Ok(r) => r,
                Err(e) => return fail(e),
            };
            println!(
                "stage {}: {} functions on fevel {}",
                report.stage.get(),
                report.members.len(),
                print_fun(&session.funs, report.fevel_object)
            );
            for f in report.members {
                match is_fevel(&mut session.funs, f) {
                    Ok(true) => println!("{}", print_fun(&session.funs, f)),
                    Ok(false) => {}
                    Err(e) => return fail(e),
                }
            }
            0
        }
        Cmd::Check { theory, max_size, report } => {
            let Some(t) = theory_named(&theory) else {
                return fail(format!("unknown theory `{theory}`; use flt, fst, or lt"));
            };
            if max_size < 1 || max_size > sweep_cap(t) {
                return fail(format!(
                    "--max-size for {theory} must be between 1 and {}",
                    sweep_cap(t)
                ));
            }
            let rows = match sweep_rows(t, max_size) {
                Ok(rows) => rows,
                Err(e) => return fail(e),
            };
            match report.as_str() {
                "text" => {
                    print!("{}", render_text(&rows));
                    0
                }
                "json" => {
                    print!("{}", render_json(&rows));
                    0
                }
                other => fail(format!("unknown report format `{other}`; use text or json")),
            }
        }
        Cmd::Translate { dir } => {
            if dir != "i" && dir != "j" {
                return fail(format!("unknown direction `{dir}`; use i or j"));
            }
            let mut session = match session_from_env() {
                Ok(s) => s,
                Err(e) => return fail(e),
            };
            let stdin = std::io::stdin();
            for (lineno, line) in stdin.lock().lines().enumerate() {
                let line = match line {
                    Ok(l) => l,
                    Err(e) => return fail(format!("io failure: {e}")),
                };
                if line.trim().is_empty() {
                    continue;
                }
                let value = parse(line.trim())
                    .map_err(|e| e.to_string())
                    .and_then(|t| session.eval(&t).map_err(|e| e.to_string()));
                let shown = match (value, dir.as_str()) {
                    (Ok(Value::Fun(f)), "i") => {
                        let a = to_set(&session.funs, &mut session.sets, f);
                        Ok(session.show(Value::Set(a)))
                    }
                    (Ok(Value::Set(a)), "j") => {
                        let f = to_fun(&session.sets, &mut session.funs, a);
                        Ok(session.show(Value::Fun(f)))
                    }
                    (Ok(_), "i") => Err("direction i takes function terms".to_string()),
                    (Ok(_), _) => Err("direction j takes set terms".to_string()),
                    (Err(e), _) => Err(e),
                };
                match shown {
                    Ok(text) => println!("{text}"),
                    Err(e) => return fail(format!("line {}: {e}", lineno + 1)),
                }
            }
            0
        }
        Cmd::Cat { cmd } => cat_command(cmd),
        Cmd::CountP { n } => {
            let s = match stage_index(n) {
                Ok(s) => s,
                Err(e) => return fail(e),
            };
            match count_p(s) {
                Ok(count) => {
                    println!("{count}");
                    0
                }
                Err(e) => fail(e),
            }
        }
    }
}

fn cat_command(cmd: CatCmd) -> u8 {
    match cmd {
        CatCmd::Laws { stage } => {
            let s = match stage_index(stage) {
                Ok(s) => s,
                Err(e) => return fail(e),
            };
            let mut session = match session_from_env() {
                Ok(s) => s,
                Err(e) => return fail(e),
            };
            let outcome = match check_laws(&mut session.funs, s) {
                Ok(o) => o,
                Err(e) => return fail(e),
            };
            println!(
                "identity laws: {} of {} arrows",
                outcome.arrows - outcome.identity_failures.len(),
                outcome.arrows
            );
            println!(
                "associativity: {} of {} composable triples",
                outcome.composable_triples - outcome.associativity_failures,
                outcome.composable_triples
            );
            if outcome.all_hold() {
                0
            } else {
                for f in &outcome.identity_failures {
                    eprintln!(
                        "identity law broken at {}",
                        print_fun(&session.funs, *f)
                    );
                }
                eprintln!("error: category laws violated — internal invariant breach");
                2
            }
        }
        CatCmd::Product { card_a, card_b, report } => {
            if card_a > 2 || card_b > 2 {
                return fail("--cardA and --cardB range over 0..=2");
            }
            let mut session = match session_from_env() {
                Ok(s) => s,
                Err(e) => return fail(e),
            };
            let max_apex = (card_a * card_b).max(5);
            let outcome =
                match product_search(&mut session.funs, card_a, card_b, max_apex) {
                    Ok(o) => o,
                    Err(e) => return fail(e),
                };
            let u = &session.funs;
            if report {
                let diagrams: Vec<serde_json::Value> = outcome
                    .diagrams
                    .iter()
                    .map(|d| {
                        serde_json::json!({
                            "apex": print_fun(u, d.apex),
                            "to_a": print_fun(u, d.to_a),
                            "to_b": print_fun(u, d.to_b),
                        })
                    })
                    .collect();
                let doc = serde_json::json!({
                    "card_a": card_a,
                    "card_b": card_b,
                    "a": print_fun(u, outcome.a),
                    "b": print_fun(u, outcome.b),
                    "max_apex": outcome.max_apex,
                    "test_universe_size": outcome.universe.len(),
                    "found": !outcome.diagrams.is_empty(),
                    "diagrams": diagrams,
                });
                println!(
                    "{}",
                    serde_json::to_string_pretty(&doc).expect("plain JSON document")
                );
            } else {
                println!(
                    "A = {}, B = {}, test universe of {}",
                    print_fun(u, outcome.a),
                    print_fun(u, outcome.b),
                    outcome.universe.len()
                );
                if outcome.diagrams.is_empty() {
                    println!(
                        "no product diagram with apex size <= {}",
                        outcome.max_apex
                    );
                } else {
                    for d in &outcome.diagrams {
                        println!(
                            "product: apex {} with projections {} and {}",
                            print_fun(u, d.apex),
                            print_fun(u, d.to_a),
                            print_fun(u, d.to_b)
                        );
                    }
                }
            }
            0
        }
    }
}
