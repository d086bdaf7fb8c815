//! Surface layer over [`fltk_core`]: a small total expression language
//! with a bit-exact canonical printer, an evaluator over shared
//! function/set universes, a line-oriented REPL, and report rendering
//! for the model-checking sweeps. The `fltk` binary wires these to a
//! command-line interface.

pub mod cat;
pub mod eval;
pub mod parser;
pub mod printer;
pub mod repl;
pub mod report;
pub mod term;
