//! Abstract syntax and source positions for the expression language.

use std::fmt;

/// An expression of the surface language.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    /// The empty function, written `0`.
    NullLit,
    /// A nonzero natural-number literal, accepted where a count is
    /// wanted (for example `ord(3)`).
    Num(u64),
    /// An explicit graph `[a->v,...]`.
    FunLit(Vec<(Term, Term)>),
    /// Funset sugar `{e,...}` for the partial identity on the listed
    /// functions.
    FunsetLit(Vec<Term>),
    /// A hereditarily finite set `set{e,...}`.
    SetLit(Vec<Term>),
    /// An operation call `name(arg,...)`.
    Call(String, Vec<Term>),
    /// A name bound by the REPL's `:let`.
    Var(String),
}

/// A 1-based line/column position in the source text.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SourcePos {
    pub line: u32,
    pub column: u32,
}

impl fmt::Display for SourcePos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

/// A syntax error, always positioned and always naming what the parser
/// wanted next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub pos: SourcePos,
    /// Human-readable description of the acceptable-token set.
    pub expected: &'static str,
    /// The offending token (or `end of input`).
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at {}: expected {}, found {}",
            self.pos, self.expected, self.found
        )
    }
}

impl std::error::Error for ParseError {}
