use core::fmt;

/// Errors shared across the core modules.
///
/// Every operation that can refuse an input does so through one of these
/// variants; "undefined" application results are *not* errors (they are
/// `None` values).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two entries assign different values to the same argument.
    FunctionalityViolation,
    /// An entry refers to a handle that is not an already-interned node, so
    /// accepting it could break the well-foundedness of the universe. Not
    /// reachable through ordinary construction: handles are issued in
    /// topological order and can only point backwards.
    CycleViolation,
    /// The requested object is finite in principle but too large to
    /// materialize under the documented caps.
    CapExceeded(&'static str),
    /// Composition was asked for arrows whose codomain and domain differ.
    CompositionMismatch,
    /// A pair projection was applied to a function that is not an encoded
    /// ordered pair.
    NotAPair,
    /// The two-valued application table needs two distinct token objects.
    DegenerateTokens,
    /// An axiom was evaluated against a structure of the wrong signature.
    AxiomMismatch,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::FunctionalityViolation => {
                write!(f, "entries assign two values to one argument")
            }
            Error::CycleViolation => {
                write!(f, "entry refers to a handle outside the universe")
            }
            Error::CapExceeded(what) => {
                write!(f, "result too large to materialize: {what}")
            }
            Error::CompositionMismatch => {
                write!(f, "codomain of the inner arrow differs from domain of the outer arrow")
            }
            Error::NotAPair => write!(f, "function is not an encoded ordered pair"),
            Error::DegenerateTokens => {
                write!(f, "the two designated token objects must be distinct")
            }
            Error::AxiomMismatch => {
                write!(f, "axiom does not apply to this structure signature")
            }
        }
    }
}

impl core::error::Error for Error {}
