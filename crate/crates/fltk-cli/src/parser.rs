//! Total LL(1) parser for the expression language.
//!
//! Grammar:
//!
//! ```text
//! expr  := number
//!        | "[" [entry ("," entry)*] "]"
//!        | "{" [expr ("," expr)*] "}"
//!        | "set" "{" [expr ("," expr)*] "}"
//!        | ident "(" [expr ("," expr)*] ")"
//!        | ident
//! entry := expr "->" expr
//! ```
//!
//! `0` denotes the empty function; any other number literal is a plain
//! count. Identifiers are ASCII lowercase words. Whitespace separates
//! tokens and is otherwise ignored. Every malformed input produces a
//! positioned [`ParseError`]; the parser never panics.

use crate::term::{ParseError, SourcePos, Term};

#[derive(Clone, Debug, PartialEq, Eq)]
enum TokenKind {
    Num(u64),
    Ident(String),
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    LParen,
    RParen,
    Comma,
    Arrow,
    Eof,
}

impl TokenKind {
    fn describe(&self) -> String {
        match self {
            TokenKind::Num(n) => format!("`{n}`"),
            TokenKind::Ident(s) => format!("`{s}`"),
            TokenKind::LBracket => "`[`".into(),
            TokenKind::RBracket => "`]`".into(),
            TokenKind::LBrace => "`{`".into(),
            TokenKind::RBrace => "`}`".into(),
            TokenKind::LParen => "`(`".into(),
            TokenKind::RParen => "`)`".into(),
            TokenKind::Comma => "`,`".into(),
            TokenKind::Arrow => "`->`".into(),
            TokenKind::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug)]
struct Token {
    kind: TokenKind,
    pos: SourcePos,
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: u32,
    column: u32,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer { chars: text.chars().peekable(), line: 1, column: 1 }
    }

    fn pos(&self) -> SourcePos {
        SourcePos { line: self.line, column: self.column }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn next_token(&mut self) -> Result<Token, ParseError> {
        while matches!(self.chars.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
        let pos = self.pos();
        let Some(&c) = self.chars.peek() else {
            return Ok(Token { kind: TokenKind::Eof, pos });
        };
        let kind = match c {
            '[' => {
                self.bump();
                TokenKind::LBracket
            }
            ']' => {
                self.bump();
                TokenKind::RBracket
            }
            '{' => {
                self.bump();
                TokenKind::LBrace
            }
            '}' => {
                self.bump();
                TokenKind::RBrace
            }
            '(' => {
                self.bump();
                TokenKind::LParen
            }
            ')' => {
                self.bump();
                TokenKind::RParen
            }
            ',' => {
                self.bump();
                TokenKind::Comma
            }
            '-' => {
                self.bump();
                if self.chars.peek() == Some(&'>') {
                    self.bump();
                    TokenKind::Arrow
                } else {
                    let found = match self.chars.peek() {
                        Some(&d) => format!("`-{d}`"),
                        None => "`-` at end of input".into(),
                    };
                    return Err(ParseError { pos, expected: "`->`", found });
                }
            }
            d if d.is_ascii_digit() => {
                let mut n: u64 = 0;
                while matches!(self.chars.peek(), Some(c) if c.is_ascii_digit()) {
                    let digit = self.bump().unwrap().to_digit(10).unwrap() as u64;
                    n = n.checked_mul(10).and_then(|m| m.checked_add(digit)).ok_or(
                        ParseError {
                            pos,
                            expected: "a number below 2^64",
                            found: "a larger number".into(),
                        },
                    )?;
                }
                TokenKind::Num(n)
            }
            a if a.is_ascii_lowercase() => {
                let mut word = String::new();
                while matches!(self.chars.peek(), Some(c) if c.is_ascii_lowercase()) {
                    word.push(self.bump().unwrap());
                }
                TokenKind::Ident(word)
            }
            other => {
                return Err(ParseError {
                    pos,
                    expected: "a token",
                    found: format!("`{other}`"),
                })
            }
        };
        Ok(Token { kind, pos })
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    lookahead: Token,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Result<Self, ParseError> {
        let mut lexer = Lexer::new(text);
        let lookahead = lexer.next_token()?;
        Ok(Parser { lexer, lookahead })
    }

    fn advance(&mut self) -> Result<Token, ParseError> {
        let next = self.lexer.next_token()?;
        Ok(std::mem::replace(&mut self.lookahead, next))
    }

    fn expect(&mut self, kind: TokenKind, expected: &'static str) -> Result<(), ParseError> {
        if self.lookahead.kind == kind {
            self.advance()?;
            Ok(())
        } else {
            Err(self.unexpected(expected))
        }
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        ParseError {
            pos: self.lookahead.pos,
            expected,
            found: self.lookahead.kind.describe(),
        }
    }

    /// Comma-separated items up to (not consuming) the closing token.
    fn items<T>(
        &mut self,
        close: TokenKind,
        expected: &'static str,
        item: impl Fn(&mut Self) -> Result<T, ParseError>,
    ) -> Result<Vec<T>, ParseError> {
        let mut out = Vec::new();
        if self.lookahead.kind == close {
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if self.lookahead.kind == TokenKind::Comma {
                self.advance()?;
            } else if self.lookahead.kind == close {
                return Ok(out);
            } else {
                return Err(self.unexpected(expected));
            }
        }
    }

    fn expr(&mut self) -> Result<Term, ParseError> {
        match self.lookahead.kind.clone() {
            TokenKind::Num(n) => {
                self.advance()?;
                Ok(if n == 0 { Term::NullLit } else { Term::Num(n) })
            }
            TokenKind::LBracket => {
                self.advance()?;
                let entries = self.items(TokenKind::RBracket, "`,` or `]`", |p| {
                    let a = p.expr()?;
                    p.expect(TokenKind::Arrow, "`->`")?;
                    let v = p.expr()?;
                    Ok((a, v))
                })?;
                self.advance()?;
                Ok(Term::FunLit(entries))
            }
            TokenKind::LBrace => {
                self.advance()?;
                let elems =
                    self.items(TokenKind::RBrace, "`,` or `}`", |p| p.expr())?;
                self.advance()?;
                Ok(Term::FunsetLit(elems))
            }
            TokenKind::Ident(name) => {
                self.advance()?;
                match (&name[..], &self.lookahead.kind) {
                    ("set", TokenKind::LBrace) => {
                        self.advance()?;
                        let elems =
                            self.items(TokenKind::RBrace, "`,` or `}`", |p| p.expr())?;
                        self.advance()?;
                        Ok(Term::SetLit(elems))
                    }
                    (_, TokenKind::LParen) => {
                        self.advance()?;
                        let args =
                            self.items(TokenKind::RParen, "`,` or `)`", |p| p.expr())?;
                        self.advance()?;
                        Ok(Term::Call(name, args))
                    }
                    _ => Ok(Term::Var(name)),
                }
            }
            _ => Err(self.unexpected("an expression")),
        }
    }
}

/// Parses one complete expression; trailing input is an error.
pub fn parse(text: &str) -> Result<Term, ParseError> {
    let mut p = Parser::new(text)?;
    let t = p.expr()?;
    if p.lookahead.kind == TokenKind::Eof {
        Ok(t)
    } else {
        Err(p.unexpected("end of input"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::Term::*;

    #[test]
    fn zero_is_the_null_literal() {
        assert_eq!(parse("0").unwrap(), NullLit);
    }

    #[test]
    fn singleton_graph() {
        assert_eq!(parse("[0->0]").unwrap(), FunLit(vec![(NullLit, NullLit)]));
    }

    #[test]
    fn truncated_graph_is_positioned_at_the_gap() {
        let err = parse("[0->").unwrap_err();
        assert_eq!((err.pos.line, err.pos.column), (1, 5));
        assert_eq!(err.expected, "an expression");
        assert_eq!(err.found, "end of input");
    }

    #[test]
    fn nested_forms_parse() {
        assert_eq!(
            parse("{0,[0->0]}").unwrap(),
            FunsetLit(vec![NullLit, FunLit(vec![(NullLit, NullLit)])])
        );
        assert_eq!(parse("set{set{}}").unwrap(), SetLit(vec![SetLit(vec![])]));
        assert_eq!(
            parse("apply([0->0],0)").unwrap(),
            Call("apply".into(), vec![FunLit(vec![(NullLit, NullLit)]), NullLit])
        );
        assert_eq!(parse("x").unwrap(), Var("x".into()));
        assert_eq!(parse("ord(3)").unwrap(), Call("ord".into(), vec![Num(3)]));
    }

    #[test]
    fn whitespace_is_insignificant_but_counted() {
        assert_eq!(parse(" [ 0 -> 0 ] ").unwrap(), parse("[0->0]").unwrap());
        let err = parse("[0 ->\n  !]").unwrap_err();
        assert_eq!((err.pos.line, err.pos.column), (2, 3));
    }

    #[test]
    fn set_is_only_a_keyword_before_a_brace() {
        assert_eq!(parse("set").unwrap(), Var("set".into()));
        assert_eq!(parse("set(0)").unwrap(), Call("set".into(), vec![NullLit]));
    }

    #[test]
    fn stray_arrow_and_bad_characters_are_rejected() {
        assert!(parse("0->0").is_err());
        assert!(parse("-").is_err());
        assert!(parse("[0=>0]").is_err());
        assert!(parse("").is_err());
        assert!(parse("{0,}").is_err());
    }
}
