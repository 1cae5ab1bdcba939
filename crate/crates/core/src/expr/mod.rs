//! A small expression language over named soft sets.
//!
//! ```text
//! expr    = term , { "|" , term } ;
//! term    = postfix , { ( "&" | "-" | "\" ) , postfix } ;
//! postfix = atom , { "^c" } ;
//! atom    = NAME | "EMPTY" | "UNIVERSAL" | "(" , expr , ")" ;
//! NAME    = ( letter | "_" ) , { letter | digit | "_" } ;
//! ```
//!
//! `|` is union, `&` intersection, `-` (or `\`) difference and postfix `^c`
//! complement. `&` and `-` share a precedence level above `|`; all binary
//! operators associate to the left. `EMPTY` and `UNIVERSAL` are the empty
//! and universal soft sets of the evaluation context.

mod eval;
mod lexer;
mod parser;

use std::fmt;

use thiserror::Error;

use crate::model::ModelError;

pub use eval::{eval_str, evaluate};
pub use lexer::{tokenize, Token, TokenKind};
pub use parser::{parse, parse_str};

/// 1-based line and column of a character in the source text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("{pos}: {message}")]
    Lex { pos: Position, message: String },
    #[error("{pos}: {message}")]
    Parse { pos: Position, message: String },
    #[error("{}unbound name {name}", pos.map(|p| format!("{p}: ")).unwrap_or_default())]
    UnboundName { name: String, pos: Option<Position> },
    #[error(transparent)]
    Model(#[from] ModelError),
}

impl ExprError {
    pub fn position(&self) -> Option<Position> {
        match self {
            ExprError::Lex { pos, .. } | ExprError::Parse { pos, .. } => Some(*pos),
            ExprError::UnboundName { pos, .. } => *pos,
            ExprError::Model(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    Name(String),
    Empty,
    Universal,
    Complement(Box<Expr>),
    Intersect(Box<Expr>, Box<Expr>),
    Union(Box<Expr>, Box<Expr>),
    Difference(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn name(name: impl Into<String>) -> Expr {
        Expr::Name(name.into())
    }

    pub fn complement(self) -> Expr {
        Expr::Complement(Box::new(self))
    }

    pub fn intersect(self, rhs: Expr) -> Expr {
        Expr::Intersect(Box::new(self), Box::new(rhs))
    }

    pub fn union(self, rhs: Expr) -> Expr {
        Expr::Union(Box::new(self), Box::new(rhs))
    }

    pub fn difference(self, rhs: Expr) -> Expr {
        Expr::Difference(Box::new(self), Box::new(rhs))
    }

    /// Fully parenthesized source text that parses back to `self`.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Name(n) => f.write_str(n),
            Expr::Empty => f.write_str("EMPTY"),
            Expr::Universal => f.write_str("UNIVERSAL"),
            Expr::Complement(e) => write!(f, "{e}^c"),
            Expr::Intersect(l, r) => write!(f, "({l} & {r})"),
            Expr::Union(l, r) => write!(f, "({l} | {r})"),
            Expr::Difference(l, r) => write!(f, "({l} - {r})"),
        }
    }
}

pub(crate) const KEYWORDS: [&str; 2] = ["EMPTY", "UNIVERSAL"];

/// True when `name` lexes as a single NAME token (identifier, not a keyword).
pub fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    let head_ok = chars
        .next()
        .is_some_and(|c| c.is_ascii_alphabetic() || c == '_');
    head_ok && chars.all(|c| c.is_ascii_alphanumeric() || c == '_') && !KEYWORDS.contains(&name)
}
