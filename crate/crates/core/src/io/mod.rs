//! Definition file format, parser, expression evaluation and report
//! rendering.
//!
//! A definition document is a plain-text, line-oriented format: top-level
//! metadata (`name`, `note`, `params`) and braced `algebra`, `hopf` and
//! `action` blocks. The full grammar ships in `docs/format.md`; the catalog
//! files under `data/` double as worked examples.

mod expr;
mod parse;
mod print;
pub mod render;

#[cfg(test)]
mod tests;

pub use expr::{EvalContext, Value};
pub use parse::parse_definition;
pub use print::print_document;

/// Parses and evaluates one expression string in the given scope; bare
/// labels resolve against the context's primary algebra by default.
pub fn eval_str(ctx: &EvalContext, text: &str) -> Result<Value, ParseError> {
    let tokens = expr::tokenize_line(text, 1)?;
    let end = tokens
        .last()
        .map(|t| Pos {
            line: t.pos.line,
            col: t.pos.col + 1,
        })
        .unwrap_or(Pos { line: 1, col: 1 });
    if tokens.is_empty() {
        return Err(ParseError::Syntax {
            pos: end,
            message: "empty expression".into(),
        });
    }
    let expr = expr::parse_expr(&tokens, end)?;
    ctx.eval(&expr, Some(ctx.primary))
}

use crate::algebra::StructureAlgebra;
use crate::hopf::HopfData;
use crate::partial_action::PartialActionData;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

/// A line/column position, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("{pos}: syntax error: {message}")]
    Syntax { pos: Pos, message: String },
    #[error("{pos}: undeclared basis label `{name}`")]
    UndeclaredLabel { name: String, pos: Pos },
    #[error("{pos}: undeclared parameter `{name}`")]
    UndeclaredParameter { name: String, pos: Pos },
    #[error("duplicate block `{name}`")]
    DuplicateBlock { name: String },
    #[error("{pos}: duplicate entry: {what}")]
    DuplicateEntry { what: String, pos: Pos },
    #[error("{pos}: unknown block reference `{name}`")]
    UnknownReference { name: String, pos: Pos },
    #[error("block `{block}`: missing {what}")]
    Missing { block: String, what: String },
    #[error("{pos}: {message}")]
    Eval { pos: Pos, message: String },
    #[error("{0}")]
    Structure(String),
}

/// A parsed and validated definition document. Blocks are stored as their
/// built runtime payloads, so equality is semantic: two files describing
/// the same data compare equal regardless of entry order or spelling of
/// the element expressions.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DefinitionDocument {
    pub name: Option<String>,
    pub note: Option<String>,
    /// Declared parameter names, in declaration order.
    pub parameters: Vec<String>,
    pub algebras: Vec<Arc<StructureAlgebra>>,
    pub hopfs: Vec<HopfData>,
    pub actions: Vec<PartialActionData>,
}

impl DefinitionDocument {
    pub fn algebra(&self, name: &str) -> Option<&Arc<StructureAlgebra>> {
        self.algebras.iter().find(|a| a.name() == name)
    }

    pub fn hopf(&self, name: &str) -> Option<&HopfData> {
        self.hopfs.iter().find(|h| h.algebra().name() == name)
    }

    pub fn action(&self, name: &str) -> Option<&PartialActionData> {
        self.actions.iter().find(|a| a.name() == name)
    }
}
