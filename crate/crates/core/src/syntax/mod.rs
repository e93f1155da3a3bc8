//! Intervals, the metric formula tree, and its concrete text syntax.

mod formula;
mod interval;
mod lexer;
mod parser;
mod printer;

pub use formula::{desugar, BinaryTemporal, Derived, Formula, Theory};
pub use interval::{Interval, IntervalError, IntervalSpec, Upper};
pub use lexer::{tokenize, Tok, Token};
pub use parser::{parse_formula, parse_theory};
pub use printer::print_formula;

/// A syntax error with a 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, col: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            col,
            message: message.into(),
        }
    }
}

/// Compares two formula texts token by token, ignoring layout.
pub fn same_tokens(a: &str, b: &str) -> Result<bool, ParseError> {
    let strip = |s: &str| -> Result<Vec<Tok>, ParseError> {
        Ok(tokenize(s, 1)?.into_iter().map(|t| t.tok).collect())
    };
    Ok(strip(a)? == strip(b)?)
}
