//! Tokenizer for the ASCII formula syntax.
//!
//! Intervals are lexed as single tokens: `[` always opens one, and `(` opens
//! one only when the next non-blank character is a digit, which a formula
//! can never start with. This keeps `X[1](p | q)` and `X (1..3] p`
//! unambiguous and lets callers count parentheses without parsing.

use super::interval::{IntervalSpec, Upper};
use super::ParseError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Atom(String),
    /// Uppercase or `w`-prefixed operator keyword (`X`, `wX`, `U`, `G`, ...).
    Keyword(String),
    /// `#true`, `#false`, `#init`, `#final`
    Constant(String),
    Interval(IntervalSpec),
    Not,
    And,
    Or,
    Implies,
    Iff,
    LParen,
    RParen,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub line: usize,
    pub col: usize,
}

const KEYWORDS: &[&str] = &["X", "wX", "Y", "wY", "U", "R", "S", "T", "G", "F", "H", "O"];
const CONSTANTS: &[&str] = &["true", "false", "init", "final"];

struct Cursor {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col: usize,
}

impl Cursor {
    fn new(src: &str, line: usize) -> Self {
        Cursor {
            chars: src.chars().collect(),
            pos: 0,
            line,
            col: 1,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn peek_at(&self, k: usize) -> Option<char> {
        self.chars.get(self.pos + k).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_blank(&mut self) {
        while let Some(c) = self.peek() {
            if c == '%' {
                while let Some(c) = self.peek() {
                    if c == '\n' {
                        break;
                    }
                    self.bump();
                }
            } else if c.is_whitespace() {
                self.bump();
            } else {
                break;
            }
        }
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.line, self.col, msg)
    }

    fn expect(&mut self, s: &str) -> Result<(), ParseError> {
        self.skip_blank();
        for want in s.chars() {
            match self.peek() {
                Some(c) if c == want => {
                    self.bump();
                }
                Some(c) => {
                    return Err(self.err(format!("malformed interval: expected `{s}`, found `{c}`")))
                }
                None => {
                    return Err(self.err(format!(
                        "malformed interval: expected `{s}`, found end of input"
                    )))
                }
            }
        }
        Ok(())
    }

    fn number(&mut self) -> Result<u64, ParseError> {
        self.skip_blank();
        if self.peek() == Some('-') {
            return Err(self.err("negative numerals are not allowed"));
        }
        let start = self.pos;
        let (line, col) = (self.line, self.col);
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            return Err(self.err("malformed interval: expected a number"));
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse()
            .map_err(|_| ParseError::new(line, col, format!("number `{text}` is too large")))
    }

    fn upper(&mut self) -> Result<Upper, ParseError> {
        self.skip_blank();
        if self.peek() == Some('w') {
            self.bump();
            Ok(Upper::Omega)
        } else {
            self.number().map(Upper::Finite)
        }
    }

    fn interval(&mut self) -> Result<IntervalSpec, ParseError> {
        let open = self.bump().expect("interval opener");
        match open {
            '<' | '>' => {
                self.expect("=")?;
                let n = self.number()?;
                Ok(if open == '<' {
                    IntervalSpec::AtMost(n)
                } else {
                    IntervalSpec::AtLeast(n)
                })
            }
            _ => {
                let m = self.number()?;
                self.skip_blank();
                if open == '[' && self.peek() == Some(']') {
                    self.bump();
                    return Ok(IntervalSpec::Point(m));
                }
                self.expect("..")?;
                self.skip_blank();
                if open == '[' && self.peek() == Some(')') {
                    self.bump();
                    return Ok(IntervalSpec::From(m));
                }
                let (line, col) = (self.line, self.col);
                let n = self.upper()?;
                self.skip_blank();
                let close = self.bump();
                let spec = match (open, close) {
                    ('[', Some(')')) => IntervalSpec::HalfOpen(m, n),
                    ('[', Some(']')) => IntervalSpec::Closed(m, n),
                    ('(', Some(')')) => IntervalSpec::Open(m, n),
                    ('(', Some(']')) => IntervalSpec::LeftOpen(m, n),
                    _ => return Err(self.err("malformed interval: expected `)` or `]`")),
                };
                if matches!(
                    spec,
                    IntervalSpec::Closed(_, Upper::Omega) | IntervalSpec::LeftOpen(_, Upper::Omega)
                ) {
                    return Err(ParseError::new(
                        line,
                        col,
                        "malformed interval: closed upper bound cannot be w",
                    ));
                }
                Ok(spec)
            }
        }
    }
}

/// Splits `src` into tokens. `first_line` is the line number reported for the
/// first line of `src`.
pub fn tokenize(src: &str, first_line: usize) -> Result<Vec<Token>, ParseError> {
    let mut cur = Cursor::new(src, first_line);
    let mut out = Vec::new();
    loop {
        cur.skip_blank();
        let (line, col) = (cur.line, cur.col);
        let Some(c) = cur.peek() else { break };
        let tok = match c {
            '[' => Tok::Interval(cur.interval()?),
            '(' => {
                let after = cur.chars[cur.pos + 1..]
                    .iter()
                    .copied()
                    .find(|c| !c.is_whitespace());
                if after.is_some_and(|c| c.is_ascii_digit() || c == '-') {
                    Tok::Interval(cur.interval()?)
                } else {
                    cur.bump();
                    Tok::LParen
                }
            }
            ')' => {
                cur.bump();
                Tok::RParen
            }
            '<' if cur.peek_at(1) == Some('=') => Tok::Interval(cur.interval()?),
            '>' if cur.peek_at(1) == Some('=') => Tok::Interval(cur.interval()?),
            '<' if cur.peek_at(1) == Some('-') && cur.peek_at(2) == Some('>') => {
                cur.bump();
                cur.bump();
                cur.bump();
                Tok::Iff
            }
            '-' if cur.peek_at(1) == Some('>') => {
                cur.bump();
                cur.bump();
                Tok::Implies
            }
            '~' => {
                cur.bump();
                Tok::Not
            }
            '&' => {
                cur.bump();
                Tok::And
            }
            '|' => {
                cur.bump();
                Tok::Or
            }
            '#' => {
                cur.bump();
                let word = ident(&mut cur);
                if CONSTANTS.contains(&word.as_str()) {
                    Tok::Constant(word)
                } else {
                    return Err(ParseError::new(
                        line,
                        col,
                        format!("unknown constant `#{word}`"),
                    ));
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let word = ident(&mut cur);
                if KEYWORDS.contains(&word.as_str()) {
                    Tok::Keyword(word)
                } else if word.starts_with(|c: char| c.is_ascii_lowercase()) {
                    Tok::Atom(word)
                } else {
                    return Err(ParseError::new(
                        line,
                        col,
                        format!("unknown operator `{word}`"),
                    ));
                }
            }
            c if c.is_ascii_digit() => {
                return Err(ParseError::new(
                    line,
                    col,
                    "unexpected number outside an interval",
                ));
            }
            '-' => {
                return Err(ParseError::new(
                    line,
                    col,
                    "negative numerals are not allowed",
                ))
            }
            other => {
                return Err(ParseError::new(
                    line,
                    col,
                    format!("unexpected character `{other}`"),
                ))
            }
        };
        out.push(Token { tok, line, col });
    }
    Ok(out)
}

fn ident(cur: &mut Cursor) -> String {
    let mut s = String::new();
    while let Some(c) = cur.peek() {
        if c.is_ascii_alphanumeric() || c == '_' {
            s.push(c);
            cur.bump();
        } else {
            break;
        }
    }
    s
}
