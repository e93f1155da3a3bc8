use super::formula::{BinaryTemporal, Formula, Theory};
use super::interval::{Interval, IntervalSpec};
use super::lexer::{tokenize, Tok, Token};
use super::ParseError;

/// Parses one formula, desugaring every derived operator on the way.
///
/// Precedence, loosest first: `<->` (left), `->` (right), `|`, `&`,
/// then the binary temporal connectives `U R S T` (right), then the
/// prefix operators.
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    parse_at(text, 1)
}

fn parse_at(text: &str, first_line: usize) -> Result<Formula, ParseError> {
    let tokens = tokenize(text, first_line)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        end: end_position(text, first_line),
    };
    if p.tokens.is_empty() {
        return Err(ParseError::new(first_line, 1, "empty formula"));
    }
    let f = p.iff()?;
    if let Some(t) = p.peek_token() {
        return Err(ParseError::new(
            t.line,
            t.col,
            format!("unexpected {}", describe(&t.tok)),
        ));
    }
    Ok(f)
}

fn end_position(text: &str, first_line: usize) -> (usize, usize) {
    let lines = text.split('\n').count();
    let last = text.rsplit('\n').next().unwrap_or("");
    (first_line + lines - 1, last.chars().count() + 1)
}

/// Parses a theory: one formula per line, `%` comments, blank lines ignored.
/// A formula continues onto following lines while it has unclosed parentheses.
pub fn parse_theory(text: &str) -> Result<Theory, ParseError> {
    let mut formulas = Vec::new();
    let mut pending = String::new();
    let mut pending_line = 0;
    let mut depth: i64 = 0;
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let toks = tokenize(line, lineno)?;
        if toks.is_empty() && pending.is_empty() {
            continue;
        }
        if pending.is_empty() {
            pending_line = lineno;
        } else {
            pending.push('\n');
        }
        pending.push_str(line);
        for t in &toks {
            match t.tok {
                Tok::LParen => depth += 1,
                Tok::RParen => depth -= 1,
                _ => {}
            }
        }
        if depth <= 0 {
            formulas.push(parse_at(&pending, pending_line)?);
            pending.clear();
            depth = 0;
        }
    }
    if !pending.is_empty() {
        // Unbalanced parentheses at end of file: let the parser report where.
        formulas.push(parse_at(&pending, pending_line)?);
    }
    Ok(Theory::new("", formulas))
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    end: (usize, usize),
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Atom(a) => format!("atom `{a}`"),
        Tok::Keyword(k) => format!("operator `{k}`"),
        Tok::Constant(c) => format!("`#{c}`"),
        Tok::Interval(_) => "interval".to_string(),
        Tok::Not => "`~`".into(),
        Tok::And => "`&`".into(),
        Tok::Or => "`|`".into(),
        Tok::Implies => "`->`".into(),
        Tok::Iff => "`<->`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
    }
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn peek_token(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, want: &Tok) -> bool {
        if self.peek() == Some(want) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error_here(&self, msg: &str) -> ParseError {
        match self.peek_token() {
            Some(t) => ParseError::new(t.line, t.col, format!("{msg}, found {}", describe(&t.tok))),
            None => ParseError::new(self.end.0, self.end.1, format!("{msg}, found end of input")),
        }
    }

    fn iff(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.implication()?;
        while self.eat(&Tok::Iff) {
            let rhs = self.implication()?;
            lhs = Formula::iff(lhs, rhs);
        }
        Ok(lhs)
    }

    fn implication(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.disjunction()?;
        if self.eat(&Tok::Implies) {
            let rhs = self.implication()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.conjunction()?;
        while self.eat(&Tok::Or) {
            let rhs = self.conjunction()?;
            lhs = Formula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.binary_temporal()?;
        while self.eat(&Tok::And) {
            let rhs = self.binary_temporal()?;
            lhs = Formula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn binary_temporal(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.unary()?;
        let op = match self.peek() {
            Some(Tok::Keyword(k)) => match k.as_str() {
                "U" => BinaryTemporal::Until,
                "R" => BinaryTemporal::Release,
                "S" => BinaryTemporal::Since,
                "T" => BinaryTemporal::Trigger,
                _ => return Ok(lhs),
            },
            _ => return Ok(lhs),
        };
        self.pos += 1;
        let interval = self.interval()?;
        let rhs = self.binary_temporal()?;
        Ok(op.build(interval, lhs, rhs))
    }

    fn interval(&mut self) -> Result<Interval, ParseError> {
        match self.tokens.get(self.pos) {
            Some(Token {
                tok: Tok::Interval(spec),
                line,
                col,
            }) => {
                let (spec, line, col): (IntervalSpec, usize, usize) = (*spec, *line, *col);
                self.pos += 1;
                spec.normalize()
                    .map_err(|e| ParseError::new(line, col, format!("malformed interval: {e}")))
            }
            _ => Ok(Interval::FULL),
        }
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        let Some(token) = self.peek_token().cloned() else {
            return Err(self.error_here("expected a formula"));
        };
        match token.tok {
            Tok::Not => {
                self.pos += 1;
                Ok(Formula::not(self.unary()?))
            }
            Tok::Keyword(ref k) => {
                let build: fn(Interval, Formula) -> Formula = match k.as_str() {
                    "X" => Formula::next,
                    "wX" => Formula::weak_next,
                    "Y" => Formula::prev,
                    "wY" => Formula::weak_prev,
                    "G" => Formula::always,
                    "F" => Formula::eventually,
                    "H" => Formula::historically,
                    "O" => Formula::once,
                    _ => return Err(self.error_here("expected a formula")),
                };
                self.pos += 1;
                let interval = self.interval()?;
                Ok(build(interval, self.unary()?))
            }
            Tok::Atom(ref a) => {
                self.pos += 1;
                Ok(Formula::Atom(a.clone()))
            }
            Tok::Constant(ref c) => {
                self.pos += 1;
                Ok(match c.as_str() {
                    "true" => Formula::top(),
                    "false" => Formula::Bottom,
                    "init" => Formula::initial(),
                    _ => Formula::final_state(),
                })
            }
            Tok::LParen => {
                self.pos += 1;
                let f = self.iff()?;
                if !self.eat(&Tok::RParen) {
                    return Err(self.error_here("expected `)`"));
                }
                Ok(f)
            }
            Tok::Interval(_) => Err(ParseError::new(
                token.line,
                token.col,
                "interval must follow a temporal operator",
            )),
            _ => Err(self.error_here("expected a formula")),
        }
    }
}
