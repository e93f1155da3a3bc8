use super::ast::{Delta, Fom, Term};
use super::FomError;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Number(u64),
    /// `<={d}`
    Diff(Delta),
    Forall,
    Exists,
    Not,
    And,
    Or,
    Implies,
    True,
    False,
    LParen,
    RParen,
}

struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn error(line: usize, col: usize, message: impl Into<String>) -> FomError {
    FomError::Parse {
        line,
        col,
        message: message.into(),
    }
}

fn tokenize(src: &str) -> Result<Vec<Token>, FomError> {
    let chars: Vec<char> = src.chars().collect();
    let (mut pos, mut line, mut col) = (0, 1, 1);
    let mut out = Vec::new();
    let take_while = |pos: &mut usize, col: &mut usize, pred: &dyn Fn(char) -> bool| {
        let start = *pos;
        while *pos < chars.len() && pred(chars[*pos]) {
            *pos += 1;
            *col += 1;
        }
        chars[start..*pos].iter().collect::<String>()
    };
    while pos < chars.len() {
        let c = chars[pos];
        let (l, k) = (line, col);
        if c == '\n' {
            pos += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            pos += 1;
            col += 1;
            continue;
        }
        let rest: String = chars[pos..chars.len().min(pos + 3)].iter().collect();
        let simple = match c {
            '!' => Some(Tok::Forall),
            '?' => Some(Tok::Exists),
            '~' => Some(Tok::Not),
            '&' => Some(Tok::And),
            '|' => Some(Tok::Or),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        let tok = if let Some(t) = simple {
            pos += 1;
            col += 1;
            t
        } else if rest.starts_with("->") {
            pos += 2;
            col += 2;
            Tok::Implies
        } else if rest.starts_with("<={") {
            pos += 3;
            col += 3;
            let text = take_while(&mut pos, &mut col, &|c| c != '}' && c != '\n');
            if chars.get(pos) != Some(&'}') {
                return Err(error(l, k, "unterminated difference bound"));
            }
            pos += 1;
            col += 1;
            let text = text.trim();
            let d = if text == "w" {
                Delta::Omega
            } else {
                Delta::Int(
                    text.parse()
                        .map_err(|_| error(l, k, format!("malformed bound `{text}`")))?,
                )
            };
            Tok::Diff(d)
        } else if c == '#' {
            pos += 1;
            col += 1;
            match take_while(&mut pos, &mut col, &|c| c.is_ascii_alphanumeric()).as_str() {
                "true" => Tok::True,
                "false" => Tok::False,
                w => return Err(error(l, k, format!("unknown constant `#{w}`"))),
            }
        } else if c.is_ascii_digit() {
            let text = take_while(&mut pos, &mut col, &|c| c.is_ascii_digit());
            Tok::Number(
                text.parse()
                    .map_err(|_| error(l, k, format!("number `{text}` is too large")))?,
            )
        } else if c.is_ascii_alphabetic() || c == '_' {
            Tok::Ident(take_while(&mut pos, &mut col, &|c| {
                c.is_ascii_alphanumeric() || c == '_'
            }))
        } else {
            return Err(error(l, k, format!("unexpected character `{c}`")));
        };
        out.push(Token {
            tok,
            line: l,
            col: k,
        });
    }
    Ok(out)
}

/// Parses the text form printed by [`Fom`]'s `Display`.
///
/// Grammar, loosest first: `->` (right), `|`, `&`, then prefix `~`, `!x`,
/// `?x` (scoping over one prefix-level formula), parentheses, `#true`,
/// `#false`, `p(t)` and `t <={d} u` where `d` is an integer or `w`. A term is
/// a variable or a natural number; `0` is the constant zero.
pub fn parse_fom(text: &str) -> Result<Fom, FomError> {
    let tokens = tokenize(text)?;
    let mut p = Parser { tokens, pos: 0 };
    let f = p.implication()?;
    if let Some(t) = p.tokens.get(p.pos) {
        return Err(error(t.line, t.col, "unexpected trailing input"));
    }
    Ok(f)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn fail(&self, msg: &str) -> FomError {
        match self.tokens.get(self.pos) {
            Some(t) => error(t.line, t.col, format!("{msg}, found {:?}", t.tok)),
            None => {
                let (line, col) = self
                    .tokens
                    .last()
                    .map(|t| (t.line, t.col + 1))
                    .unwrap_or((1, 1));
                error(line, col, format!("{msg}, found end of input"))
            }
        }
    }

    fn implication(&mut self) -> Result<Fom, FomError> {
        let lhs = self.disjunction()?;
        if self.eat(&Tok::Implies) {
            return Ok(Fom::implies(lhs, self.implication()?));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Fom, FomError> {
        let mut lhs = self.conjunction()?;
        while self.eat(&Tok::Or) {
            lhs = Fom::or(lhs, self.conjunction()?);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Fom, FomError> {
        let mut lhs = self.prefix()?;
        while self.eat(&Tok::And) {
            lhs = Fom::and(lhs, self.prefix()?);
        }
        Ok(lhs)
    }

    fn variable(&mut self) -> Result<String, FomError> {
        match self.peek().cloned() {
            Some(Tok::Ident(v)) => {
                self.pos += 1;
                Ok(v)
            }
            _ => Err(self.fail("expected a variable")),
        }
    }

    fn term(&mut self) -> Result<Term, FomError> {
        match self.peek().cloned() {
            Some(Tok::Ident(v)) => {
                self.pos += 1;
                Ok(Term::Var(v))
            }
            Some(Tok::Number(0)) => {
                self.pos += 1;
                Ok(Term::Zero)
            }
            Some(Tok::Number(n)) => {
                self.pos += 1;
                Ok(Term::Point(n))
            }
            _ => Err(self.fail("expected a term")),
        }
    }

    fn prefix(&mut self) -> Result<Fom, FomError> {
        match self.peek().cloned() {
            Some(Tok::Not) => {
                self.pos += 1;
                Ok(Fom::not(self.prefix()?))
            }
            Some(Tok::Forall) | Some(Tok::Exists) => {
                let universal = self.peek() == Some(&Tok::Forall);
                self.pos += 1;
                let v = self.variable()?;
                let body = self.prefix()?;
                Ok(if universal {
                    Fom::forall(v, body)
                } else {
                    Fom::exists(v, body)
                })
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let f = self.implication()?;
                if !self.eat(&Tok::RParen) {
                    return Err(self.fail("expected `)`"));
                }
                Ok(f)
            }
            Some(Tok::True) => {
                self.pos += 1;
                Ok(Fom::Top)
            }
            Some(Tok::False) => {
                self.pos += 1;
                Ok(Fom::Bottom)
            }
            Some(Tok::Ident(p))
                if self.tokens.get(self.pos + 1).map(|t| &t.tok) == Some(&Tok::LParen) =>
            {
                self.pos += 2;
                let t = self.term()?;
                if !self.eat(&Tok::RParen) {
                    return Err(self.fail("expected `)`"));
                }
                Ok(Fom::Atom(p, t))
            }
            Some(Tok::Ident(_)) | Some(Tok::Number(_)) => {
                let t = self.term()?;
                let d = match self.peek().cloned() {
                    Some(Tok::Diff(d)) => d,
                    _ => return Err(self.fail("expected `<={..}`")),
                };
                self.pos += 1;
                Ok(Fom::Diff(t, d, self.term()?))
            }
            _ => Err(self.fail("expected a formula")),
        }
    }
}
