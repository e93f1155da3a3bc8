use std::collections::BTreeSet;
use std::fmt;

/// A first-order term: a variable, the constant `0`, or a domain element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(String),
    Zero,
    Point(u64),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Self {
        Term::Var(name.into())
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => f.write_str(v),
            Term::Zero => f.write_str("0"),
            Term::Point(n) => write!(f, "{n}"),
        }
    }
}

/// Bound of a difference predicate: an integer or ω.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Delta {
    Int(i64),
    Omega,
}

impl fmt::Display for Delta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Delta::Int(d) => write!(f, "{d}"),
            Delta::Omega => f.write_str("w"),
        }
    }
}

/// A first-order metric formula.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Fom {
    Bottom,
    Top,
    /// Monadic atom `p(t)`.
    Atom(String, Term),
    /// `t ⪯_δ u`, i.e. `t − u ≤ δ`.
    Diff(Term, Delta, Term),
    And(Box<Fom>, Box<Fom>),
    Or(Box<Fom>, Box<Fom>),
    Implies(Box<Fom>, Box<Fom>),
    Forall(String, Box<Fom>),
    Exists(String, Box<Fom>),
}

impl Fom {
    pub fn atom(p: impl Into<String>, t: Term) -> Self {
        Fom::Atom(p.into(), t)
    }

    pub fn diff(t: Term, d: i64, u: Term) -> Self {
        Fom::Diff(t, Delta::Int(d), u)
    }

    pub fn and(a: Fom, b: Fom) -> Self {
        Fom::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Fom, b: Fom) -> Self {
        Fom::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Fom, b: Fom) -> Self {
        Fom::Implies(Box::new(a), Box::new(b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(a: Fom) -> Self {
        Fom::implies(a, Fom::Bottom)
    }

    pub fn forall(v: impl Into<String>, a: Fom) -> Self {
        Fom::Forall(v.into(), Box::new(a))
    }

    pub fn exists(v: impl Into<String>, a: Fom) -> Self {
        Fom::Exists(v.into(), Box::new(a))
    }

    /// Left-nested conjunction; empty is ⊤.
    pub fn conjunction(items: impl IntoIterator<Item = Fom>) -> Self {
        items.into_iter().reduce(Fom::and).unwrap_or(Fom::Top)
    }

    /// `x ≤ y`, i.e. `x ⪯_0 y`.
    pub fn le(x: Term, y: Term) -> Self {
        Fom::diff(x, 0, y)
    }

    /// `x = y`, i.e. `x ≤ y ∧ y ≤ x`.
    pub fn eq(x: Term, y: Term) -> Self {
        Fom::and(Fom::le(x.clone(), y.clone()), Fom::le(y, x))
    }

    /// `x ≠ y`, i.e. `¬(x = y)`.
    pub fn ne(x: Term, y: Term) -> Self {
        Fom::not(Fom::eq(x, y))
    }

    /// `x < y`, i.e. `x ≤ y ∧ x ≠ y`.
    pub fn lt(x: Term, y: Term) -> Self {
        Fom::and(Fom::le(x.clone(), y.clone()), Fom::ne(x, y))
    }

    /// `x ≺_δ y`, i.e. `¬(y ⪯_{−δ} x)`; `x ≺_ω y` holds outright and is ⊤.
    pub fn strictly_within(x: Term, d: Delta, y: Term) -> Self {
        match d {
            Delta::Int(d) => Fom::not(Fom::diff(y, -d, x)),
            Delta::Omega => Fom::Top,
        }
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        let mut term = |t: &Term, bound: &Vec<String>| {
            if let Term::Var(v) = t {
                if !bound.contains(v) {
                    out.insert(v.clone());
                }
            }
        };
        match self {
            Fom::Bottom | Fom::Top => {}
            Fom::Atom(_, t) => term(t, bound),
            Fom::Diff(t, _, u) => {
                term(t, bound);
                term(u, bound);
            }
            Fom::And(a, b) | Fom::Or(a, b) | Fom::Implies(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Fom::Forall(v, a) | Fom::Exists(v, a) => {
                bound.push(v.clone());
                a.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    pub fn is_sentence(&self) -> bool {
        self.free_vars().is_empty()
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        1 + match self {
            Fom::Bottom | Fom::Top | Fom::Atom(..) | Fom::Diff(..) => 0,
            Fom::And(a, b) | Fom::Or(a, b) | Fom::Implies(a, b) => a.size() + b.size(),
            Fom::Forall(_, a) | Fom::Exists(_, a) => a.size(),
        }
    }
}

fn prec(f: &Fom) -> u8 {
    match f {
        Fom::Implies(_, b) if **b != Fom::Bottom => 1,
        Fom::Or(..) => 2,
        Fom::And(..) => 3,
        _ => 4,
    }
}

fn write_child(f: &mut fmt::Formatter<'_>, child: &Fom, parens: bool) -> fmt::Result {
    if parens {
        write!(f, "({child})")
    } else {
        write!(f, "{child}")
    }
}

/// Text form: `!x` (∀), `?x` (∃), `t <={d} u`, `p(t)`, `~`, `&`, `|`, `->`,
/// `#true`, `#false`. Precedence, loosest first: `->` (right), `|`, `&`;
/// a `|` directly under `&` or vice versa is parenthesized for clarity.
/// Quantifier bodies are parenthesized unless atomic.
impl fmt::Display for Fom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fom::Bottom => f.write_str("#false"),
            Fom::Top => f.write_str("#true"),
            Fom::Atom(p, t) => write!(f, "{p}({t})"),
            Fom::Diff(t, d, u) => write!(f, "{t} <={{{d}}} {u}"),
            Fom::Implies(a, b) if **b == Fom::Bottom => {
                f.write_str("~")?;
                write_child(f, a, prec(a) < 4)
            }
            Fom::And(a, b) => {
                write_child(f, a, !matches!(**a, Fom::And(..)) && prec(a) < 4)?;
                f.write_str(" & ")?;
                write_child(f, b, prec(b) < 4)
            }
            Fom::Or(a, b) => {
                write_child(f, a, !matches!(**a, Fom::Or(..)) && prec(a) < 4)?;
                f.write_str(" | ")?;
                write_child(f, b, prec(b) < 4)
            }
            Fom::Implies(a, b) => {
                write_child(f, a, prec(a) <= 1)?;
                f.write_str(" -> ")?;
                write_child(f, b, false)
            }
            Fom::Forall(v, a) | Fom::Exists(v, a) => {
                let q = if matches!(self, Fom::Forall(..)) {
                    '!'
                } else {
                    '?'
                };
                write!(f, "{q}{v} ")?;
                write_child(f, a, prec(a) < 4)
            }
        }
    }
}
