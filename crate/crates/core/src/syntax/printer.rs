//! Pretty-printer producing text that [`parse_formula`](super::parse_formula)
//! reads back to the identical kernel tree.
//!
//! Sugar (`#true`, `~`, `<->`, `F`, `G`, `O`, `H`, `wX`, `wY`, `#init`,
//! `#final`) is recognized structurally. Parentheses follow precedence, plus
//! one clarity rule: an infix child whose operator differs from its parent's
//! is always parenthesized, so `q | (p & r)` is printed even though `&`
//! already binds tighter.

use super::formula::Formula;
use super::interval::Interval;

/// The shape a node is printed as.
enum View<'a> {
    Leaf(String),
    Unary(String, &'a Formula),
    Infix(Infix, &'a Formula, &'a Formula),
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Assoc {
    Left,
    Right,
}

#[derive(Clone, PartialEq, Eq)]
struct Infix {
    symbol: String,
    /// Operator family used by the clarity rule (the interval is ignored).
    family: &'static str,
    prec: u8,
    assoc: Assoc,
}

impl Infix {
    fn new(family: &'static str, symbol: String, prec: u8, assoc: Assoc) -> Self {
        Infix {
            symbol,
            family,
            prec,
            assoc,
        }
    }
}

fn interval_suffix(i: Interval, point_form: bool) -> String {
    if i.is_full() {
        return String::new();
    }
    match i.as_point() {
        Some(m) if point_form => format!("[{m}]"),
        _ => i.to_string(),
    }
}

fn unary_op(name: &str, i: Interval, point_form: bool) -> String {
    format!("{name}{}", interval_suffix(i, point_form))
}

fn is_negated_next_top(f: &Formula, i: Interval) -> bool {
    matches!(f.as_negation(), Some(Formula::Next(j, t)) if *j == i && t.is_top())
}

fn is_negated_prev_top(f: &Formula, i: Interval) -> bool {
    matches!(f.as_negation(), Some(Formula::Prev(j, t)) if *j == i && t.is_top())
}

fn view(f: &Formula) -> View<'_> {
    use Assoc::*;
    if f.is_top() {
        return View::Leaf("#true".into());
    }
    match f {
        Formula::Atom(p) => View::Leaf(p.clone()),
        Formula::Bottom => View::Leaf("#false".into()),
        Formula::Implies(a, b) if **b == Formula::Bottom => match &**a {
            Formula::Next(i, t) if i.is_full() && t.is_top() => View::Leaf("#final".into()),
            Formula::Prev(i, t) if i.is_full() && t.is_top() => View::Leaf("#init".into()),
            _ => View::Unary("~".into(), a),
        },
        Formula::Or(a, b) => match &**a {
            Formula::Next(i, x) if is_negated_next_top(b, *i) => {
                View::Unary(unary_op("wX", *i, true), x)
            }
            Formula::Prev(i, x) if is_negated_prev_top(b, *i) => {
                View::Unary(unary_op("wY", *i, true), x)
            }
            _ => View::Infix(Infix::new("|", "|".into(), 3, Left), a, b),
        },
        Formula::And(a, b) => match (&**a, &**b) {
            (Formula::Implies(x1, y1), Formula::Implies(y2, x2))
                if x1 == x2 && y1 == y2 && x1 != y1 =>
            {
                View::Infix(Infix::new("<->", "<->".into(), 1, Left), x1, y1)
            }
            _ => View::Infix(Infix::new("&", "&".into(), 4, Left), a, b),
        },
        Formula::Implies(a, b) => View::Infix(Infix::new("->", "->".into(), 2, Right), a, b),
        Formula::Next(i, a) => View::Unary(unary_op("X", *i, true), a),
        Formula::Prev(i, a) => View::Unary(unary_op("Y", *i, true), a),
        Formula::Until(i, a, b) if a.is_top() => View::Unary(unary_op("F", *i, false), b),
        Formula::Since(i, a, b) if a.is_top() => View::Unary(unary_op("O", *i, false), b),
        Formula::Release(i, a, b) if **a == Formula::Bottom => {
            View::Unary(unary_op("G", *i, false), b)
        }
        Formula::Trigger(i, a, b) if **a == Formula::Bottom => {
            View::Unary(unary_op("H", *i, false), b)
        }
        _ => {
            let (op, i, a, b) = f.as_binary_temporal().expect("binary temporal node");
            let family = op.symbol();
            View::Infix(
                Infix::new(
                    family,
                    format!("{family}{}", interval_suffix(i, false)),
                    5,
                    Right,
                ),
                a,
                b,
            )
        }
    }
}

/// Renders a formula in the concrete syntax, re-sugaring derived operators.
pub fn print_formula(f: &Formula) -> String {
    let mut out = String::new();
    write(f, &mut out);
    out
}

fn write(f: &Formula, out: &mut String) {
    match view(f) {
        View::Leaf(s) => out.push_str(&s),
        View::Unary(op, a) => {
            out.push_str(&op);
            match view(a) {
                View::Infix(..) => {
                    // `X[1](p | q)` and `~(p | q)`, but `G (p | q)`, `F[1..3) (p | q)`
                    if !op.ends_with(']') && op != "~" {
                        out.push(' ');
                    }
                    out.push('(');
                    write(a, out);
                    out.push(')');
                }
                _ => {
                    if op != "~" {
                        out.push(' ');
                    }
                    write(a, out);
                }
            }
        }
        View::Infix(op, a, b) => {
            write_operand(&op, a, op.assoc == Assoc::Left, out);
            out.push(' ');
            out.push_str(&op.symbol);
            out.push(' ');
            write_operand(&op, b, op.assoc == Assoc::Right, out);
        }
    }
}

fn write_operand(parent: &Infix, child: &Formula, assoc_side: bool, out: &mut String) {
    let bare = match view(child) {
        View::Infix(c, _, _) => c.family == parent.family && c.prec == parent.prec && assoc_side,
        _ => true,
    };
    if bare {
        write(child, out);
    } else {
        out.push('(');
        write(child, out);
        out.push(')');
    }
}
