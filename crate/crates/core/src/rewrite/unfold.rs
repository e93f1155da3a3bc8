use super::RewriteError;
use crate::syntax::{BinaryTemporal, Formula, Interval, Upper};

/// Eliminates every until, release, since and trigger with a finite
/// interval in favour of single-point next/previous operators, assuming
/// strict traces. Per node with interval `[m..n)`:
///
/// * empty: `⊥` for U/S, `⊤` for R/T;
/// * `[0..1)`: the right operand;
/// * `[m..m+1)`, `m > 0`: single-point unfolding over `X[1..m]`;
/// * `[0..n)`, `n > 1`: zero-based unfolding;
/// * `0 < m < n−1`: next-unfolding, whose sub-intervals fall back on the
///   cases above.
///
/// Each recursive call shrinks `n`, so the expansion terminates. A
/// next/previous node whose only admitted distance is 0 becomes `⊥`.
pub fn unfold_next(f: &Formula) -> Result<Formula, RewriteError> {
    Ok(match f {
        Formula::Atom(_) | Formula::Bottom => f.clone(),
        Formula::And(a, b) => Formula::and(unfold_next(a)?, unfold_next(b)?),
        Formula::Or(a, b) => Formula::or(unfold_next(a)?, unfold_next(b)?),
        Formula::Implies(a, b) => Formula::implies(unfold_next(a)?, unfold_next(b)?),
        Formula::Next(i, a) | Formula::Prev(i, a) if only_zero(i) => {
            unfold_next(a)?;
            Formula::Bottom
        }
        Formula::Next(i, a) => Formula::next(*i, unfold_next(a)?),
        Formula::Prev(i, a) => Formula::prev(*i, unfold_next(a)?),
        _ => {
            let (op, i, a, b) = f.as_binary_temporal().expect("binary temporal node");
            let Upper::Finite(n) = i.upper else {
                return Err(RewriteError::UnboundedInterval(f.to_string()));
            };
            let (a, b) = (unfold_next(a)?, unfold_next(b)?);
            expand(op, i.lower, n, &a, &b)
        }
    })
}

fn only_zero(i: &Interval) -> bool {
    i.is_empty() || *i == Interval::point(0)
}

fn step(op: BinaryTemporal, d: u64, x: Formula) -> Formula {
    let i = Interval::point(d);
    match op {
        BinaryTemporal::Until => Formula::next(i, x),
        BinaryTemporal::Release => Formula::weak_next(i, x),
        BinaryTemporal::Since => Formula::prev(i, x),
        BinaryTemporal::Trigger => Formula::weak_prev(i, x),
    }
}

/// `a ∧ rest` for U/S and `a ∨ rest` for R/T, dropping a neutral `a`.
fn guard(op: BinaryTemporal, a: &Formula, rest: Formula) -> Formula {
    if op.is_existential() {
        if a.is_top() {
            rest
        } else {
            Formula::and(a.clone(), rest)
        }
    } else if *a == Formula::Bottom {
        rest
    } else {
        Formula::or(a.clone(), rest)
    }
}

fn join(op: BinaryTemporal, items: Vec<Formula>) -> Formula {
    if op.is_existential() {
        Formula::disjunction(items)
    } else {
        Formula::conjunction(items)
    }
}

/// Unfolds `a op[m..n) b` where `a` and `b` are already free of binary
/// temporal nodes.
fn expand(op: BinaryTemporal, m: u64, n: u64, a: &Formula, b: &Formula) -> Formula {
    if m >= n {
        return if op.is_existential() {
            Formula::Bottom
        } else {
            Formula::top()
        };
    }
    if m == 0 && n == 1 {
        return b.clone();
    }
    if n == m + 1 {
        let steps = (1..=m)
            .map(|i| step(op, i, expand(op, m - i, m - i + 1, a, b)))
            .collect();
        return guard(op, a, join(op, steps));
    }
    if m == 0 {
        let last = n - 1;
        let steps = (1..=last)
            .map(|i| step(op, i, expand(op, 0, n - i, a, b)))
            .collect();
        let rest = guard(op, a, join(op, steps));
        return if op.is_existential() {
            Formula::or(b.clone(), rest)
        } else {
            Formula::and(b.clone(), rest)
        };
    }
    let steps = (1..=m)
        .map(|i| step(op, i, expand(op, m - i, n - i, a, b)))
        .chain((m + 1..n).map(|i| step(op, i, expand(op, 0, n - i, a, b))))
        .collect();
    guard(op, a, join(op, steps))
}
