use super::RewriteError;
use crate::syntax::Formula;

/// Boolean duality δ: swaps ⊤/⊥, ∧/∨, U/R, S/T, X/wX and Y/wY (hence
/// also F/G and O/H), keeping intervals. The input must be free of
/// implication apart from the sugar `#true`, `wX` and `wY`.
pub fn bool_dual(f: &Formula) -> Result<Formula, RewriteError> {
    if f.is_top() {
        return Ok(Formula::Bottom);
    }
    let d = |x: &Formula| bool_dual(x);
    Ok(match f {
        Formula::Atom(_) => f.clone(),
        Formula::Bottom => Formula::top(),
        Formula::Or(a, b) => match (&**a, b.as_negation()) {
            (Formula::Next(i, x), Some(Formula::Next(j, t))) if i == j && t.is_top() => {
                Formula::next(*i, d(x)?)
            }
            (Formula::Prev(i, x), Some(Formula::Prev(j, t))) if i == j && t.is_top() => {
                Formula::prev(*i, d(x)?)
            }
            _ => Formula::and(d(a)?, d(b)?),
        },
        Formula::And(a, b) => Formula::or(d(a)?, d(b)?),
        Formula::Implies(..) => return Err(RewriteError::ImplicationPresent(f.to_string())),
        Formula::Next(i, a) => Formula::weak_next(*i, d(a)?),
        Formula::Prev(i, a) => Formula::weak_prev(*i, d(a)?),
        Formula::Until(i, a, b) => Formula::release(*i, d(a)?, d(b)?),
        Formula::Release(i, a, b) => Formula::until(*i, d(a)?, d(b)?),
        Formula::Since(i, a, b) => Formula::trigger(*i, d(a)?, d(b)?),
        Formula::Trigger(i, a, b) => Formula::since(*i, d(a)?, d(b)?),
    })
}

/// Temporal swap σ: exchanges each future connective with its past twin
/// (U/S, R/T, X/Y), keeping intervals.
pub fn time_swap(f: &Formula) -> Formula {
    let s = |x: &Formula| Box::new(time_swap(x));
    match f {
        Formula::Next(i, a) => Formula::Prev(*i, s(a)),
        Formula::Prev(i, a) => Formula::Next(*i, s(a)),
        Formula::Until(i, a, b) => Formula::Since(*i, s(a), s(b)),
        Formula::Since(i, a, b) => Formula::Until(*i, s(a), s(b)),
        Formula::Release(i, a, b) => Formula::Trigger(*i, s(a), s(b)),
        Formula::Trigger(i, a, b) => Formula::Release(*i, s(a), s(b)),
        _ => f.map_children(time_swap),
    }
}
