use super::RewriteError;
use crate::syntax::{Formula, Interval, Upper};

/// A unary temporal constructor such as `Formula::always`.
type Unary = fn(Interval, Formula) -> Formula;

/// Replaces every next/previous operator by always/eventually (resp.
/// historically/once) combinations, assuming strict traces.
///
/// For `X[m..n) φ` with `h = max(1, m)`:
/// * empty interval: `⊥`;
/// * `φ = ⊤`, or the window `[h..n)` holds a single distance:
///   `G[1..h) ⊥ & F[h..n) φ`;
/// * otherwise `⋁_{d ∈ [h..n)} (G[1..d) ⊥ & F[d..d+1) φ)`, which pins the
///   successor to one distance at a time. `F[h..n) φ` alone would also
///   accept φ at a later state in the window.
///
/// An unbounded `X[m..w) φ` with `φ ≠ ⊤` has no such definition and is
/// rejected.
pub fn one_step_eliminate(f: &Formula) -> Result<Formula, RewriteError> {
    match f {
        Formula::Next(i, a) | Formula::Prev(i, a) => {
            let future = matches!(f, Formula::Next(..));
            let a = one_step_eliminate(a)?;
            if i.is_empty() {
                return Ok(Formula::Bottom);
            }
            let (box_, diamond): (Unary, Unary) = if future {
                (Formula::always, Formula::eventually)
            } else {
                (Formula::historically, Formula::once)
            };
            let h = i.lower.max(1);
            let window = Interval {
                lower: h,
                upper: i.upper,
            };
            let no_state_before = |d: u64| box_(Interval::new(1, d), Formula::Bottom);
            let single = window.upper == Upper::Finite(h + 1) || window.is_empty();
            if a.is_top() || single {
                return Ok(Formula::and(no_state_before(h), diamond(window, a)));
            }
            let Upper::Finite(n) = i.upper else {
                return Err(RewriteError::UnboundedStep(f.to_string()));
            };
            Ok(Formula::disjunction((h..n).map(|d| {
                Formula::and(no_state_before(d), diamond(Interval::point(d), a.clone()))
            })))
        }
        Formula::Atom(_) | Formula::Bottom => Ok(f.clone()),
        _ => {
            let mut err = None;
            let out = f.map_children(|c| {
                one_step_eliminate(c).unwrap_or_else(|e| {
                    err.get_or_insert(e);
                    Formula::Bottom
                })
            });
            err.map_or(Ok(out), Err)
        }
    }
}
