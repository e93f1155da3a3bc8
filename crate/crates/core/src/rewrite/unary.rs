use crate::syntax::{BinaryTemporal, Formula, Interval};

/// A unary temporal constructor such as `Formula::always`.
type Unary = fn(Interval, Formula) -> Formula;

/// Rewrites into unary normal form, where only the unary operators
/// F/G/O/H/X/Y carry intervals and every until, release, since and trigger
/// is indexed by `[0..w)`. Bottom-up, for `a op[m..n) b`:
///
/// * `a U[m..n) b` → `F[m..n) b & G[0..m) (a U (a & X b))`, or
///   `F[0..n) b & a U b` when `m = 0`;
/// * `a R[m..n) b` → `G[m..n) b | F[0..m) (a R (a | wX b))`, or
///   `G[0..n) b | a R b` when `m = 0`;
/// * since and trigger alike with O/H/Y/wY.
///
/// Sound on strict traces.
pub fn to_unary_nf(f: &Formula) -> Formula {
    let Some((op, i, a, b)) = f.as_binary_temporal() else {
        return f.map_children(to_unary_nf);
    };
    let b = to_unary_nf(b);
    if f.is_unary_temporal_sugar() {
        return op.build(i, a.clone(), b);
    }
    let a = to_unary_nf(a);
    if i.is_full() {
        return op.build(i, a, b);
    }
    let full = Interval::FULL;
    let head = Interval::new(0, i.lower);
    match op {
        BinaryTemporal::Until | BinaryTemporal::Since => {
            let (diamond, box_, step): (Unary, Unary, Unary) = if op.is_future() {
                (Formula::eventually, Formula::always, Formula::next)
            } else {
                (Formula::once, Formula::historically, Formula::prev)
            };
            let reach = diamond(i, b.clone());
            if i.lower == 0 {
                Formula::and(reach, op.build(full, a, b))
            } else {
                let inner = op.build(full, a.clone(), Formula::and(a, step(full, b)));
                Formula::and(reach, box_(head, inner))
            }
        }
        BinaryTemporal::Release | BinaryTemporal::Trigger => {
            let (box_, diamond, weak): (Unary, Unary, Unary) = if op.is_future() {
                (Formula::always, Formula::eventually, Formula::weak_next)
            } else {
                (Formula::historically, Formula::once, Formula::weak_prev)
            };
            let hold = box_(i, b.clone());
            if i.lower == 0 {
                Formula::or(hold, op.build(full, a, b))
            } else {
                let inner = op.build(full, a.clone(), Formula::or(a, weak(full, b)));
                Formula::or(hold, diamond(head, inner))
            }
        }
    }
}

/// True when every interval-indexed binary temporal node is unary sugar.
pub fn is_unary_normal_form(f: &Formula) -> bool {
    let mut ok = true;
    f.visit(&mut |g| {
        if let Some((_, i, _, _)) = g.as_binary_temporal() {
            ok &= i.is_full() || g.is_unary_temporal_sugar();
        }
    });
    ok
}
