use super::RewriteError;
use crate::syntax::{BinaryTemporal, Formula, Interval};

/// Range splitting at `i ∈ [m..n)`: an until or since becomes the
/// disjunction of the `[m..i)` and `[i..n)` copies, a release or trigger
/// their conjunction.
pub fn range_split(f: &Formula, i: u64) -> Result<Formula, RewriteError> {
    let Some((op, interval, a, b)) = f.as_binary_temporal() else {
        return Err(RewriteError::NotBinaryTemporal(f.to_string()));
    };
    if !interval.contains(i) {
        return Err(RewriteError::SplitOutOfRange { point: i, interval });
    }
    let low = op.build(Interval::new(interval.lower, i), a.clone(), b.clone());
    let high = op.build(
        Interval {
            lower: i,
            upper: interval.upper,
        },
        a.clone(),
        b.clone(),
    );
    Ok(match op {
        BinaryTemporal::Until | BinaryTemporal::Since => Formula::or(low, high),
        BinaryTemporal::Release | BinaryTemporal::Trigger => Formula::and(low, high),
    })
}
