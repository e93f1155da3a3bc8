use crate::syntax::Formula;

/// De Morgan for the binary temporal connectives, applied wherever the
/// pattern occurs: `~(a U b)` becomes `~a R ~b`, `~(a R b)` becomes
/// `~a U ~b`, and likewise S/T. The new negations are pushed further when
/// they meet another such node. Intervals are kept.
pub fn push_negation(f: &Formula) -> Formula {
    if let Some(inner) = f.as_negation() {
        let neg = |x: &Formula| Box::new(push_negation(&Formula::not(x.clone())));
        match inner {
            Formula::Until(i, a, b) => return Formula::Release(*i, neg(a), neg(b)),
            Formula::Release(i, a, b) => return Formula::Until(*i, neg(a), neg(b)),
            Formula::Since(i, a, b) => return Formula::Trigger(*i, neg(a), neg(b)),
            Formula::Trigger(i, a, b) => return Formula::Since(*i, neg(a), neg(b)),
            _ => {}
        }
    }
    f.map_children(push_negation)
}
