use super::ast::{Delta, Fom, Term};
use super::FomError;
use crate::syntax::{Formula, Interval, Upper};

/// `⟦φ⟧_x`: the first-order rendering of a metric formula at term `x`.
///
/// Bound variables are named by temporal nesting depth `d`: `y<d>` for the
/// state a connective quantifies over and `z<d>` for the states between, so
/// names never clash with the enclosing connectives' variables. `x ≺_ω y`
/// holds in every interpretation and is emitted as `#true`.
pub fn translate(f: &Formula, x: &Term) -> Result<Fom, FomError> {
    Translator::default().go(f, x)
}

/// `⟦φ⟧_t` for a time point (`0` is rendered as the constant).
pub fn translate_at(f: &Formula, t: u64) -> Result<Fom, FomError> {
    let x = if t == 0 { Term::Zero } else { Term::Point(t) };
    translate(f, &x)
}

#[derive(Default)]
struct Translator {
    depth: usize,
}

fn bounds(i: &Interval) -> Result<(i64, Delta), FomError> {
    if i.is_empty() {
        return Err(FomError::EmptyInterval(i.to_string()));
    }
    let n = match i.upper {
        Upper::Finite(n) => Delta::Int(n as i64),
        Upper::Omega => Delta::Omega,
    };
    Ok((i.lower as i64, n))
}

impl Translator {
    fn fresh(&self) -> (Term, Term) {
        (
            Term::Var(format!("y{}", self.depth)),
            Term::Var(format!("z{}", self.depth)),
        )
    }

    /// Translates a temporal operand one nesting level down.
    fn inner(&mut self, f: &Formula, x: &Term) -> Result<Fom, FomError> {
        self.depth += 1;
        let r = self.go(f, x);
        self.depth -= 1;
        r
    }

    fn name(t: &Term) -> String {
        match t {
            Term::Var(v) => v.clone(),
            _ => unreachable!("fresh terms are variables"),
        }
    }

    fn go(&mut self, f: &Formula, x: &Term) -> Result<Fom, FomError> {
        Ok(match f {
            Formula::Atom(p) => Fom::atom(p.as_str(), x.clone()),
            Formula::Bottom => Fom::Bottom,
            Formula::And(a, b) => Fom::and(self.go(a, x)?, self.go(b, x)?),
            Formula::Or(a, b) => Fom::or(self.go(a, x)?, self.go(b, x)?),
            Formula::Implies(a, b) => Fom::implies(self.go(a, x)?, self.go(b, x)?),
            Formula::Next(i, a) => {
                let (m, n) = bounds(i)?;
                let (y, z) = self.fresh();
                let body = self.inner(a, &y)?;
                Fom::exists(
                    Self::name(&y),
                    Fom::conjunction([
                        Fom::lt(x.clone(), y.clone()),
                        Fom::not(Fom::exists(
                            Self::name(&z),
                            Fom::and(Fom::lt(x.clone(), z.clone()), Fom::lt(z, y.clone())),
                        )),
                        Fom::diff(x.clone(), -m, y.clone()),
                        Fom::strictly_within(y, n, x.clone()),
                        body,
                    ]),
                )
            }
            Formula::Prev(i, a) => {
                let (m, n) = bounds(i)?;
                let (y, z) = self.fresh();
                let body = self.inner(a, &y)?;
                Fom::exists(
                    Self::name(&y),
                    Fom::conjunction([
                        Fom::lt(y.clone(), x.clone()),
                        Fom::not(Fom::exists(
                            Self::name(&z),
                            Fom::and(Fom::lt(y.clone(), z.clone()), Fom::lt(z, x.clone())),
                        )),
                        Fom::strictly_within(x.clone(), n, y.clone()),
                        Fom::diff(y.clone(), -m, x.clone()),
                        body,
                    ]),
                )
            }
            Formula::Until(i, a, b) => {
                let (m, n) = bounds(i)?;
                let (y, z) = self.fresh();
                let target = self.inner(b, &y)?;
                let between = self.inner(a, &z)?;
                Fom::exists(
                    Self::name(&y),
                    Fom::conjunction([
                        Fom::le(x.clone(), y.clone()),
                        Fom::diff(x.clone(), -m, y.clone()),
                        Fom::strictly_within(y.clone(), n, x.clone()),
                        target,
                        Fom::forall(
                            Self::name(&z),
                            Fom::implies(
                                Fom::and(Fom::le(x.clone(), z.clone()), Fom::lt(z, y)),
                                between,
                            ),
                        ),
                    ]),
                )
            }
            Formula::Release(i, a, b) => {
                let (m, n) = bounds(i)?;
                let (y, z) = self.fresh();
                let target = self.inner(b, &y)?;
                let between = self.inner(a, &z)?;
                Fom::forall(
                    Self::name(&y),
                    Fom::implies(
                        Fom::conjunction([
                            Fom::le(x.clone(), y.clone()),
                            Fom::diff(x.clone(), -m, y.clone()),
                            Fom::strictly_within(y.clone(), n, x.clone()),
                        ]),
                        Fom::or(
                            target,
                            Fom::exists(
                                Self::name(&z),
                                Fom::and(
                                    Fom::and(Fom::le(x.clone(), z.clone()), Fom::lt(z, y)),
                                    between,
                                ),
                            ),
                        ),
                    ),
                )
            }
            Formula::Since(i, a, b) => {
                let (m, n) = bounds(i)?;
                let (y, z) = self.fresh();
                let target = self.inner(b, &y)?;
                let between = self.inner(a, &z)?;
                Fom::exists(
                    Self::name(&y),
                    Fom::conjunction([
                        Fom::le(y.clone(), x.clone()),
                        Fom::strictly_within(x.clone(), n, y.clone()),
                        Fom::diff(y.clone(), -m, x.clone()),
                        target,
                        Fom::forall(
                            Self::name(&z),
                            Fom::implies(
                                Fom::and(Fom::lt(y, z.clone()), Fom::le(z, x.clone())),
                                between,
                            ),
                        ),
                    ]),
                )
            }
            Formula::Trigger(i, a, b) => {
                let (m, n) = bounds(i)?;
                let (y, z) = self.fresh();
                let target = self.inner(b, &y)?;
                let between = self.inner(a, &z)?;
                Fom::forall(
                    Self::name(&y),
                    Fom::implies(
                        Fom::conjunction([
                            Fom::le(y.clone(), x.clone()),
                            Fom::strictly_within(x.clone(), n, y.clone()),
                            Fom::diff(y.clone(), -m, x.clone()),
                        ]),
                        Fom::or(
                            target,
                            Fom::exists(
                                Self::name(&z),
                                Fom::and(
                                    Fom::and(Fom::lt(y, z.clone()), Fom::le(z, x.clone())),
                                    between,
                                ),
                            ),
                        ),
                    ),
                )
            }
        })
    }
}
