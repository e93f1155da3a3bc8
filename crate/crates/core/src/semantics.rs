//! Here-and-there satisfaction over timed traces.
//!
//! [`mht_sat`] follows the satisfaction clauses literally, by structural
//! recursion: the implication clause checks both the trace itself and its
//! total part, every other clause stays in the current world. On total traces
//! this is ordinary metric temporal satisfaction.

use std::collections::HashMap;

use thiserror::Error;

use crate::syntax::{Formula, Interval, Theory};
use crate::traces::{Alphabet, TimedTrace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemanticsError {
    #[error("state index {k} out of range for a trace of length {len}")]
    IndexOutOfRange { k: usize, len: usize },
}

/// Which component of an HT-trace atoms are read from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum World {
    /// `⟨H, T⟩` itself: atoms are read from `H`.
    Here,
    /// The total part `⟨T, T⟩`.
    There,
}

/// Evaluates formulas on one trace, optionally memoizing per
/// (node, world, state).
pub struct Evaluator<'t> {
    trace: &'t TimedTrace,
    cache: Option<HashMap<(usize, World, usize), bool>>,
}

impl<'t> Evaluator<'t> {
    pub fn new(trace: &'t TimedTrace) -> Self {
        Evaluator { trace, cache: None }
    }

    /// Memoizing evaluator; gives the same answers as [`Evaluator::new`].
    /// The cache is keyed by node address, so it must only be used with
    /// formulas that outlive the evaluator unchanged.
    pub fn cached(trace: &'t TimedTrace) -> Self {
        Evaluator {
            trace,
            cache: Some(HashMap::new()),
        }
    }

    pub fn trace(&self) -> &'t TimedTrace {
        self.trace
    }

    /// `M, k ⊨ φ` (world [`World::Here`]) or `(⟨T,T⟩, τ), k ⊨ φ` ([`World::There`]).
    pub fn sat(&mut self, world: World, k: usize, f: &Formula) -> Result<bool, SemanticsError> {
        let len = self.trace.len();
        if k >= len {
            return Err(SemanticsError::IndexOutOfRange { k, len });
        }
        Ok(self.eval(world, k, f))
    }

    fn eval(&mut self, w: World, k: usize, f: &Formula) -> bool {
        if matches!(f, Formula::Atom(_) | Formula::Bottom) {
            return self.eval_node(w, k, f);
        }
        let key = (f as *const Formula as usize, w, k);
        if let Some(v) = self.cache.as_ref().and_then(|c| c.get(&key)) {
            return *v;
        }
        let v = self.eval_node(w, k, f);
        if let Some(c) = self.cache.as_mut() {
            c.insert(key, v);
        }
        v
    }

    fn gap(&self, from: usize, to: usize) -> u64 {
        self.trace.time(to) - self.trace.time(from)
    }

    fn eval_node(&mut self, w: World, k: usize, f: &Formula) -> bool {
        let len = self.trace.len();
        match f {
            Formula::Atom(p) => {
                let states = match w {
                    World::Here => self.trace.here(),
                    World::There => self.trace.there(),
                };
                states[k] & self.trace.alphabet().bit(p) != 0
            }
            Formula::Bottom => false,
            Formula::And(a, b) => self.eval(w, k, a) && self.eval(w, k, b),
            Formula::Or(a, b) => self.eval(w, k, a) || self.eval(w, k, b),
            Formula::Implies(a, b) => {
                let there = !self.eval(World::There, k, a) || self.eval(World::There, k, b);
                match w {
                    World::There => there,
                    World::Here => {
                        there && (!self.eval(World::Here, k, a) || self.eval(World::Here, k, b))
                    }
                }
            }
            Formula::Prev(i, a) => {
                k > 0 && i.contains(self.gap(k - 1, k)) && self.eval(w, k - 1, a)
            }
            Formula::Next(i, a) => {
                k + 1 < len && i.contains(self.gap(k, k + 1)) && self.eval(w, k + 1, a)
            }
            Formula::Since(i, a, b) => (0..=k).any(|j| {
                i.contains(self.gap(j, k))
                    && self.eval(w, j, b)
                    && (j + 1..=k).all(|x| self.eval(w, x, a))
            }),
            Formula::Trigger(i, a, b) => (0..=k).all(|j| {
                !i.contains(self.gap(j, k))
                    || self.eval(w, j, b)
                    || (j + 1..=k).any(|x| self.eval(w, x, a))
            }),
            Formula::Until(i, a, b) => (k..len).any(|j| {
                i.contains(self.gap(k, j))
                    && self.eval(w, j, b)
                    && (k..j).all(|x| self.eval(w, x, a))
            }),
            Formula::Release(i, a, b) => (k..len).all(|j| {
                !i.contains(self.gap(k, j))
                    || self.eval(w, j, b)
                    || (k..j).any(|x| self.eval(w, x, a))
            }),
        }
    }
}

/// `M, k ⊨ φ`
pub fn mht_sat(m: &TimedTrace, k: usize, f: &Formula) -> Result<bool, SemanticsError> {
    Evaluator::new(m).sat(World::Here, k, f)
}

/// [`mht_sat`] with memoization.
pub fn mht_sat_cached(m: &TimedTrace, k: usize, f: &Formula) -> Result<bool, SemanticsError> {
    Evaluator::cached(m).sat(World::Here, k, f)
}

/// Metric temporal satisfaction: `(⟨T,T⟩, τ), k ⊨ φ`.
pub fn mtl_sat(m: &TimedTrace, k: usize, f: &Formula) -> Result<bool, SemanticsError> {
    Evaluator::new(m).sat(World::There, k, f)
}

/// `M, 0 ⊨ φ` for every φ in the theory.
pub fn is_model(m: &TimedTrace, theory: &Theory) -> bool {
    is_model_of(m, &theory.formulas)
}

pub fn is_model_of(m: &TimedTrace, formulas: &[Formula]) -> bool {
    let mut ev = Evaluator::cached(m);
    formulas.iter().all(|f| ev.eval(World::Here, 0, f))
}

/// 0-based indices of the formulas not satisfied at state `k`.
pub fn failing_formulas(
    m: &TimedTrace,
    k: usize,
    theory: &Theory,
) -> Result<Vec<usize>, SemanticsError> {
    let mut ev = Evaluator::cached(m);
    let mut out = Vec::new();
    for (idx, f) in theory.iter().enumerate() {
        if !ev.sat(World::Here, k, f)? {
            out.push(idx);
        }
    }
    Ok(out)
}

/// One excluded-middle axiom `G (p | ~p)` per atom, in alphabet order.
pub fn em_theory(alphabet: &Alphabet) -> Theory {
    let formulas = alphabet
        .names()
        .iter()
        .map(|p| {
            let p = Formula::atom(p.as_str());
            Formula::always(Interval::FULL, Formula::or(p.clone(), Formula::not(p)))
        })
        .collect();
    Theory::new("em", formulas)
}

/// `G ~X[0..0] #true`: no two consecutive states share a time stamp.
pub fn strictness_axiom() -> Formula {
    Formula::always(
        Interval::FULL,
        Formula::not(Formula::next(Interval::point(0), Formula::top())),
    )
}
