//! Random formulas and traces for property tests and benchmarks.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::syntax::{Formula, Interval, Theory};
use crate::traces::{Alphabet, TimedTrace};

/// Shape of the random formulas drawn by [`FormulaGen::sample`].
#[derive(Debug, Clone)]
pub struct FormulaGen {
    pub atoms: Vec<String>,
    pub max_depth: usize,
    /// Interval ends are drawn from `0..=max_bound`.
    pub max_bound: u64,
    pub unbounded: bool,
    pub implication: bool,
    pub past: bool,
}

impl FormulaGen {
    pub fn new<S: AsRef<str>>(atoms: &[S], max_depth: usize, max_bound: u64) -> Self {
        FormulaGen {
            atoms: atoms.iter().map(|a| a.as_ref().to_string()).collect(),
            max_depth,
            max_bound,
            unbounded: true,
            implication: true,
            past: true,
        }
    }

    /// Only finite intervals.
    pub fn bounded(mut self) -> Self {
        self.unbounded = false;
        self
    }

    /// No implication nodes (hence no negation): the fragment the
    /// Boolean dual is defined on.
    pub fn without_implication(mut self) -> Self {
        self.implication = false;
        self
    }

    pub fn future_only(mut self) -> Self {
        self.past = false;
        self
    }

    /// A non-empty interval.
    pub fn interval<R: Rng + ?Sized>(&self, rng: &mut R) -> Interval {
        let m = rng.gen_range(0..=self.max_bound);
        if self.unbounded && rng.gen_bool(0.25) {
            Interval::from(m)
        } else {
            Interval::new(m, rng.gen_range(m + 1..=self.max_bound + 1))
        }
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Formula {
        self.node(rng, self.max_depth)
    }

    fn leaf<R: Rng + ?Sized>(&self, rng: &mut R) -> Formula {
        match rng.gen_range(0..8) {
            0 => Formula::Bottom,
            1 if self.implication => Formula::top(),
            _ => Formula::atom(self.atoms.choose(rng).expect("at least one atom").as_str()),
        }
    }

    fn node<R: Rng + ?Sized>(&self, rng: &mut R, depth: usize) -> Formula {
        if depth == 0 || rng.gen_bool(0.2) {
            return self.leaf(rng);
        }
        let d = depth - 1;
        let mut kinds = vec![0, 1, 3, 5, 5, 6, 6];
        if self.implication {
            kinds.extend([2, 2]);
        }
        if self.past {
            kinds.extend([4, 7, 7]);
        }
        match *kinds.choose(rng).expect("non-empty") {
            0 => Formula::and(self.node(rng, d), self.node(rng, d)),
            1 => Formula::or(self.node(rng, d), self.node(rng, d)),
            2 => Formula::implies(self.node(rng, d), self.node(rng, d)),
            3 => Formula::next(self.interval(rng), self.node(rng, d)),
            4 => Formula::prev(self.interval(rng), self.node(rng, d)),
            5 => Formula::until(self.interval(rng), self.node(rng, d), self.node(rng, d)),
            6 => Formula::release(self.interval(rng), self.node(rng, d), self.node(rng, d)),
            _ => {
                let i = self.interval(rng);
                let (a, b) = (self.node(rng, d), self.node(rng, d));
                if rng.gen_bool(0.5) {
                    Formula::since(i, a, b)
                } else {
                    Formula::trigger(i, a, b)
                }
            }
        }
    }

    pub fn theory<R: Rng + ?Sized>(&self, rng: &mut R, max_formulas: usize) -> Theory {
        let n = rng.gen_range(1..=max_formulas.max(1));
        Theory::new("random", (0..n).map(|_| self.sample(rng)).collect())
    }
}

/// Shape of the random traces drawn by [`TraceGen::sample`].
#[derive(Debug, Clone)]
pub struct TraceGen {
    pub alphabet: Arc<Alphabet>,
    pub max_len: usize,
    pub max_time: u64,
    pub strict: bool,
    pub total: bool,
}

impl TraceGen {
    pub fn new(alphabet: Arc<Alphabet>, max_len: usize, max_time: u64) -> Self {
        TraceGen {
            alphabet,
            max_len,
            max_time,
            strict: false,
            total: false,
        }
    }

    pub fn strict(mut self) -> Self {
        self.strict = true;
        self
    }

    pub fn total(mut self) -> Self {
        self.total = true;
        self
    }

    /// Nondecreasing (strictly increasing when `strict`) times from 0; the
    /// length is clipped so a strict trace fits below `max_time`.
    pub fn times<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<u64> {
        let cap = if self.strict {
            self.max_len.min(self.max_time as usize + 1)
        } else {
            self.max_len
        };
        let len = rng.gen_range(1..=cap.max(1));
        let mut times = vec![0];
        for k in 1..len {
            let prev = times[k - 1];
            let low = prev + u64::from(self.strict);
            // leave room for the remaining strict steps
            let high = self.max_time - if self.strict { (len - 1 - k) as u64 } else { 0 };
            times.push(rng.gen_range(low..=high.max(low)));
        }
        times
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> TimedTrace {
        let times = self.times(rng);
        let full = self.alphabet.full_mask();
        let there: Vec<u64> = times.iter().map(|_| rng.gen::<u64>() & full).collect();
        let here = if self.total {
            there.clone()
        } else {
            there.iter().map(|t| t & rng.gen::<u64>()).collect()
        };
        TimedTrace::new(self.alphabet.clone(), here, there, times)
            .expect("generated trace is valid")
    }
}
