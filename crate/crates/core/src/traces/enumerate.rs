//! Bounded, deterministic enumeration of traces.
//!
//! Order: λ ascending, then the time vector lexicographically, then the state
//! masks lexicographically (state 0 most significant, numeric mask order).

use std::sync::Arc;

use super::{Alphabet, TimedTrace, TraceError};

/// Finite search space for enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bounds {
    pub alphabet: Arc<Alphabet>,
    pub max_len: usize,
    /// Upper bound on τ(λ−1).
    pub max_time: u64,
    /// Only strictly increasing time maps.
    pub strict_only: bool,
    /// Only traces of length exactly `max_len`.
    pub exact_len: bool,
}

impl Bounds {
    pub fn new(alphabet: Arc<Alphabet>, max_len: usize, max_time: u64) -> Self {
        Bounds {
            alphabet,
            max_len,
            max_time,
            strict_only: true,
            exact_len: false,
        }
    }

    pub fn non_strict(mut self) -> Self {
        self.strict_only = false;
        self
    }

    pub fn exact(mut self) -> Self {
        self.exact_len = true;
        self
    }

    /// Checks `max_len ≥ 1`. A `max_time` too small for strict traces of
    /// every length is allowed; those lengths simply contribute nothing.
    pub fn validate(&self) -> Result<(), TraceError> {
        if self.max_len == 0 {
            return Err(TraceError::InvalidBounds(
                "max_len must be at least 1".into(),
            ));
        }
        Ok(())
    }

    pub fn lengths(&self) -> std::ops::RangeInclusive<usize> {
        if self.exact_len {
            self.max_len..=self.max_len
        } else {
            1..=self.max_len
        }
    }

    /// Every admissible time vector, in enumeration order. These are the
    /// independent work items for parallel scans.
    pub fn time_vectors(&self) -> Vec<Vec<u64>> {
        self.lengths()
            .flat_map(|len| time_vectors(len, self.max_time, self.strict_only))
            .collect()
    }
}

/// All time maps of length `len` with τ(0)=0 and τ(len−1) ≤ `max_time`,
/// lexicographically ordered.
pub fn time_vectors(len: usize, max_time: u64, strict: bool) -> Vec<Vec<u64>> {
    fn go(len: usize, max_time: u64, strict: bool, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let last = *cur.last().expect("starts with 0");
        let lo = if strict { last + 1 } else { last };
        let remaining = (len - cur.len() - 1) as u64;
        // Leave room for the remaining strictly increasing stamps.
        let hi = if strict {
            max_time.checked_sub(remaining)
        } else {
            Some(max_time)
        };
        let Some(hi) = hi else { return };
        for t in lo..=hi {
            cur.push(t);
            go(len, max_time, strict, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if len == 0 {
        return out;
    }
    let mut cur = vec![0];
    go(len, max_time, strict, &mut cur, &mut out);
    out
}

/// Advances a mixed-radix counter whose digit `i` ranges over the submasks
/// of `limits[i]` in numeric order. Returns false after the last value.
fn next_submasks(digits: &mut [u64], limits: &[u64]) -> bool {
    for i in (0..digits.len()).rev() {
        if digits[i] != limits[i] {
            digits[i] = (digits[i] | !limits[i]).wrapping_add(1) & limits[i];
            return true;
        }
        digits[i] = 0;
    }
    false
}

/// All total traces over the alphabet with the given time map.
pub struct TotalTraces {
    alphabet: Arc<Alphabet>,
    times: Vec<Vec<u64>>,
    item: usize,
    states: Vec<u64>,
    limits: Vec<u64>,
}

impl Iterator for TotalTraces {
    type Item = TimedTrace;

    fn next(&mut self) -> Option<TimedTrace> {
        let times = self.times.get(self.item)?;
        if self.states.len() != times.len() {
            self.states = vec![0; times.len()];
            self.limits = vec![self.alphabet.full_mask(); times.len()];
        }
        let t = TimedTrace::from_parts(
            self.alphabet.clone(),
            self.states.clone(),
            self.states.clone(),
            times.clone(),
        );
        if !next_submasks(&mut self.states, &self.limits) {
            self.item += 1;
            self.states.clear();
        }
        Some(t)
    }
}

/// Every total trace with time map `times`, states in lexicographic order.
pub fn total_traces_with_times(alphabet: Arc<Alphabet>, times: Vec<u64>) -> TotalTraces {
    TotalTraces {
        alphabet,
        times: vec![times],
        item: 0,
        states: Vec::new(),
        limits: Vec::new(),
    }
}

/// Every total trace within `bounds`, in enumeration order.
pub fn enumerate_total_traces(bounds: &Bounds) -> TotalTraces {
    TotalTraces {
        alphabet: bounds.alphabet.clone(),
        times: bounds.time_vectors(),
        item: 0,
        states: Vec::new(),
        limits: Vec::new(),
    }
}

/// Every `H < T` below a total trace, starting from the all-empty `H`.
pub struct Refinements {
    base: TimedTrace,
    here: Vec<u64>,
    done: bool,
}

impl Iterator for Refinements {
    type Item = TimedTrace;

    fn next(&mut self) -> Option<TimedTrace> {
        if self.done || self.here == self.base.there {
            return None;
        }
        let t = TimedTrace::from_parts(
            self.base.alphabet.clone(),
            self.here.clone(),
            self.base.there.clone(),
            self.base.times.clone(),
        );
        self.done = !next_submasks(&mut self.here, &self.base.there);
        Some(t)
    }
}

/// Strictly smaller here-worlds of a total trace; there are
/// `∏ 2^|T_i| − 1` of them.
pub fn refinements(total: &TimedTrace) -> Result<Refinements, TraceError> {
    if !total.is_total() {
        return Err(TraceError::NotTotal);
    }
    Ok(Refinements {
        here: vec![0; total.len()],
        base: total.clone(),
        done: false,
    })
}
