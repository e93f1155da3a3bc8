//! Timed here-and-there traces.
//!
//! A state is a pair of bitmasks `(H_i, T_i)` over an [`Alphabet`] of at most
//! 64 atoms; bit `j` stands for the `j`-th atom in lexicographic order.

mod enumerate;
mod json;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

pub use enumerate::{
    enumerate_total_traces, refinements, time_vectors, total_traces_with_times, Bounds,
    Refinements, TotalTraces,
};
pub use json::{trace_from_json, trace_to_json, trace_to_value};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TraceError {
    #[error("a trace needs at least one state")]
    Empty,
    #[error("{states} states but {times} time stamps")]
    LengthMismatch { states: usize, times: usize },
    #[error("state {index}: here-world is not a subset of the there-world")]
    HereNotSubset { index: usize },
    #[error("the first time stamp must be 0, found {0}")]
    FirstTimeNonZero(u64),
    #[error("time stamps decrease at state {index}")]
    Decreasing { index: usize },
    #[error("atom `{0}` is not in the alphabet")]
    UnknownAtom(String),
    #[error("alphabets are limited to 64 atoms, got {0}")]
    AlphabetTooLarge(usize),
    #[error("trace is not total")]
    NotTotal,
    #[error("trace is not strict")]
    NotStrict,
    #[error("invalid bounds: {0}")]
    InvalidBounds(String),
    #[error("malformed trace JSON: {0}")]
    Json(String),
}

/// Ordered, duplicate-free set of atom names.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Alphabet {
    atoms: Vec<String>,
}

impl Alphabet {
    pub fn new<I, S>(atoms: I) -> Result<Self, TraceError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut atoms: Vec<String> = atoms.into_iter().map(Into::into).collect();
        atoms.sort();
        atoms.dedup();
        if atoms.len() > 64 {
            return Err(TraceError::AlphabetTooLarge(atoms.len()));
        }
        Ok(Alphabet { atoms })
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.atoms
    }

    pub fn index_of(&self, atom: &str) -> Option<usize> {
        self.atoms.binary_search_by(|a| a.as_str().cmp(atom)).ok()
    }

    /// Bit for `atom`, or 0 when the atom is not in the alphabet.
    pub fn bit(&self, atom: &str) -> u64 {
        self.index_of(atom).map_or(0, |i| 1 << i)
    }

    /// Mask with every atom set.
    pub fn full_mask(&self) -> u64 {
        if self.atoms.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.atoms.len()) - 1
        }
    }

    pub fn mask_of<S: AsRef<str>>(&self, names: &[S]) -> Result<u64, TraceError> {
        names.iter().try_fold(0u64, |m, n| {
            let n = n.as_ref();
            self.index_of(n)
                .map(|i| m | (1 << i))
                .ok_or_else(|| TraceError::UnknownAtom(n.to_string()))
        })
    }

    pub fn names_of(&self, mask: u64) -> Vec<&str> {
        self.atoms
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, a)| a.as_str())
            .collect()
    }
}

/// A validated timed HT-trace `(⟨H, T⟩, τ)` of length λ ≥ 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TimedTrace {
    alphabet: Arc<Alphabet>,
    here: Vec<u64>,
    there: Vec<u64>,
    times: Vec<u64>,
}

impl TimedTrace {
    /// Builds a trace from per-state masks, checking `H_i ⊆ T_i ⊆ A`,
    /// `τ(0) = 0` and monotone time.
    pub fn new(
        alphabet: Arc<Alphabet>,
        here: Vec<u64>,
        there: Vec<u64>,
        times: Vec<u64>,
    ) -> Result<Self, TraceError> {
        if there.is_empty() {
            return Err(TraceError::Empty);
        }
        if here.len() != there.len() || times.len() != there.len() {
            return Err(TraceError::LengthMismatch {
                states: there.len(),
                times: times.len(),
            });
        }
        let full = alphabet.full_mask();
        for (i, (&h, &t)) in here.iter().zip(&there).enumerate() {
            if h & !t != 0 {
                return Err(TraceError::HereNotSubset { index: i });
            }
            if t & !full != 0 {
                return Err(TraceError::UnknownAtom(format!(
                    "#{}",
                    (t & !full).trailing_zeros()
                )));
            }
        }
        if times[0] != 0 {
            return Err(TraceError::FirstTimeNonZero(times[0]));
        }
        if let Some(i) = times.windows(2).position(|w| w[0] > w[1]) {
            return Err(TraceError::Decreasing { index: i + 1 });
        }
        Ok(TimedTrace {
            alphabet,
            here,
            there,
            times,
        })
    }

    /// A total trace (H = T).
    pub fn total(
        alphabet: Arc<Alphabet>,
        there: Vec<u64>,
        times: Vec<u64>,
    ) -> Result<Self, TraceError> {
        TimedTrace::new(alphabet, there.clone(), there, times)
    }

    /// Builds a trace from named atom sets, one `(here, there)` pair per state.
    pub fn from_names<S: AsRef<str>>(
        alphabet: Arc<Alphabet>,
        states: &[(Vec<S>, Vec<S>)],
        times: Vec<u64>,
    ) -> Result<Self, TraceError> {
        let mut here = Vec::with_capacity(states.len());
        let mut there = Vec::with_capacity(states.len());
        for (h, t) in states {
            here.push(alphabet.mask_of(h)?);
            there.push(alphabet.mask_of(t)?);
        }
        TimedTrace::new(alphabet, here, there, times)
    }

    /// Builds a total trace from named atom sets.
    pub fn total_from_names<S: AsRef<str>>(
        alphabet: Arc<Alphabet>,
        states: &[Vec<S>],
        times: Vec<u64>,
    ) -> Result<Self, TraceError> {
        let there = states
            .iter()
            .map(|t| alphabet.mask_of(t))
            .collect::<Result<Vec<_>, _>>()?;
        TimedTrace::total(alphabet, there, times)
    }

    /// Internal constructor for values already known to be valid.
    pub(crate) fn from_parts(
        alphabet: Arc<Alphabet>,
        here: Vec<u64>,
        there: Vec<u64>,
        times: Vec<u64>,
    ) -> Self {
        debug_assert!(TimedTrace::new(
            alphabet.clone(),
            here.clone(),
            there.clone(),
            times.clone()
        )
        .is_ok());
        TimedTrace {
            alphabet,
            here,
            there,
            times,
        }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    /// λ
    pub fn len(&self) -> usize {
        self.there.len()
    }

    /// Always false: traces have at least one state.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn here(&self) -> &[u64] {
        &self.here
    }

    pub fn there(&self) -> &[u64] {
        &self.there
    }

    pub fn times(&self) -> &[u64] {
        &self.times
    }

    pub fn time(&self, i: usize) -> u64 {
        self.times[i]
    }

    pub fn is_total(&self) -> bool {
        self.here == self.there
    }

    pub fn is_strict(&self) -> bool {
        self.times.windows(2).all(|w| w[0] < w[1])
    }

    /// `(⟨T, T⟩, τ)`
    pub fn total_part(&self) -> TimedTrace {
        TimedTrace {
            alphabet: self.alphabet.clone(),
            here: self.there.clone(),
            there: self.there.clone(),
            times: self.times.clone(),
        }
    }

    /// Same there-world and timing with a different here-world.
    pub fn with_here(&self, here: Vec<u64>) -> Result<TimedTrace, TraceError> {
        TimedTrace::new(
            self.alphabet.clone(),
            here,
            self.there.clone(),
            self.times.clone(),
        )
    }

    /// Same states with a different time map.
    pub fn with_times(&self, times: Vec<u64>) -> Result<TimedTrace, TraceError> {
        TimedTrace::new(
            self.alphabet.clone(),
            self.here.clone(),
            self.there.clone(),
            times,
        )
    }

    /// The reversal ρ: states in reverse order, `τ'(i) = τ(λ−1) − τ(λ−1−i)`.
    pub fn reverse(&self) -> TimedTrace {
        let last = *self.times.last().expect("non-empty");
        let mut here = self.here.clone();
        let mut there = self.there.clone();
        here.reverse();
        there.reverse();
        let times = self.times.iter().rev().map(|t| last - t).collect();
        TimedTrace {
            alphabet: self.alphabet.clone(),
            here,
            there,
            times,
        }
    }
}

impl fmt::Display for TimedTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let set = |m: u64| format!("{{{}}}", self.alphabet.names_of(m).join(","));
        for i in 0..self.len() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if self.here[i] == self.there[i] {
                write!(f, "{}@{}", set(self.there[i]), self.times[i])?;
            } else {
                write!(
                    f,
                    "{}<{}@{}",
                    set(self.here[i]),
                    set(self.there[i]),
                    self.times[i]
                )?;
            }
        }
        Ok(())
    }
}
