use std::fmt;

use thiserror::Error;

/// Upper end of an interval: a natural number or ω.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Upper {
    Finite(u64),
    Omega,
}

impl Upper {
    pub fn is_omega(self) -> bool {
        matches!(self, Upper::Omega)
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Upper::Finite(n) => Some(n),
            Upper::Omega => None,
        }
    }
}

/// Half-open interval `[lower..upper)` of natural numbers; `upper` may be ω.
///
/// This is the only shape the temporal connectives carry. The other
/// surface shapes (`[m..n]`, `(m..n)`, `<=n`, ...) are normalized into it
/// by [`IntervalSpec::normalize`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    pub lower: u64,
    pub upper: Upper,
}

impl Interval {
    pub const FULL: Interval = Interval {
        lower: 0,
        upper: Upper::Omega,
    };

    /// `[lower..upper)` with a finite upper end.
    pub const fn new(lower: u64, upper: u64) -> Self {
        Interval {
            lower,
            upper: Upper::Finite(upper),
        }
    }

    /// `[lower..ω)`.
    pub const fn from(lower: u64) -> Self {
        Interval {
            lower,
            upper: Upper::Omega,
        }
    }

    /// `[m..m]`, i.e. `[m..m+1)`.
    pub const fn point(m: u64) -> Self {
        Interval::new(m, m + 1)
    }

    pub fn contains(&self, d: u64) -> bool {
        d >= self.lower
            && match self.upper {
                Upper::Finite(n) => d < n,
                Upper::Omega => true,
            }
    }

    pub fn is_empty(&self) -> bool {
        match self.upper {
            Upper::Finite(n) => self.lower >= n,
            Upper::Omega => false,
        }
    }

    /// `[0..ω)`, the interval that the surface syntax leaves implicit.
    pub fn is_full(&self) -> bool {
        *self == Interval::FULL
    }

    pub fn is_bounded(&self) -> bool {
        !self.upper.is_omega()
    }

    /// `Some(m)` when this is the single point `[m..m+1)`.
    pub fn as_point(&self) -> Option<u64> {
        match self.upper {
            Upper::Finite(n) if n == self.lower + 1 => Some(self.lower),
            _ => None,
        }
    }

    /// `I ⊆ J` as sets of naturals.
    pub fn is_subset_of(&self, other: &Interval) -> bool {
        if self.is_empty() {
            return true;
        }
        if other.is_empty() || self.lower < other.lower {
            return false;
        }
        match (self.upper, other.upper) {
            (_, Upper::Omega) => true,
            (Upper::Omega, Upper::Finite(_)) => false,
            (Upper::Finite(a), Upper::Finite(b)) => a <= b,
        }
    }
}

impl Default for Interval {
    fn default() -> Self {
        Interval::FULL
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.upper {
            Upper::Finite(n) => write!(f, "[{}..{})", self.lower, n),
            Upper::Omega => write!(f, "[{}..w)", self.lower),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntervalError {
    #[error("closed upper bound cannot be w")]
    ClosedOmega,
    #[error("interval bound {0} is out of range")]
    Overflow(u64),
}

/// An interval as written in the surface syntax, before normalization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntervalSpec {
    /// `[m..n)`
    HalfOpen(u64, Upper),
    /// `[m..n]`
    Closed(u64, Upper),
    /// `(m..n)`
    Open(u64, Upper),
    /// `(m..n]`
    LeftOpen(u64, Upper),
    /// `[m..)`
    From(u64),
    /// `[m]`
    Point(u64),
    /// `<=n`
    AtMost(u64),
    /// `>=m`
    AtLeast(u64),
}

impl IntervalSpec {
    pub fn normalize(self) -> Result<Interval, IntervalError> {
        let succ = |n: u64| n.checked_add(1).ok_or(IntervalError::Overflow(n));
        let closed_upper = |u: Upper| match u {
            Upper::Finite(n) => Ok(Upper::Finite(succ(n)?)),
            Upper::Omega => Err(IntervalError::ClosedOmega),
        };
        Ok(match self {
            IntervalSpec::HalfOpen(m, n) => Interval { lower: m, upper: n },
            IntervalSpec::Closed(m, n) => Interval {
                lower: m,
                upper: closed_upper(n)?,
            },
            IntervalSpec::Open(m, n) => Interval {
                lower: succ(m)?,
                upper: n,
            },
            IntervalSpec::LeftOpen(m, n) => Interval {
                lower: succ(m)?,
                upper: closed_upper(n)?,
            },
            IntervalSpec::From(m) | IntervalSpec::AtLeast(m) => Interval::from(m),
            IntervalSpec::Point(m) => Interval::new(m, succ(m)?),
            IntervalSpec::AtMost(n) => Interval::new(0, succ(n)?),
        })
    }

    /// Membership read directly off the surface bounds.
    pub fn admits(&self, i: u64) -> bool {
        let below = |u: Upper, strict: bool| match u {
            Upper::Omega => true,
            Upper::Finite(n) => {
                if strict {
                    i < n
                } else {
                    i <= n
                }
            }
        };
        match *self {
            IntervalSpec::HalfOpen(m, n) => m <= i && below(n, true),
            IntervalSpec::Closed(m, n) => m <= i && below(n, false),
            IntervalSpec::Open(m, n) => m < i && below(n, true),
            IntervalSpec::LeftOpen(m, n) => m < i && below(n, false),
            IntervalSpec::From(m) | IntervalSpec::AtLeast(m) => m <= i,
            IntervalSpec::Point(m) => i == m,
            IntervalSpec::AtMost(n) => i <= n,
        }
    }
}
