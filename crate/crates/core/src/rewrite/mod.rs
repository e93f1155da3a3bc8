//! Equivalence-preserving transformations of metric formulas.
//!
//! [`bool_dual`], [`time_swap`] and [`push_negation`] are valid on every
//! trace. The remaining passes rely on strictly increasing time stamps and
//! are refused by [`Pass::apply`] outside [`Regime::Strict`].

mod duality;
mod negation;
mod onestep;
mod split;
mod unary;
mod unfold;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::syntax::{Formula, Interval};

pub use duality::{bool_dual, time_swap};
pub use negation::push_negation;
pub use onestep::one_step_eliminate;
pub use split::range_split;
pub use unary::{is_unary_normal_form, to_unary_nf};
pub use unfold::unfold_next;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RewriteError {
    #[error("boolean duality needs an implication-free formula, found `{0}`")]
    ImplicationPresent(String),
    #[error("cannot unfold `{0}`: its interval has no finite upper bound")]
    UnboundedInterval(String),
    #[error("cannot eliminate `{0}`: an unbounded one-step operator has no finite definition")]
    UnboundedStep(String),
    #[error("split point {point} is outside {interval}")]
    SplitOutOfRange { point: u64, interval: Interval },
    #[error("range splitting needs an until, release, since or trigger node, found `{0}`")]
    NotBinaryTemporal(String),
    #[error("pass `{0}` is only valid on strict traces")]
    NonStrict(Pass),
    #[error("unknown pass `{0}`")]
    UnknownPass(String),
}

/// Which traces a rewrite must be sound for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// Strictly increasing time stamps (the strictness axiom holds).
    Strict,
    /// Arbitrary non-decreasing time stamps.
    NonStrict,
}

/// A named rewrite pass, as selected on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pass {
    /// `unf`
    Unfold,
    /// `unary`
    UnaryNormalForm,
    /// `demorgan`
    DeMorgan,
    /// `dual`
    Dual,
    /// `swap`
    Swap,
    /// `split:<i>`
    Split(u64),
    /// `onestep`
    OneStep,
}

impl Pass {
    pub fn needs_strict(self) -> bool {
        matches!(
            self,
            Pass::Unfold | Pass::UnaryNormalForm | Pass::Split(_) | Pass::OneStep
        )
    }

    pub fn apply(self, f: &Formula, regime: Regime) -> Result<Formula, RewriteError> {
        if self.needs_strict() && regime != Regime::Strict {
            return Err(RewriteError::NonStrict(self));
        }
        match self {
            Pass::Unfold => unfold_next(f),
            Pass::UnaryNormalForm => Ok(to_unary_nf(f)),
            Pass::DeMorgan => Ok(push_negation(f)),
            Pass::Dual => bool_dual(f),
            Pass::Swap => Ok(time_swap(f)),
            Pass::Split(i) => range_split(f, i),
            Pass::OneStep => one_step_eliminate(f),
        }
    }
}

impl fmt::Display for Pass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pass::Unfold => f.write_str("unf"),
            Pass::UnaryNormalForm => f.write_str("unary"),
            Pass::DeMorgan => f.write_str("demorgan"),
            Pass::Dual => f.write_str("dual"),
            Pass::Swap => f.write_str("swap"),
            Pass::Split(i) => write!(f, "split:{i}"),
            Pass::OneStep => f.write_str("onestep"),
        }
    }
}

impl FromStr for Pass {
    type Err = RewriteError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "unf" => Pass::Unfold,
            "unary" => Pass::UnaryNormalForm,
            "demorgan" => Pass::DeMorgan,
            "dual" => Pass::Dual,
            "swap" => Pass::Swap,
            "onestep" => Pass::OneStep,
            _ => match s.strip_prefix("split:").and_then(|i| i.parse().ok()) {
                Some(i) => Pass::Split(i),
                None => return Err(RewriteError::UnknownPass(s.to_string())),
            },
        })
    }
}
