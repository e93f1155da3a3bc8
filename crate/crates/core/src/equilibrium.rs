//! Equilibrium models and bounded equivalence.
//!
//! A total model `(⟨T,T⟩, τ)` of a theory is in equilibrium when no `H < T`
//! with the same `τ` is also a model. Enumeration runs over the bounded
//! trace space one time vector at a time; models of different lengths never
//! interact, so per-length results simply concatenate.

use thiserror::Error;

use crate::exec::Exec;
use crate::semantics::{failing_formulas, is_model_of, strictness_axiom};
use crate::syntax::{Formula, Theory};
use crate::traces::{refinements, total_traces_with_times, Bounds, TimedTrace, TraceError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EquilibriumError {
    #[error("the candidate trace is not total")]
    NotTotal,
    #[error("the candidate trace is not a model of the theory")]
    NotModel,
    #[error(transparent)]
    Trace(#[from] TraceError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquilibriumVerdict {
    pub is_equilibrium: bool,
    /// A model `H < T`, present exactly when not in equilibrium.
    pub witness: Option<TimedTrace>,
}

/// Checks a total model for equilibrium; the witness, if any, is the first
/// satisfying refinement in enumeration order.
pub fn is_equilibrium(
    m: &TimedTrace,
    theory: &Theory,
) -> Result<EquilibriumVerdict, EquilibriumError> {
    equilibrium_of(m, &theory.formulas)
}

fn equilibrium_of(
    m: &TimedTrace,
    formulas: &[Formula],
) -> Result<EquilibriumVerdict, EquilibriumError> {
    if !m.is_total() {
        return Err(EquilibriumError::NotTotal);
    }
    if !is_model_of(m, formulas) {
        return Err(EquilibriumError::NotModel);
    }
    let witness = refinements(m)?.find(|h| is_model_of(h, formulas));
    Ok(EquilibriumVerdict {
        is_equilibrium: witness.is_none(),
        witness,
    })
}

/// Options for model enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Search {
    /// Append the strictness axiom when the bounds are strict.
    pub strictness_axiom: bool,
    pub exec: Exec,
}

impl Default for Search {
    fn default() -> Self {
        Search {
            strictness_axiom: true,
            exec: Exec::default(),
        }
    }
}

impl Search {
    pub fn with_exec(exec: Exec) -> Self {
        Search {
            exec,
            ..Search::default()
        }
    }

    fn effective(&self, theory: &Theory, bounds: &Bounds) -> Vec<Formula> {
        let mut formulas = theory.formulas.clone();
        if bounds.strict_only && self.strictness_axiom {
            formulas.push(strictness_axiom());
        }
        formulas
    }
}

/// Which models to list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelKind {
    /// Total models.
    Total,
    /// Total models in equilibrium.
    Equilibrium,
    /// Every HT model: each total model followed by its satisfying refinements.
    AllHt,
}

/// Models of `theory` within `bounds`, in enumeration order.
pub fn enumerate_models(
    theory: &Theory,
    bounds: &Bounds,
    kind: ModelKind,
    search: &Search,
) -> Result<Vec<TimedTrace>, TraceError> {
    bounds.validate()?;
    let formulas = search.effective(theory, bounds);
    let items = bounds.time_vectors();
    let per_item = search.exec.map(&items, |times| {
        let mut out = Vec::new();
        for m in total_traces_with_times(bounds.alphabet.clone(), times.clone()) {
            if !is_model_of(&m, &formulas) {
                continue;
            }
            match kind {
                ModelKind::Total => out.push(m),
                ModelKind::Equilibrium => {
                    if refinements(&m)
                        .expect("total")
                        .all(|h| !is_model_of(&h, &formulas))
                    {
                        out.push(m);
                    }
                }
                ModelKind::AllHt => {
                    let below: Vec<_> = refinements(&m)
                        .expect("total")
                        .filter(|h| is_model_of(h, &formulas))
                        .collect();
                    out.push(m);
                    out.extend(below);
                }
            }
        }
        out
    });
    Ok(per_item.into_iter().flatten().collect())
}

/// Equilibrium models of `theory` within `bounds` (strictness axiom
/// appended for strict bounds).
pub fn enumerate_equilibrium(
    theory: &Theory,
    bounds: &Bounds,
) -> Result<Vec<TimedTrace>, TraceError> {
    enumerate_models(theory, bounds, ModelKind::Equilibrium, &Search::default())
}

/// The side of a bounded-equivalence counterexample that is violated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// The first theory fails while the second holds.
    Left,
    /// The second theory fails while the first holds.
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub trace: TimedTrace,
    /// 0-based index of the first failing formula on the violated side.
    pub formula: usize,
    pub side: Side,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivVerdict {
    /// Equivalent on every trace within the bounds.
    pub equivalent: bool,
    pub counterexample: Option<Counterexample>,
}

/// Compares the HT models (total and non-total) of two theories over the
/// bounded trace space.
///
/// A counterexample refutes strong equivalence outright; an `equivalent`
/// verdict only covers traces within the bounds.
pub fn bounded_equiv(
    left: &Theory,
    right: &Theory,
    bounds: &Bounds,
    exec: Exec,
) -> Result<EquivVerdict, TraceError> {
    bounds.validate()?;
    let items = bounds.time_vectors();
    let counterexample = exec.find_map_first(&items, |times| {
        for total in total_traces_with_times(bounds.alphabet.clone(), times.clone()) {
            let below = refinements(&total).expect("total");
            for m in std::iter::once(total.clone()).chain(below) {
                let l = is_model_of(&m, &left.formulas);
                let r = is_model_of(&m, &right.formulas);
                if l != r {
                    let (side, theory) = if l {
                        (Side::Right, right)
                    } else {
                        (Side::Left, left)
                    };
                    let formula = failing_formulas(&m, 0, theory).expect("k = 0")[0];
                    return Some(Counterexample {
                        trace: m,
                        formula,
                        side,
                    });
                }
            }
        }
        None
    });
    Ok(EquivVerdict {
        equivalent: counterexample.is_none(),
        counterexample,
    })
}
