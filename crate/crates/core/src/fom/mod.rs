//! Monadic first-order sentences with difference constraints.
//!
//! `t ⪯_δ u` means `t − u ≤ δ`. Metric formulas translate into these
//! sentences ([`translate`]), which are evaluated over quantified
//! here-and-there interpretations with a static domain of time points
//! ([`qht_sat`]).

mod ast;
mod qht;
mod simplify;
mod text;
mod translate;

use thiserror::Error;

pub use ast::{Delta, Fom, Term};
pub use qht::{
    induced_interpretation, interpretation_from_json, interpretation_to_json, is_qel_model,
    qht_sat, GroundAtom, QelVerdict, QhtInterpretation, DEFAULT_SUBSET_CAP,
};
pub use simplify::simplify_fom;
pub use text::parse_fom;
pub use translate::{translate, translate_at};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FomError {
    #[error("translation needs non-empty intervals, found {0}")]
    EmptyInterval(String),
    #[error("variable `{0}` is not bound")]
    FreeVariable(String),
    #[error("time point {0} is not in the domain")]
    OutsideDomain(u64),
    #[error("the domain must contain 0")]
    MissingZero,
    #[error("here-world atom {0} is not in the there-world")]
    HereNotSubset(String),
    #[error("the induced interpretation needs a strict trace")]
    NotStrict,
    #[error("the there-world has {size} atoms, above the subset-search cap of {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("the total interpretation is not a model of the sentence")]
    NotModel,
    #[error("{line}:{col}: {message}")]
    Parse {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("malformed interpretation JSON: {0}")]
    Json(String),
}
