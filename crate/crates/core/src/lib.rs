//! Metric temporal equilibrium logic over finite timed traces.
//!
//! * [`syntax`]: intervals, the formula tree, parser and printer.
//! * [`traces`]: timed here-and-there traces and bounded enumeration.
//! * [`semantics`]: the here-and-there satisfaction relation.
//! * [`equilibrium`]: equilibrium models and bounded equivalence.
//! * [`rewrite`]: equivalence-preserving transformations.
//! * [`fom`]: first-order translation and quantified here-and-there.
//! * [`random`]: random formulas and traces for tests and benchmarks.

pub mod equilibrium;
pub mod exec;
pub mod fom;
pub mod random;
pub mod rewrite;
pub mod semantics;
pub mod syntax;
pub mod traces;
