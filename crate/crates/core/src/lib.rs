//! Derivability engine for the Lambek-Grishin calculus LG.
//!
//! * [`term`], [`parse`], [`census`]: formulas, polarized structures, sequents.
//! * [`calculus`]: the rule system, display classes and the derivation checker.
//! * [`prover`]: bounded Cut-free backward proof search.
//! * [`reduction`]: DIMACS input and the CNF-to-LG sequent encoding.
//! * [`witness`]: brute-force SAT, derivations built from satisfying
//!   assignments, and the SAT/LG round trip.

pub mod calculus;
pub mod census;
pub mod parse;
pub mod prover;
pub mod reduction;
pub mod term;
pub mod witness;

pub use calculus::{check, CheckReport, Derivation, RuleLabel};
pub use census::{census, ConnectiveCensus};
pub use parse::{parse_formula, parse_sequent, ParseError};
pub use prover::{prove, stats, BudgetKind, Budgets, ProveOutcome, Prover};
pub use term::{render, Atom, Connective, Formula, Polarity, Sequent, Side, Structure};
