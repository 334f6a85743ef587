//! The rule system: rule schemas, display classes, derivations and their checker.

mod derivation;
mod display;
mod export;
mod rules;

pub use derivation::{check, CheckError, CheckReport, Derivation};
pub use display::{canonical, display_closure, CapExceeded, DisplayClass};
pub use export::{from_json, latex_sequent, to_json, to_latex, to_text, ExportError};
pub use rules::{
    apply_forward, backward_steps, display_steps, forward_conclusion, grishin_step, is_axiom, left_rewrite,
    right_rewrite, split_steps, Mismatch, RuleClass, RuleLabel, UnknownRule,
};
