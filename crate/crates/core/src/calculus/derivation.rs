//! Derivation trees and the derivation checker.

use super::rules::{apply_forward, RuleClass, RuleLabel};
use crate::term::{Formula, Sequent};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    pub conclusion: Sequent,
    pub rule: RuleLabel,
    pub premises: Vec<Derivation>,
}

impl Derivation {
    pub fn new(conclusion: Sequent, rule: RuleLabel, premises: Vec<Derivation>) -> Derivation {
        Derivation { conclusion, rule, premises }
    }

    /// `p |- p` by the axiom. Panics on a compound formula.
    pub fn axiom(p: &Formula) -> Derivation {
        assert!(p.as_atom().is_some(), "axiom on compound formula {p}");
        Derivation::new(Sequent::formulas(p.clone(), p.clone()), RuleLabel::Ax, Vec::new())
    }

    pub fn node_count(&self) -> usize {
        1 + self.premises.iter().map(Derivation::node_count).sum::<usize>()
    }

    /// Longest root-to-leaf chain of non-axiom rule applications.
    pub fn height(&self) -> usize {
        if self.rule == RuleLabel::Ax {
            return 0;
        }
        1 + self.premises.iter().map(Derivation::height).max().unwrap_or(0)
    }

    pub fn count(&self, class: RuleClass) -> usize {
        let own = usize::from(self.rule.class() == class);
        own + self.premises.iter().map(|p| p.count(class)).sum::<usize>()
    }

    /// Pre-order walk.
    pub fn walk<'a>(&'a self, f: &mut impl FnMut(&'a Derivation)) {
        f(self);
        for p in &self.premises {
            p.walk(f);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckError {
    /// Premise indices from the root, e.g. `root.1.0`.
    pub path: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CheckReport {
    pub ok: bool,
    pub logical_count: usize,
    pub grishin_count: usize,
    pub display_count: usize,
    pub cut_count: usize,
    pub first_error: Option<CheckError>,
}

/// Validates every node against its rule schema and tallies rule classes.
pub fn check(d: &Derivation, allow_cut: bool) -> CheckReport {
    let mut report = CheckReport::default();
    let mut path = vec![];
    visit(d, allow_cut, &mut path, &mut report);
    report.ok = report.first_error.is_none();
    report
}

fn visit(d: &Derivation, allow_cut: bool, path: &mut Vec<usize>, report: &mut CheckReport) {
    match d.rule.class() {
        RuleClass::Logical => report.logical_count += 1,
        RuleClass::Grishin => report.grishin_count += 1,
        RuleClass::Display => report.display_count += 1,
        RuleClass::Cut => report.cut_count += 1,
        RuleClass::Axiom => {}
    }
    if report.first_error.is_none() {
        let failure = if let Err(e) = d.conclusion.validate() {
            Some(e.to_string())
        } else if d.rule == RuleLabel::Cut && !allow_cut {
            Some("Cut is not allowed".to_string())
        } else {
            let premises: Vec<Sequent> = d.premises.iter().map(|p| p.conclusion.clone()).collect();
            apply_forward(d.rule, &premises, &d.conclusion).err().map(|e| e.to_string())
        };
        if let Some(message) = failure {
            report.first_error = Some(CheckError { path: path_string(path), message });
        }
    }
    for (i, p) in d.premises.iter().enumerate() {
        path.push(i);
        visit(p, allow_cut, path, report);
        path.pop();
    }
}

fn path_string(path: &[usize]) -> String {
    let mut s = String::from("root");
    for i in path {
        s.push('.');
        s.push_str(&i.to_string());
    }
    s
}
