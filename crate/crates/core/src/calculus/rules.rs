//! Rule schemas: labels, backward instance enumeration and forward application.

use std::fmt;
use std::str::FromStr;

use crate::term::{Connective, Formula, Polarity, Sequent, Side, Structure};

use Connective::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleLabel {
    Ax,
    Cut,
    /// `X .*. Y |- P` from `X |- P ./. Y`
    ResOver,
    /// `X .*. Y |- P` from `Y |- X .\. P`
    ResUnder,
    /// `X |- P ./. Y` from `X .*. Y |- P`
    ResOverInv,
    /// `Y |- X .\. P` from `X .*. Y |- P`
    ResUnderInv,
    /// `X |- P .(+). Q` from `X .(/). Q |- P`
    DResRDiff,
    /// `X |- P .(+). Q` from `P .(\). X |- Q`
    DResLDiff,
    /// `X .(/). Q |- P` from `X |- P .(+). Q`
    DResRDiffInv,
    /// `P .(\). X |- Q` from `X |- P .(+). Q`
    DResLDiffInv,
    /// `X .(/). Q |- P ./. Y` from `X .*. Y |- P .(+). Q`
    GrishinRDiffOver,
    /// `Y .(/). Q |- X .\. P` from `X .*. Y |- P .(+). Q`
    GrishinRDiffUnder,
    /// `P .(\). X |- Q ./. Y` from `X .*. Y |- P .(+). Q`
    GrishinLDiffOver,
    /// `P .(\). Y |- X .\. Q` from `X .*. Y |- P .(+). Q`
    GrishinLDiffUnder,
    TensorL,
    TensorR,
    CoprodL,
    CoprodR,
    OverL,
    OverR,
    UnderL,
    UnderR,
    RDiffL,
    RDiffR,
    LDiffL,
    LDiffR,
}

/// Coarse classification used for tallies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RuleClass {
    Axiom,
    Cut,
    Display,
    Grishin,
    Logical,
}

impl RuleLabel {
    pub const ALL: [RuleLabel; 26] = [
        RuleLabel::Ax,
        RuleLabel::Cut,
        RuleLabel::ResOver,
        RuleLabel::ResUnder,
        RuleLabel::ResOverInv,
        RuleLabel::ResUnderInv,
        RuleLabel::DResRDiff,
        RuleLabel::DResLDiff,
        RuleLabel::DResRDiffInv,
        RuleLabel::DResLDiffInv,
        RuleLabel::GrishinRDiffOver,
        RuleLabel::GrishinRDiffUnder,
        RuleLabel::GrishinLDiffOver,
        RuleLabel::GrishinLDiffUnder,
        RuleLabel::TensorL,
        RuleLabel::TensorR,
        RuleLabel::CoprodL,
        RuleLabel::CoprodR,
        RuleLabel::OverL,
        RuleLabel::OverR,
        RuleLabel::UnderL,
        RuleLabel::UnderR,
        RuleLabel::RDiffL,
        RuleLabel::RDiffR,
        RuleLabel::LDiffL,
        RuleLabel::LDiffR,
    ];

    pub fn class(self) -> RuleClass {
        use RuleLabel::*;
        match self {
            Ax => RuleClass::Axiom,
            Cut => RuleClass::Cut,
            ResOver | ResUnder | ResOverInv | ResUnderInv | DResRDiff | DResLDiff | DResRDiffInv | DResLDiffInv => {
                RuleClass::Display
            }
            GrishinRDiffOver | GrishinRDiffUnder | GrishinLDiffOver | GrishinLDiffUnder => RuleClass::Grishin,
            _ => RuleClass::Logical,
        }
    }

    pub fn arity(self) -> usize {
        use RuleLabel::*;
        match self {
            Ax => 0,
            Cut | TensorR | CoprodL | OverL | UnderL | RDiffR | LDiffR => 2,
            _ => 1,
        }
    }

    pub fn name(self) -> &'static str {
        use RuleLabel::*;
        match self {
            Ax => "Ax",
            Cut => "Cut",
            ResOver => "ResOver",
            ResUnder => "ResUnder",
            ResOverInv => "ResOverInv",
            ResUnderInv => "ResUnderInv",
            DResRDiff => "DResRDiff",
            DResLDiff => "DResLDiff",
            DResRDiffInv => "DResRDiffInv",
            DResLDiffInv => "DResLDiffInv",
            GrishinRDiffOver => "GrishinRDiffOver",
            GrishinRDiffUnder => "GrishinRDiffUnder",
            GrishinLDiffOver => "GrishinLDiffOver",
            GrishinLDiffUnder => "GrishinLDiffUnder",
            TensorL => "TensorL",
            TensorR => "TensorR",
            CoprodL => "CoprodL",
            CoprodR => "CoprodR",
            OverL => "OverL",
            OverR => "OverR",
            UnderL => "UnderL",
            UnderR => "UnderR",
            RDiffL => "RDiffL",
            RDiffR => "RDiffR",
            LDiffL => "LDiffL",
            LDiffR => "LDiffR",
        }
    }

    /// Conventional proof-tree annotation, LaTeX math mode.
    pub fn latex_name(self) -> &'static str {
        use RuleLabel::*;
        match self {
            Ax => "Ax",
            Cut => "Cut",
            ResOver | ResUnder | ResOverInv | ResUnderInv => "r",
            DResRDiff | DResLDiff | DResRDiffInv | DResLDiffInv => "dr",
            GrishinRDiffOver => "d\\oslash/",
            GrishinRDiffUnder => "d\\oslash\\backslash",
            GrishinLDiffOver => "d\\obslash/",
            GrishinLDiffUnder => "d\\obslash\\backslash",
            TensorL => "\\otimes L",
            TensorR => "\\otimes R",
            CoprodL => "\\oplus L",
            CoprodR => "\\oplus R",
            OverL => "/L",
            OverR => "/R",
            UnderL => "\\backslash L",
            UnderR => "\\backslash R",
            RDiffL => "\\oslash L",
            RDiffR => "\\oslash R",
            LDiffL => "\\obslash L",
            LDiffR => "\\obslash R",
        }
    }

    /// The display move undoing this one, if it is a display move.
    pub fn inverse(self) -> Option<RuleLabel> {
        use RuleLabel::*;
        Some(match self {
            ResOver => ResOverInv,
            ResOverInv => ResOver,
            ResUnder => ResUnderInv,
            ResUnderInv => ResUnder,
            DResRDiff => DResRDiffInv,
            DResRDiffInv => DResRDiff,
            DResLDiff => DResLDiffInv,
            DResLDiffInv => DResLDiff,
            _ => return None,
        })
    }
}

impl fmt::Display for RuleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown rule label `{0}`")]
pub struct UnknownRule(pub String);

impl FromStr for RuleLabel {
    type Err = UnknownRule;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RuleLabel::ALL.iter().copied().find(|r| r.name() == s).ok_or_else(|| UnknownRule(s.to_string()))
    }
}

fn node(op: Connective, l: &Structure, r: &Structure) -> Structure {
    Structure::node(op, l.clone(), r.clone())
}

fn split(s: &Structure, op: Connective) -> Option<(&Structure, &Structure)> {
    match s {
        Structure::Node(o, l, r) if *o == op => Some((l, r)),
        _ => None,
    }
}

fn formula_split(s: &Structure, op: Connective) -> Option<(&Formula, &Formula)> {
    match s {
        Structure::Leaf(Formula::Binary(o, l, r), _) if *o == op => Some((l, r)),
        _ => None,
    }
}

fn inp(f: &Formula) -> Structure {
    Structure::Leaf(f.clone(), Polarity::Input)
}

fn out(f: &Formula) -> Structure {
    Structure::Leaf(f.clone(), Polarity::Output)
}

fn seq(lhs: Structure, rhs: Structure) -> Sequent {
    Sequent::raw(lhs, rhs)
}

/// Display moves applicable backward to `goal`, each with its single premise.
pub fn display_steps(goal: &Sequent) -> Vec<(RuleLabel, Sequent)> {
    let mut out = Vec::new();
    let (lhs, rhs) = (&goal.lhs, &goal.rhs);
    if let Some((x, y)) = split(lhs, Prod) {
        out.push((RuleLabel::ResOver, seq(x.clone(), node(Over, rhs, y))));
        out.push((RuleLabel::ResUnder, seq(y.clone(), node(Under, x, rhs))));
    }
    if let Some((p, y)) = split(rhs, Over) {
        out.push((RuleLabel::ResOverInv, seq(node(Prod, lhs, y), p.clone())));
    }
    if let Some((x, p)) = split(rhs, Under) {
        out.push((RuleLabel::ResUnderInv, seq(node(Prod, x, lhs), p.clone())));
    }
    if let Some((p, q)) = split(rhs, Coprod) {
        out.push((RuleLabel::DResRDiff, seq(node(RDiff, lhs, q), p.clone())));
        out.push((RuleLabel::DResLDiff, seq(node(LDiff, p, lhs), q.clone())));
    }
    if let Some((x, q)) = split(lhs, RDiff) {
        out.push((RuleLabel::DResRDiffInv, seq(x.clone(), node(Coprod, rhs, q))));
    }
    if let Some((p, x)) = split(lhs, LDiff) {
        out.push((RuleLabel::DResLDiffInv, seq(x.clone(), node(Coprod, p, rhs))));
    }
    out
}

/// Grishin interactions applicable backward to `goal`. At most one of the
/// four schemas matches a given sequent.
pub fn grishin_step(goal: &Sequent) -> Option<(RuleLabel, Sequent)> {
    let (lhs, rhs) = (&goal.lhs, &goal.rhs);
    let premise = |x: &Structure, y: &Structure, p: &Structure, q: &Structure| seq(node(Prod, x, y), node(Coprod, p, q));
    if let Some((x, q)) = split(lhs, RDiff) {
        if let Some((p, y)) = split(rhs, Over) {
            return Some((RuleLabel::GrishinRDiffOver, premise(x, y, p, q)));
        }
        if let Some((xx, p)) = split(rhs, Under) {
            // Y .(/). Q |- X .\. P
            return Some((RuleLabel::GrishinRDiffUnder, premise(xx, x, p, q)));
        }
    }
    if let Some((p, x)) = split(lhs, LDiff) {
        if let Some((q, y)) = split(rhs, Over) {
            return Some((RuleLabel::GrishinLDiffOver, premise(x, y, p, q)));
        }
        if let Some((xx, q)) = split(rhs, Under) {
            // P .(\). Y |- X .\. Q
            return Some((RuleLabel::GrishinLDiffUnder, premise(xx, x, p, q)));
        }
    }
    None
}

/// One-premise logical rule decomposing the lhs formula, if any.
pub fn left_rewrite(goal: &Sequent) -> Option<(RuleLabel, Sequent)> {
    let rhs = &goal.rhs;
    if let Some((a, b)) = formula_split(&goal.lhs, Prod) {
        return Some((RuleLabel::TensorL, seq(Structure::node(Prod, inp(a), inp(b)), rhs.clone())));
    }
    if let Some((a, b)) = formula_split(&goal.lhs, RDiff) {
        return Some((RuleLabel::RDiffL, seq(Structure::node(RDiff, inp(a), out(b)), rhs.clone())));
    }
    if let Some((b, a)) = formula_split(&goal.lhs, LDiff) {
        return Some((RuleLabel::LDiffL, seq(Structure::node(LDiff, out(b), inp(a)), rhs.clone())));
    }
    None
}

/// One-premise logical rule decomposing the rhs formula, if any.
pub fn right_rewrite(goal: &Sequent) -> Option<(RuleLabel, Sequent)> {
    let lhs = &goal.lhs;
    if let Some((b, a)) = formula_split(&goal.rhs, Coprod) {
        return Some((RuleLabel::CoprodR, seq(lhs.clone(), Structure::node(Coprod, out(b), out(a)))));
    }
    if let Some((a, b)) = formula_split(&goal.rhs, Over) {
        return Some((RuleLabel::OverR, seq(lhs.clone(), Structure::node(Over, out(a), inp(b)))));
    }
    if let Some((b, a)) = formula_split(&goal.rhs, Under) {
        return Some((RuleLabel::UnderR, seq(lhs.clone(), Structure::node(Under, inp(b), out(a)))));
    }
    None
}

/// Two-premise logical rule whose principal formula is the displayed lhs or rhs formula.
pub fn split_steps(goal: &Sequent) -> Vec<(RuleLabel, [Sequent; 2])> {
    let mut outv = Vec::new();
    let (lhs, rhs) = (&goal.lhs, &goal.rhs);
    if let (Some((x, y)), Some((a, b))) = (split(lhs, Prod), formula_split(rhs, Prod)) {
        outv.push((RuleLabel::TensorR, [seq(x.clone(), out(a)), seq(y.clone(), out(b))]));
    }
    if let (Some((b, a)), Some((p, q))) = (formula_split(lhs, Coprod), split(rhs, Coprod)) {
        outv.push((RuleLabel::CoprodL, [seq(inp(b), p.clone()), seq(inp(a), q.clone())]));
    }
    if let (Some((b, a)), Some((p, x))) = (formula_split(lhs, Over), split(rhs, Over)) {
        outv.push((RuleLabel::OverL, [seq(x.clone(), out(a)), seq(inp(b), p.clone())]));
    }
    if let (Some((a, b)), Some((x, p))) = (formula_split(lhs, Under), split(rhs, Under)) {
        outv.push((RuleLabel::UnderL, [seq(x.clone(), out(a)), seq(inp(b), p.clone())]));
    }
    if let (Some((p, x)), Some((a, b))) = (split(lhs, LDiff), formula_split(rhs, LDiff)) {
        outv.push((RuleLabel::LDiffR, [seq(x.clone(), out(b)), seq(inp(a), p.clone())]));
    }
    if let (Some((x, p)), Some((b, a))) = (split(lhs, RDiff), formula_split(rhs, RDiff)) {
        outv.push((RuleLabel::RDiffR, [seq(x.clone(), out(b)), seq(inp(a), p.clone())]));
    }
    outv
}

pub fn is_axiom(goal: &Sequent) -> bool {
    match (&goal.lhs, &goal.rhs) {
        (Structure::Leaf(Formula::Atom(a), _), Structure::Leaf(Formula::Atom(b), _)) => a == b,
        _ => false,
    }
}

/// Every Cut-free rule instance whose conclusion is exactly `goal`, in the
/// order: axiom, one-premise logical, two-premise logical, Grishin, display.
pub fn backward_steps(goal: &Sequent) -> Vec<(RuleLabel, Vec<Sequent>)> {
    let mut steps = Vec::new();
    if is_axiom(goal) {
        steps.push((RuleLabel::Ax, Vec::new()));
    }
    for (r, p) in left_rewrite(goal).into_iter().chain(right_rewrite(goal)) {
        steps.push((r, vec![p]));
    }
    for (r, [a, b]) in split_steps(goal) {
        steps.push((r, vec![a, b]));
    }
    if let Some((r, p)) = grishin_step(goal) {
        steps.push((r, vec![p]));
    }
    for (r, p) in display_steps(goal) {
        steps.push((r, vec![p]));
    }
    steps
}

/// Why a forward rule application failed.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Mismatch {
    #[error("{rule} expects {expected} premises, got {found}")]
    Arity { rule: RuleLabel, expected: usize, found: usize },
    #[error("{rule}: premise {index} does not fit the schema: {reason}")]
    Premise { rule: RuleLabel, index: usize, reason: String },
    #[error("{rule}: conclusion differs at {path}: expected `{expected}`, found `{found}`")]
    Conclusion { rule: RuleLabel, path: String, expected: String, found: String },
    #[error("Ax: `{0}` is not of the form p |- p")]
    NotAxiom(String),
}

fn need<T>(v: Option<T>, rule: RuleLabel, index: usize, reason: &str) -> Result<T, Mismatch> {
    v.ok_or_else(|| Mismatch::Premise { rule, index, reason: reason.to_string() })
}

fn formula_of(s: &Structure) -> Option<&Formula> {
    s.as_formula()
}

/// Computes the conclusion a rule yields from the given premises.
///
/// Every schema except the axiom determines its conclusion from its premises.
pub fn forward_conclusion(rule: RuleLabel, premises: &[Sequent]) -> Result<Sequent, Mismatch> {
    use RuleLabel as R;
    if premises.len() != rule.arity() {
        return Err(Mismatch::Arity { rule, expected: rule.arity(), found: premises.len() });
    }
    let single = |i: usize| &premises[i];
    let c = match rule {
        R::Ax => unreachable!("axiom has no forward conclusion"),
        R::Cut => {
            let a = need(formula_of(&single(0).rhs), rule, 0, "rhs must be a formula")?;
            let b = need(formula_of(&single(1).lhs), rule, 1, "lhs must be a formula")?;
            if a != b {
                return Err(Mismatch::Premise { rule, index: 1, reason: format!("cut formula `{a}` vs `{b}`") });
            }
            seq(single(0).lhs.clone(), single(1).rhs.clone())
        }
        R::ResOver => {
            let s = single(0);
            let (p, y) = need(split(&s.rhs, Over), rule, 0, "rhs must be P ./. Y")?;
            seq(node(Prod, &s.lhs, y), p.clone())
        }
        R::ResUnder => {
            let s = single(0);
            let (x, p) = need(split(&s.rhs, Under), rule, 0, "rhs must be X .\\. P")?;
            seq(node(Prod, x, &s.lhs), p.clone())
        }
        R::ResOverInv => {
            let s = single(0);
            let (x, y) = need(split(&s.lhs, Prod), rule, 0, "lhs must be X .*. Y")?;
            seq(x.clone(), node(Over, &s.rhs, y))
        }
        R::ResUnderInv => {
            let s = single(0);
            let (x, y) = need(split(&s.lhs, Prod), rule, 0, "lhs must be X .*. Y")?;
            seq(y.clone(), node(Under, x, &s.rhs))
        }
        R::DResRDiff => {
            let s = single(0);
            let (x, q) = need(split(&s.lhs, RDiff), rule, 0, "lhs must be X .(/). Q")?;
            seq(x.clone(), node(Coprod, &s.rhs, q))
        }
        R::DResLDiff => {
            let s = single(0);
            let (p, x) = need(split(&s.lhs, LDiff), rule, 0, "lhs must be P .(\\). X")?;
            seq(x.clone(), node(Coprod, p, &s.rhs))
        }
        R::DResRDiffInv => {
            let s = single(0);
            let (p, q) = need(split(&s.rhs, Coprod), rule, 0, "rhs must be P .(+). Q")?;
            seq(node(RDiff, &s.lhs, q), p.clone())
        }
        R::DResLDiffInv => {
            let s = single(0);
            let (p, q) = need(split(&s.rhs, Coprod), rule, 0, "rhs must be P .(+). Q")?;
            seq(node(LDiff, p, &s.lhs), q.clone())
        }
        R::GrishinRDiffOver | R::GrishinRDiffUnder | R::GrishinLDiffOver | R::GrishinLDiffUnder => {
            let s = single(0);
            let (x, y) = need(split(&s.lhs, Prod), rule, 0, "lhs must be X .*. Y")?;
            let (p, q) = need(split(&s.rhs, Coprod), rule, 0, "rhs must be P .(+). Q")?;
            match rule {
                R::GrishinRDiffOver => seq(node(RDiff, x, q), node(Over, p, y)),
                R::GrishinRDiffUnder => seq(node(RDiff, y, q), node(Under, x, p)),
                R::GrishinLDiffOver => seq(node(LDiff, p, x), node(Over, q, y)),
                _ => seq(node(LDiff, p, y), node(Under, x, q)),
            }
        }
        R::TensorL | R::RDiffL | R::LDiffL => {
            let s = single(0);
            let op = match rule {
                R::TensorL => Prod,
                R::RDiffL => RDiff,
                _ => LDiff,
            };
            let (a, b) = need(split(&s.lhs, op), rule, 0, "lhs must be a structural node over two formulas")?;
            let a = need(formula_of(a), rule, 0, "left operand must be a formula")?;
            let b = need(formula_of(b), rule, 0, "right operand must be a formula")?;
            seq(inp(&Formula::binary(op, a.clone(), b.clone())), s.rhs.clone())
        }
        R::CoprodR | R::OverR | R::UnderR => {
            let s = single(0);
            let op = match rule {
                R::CoprodR => Coprod,
                R::OverR => Over,
                _ => Under,
            };
            let (a, b) = need(split(&s.rhs, op), rule, 0, "rhs must be a structural node over two formulas")?;
            let a = need(formula_of(a), rule, 0, "left operand must be a formula")?;
            let b = need(formula_of(b), rule, 0, "right operand must be a formula")?;
            seq(s.lhs.clone(), out(&Formula::binary(op, a.clone(), b.clone())))
        }
        R::TensorR => {
            let (l, r) = (single(0), single(1));
            let a = need(formula_of(&l.rhs), rule, 0, "rhs must be a formula")?;
            let b = need(formula_of(&r.rhs), rule, 1, "rhs must be a formula")?;
            seq(node(Prod, &l.lhs, &r.lhs), out(&Formula::prod(a.clone(), b.clone())))
        }
        R::CoprodL => {
            let (l, r) = (single(0), single(1));
            let b = need(formula_of(&l.lhs), rule, 0, "lhs must be a formula")?;
            let a = need(formula_of(&r.lhs), rule, 1, "lhs must be a formula")?;
            seq(inp(&Formula::coprod(b.clone(), a.clone())), node(Coprod, &l.rhs, &r.rhs))
        }
        R::OverL => {
            // X |- A, B |- P  =>  B / A |- P ./. X
            let (l, r) = (single(0), single(1));
            let a = need(formula_of(&l.rhs), rule, 0, "rhs must be a formula")?;
            let b = need(formula_of(&r.lhs), rule, 1, "lhs must be a formula")?;
            seq(inp(&Formula::over(b.clone(), a.clone())), node(Over, &r.rhs, &l.lhs))
        }
        R::UnderL => {
            // X |- A, B |- P  =>  A \ B |- X .\. P
            let (l, r) = (single(0), single(1));
            let a = need(formula_of(&l.rhs), rule, 0, "rhs must be a formula")?;
            let b = need(formula_of(&r.lhs), rule, 1, "lhs must be a formula")?;
            seq(inp(&Formula::under(a.clone(), b.clone())), node(Under, &l.lhs, &r.rhs))
        }
        R::LDiffR => {
            // X |- B, A |- P  =>  P .(\). X |- A (\) B
            let (l, r) = (single(0), single(1));
            let b = need(formula_of(&l.rhs), rule, 0, "rhs must be a formula")?;
            let a = need(formula_of(&r.lhs), rule, 1, "lhs must be a formula")?;
            seq(node(LDiff, &r.rhs, &l.lhs), out(&Formula::ldiff(a.clone(), b.clone())))
        }
        R::RDiffR => {
            // X |- B, A |- P  =>  X .(/). P |- B (/) A
            let (l, r) = (single(0), single(1));
            let b = need(formula_of(&l.rhs), rule, 0, "rhs must be a formula")?;
            let a = need(formula_of(&r.lhs), rule, 1, "lhs must be a formula")?;
            seq(node(RDiff, &l.lhs, &r.rhs), out(&Formula::rdiff(b.clone(), a.clone())))
        }
    };
    Ok(c)
}

/// Checks one rule instance against its schema.
pub fn apply_forward(rule: RuleLabel, premises: &[Sequent], conclusion: &Sequent) -> Result<(), Mismatch> {
    if rule == RuleLabel::Ax {
        if !premises.is_empty() {
            return Err(Mismatch::Arity { rule, expected: 0, found: premises.len() });
        }
        return if is_axiom(conclusion) { Ok(()) } else { Err(Mismatch::NotAxiom(conclusion.to_string())) };
    }
    for (i, p) in premises.iter().enumerate() {
        if let Err(e) = p.validate() {
            return Err(Mismatch::Premise { rule, index: i, reason: e.to_string() });
        }
    }
    let expected = forward_conclusion(rule, premises)?;
    if &expected == conclusion {
        return Ok(());
    }
    let (path, e, f) = first_difference_seq(&expected, conclusion);
    Err(Mismatch::Conclusion { rule, path, expected: e, found: f })
}

fn first_difference_seq(a: &Sequent, b: &Sequent) -> (String, String, String) {
    let mut path = Vec::new();
    if let Some((e, f)) = first_difference(&a.lhs, &b.lhs, &mut path) {
        return (format!("lhs.{}", crate::term::render_path(&path)), e, f);
    }
    path.clear();
    match first_difference(&a.rhs, &b.rhs, &mut path) {
        Some((e, f)) => (format!("rhs.{}", crate::term::render_path(&path)), e, f),
        None => ("root".to_string(), a.to_string(), b.to_string()),
    }
}

fn first_difference(a: &Structure, b: &Structure, path: &mut Vec<Side>) -> Option<(String, String)> {
    match (a, b) {
        (Structure::Node(oa, la, ra), Structure::Node(ob, lb, rb)) if oa == ob => {
            path.push(Side::Left);
            if let Some(d) = first_difference(la, lb, path) {
                return Some(d);
            }
            path.pop();
            path.push(Side::Right);
            if let Some(d) = first_difference(ra, rb, path) {
                return Some(d);
            }
            path.pop();
            None
        }
        _ if a == b => None,
        _ => Some((a.to_string(), b.to_string())),
    }
}
