//! Satisfying assignments, the derivations they induce, and the SAT/LG
//! round trip.
//!
//! The witness derivation follows the textbook construction: unfold the
//! product of meet types into a structure, select `E_j(t_j)` in each meet
//! (this replacement is a Cut), unfold the chains, then peel `G_n` one
//! difference at a time, each time pulling a marked factor of the current
//! clause out of the structure with Grishin interactions.

use std::fmt;
use std::str::FromStr;

use crate::calculus::{check, CheckReport, Derivation, RuleLabel};
use crate::prover::{prove, Budgets, ProveOutcome};
use crate::reduction::{clause_atom, difference_type, e_formula, g_formula, h_formula, reduce, Cnf};
use crate::term::{Connective, Formula, Sequent, Side, Structure};

/// Values of `x_1 .. x_m`, in order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Assignment(pub Vec<bool>);

impl Assignment {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Value of variable `j`, 1-based.
    pub fn value(&self, j: usize) -> bool {
        self.0[j - 1]
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self.0.iter().map(|&b| if b { "1" } else { "0" }).collect();
        f.write_str(&parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("assignment must be a comma-separated list of 0 and 1, got `{0}`")]
pub struct AssignmentParseError(pub String);

impl FromStr for Assignment {
    type Err = AssignmentParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split(',')
            .map(|t| match t.trim() {
                "0" => Ok(false),
                "1" => Ok(true),
                _ => Err(AssignmentParseError(s.to_string())),
            })
            .collect::<Result<Vec<bool>, _>>()
            .map(Assignment)
    }
}

pub const MAX_SAT_VARS: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("brute-force enumeration is limited to {MAX_SAT_VARS} variables, got {0}")]
pub struct TooManyVariables(pub usize);

/// First satisfying assignment in lexicographic order (`x_1` most
/// significant, 0 before 1), or `None` if the CNF is unsatisfiable.
pub fn brute_force_sat(cnf: &Cnf) -> Result<Option<Assignment>, TooManyVariables> {
    let m = cnf.num_vars();
    if m > MAX_SAT_VARS {
        return Err(TooManyVariables(m));
    }
    let mut values = vec![false; m];
    for k in 0u32..(1u32 << m) {
        for (j, v) in values.iter_mut().enumerate() {
            *v = (k >> (m - 1 - j)) & 1 == 1;
        }
        if cnf.satisfied_by(&values) {
            return Ok(Some(Assignment(values)));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WitnessError {
    #[error("assignment has {found} values but the CNF has {expected} variables")]
    Length { expected: usize, found: usize },
    #[error("assignment {assignment} leaves clause {clause} unsatisfied")]
    Unsatisfied { assignment: String, clause: usize },
}

/// `A |- A` without Cut, by induction on `A`.
pub fn identity(a: &Formula) -> Derivation {
    let (op, l, r) = match a {
        Formula::Atom(_) => return Derivation::axiom(a),
        Formula::Binary(op, l, r) => (*op, l.as_ref(), r.as_ref()),
    };
    let seq = Sequent::formulas(a.clone(), a.clone());
    let inp = |f: &Formula| Structure::input(f.clone());
    let out = |f: &Formula| Structure::output(f.clone());
    let (one, inner, premises) = match op {
        Connective::Prod => (
            RuleLabel::TensorL,
            Sequent::raw(Structure::node(op, inp(l), inp(r)), out(a)),
            (RuleLabel::TensorR, vec![identity(l), identity(r)]),
        ),
        Connective::Over => (
            RuleLabel::OverR,
            Sequent::raw(inp(a), Structure::node(op, out(l), inp(r))),
            (RuleLabel::OverL, vec![identity(r), identity(l)]),
        ),
        Connective::Under => (
            RuleLabel::UnderR,
            Sequent::raw(inp(a), Structure::node(op, inp(l), out(r))),
            (RuleLabel::UnderL, vec![identity(l), identity(r)]),
        ),
        Connective::Coprod => (
            RuleLabel::CoprodR,
            Sequent::raw(inp(a), Structure::node(op, out(l), out(r))),
            (RuleLabel::CoprodL, vec![identity(l), identity(r)]),
        ),
        Connective::RDiff => (
            RuleLabel::RDiffL,
            Sequent::raw(Structure::node(op, inp(l), out(r)), out(a)),
            (RuleLabel::RDiffR, vec![identity(l), identity(r)]),
        ),
        Connective::LDiff => (
            RuleLabel::LDiffL,
            Sequent::raw(Structure::node(op, out(l), inp(r)), out(a)),
            (RuleLabel::LDiffR, vec![identity(r), identity(l)]),
        ),
    };
    let (two, subs) = premises;
    Derivation::new(seq, one, vec![Derivation::new(inner, two, subs)])
}

/// `p (/) (p (\) p) |- p`.
pub fn difference_lemma(p: &Formula) -> Derivation {
    let d = difference_type(p);
    let pp = Formula::ldiff(p.clone(), p.clone());
    let inp = Structure::input(p.clone());
    let out = Structure::output(p.clone());
    let ldiff_r = Derivation::new(
        Sequent::raw(Structure::node(Connective::LDiff, out.clone(), inp.clone()), Structure::output(pp.clone())),
        RuleLabel::LDiffR,
        vec![Derivation::axiom(p), Derivation::axiom(p)],
    );
    let dr = Derivation::new(
        Sequent::raw(inp.clone(), Structure::node(Connective::Coprod, out.clone(), Structure::output(pp.clone()))),
        RuleLabel::DResLDiff,
        vec![ldiff_r],
    );
    let dr_inv = Derivation::new(
        Sequent::raw(Structure::node(Connective::RDiff, inp, Structure::output(pp)), out),
        RuleLabel::DResRDiffInv,
        vec![dr],
    );
    Derivation::new(Sequent::formulas(d, p.clone()), RuleLabel::RDiffL, vec![dr_inv])
}

/// `f1 * (f2 * ...) |- g1 * (g2 * ...)` factorwise, given each `fi |- gi`.
fn chain_join(factors: &[Derivation]) -> Derivation {
    let (first, rest) = factors.split_first().expect("nonempty chain");
    if rest.is_empty() {
        return first.clone();
    }
    let tail = chain_join(rest);
    let lhs_of = |d: &Derivation| d.conclusion.lhs.as_formula().expect("formula sequent").clone();
    let rhs_of = |d: &Derivation| d.conclusion.rhs.as_formula().expect("formula sequent").clone();
    let (a, b) = (lhs_of(first), lhs_of(&tail));
    let (c, d) = (rhs_of(first), rhs_of(&tail));
    let product = Formula::prod(c, d);
    let split = Derivation::new(
        Sequent::raw(
            Structure::node(Connective::Prod, Structure::input(a.clone()), Structure::input(b.clone())),
            Structure::output(product.clone()),
        ),
        RuleLabel::TensorR,
        vec![first.clone(), tail],
    );
    Derivation::new(Sequent::formulas(Formula::prod(a, b), product), RuleLabel::TensorL, vec![split])
}

/// `E_j(t) |- H_j`, factor by factor.
pub fn join_derivation(cnf: &Cnf, j: usize, t: bool) -> Derivation {
    let factors: Vec<Derivation> = (1..=cnf.num_clauses())
        .map(|i| {
            let p = clause_atom(i);
            if cnf.clause(i).contains(j, t) {
                difference_lemma(&p)
            } else {
                Derivation::axiom(&p)
            }
        })
        .collect();
    chain_join(&factors)
}

/// `meet(a, b, c) |- a` (`pick_first`) or `meet(a, b, c) |- b`, given a
/// derivation of the other operand into the join `c`.
pub fn meet_derivation(a: &Formula, b: &Formula, c: &Formula, pick_first: bool, join: Derivation) -> Derivation {
    use Connective::{Over, Prod, Under};
    use RuleLabel as R;
    let cc = Formula::over(c.clone(), c.clone());
    let k = Formula::under(cc.clone(), c.clone());
    let left = Formula::over(a.clone(), k.clone());
    let right = Formula::under(cc.clone(), b.clone());
    let meet = Formula::prod(left.clone(), right.clone());
    let picked = if pick_first { a } else { b };
    let inp = |f: &Formula| Structure::input(f.clone());
    let out = |f: &Formula| Structure::output(f.clone());
    let seq = Sequent::raw;
    let unfolded = seq(Structure::node(Prod, inp(&left), inp(&right)), out(picked));

    let body = if pick_first {
        // (c/c)\b |- (c/c)\c from c/c |- c/c and b |- c.
        let under_l = Derivation::new(
            seq(inp(&right), Structure::node(Under, inp(&cc), out(c))),
            R::UnderL,
            vec![identity(&cc), join],
        );
        let under_r = Derivation::new(Sequent::formulas(right.clone(), k.clone()), R::UnderR, vec![under_l]);
        let over_l = Derivation::new(
            seq(inp(&left), Structure::node(Over, out(a), inp(&right))),
            R::OverL,
            vec![under_r, identity(a)],
        );
        Derivation::new(unfolded, R::ResOver, vec![over_l])
    } else {
        // c |- (c/c)\c.
        let c_over = Derivation::new(
            seq(inp(&cc), Structure::node(Over, out(c), inp(c))),
            R::OverL,
            vec![identity(c), identity(c)],
        );
        let res = Derivation::new(seq(Structure::node(Prod, inp(&cc), inp(c)), out(c)), R::ResOver, vec![c_over]);
        let res_inv = Derivation::new(seq(inp(c), Structure::node(Under, inp(&cc), out(c))), R::ResUnderInv, vec![res]);
        let c_to_k = Derivation::new(Sequent::formulas(c.clone(), k.clone()), R::UnderR, vec![res_inv]);
        // a/k |- c/c from c |- k and a |- c.
        let over_l = Derivation::new(
            seq(inp(&left), Structure::node(Over, out(c), inp(c))),
            R::OverL,
            vec![c_to_k, join],
        );
        let over_r = Derivation::new(Sequent::formulas(left.clone(), cc.clone()), R::OverR, vec![over_l]);
        let under_l = Derivation::new(
            seq(inp(&right), Structure::node(Under, inp(&left), out(b))),
            R::UnderL,
            vec![over_r, identity(b)],
        );
        Derivation::new(unfolded, R::ResUnder, vec![under_l])
    };
    Derivation::new(Sequent::formulas(meet, picked.clone()), R::TensorL, vec![body])
}

/// Display moves bringing the leaf at `path` of a product structure to the
/// left of the turnstile: each conclusion with its label, then the final
/// displayed sequent.
fn display_chain(x: &Structure, path: &[Side], rhs: &Structure) -> (Vec<(Sequent, RuleLabel)>, Sequent) {
    let mut steps = Vec::new();
    let (mut cx, mut cr) = (x.clone(), rhs.clone());
    for side in path {
        let (op, l, r) = cx.as_node().expect("path stays inside the structure");
        assert_eq!(op, Connective::Prod, "display chain through a non-product node");
        let (l, r) = (l.clone(), r.clone());
        steps.push((Sequent::raw(cx.clone(), cr.clone()), if *side == Side::Left { RuleLabel::ResOver } else { RuleLabel::ResUnder }));
        (cx, cr) = match side {
            Side::Left => (l, Structure::node(Connective::Over, cr, r)),
            Side::Right => (r, Structure::node(Connective::Under, l, cr)),
        };
    }
    (steps, Sequent::raw(cx, cr))
}

/// Derives `x[old] |- rhs` from a derivation `rest` of `x[new] |- rhs`:
/// display the leaf, apply `local` to the displayed sequent and the
/// displayed form of `rest`, then undo the display moves.
fn rewrite_at(
    x: &Structure,
    path: &[Side],
    rhs: &Structure,
    new: Structure,
    local: impl FnOnce(Sequent, Derivation) -> Derivation,
    rest: Derivation,
) -> Derivation {
    let (old_chain, shown) = display_chain(x, path, rhs);
    let (new_chain, new_shown) = display_chain(&x.replace(path, new), path, rhs);
    let mut d = rest;
    for (i, (_, label)) in new_chain.iter().enumerate() {
        let next = new_chain.get(i + 1).map(|(s, _)| s.clone()).unwrap_or_else(|| new_shown.clone());
        d = Derivation::new(next, label.inverse().expect("display label"), vec![d]);
    }
    let mut d = local(shown, d);
    for (s, label) in old_chain.into_iter().rev() {
        d = Derivation::new(s, label, vec![d]);
    }
    d
}

/// Derives `x[a (/) b] |- rhs` from `d`, a derivation of `x[a] .(/). b |- rhs`,
/// where `x` is a product structure with the difference at `path`.
fn move_out(x: &Structure, path: &[Side], rhs: &Structure, d: Derivation) -> Derivation {
    let conclusion = Sequent::raw(x.clone(), rhs.clone());
    let Some((side, rest)) = path.split_first() else {
        return Derivation::new(conclusion, RuleLabel::RDiffL, vec![d]);
    };
    let (_, l, r) = x.as_node().expect("path stays inside the structure");
    let target = x.subterm(path).and_then(Structure::as_formula).expect("leaf at path");
    let Formula::Binary(Connective::RDiff, a, b) = target else { panic!("move target {target} is not a difference") };
    let b_out = Structure::output(b.as_ref().clone());
    let a_in = Structure::input(a.as_ref().clone());
    let plus = |p: &Structure| Structure::node(Connective::Coprod, p.clone(), b_out.clone());
    let (label, inner_x, inner_rhs, grishin) = match side {
        Side::Left => (RuleLabel::ResOver, l, Structure::node(Connective::Over, rhs.clone(), r.clone()), RuleLabel::GrishinRDiffOver),
        Side::Right => (RuleLabel::ResUnder, r, Structure::node(Connective::Under, l.clone(), rhs.clone()), RuleLabel::GrishinRDiffUnder),
    };
    let pulled = x.replace(path, a_in.clone());
    let dres = Derivation::new(Sequent::raw(pulled, plus(rhs)), RuleLabel::DResRDiff, vec![d]);
    let inner_pulled = inner_x.replace(rest, a_in);
    let gr = Derivation::new(
        Sequent::raw(Structure::node(Connective::RDiff, inner_pulled, b_out.clone()), inner_rhs.clone()),
        grishin,
        vec![dres],
    );
    let sub = move_out(inner_x, rest, &inner_rhs, gr);
    Derivation::new(conclusion, label, vec![sub])
}

/// Closes `x |- f` where `x` mirrors the product formula `f` leaf by leaf.
fn match_products(x: &Structure, f: &Formula) -> Derivation {
    match (x, f) {
        (Structure::Leaf(g, _), _) => {
            assert_eq!(g, f, "leaf does not match its target");
            identity(f)
        }
        (Structure::Node(Connective::Prod, l, r), Formula::Binary(Connective::Prod, a, b)) => Derivation::new(
            Sequent::raw(x.clone(), Structure::output(f.clone())),
            RuleLabel::TensorR,
            vec![match_products(l, a), match_products(r, b)],
        ),
        _ => panic!("structure {x} does not mirror {f}"),
    }
}

type Wrap = Box<dyn FnOnce(Derivation) -> Derivation>;

/// A sequence of backward transformations; each step records how to turn a
/// derivation of the new goal into one of the previous goal.
struct Plan {
    x: Structure,
    rhs: Structure,
    wraps: Vec<Wrap>,
}

impl Plan {
    fn leaf(&self, path: &[Side]) -> Formula {
        self.x.subterm(path).and_then(Structure::as_formula).expect("leaf at path").clone()
    }

    fn rewrite(&mut self, path: Vec<Side>, new: Structure, local: impl FnOnce(Sequent, Derivation) -> Derivation + 'static) {
        let (x, rhs) = (self.x.clone(), self.rhs.clone());
        self.x = self.x.replace(&path, new.clone());
        self.wraps.push(Box::new(move |rest| rewrite_at(&x, &path, &rhs, new, local, rest)));
    }

    /// Turns the product formula at `path` into a structural product.
    fn unfold(&mut self, path: Vec<Side>) {
        let Formula::Binary(Connective::Prod, a, b) = self.leaf(&path) else { panic!("unfold of a non-product") };
        let new = Structure::node(
            Connective::Prod,
            Structure::input(a.as_ref().clone()),
            Structure::input(b.as_ref().clone()),
        );
        self.rewrite(path, new, |shown, d| Derivation::new(shown, RuleLabel::TensorL, vec![d]));
    }

    /// Replaces the leaf at `path` by the right side of `lemma` (a Cut).
    fn replace(&mut self, path: Vec<Side>, lemma: Derivation) {
        let target = lemma.conclusion.rhs.as_formula().expect("formula lemma").clone();
        self.rewrite(path, Structure::input(target), move |shown, d| Derivation::new(shown, RuleLabel::Cut, vec![lemma, d]));
    }

    /// Pulls the difference `p (/) (p (\) p)` at `path` out of the structure
    /// and splits off the matching difference of the right side.
    fn peel(&mut self, path: Vec<Side>) {
        let (x, rhs) = (self.x.clone(), self.rhs.clone());
        let Formula::Binary(Connective::RDiff, g_prev, mark) = rhs.as_formula().expect("formula goal").clone() else {
            panic!("goal is not a difference")
        };
        let Formula::Binary(_, p, _) = self.leaf(&path) else { panic!("peel of an atom") };
        let pulled = x.replace(&path, Structure::input(p.as_ref().clone()));
        self.x = pulled.clone();
        self.rhs = Structure::output(g_prev.as_ref().clone());
        self.wraps.push(Box::new(move |rest| {
            let split = Derivation::new(
                Sequent::raw(
                    Structure::node(Connective::RDiff, pulled, Structure::output(mark.as_ref().clone())),
                    rhs.clone(),
                ),
                RuleLabel::RDiffR,
                vec![rest, identity(&mark)],
            );
            move_out(&x, &path, &rhs, split)
        }));
    }

    fn finish(self, base: Derivation) -> Derivation {
        self.wraps.into_iter().rev().fold(base, |d, wrap| wrap(d))
    }
}

/// Path of element `k` (1-based) of a right-nested spine of `len` elements.
fn spine_path(k: usize, len: usize) -> Vec<Side> {
    let mut p = vec![Side::Right; k - 1];
    if k < len {
        p.push(Side::Left);
    }
    p
}

/// A derivation of `reduce(cnf)` from a satisfying assignment. It uses Cut
/// where a meet type is replaced by its chosen chain and where marked
/// factors are collapsed to their atom.
pub fn build_witness(cnf: &Cnf, a: &Assignment) -> Result<Derivation, WitnessError> {
    let (m, n) = (cnf.num_vars(), cnf.num_clauses());
    if a.len() != m {
        return Err(WitnessError::Length { expected: m, found: a.len() });
    }
    if let Some(i) = (1..=n).find(|&i| !cnf.clause(i).literals.iter().any(|l| l.satisfied_by(a.value(l.var)))) {
        return Err(WitnessError::Unsatisfied { assignment: a.to_string(), clause: i });
    }
    let goal = reduce(cnf);
    let mut plan = Plan { x: goal.lhs.clone(), rhs: goal.rhs.clone(), wraps: Vec::new() };

    for j in 1..m {
        plan.unfold(vec![Side::Right; j - 1]);
    }
    for j in 1..=m {
        let t = a.value(j);
        let (e1, e0, h) = (e_formula(cnf, j, true), e_formula(cnf, j, false), h_formula(cnf, j));
        let lemma = meet_derivation(&e1, &e0, &h, t, join_derivation(cnf, j, !t));
        plan.replace(spine_path(j, m), lemma);
    }
    let leaf_path = |j: usize, i: usize| {
        let mut p = spine_path(j, m);
        p.extend(spine_path(i, n));
        p
    };
    for j in 1..=m {
        for i in 1..n {
            let mut p = spine_path(j, m);
            p.extend(vec![Side::Right; i - 1]);
            plan.unfold(p);
        }
    }
    for i in (1..=n).rev() {
        let p = clause_atom(i);
        let marked = difference_type(&p);
        let occurrences: Vec<Vec<Side>> =
            (1..=m).map(|j| leaf_path(j, i)).filter(|path| plan.leaf(path) == marked).collect();
        let (first, others) = occurrences.split_first().expect("a satisfied clause has a marked factor");
        plan.peel(first.clone());
        for path in others {
            plan.replace(path.clone(), difference_lemma(&p));
        }
    }
    let base = match_products(&plan.x, &g_formula(cnf, 0));
    Ok(plan.finish(base))
}

/// Outcome of running both decision procedures on one CNF.
#[derive(Debug, Clone, PartialEq, Eq, Copy)]
pub enum VerdictKind {
    BothPositive,
    BothNegative,
    Inconsistent,
    Inconclusive,
}

impl VerdictKind {
    pub fn describe(self) -> &'static str {
        match self {
            VerdictKind::BothPositive => "consistent: both positive",
            VerdictKind::BothNegative => "consistent: both negative",
            VerdictKind::Inconsistent => "inconsistent",
            VerdictKind::Inconclusive => "inconclusive: budget exceeded",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundtripVerdict {
    pub sat: Option<Assignment>,
    pub lg: ProveOutcome,
    /// Check of the witness derivation, present when the CNF is satisfiable.
    pub witness: Option<CheckReport>,
}

impl RoundtripVerdict {
    pub fn kind(&self) -> VerdictKind {
        let witness_ok = self.witness.as_ref().is_none_or(|r| r.ok);
        match (&self.sat, &self.lg) {
            (_, ProveOutcome::BudgetExceeded(_)) => VerdictKind::Inconclusive,
            (Some(_), ProveOutcome::Proved(_)) if witness_ok => VerdictKind::BothPositive,
            (None, ProveOutcome::Unprovable) => VerdictKind::BothNegative,
            _ => VerdictKind::Inconsistent,
        }
    }

    pub fn consistent(&self) -> bool {
        matches!(self.kind(), VerdictKind::BothPositive | VerdictKind::BothNegative)
    }
}

/// Decides the CNF by enumeration and its encoding by proof search; when
/// satisfiable, also builds and checks the witness derivation. `None`
/// budgets mean the defaults for the encoded sequent.
pub fn roundtrip(cnf: &Cnf, budgets: Option<Budgets>) -> Result<RoundtripVerdict, TooManyVariables> {
    let sat = brute_force_sat(cnf)?;
    let goal = reduce(cnf);
    let lg = prove(&goal, budgets.unwrap_or_else(|| Budgets::for_goal(&goal)));
    let witness = sat.as_ref().map(|a| match build_witness(cnf, a) {
        Ok(d) => {
            let mut report = check(&d, true);
            if report.ok && d.conclusion != goal {
                report.ok = false;
            }
            report
        }
        Err(_) => CheckReport::default(),
    });
    Ok(RoundtripVerdict { sat, lg, witness })
}
