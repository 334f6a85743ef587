//! Bounded Cut-free backward proof search.
//!
//! The search works on display classes rather than on individual sequents:
//! a class is identified by its least rendered member, and every rule is
//! tried at whichever member displays its principal part. Per class it
//!
//! 1. closes `p |- p` by the axiom;
//! 2. applies a one-premise logical rule if any member admits one, without
//!    considering alternatives (these rules are invertible);
//! 3. tries every two-premise logical rule, the left premise first;
//! 4. tries every Grishin interaction.
//!
//! Premises whose atom occurrences do not balance are discarded before they
//! are searched. Failures are memoized per class; a failure is stored as
//! definitive only if no budget cut the search short below it.

use std::collections::HashMap;
use std::sync::Arc;

use crate::calculus::{
    grishin_step, is_axiom, left_rewrite, right_rewrite, split_steps, Derivation, DisplayClass, RuleLabel,
};
use crate::census::{census, ConnectiveCensus};
use crate::term::Sequent;

/// Search limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budgets {
    /// Grishin interactions allowed in the whole derivation.
    pub grishin_max: usize,
    /// Longest chain of non-axiom rule nodes, display moves included.
    pub depth_max: usize,
    /// Safety valve on the number of class expansions.
    pub node_max: usize,
}

pub const DEFAULT_NODE_MAX: usize = 2_000_000;

impl Budgets {
    /// Defaults for a sequent of length `len`: `ceil(len^2 / 4)` Grishin
    /// interactions and `2 len^2 + ceil(len^3 / 2)` derivation steps.
    pub fn for_length(len: usize) -> Budgets {
        Budgets {
            grishin_max: (len * len).div_ceil(4),
            depth_max: 2 * len * len + (len * len * len).div_ceil(2),
            node_max: DEFAULT_NODE_MAX,
        }
    }

    pub fn for_goal(goal: &Sequent) -> Budgets {
        Budgets::for_length(goal.length())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BudgetKind {
    Grishin,
    Depth,
    Nodes,
}

impl BudgetKind {
    pub fn name(self) -> &'static str {
        match self {
            BudgetKind::Grishin => "grishin",
            BudgetKind::Depth => "depth",
            BudgetKind::Nodes => "nodes",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProveOutcome {
    Proved(Derivation),
    Unprovable,
    BudgetExceeded(BudgetKind),
}

impl ProveOutcome {
    pub fn is_proved(&self) -> bool {
        matches!(self, ProveOutcome::Proved(_))
    }

    pub fn derivation(&self) -> Option<&Derivation> {
        match self {
            ProveOutcome::Proved(d) => Some(d),
            _ => None,
        }
    }
}

/// Default budgets of a goal together with the counts they derive from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GoalStats {
    pub length: usize,
    pub census: ConnectiveCensus,
    pub budgets: Budgets,
}

pub fn stats(goal: &Sequent) -> GoalStats {
    let census = census(goal);
    GoalStats { length: census.length(), census, budgets: Budgets::for_length(census.length()) }
}

pub fn prove(goal: &Sequent, budgets: Budgets) -> ProveOutcome {
    Prover::new(budgets).prove(goal)
}

/// Search counters from the last run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub expansions: usize,
    pub memo_hits: usize,
    pub classes: usize,
}

#[derive(Debug, Clone)]
pub struct Prover {
    budgets: Budgets,
    memo: bool,
    stats: SearchStats,
}

/// A proof of a display class: the member at which the last rule applies,
/// that rule, and proofs of its premises.
#[derive(Debug)]
struct ClassProof {
    step: Step,
    grishin: usize,
    /// Upper bound on the height of any materialization.
    height: usize,
}

#[derive(Debug)]
enum Step {
    Axiom,
    Rule { member: Sequent, rule: RuleLabel, premises: Vec<(Sequent, Arc<ClassProof>)> },
}

enum Res {
    Proved(Arc<ClassProof>),
    Failed(Option<BudgetKind>),
}

struct Abort;

#[derive(Default)]
struct Memo {
    failed: HashMap<String, ()>,
    truncated: HashMap<String, Vec<(usize, usize, BudgetKind)>>,
    proved: HashMap<String, Arc<ClassProof>>,
}

struct Search<'a> {
    budgets: Budgets,
    use_memo: bool,
    memo: Memo,
    stats: &'a mut SearchStats,
}

impl Prover {
    pub fn new(budgets: Budgets) -> Prover {
        Prover { budgets, memo: true, stats: SearchStats::default() }
    }

    /// Disables the failure/success tables; the search is then exponential.
    pub fn without_memo(mut self) -> Prover {
        self.memo = false;
        self
    }

    pub fn last_stats(&self) -> SearchStats {
        self.stats
    }

    pub fn prove(&mut self, goal: &Sequent) -> ProveOutcome {
        self.stats = SearchStats::default();
        let mut search = Search { budgets: self.budgets, use_memo: self.memo, memo: Memo::default(), stats: &mut self.stats };
        let res = search.solve(goal, self.budgets.grishin_max, self.budgets.depth_max);
        search.stats.classes = search.memo.failed.len() + search.memo.proved.len() + search.memo.truncated.len();
        match res {
            Err(Abort) => ProveOutcome::BudgetExceeded(BudgetKind::Nodes),
            Ok(Res::Failed(None)) => ProveOutcome::Unprovable,
            Ok(Res::Failed(Some(kind))) => ProveOutcome::BudgetExceeded(kind),
            Ok(Res::Proved(proof)) => {
                let d = materialize(goal, &proof);
                debug_assert!(d.height() <= proof.height);
                ProveOutcome::Proved(d)
            }
        }
    }
}

fn merge(acc: &mut Option<BudgetKind>, k: Option<BudgetKind>) {
    if acc.is_none() {
        *acc = k;
    }
}

impl Search<'_> {
    fn solve(&mut self, entry: &Sequent, grishin: usize, depth: usize) -> Result<Res, Abort> {
        self.stats.expansions += 1;
        if self.stats.expansions > self.budgets.node_max {
            return Err(Abort);
        }
        if !entry.is_balanced() {
            return Ok(Res::Failed(None));
        }
        let class = DisplayClass::explore(entry, None).expect("display classes are finite");
        let key = class.rendered(class.canonical_index()).to_string();
        if self.use_memo {
            if self.memo.failed.contains_key(&key) {
                self.stats.memo_hits += 1;
                return Ok(Res::Failed(None));
            }
            if let Some(p) = self.memo.proved.get(&key) {
                if p.grishin <= grishin && p.height <= depth {
                    self.stats.memo_hits += 1;
                    return Ok(Res::Proved(p.clone()));
                }
            }
            if let Some(list) = self.memo.truncated.get(&key) {
                if let Some(&(_, _, kind)) = list.iter().find(|(g, d, _)| *g >= grishin && *d >= depth) {
                    self.stats.memo_hits += 1;
                    return Ok(Res::Failed(Some(kind)));
                }
            }
        }
        let res = self.expand(&class, grishin, depth)?;
        if self.use_memo {
            match &res {
                Res::Proved(p) => {
                    self.memo.proved.insert(key, p.clone());
                }
                Res::Failed(None) => {
                    self.memo.failed.insert(key, ());
                }
                Res::Failed(Some(kind)) => {
                    self.memo.truncated.entry(key).or_default().push((grishin, depth, *kind));
                }
            }
        }
        Ok(res)
    }

    fn expand(&mut self, class: &DisplayClass, grishin: usize, depth: usize) -> Result<Res, Abort> {
        let structural = class.members[0].lhs.structural_count() + class.members[0].rhs.structural_count();
        if structural == 0 && is_axiom(&class.members[0]) {
            return Ok(Res::Proved(Arc::new(ClassProof { step: Step::Axiom, grishin: 0, height: 0 })));
        }
        let mut order: Vec<usize> = (0..class.len()).collect();
        order.sort_by(|&a, &b| class.rendered(a).cmp(class.rendered(b)));
        let cost = 2 * structural + 1;
        let sub_depth = depth.checked_sub(cost);

        // Invertible one-premise rules: commit to the first one found.
        for &i in &order {
            let member = &class.members[i];
            if let Some((rule, premise)) = left_rewrite(member).or_else(|| right_rewrite(member)) {
                let Some(d) = sub_depth else { return Ok(Res::Failed(Some(BudgetKind::Depth))) };
                return Ok(match self.solve(&premise, grishin, d)? {
                    Res::Proved(p) => Res::Proved(Arc::new(ClassProof {
                        grishin: p.grishin,
                        height: cost + p.height,
                        step: Step::Rule { member: member.clone(), rule, premises: vec![(premise, p)] },
                    })),
                    failed => failed,
                });
            }
        }

        let mut truncated = None;
        for &i in &order {
            let member = &class.members[i];
            for (rule, [left, right]) in split_steps(member) {
                if !left.is_balanced() || !right.is_balanced() {
                    continue;
                }
                let Some(d) = sub_depth else {
                    merge(&mut truncated, Some(BudgetKind::Depth));
                    continue;
                };
                match self.solve_pair(&left, &right, grishin, d)? {
                    Ok((pl, pr)) => {
                        return Ok(Res::Proved(Arc::new(ClassProof {
                            grishin: pl.grishin + pr.grishin,
                            height: cost + pl.height.max(pr.height),
                            step: Step::Rule { member: member.clone(), rule, premises: vec![(left, pl), (right, pr)] },
                        })));
                    }
                    Err(k) => merge(&mut truncated, k),
                }
            }
        }

        for &i in &order {
            let member = &class.members[i];
            if let Some((rule, premise)) = grishin_step(member) {
                if grishin == 0 {
                    merge(&mut truncated, Some(BudgetKind::Grishin));
                    continue;
                }
                let Some(d) = sub_depth else {
                    merge(&mut truncated, Some(BudgetKind::Depth));
                    continue;
                };
                match self.solve(&premise, grishin - 1, d)? {
                    Res::Proved(p) => {
                        return Ok(Res::Proved(Arc::new(ClassProof {
                            grishin: p.grishin + 1,
                            height: cost + p.height,
                            step: Step::Rule { member: member.clone(), rule, premises: vec![(premise, p)] },
                        })));
                    }
                    Res::Failed(k) => merge(&mut truncated, k),
                }
            }
        }
        Ok(Res::Failed(truncated))
    }

    /// Both premises of a two-premise rule under a shared Grishin budget.
    #[allow(clippy::type_complexity)]
    fn solve_pair(
        &mut self,
        left: &Sequent,
        right: &Sequent,
        grishin: usize,
        depth: usize,
    ) -> Result<Result<(Arc<ClassProof>, Arc<ClassProof>), Option<BudgetKind>>, Abort> {
        let pl = match self.solve(left, grishin, depth)? {
            Res::Proved(p) => p,
            Res::Failed(k) => return Ok(Err(k)),
        };
        match self.solve(right, grishin - pl.grishin, depth)? {
            Res::Proved(pr) => Ok(Ok((pl, pr))),
            Res::Failed(None) => Ok(Err(None)),
            Res::Failed(Some(kind)) => {
                if pl.grishin == 0 {
                    return Ok(Err(Some(kind)));
                }
                // The left proof may have spent Grishin budget the right one
                // needed; try the other order before giving up.
                let pr = match self.solve(right, grishin, depth)? {
                    Res::Proved(p) => p,
                    Res::Failed(k) => return Ok(Err(k.or(Some(kind)))),
                };
                match self.solve(left, grishin - pr.grishin, depth)? {
                    Res::Proved(pl) => Ok(Ok((pl, pr))),
                    Res::Failed(k) => Ok(Err(k.or(Some(kind)))),
                }
            }
        }
    }
}

fn materialize(entry: &Sequent, proof: &ClassProof) -> Derivation {
    match &proof.step {
        Step::Axiom => {
            let f = entry.lhs.as_formula().expect("axiom class has a bare formula");
            Derivation::axiom(f)
        }
        Step::Rule { member, rule, premises } => {
            let class = DisplayClass::explore(entry, None).expect("display classes are finite");
            let idx = class.position(member).expect("rule member lies in the entry's display class");
            let mut top = Derivation::new(
                member.clone(),
                *rule,
                premises.iter().map(|(p, sub)| materialize(p, sub)).collect(),
            );
            for (from, label) in class.path_to(idx).into_iter().rev() {
                top = Derivation::new(from, label, vec![top]);
            }
            top
        }
    }
}
