//! Independent derivability oracle.
//!
//! Transcribes every Cut-free rule straight from the rule table into a
//! backward generator over hash-consed terms, collects all sequents reachable
//! backward from a goal, and computes the least fixpoint of the rule
//! equations together with minimal derivation heights (axioms at height 0,
//! every other rule node +1). It shares nothing with the library's rule code.

use std::collections::HashMap;

use lg_core::{Connective, Formula};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Op {
    Tensor,
    Over,
    Under,
    Plus,
    RDiff,
    LDiff,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum F {
    Var(u32),
    Bin(Op, u32, u32),
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum S {
    Leaf(u32),
    Node(Op, u32, u32),
}

type Seq = (u32, u32);

#[derive(Default)]
pub struct Oracle {
    fs: Vec<F>,
    f_ids: HashMap<F, u32>,
    ss: Vec<S>,
    s_ids: HashMap<S, u32>,
    vars: HashMap<String, u32>,
    /// Settled sequents: minimal height, or `None` if underivable.
    settled: HashMap<Seq, Option<u32>>,
}

fn op_of(c: Connective) -> Op {
    match c {
        Connective::Prod => Op::Tensor,
        Connective::Over => Op::Over,
        Connective::Under => Op::Under,
        Connective::Coprod => Op::Plus,
        Connective::RDiff => Op::RDiff,
        Connective::LDiff => Op::LDiff,
    }
}

impl Oracle {
    pub fn new() -> Oracle {
        Oracle::default()
    }

    pub fn settled_count(&self) -> usize {
        self.settled.len()
    }

    fn f(&mut self, f: F) -> u32 {
        if let Some(&id) = self.f_ids.get(&f) {
            return id;
        }
        let id = self.fs.len() as u32;
        self.fs.push(f);
        self.f_ids.insert(f, id);
        id
    }

    fn s(&mut self, s: S) -> u32 {
        if let Some(&id) = self.s_ids.get(&s) {
            return id;
        }
        let id = self.ss.len() as u32;
        self.ss.push(s);
        self.s_ids.insert(s, id);
        id
    }

    fn leaf(&mut self, f: u32) -> u32 {
        self.s(S::Leaf(f))
    }

    fn node(&mut self, op: Op, l: u32, r: u32) -> u32 {
        self.s(S::Node(op, l, r))
    }

    fn formula(&mut self, f: &Formula) -> u32 {
        match f {
            Formula::Atom(a) => {
                let n = self.vars.len() as u32;
                let v = *self.vars.entry(a.name().to_string()).or_insert(n);
                self.f(F::Var(v))
            }
            Formula::Binary(c, l, r) => {
                let l = self.formula(l);
                let r = self.formula(r);
                self.f(F::Bin(op_of(*c), l, r))
            }
        }
    }

    /// Minimal Cut-free derivation height of `lhs |- rhs`, or `None` if the
    /// sequent is not derivable.
    pub fn min_height(&mut self, lhs: &Formula, rhs: &Formula) -> Option<u32> {
        let a = self.formula(lhs);
        let b = self.formula(rhs);
        let goal = (self.leaf(a), self.leaf(b));
        self.solve(goal)
    }

    /// Every rule instance with conclusion `seq`, as premise lists.
    fn backward(&mut self, (x, p): Seq) -> Vec<Vec<Seq>> {
        let mut out: Vec<Vec<Seq>> = Vec::new();
        let lhs = self.ss[x as usize];
        let rhs = self.ss[p as usize];

        // Ax
        if let (S::Leaf(a), S::Leaf(b)) = (lhs, rhs) {
            if a == b && matches!(self.fs[a as usize], F::Var(_)) {
                out.push(vec![]);
            }
        }

        // Display rules, in both directions.
        if let S::Node(Op::Tensor, xx, yy) = lhs {
            let q = self.node(Op::Over, p, yy);
            out.push(vec![(xx, q)]);
            let q = self.node(Op::Under, xx, p);
            out.push(vec![(yy, q)]);
        }
        if let S::Node(Op::Over, pp, yy) = rhs {
            let l = self.node(Op::Tensor, x, yy);
            out.push(vec![(l, pp)]);
        }
        if let S::Node(Op::Under, xx, pp) = rhs {
            let l = self.node(Op::Tensor, xx, x);
            out.push(vec![(l, pp)]);
        }
        if let S::Node(Op::Plus, pp, qq) = rhs {
            let l = self.node(Op::RDiff, x, qq);
            out.push(vec![(l, pp)]);
            let l = self.node(Op::LDiff, pp, x);
            out.push(vec![(l, qq)]);
        }
        if let S::Node(Op::RDiff, xx, qq) = lhs {
            let r = self.node(Op::Plus, p, qq);
            out.push(vec![(xx, r)]);
        }
        if let S::Node(Op::LDiff, pp, xx) = lhs {
            let r = self.node(Op::Plus, pp, p);
            out.push(vec![(xx, r)]);
        }

        // Grishin interactions; all share the premise X.*.Y |- P.(+).Q.
        match (lhs, rhs) {
            (S::Node(Op::RDiff, xx, qq), S::Node(Op::Over, pp, yy)) => {
                let l = self.node(Op::Tensor, xx, yy);
                let r = self.node(Op::Plus, pp, qq);
                out.push(vec![(l, r)]);
            }
            (S::Node(Op::RDiff, yy, qq), S::Node(Op::Under, xx, pp)) => {
                let l = self.node(Op::Tensor, xx, yy);
                let r = self.node(Op::Plus, pp, qq);
                out.push(vec![(l, r)]);
            }
            (S::Node(Op::LDiff, pp, xx), S::Node(Op::Over, qq, yy)) => {
                let l = self.node(Op::Tensor, xx, yy);
                let r = self.node(Op::Plus, pp, qq);
                out.push(vec![(l, r)]);
            }
            (S::Node(Op::LDiff, pp, yy), S::Node(Op::Under, xx, qq)) => {
                let l = self.node(Op::Tensor, xx, yy);
                let r = self.node(Op::Plus, pp, qq);
                out.push(vec![(l, r)]);
            }
            _ => {}
        }

        // Logical rules, left side formula.
        if let S::Leaf(f) = lhs {
            if let F::Bin(op, a, b) = self.fs[f as usize] {
                match op {
                    Op::Tensor | Op::LDiff | Op::RDiff => {
                        let la = self.leaf(a);
                        let lb = self.leaf(b);
                        let l = self.node(op, la, lb);
                        out.push(vec![(l, p)]);
                    }
                    Op::Plus => {
                        // B (+) A |- P .(+). Q  <=  B |- P, A |- Q
                        if let S::Node(Op::Plus, pp, qq) = rhs {
                            let lb = self.leaf(a);
                            let la = self.leaf(b);
                            out.push(vec![(lb, pp), (la, qq)]);
                        }
                    }
                    Op::Over => {
                        // B / A |- P ./. X  <=  X |- A, B |- P
                        if let S::Node(Op::Over, pp, xx) = rhs {
                            let ra = self.leaf(b);
                            let lb = self.leaf(a);
                            out.push(vec![(xx, ra), (lb, pp)]);
                        }
                    }
                    Op::Under => {
                        // A \ B |- X .\. P  <=  X |- A, B |- P
                        if let S::Node(Op::Under, xx, pp) = rhs {
                            let ra = self.leaf(a);
                            let lb = self.leaf(b);
                            out.push(vec![(xx, ra), (lb, pp)]);
                        }
                    }
                }
            }
        }

        // Logical rules, right side formula.
        if let S::Leaf(f) = rhs {
            if let F::Bin(op, a, b) = self.fs[f as usize] {
                match op {
                    Op::Plus | Op::Over | Op::Under => {
                        let la = self.leaf(a);
                        let lb = self.leaf(b);
                        let r = self.node(op, la, lb);
                        out.push(vec![(x, r)]);
                    }
                    Op::Tensor => {
                        // X .*. Y |- A * B  <=  X |- A, Y |- B
                        if let S::Node(Op::Tensor, xx, yy) = lhs {
                            let ra = self.leaf(a);
                            let rb = self.leaf(b);
                            out.push(vec![(xx, ra), (yy, rb)]);
                        }
                    }
                    Op::LDiff => {
                        // P .(\). X |- A (\) B  <=  X |- B, A |- P
                        if let S::Node(Op::LDiff, pp, xx) = lhs {
                            let rb = self.leaf(b);
                            let la = self.leaf(a);
                            out.push(vec![(xx, rb), (la, pp)]);
                        }
                    }
                    Op::RDiff => {
                        // X .(/). P |- B (/) A  <=  X |- B, A |- P
                        if let S::Node(Op::RDiff, xx, pp) = lhs {
                            let rb = self.leaf(a);
                            let la = self.leaf(b);
                            out.push(vec![(xx, rb), (la, pp)]);
                        }
                    }
                }
            }
        }
        out
    }

    fn solve(&mut self, goal: Seq) -> Option<u32> {
        if let Some(&h) = self.settled.get(&goal) {
            return h;
        }
        // Backward-reachable region not yet settled.
        let mut index: HashMap<Seq, usize> = HashMap::new();
        let mut seqs: Vec<Seq> = vec![goal];
        let mut rules: Vec<Vec<Vec<Seq>>> = Vec::new();
        index.insert(goal, 0);
        let mut head = 0;
        while head < seqs.len() {
            let cur = seqs[head];
            let inst = self.backward(cur);
            for prem in inst.iter().flatten() {
                if !self.settled.contains_key(prem) && !index.contains_key(prem) {
                    index.insert(*prem, seqs.len());
                    seqs.push(*prem);
                }
            }
            rules.push(inst);
            head += 1;
        }
        let mut height: Vec<Option<u32>> = vec![None; seqs.len()];
        loop {
            let mut changed = false;
            for i in 0..seqs.len() {
                for inst in &rules[i] {
                    let mut h = 0u32;
                    let mut ok = true;
                    for prem in inst {
                        let ph = match index.get(prem) {
                            Some(&k) => height[k],
                            None => self.settled[prem],
                        };
                        match ph {
                            Some(v) => h = h.max(v),
                            None => {
                                ok = false;
                                break;
                            }
                        }
                    }
                    if !ok {
                        continue;
                    }
                    let cand = if inst.is_empty() { 0 } else { h + 1 };
                    if height[i].is_none_or(|cur| cand < cur) {
                        height[i] = Some(cand);
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        for (i, s) in seqs.iter().enumerate() {
            self.settled.insert(*s, height[i]);
        }
        height[0]
    }
}

/// All formulas over the given atoms with at most `max_conn` connectives,
/// ordered by size.
pub fn formulas_up_to(atoms: &[&str], max_conn: usize) -> Vec<Formula> {
    let mut by_size: Vec<Vec<Formula>> = vec![atoms.iter().map(|a| Formula::atom(a).unwrap()).collect()];
    for k in 1..=max_conn {
        let mut level = Vec::new();
        for left in 0..k {
            let right = k - 1 - left;
            for c in Connective::ALL {
                for l in &by_size[left] {
                    for r in &by_size[right] {
                        level.push(Formula::binary(c, l.clone(), r.clone()));
                    }
                }
            }
        }
        by_size.push(level);
    }
    by_size.into_iter().flatten().collect()
}
