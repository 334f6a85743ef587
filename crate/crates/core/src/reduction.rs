//! CNF input and the encoding of a CNF formula as an LG sequent.
//!
//! Clause `i` owns the atom `p<i>`. For variable `j` and truth value `t`,
//! the chain `E_j(t)` has one factor per clause: the difference type
//! `p_i (/) (p_i (\) p_i)` where clause `i` is satisfied by `x_j = t`, and
//! plain `p_i` elsewhere. The two chains of a variable are combined in a
//! meet type, so a derivation of the whole sequent must pick one of them.

use std::fmt;

use crate::term::{Atom, Formula, Sequent};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Literal {
    /// 1-based variable index.
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    /// Whether the literal holds when its variable has value `t`.
    pub fn satisfied_by(self, t: bool) -> bool {
        self.positive == t
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "{}", self.var)
        } else {
            write!(f, "-{}", self.var)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Clause {
    pub literals: Vec<Literal>,
}

impl Clause {
    pub fn contains(&self, var: usize, t: bool) -> bool {
        self.literals.iter().any(|l| l.var == var && l.positive == t)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cnf {
    num_vars: usize,
    clauses: Vec<Clause>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CnfError {
    #[error("a CNF needs at least one variable")]
    NoVariables,
    #[error("a CNF needs at least one clause")]
    NoClauses,
    #[error("clause {clause} is empty")]
    EmptyClause { clause: usize },
    #[error("clause {clause} mentions variable {var}, outside 1..={num_vars}")]
    VarOutOfRange { clause: usize, var: usize, num_vars: usize },
}

impl Cnf {
    /// Clauses are 1-based when reported in errors.
    pub fn new(num_vars: usize, clauses: Vec<Clause>) -> Result<Cnf, CnfError> {
        if num_vars == 0 {
            return Err(CnfError::NoVariables);
        }
        if clauses.is_empty() {
            return Err(CnfError::NoClauses);
        }
        for (i, c) in clauses.iter().enumerate() {
            if c.literals.is_empty() {
                return Err(CnfError::EmptyClause { clause: i + 1 });
            }
            if let Some(l) = c.literals.iter().find(|l| l.var == 0 || l.var > num_vars) {
                return Err(CnfError::VarOutOfRange { clause: i + 1, var: l.var, num_vars });
            }
        }
        Ok(Cnf { num_vars, clauses })
    }

    /// Builds from DIMACS-style signed integers, one vector per clause.
    pub fn from_ints(num_vars: usize, clauses: &[&[i64]]) -> Result<Cnf, CnfError> {
        let clauses = clauses
            .iter()
            .map(|c| Clause {
                literals: c.iter().map(|&x| Literal { var: x.unsigned_abs() as usize, positive: x > 0 }).collect(),
            })
            .collect();
        Cnf::new(num_vars, clauses)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    /// Clause `i`, 1-based.
    pub fn clause(&self, i: usize) -> &Clause {
        &self.clauses[i - 1]
    }

    /// `values[j-1]` is the value of variable `j`.
    pub fn satisfied_by(&self, values: &[bool]) -> bool {
        self.clauses.iter().all(|c| c.literals.iter().any(|l| l.satisfied_by(values[l.var - 1])))
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            for l in &c.literals {
                out.push_str(&l.to_string());
                out.push(' ');
            }
            out.push_str("0\n");
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DimacsError {
    #[error("line {line}: malformed header, expected `p cnf <vars> <clauses>`")]
    Header { line: usize },
    #[error("missing `p cnf` header")]
    MissingHeader,
    #[error("line {line}: `{token}` is not an integer")]
    Token { line: usize, token: String },
    #[error("header declares {declared} clauses but {found} were given")]
    ClauseCount { declared: usize, found: usize },
    #[error(transparent)]
    Cnf(#[from] CnfError),
}

/// Parses DIMACS CNF. Clauses may span lines; a final clause without its
/// terminating `0` is accepted. A `%` line ends the input.
pub fn parse_dimacs(text: &str) -> Result<Cnf, DimacsError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        if line.starts_with('p') {
            let parts: Vec<&str> = line.split_whitespace().collect();
            if header.is_some() || parts.len() != 4 || parts[0] != "p" || parts[1] != "cnf" {
                return Err(DimacsError::Header { line: line_no });
            }
            let m = parts[2].parse().map_err(|_| DimacsError::Header { line: line_no })?;
            let n = parts[3].parse().map_err(|_| DimacsError::Header { line: line_no })?;
            header = Some((m, n));
            continue;
        }
        let Some((m, _)) = header else { return Err(DimacsError::MissingHeader) };
        for tok in line.split_whitespace() {
            let x: i64 = tok.parse().map_err(|_| DimacsError::Token { line: line_no, token: tok.to_string() })?;
            if x == 0 {
                if current.is_empty() {
                    return Err(CnfError::EmptyClause { clause: clauses.len() + 1 }.into());
                }
                clauses.push(Clause { literals: std::mem::take(&mut current) });
            } else {
                let var = x.unsigned_abs() as usize;
                if var > m {
                    return Err(CnfError::VarOutOfRange { clause: clauses.len() + 1, var, num_vars: m }.into());
                }
                current.push(Literal { var, positive: x > 0 });
            }
        }
    }
    let (m, n) = header.ok_or(DimacsError::MissingHeader)?;
    if !current.is_empty() {
        clauses.push(Clause { literals: current });
    }
    if clauses.len() != n {
        return Err(DimacsError::ClauseCount { declared: n, found: clauses.len() });
    }
    Ok(Cnf::new(m, clauses)?)
}

/// The atom `p<i>` of clause `i`.
pub fn clause_atom(i: usize) -> Formula {
    Formula::Atom(Atom::new(&format!("p{i}")).expect("generated atom names are valid"))
}

/// `p (/) (p (\) p)`, derivable to `p` and used to mark a satisfied clause.
pub fn difference_type(p: &Formula) -> Formula {
    Formula::rdiff(p.clone(), Formula::ldiff(p.clone(), p.clone()))
}

/// Right-nested product `f1 * (f2 * (... * fk))`; a single factor stands alone.
pub fn right_product(factors: Vec<Formula>) -> Formula {
    let mut it = factors.into_iter().rev();
    let last = it.next().expect("at least one factor");
    it.fold(last, |acc, f| Formula::prod(f, acc))
}

/// Factor `i` of the chain `E_j(t)`.
pub fn e_atom(cnf: &Cnf, i: usize, j: usize, t: bool) -> Formula {
    let p = clause_atom(i);
    if cnf.clause(i).contains(j, t) {
        difference_type(&p)
    } else {
        p
    }
}

/// The chain `E_j(t)` over all clauses.
pub fn e_formula(cnf: &Cnf, j: usize, t: bool) -> Formula {
    right_product((1..=cnf.num_clauses()).map(|i| e_atom(cnf, i, j, t)).collect())
}

/// The join of `E_j(0)` and `E_j(1)`: the plain chain `p1 * (p2 * ...)`.
/// It does not depend on `j`.
pub fn h_formula(cnf: &Cnf, _j: usize) -> Formula {
    right_product((1..=cnf.num_clauses()).map(clause_atom).collect())
}

/// `G_0` is the product of all `H_j`; `G_i = G_{i-1} (/) (p_i (\) p_i)`.
pub fn g_formula(cnf: &Cnf, i: usize) -> Formula {
    assert!(i <= cnf.num_clauses(), "G index {i} exceeds clause count");
    let base = right_product((1..=cnf.num_vars()).map(|j| h_formula(cnf, j)).collect());
    (1..=i).fold(base, |acc, k| {
        let p = clause_atom(k);
        Formula::rdiff(acc, Formula::ldiff(p.clone(), p))
    })
}

/// `(a / ((c / c) \ c)) * ((c / c) \ b)`: derivable to `a` or to `b` in any
/// context where `c` is a common upper bound of the two.
pub fn meet_type(a: &Formula, b: &Formula, c: &Formula) -> Formula {
    let cc = Formula::over(c.clone(), c.clone());
    Formula::prod(
        Formula::over(a.clone(), Formula::under(cc.clone(), c.clone())),
        Formula::under(cc, b.clone()),
    )
}

/// The meet of the two chains of variable `j`.
pub fn f_formula(cnf: &Cnf, j: usize) -> Formula {
    meet_type(&e_formula(cnf, j, true), &e_formula(cnf, j, false), &h_formula(cnf, j))
}

/// `F_1 * (F_2 * ...) |- G_n`: derivable iff the CNF is satisfiable.
pub fn reduce(cnf: &Cnf) -> Sequent {
    let lhs = right_product((1..=cnf.num_vars()).map(|j| f_formula(cnf, j)).collect());
    Sequent::formulas(lhs, g_formula(cnf, cnf.num_clauses()))
}

/// Connective count of `reduce(cnf)`: `8mn + 2n + 2K - 2`, where `K` is the
/// number of distinct literals summed over clauses.
pub fn predicted_length(cnf: &Cnf) -> usize {
    let m = cnf.num_vars();
    let n = cnf.num_clauses();
    let k: usize = cnf
        .clauses()
        .iter()
        .map(|c| {
            let mut seen: Vec<Literal> = c.literals.clone();
            seen.sort_by_key(|l| (l.var, l.positive));
            seen.dedup();
            seen.len()
        })
        .sum();
    8 * m * n + 2 * n + 2 * k - 2
}
