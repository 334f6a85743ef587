//! Formulas, polarized structures and sequents.
//!
//! Every binary node stores its operands in surface order, so `B \ A` is
//! `Binary(Under, B, A)` and `B (\) A` is `Binary(LDiff, B, A)`. Children are
//! reference counted; cloning a term is cheap and terms are `Send + Sync`.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// A primitive type such as `p1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Atom(Arc<str>);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid atom name `{0}`: expected [a-z][a-z0-9_]*")]
pub struct AtomError(pub String);

impl Atom {
    pub fn new(name: &str) -> Result<Self, AtomError> {
        if Self::is_valid_name(name) {
            Ok(Atom(Arc::from(name)))
        } else {
            Err(AtomError(name.to_string()))
        }
    }

    pub fn is_valid_name(name: &str) -> bool {
        let mut bytes = name.bytes();
        match bytes.next() {
            Some(b) if b.is_ascii_lowercase() => {}
            _ => return false,
        }
        bytes.all(|b| b.is_ascii_lowercase() || b.is_ascii_digit() || b == b'_')
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Which side of the turnstile a structure (or formula occurrence) lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Polarity {
    Input,
    Output,
}

impl Polarity {
    pub fn flip(self) -> Polarity {
        match self {
            Polarity::Input => Polarity::Output,
            Polarity::Output => Polarity::Input,
        }
    }
}

/// The six binary connectives. The same set is used for formula connectives
/// and for the structural connectives that mirror them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Connective {
    /// `A * B`
    Prod,
    /// `A / B`
    Over,
    /// `B \ A`
    Under,
    /// `A (+) B`
    Coprod,
    /// `A (/) B`
    RDiff,
    /// `B (\) A`
    LDiff,
}

/// Connective family: the residuated product family or the dual coproduct family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Product,
    Coproduct,
}

impl Connective {
    pub const ALL: [Connective; 6] = [
        Connective::Prod,
        Connective::Over,
        Connective::Under,
        Connective::Coprod,
        Connective::RDiff,
        Connective::LDiff,
    ];

    pub fn family(self) -> Family {
        match self {
            Connective::Prod | Connective::Over | Connective::Under => Family::Product,
            Connective::Coprod | Connective::RDiff | Connective::LDiff => Family::Coproduct,
        }
    }

    /// Polarity of a structure node built with this connective.
    pub fn structural_polarity(self) -> Polarity {
        match self {
            Connective::Prod | Connective::RDiff | Connective::LDiff => Polarity::Input,
            Connective::Coprod | Connective::Over | Connective::Under => Polarity::Output,
        }
    }

    /// Polarities of the two operands of a node of polarity `parent`.
    ///
    /// Holds for formula occurrences and structures alike: products keep the
    /// polarity, `/` and `(/)` flip their right operand, `\` and `(\)` their
    /// left operand.
    pub fn operand_polarities(self, parent: Polarity) -> (Polarity, Polarity) {
        match self {
            Connective::Prod | Connective::Coprod => (parent, parent),
            Connective::Over | Connective::RDiff => (parent, parent.flip()),
            Connective::Under | Connective::LDiff => (parent.flip(), parent),
        }
    }

    /// Token in the ASCII surface syntax.
    pub fn formula_token(self) -> &'static str {
        match self {
            Connective::Prod => "*",
            Connective::Over => "/",
            Connective::Under => "\\",
            Connective::Coprod => "(+)",
            Connective::RDiff => "(/)",
            Connective::LDiff => "(\\)",
        }
    }

    pub fn structural_token(self) -> &'static str {
        match self {
            Connective::Prod => ".*.",
            Connective::Over => "./.",
            Connective::Under => ".\\.",
            Connective::Coprod => ".(+).",
            Connective::RDiff => ".(/).",
            Connective::LDiff => ".(\\).",
        }
    }

    pub fn latex(self) -> &'static str {
        match self {
            Connective::Prod => "\\otimes",
            Connective::Over => "/",
            Connective::Under => "\\backslash",
            Connective::Coprod => "\\oplus",
            Connective::RDiff => "\\oslash",
            Connective::LDiff => "\\obslash",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom(Atom),
    Binary(Connective, Arc<Formula>, Arc<Formula>),
}

impl Formula {
    pub fn atom(name: &str) -> Result<Formula, AtomError> {
        Atom::new(name).map(Formula::Atom)
    }

    pub fn binary(op: Connective, left: Formula, right: Formula) -> Formula {
        Formula::Binary(op, Arc::new(left), Arc::new(right))
    }

    pub fn prod(left: Formula, right: Formula) -> Formula {
        Formula::binary(Connective::Prod, left, right)
    }
    pub fn over(left: Formula, right: Formula) -> Formula {
        Formula::binary(Connective::Over, left, right)
    }
    pub fn under(left: Formula, right: Formula) -> Formula {
        Formula::binary(Connective::Under, left, right)
    }
    pub fn coprod(left: Formula, right: Formula) -> Formula {
        Formula::binary(Connective::Coprod, left, right)
    }
    pub fn rdiff(left: Formula, right: Formula) -> Formula {
        Formula::binary(Connective::RDiff, left, right)
    }
    pub fn ldiff(left: Formula, right: Formula) -> Formula {
        Formula::binary(Connective::LDiff, left, right)
    }

    /// Number of connectives.
    pub fn size(&self) -> usize {
        match self {
            Formula::Atom(_) => 0,
            Formula::Binary(_, l, r) => 1 + l.size() + r.size(),
        }
    }

    pub fn main_connective(&self) -> Option<Connective> {
        match self {
            Formula::Atom(_) => None,
            Formula::Binary(op, _, _) => Some(*op),
        }
    }

    pub fn as_atom(&self) -> Option<&Atom> {
        match self {
            Formula::Atom(a) => Some(a),
            Formula::Binary(..) => None,
        }
    }

    /// Visits every atom occurrence with the polarity it has when the whole
    /// formula occurs with polarity `pol`.
    pub fn for_each_atom(&self, pol: Polarity, f: &mut impl FnMut(&Atom, Polarity)) {
        match self {
            Formula::Atom(a) => f(a, pol),
            Formula::Binary(op, l, r) => {
                let (pl, pr) = op.operand_polarities(pol);
                l.for_each_atom(pl, f);
                r.for_each_atom(pr, f);
            }
        }
    }
}

/// Child position inside a binary node.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// Polarized structure. Leaves carry their polarity explicitly; a node's
/// polarity follows from its connective.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Structure {
    Leaf(Formula, Polarity),
    Node(Connective, Arc<Structure>, Arc<Structure>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("polarity violation at {path}: {message}")]
pub struct PolarityError {
    pub path: String,
    pub message: String,
}

impl Structure {
    pub fn input(f: Formula) -> Structure {
        Structure::Leaf(f, Polarity::Input)
    }

    pub fn output(f: Formula) -> Structure {
        Structure::Leaf(f, Polarity::Output)
    }

    /// Builds a node without checking operand polarities; see [`Structure::validate`].
    pub fn node(op: Connective, left: Structure, right: Structure) -> Structure {
        Structure::Node(op, Arc::new(left), Arc::new(right))
    }

    pub fn polarity(&self) -> Polarity {
        match self {
            Structure::Leaf(_, p) => *p,
            Structure::Node(op, _, _) => op.structural_polarity(),
        }
    }

    pub fn as_formula(&self) -> Option<&Formula> {
        match self {
            Structure::Leaf(f, _) => Some(f),
            Structure::Node(..) => None,
        }
    }

    pub fn as_node(&self) -> Option<(Connective, &Structure, &Structure)> {
        match self {
            Structure::Leaf(..) => None,
            Structure::Node(op, l, r) => Some((*op, l, r)),
        }
    }

    /// Same shape with every leaf re-tagged to the polarity its position
    /// demands when the root has polarity `pol`.
    pub fn with_polarity(&self, pol: Polarity) -> Structure {
        match self {
            Structure::Leaf(f, _) => Structure::Leaf(f.clone(), pol),
            Structure::Node(op, l, r) => {
                let (pl, pr) = op.operand_polarities(op.structural_polarity());
                Structure::node(*op, l.with_polarity(pl), r.with_polarity(pr))
            }
        }
    }

    /// Checks the input/output grammar, expecting the root to have polarity `expected`.
    pub fn validate(&self, expected: Polarity) -> Result<(), PolarityError> {
        self.validate_at(expected, &mut Vec::new())
    }

    fn validate_at(&self, expected: Polarity, path: &mut Vec<Side>) -> Result<(), PolarityError> {
        match self {
            Structure::Leaf(f, p) => {
                if *p != expected {
                    return Err(PolarityError {
                        path: render_path(path),
                        message: format!("formula `{}` tagged {:?} in {:?} position", FormulaDisplay(f, false), p, expected),
                    });
                }
                Ok(())
            }
            Structure::Node(op, l, r) => {
                let own = op.structural_polarity();
                if own != expected {
                    return Err(PolarityError {
                        path: render_path(path),
                        message: format!(
                            "{} connective `{}` in {} position",
                            pol_word(own),
                            op.structural_token(),
                            pol_word(expected)
                        ),
                    });
                }
                let (pl, pr) = op.operand_polarities(own);
                path.push(Side::Left);
                l.validate_at(pl, path)?;
                path.pop();
                path.push(Side::Right);
                r.validate_at(pr, path)?;
                path.pop();
                Ok(())
            }
        }
    }

    pub fn structural_count(&self) -> usize {
        match self {
            Structure::Leaf(..) => 0,
            Structure::Node(_, l, r) => 1 + l.structural_count() + r.structural_count(),
        }
    }

    pub fn subterm(&self, path: &[Side]) -> Option<&Structure> {
        match path.split_first() {
            None => Some(self),
            Some((side, rest)) => match self {
                Structure::Leaf(..) => None,
                Structure::Node(_, l, r) => match side {
                    Side::Left => l.subterm(rest),
                    Side::Right => r.subterm(rest),
                },
            },
        }
    }

    /// Replaces the subterm at `path`. Panics if the path leaves the tree.
    pub fn replace(&self, path: &[Side], with: Structure) -> Structure {
        match path.split_first() {
            None => with,
            Some((side, rest)) => match self {
                Structure::Leaf(..) => panic!("path runs past a leaf"),
                Structure::Node(op, l, r) => match side {
                    Side::Left => Structure::Node(*op, Arc::new(l.replace(rest, with)), r.clone()),
                    Side::Right => Structure::Node(*op, l.clone(), Arc::new(r.replace(rest, with))),
                },
            },
        }
    }

    /// Leaves in left-to-right order with their paths.
    pub fn leaves(&self) -> Vec<(Vec<Side>, &Formula, Polarity)> {
        let mut out = Vec::new();
        self.collect_leaves(&mut Vec::new(), &mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, path: &mut Vec<Side>, out: &mut Vec<(Vec<Side>, &'a Formula, Polarity)>) {
        match self {
            Structure::Leaf(f, p) => out.push((path.clone(), f, *p)),
            Structure::Node(_, l, r) => {
                path.push(Side::Left);
                l.collect_leaves(path, out);
                path.pop();
                path.push(Side::Right);
                r.collect_leaves(path, out);
                path.pop();
            }
        }
    }
}

fn pol_word(p: Polarity) -> &'static str {
    match p {
        Polarity::Input => "input",
        Polarity::Output => "output",
    }
}

pub(crate) fn render_path(path: &[Side]) -> String {
    if path.is_empty() {
        return "root".to_string();
    }
    path.iter()
        .map(|s| match s {
            Side::Left => "L",
            Side::Right => "R",
        })
        .collect::<Vec<_>>()
        .join(".")
}

/// `X |- P` with `X` an input structure and `P` an output structure.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sequent {
    pub lhs: Structure,
    pub rhs: Structure,
}

impl Sequent {
    /// Validated constructor.
    pub fn new(lhs: Structure, rhs: Structure) -> Result<Sequent, PolarityError> {
        lhs.validate(Polarity::Input).map_err(|e| PolarityError { path: format!("lhs.{}", e.path), ..e })?;
        rhs.validate(Polarity::Output).map_err(|e| PolarityError { path: format!("rhs.{}", e.path), ..e })?;
        Ok(Sequent { lhs, rhs })
    }

    /// `A |- B` for two formulas.
    pub fn formulas(lhs: Formula, rhs: Formula) -> Sequent {
        Sequent { lhs: Structure::input(lhs), rhs: Structure::output(rhs) }
    }

    /// Constructor for callers that have established polarity by construction.
    pub(crate) fn raw(lhs: Structure, rhs: Structure) -> Sequent {
        let s = Sequent { lhs, rhs };
        debug_assert!(s.validate().is_ok(), "ill-polarized sequent {s}");
        s
    }

    pub fn validate(&self) -> Result<(), PolarityError> {
        Sequent::new(self.lhs.clone(), self.rhs.clone()).map(|_| ())
    }

    /// Number of formula plus structural connectives.
    pub fn length(&self) -> usize {
        crate::census::census(self).length()
    }

    /// Atom occurrence balance: every derivable sequent pairs each input
    /// occurrence of an atom with an output occurrence of the same atom.
    pub fn is_balanced(&self) -> bool {
        let mut counts: Vec<(Atom, i64)> = Vec::new();
        let mut tally = |a: &Atom, p: Polarity| {
            let d = if p == Polarity::Input { 1 } else { -1 };
            match counts.iter_mut().find(|(b, _)| b == a) {
                Some((_, c)) => *c += d,
                None => counts.push((a.clone(), d)),
            }
        };
        for side in [&self.lhs, &self.rhs] {
            for (_, f, p) in side.leaves() {
                f.for_each_atom(p, &mut tally);
            }
        }
        counts.iter().all(|(_, c)| *c == 0)
    }
}

pub(crate) struct FormulaDisplay<'a>(pub &'a Formula, pub bool);

impl fmt::Display for FormulaDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_formula(f, self.0, self.1)
    }
}

fn write_formula(out: &mut fmt::Formatter<'_>, f: &Formula, nested: bool) -> fmt::Result {
    match f {
        Formula::Atom(a) => out.write_str(a.name()),
        Formula::Binary(op, l, r) => {
            if nested {
                out.write_str("(")?;
            }
            write_formula(out, l, true)?;
            write!(out, " {} ", op.formula_token())?;
            write_formula(out, r, true)?;
            if nested {
                out.write_str(")")?;
            }
            Ok(())
        }
    }
}

fn write_structure(out: &mut fmt::Formatter<'_>, s: &Structure, nested: bool) -> fmt::Result {
    match s {
        Structure::Leaf(f, _) => write_formula(out, f, nested),
        Structure::Node(op, l, r) => {
            if nested {
                out.write_str("(")?;
            }
            write_structure(out, l, true)?;
            write!(out, " {} ", op.structural_token())?;
            write_structure(out, r, true)?;
            if nested {
                out.write_str(")")?;
            }
            Ok(())
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_formula(f, self, false)
    }
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_structure(f, self, false)
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_structure(f, &self.lhs, false)?;
        f.write_str(" |- ")?;
        write_structure(f, &self.rhs, false)
    }
}

/// Canonical text of a formula, structure or sequent.
pub fn render<T: fmt::Display + ?Sized>(x: &T) -> String {
    x.to_string()
}
