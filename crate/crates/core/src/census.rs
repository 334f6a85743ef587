//! Connective counts of a sequent.

use crate::term::{Family, Formula, Sequent, Structure};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ConnectiveCensus {
    /// Formula connectives, all six kinds.
    pub formula_total: usize,
    pub structural_total: usize,
    /// Formula occurrences of `*`, `/`, `\`.
    pub input_family: usize,
    /// Formula occurrences of `(+)`, `(/)`, `(\)`.
    pub output_family: usize,
}

impl ConnectiveCensus {
    /// Sequent length: formula plus structural connectives.
    pub fn length(&self) -> usize {
        self.formula_total + self.structural_total
    }

    fn add_formula(&mut self, f: &Formula) {
        if let Formula::Binary(op, l, r) = f {
            self.formula_total += 1;
            match op.family() {
                Family::Product => self.input_family += 1,
                Family::Coproduct => self.output_family += 1,
            }
            self.add_formula(l);
            self.add_formula(r);
        }
    }

    fn add_structure(&mut self, s: &Structure) {
        match s {
            Structure::Leaf(f, _) => self.add_formula(f),
            Structure::Node(_, l, r) => {
                self.structural_total += 1;
                self.add_structure(l);
                self.add_structure(r);
            }
        }
    }
}

pub fn census(s: &Sequent) -> ConnectiveCensus {
    let mut c = ConnectiveCensus::default();
    c.add_structure(&s.lhs);
    c.add_structure(&s.rhs);
    c
}

pub fn structure_census(s: &Structure) -> ConnectiveCensus {
    let mut c = ConnectiveCensus::default();
    c.add_structure(s);
    c
}

pub fn formula_census(f: &Formula) -> ConnectiveCensus {
    let mut c = ConnectiveCensus::default();
    c.add_formula(f);
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_sequent;

    #[test]
    fn identity_has_no_connectives() {
        let c = census(&parse_sequent("p |- p").unwrap());
        assert_eq!(c, ConnectiveCensus::default());
        assert_eq!(c.length(), 0);
    }

    #[test]
    fn difference_type() {
        let c = census(&parse_sequent("(p1 (/) (p1 (\\) p1)) |- p1").unwrap());
        assert_eq!(c.formula_total, 2);
        assert_eq!(c.output_family, 2);
        assert_eq!(c.input_family, 0);
        assert_eq!(c.structural_total, 0);
    }

    #[test]
    fn mixed() {
        let c = census(&parse_sequent("(a / b) .*. c |- (a (+) b) ./. (c \\ d)").unwrap());
        assert_eq!(c.structural_total, 2);
        assert_eq!(c.formula_total, 3);
        assert_eq!(c.input_family, 2);
        assert_eq!(c.output_family, 1);
    }
}
