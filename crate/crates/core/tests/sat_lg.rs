mod common;

use common::corpus::{all_assignments, two_by_two, witness_corpus};
use lg_core::calculus::check;
use lg_core::reduction::{e_formula, f_formula, h_formula, parse_dimacs, predicted_length, reduce, Cnf};
use lg_core::witness::{brute_force_sat, build_witness, roundtrip, Assignment, VerdictKind};
use lg_core::{census, prove, Budgets, ProveOutcome, Sequent};

const TWO_CLAUSES: &str = "p cnf 2 2\n1 -2 0\n-1 -2 0\n";

fn proved(g: &Sequent) -> bool {
    prove(g, Budgets::for_goal(g)).is_proved()
}

/// Clause-by-clause evaluation, written independently of the library.
fn satisfies(cnf: &Cnf, values: &[bool]) -> bool {
    cnf.clauses().iter().all(|c| c.literals.iter().any(|l| if l.positive { values[l.var - 1] } else { !values[l.var - 1] }))
}

#[test]
fn joins_and_meets_are_derivable() {
    for cnf in [parse_dimacs(TWO_CLAUSES).unwrap(), Cnf::from_ints(2, &[&[1], &[-1, 2], &[2, -2]]).unwrap()] {
        for j in 1..=cnf.num_vars() {
            let h = h_formula(&cnf, j);
            let meet = f_formula(&cnf, j);
            for t in [true, false] {
                let e = e_formula(&cnf, j, t);
                assert!(proved(&Sequent::formulas(e.clone(), h.clone())), "join {j} {t}");
                assert!(proved(&Sequent::formulas(meet.clone(), e)), "meet {j} {t}");
            }
        }
    }
}

#[test]
fn encoding_is_deterministic_and_sized() {
    for cnf in witness_corpus() {
        let text = cnf.to_dimacs();
        assert_eq!(reduce(&parse_dimacs(&text).unwrap()).to_string(), reduce(&cnf).to_string());
        assert_eq!(census(&reduce(&cnf)).length(), predicted_length(&cnf));
    }
}

#[test]
fn enumeration_agrees_with_direct_evaluation() {
    for m in 1..=4usize {
        let cnf = Cnf::from_ints(m, &[&[1, -(m as i64)], &[-1], &[m as i64]]).unwrap();
        let first = all_assignments(m).into_iter().find(|v| satisfies(&cnf, v));
        assert_eq!(brute_force_sat(&cnf).unwrap().map(|a| a.0), first);
        for v in all_assignments(m) {
            assert_eq!(cnf.satisfied_by(&v), satisfies(&cnf, &v));
        }
    }
    for cnf in two_by_two().iter().chain(witness_corpus().iter()) {
        let first = all_assignments(cnf.num_vars()).into_iter().find(|v| satisfies(cnf, v));
        assert_eq!(brute_force_sat(cnf).unwrap().map(|a| a.0), first);
    }
}

#[test]
fn every_two_by_two_instance_is_consistent() {
    let corpus = two_by_two();
    assert_eq!(corpus.len(), 120);
    let mut negatives = 0;
    for cnf in &corpus {
        let v = roundtrip(cnf, None).unwrap();
        assert!(v.consistent(), "{}: {:?}", cnf.to_dimacs(), v.kind());
        negatives += usize::from(v.kind() == VerdictKind::BothNegative);
    }
    assert_eq!(negatives, 2);
}

#[test]
fn witnesses_for_every_satisfying_assignment() {
    for cnf in witness_corpus() {
        let goal = reduce(&cnf);
        let mut any = false;
        for values in all_assignments(cnf.num_vars()) {
            if !satisfies(&cnf, &values) {
                assert!(build_witness(&cnf, &Assignment(values)).is_err());
                continue;
            }
            any = true;
            let d = build_witness(&cnf, &Assignment(values)).unwrap();
            let r = check(&d, true);
            assert!(r.ok, "{}: {:?}", cnf.to_dimacs(), r.first_error);
            assert_eq!(d.conclusion, goal);
        }
        assert!(any);
        assert_ne!(prove(&goal, Budgets::for_goal(&goal)), ProveOutcome::Unprovable);
    }
}

#[test]
fn two_clause_skeleton() {
    let cnf = parse_dimacs(TWO_CLAUSES).unwrap();
    let d = build_witness(&cnf, &Assignment(vec![true, false])).unwrap();
    let mut rules = Vec::new();
    d.walk(&mut |n| rules.push(n.rule));
    use lg_core::RuleLabel as R;
    for r in [R::TensorL, R::Cut, R::RDiffR, R::TensorR, R::Ax, R::GrishinRDiffOver] {
        assert!(rules.contains(&r), "{r} missing");
    }
    // One per peeled clause, plus one per difference inside the identity
    // derivations of the selected chains E_1(1) and E_2(0).
    assert_eq!(rules.iter().filter(|r| **r == R::RDiffR).count(), 2 + 1 + 2);
}
