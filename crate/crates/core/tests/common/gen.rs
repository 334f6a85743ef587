//! Random formulas, structures and sequents for property tests.

use lg_core::{Connective, Formula, Polarity, Sequent, Structure};
use proptest::prelude::*;
use proptest::sample::select;

pub const ATOMS: &[&str] = &["a", "b", "p1"];

pub fn formula(depth: u32) -> BoxedStrategy<Formula> {
    let leaf = select(ATOMS).prop_map(|a| Formula::atom(a).unwrap());
    leaf.prop_recursive(depth, 32, 2, |inner| {
        (select(Connective::ALL.to_vec()), inner.clone(), inner).prop_map(|(c, l, r)| Formula::binary(c, l, r))
    })
    .boxed()
}

pub fn structure(pol: Polarity, depth: u32, formula_depth: u32) -> BoxedStrategy<Structure> {
    let leaf = formula(formula_depth).prop_map(move |f| Structure::Leaf(f, pol)).boxed();
    if depth == 0 {
        return leaf;
    }
    let conns: Vec<Connective> = Connective::ALL.into_iter().filter(|c| c.structural_polarity() == pol).collect();
    let node = select(conns)
        .prop_flat_map(move |c| {
            let (pl, pr) = c.operand_polarities(pol);
            (structure(pl, depth - 1, formula_depth), structure(pr, depth - 1, formula_depth))
                .prop_map(move |(l, r)| Structure::node(c, l, r))
        })
        .boxed();
    prop_oneof![2 => leaf, 3 => node].boxed()
}

pub fn sequent(depth: u32, formula_depth: u32) -> BoxedStrategy<Sequent> {
    (structure(Polarity::Input, depth, formula_depth), structure(Polarity::Output, depth, formula_depth))
        .prop_map(|(l, r)| Sequent::new(l, r).expect("generated with matching polarities"))
        .boxed()
}

/// Small formula sequents `A |- B`, biased toward sharing atoms.
pub fn small_goal() -> BoxedStrategy<Sequent> {
    let f = || {
        select(&["a", "b"][..]).prop_map(|a| Formula::atom(a).unwrap()).prop_recursive(2, 6, 2, |inner| {
            (select(Connective::ALL.to_vec()), inner.clone(), inner).prop_map(|(c, l, r)| Formula::binary(c, l, r))
        })
    };
    (f(), f()).prop_map(|(a, b)| Sequent::formulas(a, b)).boxed()
}
