//! The propagation benchmark family.
//!
//! For `n ≥ 1` the program has `3n + 1` rules, already in normal form:
//!
//! ```text
//! a_i     :- not K not1_a_i.    (i = 1..n)
//! not1_a_i :- not a_i.          (i = 1..n)
//! g       :- a_i.               (i = 1..n)
//! :- K g.
//! ```
//!
//! Its only worldview is `{∅}` over `{a_1, …, a_n, g}`. `G0` has `2^n` stable
//! models while `G1` has exactly one.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::atom::{Origin, SymbolTable};
use crate::program::{Negation, ObjLiteral, Program, Rule, SubjLiteral};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("the propagation family is defined for n >= 1")]
pub struct EmptyFamily;

pub fn propagation_family(n: usize) -> Result<Program, EmptyFamily> {
    if n == 0 {
        return Err(EmptyFamily);
    }
    let mut t = SymbolTable::new();
    let mut pairs = Vec::with_capacity(n);
    for i in 1..=n {
        let a = t.user(&format!("a{i}")).expect("plain atom name");
        let not_a = t.derived(Origin::NotOnce(a)).expect("fresh proxy");
        pairs.push((a, not_a));
    }
    let g = t.user("g").expect("plain atom name");

    let mut rules = Vec::with_capacity(3 * n + 1);
    rules.extend(
        pairs
            .iter()
            .map(|&(a, not_a)| Rule::new(vec![a], vec![SubjLiteral::k(not_a, Negation::Once).into()])),
    );
    rules.extend(pairs.iter().map(|&(a, not_a)| Rule::new(vec![not_a], vec![ObjLiteral::not(a).into()])));
    rules.extend(pairs.iter().map(|&(a, _)| Rule::new(vec![g], vec![ObjLiteral::atom(a).into()])));
    rules.push(Rule::constraint(vec![SubjLiteral::k(g, Negation::None).into()]));
    Ok(Program::with_rules(t, rules))
}
