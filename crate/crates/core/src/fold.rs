//! Removal of the truth constants `⊤` and `⊥` from rule bodies.
//!
//! A body literal over a constant has a fixed value in every interpretation,
//! and `K` over a constant has a fixed value in every belief interpretation
//! (`K⊤` always holds, `K⊥` never does since belief interpretations are
//! non-empty). Rules with a false literal are dropped and true literals are
//! deleted.

use alloc::vec::Vec;

use crate::program::{Literal, Program, Rule};

/// Fixed truth value of a literal, if it does not depend on any atom.
pub fn constant_value(l: &Literal) -> Option<bool> {
    match l {
        Literal::Obj(o) => o.constant_value(),
        Literal::Subj(s) => s.inner.constant_value().map(|v| s.neg.apply(v)),
    }
}

fn fold_rule(rule: &Rule) -> Option<Rule> {
    let mut body = Vec::with_capacity(rule.body.len());
    for l in &rule.body {
        match constant_value(l) {
            Some(false) => return None,
            Some(true) => {}
            None => body.push(*l),
        }
    }
    Some(Rule { head: rule.head.clone(), body, choice: rule.choice })
}

/// Drops rules with a constantly false body literal and deletes constantly
/// true ones.
pub fn fold_constants(program: &Program) -> Program {
    let rules = program.rules().iter().filter_map(fold_rule).collect();
    program.with_same_symbols(rules)
}
