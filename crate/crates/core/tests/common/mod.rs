#![allow(dead_code)]

use std::collections::BTreeSet;

use elp_core::interp::Interpretation;
use elp_core::program::Term;
use elp_core::semantics::{is_model, reduct};
use elp_core::{AtomId, Constant, Literal, Negation, ObjLiteral, Program, Rule, SubjLiteral, SymbolTable};
use proptest::prelude::*;

pub const NAMES: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

/// Which constructs a random program may contain.
#[derive(Clone, Copy, Debug)]
pub struct Shape {
    pub atoms: usize,
    pub rules: usize,
    pub body: usize,
    pub subjective: bool,
    pub inner_neg: bool,
    pub constants: bool,
    pub disjunction: bool,
    pub choice: bool,
}

impl Shape {
    pub fn objective(atoms: usize, rules: usize) -> Self {
        Self { atoms, rules, body: 3, subjective: false, inner_neg: false, constants: false, disjunction: true, choice: true }
    }

    /// Normal-form epistemic programs.
    pub fn normal(atoms: usize, rules: usize) -> Self {
        Self { subjective: true, ..Self::objective(atoms, rules) }
    }

    /// Epistemic programs with negation under `K`.
    pub fn general(atoms: usize, rules: usize) -> Self {
        Self { inner_neg: true, ..Self::normal(atoms, rules) }
    }

    pub fn with_constants(self) -> Self {
        Self { constants: true, ..self }
    }
}

#[derive(Clone, Copy, Debug)]
pub enum RawTerm {
    Atom(usize),
    Const(bool),
}

#[derive(Clone, Copy, Debug)]
pub enum RawLit {
    Obj(RawTerm, u8),
    Subj(RawTerm, u8, u8),
}

#[derive(Clone, Debug)]
pub struct RawRule {
    pub head: Vec<usize>,
    pub choice: bool,
    pub body: Vec<RawLit>,
}

fn neg(d: u8) -> Negation {
    Negation::from_depth(d).unwrap()
}

fn term(shape: Shape) -> BoxedStrategy<RawTerm> {
    let atom = (0..shape.atoms).prop_map(RawTerm::Atom);
    if shape.constants {
        prop_oneof![6 => atom, 1 => any::<bool>().prop_map(RawTerm::Const)].boxed()
    } else {
        atom.boxed()
    }
}

fn literal(shape: Shape) -> BoxedStrategy<RawLit> {
    let obj = (term(shape), 0..3u8).prop_map(|(t, d)| RawLit::Obj(t, d));
    if !shape.subjective {
        return obj.boxed();
    }
    let inner = if shape.inner_neg { (0..3u8).boxed() } else { Just(0u8).boxed() };
    let subj = (term(shape), inner, 0..3u8).prop_map(|(t, i, o)| RawLit::Subj(t, i, o));
    prop_oneof![2 => obj, 1 => subj].boxed()
}

fn rule(shape: Shape) -> impl Strategy<Value = RawRule> {
    let width = if shape.disjunction { 2 } else { 1 };
    (
        proptest::collection::vec(0..shape.atoms, 0..=width),
        any::<bool>(),
        proptest::collection::vec(literal(shape), 0..=shape.body),
    )
        .prop_map(move |(head, choice, body)| RawRule { choice: shape.choice && choice && head.len() == 1, head, body })
}

pub fn raw_program(shape: Shape) -> impl Strategy<Value = Vec<RawRule>> {
    proptest::collection::vec(rule(shape), 0..=shape.rules)
}

pub fn program(shape: Shape) -> impl Strategy<Value = Program> {
    raw_program(shape).prop_map(move |rules| build(shape.atoms, &rules))
}

pub fn build(atoms: usize, rules: &[RawRule]) -> Program {
    let mut t = SymbolTable::new();
    let ids: Vec<AtomId> = NAMES[..atoms].iter().map(|n| t.user(n).unwrap()).collect();
    let term = |rt: RawTerm, d: u8| match rt {
        RawTerm::Atom(i) => ObjLiteral { term: Term::Atom(ids[i]), neg: neg(d) },
        RawTerm::Const(c) => ObjLiteral::constant(if c { Constant::Top } else { Constant::Bot }, neg(d)),
    };
    let rules = rules
        .iter()
        .map(|r| {
            let body: Vec<Literal> = r
                .body
                .iter()
                .map(|l| match *l {
                    RawLit::Obj(t, d) => term(t, d).into(),
                    RawLit::Subj(t, i, o) => SubjLiteral::new(term(t, i), neg(o)).into(),
                })
                .collect();
            let mut head = Vec::new();
            for &h in &r.head {
                if !head.contains(&ids[h]) {
                    head.push(ids[h]);
                }
            }
            if r.choice {
                Rule::choice(head[0], body)
            } else {
                Rule::new(head, body)
            }
        })
        .collect();
    Program::with_rules(t, rules)
}

/// Every subset of `atoms`.
pub fn subsets(atoms: &BTreeSet<AtomId>) -> Vec<Interpretation> {
    let v: Vec<AtomId> = atoms.iter().copied().collect();
    (0..1usize << v.len())
        .map(|m| v.iter().enumerate().filter(|(j, _)| m & (1 << j) != 0).map(|(_, a)| *a).collect())
        .collect()
}

/// Stable models by checking every subset of `At(Π)` against its reduct.
pub fn brute_force_stable_models(p: &Program) -> BTreeSet<Interpretation> {
    let all = subsets(&p.atoms());
    all.iter()
        .filter(|i| {
            let red = reduct(p, i).unwrap();
            is_model(i, &red).unwrap()
                && !all.iter().any(|j| j.is_subset(i) && j != *i && is_model(j, &red).unwrap())
        })
        .cloned()
        .collect()
}
