//! Literals, rules and programs.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::atom::{AtomId, SymbolTable};

/// Number of default negations in front of a literal or subjective atom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum Negation {
    #[default]
    None,
    Once,
    Twice,
}

impl Negation {
    pub fn depth(self) -> u8 {
        match self {
            Negation::None => 0,
            Negation::Once => 1,
            Negation::Twice => 2,
        }
    }

    pub fn from_depth(depth: u8) -> Option<Self> {
        match depth {
            0 => Some(Negation::None),
            1 => Some(Negation::Once),
            2 => Some(Negation::Twice),
            _ => None,
        }
    }

    /// Applies this prefix to a truth value.
    pub fn apply(self, value: bool) -> bool {
        match self {
            Negation::Once => !value,
            Negation::None | Negation::Twice => value,
        }
    }

    pub fn is_negated(self) -> bool {
        self != Negation::None
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Constant {
    Top,
    Bot,
}

impl Constant {
    pub fn value(self) -> bool {
        self == Constant::Top
    }
}

/// What an extended objective literal is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Atom(AtomId),
    Const(Constant),
}

/// Extended objective literal: an atom or truth constant under zero, one or
/// two negations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ObjLiteral {
    pub term: Term,
    pub neg: Negation,
}

impl ObjLiteral {
    pub fn atom(a: AtomId) -> Self {
        Self { term: Term::Atom(a), neg: Negation::None }
    }

    pub fn not(a: AtomId) -> Self {
        Self { term: Term::Atom(a), neg: Negation::Once }
    }

    pub fn not_not(a: AtomId) -> Self {
        Self { term: Term::Atom(a), neg: Negation::Twice }
    }

    pub fn constant(c: Constant, neg: Negation) -> Self {
        Self { term: Term::Const(c), neg }
    }

    pub fn as_atom(&self) -> Option<AtomId> {
        match self.term {
            Term::Atom(a) => Some(a),
            Term::Const(_) => None,
        }
    }

    /// Truth value when the literal is over a constant.
    pub fn constant_value(&self) -> Option<bool> {
        match self.term {
            Term::Const(c) => Some(self.neg.apply(c.value())),
            Term::Atom(_) => None,
        }
    }
}

/// `K l`, possibly under outer negations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubjLiteral {
    pub inner: ObjLiteral,
    pub neg: Negation,
}

impl SubjLiteral {
    pub fn new(inner: ObjLiteral, neg: Negation) -> Self {
        Self { inner, neg }
    }

    /// `K a` with `outer` negations in front.
    pub fn k(a: AtomId, outer: Negation) -> Self {
        Self { inner: ObjLiteral::atom(a), neg: outer }
    }

    /// True when the literal is `K a`, `¬K a` or `¬¬K a` for an atom `a`.
    pub fn is_normal(&self) -> bool {
        self.inner.neg == Negation::None && self.inner.as_atom().is_some()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Literal {
    Obj(ObjLiteral),
    Subj(SubjLiteral),
}

impl Literal {
    pub fn atom(&self) -> Option<AtomId> {
        match self {
            Literal::Obj(l) => l.as_atom(),
            Literal::Subj(s) => s.inner.as_atom(),
        }
    }
}

impl From<ObjLiteral> for Literal {
    fn from(l: ObjLiteral) -> Self {
        Literal::Obj(l)
    }
}

impl From<SubjLiteral> for Literal {
    fn from(l: SubjLiteral) -> Self {
        Literal::Subj(l)
    }
}

/// `a1 ∨ … ∨ an ← L1, …, Lm`. An empty head is a constraint.
///
/// A choice rule `{a} ← body` is stored desugared, as `a ← body, ¬¬a`, with
/// `choice` set so it can be printed back in its short form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rule {
    pub head: Vec<AtomId>,
    pub body: Vec<Literal>,
    pub choice: bool,
}

impl Rule {
    pub fn new(head: Vec<AtomId>, body: Vec<Literal>) -> Self {
        Self { head, body, choice: false }
    }

    pub fn fact(a: AtomId) -> Self {
        Self::new(alloc::vec![a], Vec::new())
    }

    pub fn constraint(body: Vec<Literal>) -> Self {
        Self::new(Vec::new(), body)
    }

    /// `{a} ← body`, desugared to `a ← body, ¬¬a`.
    pub fn choice(a: AtomId, mut body: Vec<Literal>) -> Self {
        body.push(ObjLiteral::not_not(a).into());
        Self { head: alloc::vec![a], body, choice: true }
    }

    pub fn is_constraint(&self) -> bool {
        self.head.is_empty()
    }

    pub fn is_objective(&self) -> bool {
        self.body.iter().all(|l| matches!(l, Literal::Obj(_)))
    }

    /// Body of a choice rule without the trailing `¬¬a`.
    pub fn choice_body(&self) -> &[Literal] {
        if self.choice {
            &self.body[..self.body.len() - 1]
        } else {
            &self.body
        }
    }

    pub fn subjective(&self) -> impl Iterator<Item = &SubjLiteral> + '_ {
        self.body.iter().filter_map(|l| match l {
            Literal::Subj(s) => Some(s),
            Literal::Obj(_) => None,
        })
    }

    pub fn objective(&self) -> impl Iterator<Item = &ObjLiteral> + '_ {
        self.body.iter().filter_map(|l| match l {
            Literal::Obj(o) => Some(o),
            Literal::Subj(_) => None,
        })
    }

    fn size(&self) -> usize {
        self.head.len() + self.body.len()
    }
}

/// An ordered list of rules together with the symbol table their atoms live
/// in.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Program {
    symbols: SymbolTable,
    rules: Vec<Rule>,
}

impl Program {
    pub fn new(symbols: SymbolTable) -> Self {
        Self { symbols, rules: Vec::new() }
    }

    pub fn with_rules(symbols: SymbolTable, rules: Vec<Rule>) -> Self {
        Self { symbols, rules }
    }

    pub fn symbols(&self) -> &SymbolTable {
        &self.symbols
    }

    pub fn symbols_mut(&mut self) -> &mut SymbolTable {
        &mut self.symbols
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn push(&mut self, rule: Rule) {
        self.rules.push(rule);
    }

    pub fn extend(&mut self, rules: impl IntoIterator<Item = Rule>) {
        self.rules.extend(rules);
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn into_parts(self) -> (SymbolTable, Vec<Rule>) {
        (self.symbols, self.rules)
    }

    /// A program over the same symbols with different rules.
    pub fn with_same_symbols(&self, rules: Vec<Rule>) -> Self {
        Self { symbols: self.symbols.clone(), rules }
    }

    /// `At(Π)`: every atom occurring in a rule, including atoms under `K`.
    pub fn atoms(&self) -> BTreeSet<AtomId> {
        let mut out = BTreeSet::new();
        for r in &self.rules {
            out.extend(r.head.iter().copied());
            out.extend(r.body.iter().filter_map(Literal::atom));
        }
        out
    }

    /// Atoms of `At(Π)` that are user atoms.
    pub fn user_atoms(&self) -> BTreeSet<AtomId> {
        self.atoms().into_iter().filter(|&a| self.symbols.is_user(a)).collect()
    }

    pub fn is_objective(&self) -> bool {
        self.rules.iter().all(Rule::is_objective)
    }

    /// No negation under `K` and no truth constants anywhere.
    pub fn is_normal_form(&self) -> bool {
        self.rules.iter().all(|r| {
            r.body.iter().all(|l| match l {
                Literal::Obj(o) => o.as_atom().is_some(),
                Literal::Subj(s) => s.is_normal(),
            })
        })
    }

    pub fn has_constants(&self) -> bool {
        self.rules.iter().any(|r| {
            r.body.iter().any(|l| match l {
                Literal::Obj(o) => o.as_atom().is_none(),
                Literal::Subj(s) => s.inner.as_atom().is_none(),
            })
        })
    }

    /// Atoms occurring as `K a` (at any outer negation depth).
    pub fn k_atoms(&self) -> BTreeSet<AtomId> {
        self.rules
            .iter()
            .flat_map(Rule::subjective)
            .filter_map(|s| s.inner.as_atom())
            .collect()
    }

    /// Sum over rules of head length plus body length.
    pub fn size(&self) -> usize {
        self.rules.iter().map(Rule::size).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atoms_include_subjective_occurrences() {
        let mut t = SymbolTable::new();
        let a = t.user("a").unwrap();
        let b = t.user("b").unwrap();
        let p = Program::with_rules(
            t,
            alloc::vec![Rule::new(alloc::vec![b], alloc::vec![SubjLiteral::k(a, Negation::None).into()])],
        );
        assert_eq!(p.atoms(), [a, b].into_iter().collect());
    }

    #[test]
    fn empty_program_has_no_atoms() {
        assert!(Program::default().atoms().is_empty());
    }

    #[test]
    fn constraint_head_contributes_nothing() {
        let mut t = SymbolTable::new();
        let g = t.user("g").unwrap();
        let _unused = t.user("h").unwrap();
        let p = Program::with_rules(
            t,
            alloc::vec![Rule::constraint(alloc::vec![SubjLiteral::k(g, Negation::None).into()])],
        );
        assert_eq!(p.atoms(), [g].into_iter().collect());
    }

    #[test]
    fn choice_rules_append_double_negation() {
        let mut t = SymbolTable::new();
        let a = t.user("a").unwrap();
        let b = t.user("b").unwrap();
        let r = Rule::choice(a, alloc::vec![ObjLiteral::atom(b).into()]);
        assert_eq!(r.head, [a]);
        assert_eq!(r.body.last(), Some(&Literal::Obj(ObjLiteral::not_not(a))));
        assert_eq!(r.choice_body(), &[Literal::Obj(ObjLiteral::atom(b))]);
    }

    #[test]
    fn negation_prefixes() {
        assert!(Negation::None.apply(true));
        assert!(!Negation::Once.apply(true));
        assert!(Negation::Twice.apply(true));
        assert_eq!(Negation::from_depth(3), None);
    }
}
