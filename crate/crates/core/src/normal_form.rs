//! Normal form: no negation in the scope of `K`.
//!
//! `K ¬a` becomes `K not1_a` with the defining rule `not1_a ← ¬a`, and
//! `K ¬¬a` becomes `K not2_a` with `not2_a ← ¬¬a`. Each defining rule is
//! added once per base atom, after the rewritten rules, in order of first
//! occurrence. Worldviews of the result correspond one-to-one to worldviews
//! of the input after projecting the new atoms away.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::atom::{AtomId, Origin, SymbolError};
use crate::interp::BeliefInterpretation;
use crate::program::{Literal, Negation, ObjLiteral, Program, Rule, SubjLiteral, Term};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalFormResult {
    pub program: Program,
    /// `not1_a` / `not2_a` mapped to `a`.
    pub introduced: BTreeMap<AtomId, AtomId>,
}

pub fn normalize(program: &Program) -> Result<NormalFormResult, SymbolError> {
    let mut symbols = program.symbols().clone();
    let mut introduced = BTreeMap::new();
    let mut defining = Vec::new();
    let mut rules = Vec::with_capacity(program.len());
    for r in program.rules() {
        let mut body = Vec::with_capacity(r.body.len());
        for l in &r.body {
            let rewritten = match l {
                Literal::Subj(s) => match (s.inner.term, s.inner.neg) {
                    (Term::Atom(a), neg @ (Negation::Once | Negation::Twice)) => {
                        let origin = if neg == Negation::Once { Origin::NotOnce(a) } else { Origin::NotTwice(a) };
                        let proxy = symbols.derived(origin)?;
                        if introduced.insert(proxy, a).is_none() {
                            let def = ObjLiteral { term: Term::Atom(a), neg };
                            defining.push(Rule::new(alloc::vec![proxy], alloc::vec![def.into()]));
                        }
                        SubjLiteral::k(proxy, s.neg).into()
                    }
                    _ => *l,
                },
                Literal::Obj(_) => *l,
            };
            body.push(rewritten);
        }
        rules.push(Rule { head: r.head.clone(), body, choice: r.choice });
    }
    rules.extend(defining);
    Ok(NormalFormResult { program: Program::with_rules(symbols, rules), introduced })
}

/// Intersects every member of `wv` with `atoms`.
pub fn restrict_worldview(wv: &BeliefInterpretation, atoms: &BTreeSet<AtomId>) -> BeliefInterpretation {
    wv.restrict(atoms)
}

#[cfg(test)]
mod tests {
    use alloc::string::ToString;
    use alloc::vec;

    use super::*;
    use crate::atom::SymbolTable;
    use crate::interp::Interpretation;

    #[test]
    fn k_not_gets_a_proxy() {
        let mut t = SymbolTable::new();
        let a = t.user("a").unwrap();
        let p = Program::with_rules(
            t,
            vec![Rule::new(vec![a], vec![SubjLiteral::new(ObjLiteral::not(a), Negation::Once).into()])],
        );
        let nf = normalize(&p).unwrap();
        assert_eq!(nf.program.to_string(), "a :- not K not1_a.\nnot1_a :- not a.\n");
        let proxy = nf.program.symbols().lookup("not1_a").unwrap();
        assert_eq!(nf.introduced, [(proxy, a)].into_iter().collect());
    }

    #[test]
    fn normal_programs_are_unchanged() {
        let mut t = SymbolTable::new();
        let a = t.user("a").unwrap();
        let b = t.user("b").unwrap();
        let p = Program::with_rules(t, vec![Rule::new(vec![b], vec![SubjLiteral::k(a, Negation::None).into()])]);
        let nf = normalize(&p).unwrap();
        assert_eq!(nf.program, p);
        assert!(nf.introduced.is_empty());
    }

    #[test]
    fn k_not_not_gets_a_proxy() {
        let mut t = SymbolTable::new();
        let p_ = t.user("p").unwrap();
        let q = t.user("q").unwrap();
        let p = Program::with_rules(
            t,
            vec![Rule::new(vec![p_], vec![SubjLiteral::new(ObjLiteral::not_not(q), Negation::None).into()])],
        );
        let nf = normalize(&p).unwrap();
        assert_eq!(nf.program.to_string(), "p :- K not2_q.\nnot2_q :- not not q.\n");
    }

    #[test]
    fn one_defining_rule_per_atom() {
        let mut t = SymbolTable::new();
        let a = t.user("a").unwrap();
        let b = t.user("b").unwrap();
        let k_not_a = |outer| SubjLiteral::new(ObjLiteral::not(a), outer).into();
        let p = Program::with_rules(
            t,
            vec![
                Rule::new(vec![b], vec![k_not_a(Negation::None)]),
                Rule::new(vec![a], vec![k_not_a(Negation::Twice)]),
            ],
        );
        let nf = normalize(&p).unwrap();
        assert_eq!(nf.program.len(), 3);
        assert_eq!(
            nf.program.to_string(),
            "b :- K not1_a.\na :- not not K not1_a.\nnot1_a :- not a.\n"
        );
    }

    #[test]
    fn restriction_merges_members() {
        let mut t = SymbolTable::new();
        let a = t.user("a").unwrap();
        let b = t.user("b").unwrap();
        let nb = t.derived(Origin::NotOnce(b)).unwrap();
        let na = t.derived(Origin::NotOnce(a)).unwrap();
        let ab: BTreeSet<_> = [a, b].into_iter().collect();
        let wv = BeliefInterpretation::new([Interpretation::from_iter([a, nb])]).unwrap();
        assert_eq!(restrict_worldview(&wv, &ab), BeliefInterpretation::new([Interpretation::from_iter([a])]).unwrap());
        let wv = BeliefInterpretation::new([Interpretation::new()]).unwrap();
        let only_a: BTreeSet<_> = [a].into_iter().collect();
        assert_eq!(restrict_worldview(&wv, &only_a), wv);
        let wv = BeliefInterpretation::new([Interpretation::from_iter([a]), Interpretation::from_iter([a, na])]).unwrap();
        let r = restrict_worldview(&wv, &only_a);
        assert_eq!(r.len(), 1);
        assert!(r.contains(&Interpretation::from_iter([a])));
    }
}
