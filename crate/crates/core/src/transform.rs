//! Objective companion programs of a normal-form epistemic program.
//!
//! * `k(Π)` replaces every `K a` by a fresh atom `k_a`, keeping outer
//!   negations.
//! * `T0(Π)` is `k(Π)` plus a choice `{k_a}` for every `k_a ∈ K(Π)`. It is
//!   the tester and the simplest generator.
//! * `G0(Π)` adds `⊥ ← k_a, ¬a` to `T0(Π)`.
//! * `kp(Π)` propagates epistemic consequences of the choices: `kp_a` means
//!   `K a` follows, `kpn_a` means `K ¬a` follows, and `kpn_R<i>` means the
//!   body of rule `i` is false in every interpretation.
//! * `G1(Π)` is `G0(Π) ∪ kp(Π)` plus `⊥ ← kp_a, ¬k_a`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::atom::{AtomId, Origin, SymbolError, SymbolTable};
use crate::interp::{BeliefInterpretation, Interpretation};
use crate::program::{Literal, Negation, ObjLiteral, Program, Rule, SubjLiteral};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("program is not in normal form (negation or constant under K, or constant in a body)")]
    NotNormalForm,
    #[error(transparent)]
    Symbol(#[from] SymbolError),
}

/// Derived atoms attached to one `K a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KAtom {
    pub base: AtomId,
    pub k: AtomId,
    pub kp: AtomId,
    pub kpn: AtomId,
}

/// `K(Π)` with the atoms each member refers to.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KUniverse {
    entries: Vec<KAtom>,
}

impl KUniverse {
    pub fn iter(&self) -> impl Iterator<Item = &KAtom> + '_ {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, k: AtomId) -> bool {
        self.entries.iter().any(|e| e.k == k)
    }

    pub fn get(&self, k: AtomId) -> Option<&KAtom> {
        self.entries.iter().find(|e| e.k == k)
    }

    /// The entry for `K base`.
    pub fn of_base(&self, base: AtomId) -> Option<&KAtom> {
        self.entries.iter().find(|e| e.base == base)
    }

    pub fn all(&self) -> KSignature {
        KSignature(self.entries.iter().map(|e| e.k).collect())
    }
}

/// A set of `k_a` atoms.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KSignature(BTreeSet<AtomId>);

impl KSignature {
    pub fn new(atoms: impl IntoIterator<Item = AtomId>) -> Self {
        Self(atoms.into_iter().collect())
    }

    pub fn contains(&self, k: AtomId) -> bool {
        self.0.contains(&k)
    }

    pub fn atoms(&self) -> &BTreeSet<AtomId> {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = AtomId> + '_ {
        self.0.iter().copied()
    }
}

/// `k(M) = M ∩ K(Π)`.
pub fn k_of_interpretation(m: &Interpretation, universe: &KUniverse) -> KSignature {
    KSignature(universe.iter().map(|e| e.k).filter(|&k| m.contains(k)).collect())
}

/// `k(W)`: the `k_a` with `W ⊨ K a`.
pub fn k_of_worldview(wv: &BeliefInterpretation, universe: &KUniverse) -> KSignature {
    KSignature(universe.iter().filter(|e| wv.knows(e.base)).map(|e| e.k).collect())
}

/// `kk(L)`: the objective proxy of a subjective literal, same outer negation.
fn kk(s: &SubjLiteral, k_of: &BTreeMap<AtomId, AtomId>) -> ObjLiteral {
    let a = s.inner.as_atom().expect("normal form");
    ObjLiteral { term: ObjLiteral::atom(k_of[&a]).term, neg: s.neg }
}

/// Complement of a renamed subjective literal; `¬¬k_a` is read as `k_a`.
fn complement(l: ObjLiteral) -> ObjLiteral {
    let neg = match l.neg {
        Negation::None | Negation::Twice => Negation::Once,
        Negation::Once => Negation::None,
    };
    ObjLiteral { term: l.term, neg }
}

/// Every companion program of one normal-form program, over a shared symbol
/// table.
#[derive(Clone, Debug)]
pub struct TransformBundle {
    pub source: Program,
    pub universe: KUniverse,
    pub t0: Program,
    pub g0: Program,
    pub kp_part: Program,
    pub g1: Program,
}

struct Names {
    symbols: SymbolTable,
    k_of: BTreeMap<AtomId, AtomId>,
    kp: BTreeMap<AtomId, AtomId>,
    kpn: BTreeMap<AtomId, AtomId>,
    rule: Vec<AtomId>,
}

impl Names {
    fn new(program: &Program) -> Result<Self, TransformError> {
        let mut symbols = program.symbols().clone();
        let mut k_of = BTreeMap::new();
        for a in program.k_atoms() {
            k_of.insert(a, symbols.derived(Origin::K(a))?);
        }
        let mut kp = BTreeMap::new();
        let mut kpn = BTreeMap::new();
        for a in program.atoms() {
            kp.insert(a, symbols.derived(Origin::Kp(a))?);
            kpn.insert(a, symbols.derived(Origin::KpNotAtom(a))?);
        }
        let rule = (0..program.len())
            .map(|i| symbols.derived(Origin::KpNotRule(i)))
            .collect::<Result<_, _>>()?;
        Ok(Self { symbols, k_of, kp, kpn, rule })
    }

    fn universe(&self) -> KUniverse {
        KUniverse {
            entries: self
                .k_of
                .iter()
                .map(|(&base, &k)| KAtom { base, k, kp: self.kp[&base], kpn: self.kpn[&base] })
                .collect(),
        }
    }
}

fn k_rename_rules(program: &Program, k_of: &BTreeMap<AtomId, AtomId>) -> Vec<Rule> {
    program
        .rules()
        .iter()
        .map(|r| Rule {
            head: r.head.clone(),
            body: r
                .body
                .iter()
                .map(|l| match l {
                    Literal::Subj(s) => kk(s, k_of).into(),
                    Literal::Obj(_) => *l,
                })
                .collect(),
            choice: r.choice,
        })
        .collect()
}

fn choice_rules(k_of: &BTreeMap<AtomId, AtomId>) -> impl Iterator<Item = Rule> + '_ {
    k_of.values().map(|&k| Rule::choice(k, Vec::new()))
}

fn g0_constraints(k_of: &BTreeMap<AtomId, AtomId>) -> impl Iterator<Item = Rule> + '_ {
    k_of.iter()
        .map(|(&a, &k)| Rule::constraint(vec![ObjLiteral::atom(k).into(), ObjLiteral::not(a).into()]))
}

fn kp_rules(program: &Program, names: &Names) -> Vec<Rule> {
    let mut out = Vec::new();
    for (i, r) in program.rules().iter().enumerate() {
        if let [head] = r.head[..] {
            let body = r
                .body
                .iter()
                .map(|l| match l {
                    Literal::Obj(o) => {
                        let a = o.as_atom().expect("normal form");
                        if o.neg == Negation::Once {
                            ObjLiteral::atom(names.kpn[&a]).into()
                        } else {
                            ObjLiteral::atom(names.kp[&a]).into()
                        }
                    }
                    Literal::Subj(s) => kk(s, &names.k_of).into(),
                })
                .collect();
            out.push(Rule::new(vec![names.kp[&head]], body));
        }
        let blocked = names.rule[i];
        for l in &r.body {
            let reason = match l {
                Literal::Obj(o) => {
                    let a = o.as_atom().expect("normal form");
                    if o.neg == Negation::Once {
                        ObjLiteral::atom(names.kp[&a])
                    } else {
                        ObjLiteral::atom(names.kpn[&a])
                    }
                }
                Literal::Subj(s) => complement(kk(s, &names.k_of)),
            };
            out.push(Rule::new(vec![blocked], vec![reason.into()]));
        }
    }
    for a in program.atoms() {
        let body = program
            .rules()
            .iter()
            .enumerate()
            .filter(|(_, r)| r.head.contains(&a))
            .map(|(i, _)| ObjLiteral::atom(names.rule[i]).into())
            .collect();
        out.push(Rule::new(vec![names.kpn[&a]], body));
    }
    out
}

fn require_normal(program: &Program) -> Result<(), TransformError> {
    if program.is_normal_form() {
        Ok(())
    } else {
        Err(TransformError::NotNormalForm)
    }
}

impl TransformBundle {
    pub fn new(program: &Program) -> Result<Self, TransformError> {
        require_normal(program)?;
        let names = Names::new(program)?;
        let renamed = k_rename_rules(program, &names.k_of);

        let mut t0 = Program::with_rules(names.symbols.clone(), renamed);
        t0.extend(choice_rules(&names.k_of));

        let mut g0 = t0.clone();
        g0.extend(g0_constraints(&names.k_of));

        let kp_part = Program::with_rules(names.symbols.clone(), kp_rules(program, &names));

        let mut g1 = g0.clone();
        g1.extend(kp_part.rules().iter().cloned());
        g1.extend(names.k_of.iter().map(|(a, &k)| {
            Rule::constraint(vec![ObjLiteral::atom(names.kp[a]).into(), ObjLiteral::not(k).into()])
        }));

        Ok(Self { source: program.clone(), universe: names.universe(), t0, g0, kp_part, g1 })
    }

    /// `G0(Π) ∪ kp(Π)`, without the `⊥ ← kp_a, ¬k_a` constraints.
    pub fn g0_with_kp(&self) -> Program {
        let mut p = self.g0.clone();
        p.extend(self.kp_part.rules().iter().cloned());
        p
    }

    pub fn symbols(&self) -> &SymbolTable {
        self.g1.symbols()
    }
}

/// `k(Π)`.
pub fn k_rename(program: &Program) -> Result<Program, TransformError> {
    require_normal(program)?;
    let mut symbols = program.symbols().clone();
    let mut k_of = BTreeMap::new();
    for a in program.k_atoms() {
        k_of.insert(a, symbols.derived(Origin::K(a))?);
    }
    Ok(Program::with_rules(symbols, k_rename_rules(program, &k_of)))
}

pub fn build_t0(program: &Program) -> Result<Program, TransformError> {
    Ok(TransformBundle::new(program)?.t0)
}

pub fn build_g0(program: &Program) -> Result<Program, TransformError> {
    Ok(TransformBundle::new(program)?.g0)
}

pub fn build_kp(program: &Program) -> Result<Program, TransformError> {
    Ok(TransformBundle::new(program)?.kp_part)
}

pub fn build_g1(program: &Program) -> Result<Program, TransformError> {
    Ok(TransformBundle::new(program)?.g1)
}
