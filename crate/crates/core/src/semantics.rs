//! Stable-model semantics of objective programs.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use thiserror::Error;

use crate::atom::AtomId;
use crate::engine::{self, Ground};
use crate::fold::fold_constants;
use crate::interp::{sort_for_display, Assumption, Interpretation};
use crate::program::{Literal, ObjLiteral, Program, Rule, Term};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SemanticsError {
    #[error("program contains a subjective literal")]
    NotObjective,
    #[error("assumption contains both an atom and its negation")]
    InconsistentAssumption,
    #[error("program is not definite Horn")]
    NotHorn,
}

/// Stable models of a program, ordered by cardinality and then
/// lexicographically on atom names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableModelSet {
    models: Vec<Interpretation>,
}

impl StableModelSet {
    fn sorted(mut models: Vec<Interpretation>, program: &Program) -> Self {
        sort_for_display(&mut models, program.symbols());
        Self { models }
    }

    pub fn models(&self) -> &[Interpretation] {
        &self.models
    }

    pub fn into_models(self) -> Vec<Interpretation> {
        self.models
    }

    pub fn len(&self) -> usize {
        self.models.len()
    }

    pub fn is_empty(&self) -> bool {
        self.models.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Interpretation> + '_ {
        self.models.iter()
    }

    pub fn contains(&self, i: &Interpretation) -> bool {
        self.models.contains(i)
    }

    pub fn to_set(&self) -> BTreeSet<Interpretation> {
        self.models.iter().cloned().collect()
    }
}

/// Cautious consequences, `⋂ SM(Π; A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CautiousResult {
    Defined(BTreeSet<AtomId>),
    /// The intersection over an empty family is left undefined.
    NoStableModels,
}

fn require_objective(program: &Program) -> Result<(), SemanticsError> {
    if program.is_objective() {
        Ok(())
    } else {
        Err(SemanticsError::NotObjective)
    }
}

/// Satisfaction of an extended objective literal by an interpretation.
pub fn satisfies_ext(interp: &Interpretation, lit: &ObjLiteral) -> bool {
    let base = match lit.term {
        Term::Atom(a) => interp.contains(a),
        Term::Const(c) => c.value(),
    };
    lit.neg.apply(base)
}

fn body_holds(interp: &Interpretation, rule: &Rule) -> bool {
    rule.objective().all(|l| satisfies_ext(interp, l))
}

pub fn is_model(interp: &Interpretation, program: &Program) -> Result<bool, SemanticsError> {
    require_objective(program)?;
    Ok(program
        .rules()
        .iter()
        .all(|r| !body_holds(interp, r) || r.head.iter().any(|&a| interp.contains(a))))
}

/// `Π^I`: drops rules with a negated body literal that `interp` falsifies and
/// deletes the negated literals from the rest.
pub fn reduct(program: &Program, interp: &Interpretation) -> Result<Program, SemanticsError> {
    require_objective(program)?;
    let rules = program
        .rules()
        .iter()
        .filter(|r| r.objective().all(|l| !l.neg.is_negated() || satisfies_ext(interp, l)))
        .map(|r| Rule {
            head: r.head.clone(),
            body: r.objective().filter(|l| !l.neg.is_negated()).map(|&l| l.into()).collect(),
            choice: false,
        })
        .collect();
    Ok(fold_constants(&program.with_same_symbols(rules)))
}

/// Above this many true atoms, minimality is decided by searching for a
/// smaller model instead of listing subsets.
const SUBSET_CHECK_LIMIT: usize = 20;

/// Whether `interp` is a ⊆-minimal model of `Π^interp`.
pub fn is_stable_model(program: &Program, interp: &Interpretation) -> Result<bool, SemanticsError> {
    let red = reduct(program, interp)?;
    if !is_model(interp, &red)? {
        return Ok(false);
    }
    if interp.len() > SUBSET_CHECK_LIMIT {
        return Ok(Ground::new(program).is_minimal_interpretation(interp));
    }
    let atoms: Vec<AtomId> = interp.iter().collect();
    // Subsets that drop at least one atom.
    for mask in 0..(1u64 << atoms.len()) - 1 {
        let sub: Interpretation = atoms
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, a)| *a)
            .collect();
        if is_model(&sub, &red)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn enumerate_stable_models(program: &Program) -> Result<StableModelSet, SemanticsError> {
    require_objective(program)?;
    Ok(stable_models_unchecked(program))
}

/// Stable models of a program already known to be objective.
pub(crate) fn stable_models_unchecked(program: &Program) -> StableModelSet {
    StableModelSet::sorted(Ground::new(program).stable_models(), program)
}

/// `Π ∪ { ⊥ ← ¬a | a ∈ A } ∪ { ⊥ ← a | ¬a ∈ A }`.
pub fn with_assumption(program: &Program, assumption: &Assumption) -> Program {
    let mut out = program.clone();
    out.extend(assumption.positive().iter().map(|&a| Rule::constraint(alloc::vec![ObjLiteral::not(a).into()])));
    out.extend(assumption.negative().iter().map(|&a| Rule::constraint(alloc::vec![ObjLiteral::atom(a).into()])));
    out
}

pub fn stable_models_under_assumption(
    program: &Program,
    assumption: &Assumption,
) -> Result<StableModelSet, SemanticsError> {
    require_objective(program)?;
    if assumption.positive().intersection(assumption.negative()).next().is_some() {
        return Err(SemanticsError::InconsistentAssumption);
    }
    Ok(stable_models_unchecked(&with_assumption(program, assumption)))
}

pub fn cautious_consequences(
    program: &Program,
    assumption: &Assumption,
) -> Result<CautiousResult, SemanticsError> {
    let models = stable_models_under_assumption(program, assumption)?;
    Ok(intersect(models.models()))
}

pub(crate) fn intersect(models: &[Interpretation]) -> CautiousResult {
    let mut iter = models.iter();
    let Some(first) = iter.next() else {
        return CautiousResult::NoStableModels;
    };
    let mut acc = first.atoms().clone();
    for m in iter {
        acc.retain(|a| m.contains(*a));
    }
    CautiousResult::Defined(acc)
}

/// Least model of a definite program via the immediate-consequence operator.
pub fn least_model_horn(program: &Program) -> Result<Interpretation, SemanticsError> {
    let atoms: Vec<AtomId> = program.atoms().into_iter().collect();
    let index = |a: AtomId| atoms.binary_search(&a).expect("atom of program");
    let mut rules = Vec::with_capacity(program.len());
    'rules: for r in program.rules() {
        let [head] = r.head[..] else {
            return Err(SemanticsError::NotHorn);
        };
        let mut body = Vec::new();
        for l in &r.body {
            let Literal::Obj(o) = l else {
                return Err(SemanticsError::NotHorn);
            };
            if o.neg.is_negated() {
                return Err(SemanticsError::NotHorn);
            }
            match o.term {
                Term::Atom(a) => body.push(index(a)),
                Term::Const(c) if c.value() => {}
                Term::Const(_) => continue 'rules,
            }
        }
        rules.push((index(head), body));
    }
    let value = engine::least_model(atoms.len(), rules.into_iter());
    Ok(atoms.iter().zip(value).filter(|(_, v)| *v).map(|(a, _)| *a).collect())
}
