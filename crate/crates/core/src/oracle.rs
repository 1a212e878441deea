//! Brute-force reference semantics.
//!
//! Nothing here goes through the `k_`-renamed companion programs: worldviews
//! are checked directly against the subjective reduct. Two enumeration
//! routes are provided:
//!
//! * [`enumerate_worldviews`] tries every non-empty set of interpretations
//!   over `At(Π)`, which is only feasible up to four atoms;
//! * [`worldviews_by_valuation`] guesses the truth value of every subjective
//!   atom, computes the stable models of the resulting reduct and keeps them
//!   when they reproduce the guess. It scales with the number of distinct
//!   subjective atoms instead of the number of atoms.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

use crate::atom::AtomId;
use crate::fold::fold_constants;
use crate::interp::{BeliefInterpretation, Interpretation};
use crate::program::{Constant, Literal, ObjLiteral, Program, Rule, SubjLiteral};
use crate::semantics::{satisfies_ext, stable_models_unchecked};

/// Hard ceiling for the exhaustive route: `2^(2^4) - 1` belief
/// interpretations.
const EXHAUSTIVE_ATOM_LIMIT: usize = 4;

/// Ceiling on distinct subjective atoms for the valuation route.
const VALUATION_LIMIT: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_atoms: usize,
    pub max_interpretations: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        Self { max_atoms: 4, max_interpretations: 16 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("program has {atoms} atoms; the oracle budget allows {limit}")]
    BudgetExceeded { atoms: usize, limit: usize },
}

/// `W ⊨ L` for a subjective literal. `¬¬K l` holds exactly when `K l` does.
pub fn satisfies_subjective(wv: &BeliefInterpretation, s: &SubjLiteral) -> bool {
    s.neg.apply(wv.iter().all(|i| satisfies_ext(i, &s.inner)))
}

/// Replaces every subjective literal by the constant `value` assigns it, then
/// folds constants.
fn reduct_by(program: &Program, mut value: impl FnMut(&SubjLiteral) -> bool) -> Program {
    let rules = program
        .rules()
        .iter()
        .map(|r| Rule {
            head: r.head.clone(),
            body: r
                .body
                .iter()
                .map(|l| match l {
                    Literal::Subj(s) => {
                        let c = if value(s) { Constant::Top } else { Constant::Bot };
                        ObjLiteral::constant(c, Default::default()).into()
                    }
                    Literal::Obj(_) => *l,
                })
                .collect(),
            choice: r.choice,
        })
        .collect();
    fold_constants(&program.with_same_symbols(rules))
}

/// `Π^W`.
pub fn subjective_reduct(program: &Program, wv: &BeliefInterpretation) -> Program {
    reduct_by(program, |s| satisfies_subjective(wv, s))
}

/// `W = SM(Π^W)`.
pub fn is_worldview(program: &Program, wv: &BeliefInterpretation) -> bool {
    let models = stable_models_unchecked(&subjective_reduct(program, wv));
    models.len() == wv.len() && models.iter().all(|m| wv.contains(m))
}

/// The distinct objective literals that occur under `K`.
fn subjective_atoms(program: &Program) -> Vec<ObjLiteral> {
    let mut v: Vec<ObjLiteral> = program.rules().iter().flat_map(Rule::subjective).map(|s| s.inner).collect();
    v.sort_unstable();
    v.dedup();
    v
}

fn sort_worldviews(worldviews: &mut [BeliefInterpretation], program: &Program) {
    let symbols = program.symbols();
    worldviews.sort_by_cached_key(|w| {
        let members: Vec<(usize, Vec<String>)> = w
            .sorted(symbols)
            .iter()
            .map(|i| {
                let mut names: Vec<String> = i.iter().map(|a| symbols.name(a).into()).collect();
                names.sort_unstable();
                (i.len(), names)
            })
            .collect();
        (w.len(), members)
    });
}

/// Every interpretation over a small atom set, addressed by index. Bit `j`
/// of an index says whether `atoms[j]` is true; sets of interpretations are
/// bit masks over indices.
#[derive(Clone, Debug)]
pub struct Powerset {
    atoms: Vec<AtomId>,
}

impl Powerset {
    /// # Panics
    ///
    /// Panics above six atoms, where masks no longer fit in a `u64`.
    pub fn new(atoms: impl IntoIterator<Item = AtomId>) -> Self {
        let atoms: Vec<AtomId> = atoms.into_iter().collect();
        assert!(atoms.len() <= 6, "powerset masks need at most 64 interpretations");
        Self { atoms }
    }

    pub fn atoms(&self) -> &[AtomId] {
        &self.atoms
    }

    /// Number of interpretations.
    pub fn len(&self) -> usize {
        1 << self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn interpretation(&self, index: usize) -> Interpretation {
        self.atoms.iter().enumerate().filter(|(j, _)| index & (1 << j) != 0).map(|(_, a)| *a).collect()
    }

    pub fn index_of(&self, i: &Interpretation) -> Option<usize> {
        let mut index = 0;
        for a in i.iter() {
            index |= 1 << self.atoms.iter().position(|&b| b == a)?;
        }
        Some(index)
    }

    pub fn mask_of<'a>(&self, interps: impl IntoIterator<Item = &'a Interpretation>) -> Option<u64> {
        interps.into_iter().try_fold(0u64, |m, i| Some(m | 1 << self.index_of(i)?))
    }

    /// Interpretations satisfying `l`.
    pub fn satisfying(&self, l: &ObjLiteral) -> u64 {
        (0..self.len()).filter(|&i| satisfies_ext(&self.interpretation(i), l)).fold(0, |m, i| m | 1 << i)
    }

    /// All interpretations.
    pub fn full(&self) -> u64 {
        if self.len() == 64 {
            u64::MAX
        } else {
            (1 << self.len()) - 1
        }
    }

    /// # Panics
    ///
    /// Panics on the empty mask.
    pub fn belief(&self, mask: u64) -> BeliefInterpretation {
        BeliefInterpretation::new((0..self.len()).filter(|i| mask & (1 << i) != 0).map(|i| self.interpretation(i)))
            .expect("non-empty mask")
    }
}

/// Every worldview, by trying every non-empty belief interpretation over
/// `At(Π)`.
///
/// `Π^W` only depends on which subjective atoms `W` satisfies, so the stable
/// models of each distinct reduct are computed once and compared against
/// every `W` producing it.
pub fn enumerate_worldviews(
    program: &Program,
    budget: OracleBudget,
) -> Result<Vec<BeliefInterpretation>, OracleError> {
    let atoms = program.atoms();
    let limit = budget.max_atoms.min(EXHAUSTIVE_ATOM_LIMIT);
    if atoms.len() > limit || (1usize << atoms.len()) > budget.max_interpretations {
        return Err(OracleError::BudgetExceeded { atoms: atoms.len(), limit });
    }
    let space = Powerset::new(atoms);
    let inner = subjective_atoms(program);
    let sat: Vec<u64> = inner.iter().map(|l| space.satisfying(l)).collect();
    let mut memo: BTreeMap<u64, u64> = BTreeMap::new();
    let mut out = Vec::new();
    for w in 1..=space.full() {
        let key = sat.iter().enumerate().fold(0u64, |k, (j, s)| if w & !s == 0 { k | 1 << j } else { k });
        let models = *memo.entry(key).or_insert_with(|| {
            let reduct = reduct_by(program, |s| {
                let j = inner.binary_search(&s.inner).expect("collected");
                s.neg.apply(key & (1 << j) != 0)
            });
            space.mask_of(stable_models_unchecked(&reduct).iter()).expect("models range over At(Π)")
        });
        if models == w {
            out.push(space.belief(w));
        }
    }
    sort_worldviews(&mut out, program);
    Ok(out)
}

/// Every worldview, by guessing the value of every subjective atom.
pub fn worldviews_by_valuation(program: &Program) -> Result<Vec<BeliefInterpretation>, OracleError> {
    let inner = subjective_atoms(program);
    if inner.len() > VALUATION_LIMIT {
        return Err(OracleError::BudgetExceeded { atoms: inner.len(), limit: VALUATION_LIMIT });
    }
    let mut out = Vec::new();
    for guess in 0u64..1 << inner.len() {
        let holds = |l: &ObjLiteral| guess & (1 << inner.binary_search(l).expect("collected")) != 0;
        let reduct = reduct_by(program, |s| s.neg.apply(holds(&s.inner)));
        let Ok(candidate) = BeliefInterpretation::new(stable_models_unchecked(&reduct).into_models()) else {
            continue;
        };
        let consistent = inner.iter().all(|l| candidate.iter().all(|i| satisfies_ext(i, l)) == holds(l));
        if consistent {
            out.push(candidate);
        }
    }
    sort_worldviews(&mut out, program);
    Ok(out)
}
