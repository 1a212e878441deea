//! Interpretations, belief interpretations and assumptions.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::cmp::Ordering;

use thiserror::Error;

use crate::atom::{AtomId, SymbolTable};

/// A set of atoms.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interpretation(BTreeSet<AtomId>);

impl Interpretation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn contains(&self, a: AtomId) -> bool {
        self.0.contains(&a)
    }

    pub fn insert(&mut self, a: AtomId) -> bool {
        self.0.insert(a)
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

    pub fn atoms(&self) -> &BTreeSet<AtomId> {
        &self.0
    }

    pub fn is_subset(&self, other: &Interpretation) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn restrict(&self, atoms: &BTreeSet<AtomId>) -> Interpretation {
        Interpretation(self.0.intersection(atoms).copied().collect())
    }

    pub fn union(&self, other: &Interpretation) -> Interpretation {
        Interpretation(self.0.union(&other.0).copied().collect())
    }
}

impl FromIterator<AtomId> for Interpretation {
    fn from_iter<T: IntoIterator<Item = AtomId>>(iter: T) -> Self {
        Interpretation(iter.into_iter().collect())
    }
}

impl From<BTreeSet<AtomId>> for Interpretation {
    fn from(s: BTreeSet<AtomId>) -> Self {
        Interpretation(s)
    }
}

fn sorted_names<'a>(i: &Interpretation, symbols: &'a SymbolTable) -> Vec<&'a str> {
    let mut v: Vec<&str> = i.iter().map(|a| symbols.name(a)).collect();
    v.sort_unstable();
    v
}

/// Presentation order for interpretations: by cardinality, then
/// lexicographically on the sorted atom names.
pub fn display_order(a: &Interpretation, b: &Interpretation, symbols: &SymbolTable) -> Ordering {
    a.len()
        .cmp(&b.len())
        .then_with(|| sorted_names(a, symbols).cmp(&sorted_names(b, symbols)))
}

/// Sorts interpretations in [`display_order`].
pub fn sort_for_display(models: &mut [Interpretation], symbols: &SymbolTable) {
    models.sort_by_cached_key(|m| {
        let names: Vec<alloc::string::String> =
            sorted_names(m, symbols).into_iter().map(Into::into).collect();
        (m.len(), names)
    });
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("a belief interpretation must contain at least one interpretation")]
pub struct EmptyBeliefInterpretation;

/// A non-empty set of interpretations.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BeliefInterpretation(BTreeSet<Interpretation>);

impl BeliefInterpretation {
    pub fn new(models: impl IntoIterator<Item = Interpretation>) -> Result<Self, EmptyBeliefInterpretation> {
        let set: BTreeSet<_> = models.into_iter().collect();
        if set.is_empty() {
            Err(EmptyBeliefInterpretation)
        } else {
            Ok(Self(set))
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for API symmetry with other collections.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Interpretation> + '_ {
        self.0.iter()
    }

    pub fn contains(&self, i: &Interpretation) -> bool {
        self.0.contains(i)
    }

    pub fn models(&self) -> &BTreeSet<Interpretation> {
        &self.0
    }

    /// `W ⊨ K a`: every member contains `a`.
    pub fn knows(&self, a: AtomId) -> bool {
        self.0.iter().all(|i| i.contains(a))
    }

    /// Members in [`display_order`].
    pub fn sorted(&self, symbols: &SymbolTable) -> Vec<Interpretation> {
        let mut v: Vec<_> = self.0.iter().cloned().collect();
        sort_for_display(&mut v, symbols);
        v
    }

    /// Each member intersected with `atoms`; duplicates merge.
    pub fn restrict(&self, atoms: &BTreeSet<AtomId>) -> BeliefInterpretation {
        BeliefInterpretation(self.0.iter().map(|i| i.restrict(atoms)).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("assumption contains both an atom and its negation")]
pub struct InconsistentAssumption;

/// A consistent set of signed atoms.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assumption {
    positive: BTreeSet<AtomId>,
    negative: BTreeSet<AtomId>,
}

impl Assumption {
    pub fn new(
        positive: impl IntoIterator<Item = AtomId>,
        negative: impl IntoIterator<Item = AtomId>,
    ) -> Result<Self, InconsistentAssumption> {
        let positive: BTreeSet<_> = positive.into_iter().collect();
        let negative: BTreeSet<_> = negative.into_iter().collect();
        if positive.intersection(&negative).next().is_some() {
            return Err(InconsistentAssumption);
        }
        Ok(Self { positive, negative })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn positive(&self) -> &BTreeSet<AtomId> {
        &self.positive
    }

    pub fn negative(&self) -> &BTreeSet<AtomId> {
        &self.negative
    }

    pub fn is_empty(&self) -> bool {
        self.positive.is_empty() && self.negative.is_empty()
    }
}
