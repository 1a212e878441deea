//! Generate-and-test worldview enumeration.
//!
//! Candidates are the stable models `M` of a generator program (`T0`, `G0`
//! or `G1`), visited in the deterministic stable-model order. A candidate is
//! accepted when its signature `k(M)` reproduces itself through the cautious
//! consequences of the tester `T0` under the assumption that fixes every
//! `k_a` to its value in `M`. With `G1`, a candidate whose choices are all
//! backed by propagated consequences is accepted without running the tester.
//! Accepted candidates are deduplicated by signature; each distinct signature
//! yields one worldview, the stable models of the tester under the signature.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::num::NonZeroUsize;

use thiserror::Error;

use crate::atom::AtomId;
use crate::interp::{Assumption, BeliefInterpretation, Interpretation};
use crate::program::Program;
use crate::semantics::{intersect, stable_models_unchecked, with_assumption, CautiousResult};
use crate::transform::{k_of_interpretation, KSignature, KUniverse, TransformBundle, TransformError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum GeneratorKind {
    T0,
    G0,
    #[default]
    G1,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    pub generator: GeneratorKind,
    /// `None` enumerates every worldview.
    pub max_worldviews: Option<NonZeroUsize>,
    pub collect_stats: bool,
    /// Also run the tester on skip-certified candidates and fail on any
    /// disagreement.
    pub verify: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self { generator: GeneratorKind::G1, max_worldviews: None, collect_stats: true, verify: false }
    }
}

impl SolverConfig {
    pub fn unbounded(generator: GeneratorKind) -> Self {
        Self { generator, ..Self::default() }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub candidates_generated: usize,
    pub tests_run: usize,
    pub tests_skipped: usize,
    pub worldviews_found: usize,
    pub tester_solve_calls: usize,
    /// Skip-certified candidates re-checked with the tester in verify mode.
    pub skips_verified: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WorldviewResult {
    pub signature: KSignature,
    /// Stable models of the tester under the signature, restricted to the
    /// atoms of the solved program.
    pub belief_set: BeliefInterpretation,
    /// The generator stable model that produced this worldview.
    pub witness: Interpretation,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error(transparent)]
    Transform(#[from] TransformError),
    #[error("skip check is only defined for G1 candidates")]
    GeneratorMismatch,
    #[error("accepted candidate produced an empty worldview")]
    EmptyWorldview,
    #[error("skip check accepted a candidate the tester rejects")]
    SkipDisagreement,
}

/// The full assumption for a signature: `k_a` for members, `¬k_a` for the
/// rest of `K(Π)`.
pub fn signature_assumption(signature: &KSignature, universe: &KUniverse) -> Assumption {
    let negative = universe.iter().map(|e| e.k).filter(|k| !signature.contains(*k));
    Assumption::new(signature.iter(), negative).expect("signature and complement are disjoint")
}

/// Generate-and-test solver over one normal-form program.
pub struct WorldviewSolver {
    bundle: TransformBundle,
    config: SolverConfig,
    atoms: BTreeSet<AtomId>,
    stats: SolveStats,
}

impl WorldviewSolver {
    pub fn new(program: &Program, config: SolverConfig) -> Result<Self, SolveError> {
        let bundle = TransformBundle::new(program)?;
        Ok(Self { atoms: program.atoms(), bundle, config, stats: SolveStats::default() })
    }

    pub fn bundle(&self) -> &TransformBundle {
        &self.bundle
    }

    pub fn stats(&self) -> &SolveStats {
        &self.stats
    }

    pub fn generator(&self) -> &Program {
        match self.config.generator {
            GeneratorKind::T0 => &self.bundle.t0,
            GeneratorKind::G0 => &self.bundle.g0,
            GeneratorKind::G1 => &self.bundle.g1,
        }
    }

    /// The candidates, in the order the solver visits them.
    pub fn candidates(&self) -> Vec<Interpretation> {
        stable_models_unchecked(self.generator()).into_models()
    }

    fn tester_models(&mut self, signature: &KSignature) -> Vec<Interpretation> {
        self.stats.tester_solve_calls += 1;
        let assumption = signature_assumption(signature, &self.bundle.universe);
        stable_models_unchecked(&with_assumption(&self.bundle.t0, &assumption)).into_models()
    }

    /// Whether `k(M)` equals the `k_a` whose `a` is a cautious consequence
    /// of the tester under `k(M)`.
    pub fn test_candidate(&mut self, m: &Interpretation) -> bool {
        let signature = k_of_interpretation(m, &self.bundle.universe);
        let models = self.tester_models(&signature);
        match intersect(&models) {
            CautiousResult::NoStableModels => false,
            CautiousResult::Defined(cautious) => {
                let derived = KSignature::new(
                    self.bundle.universe.iter().filter(|e| cautious.contains(&e.base)).map(|e| e.k),
                );
                derived == signature
            }
        }
    }

    /// Every chosen `k_a` has `kp_a`, and every unchosen one has `kpn_a`.
    pub fn skip_check(&self, m: &Interpretation) -> Result<bool, SolveError> {
        if self.config.generator != GeneratorKind::G1 {
            return Err(SolveError::GeneratorMismatch);
        }
        Ok(skip_conditions_hold(m, &self.bundle.universe))
    }

    pub fn build_worldview(&mut self, m: &Interpretation) -> Result<WorldviewResult, SolveError> {
        let signature = k_of_interpretation(m, &self.bundle.universe);
        let models = self.tester_models(&signature);
        let belief_set = BeliefInterpretation::new(models.iter().map(|i| i.restrict(&self.atoms)))
            .map_err(|_| SolveError::EmptyWorldview)?;
        Ok(WorldviewResult { signature, belief_set, witness: m.clone() })
    }

    /// Runs the generate-and-test loop until the configured number of
    /// distinct worldviews is reached or the candidates run out.
    pub fn solve(&mut self) -> Result<Vec<WorldviewResult>, SolveError> {
        let mut found: Vec<WorldviewResult> = Vec::new();
        let mut seen: BTreeSet<KSignature> = BTreeSet::new();
        for m in self.candidates() {
            if self.config.max_worldviews.is_some_and(|n| found.len() >= n.get()) {
                break;
            }
            self.stats.candidates_generated += 1;
            let skipped = self.config.generator == GeneratorKind::G1 && skip_conditions_hold(&m, &self.bundle.universe);
            let accepted = if skipped {
                self.stats.tests_skipped += 1;
                if self.config.verify {
                    self.stats.skips_verified += 1;
                    if !self.test_candidate(&m) {
                        return Err(SolveError::SkipDisagreement);
                    }
                }
                true
            } else {
                self.stats.tests_run += 1;
                self.test_candidate(&m)
            };
            if accepted && seen.insert(k_of_interpretation(&m, &self.bundle.universe)) {
                found.push(self.build_worldview(&m)?);
            }
        }
        self.stats.worldviews_found = found.len();
        Ok(found)
    }
}

/// The two skip conditions over an explicit universe.
pub fn skip_conditions_hold(m: &Interpretation, universe: &KUniverse) -> bool {
    universe
        .iter()
        .all(|e| if m.contains(e.k) { m.contains(e.kp) } else { m.contains(e.kpn) })
}

/// Solves a normal-form program.
pub fn solve(program: &Program, config: SolverConfig) -> Result<(Vec<WorldviewResult>, SolveStats), SolveError> {
    let mut solver = WorldviewSolver::new(program, config)?;
    let worldviews = solver.solve()?;
    let stats = if config.collect_stats { solver.stats } else { SolveStats::default() };
    Ok((worldviews, stats))
}
