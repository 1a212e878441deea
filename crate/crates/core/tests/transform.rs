mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::{program, Shape};
use elp_core::family::propagation_family;
use elp_core::oracle::{enumerate_worldviews, subjective_reduct, OracleBudget, Powerset};
use elp_core::semantics::{enumerate_stable_models, stable_models_under_assumption};
use elp_core::solver::signature_assumption;
use elp_core::transform::{k_of_interpretation, k_of_worldview, KSignature, TransformBundle};
use elp_core::{BeliefInterpretation, Interpretation, Origin, Program};
use proptest::prelude::*;

fn models(p: &Program) -> Vec<Interpretation> {
    enumerate_stable_models(p).unwrap().into_models()
}

/// A belief interpretation whose signature is exactly `sig`.
fn witness(sig: &KSignature, bundle: &TransformBundle) -> BeliefInterpretation {
    let member: Interpretation = sig.iter().map(|k| bundle.universe.get(k).unwrap().base).collect();
    BeliefInterpretation::new([member]).unwrap()
}

fn reduct_models(p: &Program, w: &BeliefInterpretation) -> BTreeSet<Interpretation> {
    enumerate_stable_models(&subjective_reduct(p, w)).unwrap().to_set()
}

fn check_generator(p: &Program, bundle: &TransformBundle, generator: &Program) -> Result<(), TestCaseError> {
    let atoms = p.atoms();
    let sm = models(generator);
    for w in enumerate_worldviews(p, OracleBudget::default()).unwrap() {
        let sig = k_of_worldview(&w, &bundle.universe);
        prop_assert!(
            sm.iter().any(|m| k_of_interpretation(m, &bundle.universe) == sig && w.contains(&m.restrict(&atoms))),
            "no candidate for worldview {:?}",
            w
        );
    }
    for m in &sm {
        let w = witness(&k_of_interpretation(m, &bundle.universe), bundle);
        prop_assert!(reduct_models(p, &w).contains(&m.restrict(&atoms)));
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn generators(p in program(Shape::normal(4, 6))) {
        let b = TransformBundle::new(&p).unwrap();
        check_generator(&p, &b, &b.t0)?;
        check_generator(&p, &b, &b.g0)?;
        check_generator(&p, &b, &b.g1)?;
    }

    #[test]
    fn candidate_dominance(p in program(Shape::normal(4, 6))) {
        let b = TransformBundle::new(&p).unwrap();
        let (t0, g0, g1) = (models(&b.t0).len(), models(&b.g0).len(), models(&b.g1).len());
        prop_assert!(g1 <= g0 && g0 <= t0, "{} {} {}", t0, g0, g1);
    }

    #[test]
    fn propagation_extends_uniquely(p in program(Shape::normal(4, 6))) {
        let b = TransformBundle::new(&p).unwrap();
        let g0_atoms = b.g0.atoms();
        let g0_models: BTreeSet<_> = models(&b.g0).into_iter().collect();
        let mut extensions: BTreeMap<Interpretation, Vec<Interpretation>> = BTreeMap::new();
        for n in models(&b.g0_with_kp()) {
            extensions.entry(n.restrict(&g0_atoms)).or_default().push(n);
        }
        // every projection is a stable model of G0, and every one is hit once
        prop_assert_eq!(extensions.keys().cloned().collect::<BTreeSet<_>>(), g0_models);
        for (m, ext) in &extensions {
            prop_assert_eq!(ext.len(), 1);
            let w = witness(&k_of_interpretation(m, &b.universe), &b);
            let sm = reduct_models(&p, &w);
            for a in ext[0].iter() {
                match b.symbols().origin(a) {
                    Origin::Kp(base) => prop_assert!(sm.iter().all(|i| i.contains(base))),
                    Origin::KpNotAtom(base) => prop_assert!(sm.iter().all(|i| !i.contains(base))),
                    _ => {}
                }
            }
        }
    }

    #[test]
    fn propagation_size_is_linear(p in program(Shape::normal(4, 6))) {
        let b = TransformBundle::new(&p).unwrap();
        prop_assert!(b.kp_part.size() <= 3 * p.size() + 2 * p.len() + p.atoms().len());
    }

    #[test]
    fn tester_behaves_as_reduct(p in program(Shape::normal(3, 5))) {
        let b = TransformBundle::new(&p).unwrap();
        let atoms = p.atoms();
        let space = Powerset::new(atoms.iter().copied());
        for mask in 1..=space.full() {
            let w = space.belief(mask);
            let sig = k_of_worldview(&w, &b.universe);
            let tester = stable_models_under_assumption(&b.t0, &signature_assumption(&sig, &b.universe)).unwrap().to_set();
            let sig_atoms: Interpretation = sig.iter().collect();
            let lifted: BTreeSet<_> = reduct_models(&p, &w).iter().map(|m| m.union(&sig_atoms)).collect();
            prop_assert_eq!(&lifted, &tester);
            let projected: BTreeSet<_> = tester.iter().map(|m| m.restrict(&atoms)).collect();
            prop_assert_eq!(projected, reduct_models(&p, &w));
        }
    }
}

#[test]
fn family_separation() {
    for n in 1..=8 {
        let b = TransformBundle::new(&propagation_family(n).unwrap()).unwrap();
        assert_eq!(models(&b.g0).len(), 1 << n);
        assert_eq!(models(&b.g1).len(), 1);
    }
}
