mod common;

use std::collections::BTreeSet;

use common::{program, Shape};
use elp_core::fold::fold_constants;
use elp_core::normal_form::{normalize, restrict_worldview};
use elp_core::oracle::{enumerate_worldviews, worldviews_by_valuation, OracleBudget};
use elp_core::program::Term;
use elp_core::{AtomId, Negation, Program};
use proptest::prelude::*;

fn negated_under_k(p: &Program) -> BTreeSet<(AtomId, Negation)> {
    p.rules()
        .iter()
        .flat_map(|r| r.subjective())
        .filter_map(|s| match s.inner.term {
            Term::Atom(a) if s.inner.neg.is_negated() => Some((a, s.inner.neg)),
            _ => None,
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn result_is_normal(p in program(Shape::general(4, 6))) {
        let nf = normalize(&p).unwrap();
        prop_assert!(nf.program.is_normal_form());
        for (&proxy, &base) in &nf.introduced {
            prop_assert_eq!(nf.program.symbols().origin(proxy).base(), Some(base));
            let defining = nf.program.rules().iter().filter(|r| r.head == [proxy]).count();
            prop_assert_eq!(defining, 1);
        }
    }

    #[test]
    fn idempotent(p in program(Shape::general(4, 6))) {
        let once = normalize(&p).unwrap().program;
        let twice = normalize(&once).unwrap();
        prop_assert_eq!(&twice.program, &once);
        prop_assert!(twice.introduced.is_empty());
    }

    #[test]
    fn size_bound_is_exact(p in program(Shape::general(4, 6))) {
        let nf = normalize(&p).unwrap();
        prop_assert_eq!(nf.program.len(), p.len() + negated_under_k(&p).len());
        prop_assert_eq!(nf.introduced.len(), negated_under_k(&p).len());
    }

    #[test]
    fn worldviews_correspond(p in program(Shape { rules: 4, ..Shape::general(3, 4) })) {
        let original = enumerate_worldviews(&p, OracleBudget::default()).unwrap();
        let nf = normalize(&p).unwrap().program;
        let atoms = p.atoms();
        let projected: Vec<_> = worldviews_by_valuation(&nf).unwrap().iter().map(|w| restrict_worldview(w, &atoms)).collect();
        prop_assert_eq!(projected.len(), original.len());
        let a: BTreeSet<_> = projected.into_iter().collect();
        let b: BTreeSet<_> = original.into_iter().collect();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn folding_preserves_worldviews(p in program(Shape { rules: 3, ..Shape::general(3, 3).with_constants() })) {
        let folded = fold_constants(&p);
        prop_assert!(!folded.has_constants());
        prop_assert_eq!(
            enumerate_worldviews(&p, OracleBudget::default()).unwrap(),
            enumerate_worldviews(&folded, OracleBudget::default()).unwrap()
        );
    }
}
