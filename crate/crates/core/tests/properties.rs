use iqlogic::{saturate, KnowledgeBase, ModelSearch, Quantifier, QuantitySystem, Rule, Semantics, Statement, Term};
use proptest::prelude::*;

const TERMS: [&str; 3] = ["X", "Y", "Z"];

fn statement(sys: QuantitySystem) -> impl Strategy<Value = Statement> {
    let qs: Vec<Quantifier> = sys.quantifiers().collect();
    (proptest::sample::select(qs), 0..TERMS.len(), 0..TERMS.len(), proptest::bool::weighted(0.15)).prop_map(
        |(q, s, p, neg)| {
            let s = Statement::new(q, Term::new(TERMS[s]).unwrap(), Term::new(TERMS[p]).unwrap());
            if neg {
                s.negate()
            } else {
                s
            }
        },
    )
}

fn kb(sys: QuantitySystem, max: usize) -> impl Strategy<Value = KnowledgeBase> {
    proptest::collection::vec(statement(sys), 0..=max)
        .prop_map(move |v| KnowledgeBase::from_statements(sys, v).unwrap())
}

fn system() -> impl Strategy<Value = QuantitySystem> {
    prop_oneof![Just(QuantitySystem::five()), Just(QuantitySystem::two())]
}

fn sys_and_kb(max: usize) -> impl Strategy<Value = KnowledgeBase> {
    system().prop_flat_map(move |sys| kb(sys, max))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closure_contains_premises_and_is_idempotent(base in sys_and_kb(4)) {
        let closure = saturate(&base);
        prop_assert!(closure.fixpoint_reached());
        for s in base.statements() {
            prop_assert!(closure.contains(s));
        }
        let again = KnowledgeBase::from_statements(*base.system(), closure.statements().cloned()).unwrap();
        let twice = saturate(&again);
        prop_assert_eq!(twice.len(), closure.len());
        for s in twice.statements() {
            prop_assert!(closure.contains(s));
        }
    }

    #[test]
    fn saturation_is_monotone(base in sys_and_kb(3), extra in 0usize..27) {
        let sys = *base.system();
        let q = sys.quantifiers().nth(extra % sys.quantifiers().count()).unwrap();
        let added = Statement::new(q, Term::new(TERMS[extra % 3]).unwrap(), Term::new(TERMS[(extra / 3) % 3]).unwrap());
        let mut bigger = base.clone();
        bigger.insert(added).unwrap();
        let small = saturate(&base);
        let large = saturate(&bigger);
        for s in small.statements() {
            prop_assert!(large.contains(s));
        }
    }

    #[test]
    fn closure_size_is_bounded(base in sys_and_kb(5)) {
        let sys = *base.system();
        let closure = saturate(&base);
        prop_assert!(closure.len() <= 2 * sys.size() * 2 * TERMS.len() * TERMS.len());
        let mut terms = std::collections::HashSet::new();
        for s in base.statements() {
            terms.insert(s.subject.clone());
            terms.insert(s.predicate.clone());
        }
        for s in closure.statements() {
            prop_assert!(terms.contains(&s.subject) && terms.contains(&s.predicate));
        }
    }

    #[test]
    fn negations_come_only_from_contraposition_and_chains(base in sys_and_kb(4)) {
        let closure = saturate(&base);
        for entry in closure.entries() {
            for step in std::iter::once(&entry.step).chain(&entry.alternates) {
                if step.rule.is_figure_rule() || step.rule == Rule::ChainA {
                    prop_assert!(!entry.statement.negated, "{} by {}", entry.statement, step.rule);
                }
                if entry.statement.negated {
                    prop_assert!(matches!(step.rule, Rule::Premise | Rule::ContraPos | Rule::ChainE), "{}", step.rule);
                }
            }
        }
    }

    #[test]
    fn justifications_are_well_founded(base in sys_and_kb(4)) {
        let closure = saturate(&base);
        for (i, entry) in closure.entries().iter().enumerate() {
            for step in std::iter::once(&entry.step).chain(&entry.alternates) {
                prop_assert_eq!(step.rule == Rule::Premise, step.premises.is_empty());
                for &p in &step.premises {
                    prop_assert!(p < i, "entry {} cites {}", i, p);
                }
            }
        }
        for entry in closure.entries() {
            let tree = closure.proof(&entry.statement).unwrap();
            prop_assert!(tree.depth() <= closure.len());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn derived_statements_are_entailed(base in sys_and_kb(3)) {
        let closure = saturate(&base);
        let derived: Vec<Statement> = closure.statements().cloned().collect();
        let search = ModelSearch::new(Semantics::default(), 3);
        let verdicts = search.entailed(base.statements(), &derived).unwrap();
        for (s, ok) in derived.iter().zip(verdicts) {
            prop_assert!(ok, "{} not entailed", s);
        }
    }

    #[test]
    fn entailment_is_monotone_in_premises(base in kb(QuantitySystem::five(), 2), goal in statement(QuantitySystem::five()), extra in statement(QuantitySystem::five())) {
        let search = ModelSearch::new(Semantics::default(), 3);
        let mut premises = base.statements().to_vec();
        if search.entails(&premises, &goal).unwrap() {
            premises.push(extra);
            prop_assert!(search.entails(&premises, &goal).unwrap());
        }
    }
}
