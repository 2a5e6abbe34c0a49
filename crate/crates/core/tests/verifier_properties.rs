mod common;

use common::connected_graph;
use common::oracle::{naive_defendable, naive_is_proper, naive_slack};
use ksrd_core::labeling::max_label;
use ksrd_core::verifier::Defense;
use ksrd_core::{defendable, is_proper, min_capacity_slack, Graph, Labeling, Limits};
use proptest::prelude::*;

/// A graph, a `k <= min(4, n)` and a labeling biased towards zeros.
fn instance() -> impl Strategy<Value = (Graph, Labeling)> {
    connected_graph(1, 10)
        .prop_flat_map(|g| {
            let n = g.vertex_count();
            let labels = proptest::collection::vec(prop_oneof![3 => Just(0u32), 2 => 1u32..=5], n);
            (Just(g), 1..=n.min(4), labels)
        })
        .prop_map(|(g, k, raw)| {
            let max = max_label(&g, k);
            let f = Labeling::new(&g, k, raw.into_iter().map(|l| l.min(max)).collect()).unwrap();
            (g, f)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn agrees_with_naive_oracle((g, f) in instance()) {
        let verdict = is_proper(&g, &f, Limits::default()).unwrap();
        prop_assert_eq!(verdict.proper, naive_is_proper(&g, &f));
        prop_assert_eq!(verdict.witness.is_some(), !verdict.proper);
        prop_assert_eq!(verdict.deficiency_set.is_some(), !verdict.proper);
    }

    #[test]
    fn witness_is_a_failing_pattern((g, f) in instance()) {
        let verdict = is_proper(&g, &f, Limits::default()).unwrap();
        if let Some(w) = verdict.witness {
            prop_assert_eq!(w.vertices().len(), f.k());
            prop_assert!(!naive_defendable(&g, &f, w.vertices()));
            match defendable(&g, &f, &w).unwrap() {
                Defense::Feasible(_) => prop_assert!(false, "witness was defendable"),
                Defense::Infeasible { hall_set } => {
                    prop_assert!(!hall_set.is_empty());
                    prop_assert!(hall_set.iter().all(|v| w.vertices().contains(v)));
                }
            }
            let deficiency = verdict.deficiency_set.unwrap();
            prop_assert!(!naive_defendable(&g, &f, &deficiency));
        }
    }

    #[test]
    fn defense_assignment_is_valid((g, f) in instance(), picks in proptest::collection::vec(any::<prop::sample::Index>(), 1..=4)) {
        let n = g.vertex_count();
        let mut attacked: Vec<usize> = picks.iter().map(|i| i.index(n)).collect();
        attacked.sort_unstable();
        attacked.dedup();
        attacked.truncate(f.k());
        let pattern = ksrd_core::AttackPattern::new(attacked.clone(), f.k(), n).unwrap();
        match defendable(&g, &f, &pattern).unwrap() {
            Defense::Feasible(a) => {
                prop_assert!(a.is_valid_for(&g, &f, &pattern));
                prop_assert!(naive_defendable(&g, &f, &attacked));
            }
            Defense::Infeasible { .. } => prop_assert!(!naive_defendable(&g, &f, &attacked)),
        }
    }

    #[test]
    fn slack_matches_oracle_and_sign((g, f) in instance()) {
        let slack = min_capacity_slack(&g, &f, Limits::default()).unwrap();
        prop_assert_eq!(slack, naive_slack(&g, &f));
        let proper = is_proper(&g, &f, Limits::default()).unwrap().proper;
        prop_assert_eq!(slack.is_none_or(|s| s >= 0), proper);
    }

    #[test]
    fn properness_is_monotone_in_k((g, f) in instance()) {
        if is_proper(&g, &f, Limits::default()).unwrap().proper {
            for k in 1..f.k() {
                if let Ok(smaller) = f.with_k(&g, k) {
                    prop_assert!(is_proper(&g, &smaller, Limits::default()).unwrap().proper);
                }
            }
        }
    }

    #[test]
    fn properness_survives_added_edges((g, f) in instance(), pick in any::<prop::sample::Index>()) {
        let missing = g.non_edges();
        if !missing.is_empty() && is_proper(&g, &f, Limits::default()).unwrap().proper {
            let (u, v) = missing[pick.index(missing.len())];
            let h = g.with_edge(u, v).unwrap();
            let f2 = Labeling::new(&h, f.k(), f.labels().to_vec()).unwrap();
            prop_assert!(is_proper(&h, &f2, Limits::default()).unwrap().proper);
        }
    }
}
