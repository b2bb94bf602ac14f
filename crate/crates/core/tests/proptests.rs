//! Property tests: the solver against the brute-force oracle on arbitrary
//! edge lists, file-format round trips, the 2-edge closed forms, and
//! structural sanity of rule selection.

use hs3::branching::{branching_number, dominates, BranchingVector};
use hs3::hypergraph::{Edge, Hypergraph};
use hs3::io;
use hs3::oracle::oracle_min;
use hs3::rules::{select_rule, Instance, RuleId};
use hs3::solver::{solve, verify_hitting, SolveConfig};
use proptest::prelude::*;
use std::collections::BTreeSet;

fn edge_list(max_n: u32, max_edges: usize) -> impl Strategy<Value = (u32, Vec<BTreeSet<u32>>)> {
    (4..=max_n).prop_flat_map(move |n| {
        let edge = prop::collection::btree_set(1..=n, 1..=3);
        (Just(n), prop::collection::vec(edge, 1..=max_edges))
    })
}

fn build(n: u32, edges: &[BTreeSet<u32>]) -> Hypergraph {
    let es: BTreeSet<Edge> = edges
        .iter()
        .map(|s| Edge::new(s.iter().copied().collect::<Vec<_>>()))
        .collect();
    Hypergraph::new((1..=n).collect(), es)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn solver_matches_oracle_everywhere((n, edges) in edge_list(10, 24)) {
        let g = build(n, &edges);
        let min = oracle_min(&g, None).unwrap();
        for k in 0..=(min as i64 + 1) {
            let r = solve(&g, k, &SolveConfig { trace: true, ..SolveConfig::default() });
            prop_assert_eq!(r.decision, k >= min as i64, "k={} min={}", k, min);
            prop_assert!(r.violations.is_empty(), "k={}: {:?}", k, r.violations);
            match &r.certificate {
                Some(c) => {
                    prop_assert!(r.decision);
                    prop_assert!(verify_hitting(&g, c));
                    prop_assert!(c.len() as i64 <= k);
                }
                None => prop_assert!(!r.decision),
            }
        }
    }

    #[test]
    fn files_round_trip((n, edges) in edge_list(12, 30), k in 0i64..50) {
        let g = build(n, &edges);
        let inst = io::parse(&io::serialize(&g, k)).unwrap();
        prop_assert_eq!(inst.graph, g);
        prop_assert_eq!(inst.k, k);
    }

    // on a simple graph, taking v removes its 2-edges, while excluding v
    // shrinks its 3-edges into distinct fresh 2-edges
    #[test]
    fn two_edge_counts_follow_closed_forms((n, edges) in edge_list(10, 24)) {
        let g = build(n, &edges).minimalize();
        let m2 = g.two_section().m2;
        for &v in g.vertices().clone().iter() {
            let st = g.stats(v).unwrap();
            let taken = g.plus(v).unwrap();
            prop_assert_eq!(taken.two_section().m2, m2 - st.d2);
            if g.edges_with(v).all(|e| e.len() > 1) {
                let excluded = g.minus(v).unwrap();
                prop_assert_eq!(excluded.two_section().m2, m2 - st.d2 + st.d3);
            }
        }
    }

    #[test]
    fn selected_rule_is_well_formed((n, edges) in edge_list(10, 20), k in 0i64..12) {
        let inst = Instance { graph: build(n, &edges), k };
        let app = select_rule(&inst);
        prop_assert_eq!(
            app.rule == RuleId::DoneYes,
            !inst.graph.has_edges(),
            "{:?}", app.rule
        );
        for child in &app.children {
            prop_assert!(inst.graph.apply_seq(&child.ops).is_ok(), "{:?}", app.rule);
            prop_assert!(child.k_delta <= 5);
        }
        match app.rule {
            RuleId::R1 | RuleId::R3 | RuleId::R4 | RuleId::R5 | RuleId::R6 => {
                prop_assert_eq!(app.children.len(), 1)
            }
            // minimalization rewrites the graph in place of vertex ops
            RuleId::R2 => {
                prop_assert_eq!(app.children.len(), 1);
                prop_assert!(app.children[0].ops.is_empty());
                prop_assert_eq!(app.children[0].k_delta, 0);
            }
            // component splits are driven by the solver off the binding
            RuleId::B7 => {
                prop_assert!(app.children.is_empty());
                prop_assert!(app.component.is_some());
            }
            RuleId::DoneYes | RuleId::DoneNo => prop_assert!(app.children.is_empty()),
            _ => prop_assert!((2..=3).contains(&app.children.len()), "{:?}", app.rule),
        }
    }

    #[test]
    fn domination_never_raises_the_root(
        a in prop::collection::vec(0.5f64..4.0, 1..4),
        b in prop::collection::vec(0.5f64..4.0, 1..4),
    ) {
        let (a, b) = (BranchingVector(a), BranchingVector(b));
        if dominates(&a, &b) {
            let ra = branching_number(&a).unwrap();
            let rb = branching_number(&b).unwrap();
            prop_assert!(ra <= rb + 1e-9, "{} -> {}, {} -> {}", a, ra, b, rb);
        }
    }
}
