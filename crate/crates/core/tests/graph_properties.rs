use depoly::graph::{build_family, disjoint_union, enumerate_labeled_graphs, parse_graph6, FamilySpec, Graph};
use depoly::graph_poly::{
    clique_polynomial, codependent_counts, dependence_polynomial, family_closed_form, independence_counts,
    independence_polynomial, property_polynomial, PropertyPredicate,
};
use depoly::Polynomial;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n, any::<u64>()).prop_map(|(n, bits)| {
        let pairs = n * n.saturating_sub(1) / 2;
        let mask = if pairs >= 64 {
            bits
        } else {
            bits & ((1u64 << pairs) - 1)
        };
        Graph::from_edge_mask(n, mask).unwrap()
    })
}

// Counts edge-free subsets by checking the edge list directly.
fn independence_oracle(g: &Graph) -> Vec<u64> {
    let n = g.order();
    let edges = g.edges();
    let mut counts = vec![0u64; n + 1];
    for s in 0u32..(1 << n) {
        if edges.iter().all(|&(u, v)| s >> u & 1 == 0 || s >> v & 1 == 0) {
            counts[s.count_ones() as usize] += 1;
        }
    }
    counts
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trips(g in graph(14)) {
        let text = g.to_graph6();
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn independence_counts_match_subset_enumeration(g in graph(12)) {
        prop_assert_eq!(independence_counts(&g), independence_oracle(&g));
    }

    #[test]
    fn dependence_and_independence_partition_all_subsets(g in graph(14)) {
        let n = g.order();
        let d = dependence_polynomial(&g);
        let i = independence_polynomial(&g);
        prop_assert_eq!(&d + &i, Polynomial::one_plus_x_pow(n));
        prop_assert_eq!(d.coeff(0), 0.into());
        prop_assert_eq!(d.coeff(1), 0.into());
        prop_assert_eq!(d.coeff(2), g.edge_count().into());
    }

    #[test]
    fn codependent_counts_reverse_dependence(g in graph(12)) {
        let n = g.order();
        let d = dependence_polynomial(&g).padded(n + 1);
        let dbar = codependent_counts(&g).counts;
        for k in 0..=n {
            prop_assert_eq!(&dbar[k], &d[n - k]);
        }
    }

    #[test]
    fn independence_is_multiplicative_over_disjoint_union(g in graph(7), h in graph(7)) {
        let u = disjoint_union(&g, &h).unwrap();
        prop_assert_eq!(
            independence_polynomial(&u),
            &independence_polynomial(&g) * &independence_polynomial(&h)
        );
    }

    #[test]
    fn cliques_are_independent_sets_of_the_complement(g in graph(10)) {
        prop_assert_eq!(clique_polynomial(&g).unwrap(), independence_polynomial(&g.complement()));
    }

    #[test]
    fn negated_predicate_complements_the_generating_polynomial(g in graph(10)) {
        let forest = PropertyPredicate::forest();
        let sum = &property_polynomial(&g, &forest).unwrap() + &property_polynomial(&g, &forest.negated()).unwrap();
        prop_assert_eq!(sum, Polynomial::one_plus_x_pow(g.order()));
    }
}

#[test]
fn family_closed_form_matches_construction() {
    let mut checked = 0;
    for n in 2..=10 {
        for spec in FamilySpec::all_with_order(n) {
            let g = build_family(&spec).unwrap();
            assert_eq!(
                family_closed_form(&spec).unwrap(),
                dependence_polynomial(&g),
                "{spec:?}"
            );
            checked += 1;
        }
    }
    assert!(checked > 100);
}

#[test]
fn labeled_enumeration_sizes() {
    for n in 0..=5 {
        let count = enumerate_labeled_graphs(n).unwrap().count();
        assert_eq!(count, 1 << (n * n.saturating_sub(1) / 2));
    }
}
