use depoly::graph::Graph;
use depoly::graph_poly::dependence_counts;
use depoly::hessian::{hessian, hessian_all, matrix_a, quadratic_form, UlcHypothesis};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn fact(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

fn graph_with_edge(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n, any::<u64>()).prop_map(|(n, bits)| {
        let pairs = n * (n - 1) / 2;
        Graph::from_edge_mask(n, (bits & ((1u64 << pairs) - 1)) | 1).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn hessian_matches_count_formula(g in graph_with_edge(4, 10)) {
        let n = g.order();
        let d = dependence_counts(&g);
        let dbar = |j: usize| BigInt::from(d[n - j]);
        for rep in hessian_all(&g).unwrap() {
            let k = rep.k;
            let kb = BigInt::from(k);
            prop_assert_eq!(&rep.matrix.alpha, &(fact(n - k + 1) * dbar(k - 1)));
            prop_assert_eq!(&rep.matrix.beta, &(fact(n - k) * &kb * dbar(k)));
            prop_assert_eq!(&rep.matrix.gamma, &(fact(n - k - 1) * &kb * BigInt::from(k + 1) * dbar(k + 1)));
            let want_gap = BigRational::new(BigInt::from(k + 1) * BigInt::from(n - k + 1) * dbar(k - 1) * dbar(k + 1), BigInt::from(k) * BigInt::from(n - k))
                - BigRational::from_integer(dbar(k) * dbar(k));
            prop_assert_eq!(&rep.ulc_gap, &want_gap);
            let via_a = fact(n - k - 1).pow(2) * quadratic_form(&matrix_a(rep.r).unwrap(), &rep.histogram.as_bigints());
            prop_assert_eq!(&rep.det, &via_a);
        }
    }

    #[test]
    fn hypothesis_class_has_nonpositive_determinants(g in graph_with_edge(4, 9)) {
        let hyp = UlcHypothesis::new();
        prop_assume!(hyp.holds(&g));
        for rep in hessian_all(&g).unwrap() {
            prop_assert!(rep.det <= BigInt::from(0), "{} k = {}", g.to_graph6(), rep.k);
        }
    }
}

#[test]
fn edgeless_graphs_have_no_certificate() {
    assert!(hessian(&Graph::empty(5).unwrap(), 1).is_err());
}
