//! Property-based tests: format round-trips, agreement between the two
//! independent solvers, and invariants of the degree-sequence bounds.

use domino::error::Error;
use domino::exact::{domatic_ktuple_exact, gamma_ktuple_bnb, gamma_ktuple_bruteforce};
use domino::graph::{
    emit_edge_list, emit_graph6, parse_edge_list, parse_graph6, DegreeProfile, Graph,
    GraphBuilder,
};
use domino::slater::{double_slater, slater_number};
use proptest::prelude::*;

/// Builds the graph on `n` vertices whose edge set is the low bits of
/// `mask`, one bit per unordered pair in lexicographic order.
fn graph_from_mask(n: usize, mask: u32) -> Graph {
    let mut b = GraphBuilder::new(n);
    let mut bit = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            if mask >> bit & 1 == 1 {
                b.add_edge(u, v);
            }
            bit += 1;
        }
    }
    b.build()
}

fn small_graph() -> impl Strategy<Value = Graph> {
    (1usize..=7, any::<u32>()).prop_map(|(n, mask)| graph_from_mask(n, mask))
}

proptest! {
    #[test]
    fn graph6_round_trips(g in small_graph()) {
        let text = emit_graph6(&g);
        let back = parse_graph6(&text).unwrap();
        prop_assert_eq!(back.n(), g.n());
        prop_assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn edge_list_round_trips(g in small_graph()) {
        let text = emit_edge_list(&g);
        let back = parse_edge_list(&text).unwrap();
        prop_assert_eq!(back.n(), g.n());
        prop_assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn solvers_agree_and_certify(g in small_graph(), k in 1usize..=3) {
        let brute = gamma_ktuple_bruteforce(&g, k);
        let bnb = gamma_ktuple_bnb(&g, k);
        if g.min_degree() + 1 < k {
            let both_undefined = matches!(brute, Err(Error::Undefined { .. }))
                && matches!(bnb, Err(Error::Undefined { .. }));
            prop_assert!(both_undefined);
        } else {
            let brute = brute.unwrap();
            let bnb = bnb.unwrap();
            prop_assert_eq!(brute.value, bnb.value);
            brute.validate(&g).unwrap();
            bnb.validate(&g).unwrap();
            prop_assert!(bnb.lower_bound <= bnb.value);
        }
    }

    #[test]
    fn degree_bounds_chain(g in small_graph()) {
        let p = DegreeProfile::new(&g);
        let sl = slater_number(&p);
        prop_assert!(sl <= g.n().max(1));
        if g.n() >= 2 && g.min_degree() >= 1 {
            let sl2 = double_slater(&p).unwrap();
            prop_assert!(sl < sl2, "the two bounds never coincide");
            prop_assert!(sl2 <= g.n());
            prop_assert!(sl2 >= (2 * g.n()).div_ceil(1 + p.max_degree));
            // The bound never exceeds the brute-force optimum.
            prop_assert!(sl2 <= gamma_ktuple_bruteforce(&g, 2).unwrap().value);
        } else {
            prop_assert!(double_slater(&p).is_err());
        }
    }

    #[test]
    fn domatic_partitions_validate(g in small_graph()) {
        let d = domatic_ktuple_exact(&g, 1).unwrap();
        d.validate(&g).unwrap();
        prop_assert!(d.value >= 1);
        prop_assert!(d.value <= g.min_degree() + 1);
        prop_assert_eq!(d.partition.len(), d.value);
    }
}
