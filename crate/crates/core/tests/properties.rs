use proptest::prelude::*;

use cind::exact::{brute_force_oracle, max_induced_two_regular, SearchBudget};
use cind::families::random_clawfree_cubic;
use cind::graph::io::{emit_edgelist, emit_graph6, parse_edgelist, parse_graph6};
use cind::graph::{Graph, Multigraph};
use cind::greedy::greedy_two_regular;
use cind::matching::{maximum_matching, tutte_violator};
use cind::{is_two_regular_induced, TwoRegularCertificate};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges = pairs.zip(bits).filter(|&(_, b)| b).map(|(e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn same_edges(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.edges().eq(b.edges())
}

proptest! {
    #[test]
    fn graph6_round_trip(g in graph(40)) {
        prop_assert!(same_edges(&parse_graph6(&emit_graph6(&g)).unwrap(), &g));
    }

    #[test]
    fn edgelist_round_trip(g in graph(40)) {
        prop_assert!(same_edges(&parse_edgelist(&emit_edgelist(&g)).unwrap(), &g));
    }

    #[test]
    fn certificate_json_round_trip(g in graph(16)) {
        let (cert, _) = greedy_two_regular(&g);
        let back: TwoRegularCertificate = serde_json::from_str(&serde_json::to_string(&cert).unwrap()).unwrap();
        prop_assert_eq!(&back, &cert);
        prop_assert!(back.verify(&g).is_ok());
    }

    #[test]
    fn greedy_at_most_exact_equals_oracle(g in graph(11)) {
        let (cert, _) = greedy_two_regular(&g);
        let exact = max_induced_two_regular(&g, SearchBudget::unlimited());
        prop_assert!(exact.optimal);
        prop_assert!(cert.size() <= exact.size());
        prop_assert_eq!(exact.size(), brute_force_oracle(&g).unwrap());
    }

    #[test]
    fn exact_size_survives_relabeling(g in graph(12), seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let h = g.relabel(&perm);
        let a = max_induced_two_regular(&g, SearchBudget::unlimited()).size();
        let b = max_induced_two_regular(&h, SearchBudget::unlimited()).size();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn budgeted_search_still_certifies(g in graph(24), nodes in 1u64..50) {
        let res = max_induced_two_regular(&g, SearchBudget::new(Some(nodes), None).unwrap());
        prop_assert!(res.certificate.verify(&g).is_ok());
    }

    #[test]
    fn tutte_agrees_with_blossom(n in 1usize..=10, pairs in prop::collection::vec((0usize..10, 1usize..10), 0..20)) {
        let mut g = Multigraph::new(n);
        if n > 1 {
            for (u, d) in pairs {
                let u = u % n;
                g.add_edge(u, (u + 1 + d % (n - 1)) % n).unwrap();
            }
        }
        let m = maximum_matching(&g);
        prop_assert!(m.is_valid(&g));
        prop_assert_eq!(m.is_perfect(&g), tutte_violator(&g).unwrap().is_none());
    }

    #[test]
    fn verify_rejects_what_check_rejects(g in graph(12), mask in any::<u16>()) {
        let s: Vec<usize> = (0..g.order()).filter(|&v| mask >> v & 1 == 1).collect();
        let ok = s.iter().all(|&v| g.neighbors(v).iter().filter(|w| s.contains(w)).count() == 2);
        prop_assert_eq!(is_two_regular_induced(&g, &s).is_ok(), ok);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn clawfree_meets_threshold(half_t in 0usize..6, d in 0usize..6, seed in any::<u64>()) {
        prop_assume!(2 * half_t + d >= 2);
        if let Ok(g) = random_clawfree_cubic(2 * half_t, d, seed) {
            let res = cind::clawfree::construct_large_two_regular(&g).unwrap();
            prop_assert!(res.certificate.verify(&g).is_ok());
            prop_assert!(res.size() >= cind::clawfree::threshold(g.order()));
        }
    }
}
