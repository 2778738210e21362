use proptest::prelude::*;

use maxpi::enumeration::{enumerate_connected_supersets, two_table_solve, TableInstance};
use maxpi::io::{emit_graph, parse_graph};
use maxpi::oracle::{brute_force_max_induced, oracle_is_member};
use maxpi::recognition::{clique_path, is_chordal, is_interval, separator_test_chordal};
use maxpi::solver::{solve, ConstantSchedule, Mode};
use maxpi::{Graph, PiClass, VertexSet};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn auto_is_sound_and_optimal(g in graph(9), interval in any::<bool>()) {
        let class = if interval { PiClass::interval() } else { PiClass::chordal() };
        let sol = solve(&g, &class, &ConstantSchedule::default(), Mode::Auto).unwrap();
        prop_assert!(oracle_is_member(&g.induced_subgraph(&sol.vertices).unwrap(), &class).unwrap());
        prop_assert_eq!(sol.size(), brute_force_max_induced(&g, &class).unwrap().len());
    }

    #[test]
    fn recognition_matches_oracle(g in graph(9)) {
        prop_assert_eq!(is_chordal(&g), oracle_is_member(&g, &PiClass::chordal()).unwrap());
        prop_assert_eq!(is_interval(&g), oracle_is_member(&g, &PiClass::interval()).unwrap());
        if let Some(path) = clique_path(&g) {
            for v in 0..g.n() {
                let idx: Vec<usize> = (0..path.len()).filter(|&i| path[i].contains(v)).collect();
                prop_assert!(idx.windows(2).all(|w| w[1] == w[0] + 1));
            }
        }
    }

    #[test]
    fn chordal_separator_test_is_membership(g in graph(8)) {
        prop_assert_eq!(separator_test_chordal(&g, &VertexSet::new()).unwrap(), is_chordal(&g));
    }

    #[test]
    fn round_trip(g in graph(12)) {
        prop_assert_eq!(parse_graph(&emit_graph(&g)).unwrap(), g);
    }

    #[test]
    fn supersets_contain_guess(g in graph(7), seed in any::<u64>()) {
        prop_assume!(g.n() > 0);
        let p = VertexSet::singleton((seed as usize) % g.n());
        for size in 1..=g.n() {
            for nbr in 0..=g.n() - size {
                for x in enumerate_connected_supersets(&g, &p, size, nbr).unwrap() {
                    prop_assert!(p.is_subset(&x));
                    prop_assert_eq!(x.len(), size);
                    prop_assert_eq!(g.neighborhood(&x, false).unwrap().len(), nbr);
                    prop_assert!(g.is_connected_set(&x));
                }
            }
        }
    }

    #[test]
    fn two_table_finds_planted_pairs(
        cols1 in proptest::collection::vec(proptest::collection::vec(0u8..=1, 6), 1..30),
        cols2 in proptest::collection::vec(proptest::collection::vec(0u8..=1, 6), 1..30),
        pick in any::<(usize, usize)>(),
    ) {
        let (i, j) = (pick.0 % cols1.len(), pick.1 % cols2.len());
        let target: Vec<u8> = cols1[i].iter().zip(&cols2[j]).map(|(a, b)| a + b).collect();
        let inst = TableInstance { k: 6, cols1, cols2, target };
        let (a, b) = two_table_solve(&inst).unwrap().expect("planted pair exists");
        prop_assert!((a, b) <= (i, j));
        prop_assert!(inst.cols1[a].iter().zip(&inst.cols2[b]).zip(&inst.target).all(|((x, y), t)| x + y == *t));
    }
}
