//! Property tests for the algebraic invariants: involutions, commuting
//! diagrams between word operations and graph operations, and round trips.

use proptest::prelude::*;

use quasichain::generators::{random_enhanced_word, random_quasi_chain};
use quasichain::graph::{find_embedding, is_chain_graph, two_p2, EmbedMode};
use quasichain::letterrep::{
    decode_enhanced, encode_enhanced, word_complement, word_reflect, EnhancedWord,
};
use quasichain::permute::{qp_graph, recover_permutation, Permutation};
use quasichain::BipartiteGraph;

/// Deterministic companion to the proptest below: the chain verdict agrees
/// with the 2P2 embedding search on every bipartite graph with at most 8
/// vertices, over all part splits.
#[test]
fn chain_verdict_equals_2p2_search_exhaustively() {
    use quasichain::batch;
    use quasichain::generators::{mask_count, part_splits};
    for (a, b) in part_splits(8) {
        let disagreements = batch::filter_map_range(0..mask_count(a, b), |mask| {
            let g = BipartiteGraph::from_mask(a, b, mask);
            let chain = is_chain_graph(&g).is_chain();
            let found = g.vertex_count() >= 4
                && (find_embedding(&two_p2(), &g, EmbedMode::Colored).unwrap().is_some()
                    || find_embedding(&two_p2().reflect(), &g, EmbedMode::Colored)
                        .unwrap()
                        .is_some());
            (chain == found).then_some(mask)
        });
        assert!(disagreements.is_empty(), "({a},{b}): masks {disagreements:?}");
    }
}

fn graph_strategy(max_part: usize) -> impl Strategy<Value = BipartiteGraph> {
    (0..=max_part, 0..=max_part, any::<u64>()).prop_map(|(a, b, bits)| {
        let mask = if a * b == 0 { 0 } else { bits & ((1u64 << (a * b)) - 1) };
        BipartiteGraph::from_mask(a, b, mask)
    })
}

fn word_strategy(max_len: usize) -> impl Strategy<Value = EnhancedWord> {
    (0..=max_len, any::<u64>()).prop_map(|(n, seed)| {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        random_enhanced_word(n, 0.4, &mut rng)
    })
}

proptest! {
    #[test]
    fn complement_is_an_involution(g in graph_strategy(7)) {
        prop_assert_eq!(g.bipartite_complement().bipartite_complement(), g);
    }

    #[test]
    fn symmetric_difference_commutes_and_associates(
        (a, b, m1, m2, m3) in (0usize..=5, 0usize..=5, any::<u64>(), any::<u64>(), any::<u64>())
    ) {
        let cut = |bits: u64| if a * b == 0 { 0 } else { bits & ((1u64 << (a * b)) - 1) };
        let g1 = BipartiteGraph::from_mask(a, b, cut(m1));
        let g2 = BipartiteGraph::from_mask(a, b, cut(m2));
        let g3 = BipartiteGraph::from_mask(a, b, cut(m3));
        let sym = |x: &BipartiteGraph, y: &BipartiteGraph| x.symmetric_difference(y).unwrap();
        prop_assert_eq!(sym(&g1, &g2), sym(&g2, &g1));
        prop_assert_eq!(sym(&sym(&g1, &g2), &g3), sym(&g1, &sym(&g2, &g3)));
    }

    #[test]
    fn chain_verdict_agrees_with_2p2_search(g in graph_strategy(5)) {
        let chain = is_chain_graph(&g).is_chain();
        // hosts smaller than 2P2 cannot contain it at all
        let found = g.vertex_count() >= 4
            && (find_embedding(&two_p2(), &g, EmbedMode::Colored).unwrap().is_some()
                || find_embedding(&two_p2().reflect(), &g, EmbedMode::Colored).unwrap().is_some());
        prop_assert_eq!(chain, !found);
    }

    #[test]
    fn decode_encode_round_trip((n, seed) in (1usize..=30, any::<u64>())) {
        let g = random_quasi_chain(n, 0.35, seed).unwrap();
        let enc = encode_enhanced(&g).unwrap();
        prop_assert!(enc.round_trips_to(&g));
    }

    #[test]
    fn word_complement_realizes_graph_complement(w in word_strategy(24)) {
        let g = decode_enhanced(&w).unwrap().graph;
        let gc = decode_enhanced(&word_complement(&w)).unwrap().graph;
        let (na, nb) = (g.size_a(), g.size_b());
        let expect = g.bipartite_complement();
        for i in 0..na {
            for j in 0..nb {
                prop_assert_eq!(gc.has_edge(na - 1 - i, nb - 1 - j), expect.has_edge(i, j));
            }
        }
        prop_assert_eq!(
            decode_enhanced(&word_complement(&word_complement(&w))).unwrap().graph,
            g
        );
    }

    #[test]
    fn word_reflect_realizes_part_swap(w in word_strategy(24)) {
        let g = decode_enhanced(&w).unwrap().graph;
        let gr = decode_enhanced(&word_reflect(&w)).unwrap().graph;
        let (na, nb) = (g.size_a(), g.size_b());
        prop_assert_eq!((gr.size_a(), gr.size_b()), (nb, na));
        for i in 0..na {
            for j in 0..nb {
                prop_assert_eq!(gr.has_edge(nb - 1 - j, na - 1 - i), g.has_edge(i, j));
            }
        }
        prop_assert_eq!(
            decode_enhanced(&word_reflect(&word_reflect(&w))).unwrap().graph,
            g
        );
    }

    #[test]
    fn word_json_round_trip(w in word_strategy(24)) {
        prop_assert_eq!(EnhancedWord::from_json(&w.to_json()).unwrap(), w);
    }

    #[test]
    fn graph_json_round_trip(g in graph_strategy(7)) {
        prop_assert_eq!(BipartiteGraph::from_json(&g.to_canonical_json()).unwrap(), g);
    }

    #[test]
    fn recover_inverts_qp_graph(entries in proptest::collection::vec(0usize..100, 0..=12)) {
        // turn an arbitrary vector into a permutation by ranking
        let n = entries.len();
        let mut idx: Vec<usize> = (0..n).collect();
        idx.sort_by_key(|&i| (entries[i], i));
        let mut one_line = vec![0usize; n];
        for (rank, &i) in idx.iter().enumerate() {
            one_line[i] = rank + 1;
        }
        prop_assume!(n >= 1);
        let p = Permutation::new(one_line).unwrap();
        prop_assert_eq!(recover_permutation(&qp_graph(&p)).unwrap(), p);
    }
}
