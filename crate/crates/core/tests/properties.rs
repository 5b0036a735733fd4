//! Property tests for the structural layers: canonical-form invariance
//! under relabeling, graph6 round trips, and convolution against disjoint
//! unions.

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use indsets::canon::canonical_form;
use indsets::constructions::disjoint_union;
use indsets::counting::{convolve, independence_vector};
use indsets::{graph6, Graph};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    let max_bits = max_n * (max_n - 1) / 2;
    (1..=max_n, prop::collection::vec(any::<bool>(), max_bits)).prop_map(|(n, bits)| {
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if bits[k] {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Graph::from_edge_list(n, &edges).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn canonical_form_is_relabeling_invariant(g in arb_graph(9), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
        perm.shuffle(&mut rng);
        let relabeled = g.relabel(&perm).unwrap();
        prop_assert_eq!(canonical_form(&g), canonical_form(&relabeled));
    }

    #[test]
    fn canonical_representative_is_a_fixed_point(g in arb_graph(8)) {
        let rep = g.canonicalize();
        prop_assert_eq!(rep.canonicalize(), rep);
    }

    #[test]
    fn graph6_roundtrip(g in arb_graph(16)) {
        let encoded = graph6::encode(&g).unwrap();
        prop_assert_eq!(graph6::decode(&encoded).unwrap(), g);
    }

    #[test]
    fn convolution_is_the_disjoint_union_vector(
        a in arb_graph(8),
        b in arb_graph(8),
    ) {
        let union = disjoint_union(&a, &b).unwrap();
        let direct = independence_vector(&union).unwrap();
        let product = convolve(
            &independence_vector(&a).unwrap(),
            &independence_vector(&b).unwrap(),
        ).unwrap();
        prop_assert_eq!(direct, product);
    }
}
