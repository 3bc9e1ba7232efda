//! Property-based tests: structural invariants that must hold for arbitrary
//! inputs, not just the named corpus.

use coxco::analyze::{euler_characteristic, is_two_dimensional, subset_euler_characteristic};
use coxco::coxeter::{BondOrder, CoxeterSystem, GeneratorSubset};
use coxco::formats::{
    parse_coxeter_file, parse_presentation_file, render_coxeter_file, render_presentation_file,
};
use coxco::graph::SimpleGraph;
use coxco::smallcancel::{
    piece_report, sample_cyclically_reduced, symmetrize, wilson_interval, CyclicWordSampler,
    Presentation, Word, WILSON_Z95,
};
use proptest::collection::vec;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// An arbitrary bond order drawn from the small values plus infinity.
fn bond_order() -> impl Strategy<Value = BondOrder> {
    prop_oneof![
        (2u32..=8).prop_map(BondOrder::Finite),
        Just(BondOrder::Infinity),
    ]
}

/// A Coxeter system of the given rank with arbitrary orders.
fn coxeter_system(rank: usize) -> impl Strategy<Value = CoxeterSystem> {
    let pair_count = rank * (rank - 1) / 2;
    vec(bond_order(), pair_count).prop_map(move |orders| {
        let mut pairs = Vec::with_capacity(orders.len());
        let mut next = orders.into_iter();
        for i in 0..rank {
            for j in (i + 1)..rank {
                pairs.push((i, j, next.next().unwrap()));
            }
        }
        CoxeterSystem::from_pairs(rank, &pairs).expect("generated orders are valid")
    })
}

/// Letters of a not-necessarily-reduced word over `m` generators.
fn raw_word(m: i32, max_len: usize) -> impl Strategy<Value = Vec<i32>> {
    vec(
        (1..=m).prop_flat_map(|g| prop_oneof![Just(g), Just(-g)]),
        1..=max_len,
    )
}

proptest! {
    #[test]
    fn restriction_composes(sys in coxeter_system(6), mask_a in 0u8..64, mask_b in 0u8..64) {
        // Restricting to A and then to (B within A) equals restricting to the
        // composed subset directly.
        let a: Vec<usize> = (0..6).filter(|i| mask_a & (1 << i) != 0).collect();
        let sub_a = GeneratorSubset::new(a.iter().copied());
        let restricted = sys.restrict(&sub_a).unwrap();

        let b_local: Vec<usize> = (0..a.len()).filter(|i| mask_b & (1 << i) != 0).collect();
        let sub_b_local = GeneratorSubset::new(b_local.iter().copied());
        let twice = restricted.restrict(&sub_b_local).unwrap();

        let composed: Vec<usize> = b_local.iter().map(|&k| a[k]).collect();
        let direct = sys.restrict(&GeneratorSubset::new(composed)).unwrap();
        prop_assert_eq!(twice, direct);
    }

    #[test]
    fn restriction_characteristic_matches_subset_formula(
        sys in coxeter_system(6),
        mask in 0u8..64,
    ) {
        let members: Vec<usize> = (0..6).filter(|i| mask & (1 << i) != 0).collect();
        let subset = GeneratorSubset::new(members);
        let restricted = sys.restrict(&subset).unwrap();
        prop_assert_eq!(
            euler_characteristic(&restricted),
            subset_euler_characteristic(&sys, &subset)
        );
    }

    #[test]
    fn two_dimensionality_is_hereditary(sys in coxeter_system(6), mask in 0u8..64) {
        // Any standard subgroup of a two-dimensional system is itself
        // two-dimensional: the triples of the subset are triples of the whole.
        if is_two_dimensional(&sys).two_dimensional {
            let members: Vec<usize> = (0..6).filter(|i| mask & (1 << i) != 0).collect();
            let restricted = sys.restrict(&GeneratorSubset::new(members)).unwrap();
            prop_assert!(is_two_dimensional(&restricted).two_dimensional);
        }
    }

    #[test]
    fn induced_graphs_inherit_structure(edges in vec((0usize..8, 0usize..8), 0..20), mask in 0u8..=255) {
        let mut graph = SimpleGraph::new(8);
        for (u, v) in edges {
            if u != v {
                graph.add_edge(u, v);
            }
        }
        let members: Vec<usize> = (0..8).filter(|i| mask & (1 << i) != 0).collect();
        let induced = graph.induced(&members);
        prop_assert_eq!(induced.vertex_count(), members.len());
        prop_assert!(induced.edge_count() <= graph.edge_count());
        // Induced adjacency agrees with the original.
        for (a, &va) in members.iter().enumerate() {
            for (b, &vb) in members.iter().enumerate().skip(a + 1) {
                prop_assert_eq!(induced.has_edge(a, b), graph.has_edge(va, vb));
            }
        }
        let shape = induced.shape();
        if shape.tree {
            prop_assert!(shape.connected);
            prop_assert_eq!(induced.edge_count() + 1, induced.vertex_count());
        }
    }

    #[test]
    fn reduction_is_idempotent_and_shrinking(letters in raw_word(3, 24)) {
        let word = Word::from_letters(letters.iter().copied()).unwrap();
        let free = word.free_reduce();
        let cyclic = word.cyclic_reduce();
        prop_assert!(free.is_reduced());
        prop_assert!(cyclic.is_cyclically_reduced());
        prop_assert_eq!(free.free_reduce(), free.clone());
        prop_assert_eq!(cyclic.cyclic_reduce(), cyclic.clone());
        prop_assert!(cyclic.len() <= free.len());
        prop_assert!(free.len() <= word.len());
        // Parity of the length never changes under cancellation.
        prop_assert_eq!(free.len() % 2, word.len() % 2);
    }

    #[test]
    fn symmetrized_closure_is_closed(letters in raw_word(2, 10)) {
        let relator = Word::from_letters(letters.iter().copied()).unwrap().cyclic_reduce();
        prop_assume!(!relator.is_empty());
        let p = Presentation::new(2, vec![relator.clone()]).unwrap();
        let closure = symmetrize(&p);
        let elements = closure.elements();
        prop_assert_eq!(closure.instance_count(), 2 * relator.len());
        for element in elements {
            prop_assert!(element.is_cyclically_reduced());
            prop_assert!(elements.binary_search(&element.inverse()).is_ok());
            for r in 0..element.len() {
                prop_assert!(elements.binary_search(&element.rotated(r)).is_ok());
            }
        }
    }

    #[test]
    fn piece_ratios_are_sane(seed in 0u64..1000) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let relators: Vec<Word> = (0..2).map(|_| sample_cyclically_reduced(2, 12, &mut rng)).collect();
        let p = Presentation::new(2, relators).unwrap();
        let report = piece_report(&p);
        for (stats, relator) in report.relators.iter().zip(p.relators()) {
            prop_assert!(stats.max_piece_length <= relator.len());
            let expected_ratio = coxco::rational::rat(
                stats.max_piece_length as i64,
                relator.len() as i64,
            );
            prop_assert_eq!(&stats.ratio, &expected_ratio);
        }
    }

    #[test]
    fn sampler_respects_its_contract(seed in 0u64..500, m in 2usize..4, l in 1usize..30) {
        let sampler = CyclicWordSampler::new(m, l);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let word = sampler.sample(&mut rng);
        prop_assert!(word.is_cyclically_reduced());
        prop_assert!(!word.is_empty());
        prop_assert!(word.len() <= l);
        for &letter in word.letters() {
            prop_assert!(letter != 0 && letter.unsigned_abs() as usize <= m);
        }
    }

    #[test]
    fn coxeter_files_round_trip(sys in coxeter_system(5)) {
        let rendered = render_coxeter_file(&sys);
        prop_assert_eq!(parse_coxeter_file(&rendered).unwrap(), sys);
    }

    #[test]
    fn presentation_files_round_trip(seeds in vec(0u64..10_000, 1..4)) {
        let relators: Vec<Word> = seeds
            .iter()
            .map(|&s| sample_cyclically_reduced(2, 15, &mut ChaCha8Rng::seed_from_u64(s)))
            .collect();
        let p = Presentation::new(2, relators).unwrap();
        let rendered = render_presentation_file(&p);
        let parsed = parse_presentation_file(&rendered).unwrap();
        prop_assert_eq!(parsed.presentation, p);
        prop_assert!(parsed.warnings.is_empty());
    }

    #[test]
    fn wilson_interval_brackets_the_estimate(successes in 0u32..=100, extra in 0u32..100) {
        let trials = successes + extra.max(1);
        let (low, high) = wilson_interval(successes, trials, WILSON_Z95);
        let p = f64::from(successes) / f64::from(trials);
        prop_assert!((0.0..=1.0).contains(&low));
        prop_assert!((0.0..=1.0).contains(&high));
        prop_assert!(low <= p + 1e-12);
        prop_assert!(p <= high + 1e-12);
    }
}
