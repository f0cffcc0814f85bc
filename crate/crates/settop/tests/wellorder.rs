//! Property checks for well-orders from choice functions and for finite
//! order arithmetic.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use settop::finite_topology::PointSet;
use settop::wellorder::*;

/// The order read off by repeatedly applying `f` to what is left.
fn oracle_order(f: &ChoiceFunction) -> Vec<usize> {
    let n = f.carrier();
    let mut left: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    while !left.is_empty() {
        let b = PointSet::from_indices(n, &left).unwrap();
        let x = f.choose(&b).unwrap();
        out.push(x);
        left.retain(|&y| y != x);
    }
    out
}

fn permutation(max: usize) -> impl Strategy<Value = FiniteOrder> {
    (0..=max)
        .prop_flat_map(|n| Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|v| FiniteOrder::new(v).unwrap())
}

proptest! {
    #[test]
    fn chain_order_matches_the_pick_sequence(n in 1usize..=5, seed in any::<u64>()) {
        let f = ChoiceFunction::random(n, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        let w = wellorder_from_choice(&f).unwrap();
        prop_assert!(w.bijective);
        prop_assert!(w.order.check_invariants().is_ok());
        prop_assert!(w.chain.check(&f).is_ok());
        prop_assert_eq!(&w.order.order, &oracle_order(&f));
        prop_assert_eq!(w.chain.sets.len(), n);
    }

    #[test]
    fn choice_files_round_trip(n in 1usize..=4, seed in any::<u64>()) {
        let f = ChoiceFunction::random(n, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        let text = serde_json::to_string(&f.to_file()).unwrap();
        let back = ChoiceFunction::from_file(&serde_json::from_str(&text).unwrap()).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn chain_embedding_recovers_the_order(w in permutation(6)) {
        let chain = chain_embedding(&w).unwrap();
        prop_assert_eq!(order_from_chain(&chain).unwrap(), w);
    }

    #[test]
    fn arithmetic_lengths_and_invariants(a in permutation(4), b in permutation(4)) {
        let s = order_sum(&a, &b);
        let p = order_product(&a, &b);
        prop_assert_eq!(s.len(), a.len() + b.len());
        prop_assert_eq!(p.len(), a.len() * b.len());
        prop_assert!(s.check_invariants().is_ok() && p.check_invariants().is_ok());
        for x in 0..a.len() {
            for y in 0..a.len() {
                prop_assert_eq!(s.le(x, y), a.le(x, y));
            }
        }
        prop_assert_eq!(order_sup(&[a.clone(), b.clone()]).len(), a.len().max(b.len()));
    }

    #[test]
    fn uniformization_is_a_functional_subrelation(r in proptest::collection::vec((0u8..5, 0u8..5), 0..12)) {
        let u = uniformize(&r);
        let dom = |rel: &[(u8, u8)]| rel.iter().map(|p| p.0).collect::<std::collections::BTreeSet<_>>();
        prop_assert_eq!(dom(&u), dom(&r));
        prop_assert!(u.iter().all(|p| r.contains(p)));
        prop_assert_eq!(u.len(), dom(&u).len());
    }
}
