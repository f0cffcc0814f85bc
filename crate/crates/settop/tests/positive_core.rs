//! Oracle checks for the positive-formula compiler: exhaustive agreement
//! with brute force on small formulas, sampled agreement on larger ones,
//! and agreement of the primitive lowering.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use settop::hf_universe::{cumulative_level, HfObject};
use settop::positive_core::*;

fn oracle_run(max_size: usize) -> OracleReport {
    let cfg = OracleConfig { max_size, max_arity: 2, universe_rank: 3, max_class_size: 2, budget: None };
    check_oracle_equivalence(&cfg).unwrap()
}

#[test]
fn exhaustive_agreement_through_size_three() {
    let mut frozen_term_sizes = Vec::new();
    for size in 1..=3 {
        let r = oracle_run(size);
        assert!(r.passes(), "{r:?}");
        assert_eq!(r.formulas_checked as u128, r.formulas_total);
        assert_eq!(r.complete_through_size, size);
        frozen_term_sizes.push(r.max_term_size);
    }
    assert_eq!(frozen_term_sizes, [8, 36, 99]);
}

#[test]
fn formula_counts_by_size() {
    // One free variable and one class parameter. Size 1: the 2 atomic
    // formulas on x1. Size 2: 3 binders, each over the 8 atomic formulas on
    // {x1, z1}. Size 3: 8 binary formulas of two atoms, plus 3 binders over
    // the 90 size-2 formulas at depth 1 (5 binders times 18 atoms).
    let counts: Vec<u128> = (1..=3).map(|s| count_formulas(s, 1, 1)).collect();
    assert_eq!(counts, [2, 2 + 24, 2 + 24 + 8 + 270]);
}

#[test]
fn specification_examples() {
    let hf = |s: &str| -> HfObject { s.parse().unwrap() };
    let phi = parse_formula("(some z x1 (in z x2))").unwrap();
    let got = specification_set(&phi, &hf("{{}, {{}}, {{{}}}}"), &[hf("{{{}}}")], &[]).unwrap();
    assert_eq!(got, hf("{{{{}}}}"));
    let phi = parse_formula("(or (= x1 x2) (in x2 x1))").unwrap();
    let got = specification_set(&phi, &hf("{{}, {{}}, {{{}}}}"), &[hf("{}")], &[]).unwrap();
    assert_eq!(got, hf("{{}, {{}}}"));
}

fn random_instance(seed: u64, max_size: usize) -> (Formula, Universe) {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let u3 = cumulative_level(3);
    let m = rng.gen_range(1..=2);
    let size = rng.gen_range(1..=max_size);
    let phi = random_formula(&mut rng, size, m, 1);
    let sets = (0..m).map(|_| u3[rng.gen_range(0..u3.len())].clone()).collect();
    let class: Vec<HfObject> = u3.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect();
    let class = if class.is_empty() { vec![u3[0].clone()] } else { class };
    (phi, Universe::new(sets, vec![class]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn sampled_agreement_up_to_size_seven(seed in any::<u64>()) {
        let (phi, u) = random_instance(seed, 7);
        prop_assert_eq!(compile_and_eval(&phi, &u).unwrap(), brute_force_extension(&phi, &u).unwrap(), "{}", phi);
    }

    #[test]
    fn lowering_preserves_values(seed in any::<u64>()) {
        let (phi, u) = random_instance(seed, 4);
        let t = compile_formula(&phi, u.sets.len()).unwrap().instantiate(&u).unwrap();
        let low = lower_to_primitives(&t);
        prop_assert!(low.is_primitive());
        prop_assert_eq!(eval_term(&low), eval_term(&t));
    }

    #[test]
    fn printing_and_parsing_round_trip(seed in any::<u64>()) {
        let (phi, _) = random_instance(seed, 9);
        prop_assert_eq!(parse_formula(&phi.to_string()).unwrap(), phi);
    }
}
