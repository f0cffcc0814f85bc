//! Oracle checks for hereditarily finite objects, zeros, ordinals and the
//! pristine inner model.

use proptest::prelude::*;
use settop::finite_topology::KBound;
use settop::hf_universe::ordinals::{audit_ordinals, ordinals_by_filter};
use settop::hf_universe::*;

/// `U_r` built from bitmasks: `U_(r+1)` is every subset of `U_r`.
fn oracle_level(r: usize) -> Vec<HfObject> {
    let mut level: Vec<HfObject> = Vec::new();
    for _ in 0..r {
        let n = level.len();
        level = (0u64..1 << n)
            .map(|mask| HfObject::set((0..n).filter(|i| mask >> i & 1 == 1).map(|i| level[i].clone())))
            .collect();
        level.sort();
    }
    level
}

/// The von Neumann numeral `n`.
fn numeral(n: usize) -> HfObject {
    (0..n).fold(HfObject::empty(), |acc, _| acc.with(acc.clone()))
}

/// Ordinary transitive closure together with `x` itself.
fn oracle_trcl(x: &HfObject) -> HfObject {
    let mut out: Vec<HfObject> = x.elements().to_vec();
    let mut i = 0;
    while i < out.len() {
        let more: Vec<HfObject> = out[i].elements().iter().filter(|e| !out.contains(e)).cloned().collect();
        out.extend(more);
        i += 1;
    }
    HfObject::set(out)
}

fn level4() -> impl Strategy<Value = HfObject> {
    let pool = cumulative_level(4);
    (0..pool.len()).prop_map(move |i| pool[i].clone())
}

#[test]
fn cumulative_levels_match_the_bitmask_oracle() {
    for r in 0..=5 {
        assert_eq!(cumulative_level(r), oracle_level(r), "level {r}");
    }
    let sizes: Vec<usize> = (0..=5).map(|r| cumulative_level(r).len()).collect();
    assert_eq!(sizes, [0, 1, 2, 4, 16, 65536]);
    assert!(cumulative_level(5).iter().all(|x| x.rank() <= 5));
}

#[test]
fn ordinals_over_the_empty_zero_are_numerals() {
    let z = Zero::empty();
    let ords = z.ordinals(8).unwrap();
    for (n, o) in ords.iter().enumerate() {
        assert_eq!(*o, numeral(n));
        assert_eq!(o.rank(), n + 1);
    }
    let (found, _) = ordinals_by_filter(&z, 5).unwrap();
    assert_eq!(found, (0..5).map(numeral).collect::<Vec<_>>());
}

#[test]
fn ordinal_audit_passes_for_both_zeros() {
    for z in [Zero::empty(), Zero::two_atoms()] {
        assert!(audit_ordinals(&z, 7).unwrap().passes());
    }
    assert!(audit_ordinals(&Zero::empty(), 8).is_err());
}

#[test]
fn w3_over_the_empty_zero_is_the_cumulative_level() {
    for r in 1..=4 {
        let ctx = build_w3(&Zero::empty(), &HfObject::empty(), r).unwrap();
        assert_eq!(ctx.w.elements(), cumulative_level(r).as_slice(), "rank {r}");
        assert!(ctx.phi.iter().all(|(x, y)| x == y));
    }
}

#[test]
fn interpretation_conditions_hold_in_bound() {
    for (z, r) in [(Zero::empty(), 3), (Zero::empty(), 4), (Zero::two_atoms(), 3)] {
        let ctx = build_w3(&z, z.value(), r).unwrap();
        let report = check_interpretation_conditions(&ctx, KBound::Unbounded).unwrap();
        assert!(report.passes(), "{report:?}");
    }
}

#[test]
fn two_atom_model_is_the_first_two_ordinals() {
    let z = Zero::two_atoms();
    let ctx = build_w3(&z, z.value(), 3).unwrap();
    assert_eq!(ctx.w_plus().elements(), z.ordinals(2).unwrap().as_slice());
}

#[test]
fn membership_structure_of_u3_is_extensional() {
    let m = MembershipStructure::from_hf(&cumulative_level(3));
    let r = audit_axioms(&m, 2).unwrap();
    assert_eq!(r.get("extensionality").unwrap().status(), "pass");
}

proptest! {
    #[test]
    fn trcl_over_the_empty_zero_is_the_usual_closure(x in level4()) {
        let z = Zero::empty();
        let t = z.trcl(&x);
        prop_assert_eq!(&t, &oracle_trcl(&x));
        prop_assert!(x.is_subset(&t));
        prop_assert!(z.is_transitive(&t));
        prop_assert_eq!(z.trcl(&t), t);
    }

    #[test]
    fn zero_test_matches_its_definition(x in level4(), y in level4()) {
        let obj = HfObject::pair_set(x, y);
        let literal = obj.elements().iter().all(|e| !(e.is_set() && obj.is_subset(e)));
        prop_assert_eq!(is_zero(&obj), literal);
    }

    #[test]
    fn parse_and_print_round_trip(x in level4(), y in level4()) {
        let obj = HfObject::kpair(x.clone(), y.with(HfObject::atom("a")));
        prop_assert_eq!(parse_hf(&obj.to_string()).unwrap(), obj.clone());
        prop_assert_eq!(parse_hf(&obj.to_pair_string()).unwrap(), obj);
    }
}
