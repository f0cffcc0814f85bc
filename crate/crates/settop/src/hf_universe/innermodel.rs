//! Pristine inner models and the eight interpretation conditions.
//!
//! An [`InterpretationContext`] bundles a zero `Z`, the atom collection
//! `B ⊇ Z`, the universe `W ⊇ B` and an injective map `Φ` on `W \ B`. With
//! `S⊕ = W \ B` and `T = Φ[S⊕]`, the conditions are checked instance by
//! instance over the finite data. Constructions such as `Z ∪ {x}` or unions
//! climb in rank, so any result missing from `T` whose rank exceeds the
//! context's bound is classified as out of bound rather than as a failure.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::finite_topology::KBound;
use crate::hf_universe::object::HfObject;
use crate::hf_universe::zero::{is_superset, Zero};

/// Largest rank bound accepted by [`build_w3`].
pub const MAX_RANK: usize = 5;

/// Largest `|T|` for which subfamilies of `T` are enumerated exhaustively.
pub const MAX_EXHAUSTIVE_T: usize = 20;

/// The data `(Z, B, W, Φ)` together with the rank bound it was built at.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterpretationContext {
    pub zero: Zero,
    /// The atom collection `B`, as a set containing every element of `Z`.
    pub b: HfObject,
    /// The universe `W = Z ∪ W⊕`, as a set.
    pub w: HfObject,
    /// `Φ` as a table from `W \ B` to objects, sorted by argument.
    pub phi: Vec<(HfObject, HfObject)>,
    pub rank_bound: usize,
}

impl InterpretationContext {
    /// `W⊕ = W \ Z`.
    pub fn w_plus(&self) -> HfObject {
        self.zero.oplus(&self.w)
    }

    /// `S⊕ = W \ B`.
    pub fn s_plus(&self) -> HfObject {
        self.w.difference(&self.b)
    }

    /// `T = Φ[S⊕]`, sorted and deduplicated.
    pub fn t(&self) -> Vec<HfObject> {
        let mut t: Vec<HfObject> = self.phi.iter().map(|(_, v)| v.clone()).collect();
        t.sort();
        t.dedup();
        t
    }

    /// `Φ(x)` for `x ∈ S⊕`.
    pub fn phi_of(&self, x: &HfObject) -> Option<&HfObject> {
        self.phi.binary_search_by(|(k, _)| k.cmp(x)).ok().map(|i| &self.phi[i].1)
    }

    /// Whether `x` is an inner class: not an atom and `Z ⊆ x ⊆ W`.
    pub fn is_inner_class(&self, x: &HfObject) -> bool {
        x.is_set() && self.zero.value().is_subset(x) && x.is_subset(&self.w)
    }
}

/// Builds the third pristine model at a finite rank: `W⊕` is the set of
/// `Z`-well-founded `Z`-`B`-pristine objects of rank at most `rank_bound`
/// and `Φ` is the identity on `W \ B`.
///
/// Discreteness of `trcl(x)⊕` holds for every finite set and is not
/// checked, so the second and third models coincide here. Candidates are
/// generated level by level (members of `B⊕`, plus `Z ∪ Q` for collections
/// `Q` of objects already found) and each candidate is admitted only after
/// the literal pristineness and well-foundedness checks.
pub fn build_w3(zero: &Zero, b: &HfObject, rank_bound: usize) -> Result<InterpretationContext> {
    if rank_bound > MAX_RANK {
        return Err(Error::Guard { what: "rank bound", value: rank_bound, limit: MAX_RANK });
    }
    let z = zero.value();
    if b.is_atom() {
        return Err(Error::Precondition("B must be a set".into()));
    }
    if !z.is_subset(b) {
        return Err(Error::Precondition(format!("Z = {z} is not a subset of B = {b}")));
    }
    if let Some(bad) = b.elements().iter().find(|e| is_superset(e, z)) {
        return Err(Error::Precondition(format!("element {bad} of B is a superset of Z")));
    }

    let b_plus = zero.oplus(b);
    let mut found: Vec<HfObject> = b_plus.elements().iter().filter(|x| x.rank() <= rank_bound).cloned().collect();
    found.sort();
    for level in 1..=rank_bound {
        let below: Vec<HfObject> = found.iter().filter(|x| x.rank() < level).cloned().collect();
        if below.len() > 20 {
            return Err(Error::Guard { what: "pristine objects below the top level", value: below.len(), limit: 20 });
        }
        let mut next = found.clone();
        for mask in 0u32..1 << below.len() {
            let q = HfObject::set((0..below.len()).filter(|i| mask >> i & 1 == 1).map(|i| below[i].clone()));
            let candidate = z.union(&q);
            if candidate.rank() == level && zero.is_b_pristine(b, &candidate) && zero.is_wellfounded(&candidate) {
                next.push(candidate);
            }
        }
        next.sort();
        next.dedup();
        found = next;
    }

    let w = z.union(&HfObject::set(found));
    let phi = w.difference(b).elements().iter().map(|x| (x.clone(), x.clone())).collect();
    Ok(InterpretationContext { zero: zero.clone(), b: b.clone(), w, phi, rank_bound })
}

/// Verdict counts for one condition.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ConditionVerdict {
    pub condition: usize,
    pub name: &'static str,
    pub pass: usize,
    pub fail: usize,
    pub out_of_bound: usize,
    pub vacuous: usize,
    /// First failing instance, if any.
    pub witness: Option<String>,
}

impl ConditionVerdict {
    fn new(condition: usize, name: &'static str) -> Self {
        ConditionVerdict { condition, name, ..Default::default() }
    }

    fn record(&mut self, outcome: Outcome, witness: impl FnOnce() -> String) {
        match outcome {
            Outcome::Pass => self.pass += 1,
            Outcome::OutOfBound => self.out_of_bound += 1,
            Outcome::Vacuous => self.vacuous += 1,
            Outcome::Fail => {
                self.fail += 1;
                if self.witness.is_none() {
                    self.witness = Some(witness());
                }
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Outcome {
    Pass,
    Fail,
    OutOfBound,
    Vacuous,
}

/// Per-condition verdicts, plus a check that `Φ` is injective.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub phi_injective: bool,
    pub w_plus_size: usize,
    pub t_size: usize,
    pub conditions: Vec<ConditionVerdict>,
}

impl ConditionReport {
    /// No in-bound failures and an injective `Φ`.
    pub fn passes(&self) -> bool {
        self.phi_injective && self.conditions.iter().all(|c| c.fail == 0)
    }

    /// Total out-of-bound instances per condition, in condition order.
    pub fn out_of_bound_counts(&self) -> Vec<usize> {
        self.conditions.iter().map(|c| c.out_of_bound).collect()
    }
}

/// Evaluates conditions (1) to (8) over every instance.
pub fn check_interpretation_conditions(ctx: &InterpretationContext, k: KBound) -> Result<ConditionReport> {
    let t = ctx.t();
    if t.len() > MAX_EXHAUSTIVE_T {
        return Err(Error::Guard { what: "|T|", value: t.len(), limit: MAX_EXHAUSTIVE_T });
    }
    let z = ctx.zero.value();
    let in_t = |x: &HfObject| t.binary_search(x).is_ok();
    let classify = |x: &HfObject| {
        if in_t(x) {
            Outcome::Pass
        } else if x.rank() > ctx.rank_bound {
            Outcome::OutOfBound
        } else {
            Outcome::Fail
        }
    };

    let mut seen: HashMap<&HfObject, &HfObject> = HashMap::new();
    let mut phi_injective = true;
    for (x, v) in &ctx.phi {
        if let Some(prev) = seen.insert(v, x) {
            if prev != x {
                phi_injective = false;
            }
        }
    }
    let domain_ok = ctx.phi.iter().map(|(x, _)| x.clone()).eq(ctx.s_plus().elements().iter().cloned());

    let w_plus = ctx.w_plus();
    let mut out = Vec::new();

    let mut c1 = ConditionVerdict::new(1, "W⊕ has more than one element");
    c1.record(if w_plus.len() > 1 { Outcome::Pass } else { Outcome::Fail }, || format!("|W⊕| = {}", w_plus.len()));
    out.push(c1);

    let mut c2 = ConditionVerdict::new(2, "T consists of inner classes and B of non-inner classes");
    for x in &t {
        c2.record(if ctx.is_inner_class(x) { Outcome::Pass } else { Outcome::Fail }, || {
            format!("{x} ∈ T is not an inner class")
        });
    }
    for x in ctx.b.elements() {
        c2.record(if ctx.is_inner_class(x) { Outcome::Fail } else { Outcome::Pass }, || {
            format!("{x} ∈ B is an inner class")
        });
    }
    c2.record(if domain_ok { Outcome::Pass } else { Outcome::Fail }, || "Φ is not defined exactly on W \\ B".into());
    out.push(c2);

    let mut c3 = ConditionVerdict::new(3, "Z ∪ {x} ∈ T for x ∈ W⊕");
    for x in w_plus.elements() {
        let y = z.with(x.clone());
        c3.record(classify(&y), || format!("Z ∪ {{{x}}} = {y} ∉ T"));
    }
    out.push(c3);

    let subfamilies = |f: &mut dyn FnMut(&[&HfObject])| {
        for mask in 1u32..1 << t.len() {
            let c: Vec<&HfObject> = (0..t.len()).filter(|i| mask >> i & 1 == 1).map(|i| &t[i]).collect();
            f(&c);
        }
    };

    let mut c4 = ConditionVerdict::new(4, "⋂C is Z or in T for nonempty C ⊆ T");
    subfamilies(&mut |c| {
        let meet = c[1..].iter().fold(c[0].clone(), |acc, x| acc.intersection(x));
        let outcome = if &meet == z { Outcome::Pass } else { classify(&meet) };
        c4.record(outcome, || format!("⋂{c:?} = {meet}"));
    });
    out.push(c4);

    let mut c5 = ConditionVerdict::new(5, "x ∪ y ∈ T for x, y ∈ T");
    for x in &t {
        for y in &t {
            let u = x.union(y);
            c5.record(classify(&u), || format!("{x} ∪ {y} = {u} ∉ T"));
        }
    }
    out.push(c5);

    let mut c6 = ConditionVerdict::new(6, "x⊕ is K-small when every x \\ {y} is in T");
    for x in &t {
        let x_plus = ctx.zero.oplus(x);
        let premise = x_plus.elements().iter().all(|y| in_t(&x.difference(&HfObject::singleton(y.clone()))));
        let outcome = match (premise, k) {
            (false, _) | (_, KBound::Unbounded) => Outcome::Vacuous,
            (true, _) if k.is_small(x_plus.len()) => Outcome::Pass,
            (true, _) => Outcome::Fail,
        };
        c6.record(outcome, || format!("{x}⊕ has {} elements", x_plus.len()));
    }
    out.push(c6);

    let mut c7 = ConditionVerdict::new(7, "⋃C ∈ T for nonempty K-small C ⊆ T");
    subfamilies(&mut |c| {
        if !k.is_small(c.len()) {
            c7.record(Outcome::Vacuous, String::new);
            return;
        }
        let join = c[1..].iter().fold(c[0].clone(), |acc, x| acc.union(x));
        c7.record(classify(&join), || format!("⋃{c:?} = {join} ∉ T"));
    });
    out.push(c7);

    let s_plus = ctx.s_plus();
    let mut c8 = ConditionVerdict::new(8, "Z ∪ {x ∈ S⊕ | Φ(x) ⊆ a, Φ(x) ∩ b ≠ Z} is Z or in T");
    for a in &t {
        for b in &t {
            let picked = s_plus
                .elements()
                .iter()
                .filter(|x| ctx.phi_of(x).is_some_and(|v| v.is_subset(a) && &v.intersection(b) != z));
            let y = z.union(&HfObject::set(picked.cloned()));
            let outcome = if &y == z { Outcome::Pass } else { classify(&y) };
            c8.record(outcome, || format!("a = {a}, b = {b} gives {y}"));
        }
    }
    out.push(c8);

    Ok(ConditionReport { phi_injective, w_plus_size: w_plus.len(), t_size: t.len(), conditions: out })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hf_universe::object::cumulative_level;

    #[test]
    fn w3_examples() {
        let none = HfObject::empty();
        let ctx = build_w3(&Zero::empty(), &none, 3).unwrap();
        assert_eq!(ctx.w_plus().elements(), cumulative_level(3).as_slice());
        let ctx = build_w3(&Zero::empty(), &none, 4).unwrap();
        assert_eq!(ctx.w_plus().len(), 16);
        let two = Zero::two_atoms();
        let z = two.value().clone();
        let ctx = build_w3(&two, &z, 3).unwrap();
        let wp = ctx.w_plus();
        assert!(wp.contains(&z) && wp.contains(&z.with(z.clone())));
        assert_eq!(wp.len(), 2);
    }

    #[test]
    fn b_hypothesis_is_enforced() {
        let z = Zero::empty();
        assert!(build_w3(&z, &"{{}}".parse().unwrap(), 3).is_err());
        assert!(build_w3(&z, &HfObject::empty(), 6).is_err());
    }

    #[test]
    fn conditions_on_rank_three() {
        let ctx = build_w3(&Zero::empty(), &HfObject::empty(), 3).unwrap();
        let r = check_interpretation_conditions(&ctx, KBound::Unbounded).unwrap();
        assert!(r.passes(), "{r:?}");
        let two = Zero::two_atoms();
        let ctx = build_w3(&two, two.value(), 3).unwrap();
        let r = check_interpretation_conditions(&ctx, KBound::Unbounded).unwrap();
        assert!(r.passes(), "{r:?}");
    }

    #[test]
    fn non_injective_phi_is_reported() {
        let mut ctx = build_w3(&Zero::empty(), &HfObject::empty(), 3).unwrap();
        let target = ctx.phi[0].1.clone();
        ctx.phi[1].1 = target;
        let r = check_interpretation_conditions(&ctx, KBound::Unbounded).unwrap();
        assert!(!r.phi_injective);
        assert!(!r.passes());
    }
}
