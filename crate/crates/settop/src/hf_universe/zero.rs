//! Generalized zeros, relative membership and zero-ordinals.
//!
//! A *zero* is an object none of whose elements is a superset of it. Given
//! a zero `0`, write `A⊕ = A \ 0` and `X ∈₀ Y` when `X ∈ Y⊕` and
//! `0 ⊆ Y`. These replace the empty set and membership in the theory of
//! ordinals, and reduce to the usual notions for `0 = ∅`.

use crate::error::{Error, Result};
use crate::hf_universe::object::HfObject;

/// Whether `sup` is a superset of `sub` in the class sense: atoms are not
/// supersets of anything.
pub fn is_superset(sup: &HfObject, sub: &HfObject) -> bool {
    sup.is_set() && sub.is_subset(sup)
}

/// Whether `x` is a zero: no element of `x` is a superset of `x`.
pub fn is_zero(x: &HfObject) -> bool {
    !x.elements().iter().any(|e| is_superset(e, x))
}

/// A validated zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Zero(HfObject);

impl Zero {
    /// Checks the zero condition.
    pub fn new(value: HfObject) -> Result<Self> {
        if !is_zero(&value) {
            return Err(Error::Precondition(format!("{value} is not a zero")));
        }
        Ok(Zero(value))
    }

    /// The empty set.
    pub fn empty() -> Self {
        Zero(HfObject::empty())
    }

    /// The two-element zero `{{#x}, {#y}}`.
    pub fn two_atoms() -> Self {
        let sx = HfObject::singleton(HfObject::atom("x"));
        let sy = HfObject::singleton(HfObject::atom("y"));
        Zero(HfObject::pair_set(sx, sy))
    }

    pub fn value(&self) -> &HfObject {
        &self.0
    }

    /// `a⊕ = a \ 0`.
    pub fn oplus(&self, a: &HfObject) -> HfObject {
        a.difference(&self.0)
    }

    /// Elements of `a⊕` in canonical order, or nothing unless `0 ⊆ a`;
    /// these are exactly the `x` with `x ∈₀ a`.
    pub fn members<'a>(&'a self, a: &'a HfObject) -> impl Iterator<Item = &'a HfObject> + 'a {
        let active = self.covers(a);
        a.elements().iter().filter(move |x| active && !self.0.contains(x))
    }

    /// Whether `0 ⊆ a` for a set `a`.
    pub fn covers(&self, a: &HfObject) -> bool {
        a.is_set() && self.0.is_subset(a)
    }

    /// `x ∈₀ y`.
    pub fn elem(&self, x: &HfObject, y: &HfObject) -> bool {
        self.covers(y) && y.contains(x) && !self.0.contains(x)
    }

    /// `0`-transitivity: `c ∈₀ a` whenever `c ∈₀ b ∈₀ a`.
    pub fn is_transitive(&self, a: &HfObject) -> bool {
        self.members(a).all(|b| self.members(b).all(|c| self.elem(c, a)))
    }

    /// `0`-pristineness of a transitive `a`: `0 ⊆ c` and `c` is not an atom
    /// for every `c ∈₀ a ∪ {a}`. The case `c = a` is read as requiring
    /// `0 ⊆ a` outright; otherwise `a ∪ {a}` would have no `∈₀`-members
    /// and any set missing part of `0` would count as pristine.
    pub fn is_pristine(&self, a: &HfObject) -> bool {
        if !self.covers(a) || !self.is_transitive(a) {
            return false;
        }
        let extended = a.with(a.clone());
        let ok = self.members(&extended).all(|c| self.covers(c));
        ok
    }

    /// Whether `α` is a `0`-ordinal: transitive, pristine, and `α⊕` is
    /// strictly linearly ordered by `∈₀` (well-ordering is automatic for
    /// finite sets).
    pub fn is_ordinal(&self, alpha: &HfObject) -> bool {
        if !self.is_pristine(alpha) {
            return false;
        }
        let elems: Vec<&HfObject> = self.members(alpha).collect();
        for (i, x) in elems.iter().enumerate() {
            if self.elem(x, x) {
                return false;
            }
            for (j, y) in elems.iter().enumerate() {
                if i != j && self.elem(x, y) == self.elem(y, x) {
                    return false;
                }
                if self.elem(x, y) {
                    for z in &elems {
                        if self.elem(y, z) && !self.elem(x, z) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// `α ∪ {α}` for an ordinal `α`.
    pub fn successor(&self, alpha: &HfObject) -> Result<HfObject> {
        if !self.is_ordinal(alpha) {
            return Err(Error::Precondition(format!("{alpha} is not an ordinal for zero {}", self.0)));
        }
        Ok(alpha.with(alpha.clone()))
    }

    /// The first `limit` ordinals in `∈₀` order, starting from the zero.
    pub fn ordinals(&self, limit: usize) -> Result<Vec<HfObject>> {
        if limit > 8 {
            return Err(Error::Guard { what: "number of ordinals", value: limit, limit: 8 });
        }
        let mut out = Vec::with_capacity(limit);
        if limit == 0 {
            return Ok(out);
        }
        if !self.is_ordinal(&self.0) {
            return Err(Error::Precondition(format!("the zero {} is not itself an ordinal", self.0)));
        }
        let mut current = self.0.clone();
        while out.len() < limit {
            let next = self.successor(&current)?;
            out.push(current);
            current = next;
        }
        Ok(out)
    }

    /// The least `0`-transitive superset of `a`, adding `c` whenever
    /// `c ∈₀ b ∈₀` (result) until nothing changes.
    pub fn trcl(&self, a: &HfObject) -> HfObject {
        let mut current = a.clone();
        loop {
            let additions: Vec<HfObject> = self
                .members(&current)
                .flat_map(|b| self.members(b).cloned().collect::<Vec<_>>())
                .filter(|c| !self.elem(c, &current))
                .collect();
            if additions.is_empty() {
                return current;
            }
            current = current.union(&HfObject::set(additions));
        }
    }

    /// `Z`-`B`-pristineness: `x ∈_Z B`, or `Z ⊆ x`, `x` is not an atom and
    /// every `c ∈_Z trcl(x)` is a non-atom superset of `Z` or satisfies
    /// `c ∈_Z B`.
    pub fn is_b_pristine(&self, b: &HfObject, x: &HfObject) -> bool {
        if self.elem(x, b) {
            return true;
        }
        if !self.covers(x) {
            return false;
        }
        let closure = self.trcl(x);
        let ok = self.members(&closure).all(|c| self.covers(c) || self.elem(c, b));
        ok
    }

    /// `Z`-well-foundedness: no infinite descending `∈_Z` chain starts at
    /// `a`. Canonical objects are well-founded under `∈`, so the search
    /// below always terminates; it is written as an explicit cycle search so
    /// that it states the property rather than assuming it.
    pub fn is_wellfounded(&self, a: &HfObject) -> bool {
        let mut path: Vec<HfObject> = Vec::new();
        self.no_descending_cycle(a, &mut path)
    }

    fn no_descending_cycle(&self, a: &HfObject, path: &mut Vec<HfObject>) -> bool {
        if path.contains(a) {
            return false;
        }
        path.push(a.clone());
        let ok = self.members(a).all(|c| self.no_descending_cycle(c, path));
        path.pop();
        ok
    }

    /// The definition of `Z`-well-foundedness read literally on the finite
    /// collection `trcl(a)⊕ ∪ {a}`: every sub-collection containing `a` has
    /// an `∈_Z`-minimal element. Exponential in the size of `trcl(a)`.
    pub fn is_wellfounded_by_minimal_elements(&self, a: &HfObject) -> Result<bool> {
        let mut pool: Vec<HfObject> = self.members(&self.trcl(a)).cloned().collect();
        pool.retain(|x| x != a);
        if pool.len() > 16 {
            return Err(Error::Guard { what: "transitive closure size", value: pool.len(), limit: 16 });
        }
        for mask in 0u32..1 << pool.len() {
            let mut b: Vec<&HfObject> = vec![a];
            b.extend((0..pool.len()).filter(|i| mask >> i & 1 == 1).map(|i| &pool[i]));
            let has_minimal = b.iter().any(|c| !b.iter().any(|d| self.members(c).any(|m| m == *d)));
            if !has_minimal {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hf(s: &str) -> HfObject {
        s.parse().unwrap()
    }

    #[test]
    fn zero_examples() {
        assert!(is_zero(&hf("{}")));
        assert!(is_zero(&hf("{{#x}, {#y}}")));
        // A canonical set containing a superset of itself would contain itself.
        assert!(crate::hf_universe::object::cumulative_level(4).iter().all(is_zero));
        assert!(Zero::new(hf("{{#x}, {#y}}")).is_ok());
    }

    #[test]
    fn ordinal_examples() {
        let z = Zero::empty();
        assert!(z.is_ordinal(&hf("{{}, {{}}}")));
        assert!(!z.is_ordinal(&hf("{{{}}}")));
        let t = Zero::two_atoms();
        let zv = t.value().clone();
        assert!(t.is_ordinal(&zv.with(zv.clone())));
    }

    #[test]
    fn successor_examples() {
        let z = Zero::empty();
        assert_eq!(z.successor(&hf("{}")).unwrap(), hf("{{}}"));
        assert_eq!(z.successor(&hf("{{}}")).unwrap(), hf("{{}, {{}}}"));
        assert!(z.successor(&hf("{{{}}}")).is_err());
        let t = Zero::two_atoms();
        for (n, alpha) in t.ordinals(7).unwrap().iter().enumerate() {
            assert_eq!(alpha.len(), n + 2);
        }
    }

    #[test]
    fn ordinal_enumeration_examples() {
        let z = Zero::empty();
        assert_eq!(z.ordinals(3).unwrap(), vec![hf("{}"), hf("{{}}"), hf("{{}, {{}}}")]);
        assert!(z.ordinals(8).unwrap().iter().all(|a| !a.contains(a)));
        assert!(z.ordinals(9).is_err());
    }

    #[test]
    fn trcl_examples() {
        let z = Zero::empty();
        assert_eq!(z.trcl(&hf("{{{}}}")), hf("{{}, {{}}}"));
        assert_eq!(z.trcl(&hf("{}")), hf("{}"));
        let a = hf("{{{{}}}, #a}");
        assert_eq!(z.trcl(&z.trcl(&a)), z.trcl(&a));
    }

    #[test]
    fn pristine_examples() {
        let z = Zero::empty();
        let none = HfObject::empty();
        for x in crate::hf_universe::object::cumulative_level(4) {
            assert!(z.is_b_pristine(&none, &x));
            assert!(z.is_wellfounded(&x));
        }
        let t = Zero::two_atoms();
        let zv = t.value().clone();
        assert!(t.is_b_pristine(&zv, &zv));
        assert!(!z.is_b_pristine(&none, &hf("{#w}")));
        assert!(!z.is_b_pristine(&none, &hf("{{#w}}")));
        assert!(z.is_b_pristine(&hf("{#w}"), &hf("#w")));
        assert!(z.is_b_pristine(&hf("{#w}"), &hf("{#w}")));
    }
}
