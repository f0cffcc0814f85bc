//! Audits of the structure of `0`-ordinals.
//!
//! [`audit_ordinals`] takes the first few ordinals over a zero and checks
//! the basic ordinal facts on them: irreflexivity and the description of
//! `α` as `0` together with its smaller ordinals, agreement of `∈₀` with
//! strict inclusion and linearity, the successor as the unique immediate
//! successor, and unions of nonempty families as least upper bounds.
//! [`ordinals_by_filter`] recovers the ordinals of bounded rank by testing
//! every object of a finite pool, independently of the successor chain.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hf_universe::object::{cumulative_level, power_set, HfObject};
use crate::hf_universe::zero::Zero;

/// Largest family of ordinals whose subfamilies are all checked.
pub const MAX_AUDITED_ORDINALS: usize = 8;

/// Per-property verdicts of [`audit_ordinals`]; each string names the
/// first failure.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OrdinalAudit {
    pub ordinals: Vec<String>,
    /// `α ∉ α` and `α = 0 ∪ {β ordinal | β ∈₀ α}`.
    pub irreflexive_and_initial: Option<String>,
    /// `α ∈₀ β` iff `α ⊊ β`, and exactly one of `α ∈₀ β`, `α = β`,
    /// `β ∈₀ α` holds.
    pub inclusion_and_linearity: Option<String>,
    /// `α ∪ {α}` is an ordinal above `α` with no ordinal strictly between.
    pub immediate_successor: Option<String>,
    /// `⋃A` is an ordinal and the least upper bound of `A`.
    pub least_upper_bounds: Option<String>,
    pub subfamilies_checked: usize,
}

impl OrdinalAudit {
    pub fn passes(&self) -> bool {
        self.irreflexive_and_initial.is_none()
            && self.inclusion_and_linearity.is_none()
            && self.immediate_successor.is_none()
            && self.least_upper_bounds.is_none()
    }
}

fn strict_subset(a: &HfObject, b: &HfObject) -> bool {
    a != b && a.is_subset(b)
}

/// Checks the ordinal properties on the first `count` ordinals over `zero`.
/// The successor of the last one is computed as well, so that every
/// ordinal in the audited family has its immediate successor in view.
pub fn audit_ordinals(zero: &Zero, count: usize) -> Result<OrdinalAudit> {
    if count > MAX_AUDITED_ORDINALS - 1 {
        return Err(Error::Guard { what: "audited ordinals", value: count, limit: MAX_AUDITED_ORDINALS - 1 });
    }
    let all = zero.ordinals(count + 1)?;
    let ords = &all[..count];
    let mut audit = OrdinalAudit { ordinals: ords.iter().map(|o| o.to_string()).collect(), ..Default::default() };
    let is_known = |x: &HfObject| all.contains(x);

    for alpha in ords {
        let fail = if zero.elem(alpha, alpha) || alpha.contains(alpha) {
            Some(format!("{alpha} is a member of itself"))
        } else if let Some(x) = zero.members(alpha).find(|x| !zero.is_ordinal(x)) {
            Some(format!("{x} ∈₀ {alpha} is not an ordinal"))
        } else {
            let below = all.iter().filter(|b| zero.elem(b, alpha)).cloned();
            let rebuilt = zero.value().union(&HfObject::set(below));
            (rebuilt != *alpha).then(|| format!("{alpha} differs from 0 with its smaller ordinals: {rebuilt}"))
        };
        if fail.is_some() {
            audit.irreflexive_and_initial = fail;
            break;
        }
    }

    'pairs: for a in ords {
        for b in ords {
            if zero.elem(a, b) != strict_subset(a, b) {
                audit.inclusion_and_linearity = Some(format!("∈₀ and ⊊ disagree on {a}, {b}"));
                break 'pairs;
            }
            let holds = [zero.elem(a, b), a == b, zero.elem(b, a)].iter().filter(|&&x| x).count();
            if holds != 1 {
                audit.inclusion_and_linearity = Some(format!("{a} and {b} are not comparable exactly once"));
                break 'pairs;
            }
        }
    }

    for alpha in ords {
        let succ = zero.successor(alpha)?;
        let fail = if !zero.is_ordinal(&succ) {
            Some(format!("{succ} is not an ordinal"))
        } else if !zero.elem(alpha, &succ) {
            Some(format!("{alpha} is not below its successor"))
        } else if !is_known(&succ) {
            Some(format!("{succ} is missing from the enumeration"))
        } else {
            all.iter()
                .find(|g| zero.elem(alpha, g) && zero.elem(g, &succ))
                .map(|g| format!("{g} lies strictly between {alpha} and its successor"))
        };
        if fail.is_some() {
            audit.immediate_successor = fail;
            break;
        }
    }

    for mask in 1u32..1 << ords.len() {
        audit.subfamilies_checked += 1;
        let family: Vec<&HfObject> = (0..ords.len()).filter(|i| mask >> i & 1 == 1).map(|i| &ords[i]).collect();
        let sup = family.iter().fold(HfObject::empty(), |acc, x| acc.union(x));
        let fail = if !zero.is_ordinal(&sup) {
            Some(format!("the union {sup} is not an ordinal"))
        } else if family.iter().any(|x| !x.is_subset(&sup)) {
            Some(format!("the union {sup} is not an upper bound"))
        } else {
            all.iter()
                .filter(|g| family.iter().all(|x| x.is_subset(g)))
                .find(|g| !sup.is_subset(g))
                .map(|g| format!("{g} is an upper bound below the union {sup}"))
        };
        if fail.is_some() {
            audit.least_upper_bounds = fail;
            break;
        }
    }
    Ok(audit)
}

/// Whether `f(a_i) ∈ f(a_j)` matches `a_i ∈ a_j` for the index bijection
/// between two ordinal sequences of equal length.
pub fn order_isomorphic(z1: &Zero, a: &[HfObject], z2: &Zero, b: &[HfObject]) -> bool {
    a.len() == b.len() && (0..a.len()).all(|i| (0..a.len()).all(|j| z1.elem(&a[i], &a[j]) == z2.elem(&b[i], &b[j])))
}

/// The pool searched by [`ordinals_by_filter`]: for the empty zero, the
/// pure level `U_(rank)`; otherwise every object of rank at most
/// `rank − 1` built from the atoms of the zero, together with every set
/// of at most three such objects.
pub fn ordinal_pool(zero: &Zero, rank: usize) -> Result<Vec<HfObject>> {
    if rank > 5 {
        return Err(Error::Guard { what: "pool rank", value: rank, limit: 5 });
    }
    if zero.value().is_empty_set() {
        return Ok(cumulative_level(rank));
    }
    let atoms = zero.value().atoms();
    let mut level: Vec<HfObject> = atoms.clone();
    for _ in 1..rank {
        if level.len() > 16 {
            return Err(Error::Guard { what: "pool level size", value: level.len(), limit: 16 });
        }
        let mut next = atoms.clone();
        next.extend(power_set(&level));
        level = next;
    }
    let mut pool = level.clone();
    let n = level.len();
    for i in 0..n {
        for j in i..n {
            for k in j..n {
                pool.push(HfObject::set([level[i].clone(), level[j].clone(), level[k].clone()]));
            }
        }
    }
    pool.push(HfObject::empty());
    pool.sort();
    pool.dedup();
    Ok(pool)
}

/// Every ordinal in [`ordinal_pool`], in `∈₀` order, with the pool size.
pub fn ordinals_by_filter(zero: &Zero, rank: usize) -> Result<(Vec<HfObject>, usize)> {
    let pool = ordinal_pool(zero, rank)?;
    let mut found: Vec<HfObject> = pool.iter().filter(|x| zero.is_ordinal(x)).cloned().collect();
    found.sort_by_key(|x| zero.members(x).count());
    Ok((found, pool.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_zeros_pass_the_audit() {
        for zero in [Zero::empty(), Zero::two_atoms()] {
            let a = audit_ordinals(&zero, 6).unwrap();
            assert!(a.passes(), "{a:?}");
            assert_eq!(a.subfamilies_checked, 63);
        }
    }

    #[test]
    fn sequences_are_isomorphic_and_sized() {
        let (z1, z2) = (Zero::empty(), Zero::two_atoms());
        let a = z1.ordinals(7).unwrap();
        let b = z2.ordinals(7).unwrap();
        assert!(order_isomorphic(&z1, &a, &z2, &b));
        for (n, o) in b.iter().enumerate() {
            assert_eq!(o.len(), n + 2);
        }
        let reversed: Vec<HfObject> = b.iter().rev().cloned().collect();
        assert!(!order_isomorphic(&z1, &a, &z2, &reversed));
    }

    #[test]
    fn filter_agrees_with_successor_chain() {
        let z = Zero::empty();
        let (found, pool) = ordinals_by_filter(&z, 5).unwrap();
        assert_eq!(pool, 65536);
        assert_eq!(found, z.ordinals(5).unwrap());
        let z = Zero::two_atoms();
        let (found, _) = ordinals_by_filter(&z, 3).unwrap();
        assert_eq!(found, z.ordinals(2).unwrap());
    }
}
