//! Closed combinator terms over the primitive operation algebra.
//!
//! The primitives are lifting a constant, `⋃a`, `{a, b}`, `a × b`, `Δ ∩ a`,
//! `E ∩ a`, the selector `{⟨x, y⟩ ∈ b | ∀z ∈ y. ⟨x, y, z⟩ ∈ a}` and the two
//! triple permutations. Domain, inverse, `×₂`, binary intersection and
//! binary union are derived; [`lower_to_primitives`] rewrites them into
//! primitives and [`eval_term`] evaluates either form. Members of a
//! relation argument that are not pairs (or triples) contribute nothing.

use std::fmt;

use crate::hf_universe::object::HfObject;

/// A closed term; the only leaves are lifted constants.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CombinatorTerm {
    Lift(HfObject),
    BigUnion(Box<CombinatorTerm>),
    Pair(Box<CombinatorTerm>, Box<CombinatorTerm>),
    Product(Box<CombinatorTerm>, Box<CombinatorTerm>),
    DeltaCap(Box<CombinatorTerm>),
    ECap(Box<CombinatorTerm>),
    /// `ForallSelector(a, b) = {⟨x, y⟩ ∈ b | ∀z ∈ y. ⟨x, y, z⟩ ∈ a}`.
    ForallSelector(Box<CombinatorTerm>, Box<CombinatorTerm>),
    /// `{⟨y, x, z⟩ | ⟨x, y, z⟩ ∈ a}`.
    Perm312(Box<CombinatorTerm>),
    /// `{⟨z, x, y⟩ | ⟨x, y, z⟩ ∈ a}`.
    Perm231(Box<CombinatorTerm>),
    Domain(Box<CombinatorTerm>),
    Inverse(Box<CombinatorTerm>),
    /// `a ×₂ b = {⟨u, v, w⟩ | u ∈ a, ⟨v, w⟩ ∈ b}`.
    Product2(Box<CombinatorTerm>, Box<CombinatorTerm>),
    Intersect(Box<CombinatorTerm>, Box<CombinatorTerm>),
    UnionOf(Box<CombinatorTerm>, Box<CombinatorTerm>),
}

use CombinatorTerm as T;

fn b(t: CombinatorTerm) -> Box<CombinatorTerm> {
    Box::new(t)
}

impl CombinatorTerm {
    pub fn lift(x: HfObject) -> Self {
        T::Lift(x)
    }
    pub fn big_union(t: Self) -> Self {
        T::BigUnion(b(t))
    }
    pub fn pair(t: Self, u: Self) -> Self {
        T::Pair(b(t), b(u))
    }
    pub fn product(t: Self, u: Self) -> Self {
        T::Product(b(t), b(u))
    }
    pub fn delta_cap(t: Self) -> Self {
        T::DeltaCap(b(t))
    }
    pub fn e_cap(t: Self) -> Self {
        T::ECap(b(t))
    }
    pub fn forall_selector(a: Self, base: Self) -> Self {
        T::ForallSelector(b(a), b(base))
    }
    pub fn perm312(t: Self) -> Self {
        T::Perm312(b(t))
    }
    pub fn perm231(t: Self) -> Self {
        T::Perm231(b(t))
    }
    pub fn domain(t: Self) -> Self {
        T::Domain(b(t))
    }
    pub fn inverse(t: Self) -> Self {
        T::Inverse(b(t))
    }
    pub fn product2(t: Self, u: Self) -> Self {
        T::Product2(b(t), b(u))
    }
    pub fn intersect(t: Self, u: Self) -> Self {
        T::Intersect(b(t), b(u))
    }
    pub fn union_of(t: Self, u: Self) -> Self {
        T::UnionOf(b(t), b(u))
    }

    /// Number of constructor nodes.
    pub fn size(&self) -> usize {
        match self {
            T::Lift(_) => 1,
            T::BigUnion(t)
            | T::DeltaCap(t)
            | T::ECap(t)
            | T::Perm312(t)
            | T::Perm231(t)
            | T::Domain(t)
            | T::Inverse(t) => 1 + t.size(),
            T::Pair(t, u)
            | T::Product(t, u)
            | T::ForallSelector(t, u)
            | T::Product2(t, u)
            | T::Intersect(t, u)
            | T::UnionOf(t, u) => 1 + t.size() + u.size(),
        }
    }

    /// Whether only primitive constructors occur.
    pub fn is_primitive(&self) -> bool {
        match self {
            T::Lift(_) => true,
            T::BigUnion(t) | T::DeltaCap(t) | T::ECap(t) | T::Perm312(t) | T::Perm231(t) => t.is_primitive(),
            T::Pair(t, u) | T::Product(t, u) | T::ForallSelector(t, u) => t.is_primitive() && u.is_primitive(),
            T::Domain(_) | T::Inverse(_) | T::Product2(..) | T::Intersect(..) | T::UnionOf(..) => false,
        }
    }
}

impl fmt::Display for CombinatorTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (name, args): (&str, Vec<&CombinatorTerm>) = match self {
            T::Lift(x) => return write!(f, "{x}"),
            T::BigUnion(t) => ("union", vec![t]),
            T::Pair(t, u) => ("pair", vec![t, u]),
            T::Product(t, u) => ("prod", vec![t, u]),
            T::DeltaCap(t) => ("delta-cap", vec![t]),
            T::ECap(t) => ("e-cap", vec![t]),
            T::ForallSelector(t, u) => ("forall-sel", vec![t, u]),
            T::Perm312(t) => ("perm312", vec![t]),
            T::Perm231(t) => ("perm231", vec![t]),
            T::Domain(t) => ("dom", vec![t]),
            T::Inverse(t) => ("inv", vec![t]),
            T::Product2(t, u) => ("prod2", vec![t, u]),
            T::Intersect(t, u) => ("cap", vec![t, u]),
            T::UnionOf(t, u) => ("cup", vec![t, u]),
        };
        write!(f, "({name}")?;
        for a in args {
            write!(f, " {a}")?;
        }
        f.write_str(")")
    }
}

fn triple(x: &HfObject) -> Option<(HfObject, HfObject, HfObject)> {
    let (xy, z) = x.as_kpair()?;
    let (x, y) = xy.as_kpair()?;
    Some((x, y, z))
}

fn tup3(x: HfObject, y: HfObject, z: HfObject) -> HfObject {
    HfObject::kpair(HfObject::kpair(x, y), z)
}

/// Evaluates a closed term bottom-up. Atoms behave as having no elements.
pub fn eval_term(t: &CombinatorTerm) -> HfObject {
    match t {
        T::Lift(x) => x.clone(),
        T::BigUnion(t) => eval_term(t).big_union(),
        T::Pair(t, u) => HfObject::pair_set(eval_term(t), eval_term(u)),
        T::Product(t, u) => {
            let (a, c) = (eval_term(t), eval_term(u));
            HfObject::set(
                a.elements()
                    .iter()
                    .flat_map(|x| c.elements().iter().map(move |y| HfObject::kpair(x.clone(), y.clone()))),
            )
        }
        T::DeltaCap(t) => eval_term(t).filter(|p| p.as_kpair().is_some_and(|(x, y)| x == y)),
        T::ECap(t) => eval_term(t).filter(|p| p.as_kpair().is_some_and(|(x, y)| y.contains(&x))),
        T::ForallSelector(t, u) => {
            let a = eval_term(t);
            eval_term(u).filter(|p| {
                p.as_kpair().is_some_and(|(x, y)| {
                    y.elements().iter().all(|z| a.contains(&tup3(x.clone(), y.clone(), z.clone())))
                })
            })
        }
        T::Perm312(t) => {
            HfObject::set(eval_term(t).elements().iter().filter_map(triple).map(|(x, y, z)| tup3(y, x, z)))
        }
        T::Perm231(t) => {
            HfObject::set(eval_term(t).elements().iter().filter_map(triple).map(|(x, y, z)| tup3(z, x, y)))
        }
        T::Domain(t) => HfObject::set(eval_term(t).elements().iter().filter_map(|p| p.as_kpair()).map(|(x, _)| x)),
        T::Inverse(t) => HfObject::set(
            eval_term(t).elements().iter().filter_map(|p| p.as_kpair()).map(|(x, y)| HfObject::kpair(y, x)),
        ),
        T::Product2(t, u) => {
            let (a, c) = (eval_term(t), eval_term(u));
            let pairs: Vec<(HfObject, HfObject)> = c.elements().iter().filter_map(|p| p.as_kpair()).collect();
            HfObject::set(
                a.elements().iter().flat_map(|x| pairs.iter().map(move |(v, w)| tup3(x.clone(), v.clone(), w.clone()))),
            )
        }
        T::Intersect(t, u) => eval_term(t).intersection(&eval_term(u)),
        T::UnionOf(t, u) => {
            let (a, c) = (eval_term(t), eval_term(u));
            HfObject::set(a.elements().iter().chain(c.elements()).cloned())
        }
    }
}

/// Rewrites every derived constructor into primitives:
///
/// ```text
/// a ×₂ b       = perm231(b × a)
/// a ∪ b        = ⋃{a, b}
/// a ∩ b        = ⋃⋃(Δ ∩ (a × b))
/// a ∩ V²       = a ∩ (⋃⋃a)²
/// sing(a)      = a ∩ ⋃(Δ ∩ (⋃a)²)          the singletons in a
/// dom(a)       = ⋃ sing(⋃(a ∩ V²))
/// a⁻¹          = dom(perm312(a × {a}))
/// ```
pub fn lower_to_primitives(t: &CombinatorTerm) -> CombinatorTerm {
    match t {
        T::Lift(x) => T::Lift(x.clone()),
        T::BigUnion(t) => T::big_union(lower_to_primitives(t)),
        T::Pair(t, u) => T::pair(lower_to_primitives(t), lower_to_primitives(u)),
        T::Product(t, u) => T::product(lower_to_primitives(t), lower_to_primitives(u)),
        T::DeltaCap(t) => T::delta_cap(lower_to_primitives(t)),
        T::ECap(t) => T::e_cap(lower_to_primitives(t)),
        T::ForallSelector(t, u) => T::forall_selector(lower_to_primitives(t), lower_to_primitives(u)),
        T::Perm312(t) => T::perm312(lower_to_primitives(t)),
        T::Perm231(t) => T::perm231(lower_to_primitives(t)),
        T::Domain(t) => lowered_domain(lower_to_primitives(t)),
        T::Inverse(t) => {
            let a = lower_to_primitives(t);
            lowered_domain(T::perm312(T::product(a.clone(), T::pair(a.clone(), a))))
        }
        T::Product2(t, u) => T::perm231(T::product(lower_to_primitives(u), lower_to_primitives(t))),
        T::Intersect(t, u) => lowered_intersect(lower_to_primitives(t), lower_to_primitives(u)),
        T::UnionOf(t, u) => T::big_union(T::pair(lower_to_primitives(t), lower_to_primitives(u))),
    }
}

fn lowered_intersect(a: CombinatorTerm, c: CombinatorTerm) -> CombinatorTerm {
    T::big_union(T::big_union(T::delta_cap(T::product(a, c))))
}

fn lowered_domain(a: CombinatorTerm) -> CombinatorTerm {
    let uua = T::big_union(T::big_union(a.clone()));
    let pairs = lowered_intersect(a, T::product(uua.clone(), uua));
    let parts = T::big_union(pairs);
    let up = T::big_union(parts.clone());
    let singletons = lowered_intersect(parts, T::big_union(T::delta_cap(T::product(up.clone(), up))));
    T::big_union(singletons)
}
