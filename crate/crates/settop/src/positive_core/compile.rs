//! Compilation of positive formulas into combinator terms.
//!
//! For sets `a_1, …, a_m` and class parameters `B_1, …, B_n` the compiled
//! term evaluates to
//!
//! ```text
//! A^φ_{a_1,…,a_m} = {⟨x_1, …, x_m⟩ ∈ a_1 × … × a_m | φ(x_1, …, x_m, B_1, …, B_n)}
//! ```
//!
//! by induction on `φ`. Quantifiers introduce a fresh last variable and
//! are eliminated with `dom`; conjunction and disjunction become `∩` and
//! `∪`; atomic formulas are reduced to the last two variables by products
//! and a swap of the last two tuple components, then read off a table.
//!
//! Source map of the places where the compiler departs from a naive
//! reading of the induction, each confirmed against brute force:
//!
//! * `X_1 ∈ X_1` over `a_1` compiles to `dom(Δ ∩ (E ∩ (a_1 × a_1)))`.
//!   The term `dom(E ∩ a_1²)` computes `{x ∈ a_1 | ∃y ∈ a_1. x ∈ y}`.
//! * `∀Z ∈ X_i. ψ` selects from `A^{X_(m+1) = X_i}_{a_1,…,a_m,a_i}` rather
//!   than from `a_1 × … × a_m × a_i`. Over the full product an empty
//!   `y ∈ a_i` satisfies the selector for every tuple, whatever `x_i` is.
//! * An atomic formula whose only variable is `X_m` with `m ≥ 2` compiles to
//!   `(a_1 × … × a_(m−1)) × A^{φ[X_m := X_1]}_{a_m}`; the product and swap
//!   reductions only cover formulas that mention `X_(m−1)` or two
//!   variables.

use crate::error::{Error, Result};
use crate::hf_universe::object::HfObject;
use crate::positive_core::formula::{Formula, Universe, Var};
use crate::positive_core::term::CombinatorTerm as T;

/// A validated formula with its arity, ready to be instantiated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompiledFormula {
    pub formula: Formula,
    pub arity: usize,
}

/// Validates `φ` for arity `m`; the term itself depends on the concrete
/// sets and classes and is produced by [`CompiledFormula::instantiate`].
pub fn compile_formula(phi: &Formula, m: usize) -> Result<CompiledFormula> {
    phi.validate()?;
    if m == 0 {
        return Err(Error::Precondition("arity must be at least 1".into()));
    }
    if phi.max_free() > m {
        return Err(Error::Precondition(format!("x{} is free but the arity is {m}", phi.max_free())));
    }
    Ok(CompiledFormula { formula: phi.clone(), arity: m })
}

impl CompiledFormula {
    /// The closed term for the given sets and classes.
    pub fn instantiate(&self, u: &Universe) -> Result<T> {
        if u.sets.len() != self.arity {
            return Err(Error::Precondition(format!("expected {} set parameters, got {}", self.arity, u.sets.len())));
        }
        if self.formula.max_class() > u.classes.len() {
            return Err(Error::Precondition(format!("class parameter B{} is unassigned", self.formula.max_class())));
        }
        let a: Vec<T> = u.sets.iter().cloned().map(T::Lift).collect();
        build(&self.formula, &a, &u.classes)
    }
}

/// Compiles and evaluates in one step.
pub fn compile_and_eval(phi: &Formula, u: &Universe) -> Result<HfObject> {
    let t = compile_formula(phi, u.sets.len())?.instantiate(u)?;
    Ok(super::term::eval_term(&t))
}

fn product_of(a: &[T]) -> T {
    let mut acc = a[0].clone();
    for t in &a[1..] {
        acc = T::product(acc, t.clone());
    }
    acc
}

/// `{⟨x, z, y⟩ | ⟨x, y, z⟩ ∈ a}`.
fn swap_last_two(a: T) -> T {
    T::perm312(T::perm231(a))
}

fn free_index(v: &Var) -> Result<usize> {
    match v {
        Var::Free(i) => Ok(*i),
        Var::Bound(n) => Err(Error::Inconsistent(format!("bound variable {n} reached the compiler unsubstituted"))),
    }
}

fn build(phi: &Formula, a: &[T], classes: &[Vec<HfObject>]) -> Result<T> {
    let m = a.len();
    match phi {
        Formula::And(p, q) => Ok(T::intersect(build(p, a, classes)?, build(q, a, classes)?)),
        Formula::Or(p, q) => Ok(T::union_of(build(p, a, classes)?, build(q, a, classes)?)),
        Formula::ForallParam(z, p, body) => {
            let class = &classes[p - 1];
            if class.is_empty() {
                return Err(Error::Precondition(format!("class parameter B{p} must be nonempty")));
            }
            let body = body.substitute(&Var::Bound(z.clone()), &Var::Free(m + 1));
            let mut parts = Vec::with_capacity(class.len());
            for x in class {
                let mut extended = a.to_vec();
                extended.push(T::lift(HfObject::singleton(x.clone())));
                parts.push(T::domain(build(&body, &extended, classes)?));
            }
            let mut acc = parts.remove(0);
            for t in parts {
                acc = T::intersect(acc, t);
            }
            Ok(acc)
        }
        Formula::ExistsIn(z, v, body) => {
            let i = free_index(v)?;
            let body = body.substitute(&Var::Bound(z.clone()), &Var::Free(m + 1));
            let rho = Formula::and(body, Formula::member(m + 1, i));
            let mut extended = a.to_vec();
            extended.push(T::big_union(a[i - 1].clone()));
            Ok(T::domain(build(&rho, &extended, classes)?))
        }
        Formula::ForallIn(z, v, body) => {
            let i = free_index(v)?;
            let body = body.substitute(&Var::Bound(z.clone()), &Var::Free(m + 2));
            let rho = Formula::and(body, Formula::equal(m + 1, i));
            let mut with_y = a.to_vec();
            with_y.push(a[i - 1].clone());
            let base = build(&Formula::equal(m + 1, i), &with_y, classes)?;
            let mut with_yz = with_y;
            with_yz.push(T::big_union(a[i - 1].clone()));
            let inner = build(&rho, &with_yz, classes)?;
            Ok(T::domain(T::forall_selector(inner, base)))
        }
        Formula::Member(..) | Formula::Equal(..) => atomic(phi, a),
    }
}

fn atomic(phi: &Formula, a: &[T]) -> Result<T> {
    let m = a.len();
    let (is_member, i, j) = match phi {
        Formula::Member(x, y) => (true, free_index(x)?, free_index(y)?),
        Formula::Equal(x, y) => (false, free_index(x)?, free_index(y)?),
        _ => unreachable!("atomic called on a compound formula"),
    };
    let rebuild = |i: usize, j: usize| {
        if is_member {
            Formula::member(i, j)
        } else {
            Formula::equal(i, j)
        }
    };
    if i != m && j != m {
        return Ok(T::product(atomic(phi, &a[..m - 1])?, a[m - 1].clone()));
    }
    if i == j {
        if m == 1 {
            return Ok(if is_member {
                T::domain(T::delta_cap(T::e_cap(T::product(a[0].clone(), a[0].clone()))))
            } else {
                a[0].clone()
            });
        }
        let single = atomic(&rebuild(1, 1), &a[m - 1..])?;
        return Ok(T::product(product_of(&a[..m - 1]), single));
    }
    let other = if i == m { j } else { i };
    if other != m - 1 {
        let rename = |k: usize| if k == m { m - 1 } else { k };
        let mut shortened = a[..m - 2].to_vec();
        shortened.push(a[m - 1].clone());
        let inner = atomic(&rebuild(rename(i), rename(j)), &shortened)?;
        return Ok(swap_last_two(T::product(inner, a[m - 2].clone())));
    }
    let (last2, last) = (a[m - 2].clone(), a[m - 1].clone());
    let core = if !is_member {
        T::delta_cap(T::product(last2, last))
    } else if i == m - 1 {
        T::e_cap(T::product(last2, last))
    } else {
        T::inverse(T::e_cap(T::product(last, last2)))
    };
    Ok(if m == 2 { core } else { T::product2(product_of(&a[..m - 2]), core) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::positive_core::formula::{brute_force_extension, parse_formula};
    use crate::positive_core::term::eval_term;

    fn hf(s: &str) -> HfObject {
        s.parse().unwrap()
    }

    #[test]
    fn table_examples() {
        let u = Universe::new(vec![hf("{{}, {{}}}")], vec![]);
        let t = compile_formula(&Formula::equal(1, 1), 1).unwrap().instantiate(&u).unwrap();
        assert_eq!(t, T::lift(hf("{{}, {{}}}")));
        let u2 = Universe::new(vec![hf("{{}}"), hf("{{{}}}")], vec![]);
        let t = compile_formula(&Formula::member(1, 2), 2).unwrap().instantiate(&u2).unwrap();
        assert_eq!(t, T::e_cap(T::product(T::lift(hf("{{}}")), T::lift(hf("{{{}}}")))));
        let t = compile_formula(&Formula::member(1, 1), 1).unwrap().instantiate(&u).unwrap();
        assert_eq!(eval_term(&t), HfObject::empty());
        let naive = T::domain(T::e_cap(T::product(T::lift(hf("{{}, {{}}}")), T::lift(hf("{{}, {{}}}")))));
        assert_eq!(eval_term(&naive), hf("{{}}"));
    }

    #[test]
    fn compiled_matches_brute_force_on_examples() {
        let sets = [hf("{}"), hf("{{}}"), hf("{{{}}}"), hf("{{}, {{}}}"), hf("{#a, {#a}}")];
        let formulas = [
            "(in x1 x2)",
            "(in x2 x1)",
            "(= x2 x1)",
            "(in x2 x2)",
            "(in x1 x3)",
            "(= x3 x1)",
            "(some z x1 (in z x2))",
            "(all z x1 (in z x2))",
            "(all z x2 (some w x1 (= w z)))",
            "(or (in x1 x1) (all z x1 (= z x2)))",
            "(allp z B1 (in z x1))",
            "(allp z B1 (or (= z x2) (in z x1)))",
        ];
        let classes = vec![vec![hf("{}"), hf("{{}}")]];
        for text in formulas {
            let phi = parse_formula(text).unwrap();
            let m = phi.max_free().max(2);
            for a in &sets {
                for b in &sets {
                    let mut v = vec![a.clone(), b.clone()];
                    if m == 3 {
                        v.push(hf("{{}, {{}}}"));
                    }
                    let u = Universe::new(v, classes.clone());
                    assert_eq!(
                        compile_and_eval(&phi, &u).unwrap(),
                        brute_force_extension(&phi, &u).unwrap(),
                        "{text} over {a}, {b}"
                    );
                }
            }
        }
    }

    #[test]
    fn empty_class_parameters_are_rejected() {
        let phi = parse_formula("(allp z B1 (in z x1))").unwrap();
        let u = Universe::new(vec![hf("{{}}")], vec![vec![]]);
        assert!(compile_and_eval(&phi, &u).is_err());
        assert!(compile_formula(&phi, 0).is_err());
        assert!(compile_formula(&Formula::member(1, 3), 2).is_err());
    }
}
