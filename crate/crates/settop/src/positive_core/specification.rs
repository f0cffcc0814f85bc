//! The specification scheme and the distributivity law, each computed two
//! ways.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hf_universe::object::HfObject;
use crate::positive_core::compile::compile_formula;
use crate::positive_core::formula::{eval_formula, Formula, Universe};
use crate::positive_core::term::{eval_term, CombinatorTerm};

/// `{x ∈ c | φ(x, b_2, …, b_m, B_1, …, B_n)}`, computed by brute force and
/// as `dom^(m−1)(A^φ_{c,{b_2},…,{b_m}})`. Disagreement is an
/// [`Error::Inconsistent`].
pub fn specification_set(
    phi: &Formula,
    c: &HfObject,
    sets: &[HfObject],
    classes: &[Vec<HfObject>],
) -> Result<HfObject> {
    let m = 1 + sets.len();
    let brute = {
        let u = Universe::new(Vec::new(), classes.to_vec());
        let mut keep = Vec::new();
        for x in c.elements() {
            let mut env = vec![x.clone()];
            env.extend(sets.iter().cloned());
            if eval_formula(phi, &env, &u)? {
                keep.push(x.clone());
            }
        }
        HfObject::set(keep)
    };
    let mut params = vec![c.clone()];
    params.extend(sets.iter().map(|b| HfObject::singleton(b.clone())));
    let u = Universe::new(params, classes.to_vec());
    let mut term = compile_formula(phi, m)?.instantiate(&u)?;
    for _ in 1..m {
        term = CombinatorTerm::domain(term);
    }
    let compiled = eval_term(&term);
    if compiled != brute {
        return Err(Error::Inconsistent(format!(
            "specification of {phi}: brute force gives {brute}, compiled term gives {compiled}"
        )));
    }
    Ok(brute)
}

/// Both sides of the distributivity law.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistributivityReport {
    pub lhs: String,
    pub rhs: String,
    pub choice_functions: usize,
    pub equal: bool,
}

/// `⋃_{i∈d} ⋂_{j∈J_i} j` against `⋂_{f∈ΠJ_i} ⋃_{i∈d} f(i)`, with the
/// product enumerated in full. `families[i]` is `J_i`; each must be
/// nonempty.
pub fn check_distributivity(families: &[Vec<HfObject>]) -> Result<DistributivityReport> {
    if let Some(i) = families.iter().position(|j| j.is_empty()) {
        return Err(Error::Precondition(format!("J_{} is empty", i + 1)));
    }
    let meet =
        |xs: &mut dyn Iterator<Item = HfObject>| -> Option<HfObject> { xs.reduce(|acc, x| acc.intersection(&x)) };
    let lhs = families
        .iter()
        .map(|j| meet(&mut j.iter().cloned()).expect("nonempty"))
        .fold(HfObject::empty(), |acc, x| acc.union(&x));
    let mut idx = vec![0usize; families.len()];
    let mut rhs: Option<HfObject> = None;
    let mut count = 0;
    loop {
        count += 1;
        let join = idx.iter().zip(families).fold(HfObject::empty(), |acc, (&k, j)| acc.union(&j[k]));
        rhs = Some(match rhs {
            None => join,
            Some(r) => r.intersection(&join),
        });
        let mut k = families.len();
        let done = loop {
            if k == 0 {
                break true;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < families[k].len() {
                break false;
            }
            idx[k] = 0;
        };
        if done {
            break;
        }
    }
    let rhs = rhs.expect("at least the empty choice function");
    Ok(DistributivityReport { lhs: lhs.to_string(), rhs: rhs.to_string(), choice_functions: count, equal: lhs == rhs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::positive_core::formula::parse_formula;

    fn hf(s: &str) -> HfObject {
        s.parse().unwrap()
    }

    #[test]
    fn specification_examples() {
        let phi = parse_formula("(in x1 x2)").unwrap();
        assert_eq!(specification_set(&phi, &hf("{{}, {{}}}"), &[hf("{{}}")], &[]).unwrap(), hf("{{}}"));
        let c = hf("{{}, {{{}}}, #a}");
        assert_eq!(specification_set(&Formula::equal(1, 1), &c, &[], &[]).unwrap(), c);
        let phi = parse_formula("(allp z B1 (in z x1))").unwrap();
        let got = specification_set(&phi, &hf("{{}, {{}}, {{{}}}}"), &[], &[vec![hf("{}")]]).unwrap();
        assert_eq!(got, hf("{{{}}}"));
    }

    #[test]
    fn distributivity_examples() {
        let a = hf("{{}, {{}}}");
        let r = check_distributivity(&[vec![a.clone()]]).unwrap();
        assert!(r.equal);
        assert_eq!(r.lhs, a.to_string());
        let r = check_distributivity(&[vec![hf("{{}}")], vec![hf("{{}}"), hf("{{}, {{}}}")]]).unwrap();
        assert!(r.equal);
        assert_eq!(r.choice_functions, 2);
        assert_eq!(r.lhs, "{{}}");
        assert!(check_distributivity(&[vec![]]).is_err());
    }
}
