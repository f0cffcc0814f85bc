//! Positive formulas: syntax tree, s-expression syntax and brute-force
//! satisfaction over hereditarily finite sets.
//!
//! Free variables are `x1, x2, …`, class parameters are `B1, B2, …` and
//! every other identifier is a bound variable. The grammar is
//!
//! ```text
//! (in v w)  (= v w)  (and φ ψ)  (or φ ψ)
//! (some z v φ)  (all z v φ)  (allp z Bp φ)
//! ```
//!
//! Formulas without `allp` are bounded positive; with it they are
//! generalized positive.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::hf_universe::object::HfObject;

/// A variable occurrence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    /// The free variable `X_i`, indexed from 1.
    Free(usize),
    /// A bound variable.
    Bound(String),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Free(i) => write!(f, "x{i}"),
            Var::Bound(name) => f.write_str(name),
        }
    }
}

/// A positive formula.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Member(Var, Var),
    Equal(Var, Var),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    /// `∃z ∈ v. φ`.
    ExistsIn(String, Var, Box<Formula>),
    /// `∀z ∈ v. φ`.
    ForallIn(String, Var, Box<Formula>),
    /// `∀z ∈ B_p. φ`, with `p` indexed from 1.
    ForallParam(String, usize, Box<Formula>),
}

/// Set parameters `a_1, …, a_m` and finite class parameters `B_1, …, B_n`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Universe {
    pub sets: Vec<HfObject>,
    pub classes: Vec<Vec<HfObject>>,
}

impl Universe {
    pub fn new(sets: Vec<HfObject>, classes: Vec<Vec<HfObject>>) -> Self {
        Universe { sets, classes }
    }
}

impl Formula {
    pub fn member(i: usize, j: usize) -> Self {
        Formula::Member(Var::Free(i), Var::Free(j))
    }

    pub fn equal(i: usize, j: usize) -> Self {
        Formula::Equal(Var::Free(i), Var::Free(j))
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }

    /// Number of nodes in the syntax tree; atomic formulas count one.
    pub fn size(&self) -> usize {
        match self {
            Formula::Member(..) | Formula::Equal(..) => 1,
            Formula::And(a, b) | Formula::Or(a, b) => 1 + a.size() + b.size(),
            Formula::ExistsIn(_, _, b) | Formula::ForallIn(_, _, b) | Formula::ForallParam(_, _, b) => 1 + b.size(),
        }
    }

    /// Bounded positive: no quantifier over a class parameter.
    pub fn is_bpf(&self) -> bool {
        match self {
            Formula::Member(..) | Formula::Equal(..) => true,
            Formula::And(a, b) | Formula::Or(a, b) => a.is_bpf() && b.is_bpf(),
            Formula::ExistsIn(_, _, b) | Formula::ForallIn(_, _, b) => b.is_bpf(),
            Formula::ForallParam(..) => false,
        }
    }

    /// Largest free-variable index occurring, or 0.
    pub fn max_free(&self) -> usize {
        let var = |v: &Var| match v {
            Var::Free(i) => *i,
            Var::Bound(_) => 0,
        };
        match self {
            Formula::Member(a, b) | Formula::Equal(a, b) => var(a).max(var(b)),
            Formula::And(a, b) | Formula::Or(a, b) => a.max_free().max(b.max_free()),
            Formula::ExistsIn(_, v, b) | Formula::ForallIn(_, v, b) => var(v).max(b.max_free()),
            Formula::ForallParam(_, _, b) => b.max_free(),
        }
    }

    /// Largest class-parameter index occurring, or 0.
    pub fn max_class(&self) -> usize {
        match self {
            Formula::Member(..) | Formula::Equal(..) => 0,
            Formula::And(a, b) | Formula::Or(a, b) => a.max_class().max(b.max_class()),
            Formula::ExistsIn(_, _, b) | Formula::ForallIn(_, _, b) => b.max_class(),
            Formula::ForallParam(_, p, b) => (*p).max(b.max_class()),
        }
    }

    /// Checks that every bound variable is bound exactly where it is used,
    /// no binder shadows another, and free indices are positive.
    pub fn validate(&self) -> Result<()> {
        fn go(f: &Formula, scope: &mut Vec<String>) -> Result<()> {
            let check = |v: &Var, scope: &Vec<String>| match v {
                Var::Free(0) => Err(Error::Precondition("free variables are indexed from x1".into())),
                Var::Free(_) => Ok(()),
                Var::Bound(n) if scope.contains(n) => Ok(()),
                Var::Bound(n) => Err(Error::Precondition(format!("unbound variable {n}"))),
            };
            match f {
                Formula::Member(a, b) | Formula::Equal(a, b) => {
                    check(a, scope)?;
                    check(b, scope)
                }
                Formula::And(a, b) | Formula::Or(a, b) => {
                    go(a, scope)?;
                    go(b, scope)
                }
                Formula::ExistsIn(z, v, body) | Formula::ForallIn(z, v, body) => {
                    check(v, scope)?;
                    bind(z, body, scope)
                }
                Formula::ForallParam(z, p, body) => {
                    if *p == 0 {
                        return Err(Error::Precondition("class parameters are indexed from B1".into()));
                    }
                    bind(z, body, scope)
                }
            }
        }
        fn bind(z: &str, body: &Formula, scope: &mut Vec<String>) -> Result<()> {
            if !is_bound_name(z) {
                return Err(Error::Precondition(format!("{z} cannot be a bound variable")));
            }
            if scope.iter().any(|s| s == z) {
                return Err(Error::Precondition(format!("bound variable {z} shadows an enclosing binder")));
            }
            scope.push(z.to_string());
            let r = go(body, scope);
            scope.pop();
            r
        }
        go(self, &mut Vec::new())
    }

    /// Replaces free occurrences of `from` by `to`.
    pub fn substitute(&self, from: &Var, to: &Var) -> Formula {
        let s = |v: &Var| if v == from { to.clone() } else { v.clone() };
        let binds = |z: &str| matches!(from, Var::Bound(n) if n == z);
        match self {
            Formula::Member(a, b) => Formula::Member(s(a), s(b)),
            Formula::Equal(a, b) => Formula::Equal(s(a), s(b)),
            Formula::And(a, b) => Formula::and(a.substitute(from, to), b.substitute(from, to)),
            Formula::Or(a, b) => Formula::or(a.substitute(from, to), b.substitute(from, to)),
            Formula::ExistsIn(z, v, b) => {
                let body = if binds(z) { (**b).clone() } else { b.substitute(from, to) };
                Formula::ExistsIn(z.clone(), s(v), Box::new(body))
            }
            Formula::ForallIn(z, v, b) => {
                let body = if binds(z) { (**b).clone() } else { b.substitute(from, to) };
                Formula::ForallIn(z.clone(), s(v), Box::new(body))
            }
            Formula::ForallParam(z, p, b) => {
                let body = if binds(z) { (**b).clone() } else { b.substitute(from, to) };
                Formula::ForallParam(z.clone(), *p, Box::new(body))
            }
        }
    }
}

fn is_bound_name(name: &str) -> bool {
    is_free_name(name).is_none() && is_class_name(name).is_none() && !name.is_empty()
}

fn is_free_name(name: &str) -> Option<usize> {
    name.strip_prefix('x').and_then(|d| d.parse().ok()).filter(|_| name[1..].bytes().all(|b| b.is_ascii_digit()))
}

fn is_class_name(name: &str) -> Option<usize> {
    name.strip_prefix('B').and_then(|d| d.parse().ok()).filter(|_| name[1..].bytes().all(|b| b.is_ascii_digit()))
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Member(a, b) => write!(f, "(in {a} {b})"),
            Formula::Equal(a, b) => write!(f, "(= {a} {b})"),
            Formula::And(a, b) => write!(f, "(and {a} {b})"),
            Formula::Or(a, b) => write!(f, "(or {a} {b})"),
            Formula::ExistsIn(z, v, b) => write!(f, "(some {z} {v} {b})"),
            Formula::ForallIn(z, v, b) => write!(f, "(all {z} {v} {b})"),
            Formula::ForallParam(z, p, b) => write!(f, "(allp {z} B{p} {b})"),
        }
    }
}

impl FromStr for Formula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_formula(s)
    }
}

/// Parses one formula in the s-expression syntax and validates its
/// binders.
pub fn parse_formula(text: &str) -> Result<Formula> {
    let mut p = SexpParser { text, pos: 0 };
    let f = p.formula()?;
    p.skip_ws();
    if p.pos != text.len() {
        return Err(p.error("trailing input"));
    }
    f.validate().map_err(|e| Error::Parse { pos: 0, msg: e.to_string() })?;
    Ok(f)
}

/// Parses a formula file: one formula per line, `;` starts a comment and
/// blank lines are skipped.
pub fn parse_formula_file(text: &str) -> Result<Vec<Formula>> {
    let mut out = Vec::new();
    for (line_no, line) in text.lines().enumerate() {
        let body = line.split(';').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        out.push(
            parse_formula(body)
                .map_err(|e| Error::Parse { pos: line_no + 1, msg: format!("line {}: {e}", line_no + 1) })?,
        );
    }
    Ok(out)
}

struct SexpParser<'a> {
    text: &'a str,
    pos: usize,
}

impl SexpParser<'_> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.text[self.pos..].starts_with(|c: char| c.is_whitespace()) {
            self.pos += self.text[self.pos..].chars().next().map_or(1, char::len_utf8);
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.text[self.pos..].starts_with(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    fn ident(&mut self) -> Result<(usize, &str)> {
        self.skip_ws();
        let start = self.pos;
        let len = self.text[start..]
            .find(|c: char| c.is_whitespace() || c == '(' || c == ')')
            .unwrap_or(self.text.len() - start);
        if len == 0 {
            return Err(self.error("expected an identifier"));
        }
        self.pos += len;
        Ok((start, &self.text[start..start + len]))
    }

    fn var(&mut self) -> Result<Var> {
        let (start, name) = self.ident()?;
        if let Some(i) = is_free_name(name) {
            return Ok(Var::Free(i));
        }
        if is_class_name(name).is_some() {
            return Err(Error::Parse { pos: start, msg: format!("class parameter {name} used as a set variable") });
        }
        Ok(Var::Bound(name.to_string()))
    }

    fn formula(&mut self) -> Result<Formula> {
        self.expect('(')?;
        let (start, head) = self.ident()?;
        let head = head.to_string();
        let f = match head.as_str() {
            "in" => Formula::Member(self.var()?, self.var()?),
            "=" => Formula::Equal(self.var()?, self.var()?),
            "and" => Formula::and(self.formula()?, self.formula()?),
            "or" => Formula::or(self.formula()?, self.formula()?),
            "some" | "all" => {
                let (zpos, z) = self.ident()?;
                if !is_bound_name(z) {
                    return Err(Error::Parse { pos: zpos, msg: format!("{z} cannot be a bound variable") });
                }
                let z = z.to_string();
                let v = self.var()?;
                let body = Box::new(self.formula()?);
                if head == "some" {
                    Formula::ExistsIn(z, v, body)
                } else {
                    Formula::ForallIn(z, v, body)
                }
            }
            "allp" => {
                let (zpos, z) = self.ident()?;
                if !is_bound_name(z) {
                    return Err(Error::Parse { pos: zpos, msg: format!("{z} cannot be a bound variable") });
                }
                let z = z.to_string();
                let (ppos, p) = self.ident()?;
                let p = is_class_name(p)
                    .filter(|&p| p > 0)
                    .ok_or_else(|| Error::Parse { pos: ppos, msg: format!("expected a class parameter, found {p}") })?;
                Formula::ForallParam(z, p, Box::new(self.formula()?))
            }
            other => return Err(Error::Parse { pos: start, msg: format!("unknown head: {other}") }),
        };
        self.expect(')')?;
        Ok(f)
    }
}

/// Truth of `φ` with `env[i-1]` assigned to `x_i` and class parameters
/// taken from `u`. Quantifiers over an atom range over nothing.
pub fn eval_formula(phi: &Formula, env: &[HfObject], u: &Universe) -> Result<bool> {
    let mut bound: Vec<(&str, HfObject)> = Vec::new();
    eval(phi, env, u, &mut bound)
}

fn lookup<'a>(v: &Var, env: &'a [HfObject], bound: &'a [(&str, HfObject)]) -> Result<&'a HfObject> {
    match v {
        Var::Free(i) => {
            env.get(i.wrapping_sub(1)).ok_or_else(|| Error::Precondition(format!("free variable x{i} is unassigned")))
        }
        Var::Bound(n) => bound
            .iter()
            .rev()
            .find(|(m, _)| m == n)
            .map(|(_, x)| x)
            .ok_or_else(|| Error::Precondition(format!("unbound variable {n}"))),
    }
}

fn eval<'f>(phi: &'f Formula, env: &[HfObject], u: &Universe, bound: &mut Vec<(&'f str, HfObject)>) -> Result<bool> {
    Ok(match phi {
        Formula::Member(a, b) => {
            let (x, y) = (lookup(a, env, bound)?, lookup(b, env, bound)?);
            y.contains(x)
        }
        Formula::Equal(a, b) => lookup(a, env, bound)? == lookup(b, env, bound)?,
        Formula::And(a, b) => eval(a, env, u, bound)? && eval(b, env, u, bound)?,
        Formula::Or(a, b) => eval(a, env, u, bound)? || eval(b, env, u, bound)?,
        Formula::ExistsIn(z, v, body) | Formula::ForallIn(z, v, body) => {
            let range = lookup(v, env, bound)?.clone();
            let exists = matches!(phi, Formula::ExistsIn(..));
            let mut result = !exists;
            for x in range.elements() {
                bound.push((z, x.clone()));
                let r = eval(body, env, u, bound);
                bound.pop();
                if r? == exists {
                    result = exists;
                    break;
                }
            }
            result
        }
        Formula::ForallParam(z, p, body) => {
            let class = u
                .classes
                .get(p - 1)
                .ok_or_else(|| Error::Precondition(format!("class parameter B{p} is unassigned")))?;
            let mut result = true;
            for x in class {
                bound.push((z, x.clone()));
                let r = eval(body, env, u, bound);
                bound.pop();
                if !r? {
                    result = false;
                    break;
                }
            }
            result
        }
    })
}

/// `A^φ_{a_1,…,a_m} = {⟨x_1,…,x_m⟩ ∈ a_1 × … × a_m | φ}` by brute force over
/// the full product, with `m = u.sets.len()`.
pub fn brute_force_extension(phi: &Formula, u: &Universe) -> Result<HfObject> {
    let m = u.sets.len();
    if m == 0 {
        return Err(Error::Precondition("at least one set parameter is required".into()));
    }
    if phi.max_free() > m {
        return Err(Error::Precondition(format!("x{} is free but only {m} sets are given", phi.max_free())));
    }
    let factors: Vec<&[HfObject]> = u.sets.iter().map(|a| a.elements()).collect();
    if factors.iter().any(|f| f.is_empty()) {
        return Ok(HfObject::empty());
    }
    let mut out = Vec::new();
    let mut idx = vec![0usize; m];
    loop {
        let env: Vec<HfObject> = idx.iter().zip(&factors).map(|(&i, f)| f[i].clone()).collect();
        if eval_formula(phi, &env, u)? {
            out.push(HfObject::tuple(&env));
        }
        let mut k = m;
        loop {
            if k == 0 {
                return Ok(HfObject::set(out));
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < factors[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hf(s: &str) -> HfObject {
        s.parse().unwrap()
    }

    #[test]
    fn parse_examples() {
        let f = parse_formula("(some z x1 (in z x2))").unwrap();
        assert!(matches!(f, Formula::ExistsIn(..)));
        assert_eq!(f.to_string(), "(some z x1 (in z x2))");
        let g = parse_formula("(allp z B1 (in z x1))").unwrap();
        assert!(!g.is_bpf());
        assert!(f.is_bpf());
        let err = parse_formula("(not (in x1 x1))").unwrap_err();
        assert!(err.to_string().contains("unknown head: not"), "{err}");
        assert!(parse_formula("(in z x1)").is_err());
        assert!(parse_formula("(some x1 x2 (in x1 x1))").is_err());
        assert!(parse_formula("(some z x1 (some z x1 (in z z)))").is_err());
        assert!(parse_formula("(in x1 x1) extra").is_err());
    }

    #[test]
    fn file_parsing_skips_comments() {
        let fs = parse_formula_file("; header\n(in x1 x2) ; trailing\n\n(= x1 x1)\n").unwrap();
        assert_eq!(fs.len(), 2);
        assert!(parse_formula_file("(in x1 x2)\n(bad)").is_err());
    }

    #[test]
    fn eval_examples() {
        let u = Universe::default();
        let any = hf("{{}}");
        assert!(eval_formula(&parse_formula("(= x1 x1)").unwrap(), &[any], &u).unwrap());
        assert!(eval_formula(&Formula::member(1, 2), &[hf("{}"), hf("{{}}")], &u).unwrap());
        let f = parse_formula("(all z x1 (in z x2))").unwrap();
        assert!(!eval_formula(&f, &[hf("{{}, {{}}}"), hf("{{}}")], &u).unwrap());
        let f = parse_formula("(some z x1 (in z x1))").unwrap();
        assert!(!eval_formula(&f, &[hf("#a")], &u).unwrap());
    }

    #[test]
    fn brute_force_extension_is_a_subset_of_the_product() {
        let u = Universe::new(vec![hf("{{}, {{}}}"), hf("{{{}}}")], vec![]);
        let a = brute_force_extension(&Formula::member(1, 2), &u).unwrap();
        assert_eq!(a, HfObject::set([HfObject::kpair(hf("{}"), hf("{{}}"))]));
        let e = Universe::new(vec![hf("{}"), hf("{{}}")], vec![]);
        assert_eq!(brute_force_extension(&Formula::equal(2, 2), &e).unwrap(), HfObject::empty());
    }

    #[test]
    fn substitution_respects_binders() {
        let z = Var::Bound("z".into());
        let f = Formula::and(Formula::Member(z.clone(), Var::Free(1)), parse_formula("(some z x1 (in z z))").unwrap());
        let g = f.substitute(&z, &Var::Free(3));
        assert_eq!(g.to_string(), "(and (in x3 x1) (some z x1 (in z z)))");
    }
}
