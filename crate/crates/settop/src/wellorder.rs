//! Well-orders from choice functions, uniformization of finite relations
//! and finite order-type arithmetic.
//!
//! Given a choice function `f` on the nonempty subsets of a finite carrier
//! `a`, the maximal approximation chain is `a ⊋ a \ {f(a)} ⊋ …`, ending in
//! a singleton. Ranking each point by the chain step at which it is chosen
//! gives a well-order, and `b ↦ f(b)` restricted to the chain is a
//! bijection onto `a`. At finite scale the chain has no limit stages, so the
//! clause about intersections of initial segments never applies.

use std::collections::BTreeMap;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finite_topology::PointSet;

/// Largest carrier for which choice functions are tabulated.
pub const MAX_CARRIER: usize = 8;

/// A choice of one member from every nonempty subset of `0..carrier`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChoiceFunction {
    carrier: usize,
    table: BTreeMap<PointSet, usize>,
}

/// JSON form: `{"carrier": n, "choice": {"[0,1]": 1, ...}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChoiceFile {
    pub carrier: usize,
    pub choice: BTreeMap<String, usize>,
}

fn nonempty_subsets(n: usize) -> impl Iterator<Item = PointSet> {
    (1u128..1 << n).map(move |b| PointSet::from_bits(n, b).expect("within carrier"))
}

impl ChoiceFunction {
    /// Tabulates `pick` on every nonempty subset and validates the result.
    pub fn from_fn(carrier: usize, mut pick: impl FnMut(&PointSet) -> usize) -> Result<Self> {
        if carrier == 0 || carrier > MAX_CARRIER {
            return Err(Error::Guard { what: "carrier size", value: carrier, limit: MAX_CARRIER });
        }
        let table = nonempty_subsets(carrier).map(|b| (b, pick(&b))).collect();
        let f = ChoiceFunction { carrier, table };
        f.validate()?;
        Ok(f)
    }

    /// `f(b) = min b`.
    pub fn min(carrier: usize) -> Result<Self> {
        Self::from_fn(carrier, |b| b.iter().next().expect("nonempty"))
    }

    /// `f(b) = max b`.
    pub fn max(carrier: usize) -> Result<Self> {
        Self::from_fn(carrier, |b| b.iter().last().expect("nonempty"))
    }

    /// A uniformly random member of each subset.
    pub fn random(carrier: usize, rng: &mut impl Rng) -> Result<Self> {
        Self::from_fn(carrier, |b| {
            let members = b.to_indices();
            members[rng.gen_range(0..members.len())]
        })
    }

    pub fn carrier(&self) -> usize {
        self.carrier
    }

    /// `f(b)`, for a nonempty subset of the carrier.
    pub fn choose(&self, b: &PointSet) -> Result<usize> {
        self.table.get(b).copied().ok_or_else(|| Error::Precondition(format!("choice function undefined on {b}")))
    }

    /// Totality on nonempty subsets and `f(b) ∈ b`.
    pub fn validate(&self) -> Result<()> {
        for b in nonempty_subsets(self.carrier) {
            let x = self.choose(&b)?;
            if !b.contains(x) {
                return Err(Error::Precondition(format!("f({b}) = {x} is not a member")));
            }
        }
        if self.table.len() != (1 << self.carrier) - 1 {
            return Err(Error::Precondition("choice table has entries outside the carrier".into()));
        }
        Ok(())
    }

    pub fn to_file(&self) -> ChoiceFile {
        let choice = self
            .table
            .iter()
            .map(|(b, &x)| (serde_json::to_string(&b.to_indices()).expect("serializable"), x))
            .collect();
        ChoiceFile { carrier: self.carrier, choice }
    }

    pub fn from_file(file: &ChoiceFile) -> Result<Self> {
        if file.carrier == 0 || file.carrier > MAX_CARRIER {
            return Err(Error::Guard { what: "carrier size", value: file.carrier, limit: MAX_CARRIER });
        }
        let mut table = BTreeMap::new();
        for (key, &x) in &file.choice {
            let idx: Vec<usize> = serde_json::from_str(key)
                .map_err(|e| Error::Parse { pos: 0, msg: format!("bad subset key {key}: {e}") })?;
            table.insert(PointSet::from_indices(file.carrier, &idx)?, x);
        }
        let f = ChoiceFunction { carrier: file.carrier, table };
        f.validate()?;
        Ok(f)
    }
}

/// A strictly `⊇`-decreasing list of nonempty subsets of the carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproximationChain {
    pub sets: Vec<PointSet>,
}

impl ApproximationChain {
    /// The chain starts at the carrier, each step removes the chosen point,
    /// and it ends in a singleton.
    pub fn check(&self, f: &ChoiceFunction) -> Result<()> {
        let n = f.carrier();
        let first = self.sets.first().ok_or_else(|| Error::Inconsistent("empty chain".into()))?;
        if *first != PointSet::full(n) {
            return Err(Error::Inconsistent(format!("chain starts at {first}, not the carrier")));
        }
        for w in self.sets.windows(2) {
            let expected = w[0].without(f.choose(&w[0])?);
            if w[1] != expected || !w[1].is_subset(&w[0]) || w[1] == w[0] {
                return Err(Error::Inconsistent(format!("{} does not follow {}", w[1], w[0])));
            }
        }
        let last = self.sets.last().expect("nonempty");
        if last.len() != 1 {
            return Err(Error::Inconsistent(format!("chain ends at {last}, not a singleton")));
        }
        Ok(())
    }
}

/// A total order on `0..len`, listed from least to greatest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteOrder {
    pub order: Vec<usize>,
}

impl FiniteOrder {
    /// `0 < 1 < … < len − 1`.
    pub fn standard(len: usize) -> Self {
        FiniteOrder { order: (0..len).collect() }
    }

    /// Checks that the listing is a permutation of the carrier.
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; order.len()];
        for &x in &order {
            if x >= order.len() || std::mem::replace(&mut seen[x], true) {
                return Err(Error::Precondition(format!("{order:?} is not a permutation")));
            }
        }
        Ok(FiniteOrder { order })
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.len()];
        for (i, &x) in self.order.iter().enumerate() {
            pos[x] = i;
        }
        pos
    }

    /// `x ≤ y`.
    pub fn le(&self, x: usize, y: usize) -> bool {
        let pos = self.positions();
        pos[x] <= pos[y]
    }

    /// Reflexivity, antisymmetry, transitivity and totality of `≤`, checked
    /// over all pairs and triples.
    pub fn check_invariants(&self) -> Result<()> {
        let n = self.len();
        let pos = self.positions();
        let le = |x: usize, y: usize| pos[x] <= pos[y];
        for x in 0..n {
            if !le(x, x) {
                return Err(Error::Inconsistent(format!("{x} ≤ {x} fails")));
            }
            for y in 0..n {
                if x != y && le(x, y) && le(y, x) {
                    return Err(Error::Inconsistent(format!("{x} and {y} are mutually below")));
                }
                if !le(x, y) && !le(y, x) {
                    return Err(Error::Inconsistent(format!("{x} and {y} are incomparable")));
                }
                for z in 0..n {
                    if le(x, y) && le(y, z) && !le(x, z) {
                        return Err(Error::Inconsistent(format!("{x} ≤ {y} ≤ {z} but not {x} ≤ {z}")));
                    }
                }
            }
        }
        Ok(())
    }
}

/// The chain, the order read off it, and whether `b ↦ f(b)` on the chain is
/// a bijection onto the carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WellOrderFromChoice {
    pub chain: ApproximationChain,
    pub order: FiniteOrder,
    pub bijective: bool,
}

/// Builds the maximal approximation chain for `f` and the induced order.
pub fn wellorder_from_choice(f: &ChoiceFunction) -> Result<WellOrderFromChoice> {
    f.validate()?;
    let n = f.carrier();
    let mut sets = vec![PointSet::full(n)];
    let mut picks = Vec::with_capacity(n);
    loop {
        let b = *sets.last().expect("nonempty");
        let x = f.choose(&b)?;
        picks.push(x);
        let next = b.without(x);
        if next.is_empty() {
            break;
        }
        sets.push(next);
    }
    let chain = ApproximationChain { sets };
    chain.check(f)?;
    let mut hit = vec![0usize; n];
    for &x in &picks {
        hit[x] += 1;
    }
    let bijective = picks.len() == chain.sets.len() && hit.iter().all(|&c| c == 1);
    let order = FiniteOrder::new(picks)?;
    order.check_invariants()?;
    Ok(WellOrderFromChoice { chain, order, bijective })
}

/// A function contained in `r` with the same domain, picking the least
/// second component for each first component.
pub fn uniformize<A: Ord + Clone, B: Ord + Clone>(r: &[(A, B)]) -> Vec<(A, B)> {
    let mut best: BTreeMap<A, B> = BTreeMap::new();
    for (x, y) in r {
        best.entry(x.clone())
            .and_modify(|cur| {
                if y < cur {
                    *cur = y.clone();
                }
            })
            .or_insert_with(|| y.clone());
    }
    best.into_iter().collect()
}

/// `a + b`: every element of `a` before every element of `b`, with `b`'s
/// carrier shifted by `|a|`.
pub fn order_sum(a: &FiniteOrder, b: &FiniteOrder) -> FiniteOrder {
    let shift = a.len();
    FiniteOrder { order: a.order.iter().copied().chain(b.order.iter().map(|&y| y + shift)).collect() }
}

/// `a · b`: `|b|` copies of `a` in the order of `b`, the pair `(x, y)`
/// carried as `x + |a|·y`.
pub fn order_product(a: &FiniteOrder, b: &FiniteOrder) -> FiniteOrder {
    let n = a.len();
    FiniteOrder { order: b.order.iter().flat_map(|&y| a.order.iter().map(move |&x| x + n * y)).collect() }
}

/// The supremum of finite order types: the standard order of the largest
/// length, or the empty order.
pub fn order_sup(orders: &[FiniteOrder]) -> FiniteOrder {
    FiniteOrder::standard(orders.iter().map(FiniteOrder::len).max().unwrap_or(0))
}

/// Maps each element, in order, to its initial segment `(−∞, x]` and checks
/// that the segments form a strictly increasing `⊆`-chain.
pub fn chain_embedding(w: &FiniteOrder) -> Result<Vec<PointSet>> {
    let n = w.len();
    let mut out = Vec::with_capacity(n);
    let mut acc = PointSet::empty(n);
    for &x in &w.order {
        acc.insert(x);
        out.push(acc);
    }
    for pair in out.windows(2) {
        if !pair[0].is_subset(&pair[1]) || pair[0] == pair[1] {
            return Err(Error::Inconsistent("initial segments are not a strict chain".into()));
        }
    }
    if order_from_chain(&out)? != *w {
        return Err(Error::Inconsistent("the chain does not recover the order".into()));
    }
    Ok(out)
}

/// Recovers an order from a `⊆`-chain of initial segments by sorting the
/// segments by inclusion and reading off the new point at each step.
pub fn order_from_chain(chain: &[PointSet]) -> Result<FiniteOrder> {
    let mut sorted = chain.to_vec();
    sorted.sort_by_key(PointSet::len);
    let mut order = Vec::with_capacity(sorted.len());
    let mut prev: Option<PointSet> = None;
    for s in &sorted {
        let fresh = match prev {
            Some(p) if p.is_subset(s) => s.difference(&p),
            Some(_) => return Err(Error::Precondition("segments are not nested".into())),
            None => *s,
        };
        if fresh.len() != 1 {
            return Err(Error::Precondition(format!("segment {s} adds {} points", fresh.len())));
        }
        order.extend(fresh.iter());
        prev = Some(*s);
    }
    FiniteOrder::new(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ps(n: usize, xs: &[usize]) -> PointSet {
        PointSet::from_indices(n, xs).unwrap()
    }

    #[test]
    fn choice_examples() {
        let r = wellorder_from_choice(&ChoiceFunction::min(3).unwrap()).unwrap();
        assert_eq!(r.order.order, vec![0, 1, 2]);
        assert_eq!(r.chain.sets, vec![ps(3, &[0, 1, 2]), ps(3, &[1, 2]), ps(3, &[2])]);
        assert!(r.bijective);
        let r = wellorder_from_choice(&ChoiceFunction::min(1).unwrap()).unwrap();
        assert_eq!(r.order.order, vec![0]);
        let r = wellorder_from_choice(&ChoiceFunction::max(2).unwrap()).unwrap();
        assert_eq!(r.order.order, vec![1, 0]);
        assert_eq!(r.chain.sets, vec![ps(2, &[0, 1]), ps(2, &[0])]);
    }

    #[test]
    fn invalid_choices_are_rejected() {
        assert!(ChoiceFunction::from_fn(2, |_| 0).is_err());
        assert!(ChoiceFunction::from_fn(0, |_| 0).is_err());
    }

    #[test]
    fn choice_file_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let f = ChoiceFunction::random(3, &mut rng).unwrap();
        let json = serde_json::to_string(&f.to_file()).unwrap();
        assert!(json.contains("\"[0,1]\""));
        let back = ChoiceFunction::from_file(&serde_json::from_str(&json).unwrap()).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn uniformize_examples() {
        let r = vec![(0, 'a'), (0, 'b'), (1, 'a')];
        assert_eq!(uniformize(&r), vec![(0, 'a'), (1, 'a')]);
        let f = vec![(0, 'b'), (1, 'a')];
        assert_eq!(uniformize(&f), f);
        assert!(uniformize::<u8, u8>(&[]).is_empty());
    }

    #[test]
    fn arithmetic_examples() {
        let (two, three, five) = (FiniteOrder::standard(2), FiniteOrder::standard(3), FiniteOrder::standard(5));
        assert_eq!(order_sum(&two, &three).len(), 5);
        assert_eq!(order_product(&two, &three).len(), 6);
        assert_eq!(order_sup(&[two.clone(), five, three.clone()]).len(), 5);
        order_sum(&two, &three).check_invariants().unwrap();
        order_product(&two, &three).check_invariants().unwrap();
    }

    #[test]
    fn embedding_examples() {
        let w = FiniteOrder::new(vec![0, 1]).unwrap();
        assert_eq!(chain_embedding(&w).unwrap(), vec![ps(2, &[0]), ps(2, &[0, 1])]);
        assert_eq!(chain_embedding(&FiniteOrder::standard(1)).unwrap(), vec![ps(1, &[0])]);
        let w = FiniteOrder::new(vec![2, 0, 1]).unwrap();
        assert_eq!(chain_embedding(&w).unwrap(), vec![ps(3, &[2]), ps(3, &[0, 2]), ps(3, &[0, 1, 2])]);
        assert!(FiniteOrder::new(vec![0, 0]).is_err());
    }
}
