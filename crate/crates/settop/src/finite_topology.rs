//! Finite topologies in the closed-set formulation.
//!
//! A topology on the points `0..n` is a family `T` of nonempty closed sets
//! that contains the whole space, is closed under nonempty intersections and
//! under binary unions. A set is *T-closed* when it is empty or a member of
//! `T`; open sets are complements of T-closed sets.
//!
//! Every finite topology is determined by the closures of its points: the
//! closed sets are exactly the nonempty unions of point closures. The
//! [`PointTopology`] type stores those point closures, which keeps closure,
//! interior and the separation axioms linear in the number of points even
//! for spaces whose closed family is far too large to list.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported number of points in a space.
pub const MAX_POINTS: usize = 128;

/// Largest `n` accepted by [`enumerate_topologies`].
pub const MAX_ENUMERATION_POINTS: usize = 5;

/// A subset of the points `0..n` of an ambient space.
///
/// Sets are ordered lexicographically by their ascending index lists, so
/// `{0} < {0,1} < {0,1,2} < {0,2} < {1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PointSet {
    bits: u128,
    n: u8,
}

impl PointSet {
    fn mask(n: usize) -> u128 {
        if n == MAX_POINTS {
            u128::MAX
        } else {
            (1u128 << n) - 1
        }
    }

    fn check_n(n: usize) -> Result<()> {
        if n > MAX_POINTS {
            return Err(Error::TooManyPoints { n, max: MAX_POINTS });
        }
        Ok(())
    }

    /// The empty subset of an `n`-point space.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_POINTS, "spaces are limited to {MAX_POINTS} points");
        PointSet { bits: 0, n: n as u8 }
    }

    /// The full `n`-point space.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_POINTS, "spaces are limited to {MAX_POINTS} points");
        PointSet { bits: Self::mask(n), n: n as u8 }
    }

    /// The singleton `{x}`.
    pub fn singleton(n: usize, x: usize) -> Result<Self> {
        Self::from_indices(n, &[x])
    }

    /// Builds a set from point indices, rejecting indices outside `0..n`.
    pub fn from_indices(n: usize, indices: &[usize]) -> Result<Self> {
        Self::check_n(n)?;
        let mut s = PointSet { bits: 0, n: n as u8 };
        for &i in indices {
            if i >= n {
                return Err(Error::PointOutOfRange { point: i, n });
            }
            s.bits |= 1u128 << i;
        }
        Ok(s)
    }

    /// Builds a set from its bit pattern, rejecting bits outside `0..n`.
    pub fn from_bits(n: usize, bits: u128) -> Result<Self> {
        Self::check_n(n)?;
        if bits & !Self::mask(n) != 0 {
            let point = 127 - (bits & !Self::mask(n)).leading_zeros() as usize;
            return Err(Error::PointOutOfRange { point, n });
        }
        Ok(PointSet { bits, n: n as u8 })
    }

    /// Bit pattern of the members.
    pub fn bits(&self) -> u128 {
        self.bits
    }

    /// Size of the ambient space.
    pub fn universe(&self) -> usize {
        self.n as usize
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.universe() && self.bits >> x & 1 == 1
    }

    pub fn insert(&mut self, x: usize) {
        assert!(x < self.universe(), "point {x} out of range");
        self.bits |= 1u128 << x;
    }

    pub fn remove(&mut self, x: usize) {
        if x < self.universe() {
            self.bits &= !(1u128 << x);
        }
    }

    /// Copy of `self` without the point `x`.
    pub fn without(&self, x: usize) -> Self {
        let mut s = *self;
        s.remove(x);
        s
    }

    pub fn union(&self, other: &Self) -> Self {
        self.same_universe(other);
        PointSet { bits: self.bits | other.bits, n: self.n }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.same_universe(other);
        PointSet { bits: self.bits & other.bits, n: self.n }
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.same_universe(other);
        PointSet { bits: self.bits & !other.bits, n: self.n }
    }

    /// Complement relative to the ambient space.
    pub fn complement(&self) -> Self {
        PointSet { bits: !self.bits & Self::mask(self.universe()), n: self.n }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.same_universe(other);
        self.bits & !other.bits == 0
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.same_universe(other);
        self.bits & other.bits == 0
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let mut rest = self.bits;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }

    /// Members as an ascending index list.
    pub fn to_indices(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn same_universe(&self, other: &Self) {
        debug_assert_eq!(self.n, other.n, "point sets over different spaces");
    }
}

impl Ord for PointSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter()).then(self.n.cmp(&other.n))
    }
}

impl PartialOrd for PointSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// Finite stand-in for the class `K` of small index sets.
///
/// A family is K-small when its cardinality is below `k`; with
/// [`KBound::Unbounded`] every finite family is K-small.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum KBound {
    Finite(usize),
    Unbounded,
}

impl KBound {
    /// A finite bound, rejecting `k = 0`.
    pub fn finite(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::Precondition("KBound must be at least 1".into()));
        }
        Ok(KBound::Finite(k))
    }

    /// Whether a family of `card` members is K-small.
    pub fn is_small(&self, card: usize) -> bool {
        match *self {
            KBound::Finite(k) => card < k,
            KBound::Unbounded => true,
        }
    }
}

/// Separation axioms of a space.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeparationProfile {
    pub t0: bool,
    pub t1: bool,
    pub t2: bool,
    pub regular: bool,
    pub t3: bool,
    pub normal: bool,
    pub t4: bool,
}

/// A finite topology, stored as the closures of its points.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PointTopology {
    closures: Vec<PointSet>,
}

impl fmt::Debug for PointTopology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PointTopology").field("n", &self.n()).field("point_closures", &self.closures).finish()
    }
}

/// JSON form of a space: `{"points": n, "closed": [[indices...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceFile {
    pub points: usize,
    pub closed: Vec<Vec<usize>>,
}

impl PointTopology {
    /// Builds a topology from an explicit closed family after checking that
    /// it satisfies [`is_topology`].
    pub fn from_family(n: usize, family: &[PointSet]) -> Result<Self> {
        if !is_topology(n, family)? {
            return Err(Error::NotATopology(format!("family {family:?} on {n} points fails the closure conditions")));
        }
        let closures = (0..n)
            .map(|x| family.iter().filter(|c| c.contains(x)).fold(PointSet::full(n), |acc, c| acc.intersection(c)))
            .collect();
        Ok(PointTopology { closures })
    }

    /// Builds a topology from index lists, as read from a space file.
    pub fn from_index_lists(n: usize, family: &[Vec<usize>]) -> Result<Self> {
        let sets = family.iter().map(|c| PointSet::from_indices(n, c)).collect::<Result<Vec<_>>>()?;
        Self::from_family(n, &sets)
    }

    /// Builds a topology from point closures `cl{x}`, checking that they
    /// describe a preorder (`x ∈ cl{x}`, and `y ∈ cl{x}` implies
    /// `cl{y} ⊆ cl{x}`).
    pub fn from_point_closures(closures: Vec<PointSet>) -> Result<Self> {
        let n = closures.len();
        if n == 0 {
            return Err(Error::Precondition("a space needs at least one point".into()));
        }
        PointSet::check_n(n)?;
        for (x, c) in closures.iter().enumerate() {
            if c.universe() != n {
                return Err(Error::Precondition(format!(
                    "closure of point {x} lives in a {}-point space",
                    c.universe()
                )));
            }
            if !c.contains(x) {
                return Err(Error::NotATopology(format!("point {x} is not in its own closure")));
            }
            for y in c.iter() {
                if !closures[y].is_subset(c) {
                    return Err(Error::NotATopology(format!("closure of {y} is not contained in the closure of {x}")));
                }
            }
        }
        Ok(PointTopology { closures })
    }

    /// The discrete topology: every nonempty subset is closed.
    pub fn discrete(n: usize) -> Result<Self> {
        let closures = (0..n).map(|x| PointSet::singleton(n, x)).collect::<Result<_>>()?;
        Self::from_point_closures(closures)
    }

    /// The indiscrete topology: only the whole space is closed.
    pub fn indiscrete(n: usize) -> Result<Self> {
        PointSet::check_n(n)?;
        Self::from_point_closures(vec![PointSet::full(n); n])
    }

    /// Number of points.
    pub fn n(&self) -> usize {
        self.closures.len()
    }

    /// The whole space.
    pub fn full(&self) -> PointSet {
        PointSet::full(self.n())
    }

    /// The closure `cl{x}` of a point.
    pub fn point_closure(&self, x: usize) -> PointSet {
        self.closures[x]
    }

    /// All point closures, indexed by point.
    pub fn point_closures(&self) -> &[PointSet] {
        &self.closures
    }

    /// The smallest open set containing `x`: all `z` with `x ∈ cl{z}`.
    pub fn point_neighbourhood(&self, x: usize) -> PointSet {
        let n = self.n();
        let mut u = PointSet::empty(n);
        for z in 0..n {
            if self.closures[z].contains(x) {
                u.insert(z);
            }
        }
        u
    }

    /// Whether `a` is T-closed (empty or a member of the topology).
    pub fn is_closed(&self, a: &PointSet) -> bool {
        a.iter().all(|x| self.closures[x].is_subset(a))
    }

    /// Whether `a` is open.
    pub fn is_open(&self, a: &PointSet) -> bool {
        self.is_closed(&a.complement())
    }

    /// The nonempty closed sets, sorted lexicographically.
    ///
    /// The family can have up to `2^n − 1` members; use
    /// [`PointTopology::closed_sets_bounded`] when `n` is not small.
    pub fn closed_sets(&self) -> Vec<PointSet> {
        self.closed_sets_bounded(usize::MAX).expect("unbounded enumeration")
    }

    /// The nonempty closed sets, or a guard error if there are more than
    /// `limit` of them.
    pub fn closed_sets_bounded(&self, limit: usize) -> Result<Vec<PointSet>> {
        let mut seen: HashSet<u128> = HashSet::new();
        let mut frontier: Vec<PointSet> = Vec::new();
        for c in &self.closures {
            if seen.insert(c.bits) {
                frontier.push(*c);
            }
        }
        let generators = frontier.clone();
        let mut all = frontier.clone();
        while let Some(c) = frontier.pop() {
            for g in &generators {
                let u = c.union(g);
                if seen.insert(u.bits) {
                    if seen.len() > limit {
                        return Err(Error::Guard { what: "number of closed sets", value: seen.len(), limit });
                    }
                    frontier.push(u);
                    all.push(u);
                }
            }
        }
        all.sort();
        Ok(all)
    }

    /// Serializable description with the closed family listed explicitly.
    pub fn to_space_file(&self) -> SpaceFile {
        SpaceFile { points: self.n(), closed: self.closed_sets().iter().map(PointSet::to_indices).collect() }
    }

    /// Reads and validates a space description.
    pub fn from_space_file(file: &SpaceFile) -> Result<Self> {
        Self::from_index_lists(file.points, &file.closed)
    }

    /// Characteristic bit pattern of the closed family: bit `m − 1` is set
    /// when the subset with bit mask `m` is closed. Defined for `n ≤ 6`.
    pub fn family_pattern(&self) -> u64 {
        assert!(self.n() <= 6, "family patterns are defined for at most 6 points");
        self.closed_sets().iter().fold(0u64, |acc, c| acc | 1u64 << (c.bits as u64 - 1))
    }
}

/// Whether `family` is a topology on `n` points: no empty member, the whole
/// space is a member, nonempty intersections and binary unions stay inside.
///
/// Pairwise intersections suffice: if the intersection of a finite
/// subfamily is nonempty, so is every partial intersection along the way.
pub fn is_topology(n: usize, family: &[PointSet]) -> Result<bool> {
    PointSet::check_n(n)?;
    for c in family {
        if c.universe() != n {
            return Err(Error::PointOutOfRange { point: c.universe().max(n), n });
        }
    }
    if n == 0 || family.iter().any(PointSet::is_empty) {
        return Ok(false);
    }
    let members: HashSet<u128> = family.iter().map(|c| c.bits).collect();
    if !members.contains(&PointSet::full(n).bits) {
        return Ok(false);
    }
    for a in family {
        for b in family {
            if !members.contains(&(a.bits | b.bits)) {
                return Ok(false);
            }
            let meet = a.bits & b.bits;
            if meet != 0 && !members.contains(&meet) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn check_universe(t: &PointTopology, a: &PointSet) -> Result<()> {
    if a.universe() != t.n() {
        return Err(Error::Precondition(format!("set over {} points used with a {}-point space", a.universe(), t.n())));
    }
    Ok(())
}

/// The least T-closed superset of `a`; empty exactly when `a` is empty.
pub fn closure(t: &PointTopology, a: &PointSet) -> Result<PointSet> {
    check_universe(t, a)?;
    Ok(a.iter().fold(PointSet::empty(t.n()), |acc, x| acc.union(&t.point_closure(x))))
}

/// The largest open subset of `a`, computed as `∁cl(∁a)`.
pub fn interior(t: &PointTopology, a: &PointSet) -> Result<PointSet> {
    Ok(closure(t, &a.complement())?.complement())
}

/// Computes every separation flag of the space.
///
/// With `c(x) = cl{x}` and `U(x) = {z | x ∈ c(z)}` the smallest open
/// neighbourhood of `x`, the flags reduce to conditions on point closures:
/// T2 asks for pairwise disjoint `U(x)`, regularity asks that `x, a ∈ c(z)`
/// implies `x ∈ c(a)`, and normality asks that `a, b ∈ c(z)` implies
/// `c(a) ∩ c(b) ≠ ∅`.
pub fn separation_profile(t: &PointTopology) -> SeparationProfile {
    let n = t.n();
    let c = t.point_closures();
    let nbhd: Vec<PointSet> = (0..n).map(|x| t.point_neighbourhood(x)).collect();

    let t0 = (0..n).all(|x| (x + 1..n).all(|y| c[x] != c[y]));
    let t1 = (0..n).all(|x| c[x].len() == 1);
    let t2 = (0..n).all(|x| (x + 1..n).all(|y| nbhd[x].is_disjoint(&nbhd[y])));
    let regular = c.iter().all(|cz| cz.iter().all(|x| cz.iter().all(|a| c[a].contains(x))));
    let normal = c.iter().all(|cz| cz.iter().all(|a| cz.iter().all(|b| !c[a].is_disjoint(&c[b]))));

    SeparationProfile { t0, t1, t2, regular, t3: regular && t1, normal, t4: normal && t1 }
}

/// Whether `a` is a discrete subset: it has at most one point, or every
/// `x ∈ a` has a closed `b` with `a ⊆ b ∪ {x}` and `x ∉ b`.
///
/// The witness `b` exists exactly when `x ∉ cl(a \ {x})`, which is how the
/// check is carried out.
pub fn is_discrete_subset(t: &PointTopology, a: &PointSet) -> Result<bool> {
    check_universe(t, a)?;
    if a.len() <= 1 {
        return Ok(true);
    }
    for x in a.iter() {
        if closure(t, &a.without(x))?.contains(x) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether every cocover (closed family with empty intersection) has a
/// K-small subcocover.
///
/// It suffices to inspect minimal cocovers, since any cocover contains one.
/// The search extends families in index order and only keeps a new member
/// when it strictly shrinks the running intersection, so every explored
/// family is irredundant and the depth is at most `n + 1`.
pub fn is_k_compact(t: &PointTopology, k: KBound) -> bool {
    let KBound::Finite(k) = k else {
        return true;
    };
    let closed = t.closed_sets();
    let mut chosen: Vec<usize> = Vec::new();
    !has_large_minimal_cocover(&closed, t.full(), 0, &mut chosen, k)
}

fn has_large_minimal_cocover(
    closed: &[PointSet],
    meet: PointSet,
    start: usize,
    chosen: &mut Vec<usize>,
    k: usize,
) -> bool {
    for i in start..closed.len() {
        let next = meet.intersection(&closed[i]);
        if next == meet {
            continue;
        }
        chosen.push(i);
        let found = if next.is_empty() {
            chosen.len() >= k && is_minimal_cocover(closed, chosen)
        } else {
            has_large_minimal_cocover(closed, next, i + 1, chosen, k)
        };
        chosen.pop();
        if found {
            return true;
        }
    }
    false
}

fn is_minimal_cocover(closed: &[PointSet], chosen: &[usize]) -> bool {
    let n = closed[chosen[0]].universe();
    (0..chosen.len()).all(|skip| {
        let rest = chosen
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != skip)
            .fold(PointSet::full(n), |acc, (_, &i)| acc.intersection(&closed[i]));
        !rest.is_empty()
    })
}

fn check_subbase(n: usize, subbase: &[PointSet]) -> Result<()> {
    if n == 0 {
        return Err(Error::Precondition("a space needs at least one point".into()));
    }
    PointSet::check_n(n)?;
    for s in subbase {
        if s.universe() != n {
            return Err(Error::Precondition(format!("subbase member {s} lives in a {}-point space", s.universe())));
        }
        if s.is_empty() {
            return Err(Error::EmptySet("subbase member".into()));
        }
    }
    Ok(())
}

/// The smallest topology containing `subbase` and the whole space.
///
/// On a finite space the binary-union requirement already forces closure
/// under every finite union, so the bound `k` does not change the result.
/// The point closures are read off directly: the closure of `y` is the
/// intersection of the whole space with every subbase member containing `y`.
pub fn generate_topology(n: usize, subbase: &[PointSet], _k: KBound) -> Result<PointTopology> {
    check_subbase(n, subbase)?;
    let closures = (0..n)
        .map(|y| subbase.iter().filter(|s| s.contains(y)).fold(PointSet::full(n), |acc, s| acc.intersection(s)))
        .collect();
    PointTopology::from_point_closures(closures)
}

/// The generated closed family computed literally, by closing the subbase
/// plus the whole space under nonempty binary intersections and binary
/// unions until nothing changes. Sorted lexicographically. Binary unions
/// are always admitted, so `k` has no effect on finite spaces.
///
/// This is the definitional counterpart of [`generate_topology`] and is
/// only practical for small spaces.
pub fn generate_family_fixpoint(n: usize, subbase: &[PointSet], _k: KBound) -> Result<Vec<PointSet>> {
    check_subbase(n, subbase)?;
    let mut family: Vec<PointSet> = Vec::new();
    let mut seen: HashSet<u128> = HashSet::new();
    for s in subbase.iter().copied().chain([PointSet::full(n)]) {
        if seen.insert(s.bits) {
            family.push(s);
        }
    }
    loop {
        let mut added = Vec::new();
        for a in &family {
            for b in &family {
                let join = a.union(b);
                let meet = a.intersection(b);
                if seen.insert(join.bits) {
                    added.push(join);
                }
                if !meet.is_empty() && seen.insert(meet.bits) {
                    added.push(meet);
                }
            }
        }
        if added.is_empty() {
            break;
        }
        family.extend(added);
    }
    family.sort();
    Ok(family)
}

/// Whether `f` (given as a table of images) is a continuous map from `x` to
/// `y`: the preimage of every closed set is closed.
///
/// Closed sets of `y` are unions of point closures and preimages commute
/// with unions, so checking the point closures of `y` suffices.
pub fn is_continuous(f: &[usize], x: &PointTopology, y: &PointTopology) -> Result<bool> {
    check_map(f, x, y)?;
    for target in 0..y.n() {
        let c = y.point_closure(target);
        if !x.is_closed(&preimage(f, x.n(), &c)) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub(crate) fn check_map(f: &[usize], x: &PointTopology, y: &PointTopology) -> Result<()> {
    if f.len() != x.n() {
        return Err(Error::Precondition(format!("map table has {} entries for a {}-point domain", f.len(), x.n())));
    }
    if let Some(&bad) = f.iter().find(|&&v| v >= y.n()) {
        return Err(Error::PointOutOfRange { point: bad, n: y.n() });
    }
    Ok(())
}

pub(crate) fn preimage(f: &[usize], n: usize, c: &PointSet) -> PointSet {
    let mut p = PointSet::empty(n);
    for (i, &v) in f.iter().enumerate() {
        if c.contains(v) {
            p.insert(i);
        }
    }
    p
}

/// Every topology on `n` points, each exactly once, ordered by the numeric
/// value of [`PointTopology::family_pattern`].
///
/// Topologies are produced from their specialization preorders: each point
/// gets a closure containing it, and the choice is kept when the closures
/// are transitive.
pub fn enumerate_topologies(n: usize) -> Result<Vec<PointTopology>> {
    if n > MAX_ENUMERATION_POINTS {
        return Err(Error::Guard { what: "points to enumerate", value: n, limit: MAX_ENUMERATION_POINTS });
    }
    if n == 0 {
        return Err(Error::Precondition("a space needs at least one point".into()));
    }
    let mut out = Vec::new();
    let mut current: Vec<u128> = Vec::with_capacity(n);
    enumerate_preorders(n, &mut current, &mut out);
    let mut keyed: Vec<(u64, PointTopology)> = out.into_iter().map(|t| (t.family_pattern(), t)).collect();
    keyed.sort_by_key(|(k, _)| *k);
    Ok(keyed.into_iter().map(|(_, t)| t).collect())
}

fn enumerate_preorders(n: usize, current: &mut Vec<u128>, out: &mut Vec<PointTopology>) {
    let x = current.len();
    if x == n {
        let transitive = (0..n).all(|a| (0..n).all(|b| current[a] >> b & 1 == 0 || current[b] & !current[a] == 0));
        if transitive {
            let closures = current.iter().map(|&bits| PointSet::from_bits(n, bits).expect("bits in range")).collect();
            out.push(PointTopology::from_point_closures(closures).expect("valid preorder"));
        }
        return;
    }
    let others = PointSet::full(n).bits & !(1u128 << x);
    let mut sub: u128 = 0;
    loop {
        current.push(sub | 1u128 << x);
        enumerate_preorders(n, current, out);
        current.pop();
        if sub == others {
            break;
        }
        sub = (sub.wrapping_sub(others)) & others;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, xs: &[usize]) -> PointSet {
        PointSet::from_indices(n, xs).unwrap()
    }

    fn chain3() -> PointTopology {
        PointTopology::from_family(3, &[set(3, &[0]), set(3, &[0, 1]), set(3, &[0, 1, 2])]).unwrap()
    }

    #[test]
    fn point_set_order_is_lexicographic() {
        let mut v = [set(3, &[1]), set(3, &[0, 2]), set(3, &[0, 1, 2]), set(3, &[0]), set(3, &[0, 1])];
        v.sort();
        let lists: Vec<_> = v.iter().map(PointSet::to_indices).collect();
        assert_eq!(lists, vec![vec![0], vec![0, 1], vec![0, 1, 2], vec![0, 2], vec![1]]);
    }

    #[test]
    fn out_of_range_points_are_rejected() {
        assert_eq!(PointSet::from_indices(2, &[2]), Err(Error::PointOutOfRange { point: 2, n: 2 }));
        assert!(PointSet::from_bits(2, 0b100).is_err());
    }

    #[test]
    fn is_topology_examples() {
        assert!(is_topology(3, &[set(3, &[0]), set(3, &[0, 1]), set(3, &[0, 1, 2])]).unwrap());
        assert!(!is_topology(2, &[set(2, &[0]), set(2, &[1])]).unwrap());
        assert!(is_topology(1, &[set(1, &[0])]).unwrap());
        assert!(is_topology(3, &[set(4, &[0])]).is_err());
    }

    #[test]
    fn closure_and_interior_examples() {
        let t = chain3();
        assert_eq!(closure(&t, &set(3, &[1])).unwrap(), set(3, &[0, 1]));
        assert_eq!(closure(&t, &PointSet::empty(3)).unwrap(), PointSet::empty(3));
        assert_eq!(closure(&t, &PointSet::full(3)).unwrap(), PointSet::full(3));
        // {0} is closed, so its complement {1,2} is already open.
        assert_eq!(interior(&t, &set(3, &[1, 2])).unwrap(), set(3, &[1, 2]));
        assert_eq!(interior(&t, &set(3, &[0, 2])).unwrap(), set(3, &[2]));
        assert_eq!(interior(&t, &PointSet::full(3)).unwrap(), PointSet::full(3));
        assert_eq!(interior(&t, &PointSet::empty(3)).unwrap(), PointSet::empty(3));
    }

    #[test]
    fn separation_examples() {
        let d = separation_profile(&PointTopology::discrete(2).unwrap());
        assert!(d.t0 && d.t1 && d.t2 && d.regular && d.t3 && d.normal && d.t4);
        let s = PointTopology::from_family(2, &[set(2, &[0]), set(2, &[0, 1])]).unwrap();
        let p = separation_profile(&s);
        assert!(p.t0 && !p.t1);
        let p = separation_profile(&chain3());
        assert!(p.t0 && !p.t1);
    }

    #[test]
    fn discrete_subset_examples() {
        let d = PointTopology::discrete(3).unwrap();
        assert!(is_discrete_subset(&d, &PointSet::full(3)).unwrap());
        assert!(!is_discrete_subset(&chain3(), &set(3, &[0, 1])).unwrap());
        assert!(is_discrete_subset(&chain3(), &set(3, &[2])).unwrap());
    }

    #[test]
    fn compactness_examples() {
        let d3 = PointTopology::discrete(3).unwrap();
        assert!(is_k_compact(&d3, KBound::Unbounded));
        assert!(!is_k_compact(&d3, KBound::finite(2).unwrap()));
        assert!(is_k_compact(&d3, KBound::finite(4).unwrap()));
        let one = PointTopology::discrete(1).unwrap();
        assert!(is_k_compact(&one, KBound::finite(1).unwrap()));
    }

    #[test]
    fn generation_examples() {
        let t = generate_topology(2, &[set(2, &[0]), set(2, &[1])], KBound::Unbounded).unwrap();
        assert_eq!(t, PointTopology::discrete(2).unwrap());
        let t = generate_topology(3, &[set(3, &[0, 1]), set(3, &[1, 2])], KBound::Unbounded).unwrap();
        assert_eq!(t.closed_sets(), vec![set(3, &[0, 1]), set(3, &[0, 1, 2]), set(3, &[1]), set(3, &[1, 2])]);
        let t = generate_topology(1, &[], KBound::Unbounded).unwrap();
        assert_eq!(t.closed_sets(), vec![set(1, &[0])]);
        assert!(generate_topology(2, &[PointSet::empty(2)], KBound::Unbounded).is_err());
    }

    #[test]
    fn enumeration_guard() {
        assert!(matches!(enumerate_topologies(6), Err(Error::Guard { .. })));
        assert_eq!(enumerate_topologies(1).unwrap().len(), 1);
    }

    #[test]
    fn space_file_round_trip() {
        let t = chain3();
        let json = serde_json::to_string(&t.to_space_file()).unwrap();
        assert_eq!(json, r#"{"points":3,"closed":[[0],[0,1],[0,1,2]]}"#);
        let back: SpaceFile = serde_json::from_str(&json).unwrap();
        assert_eq!(PointTopology::from_space_file(&back).unwrap(), t);
    }
}
