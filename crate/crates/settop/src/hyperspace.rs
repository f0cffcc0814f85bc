//! Exponential hyperspaces of finite topologies.
//!
//! The points of `Exp(X)` are the nonempty closed sets of `X`, sorted
//! lexicographically and addressed by index, so a hyperspace is again a
//! [`PointTopology`] and the construction can be iterated. Its topology is
//! generated by the sets `□a ∩ ◊b` for closed `a, b`, where `□a` collects
//! the closed subsets of `a` and `◊b` the closed sets meeting `b`.
//!
//! Every closed subset of a finite space is compact, so the variant of the
//! exponential restricted to compact closed sets coincides with `Exp` and
//! only one constructor is provided. The bound `K` does not influence
//! generation on finite spaces (see [`generate_topology`]).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finite_topology::{
    check_map, closure, generate_topology, is_continuous, KBound, PointSet, PointTopology, SpaceFile, MAX_POINTS,
};

/// Largest number of closed sets a base may have when a second exponential
/// is taken, as in [`kuratowski_check`].
pub const MAX_DOUBLE_EXP_BASE: usize = 7;

/// The exponential space of a finite topology.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperSpace {
    /// The base space.
    pub base: PointTopology,
    /// Nonempty closed sets of the base, sorted; hyperpoint `i` is `points[i]`.
    pub points: Vec<PointSet>,
    /// Topology on the hyperpoint indices.
    pub topology: PointTopology,
}

/// JSON export of a hyperspace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperSpaceFile {
    pub base: SpaceFile,
    pub points: Vec<Vec<usize>>,
    pub topology: SpaceFile,
}

/// JSON form of a map between finite spaces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapFile {
    pub from: usize,
    pub to: usize,
    pub table: Vec<usize>,
}

impl HyperSpace {
    /// Index of a hyperpoint, if `a` is a nonempty closed set of the base.
    pub fn index_of(&self, a: &PointSet) -> Option<usize> {
        self.points.binary_search(a).ok()
    }

    /// The set of hyperpoint indices of a collection of closed sets.
    pub fn indices_of(&self, sets: &[PointSet]) -> Result<PointSet> {
        let mut out = PointSet::empty(self.points.len());
        for s in sets {
            let i = self
                .index_of(s)
                .ok_or_else(|| Error::Precondition(format!("{s} is not a nonempty closed set of the base")))?;
            out.insert(i);
        }
        Ok(out)
    }

    /// Serializable description.
    pub fn to_file(&self) -> HyperSpaceFile {
        HyperSpaceFile {
            base: self.base.to_space_file(),
            points: self.points.iter().map(PointSet::to_indices).collect(),
            topology: self.topology.to_space_file(),
        }
    }
}

fn check_base_set(base: &PointTopology, a: &PointSet) -> Result<()> {
    if a.universe() != base.n() {
        return Err(Error::Precondition(format!(
            "set over {} points used with a {}-point space",
            a.universe(),
            base.n()
        )));
    }
    Ok(())
}

/// `□a`: the nonempty closed subsets of `a`, sorted.
pub fn hyper_box(base: &PointTopology, a: &PointSet) -> Result<Vec<PointSet>> {
    check_base_set(base, a)?;
    Ok(base.closed_sets().into_iter().filter(|c| c.is_subset(a)).collect())
}

/// `◊a`: the closed sets meeting `a`, sorted.
pub fn diamond(base: &PointTopology, a: &PointSet) -> Result<Vec<PointSet>> {
    check_base_set(base, a)?;
    Ok(base.closed_sets().into_iter().filter(|c| !c.is_disjoint(a)).collect())
}

/// Builds `Exp(base)` from the subbase `{□a ∩ ◊b | a, b closed}`, dropping
/// empty subbase members.
pub fn exp_space(base: &PointTopology, k: KBound) -> Result<HyperSpace> {
    let points = base.closed_sets_bounded(MAX_POINTS)?;
    let m = points.len();
    let boxes: Vec<PointSet> = points.iter().map(|a| index_set(m, points.iter().map(|c| c.is_subset(a)))).collect();
    let diamonds: Vec<PointSet> =
        points.iter().map(|b| index_set(m, points.iter().map(|c| !c.is_disjoint(b)))).collect();
    let mut subbase = Vec::with_capacity(m * m);
    for bx in &boxes {
        for dm in &diamonds {
            let s = bx.intersection(dm);
            if !s.is_empty() {
                subbase.push(s);
            }
        }
    }
    subbase.sort();
    subbase.dedup();
    let topology = generate_topology(m, &subbase, k)?;
    Ok(HyperSpace { base: base.clone(), points, topology })
}

fn index_set(m: usize, flags: impl Iterator<Item = bool>) -> PointSet {
    let mut s = PointSet::empty(m);
    for (i, f) in flags.enumerate() {
        if f {
            s.insert(i);
        }
    }
    s
}

/// `Exp(f)(a) = f[a]` for a continuous `f: X → Y` and a hyperpoint `a` of
/// `X`.
///
/// Continuous images of closed sets need not be closed when `Y` is not
/// T1: sending the single point of a one-point space to the open point of
/// the Sierpinski space is continuous, yet its image is not closed. Such
/// cases are reported as [`Error::ImageNotClosed`].
pub fn exp_map(f: &[usize], x: &PointTopology, y: &PointTopology, a: &PointSet) -> Result<PointSet> {
    check_map(f, x, y)?;
    if !is_continuous(f, x, y)? {
        return Err(Error::NotContinuous(format!("table {f:?}")));
    }
    check_base_set(x, a)?;
    if a.is_empty() || !x.is_closed(a) {
        return Err(Error::Precondition(format!("{a} is not a hyperpoint of the domain")));
    }
    let mut image = PointSet::empty(y.n());
    for p in a.iter() {
        image.insert(f[p]);
    }
    if !y.is_closed(&image) {
        return Err(Error::ImageNotClosed(image.to_string()));
    }
    Ok(image)
}

/// Outcome of the Kuratowski-square containment check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KuratowskiReport {
    /// Number of hyperpoints of `Exp(Exp(base))`.
    pub double_exp_points: usize,
    /// Number of encoded pairs `⟨x,y⟩` with `x, y ∈ a`.
    pub pairs: usize,
    /// Size of `s = □≤2 □≤2 a ∩ ◊ □≤1 a`.
    pub s_size: usize,
    /// Whether `a² ⊆ s`.
    pub contained: bool,
    /// Whether `a²` is closed in `Exp(Exp(base))`.
    pub closed: bool,
}

impl KuratowskiReport {
    pub fn holds(&self) -> bool {
        self.contained && self.closed
    }
}

/// Encodes every Kuratowski pair `⟨x,y⟩ = {{x},{x,y}}` with `x, y ∈ a` as a
/// point of `Exp(Exp(base))` and checks that the resulting square lies in
/// `s = □≤2 □≤2 a ∩ ◊ □≤1 a` and is closed.
pub fn kuratowski_report(base: &PointTopology, a: &PointSet) -> Result<KuratowskiReport> {
    check_base_set(base, a)?;
    if !crate::finite_topology::separation_profile(base).t2 {
        return Err(Error::Precondition("the base space must be Hausdorff".into()));
    }
    if !base.is_closed(a) {
        return Err(Error::Precondition(format!("{a} is not closed")));
    }
    let base_closed = base.closed_sets_bounded(MAX_DOUBLE_EXP_BASE)?;
    let n = base.n();
    let e1 = exp_space(base, KBound::Unbounded)?;
    let e2 = exp_space(&e1.topology, KBound::Unbounded)?;
    let m1 = e1.points.len();

    let mut square = PointSet::empty(e2.points.len());
    for x in a.iter() {
        for y in a.iter() {
            let sx = PointSet::from_indices(n, &[x])?;
            let sxy = PointSet::from_indices(n, &[x, y])?;
            let pair = e1.indices_of(&[sx, sxy])?;
            let idx = e2
                .index_of(&pair)
                .ok_or_else(|| Error::Inconsistent(format!("pair {pair} is not a point of the double exponential")))?;
            square.insert(idx);
        }
    }

    let small_subsets = |bound: usize| {
        let sets: Vec<PointSet> = base_closed.iter().filter(|b| b.is_subset(a) && b.len() <= bound).copied().collect();
        e1.indices_of(&sets)
    };
    let box2 = small_subsets(2)?;
    let box1 = small_subsets(1)?;
    let mut s = PointSet::empty(e2.points.len());
    for (i, c) in e2.points.iter().enumerate() {
        debug_assert_eq!(c.universe(), m1);
        if c.is_subset(&box2) && c.len() <= 2 && !c.is_disjoint(&box1) {
            s.insert(i);
        }
    }

    Ok(KuratowskiReport {
        double_exp_points: e2.points.len(),
        pairs: square.len(),
        s_size: s.len(),
        contained: square.is_subset(&s),
        closed: closure(&e2.topology, &square)? == square,
    })
}

/// Boolean form of [`kuratowski_report`].
pub fn kuratowski_check(base: &PointTopology, a: &PointSet) -> Result<bool> {
    Ok(kuratowski_report(base, a)?.holds())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_topology::separation_profile;

    fn set(n: usize, xs: &[usize]) -> PointSet {
        PointSet::from_indices(n, xs).unwrap()
    }

    #[test]
    fn box_and_diamond_examples() {
        let d2 = PointTopology::discrete(2).unwrap();
        assert_eq!(hyper_box(&d2, &set(2, &[0])).unwrap(), vec![set(2, &[0])]);
        assert_eq!(hyper_box(&d2, &set(2, &[0, 1])).unwrap(), vec![set(2, &[0]), set(2, &[0, 1]), set(2, &[1])]);
        assert!(hyper_box(&d2, &PointSet::empty(2)).unwrap().is_empty());
        assert_eq!(diamond(&d2, &set(2, &[0])).unwrap(), vec![set(2, &[0]), set(2, &[0, 1])]);
        assert_eq!(diamond(&d2, &PointSet::full(2)).unwrap().len(), 3);
        assert!(diamond(&d2, &PointSet::empty(2)).unwrap().is_empty());
    }

    #[test]
    fn exp_space_examples() {
        let e = exp_space(&PointTopology::discrete(2).unwrap(), KBound::Unbounded).unwrap();
        assert_eq!(e.points.len(), 3);
        assert_eq!(e.topology, PointTopology::discrete(3).unwrap());
        assert_eq!(e.topology.closed_sets().len(), 7);

        let one = exp_space(&PointTopology::discrete(1).unwrap(), KBound::Unbounded).unwrap();
        assert_eq!(one.points, vec![set(1, &[0])]);

        let sierpinski = PointTopology::from_family(2, &[set(2, &[0]), set(2, &[0, 1])]).unwrap();
        let e = exp_space(&sierpinski, KBound::Unbounded).unwrap();
        assert_eq!(e.points, vec![set(2, &[0]), set(2, &[0, 1])]);
        // {0} = □{0} is closed, {0,1} is not, so the hyperspace is again Sierpinski.
        assert_eq!(e.topology.closed_sets(), vec![set(2, &[0]), set(2, &[0, 1])]);
    }

    #[test]
    fn exp_map_examples() {
        let d2 = PointTopology::discrete(2).unwrap();
        let d1 = PointTopology::discrete(1).unwrap();
        assert_eq!(exp_map(&[0, 1], &d2, &d2, &set(2, &[1])).unwrap(), set(2, &[1]));
        assert_eq!(exp_map(&[1, 1], &d2, &d2, &set(2, &[0, 1])).unwrap(), set(2, &[1]));
        assert_eq!(exp_map(&[0, 0], &d2, &d1, &set(2, &[0, 1])).unwrap(), set(1, &[0]));

        let sierpinski = PointTopology::from_family(2, &[set(2, &[0]), set(2, &[0, 1])]).unwrap();
        assert!(matches!(exp_map(&[1], &d1, &sierpinski, &set(1, &[0])), Err(Error::ImageNotClosed(_))));
        assert!(matches!(exp_map(&[1, 0], &sierpinski, &sierpinski, &set(2, &[0])), Err(Error::NotContinuous(_))));
    }

    #[test]
    fn kuratowski_examples() {
        let d2 = PointTopology::discrete(2).unwrap();
        let r = kuratowski_report(&d2, &PointSet::full(2)).unwrap();
        assert_eq!((r.double_exp_points, r.pairs), (7, 4));
        assert!(r.holds());
        assert!(kuratowski_check(&d2, &set(2, &[1])).unwrap());
        assert!(kuratowski_check(&d2, &PointSet::empty(2)).unwrap());

        let sierpinski = PointTopology::from_family(2, &[set(2, &[0]), set(2, &[0, 1])]).unwrap();
        assert!(kuratowski_check(&sierpinski, &PointSet::full(2)).is_err());
        assert!(matches!(
            kuratowski_check(&PointTopology::discrete(4).unwrap(), &PointSet::full(4)),
            Err(Error::Guard { .. })
        ));
    }

    #[test]
    fn discrete_exp_is_discrete() {
        for n in 1..=3 {
            let e = exp_space(&PointTopology::discrete(n).unwrap(), KBound::Unbounded).unwrap();
            assert!(separation_profile(&e.topology).t1);
        }
    }
}
