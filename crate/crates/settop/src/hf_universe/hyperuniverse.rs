//! Exhaustive search for finite hyperuniverse models.
//!
//! A witness is a finite space `W` that is `K`-compact and Hausdorff, an
//! open set of atoms `B ⊆ W`, and a homeomorphism `Φ: W \ B → Exp_K(W)`
//! where `W \ B` carries the relative topology. Finite Hausdorff spaces are
//! discrete, so `Exp_K(W)` has `2^|W| − 1` points and only the one-point
//! space can carry a witness; the search confirms this by brute force.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::finite_topology::{
    enumerate_topologies, is_continuous, is_k_compact, separation_profile, KBound, PointSet, PointTopology,
};
use crate::hyperspace::exp_space;

/// Largest number of points searched.
pub const MAX_SEARCH_POINTS: usize = 4;

/// One hyperuniverse model.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HyperuniverseWitness {
    pub points: usize,
    pub closed: Vec<Vec<usize>>,
    pub atoms: Vec<usize>,
    /// `(x, Φ(x))` for each `x ∈ W \ B`.
    pub phi: Vec<(usize, Vec<usize>)>,
}

/// Counts from a search together with every witness found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HyperuniverseSearch {
    pub max_points: usize,
    pub spaces_considered: usize,
    pub spaces_admissible: usize,
    pub atom_sets: usize,
    pub maps_checked: u64,
    pub witnesses: Vec<HyperuniverseWitness>,
}

fn relative(t: &PointTopology, s: &[usize]) -> Result<PointTopology> {
    let k = s.len();
    let mut family: Vec<PointSet> = t
        .closed_sets()
        .iter()
        .map(|c| {
            let idx: Vec<usize> = (0..k).filter(|&i| c.contains(s[i])).collect();
            PointSet::from_indices(k, &idx)
        })
        .collect::<Result<_>>()?;
    family.retain(|c| !c.is_empty());
    family.sort();
    family.dedup();
    PointTopology::from_family(k, &family)
}

/// Searches every `K`-compact Hausdorff topology on `1..=max_points`
/// points, every open `B`, and every map `W \ B → Exp_K(W)`.
pub fn search_hyperuniverses(max_points: usize, k: KBound) -> Result<HyperuniverseSearch> {
    if max_points > MAX_SEARCH_POINTS {
        return Err(Error::Guard { what: "points to search", value: max_points, limit: MAX_SEARCH_POINTS });
    }
    let mut out = HyperuniverseSearch {
        max_points,
        spaces_considered: 0,
        spaces_admissible: 0,
        atom_sets: 0,
        maps_checked: 0,
        witnesses: Vec::new(),
    };
    for n in 1..=max_points {
        for t in enumerate_topologies(n)? {
            out.spaces_considered += 1;
            if !separation_profile(&t).t2 || !is_k_compact(&t, k) {
                continue;
            }
            out.spaces_admissible += 1;
            let hyper = exp_space(&t, k)?;
            let targets = hyper.points.len();
            for bits in 0u128..1 << n {
                let b = PointSet::from_bits(n, bits)?;
                if !t.is_open(&b) {
                    continue;
                }
                out.atom_sets += 1;
                let rest: Vec<usize> = b.complement().to_indices();
                if rest.is_empty() {
                    continue;
                }
                let domain = relative(&t, &rest)?;
                let mut table = vec![0usize; rest.len()];
                loop {
                    out.maps_checked += 1;
                    let mut seen = vec![false; targets];
                    let injective = table.iter().all(|&v| !std::mem::replace(&mut seen[v], true));
                    if injective && rest.len() == targets {
                        let mut inverse = vec![0usize; targets];
                        for (i, &v) in table.iter().enumerate() {
                            inverse[v] = i;
                        }
                        if is_continuous(&table, &domain, &hyper.topology)?
                            && is_continuous(&inverse, &hyper.topology, &domain)?
                        {
                            out.witnesses.push(HyperuniverseWitness {
                                points: n,
                                closed: t.closed_sets().iter().map(PointSet::to_indices).collect(),
                                atoms: b.to_indices(),
                                phi: table
                                    .iter()
                                    .enumerate()
                                    .map(|(i, &v)| (rest[i], hyper.points[v].to_indices()))
                                    .collect(),
                            });
                        }
                    }
                    let mut pos = table.len();
                    let done = loop {
                        if pos == 0 {
                            break true;
                        }
                        pos -= 1;
                        table[pos] += 1;
                        if table[pos] < targets {
                            break false;
                        }
                        table[pos] = 0;
                    };
                    if done {
                        break;
                    }
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_point_witness() {
        let r = search_hyperuniverses(1, KBound::Unbounded).unwrap();
        assert_eq!(r.witnesses.len(), 1);
        let w = &r.witnesses[0];
        assert_eq!((w.points, w.atoms.clone()), (1, vec![]));
        assert_eq!(w.phi, vec![(0, vec![0])]);
    }

    #[test]
    fn guard() {
        assert!(search_hyperuniverses(5, KBound::Unbounded).is_err());
    }
}
