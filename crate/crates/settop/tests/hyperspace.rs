//! Oracle checks for exponential hyperspaces.

use settop::finite_topology::*;
use settop::hyperspace::*;

fn spaces(max_n: usize) -> Vec<PointTopology> {
    (1..=max_n).flat_map(|n| enumerate_topologies(n).unwrap()).collect()
}

#[test]
fn exp_topology_matches_the_literal_subbase_fixpoint() {
    for base in spaces(3) {
        let e = exp_space(&base, KBound::Unbounded).unwrap();
        let closed = base.closed_sets();
        assert_eq!(e.points, closed);
        let m = closed.len();
        let mut subbase = Vec::new();
        for a in &closed {
            for b in &closed {
                let idx: Vec<usize> = (0..m).filter(|&i| closed[i].is_subset(a) && !closed[i].is_disjoint(b)).collect();
                if !idx.is_empty() {
                    subbase.push(PointSet::from_indices(m, &idx).unwrap());
                }
            }
        }
        let fixpoint = generate_family_fixpoint(m, &subbase, KBound::Unbounded).unwrap();
        assert_eq!(e.topology.closed_sets(), fixpoint, "{base:?}");
    }
}

#[test]
fn box_and_diamond_identities() {
    for base in spaces(3) {
        let closed = base.closed_sets();
        for a in &closed {
            let ba = hyper_box(&base, a).unwrap();
            let da = diamond(&base, a).unwrap();
            let meet: Vec<PointSet> = ba.iter().filter(|c| da.contains(c)).copied().collect();
            assert_eq!(meet, ba);
            for b in &closed {
                let db = diamond(&base, b).unwrap();
                let mut join: Vec<PointSet> = da.iter().chain(db.iter()).copied().collect();
                join.sort();
                join.dedup();
                assert_eq!(diamond(&base, &a.union(b)).unwrap(), join);
                let bb = hyper_box(&base, b).unwrap();
                let both: Vec<PointSet> = ba.iter().filter(|c| bb.contains(c)).copied().collect();
                assert_eq!(hyper_box(&base, &a.intersection(b)).unwrap(), both);
            }
        }
    }
}

#[test]
fn separation_transfers_on_t0_bases() {
    let mut checked = 0;
    for base in spaces(4) {
        let p = separation_profile(&base);
        if !p.t0 {
            continue;
        }
        let e = separation_profile(&exp_space(&base, KBound::Unbounded).unwrap().topology);
        assert!(!p.t1 || e.t1, "{base:?}");
        assert_eq!(p.t3, e.t2, "{base:?}");
        assert_eq!(p.t4, e.t3, "{base:?}");
        checked += 1;
    }
    // T0 topologies on 1..=4 points: 1 + 3 + 19 + 219.
    assert_eq!(checked, 242);
}

#[test]
fn exp_is_functorial_on_small_spaces() {
    let small: Vec<PointTopology> = (2..=3).flat_map(|n| enumerate_topologies(n).unwrap()).collect();
    let maps = |x: &PointTopology, y: &PointTopology| -> Vec<Vec<usize>> {
        let (n, m) = (x.n(), y.n());
        (0..m.pow(n as u32))
            .map(|mut code| {
                (0..n)
                    .map(|_| {
                        let v = code % m;
                        code /= m;
                        v
                    })
                    .collect::<Vec<usize>>()
            })
            .filter(|f| is_continuous(f, x, y).unwrap())
            .collect()
    };
    let mut compared = 0usize;
    for x in small.iter().filter(|s| s.n() == 2) {
        for y in &small {
            for z in small.iter().filter(|s| s.n() == 2) {
                for f in maps(x, y) {
                    for g in maps(y, z) {
                        let gf: Vec<usize> = f.iter().map(|&v| g[v]).collect();
                        for a in x.closed_sets() {
                            let lhs = exp_map(&gf, x, z, &a);
                            let rhs = exp_map(&f, x, y, &a).and_then(|fa| exp_map(&g, y, z, &fa));
                            if let (Ok(l), Ok(r)) = (lhs, rhs) {
                                assert_eq!(l, r);
                                compared += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    assert!(compared > 0);
    for x in &small {
        let id: Vec<usize> = (0..x.n()).collect();
        for a in x.closed_sets() {
            assert_eq!(exp_map(&id, x, x, &a).unwrap(), a);
        }
    }
}

#[test]
fn images_into_t1_targets_are_closed() {
    for x in spaces(3) {
        for n in 1..=3 {
            let y = PointTopology::discrete(n).unwrap();
            for code in 0..n.pow(x.n() as u32) {
                let f: Vec<usize> = (0..x.n()).map(|i| code / n.pow(i as u32) % n).collect();
                if !is_continuous(&f, &x, &y).unwrap() {
                    continue;
                }
                for a in x.closed_sets() {
                    assert!(exp_map(&f, &x, &y, &a).is_ok());
                }
            }
        }
    }
}

#[test]
fn kuratowski_square_on_discrete_bases() {
    for n in 1..=3 {
        let base = PointTopology::discrete(n).unwrap();
        for a in base.closed_sets() {
            let r = kuratowski_report(&base, &a).unwrap();
            assert_eq!(r.pairs, a.len() * a.len());
            assert!(r.holds(), "n={n} a={a}");
        }
    }
}
