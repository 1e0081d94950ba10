use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spheremotion::comotion::*;
use spheremotion::generate::*;
use spheremotion::golden::*;
use spheremotion::map::OrientedMap;
use spheremotion::rational::{q, Q};

#[test]
fn weights_sum_to_euler_characteristic() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for case in 0..600 {
        let map = if case % 3 == 2 {
            random_torus_map(&mut rng, 4)
        } else {
            random_sphere_map(&mut rng, 1 + case % 5, 5)
        };
        let a = random_comotion(&mut rng, &map, case % 2 == 0);
        a.validate(&map).unwrap();
        let w = weights(&map, &a);
        assert_eq!(w.total, map.census().euler_characteristic, "case {case}: {a:?} {w:?}");
        if a.is_continuous() {
            let r = lemma11_check(&map, &a).unwrap();
            assert!(r.holds, "case {case}: {r:?}");
        }
    }
}

#[test]
fn generic_weights_telescope() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for case in 0..50 {
        let map = random_sphere_map(&mut rng, 1 + case % 6, 6);
        let vals: Vec<i128> = (0..map.num_darts() * map.num_darts()).map(|_| rng.gen_range(-3..4)).collect();
        let n = map.num_darts();
        let g = |a: usize, b: usize| q(vals[a * n + b]);
        let h = |a: usize, b: usize| q(vals[b * n + a]);
        assert_eq!(lemma14_total(&map, g, h), q(map.census().euler_characteristic as i128));
    }
}

#[test]
fn example2_induced_comotion() {
    let map = fig1_map();
    let motion = example2_motion();
    let a = induce_comotion(&map, &motion).unwrap();
    assert_eq!(a.collisions(&map).loci_set(), motion.complete_collisions(&map).loci_set());
    let b = lemma16_bound(&map, &motion).unwrap();
    assert_eq!((b.bound, b.observed, b.holds), (3, 3, true));
}

#[test]
fn induced_comotions_share_loci() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for case in 0..60 {
        let map = random_sphere_map(&mut rng, 1 + case % 4, 5);
        let motion = random_multiple_motion(&mut rng, &map, 3);
        let a = induce_comotion(&map, &motion).unwrap();
        assert_eq!(
            a.collisions(&map).loci_set(),
            motion.complete_collisions(&map).loci_set(),
            "case {case}"
        );
        assert_eq!(
            a.cocars.iter().map(|c| c.degree as usize).collect::<Vec<_>>(),
            spheremotion::motion::multiplicities(&map, &motion).unwrap()
        );
        assert!(lemma16_bound(&map, &motion).unwrap().holds, "case {case}");
    }
}

/// Transports a comotion across `subdivide_edge(edge, fresh)`, splitting
/// each occurrence of `edge` at its midpoint.
fn subdivide(map: &OrientedMap, a: &Comotion, edge: u32, fresh: u32) -> (OrientedMap, Comotion) {
    let new_map = map.subdivide_edge(edge, fresh).unwrap();
    let mut cocars = Vec::new();
    for c in &a.cocars {
        let len = map.face_len(c.face) as i128;
        let darts = map.face_darts(c.face);
        let hit: Vec<bool> = darts.map(|d| map.dart(d).edge == edge).collect();
        let phi = |x: Q| -> Q {
            let i = x.floor().to_integer() as usize;
            let before = hit[..i].iter().filter(|h| **h).count() as i128;
            let frac = x - x.floor();
            q(i as i128 + before) + if hit[i] { frac * q(2) } else { frac }
        };
        let (x0, _) = c.breakpoints[0];
        let mut pts = c.breakpoints.clone();
        for k in 0..len {
            let k = q(k);
            if pts.iter().any(|p| p.0 == k) {
                continue;
            }
            let t = if k >= x0 {
                c.value_range(k, q(len), a.period).0
            } else {
                c.value_range(k + q(len), q(len), a.period).0 - a.period * q(c.degree as i128)
            };
            pts.push((k, t));
        }
        pts.sort();
        cocars.push(Cocar {
            face: c.face,
            breakpoints: pts.into_iter().map(|(x, t)| (phi(x), t)).collect(),
            degree: c.degree,
        });
    }
    (new_map, Comotion { period: a.period, cocars })
}

#[test]
fn weights_invariant_under_subdivision() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for case in 0..200 {
        let map = random_sphere_map(&mut rng, 1 + case % 4, 4);
        let a = random_comotion(&mut rng, &map, case % 2 == 0);
        let e = *map.edges().choose(&mut rng).unwrap();
        let fresh = map.edges().iter().max().unwrap() + 1;
        let (m2, a2) = subdivide(&map, &a, e, fresh);
        a2.validate(&m2).unwrap();
        let (w1, w2) = (weights(&map, &a), weights(&m2, &a2));
        assert_eq!(w1.total, w2.total, "case {case}");
        assert!(a.collisions(&map).loci <= a2.collisions(&m2).loci, "case {case}");
    }
}
