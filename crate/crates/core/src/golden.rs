//! Built-in worked examples: the five-face sphere map with a dead end and a
//! triple point, its motions and comotion, and the block-face example.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::blowup::{blow_up, BlowUp};
use crate::comotion::{induce_comotion, Comotion};
use crate::generate::{glue_sphere, profile_b, profile_blocks, profile_c};
use crate::map::{Dart, OrientedMap, Surface};
use crate::motion::{Car, Motion};
use crate::rational::{q, qf, Q};
use crate::standard::standard_multiple_motion_bm;

/// Five-face sphere map: 6 vertices, 9 edges, 18 corners.
///
/// Vertices: a center `T` joined by spokes (edges 3, 4, 5) to rim vertices
/// `x, y, z` (rim edges 6, 7, 8), a bridge (edge 2) from `x` to `u`, a loop
/// (edge 1) at `u` and a spike (edge 0) from `u` to the dead end `w`.
/// This encoding is a reconstruction from the census of the original figure.
pub fn fig1_map() -> OrientedMap {
    let p = Dart::plus;
    let n = Dart::minus;
    OrientedMap::new(
        Surface::Sphere,
        vec![
            vec![n(0), p(1), p(0)],
            vec![n(2), n(8), n(7), n(6), p(2), n(1)],
            vec![p(3), p(6), n(4)],
            vec![p(4), p(7), n(5)],
            vec![p(5), p(8), n(3)],
        ],
    )
    .expect("fig1 map is valid")
}

/// One square face glued into a torus: 1 vertex, 2 edges.
pub fn torus_map() -> OrientedMap {
    let (p, n) = (Dart::plus, Dart::minus);
    OrientedMap::new(Surface::Torus, vec![vec![p(0), p(1), n(0), n(1)]]).expect("square torus is valid")
}

fn unit_car(face: usize, steps: i128, offset: i128, degree: u32) -> Car {
    Car {
        face,
        breakpoints: (0..steps).map(|t| (q(t), q(t + offset))).collect(),
        degree,
    }
}

/// Every car runs at unit speed and sits at the start of its face's dart
/// list at time 0; period 6.
pub fn example1_motion() -> Motion {
    Motion {
        period: q(6),
        cars: vec![
            unit_car(0, 6, 0, 2),
            unit_car(1, 6, 0, 1),
            unit_car(2, 6, 0, 2),
            unit_car(3, 6, 0, 2),
            unit_car(4, 6, 0, 2),
        ],
        stop_corners: vec![],
    }
}

/// As [`example1_motion`], with the car of the last face moving at speed 2
/// on its first two darts and at speed 1/2 on the third.
pub fn example1_optimized_motion() -> Motion {
    let mut m = example1_motion();
    let lap: [(Q, Q); 3] = [(q(0), q(0)), (qf(1, 2), q(1)), (q(1), q(2))];
    m.cars[4].breakpoints = lap
        .iter()
        .chain(lap.iter())
        .enumerate()
        .map(|(i, &(t, x))| if i < 3 { (t, x) } else { (t + q(3), x + q(3)) })
        .collect();
    m
}

/// Period 3; the six-dart face carries two cars half a lap apart.
pub fn example2_motion() -> Motion {
    Motion {
        period: q(3),
        cars: vec![
            unit_car(0, 3, 0, 1),
            unit_car(1, 6, 0, 1),
            unit_car(1, 6, 3, 1),
            unit_car(2, 3, 0, 1),
            unit_car(3, 3, 0, 1),
            unit_car(4, 3, 0, 1),
        ],
        stop_corners: vec![],
    }
}

/// The comotion induced by [`example2_motion`].
pub fn example2_comotion() -> Comotion {
    induce_comotion(&fig1_map(), &example2_motion()).expect("example 2 is regular")
}

/// Sphere map of type `B_1` whose face 0 has profile `((+)^3(−)^3)^4`,
/// glued to two faces `+(+−)^2` and `−(−+)^2`.
pub fn fig10_map() -> OrientedMap {
    let profiles = [profile_blocks(2, 2, 4), profile_b(1), profile_c(1)];
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    loop {
        if let Some(m) = glue_sphere(&mut rng, &profiles) {
            if m.map_type().map(|t| t.m == Some(1)).unwrap_or(false) {
                return m;
            }
        }
    }
}

/// The standard multiple motion on [`fig10_map`] with `m = 1`.
pub fn fig10_motion() -> Motion {
    standard_multiple_motion_bm(&fig10_map(), 1).expect("fig10 map has type B_1")
}

/// [`fig10_motion`] made regular by blowing up its stop corners.
pub fn fig10_blow_up() -> BlowUp {
    let m = fig10_motion();
    blow_up(&fig10_map(), &m, &m.stop_corners).expect("standard motions have separated stops")
}

/// The comotion induced on the map of [`fig10_blow_up`].
pub fn fig10_comotion() -> Comotion {
    let b = fig10_blow_up();
    induce_comotion(&b.map, &b.motion).expect("blown-up motions are regular")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::Point;

    #[test]
    fn fig1_census() {
        let m = fig1_map();
        let c = m.census();
        assert_eq!((c.faces, c.vertices, c.edges, c.corners, c.euler_characteristic), (5, 6, 9, 18, 2));
        let mults: Vec<usize> = (0..m.num_vertices()).map(|v| m.multiplicity(Point::Vertex(v))).collect();
        assert!(mults.contains(&1));
        assert!(mults.contains(&3));
    }

    #[test]
    fn example_collision_counts() {
        let m = fig1_map();
        for (motion, loci) in [(example1_motion(), 3), (example1_optimized_motion(), 2), (example2_motion(), 3)] {
            motion.validate(&m).unwrap();
            let r = motion.complete_collisions(&m);
            assert_eq!(r.loci, loci, "{r:#?}");
        }
        let r1 = example1_motion().complete_collisions(&m);
        let r2 = example2_motion().complete_collisions(&m);
        assert_eq!(r1.loci_set(), r2.loci_set());
    }

    #[test]
    fn fig10_fixture() {
        let m = fig10_map();
        assert_eq!(m.face_len(0), 24);
        let motion = fig10_motion();
        motion.validate(&m).unwrap();
        assert_eq!(motion.cars_on(0).len(), 4);
        assert_eq!(fig10_comotion().cocars[0].degree, 4);
    }
}
