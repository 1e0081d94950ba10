use std::collections::BTreeSet;

use spheremotion::contact::*;
use spheremotion::generate::uniform_multiple_motion;
use spheremotion::map::{Dart, OrientedMap, Surface};
use spheremotion::rational::q;

/// Two `k`-gons `A` (face 0) and `B` (face 1) glued along a belt of `k`
/// bigons; every vertex has `A` and `B` as opposite corners.
fn belt(k: u32) -> OrientedMap {
    let mut faces = vec![
        (0..k).map(Dart::plus).collect::<Vec<_>>(),
        (0..k).rev().map(|i| Dart::minus(k + i)).collect(),
    ];
    for i in 0..k {
        faces.push(vec![Dart::minus(i), Dart::plus(k + i)]);
    }
    OrientedMap::new(Surface::Sphere, faces).unwrap()
}

fn grading(large: &[usize]) -> Grading {
    Grading { large_faces: large.iter().copied().collect(), ..Grading::default() }
}

#[test]
fn belt_contacts_are_bad() {
    let map = belt(4);
    let hot: BTreeSet<usize> = [0, 1].into_iter().collect();
    let g = grading(&[0, 1]);
    let found = bad_contacts(&map, &g, &hot);
    assert!(found.iter().any(|c| c.faces.0 != c.faces.1), "{found:?}");
    // a single collision vertex cannot give a two-vertex contact
    let one: BTreeSet<usize> = [0].into_iter().collect();
    assert!(bad_contacts(&map, &g, &one).iter().all(|c| c.vertices.len() == 1));
}

#[test]
fn exterior_vertex_blocks_contact() {
    let map = belt(4);
    let hot: BTreeSet<usize> = (0..4).collect();
    let mut g = grading(&[0, 1]);
    assert!(!bad_contacts(&map, &g, &hot).is_empty());
    g.exterior_vertices = (0..4).collect();
    assert!(bad_contacts(&map, &g, &BTreeSet::new()).is_empty());
    // the bigons themselves large: no small region between A and B
    let g = grading(&(0..6).collect::<Vec<_>>());
    assert!(bad_contacts(&map, &g, &hot).iter().all(|c| c.faces.0 >= 2 || c.faces.1 >= 2 || c.faces.0 == c.faces.1));
}

#[test]
fn seven_arcs_between_two_faces_break_planarity() {
    let map = belt(7);
    let hot: BTreeSet<usize> = (0..7).collect();
    let (all, gamma) = gamma_audit(&map, &grading(&[0, 1]), &hot).unwrap();
    assert!(all);
    assert_eq!(gamma.len(), 1);
    assert_eq!((gamma[0].vertices, gamma[0].edges), (2, 7));
    assert!(!gamma[0].hypothesis_holds && !gamma[0].bound_holds);
}

#[test]
fn audit_reports_condition_failures() {
    let map = belt(3);
    let mut g = grading(&[0, 1]);
    g.exterior_vertices.insert(0);
    let motion = uniform_multiple_motion(&map, &[3, 4, 1, 1, 1], q(1));
    let r = lemma17_audit(&map, &g, &motion).unwrap();
    assert!(!r.condition1 && !r.contradiction);
    assert!(lemma17_audit(&map, &grading(&[0, 1]), &motion).is_err());
}
