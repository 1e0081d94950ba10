//! Bad contacts between large faces and the planar graph they span.

use std::collections::BTreeSet;

use spheremotion::contact::{bad_contacts, gamma_audit, Grading};
use spheremotion::map::{Dart, OrientedMap, Surface};

/// Two k-gons joined by a ring of k bigons.
fn belt(k: u32) -> OrientedMap {
    let mut faces = vec![(0..k).map(Dart::plus).collect::<Vec<_>>(), (0..k).rev().map(|i| Dart::minus(k + i)).collect()];
    faces.extend((0..k).map(|i| vec![Dart::minus(i), Dart::plus(k + i)]));
    OrientedMap::new(Surface::Sphere, faces).unwrap()
}

fn main() -> spheremotion::error::Result<()> {
    for k in [3, 7] {
        let map = belt(k);
        let g = Grading { large_faces: [0, 1].into(), ..Grading::default() };
        let hot: BTreeSet<usize> = (0..map.num_vertices()).collect();
        let contacts = bad_contacts(&map, &g, &hot);
        let (all, gamma) = gamma_audit(&map, &g, &hot)?;
        println!("k = {k}: {} bad contacts, all pairs in contact {all}", contacts.len());
        for r in gamma {
            println!("  Γ: V = {} E = {} hypothesis {} E ≤ 3V {}", r.vertices, r.edges, r.hypothesis_holds, r.bound_holds);
        }
    }
    Ok(())
}
