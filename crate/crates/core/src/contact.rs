//! 2-graded maps: bad contact between large faces and the counting audit
//! that rules out motions with many collisions at large corners.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::map::{OrientedMap, Surface};
use crate::motion::{check_separated_stops, multiplicities, Motion};
use crate::planar::{lemma18_check, EmbeddedGraph, Lemma18Report};

/// Exterior and large marks of a 2-graded map.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grading {
    pub exterior_vertices: BTreeSet<usize>,
    pub exterior_faces: BTreeSet<usize>,
    pub large_faces: BTreeSet<usize>,
}

impl Grading {
    fn small_interior(&self, f: usize) -> bool {
        !self.large_faces.contains(&f) && !self.exterior_faces.contains(&f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BadContact {
    /// `(A, B)`; equal for a face contacting itself.
    pub faces: (usize, usize),
    /// Collision vertices `v_1, v_2` (a single one for a one-vertex self-contact).
    pub vertices: Vec<usize>,
    /// Corners `a_1, a_2, b_2, b_1` (or `a, b`).
    pub corners: Vec<usize>,
}

fn nonadjacent(map: &OrientedMap, a: usize, b: usize) -> bool {
    let cyc = map.vertex_corner_cycle(map.vertex_of(a));
    let n = cyc.len();
    let i = cyc.iter().position(|&c| c == a).unwrap();
    let j = cyc.iter().position(|&c| c == b).unwrap();
    let gap = (j + n - i) % n;
    a != b && gap != 1 && gap != n - 1
}

/// Darts of face `f` from corner `from` to corner `to` (exclusive of the
/// dart ending at `from`).
fn fragment(map: &OrientedMap, from: usize, to: usize) -> Vec<usize> {
    let f = map.face_of(from);
    let len = map.face_len(f);
    let i = map.index_in_face(from);
    let j = map.index_in_face(to);
    let steps = (j + len - i) % len;
    (1..=steps).map(|k| map.dart_id(f, i + k)).collect()
}

/// Whether the closed path made of `darts` avoids exterior vertices and
/// bounds, on its right, a disk of small interior cells with interior
/// vertices that contains none of `avoid`.
fn bounds_small_disk(map: &OrientedMap, g: &Grading, darts: &[usize], avoid: &[usize]) -> bool {
    let on_path: BTreeSet<usize> = darts.iter().copied().collect();
    for &d in darts {
        if g.exterior_vertices.contains(&map.start_vertex(d)) || g.exterior_vertices.contains(&map.end_vertex(d)) {
            return false;
        }
    }
    // a dart traversed together with its twin cancels out
    let open: Vec<usize> = darts.iter().copied().filter(|&d| !on_path.contains(&map.twin(d))).collect();
    if open.is_empty() {
        return true;
    }
    let walls: BTreeSet<u32> = darts.iter().map(|&d| map.dart(d).edge).collect();
    let mut region = BTreeSet::new();
    let mut queue: VecDeque<usize> = open.iter().map(|&d| map.face_of(map.twin(d))).collect();
    while let Some(f) = queue.pop_front() {
        if !region.insert(f) {
            continue;
        }
        for d in map.face_darts(f) {
            if !walls.contains(&map.dart(d).edge) {
                queue.push_back(map.face_of(map.twin(d)));
            }
        }
    }
    if region.iter().any(|f| avoid.contains(f) || !g.small_interior(*f)) {
        return false;
    }
    let mut verts = BTreeSet::new();
    let mut edges = BTreeSet::new();
    for &f in &region {
        for d in map.face_darts(f) {
            verts.insert(map.end_vertex(d));
            edges.insert(map.dart(d).edge);
        }
    }
    if verts.iter().any(|v| g.exterior_vertices.contains(v)) {
        return false;
    }
    verts.len() as i64 - edges.len() as i64 + region.len() as i64 == 1
}

fn interior_collision_vertices(map: &OrientedMap, g: &Grading, motion: &Motion) -> BTreeSet<usize> {
    motion
        .complete_collisions(map)
        .vertices
        .iter()
        .map(|v| v.vertex)
        .filter(|v| !g.exterior_vertices.contains(v))
        .collect()
}

/// All bad contacts of large faces under the motion's complete collisions.
pub fn bad_contact_report(map: &OrientedMap, g: &Grading, motion: &Motion) -> Result<Vec<BadContact>> {
    motion.validate(map)?;
    Ok(bad_contacts(map, g, &interior_collision_vertices(map, g, motion)))
}

/// Bad contacts when complete collisions occur exactly at `hot`.
pub fn bad_contacts(map: &OrientedMap, g: &Grading, hot: &BTreeSet<usize>) -> Vec<BadContact> {
    // (corner on a large face, nonadjacent corner on a large face) at a hot vertex
    let mut contacts = Vec::new();
    for &v in hot {
        let cyc = map.vertex_corner_cycle(v);
        for &a in cyc {
            for &b in cyc {
                if g.large_faces.contains(&map.face_of(a)) && g.large_faces.contains(&map.face_of(b)) && nonadjacent(map, a, b) {
                    contacts.push((v, a, b));
                }
            }
        }
    }
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for &(v1, a1, b1) in &contacts {
        for &(v2, a2, b2) in &contacts {
            if v1 == v2 || map.face_of(a1) != map.face_of(a2) || map.face_of(b1) != map.face_of(b2) {
                continue;
            }
            let (fa, fb) = (map.face_of(a1), map.face_of(b1));
            if fa == fb {
                let corners = [a1, a2, b2, b1];
                let distinct: BTreeSet<usize> = corners.iter().copied().collect();
                let len = map.face_len(fa);
                let pos = |c: usize| (map.index_in_face(c) + len - map.index_in_face(a1)) % len;
                if distinct.len() < 4 || !(pos(a2) < pos(b2) && pos(b2) < pos(b1)) {
                    continue;
                }
            }
            let mut path = fragment(map, a1, a2);
            path.extend(fragment(map, b2, b1));
            if bounds_small_disk(map, g, &path, &[fa, fb]) {
                let key = (fa.min(fb), fa.max(fb), v1.min(v2), v1.max(v2));
                if seen.insert(key) {
                    out.push(BadContact { faces: (fa, fb), vertices: vec![v1, v2], corners: vec![a1, a2, b2, b1] });
                }
            }
        }
    }
    for &(v, a, b) in &contacts {
        let f = map.face_of(a);
        if f != map.face_of(b) {
            continue;
        }
        let path = fragment(map, a, b);
        if !path.is_empty() && bounds_small_disk(map, g, &path, &[f]) && seen.insert((f, f, v, v)) {
            out.push(BadContact { faces: (f, f), vertices: vec![v], corners: vec![a, b] });
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma17Report {
    pub separated_stops: bool,
    /// Multiplicity at least 4 on large faces and at least 1 on small ones.
    pub condition1: bool,
    /// Every interior collision point has two nonadjacent large corners.
    pub condition2: bool,
    /// No bad contacts.
    pub condition3: bool,
    pub bad_contacts: Vec<BadContact>,
    pub interior_loci: usize,
    /// `e(S) + Σ (d_i − 1)` minus the one exterior vertex.
    pub interior_lower_bound: i64,
    /// `3 · (number of large faces)`.
    pub gamma_cap: usize,
    /// Planar check of Γ, one entry per connected component.
    pub gamma: Vec<Lemma18Report>,
    /// All three conditions hold, so the two counts must clash.
    pub contradiction: bool,
}

/// Checks the three conditions and both sides of the counting argument.
pub fn lemma17_audit(map: &OrientedMap, g: &Grading, motion: &Motion) -> Result<Lemma17Report> {
    if map.surface() != Surface::Sphere || g.exterior_vertices.len() != 1 || !g.exterior_faces.is_empty() {
        return Err(Error::Precondition(
            "needs a sphere with a single exterior vertex and no exterior faces".into(),
        ));
    }
    let d = multiplicities(map, motion)?;
    let separated_stops = check_separated_stops(map, motion, &motion.stop_corners).passes();
    let condition1 = (0..map.num_faces()).all(|f| d[f] >= if g.large_faces.contains(&f) { 4 } else { 1 });
    let report = motion.complete_collisions(map);
    let hot = interior_collision_vertices(map, g, motion);
    let interior_loci = hot.len() + report.edges.len();
    let (condition2, gamma) = gamma_audit(map, g, &hot)?;
    let condition2 = condition2 && report.edges.is_empty();
    let bad_contacts = bad_contacts(map, g, &hot);
    let condition3 = bad_contacts.is_empty();
    let large = g.large_faces.len();
    let bound = map.census().euler_characteristic + d.iter().map(|&x| x as i64 - 1).sum::<i64>() - 1;
    Ok(Lemma17Report {
        separated_stops,
        condition1,
        condition2,
        condition3,
        bad_contacts,
        interior_loci,
        interior_lower_bound: bound,
        gamma_cap: 3 * large,
        gamma,
        contradiction: separated_stops && condition1 && condition2 && condition3,
    })
}

/// Whether every vertex of `hot` has two nonadjacent large corners, and the
/// planar check of the graph Γ with one node per large face and one arc per
/// such vertex, one report per connected component.
pub fn gamma_audit(map: &OrientedMap, g: &Grading, hot: &BTreeSet<usize>) -> Result<(bool, Vec<Lemma18Report>)> {
    let large: Vec<usize> = g.large_faces.iter().copied().collect();
    let node = |f: usize| large.iter().position(|&x| x == f).unwrap();
    let is_large = |c: usize| g.large_faces.contains(&map.face_of(c));
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    let mut all = true;
    for &v in hot {
        let cyc = map.vertex_corner_cycle(v);
        let pick = cyc
            .iter()
            .find_map(|&a| cyc.iter().find(|&&b| is_large(a) && is_large(b) && nonadjacent(map, a, b)).map(|&b| (a, b)));
        match pick {
            Some(p) => arcs.push(p),
            None => all = false,
        }
    }
    let n = large.len();
    let edges: Vec<(usize, usize)> = arcs.iter().map(|&(a, b)| (node(map.face_of(a)), node(map.face_of(b)))).collect();
    // half-edge 2e leaves through corner a, 2e + 1 through corner b
    let mut around: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (e, &(a, b)) in arcs.iter().enumerate() {
        around[node(map.face_of(a))].push((map.index_in_face(a), 2 * e));
        around[node(map.face_of(b))].push((map.index_in_face(b), 2 * e + 1));
    }
    let rotation: Vec<Vec<usize>> = around
        .into_iter()
        .map(|mut r| {
            r.sort();
            r.into_iter().map(|x| x.1).collect()
        })
        .collect();
    let mut comp = vec![usize::MAX; n];
    let mut reports = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let mut members = vec![s];
        comp[s] = s;
        let mut i = 0;
        while i < members.len() {
            let v = members[i];
            for &(x, y) in &edges {
                for (p, q) in [(x, y), (y, x)] {
                    if p == v && comp[q] == usize::MAX {
                        comp[q] = s;
                        members.push(q);
                    }
                }
            }
            i += 1;
        }
        members.sort();
        let local = |v: usize| members.iter().position(|&m| m == v).unwrap();
        let ids: Vec<usize> = (0..edges.len()).filter(|&e| comp[edges[e].0] == s).collect();
        let sub_edges = ids.iter().map(|&e| (local(edges[e].0), local(edges[e].1))).collect();
        let sub_rot = members
            .iter()
            .map(|&v| {
                rotation[v]
                    .iter()
                    .map(|&h| 2 * ids.iter().position(|&e| e == h / 2).unwrap() + h % 2)
                    .collect()
            })
            .collect();
        let graph = EmbeddedGraph::from_rotation(members.len(), sub_edges, sub_rot)?;
        reports.push(lemma18_check(&graph));
    }
    Ok((all, reports))
}
