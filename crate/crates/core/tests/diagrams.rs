use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spheremotion::diagram::*;
use spheremotion::generate::random_sphere_map;
use spheremotion::group::BaseGroup;
use spheremotion::presentation::RelativePresentation;
use spheremotion::word::{parse_word, FreeProductWord};

fn base() -> BaseGroup {
    BaseGroup::free(2)
}

fn w(text: &str) -> FreeProductWord {
    parse_word(base(), text).unwrap()
}

fn phi_pres(s: u32) -> RelativePresentation {
    RelativePresentation { base: base(), s, generators: vec![1], relators: vec![], phi: true }
}

/// φ-bigon sphere whose interior vertex reads 1: the last `p` is solved for.
fn closed_bigons(ps: &[FreeProductWord], s: u32) -> Option<HowieDiagram> {
    let mut ps = ps.to_vec();
    ps.push(w("a"));
    let d = HowieDiagram::phi_bigons(&ps, s).unwrap();
    let last = 2 * (ps.len() - 1);
    let v = d.map.vertex_of(last);
    let start = d.map.vertex_corner_cycle(v).iter().position(|&c| c == last).unwrap();
    let mut probe = d.clone();
    probe.corner_labels[last] = FreeProductWord::identity(base());
    let rest = probe.vertex_label(v, start);
    let x = rest.inv();
    if x.is_identity() {
        return None;
    }
    *ps.last_mut().unwrap() = x.inv().shift_copies(-1);
    Some(HowieDiagram::phi_bigons(&ps, s).unwrap())
}

fn random_p<R: Rng>(rng: &mut R, s: u32) -> FreeProductWord {
    let pool = ["a", "b", "A", "B", "ab", "a@1", "b@1"];
    loop {
        let mut p = FreeProductWord::identity(base());
        for _ in 0..rng.gen_range(1..=2) {
            p = p.mul(&w(pool.choose(rng).unwrap()));
        }
        if !p.is_identity() && p.in_copies(0, s - 1) {
            return p;
        }
    }
}

#[test]
fn labels_rotate_consistently() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let pool = ["a", "b", "A", "ab", "aB@1", "b@2"];
    for case in 0..100 {
        let map = random_sphere_map(&mut rng, 1 + case % 5, 5);
        let labels = (0..map.num_darts()).map(|_| w(pool.choose(&mut rng).unwrap())).collect();
        let d = HowieDiagram::with_t_edges(map, labels).unwrap();
        for v in 0..d.map.num_vertices() {
            let l0 = d.vertex_label(v, 0);
            for k in 0..d.map.vertex_corner_cycle(v).len() {
                assert!(d.vertex_label(v, k).is_conjugate(&l0));
            }
        }
        for f in 0..d.map.num_faces() {
            let l0 = d.face_label(f, 0);
            for k in 0..d.map.face_len(f) {
                assert!(d.face_label(f, k).is_conjugate(&l0));
            }
        }
    }
}

#[test]
fn simple_labels() {
    let map = spheremotion::map::OrientedMap::new(
        spheremotion::map::Surface::Sphere,
        vec![vec![spheremotion::map::Dart::plus(0)], vec![spheremotion::map::Dart::minus(0)]],
    )
    .unwrap();
    let d = HowieDiagram::with_t_edges(map, vec![w("a"), w("A")]).unwrap();
    assert_eq!(d.face_label(0, 0), w("t a"));
    assert!(d.vertex_label(0, 0).is_identity());
    assert_eq!(d.find_reducible_pair().map(|p| p.edge), Some(0));
}

#[test]
fn diagram_over_phi_presentation() {
    let d = closed_bigons(&[w("a"), w("b")], 1).unwrap();
    let pres = phi_pres(1);
    assert!(d.check_over(&pres).ok, "{:?}", d.check_over(&pres));
    let mut bad = d.clone();
    bad.corner_labels[0] = bad.corner_labels[0].mul(&w("a@1"));
    let r = bad.check_over(&pres);
    assert!(!r.ok && !r.bad_vertices.is_empty());
}

#[test]
fn exterior_vertices_are_unconstrained() {
    use spheremotion::map::{Dart, OrientedMap, Surface};
    let map = OrientedMap::new(
        Surface::Sphere,
        vec![vec![Dart::plus(0), Dart::minus(1)], vec![Dart::plus(1), Dart::minus(0)]],
    )
    .unwrap();
    let mut d = HowieDiagram::with_t_edges(map, vec![w("a"), w("b"), w("A"), w("b")]).unwrap();
    let pres = RelativePresentation {
        base: base(),
        s: 0,
        generators: vec![1],
        relators: vec![w("t a t^-1 b"), w("t a t^-1 B")],
        phi: false,
    };
    let r = d.check_over(&pres);
    assert!(r.bad_faces.is_empty() && r.bad_vertices.len() == 1);
    d.exterior_vertices.insert(r.bad_vertices[0]);
    assert!(d.check_over(&pres).ok);
}

#[test]
fn phi_move_merges_cells() {
    let d = closed_bigons(&[w("a"), w("b"), w("ab@1")], 2).unwrap();
    assert!(!d.is_phi_reduced());
    let pres = phi_pres(2);
    let ext = *d.exterior_vertices.iter().next().unwrap();
    for &e in &d.adjacent_phi_cells() {
        let PhiMove::Merged(m) = d.phi_reduce_move(e).unwrap() else { panic!("edge {e} is not reducible") };
        assert_eq!(m.map.num_faces() + 1, d.map.num_faces());
        assert_eq!(m.map.census().euler_characteristic, 2);
        assert!(m.check_over(&pres).ok);
        let ext2 = *m.exterior_vertices.iter().next().unwrap();
        assert!(m.vertex_label(ext2, 0).is_conjugate(&d.vertex_label(ext, 0)));
    }
}

#[test]
fn inverse_cells_are_reducible() {
    let d = HowieDiagram::phi_bigons(&[w("a"), w("b"), w("B")], 1).unwrap();
    let pair = d.find_reducible_pair().expect("b and B cells cancel");
    assert!(matches!(d.phi_reduce_move(pair.edge).unwrap(), PhiMove::Reducible(_)));
    let r = d.remove_reducible_pair(pair).unwrap();
    assert_eq!(r.map.num_faces(), 1);
}

#[test]
fn reduction_terminates_reduced() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for case in 0..150 {
        let s = 1 + case % 2;
        let n = rng.gen_range(1..=7);
        let ps: Vec<FreeProductWord> = (0..n).map(|_| random_p(&mut rng, s)).collect();
        let Some(d) = closed_bigons(&ps, s) else { continue };
        let pres = phi_pres(s);
        assert!(d.check_over(&pres).ok);
        let r = d.reduce();
        assert_eq!(r.map.census().euler_characteristic, 2);
        assert!(r.check_over(&pres).ok, "case {case}");
        assert!(r.is_phi_reduced() || r.map.num_faces() == 2, "case {case}");
        if let Some(p) = r.find_reducible_pair() {
            assert_eq!(r.map.num_faces(), 2, "case {case}: {p:?}");
        }
    }
}

#[test]
fn standard_collision_audit_controls() {
    use spheremotion::generate::random_am_map;
    use spheremotion::standard::standard_motion_am;
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for case in 0..40u32 {
        let m = case % 3;
        let map = random_am_map(&mut rng, m, 1 + case as usize % 4);
        let motion = standard_motion_am(&map, m).unwrap();
        let n = map.num_darts();
        let trivial = HowieDiagram::with_t_edges(map.clone(), vec![FreeProductWord::identity(base()); n]).unwrap();
        let audit = audit_standard_collisions(&trivial, &motion).unwrap();
        // every collision is at a vertex whose corner labels multiply to 1
        assert!(!audit.passes && audit.entries.iter().all(|e| e.holds_in_h), "case {case}");
        let free = HowieDiagram::with_t_edges(map, vec![w("a"); n]).unwrap();
        let audit = audit_standard_collisions(&free, &motion).unwrap();
        assert!(audit.passes, "case {case}: {audit:?}");
        assert!(audit.entries.iter().all(|e| e.class != "mixed"));
    }
}
