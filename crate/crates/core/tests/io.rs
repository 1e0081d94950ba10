use std::path::PathBuf;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spheremotion::generate::{random_multiple_motion, random_sphere_map, random_word};
use spheremotion::golden::*;
use spheremotion::group::BaseGroup;
use spheremotion::io::*;
use spheremotion::motion::{Car, Motion};
use spheremotion::rational::{modulo, q, qf};
use spheremotion::rewrite::minimize_presentation;
use spheremotion::diagram::HowieDiagram;
use spheremotion::word::parse_word;

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("golden")
}

/// Equal up to the lap on which each car starts.
fn same_motion(map: &spheremotion::map::OrientedMap, a: &Motion, b: &Motion) {
    assert_eq!(a.period, b.period);
    assert_eq!(a.cars.len(), b.cars.len());
    for j in 0..a.cars.len() {
        let len = q(map.face_len(a.cars[j].face) as i128);
        for k in 0..60 {
            let t = a.common_period() * qf(k, 60);
            assert_eq!(modulo(&a.position(map, j, t), &len), modulo(&b.position(map, j, t), &len));
        }
    }
    assert_eq!(a.complete_collisions(map), b.complete_collisions(map));
}

#[test]
fn golden_files_are_current() {
    for name in GOLDEN_NAMES {
        for (file, text) in golden_files(name).unwrap() {
            let on_disk = std::fs::read_to_string(golden_dir().join(&file)).unwrap();
            assert_eq!(on_disk, text, "{file} is stale");
        }
    }
}

#[test]
fn golden_documents_parse_back() {
    let fig1: MapDoc = read_json(golden_dir().join("fig1.map.json")).unwrap();
    let fig1 = fig1.to_map().unwrap();
    assert_eq!(fig1, fig1_map());
    for (file, motion) in [
        ("example1.motion.json", example1_motion()),
        ("example1-optimized.motion.json", example1_optimized_motion()),
        ("example2.motion.json", example2_motion()),
    ] {
        let doc: MotionDoc = read_json(golden_dir().join(file)).unwrap();
        assert_eq!(doc.to_motion(&fig1).unwrap(), motion, "{file}");
    }
    let doc: ComotionDoc = read_json(golden_dir().join("example2.comotion.json")).unwrap();
    assert_eq!(doc.to_comotion(&fig1).unwrap(), example2_comotion());

    let map: MapDoc = read_json(golden_dir().join("fig10.map.json")).unwrap();
    let map = map.to_map().unwrap();
    let doc: MotionDoc = read_json(golden_dir().join("fig10.motion.json")).unwrap();
    same_motion(&map, &doc.to_motion(&map).unwrap(), &fig10_motion());
    let blown: MapDoc = read_json(golden_dir().join("fig10-blowup.map.json")).unwrap();
    let blown = blown.to_map().unwrap();
    let doc: ComotionDoc = read_json(golden_dir().join("fig10.comotion.json")).unwrap();
    assert_eq!(doc.to_comotion(&blown).unwrap(), fig10_comotion());
}

#[test]
fn long_pieces_survive_a_round_trip() {
    let map = fig1_map();
    let mut m = example2_motion();
    m.cars[0] = Car { face: 0, breakpoints: vec![(q(0), q(0)), (q(1), qf(15, 2))], degree: 3 };
    m.validate(&map).unwrap();
    let back = MotionDoc::from_motion(&map, &m).to_motion(&map).unwrap();
    for k in 0..30 {
        let t = qf(k, 10);
        assert_eq!(back.position(&map, 0, t), m.position(&map, 0, t));
    }
}

#[test]
fn random_motions_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..40 {
        let map = random_sphere_map(&mut rng, 5, 5);
        let m = random_multiple_motion(&mut rng, &map, 3);
        let doc = MapDoc::from_map(&map);
        let map2 = from_json::<MapDoc>(&to_json(&doc)).unwrap().to_map().unwrap();
        assert_eq!(map2, map);
        let back: MotionDoc = from_json(&to_json(&MotionDoc::from_motion(&map, &m))).unwrap();
        let back: Motion = back.to_motion(&map).unwrap();
        assert_eq!(back.complete_collisions(&map), m.complete_collisions(&map));
    }
}

#[test]
fn words_and_presentations_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for base in [BaseGroup::free(2), BaseGroup::abelian(2)] {
        for n in [1, 3, 5] {
            let w = random_word(&mut rng, base, n);
            let doc: WordDoc = from_json(&to_json(&WordDoc::from_word(&w))).unwrap();
            assert_eq!(doc.to_word().unwrap(), w);
            let data = minimize_presentation(&w).unwrap();
            let doc: PresentationDoc = from_json(&to_json(&PresentationDoc::from_data(&data, std::slice::from_ref(&w)))).unwrap();
            let (data2, extra) = doc.to_data().unwrap();
            assert_eq!(data2, data);
            assert_eq!(extra, vec![w]);
        }
    }
}

#[test]
fn diagrams_round_trip() {
    let base = BaseGroup::free(2);
    let ps = [parse_word(base, "a").unwrap(), parse_word(base, "b a").unwrap()];
    let mut d = HowieDiagram::phi_bigons(&ps, 2).unwrap();
    d.large_faces = Some([0].into());
    let text = to_json(&MapDoc::from_diagram(&d));
    let back = from_json::<MapDoc>(&text).unwrap().to_diagram().unwrap();
    assert_eq!(back, d);
}
