use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spheremotion::generate::{random_am_map, random_bm_map};
use spheremotion::motion::{check_separated_stops, verify_source_sink_collisions};
use spheremotion::standard::{standard_motion_am, standard_multiple_motion_bm};

#[test]
fn am_standard_motions_collide_only_at_sources_and_sinks() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for case in 0..60 {
        let m = case % 3;
        let map = random_am_map(&mut rng, m, 1 + (case as usize % 5));
        let motion = standard_motion_am(&map, m).unwrap();
        motion.validate(&map).unwrap();
        let sep = check_separated_stops(&map, &motion, &motion.stop_corners);
        assert!(sep.passes(), "case {case}: {:?}\n{:?}", sep.violations, map.faces());
        let ss = verify_source_sink_collisions(&map, &motion);
        assert!(ss.holds, "case {case}: {:?}", ss.violations);
        assert!(motion.complete_collisions(&map).loci >= 2);
    }
}

#[test]
fn bm_standard_motions_collide_only_at_sources_and_sinks() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for case in 0..60 {
        let m = case % 3;
        let map = random_bm_map(&mut rng, m, 1 + (case as usize % 4));
        let motion = standard_multiple_motion_bm(&map, m).unwrap();
        motion.validate(&map).unwrap();
        let sep = check_separated_stops(&map, &motion, &motion.stop_corners);
        assert!(sep.passes(), "case {case}: {:?}", sep.violations);
        let ss = verify_source_sink_collisions(&map, &motion);
        assert!(ss.holds, "case {case}: {:?}", ss.violations);
    }
}

#[test]
fn blow_up_standard_motions() {
    use spheremotion::blowup::{blow_up, blow_up_report};
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for case in 0..30 {
        let m = 1 + case % 2;
        let map = random_am_map(&mut rng, m, 1 + (case as usize % 4));
        let motion = standard_motion_am(&map, m).unwrap();
        let b = blow_up(&map, &motion, &motion.stop_corners).unwrap();
        let r = blow_up_report(&map, &motion, &b);
        assert!(r.regular && r.euler_preserved, "case {case}: {r:?}");
        assert_eq!(r.collisions_on_new_edges, 0, "case {case}: {r:?}");
        assert!(r.loci_after >= 2, "case {case}: {r:?}");
    }
}
