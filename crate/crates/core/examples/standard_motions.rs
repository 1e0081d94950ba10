//! Standard motions on random maps of type A_m and B_m.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spheremotion::generate::{random_am_map, random_bm_map};
use spheremotion::golden::fig10_motion;
use spheremotion::motion::{check_separated_stops, verify_source_sink_collisions};
use spheremotion::standard::{standard_motion_am, standard_multiple_motion_bm};

fn main() -> spheremotion::error::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for m in 0..3 {
        let map = random_am_map(&mut rng, m, 4);
        let motion = standard_motion_am(&map, m)?;
        let sep = check_separated_stops(&map, &motion, &motion.stop_corners);
        let ss = verify_source_sink_collisions(&map, &motion);
        println!("A_{m}: {} faces, period {}, separated {}, source/sink rule {}", map.num_faces(), motion.period, sep.passes(), ss.holds);
        let map = random_bm_map(&mut rng, m, 3);
        let motion = standard_multiple_motion_bm(&map, m)?;
        let ss = verify_source_sink_collisions(&map, &motion);
        println!("B_{m}: {} faces, {} cars, source/sink rule {}", map.num_faces(), motion.cars.len(), ss.holds);
    }
    let m = fig10_motion();
    println!("block face ((+)^3(-)^3)^4 carries {} cars", m.cars_on(0).len());
    Ok(())
}
