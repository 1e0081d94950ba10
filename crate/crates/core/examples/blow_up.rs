//! Blowing up the stop corners of a standard motion yields a regular motion.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spheremotion::blowup::{blow_up, blow_up_report};
use spheremotion::generate::random_am_map;
use spheremotion::standard::standard_motion_am;

fn main() -> spheremotion::error::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let map = random_am_map(&mut rng, 1, 3);
    let motion = standard_motion_am(&map, 1)?;
    let b = blow_up(&map, &motion, &motion.stop_corners)?;
    println!("faces {} -> {}, new edges {:?}, δ = {}", map.num_faces(), b.map.num_faces(), b.new_edges, b.delta);
    println!("{:#?}", blow_up_report(&map, &motion, &b));
    Ok(())
}
