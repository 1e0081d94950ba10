//! Vertex, edge and face weights of comotions sum to the Euler characteristic.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spheremotion::comotion::weights;
use spheremotion::generate::{random_comotion, random_torus_map};
use spheremotion::golden::{example2_comotion, fig1_map};

fn main() {
    let map = fig1_map();
    let a = example2_comotion();
    let w = weights(&map, &a);
    println!("sphere: faces {:?} vertices {:?} total {}", w.faces, w.vertices, w.total);

    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..3 {
        let torus = random_torus_map(&mut rng, 4);
        let a = random_comotion(&mut rng, &torus, true);
        println!("torus with {} faces: total {}", torus.num_faces(), weights(&torus, &a).total);
    }
}
