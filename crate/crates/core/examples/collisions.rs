//! Complete collisions of the unit-speed schedule and its optimized variant.

use spheremotion::golden::{example1_motion, example1_optimized_motion, fig1_map};

fn main() {
    let map = fig1_map();
    for (name, motion) in [("unit speed", example1_motion()), ("optimized", example1_optimized_motion())] {
        let r = motion.complete_collisions(&map);
        println!("{name}: regular {}, {} loci", motion.is_regular(&map), r.loci);
        for v in &r.vertices {
            let times: Vec<String> = v.times.iter().map(|(a, b)| format!("[{a}, {b}]")).collect();
            println!("  vertex {} during {}", v.vertex, times.join(" "));
        }
        for e in &r.edges {
            let times: Vec<String> = e.times.iter().map(|t| t.to_string()).collect();
            println!("  edge {} for μ in [{}, {}] at times {}", e.edge, e.from, e.to, times.join(" "));
        }
    }
}
