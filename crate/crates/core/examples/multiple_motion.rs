//! Two cars on the hexagonal face: multiplicities and the lower bound on
//! collision loci.

use spheremotion::comotion::lemma16_bound;
use spheremotion::golden::{example2_motion, fig1_map};
use spheremotion::motion::{multiplicities, Locus};

fn main() -> spheremotion::error::Result<()> {
    let map = fig1_map();
    let motion = example2_motion();
    println!("multiplicities {:?}", multiplicities(&map, &motion)?);
    let b = lemma16_bound(&map, &motion)?;
    println!("bound {} observed {} holds {}", b.bound, b.observed, b.holds);
    for locus in motion.complete_collisions(&map).loci_set() {
        match locus {
            Locus::Vertex(v) => println!("  vertex {v}"),
            Locus::Edge { edge, from, to } => println!("  edge {edge} for μ in [{from}, {to}]"),
        }
    }
    Ok(())
}
