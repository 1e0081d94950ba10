//! Edge bound for sphere-embedded graphs given by rotation systems.
//! Half-edge 2e leaves the first end of edge e, 2e + 1 the second.

use spheremotion::planar::{lemma18_check, EmbeddedGraph};

fn main() -> spheremotion::error::Result<()> {
    let edges = vec![(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)];
    let rotation = vec![vec![0, 6, 5], vec![2, 8, 1], vec![4, 10, 3], vec![7, 9, 11]];
    let tetra = EmbeddedGraph::from_rotation(4, edges, rotation)?;
    println!("tetrahedron {:?}", lemma18_check(&tetra));
    let rot0: Vec<usize> = (0..7).map(|e| 2 * e).collect();
    let rot1: Vec<usize> = (0..7).rev().map(|e| 2 * e + 1).collect();
    let bundle = EmbeddedGraph::from_rotation(2, vec![(0, 1); 7], vec![rot0, rot1])?;
    println!("seven parallel arcs {:?}", lemma18_check(&bundle));
    Ok(())
}
