//! The five-face sphere map: census, vertex classes and face forms.

use spheremotion::golden::fig1_map;
use spheremotion::map::Point;

fn main() {
    let map = fig1_map();
    let c = map.census();
    println!("V = {}, E = {}, F = {}, corners = {}, χ = {}", c.vertices, c.edges, c.faces, c.corners, c.euler_characteristic);
    for v in 0..map.num_vertices() {
        println!(
            "vertex {v}: multiplicity {}, corners {:?}, class {:?}",
            map.multiplicity(Point::Vertex(v)),
            map.vertex_corner_cycle(v),
            map.classify_vertex(v)
        );
    }
    for f in 0..map.num_faces() {
        let profile: String = map.face_profile(f).iter().map(|s| s.symbol()).collect();
        println!("face {f}: {profile} {:?}", map.face_form(f).0);
    }
}
