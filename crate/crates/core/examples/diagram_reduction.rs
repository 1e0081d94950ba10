//! A sphere of φ-cells: label checks, φ-moves and full reduction.

use spheremotion::diagram::{HowieDiagram, PhiMove};
use spheremotion::generate::closed_phi_bigons;
use spheremotion::group::BaseGroup;
use spheremotion::presentation::RelativePresentation;
use spheremotion::word::{parse_word, T};

fn main() -> spheremotion::error::Result<()> {
    let g = BaseGroup::free(2);
    let ps = ["a", "b", "B", "ab@1"].map(|p| parse_word(g, p).unwrap());
    let d: HowieDiagram = closed_phi_bigons(&ps, 2).expect("the closing cell is nontrivial");
    let pres = RelativePresentation { base: g, s: 2, generators: vec![T], relators: vec![], phi: true };
    println!("{} cells, labels ok {}", d.map.num_faces(), d.check_over(&pres).ok);
    println!("reducible pair {:?}", d.find_reducible_pair());
    for e in d.adjacent_phi_cells() {
        match d.phi_reduce_move(e)? {
            PhiMove::Merged(m) => println!("edge {e}: merged into {} cells", m.map.num_faces()),
            PhiMove::Reducible(p) => println!("edge {e}: reducible pair {p:?}"),
        }
    }
    let r = d.reduce();
    println!("reduced to {} cells, φ-reduced {}, labels ok {}", r.map.num_faces(), r.is_phi_reduced(), r.check_over(&pres).ok);
    Ok(())
}
