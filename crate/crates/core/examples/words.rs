//! Free-product words over copies of a free group and the stable letter.

use spheremotion::group::BaseGroup;
use spheremotion::word::{parse_word, T};

fn main() -> spheremotion::error::Result<()> {
    let g = BaseGroup::free(2);
    let w = parse_word(g, "b a t B@1 t^-1 a t A B")?;
    println!("w               = {w}");
    println!("cyclic reduce   = {}", w.cyclic_reduce());
    println!("exponent sum    = {}", w.exponent_sum(T));
    println!("t signs         = {:?}", w.epsilon_sequence(T));
    let u = parse_word(g, "a t b")?;
    println!("u·u⁻¹           = {:?}", u.mul(&u.inv()).to_string());
    println!("w ~ w^u         = {}", w.is_conjugate(&w.conj_by(&u)));

    let z2 = BaseGroup::abelian(2);
    let v = parse_word(z2, "[1,0] t [0,2] t^-1 [-1,0] t")?;
    println!("abelian word    = {v}, shifted copies = {}", v.shift_copies(1));
    Ok(())
}
