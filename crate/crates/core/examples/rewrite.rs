//! Rewriting a relator with exponent sum one into the block form over
//! H = G^(0) * ... * G^(s) and minimizing its parameters.

use spheremotion::group::BaseGroup;
use spheremotion::rewrite::{is_difficult_case, reconstruct_relator, rewrite};
use spheremotion::word::parse_word;

fn main() -> spheremotion::error::Result<()> {
    let g = BaseGroup::free(2);
    for text in ["a t b t^-1 a t", "a t b t a t b t^-1 a t^-1", "a t^-1 b t^-1 ab t"] {
        let w = parse_word(g, text)?;
        let r = rewrite(&w)?;
        let d = &r.data;
        println!("{text}");
        println!("  inverted {} exponents {:?}", r.inverted, r.shifted.exponents());
        println!("  s = {}, m = {}, relator {}", d.s, d.m, d.relator());
        println!("  difficult {:?}", if r.inverted { is_difficult_case(&w.inv()) } else { is_difficult_case(&w) });
        let target = if r.inverted { w.inv() } else { w };
        println!("  reconstructs to a conjugate: {}", reconstruct_relator(d).is_conjugate(&target));
    }
    Ok(())
}
