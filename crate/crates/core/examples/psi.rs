//! The cyclic-order counters χ and ψ on a circle of length T.

use spheremotion::comotion::{chi, psi, psi_reference_invariance};
use spheremotion::rational::{q, qf};

fn main() {
    let period = q(4);
    let r = q(0);
    println!("χ(1, 3) = {}, χ(3, 1) = {}", chi(q(1), q(3), period, r), chi(q(3), q(1), period, r));
    let ts = [q(1), q(3), q(1), q(3)];
    println!("ψ(1, 3, 1, 3) = {}", psi(&ts, period, r));
    let ts = [q(0), qf(1, 2), q(2), qf(7, 2)];
    println!("ψ of an increasing tuple = {}", psi(&ts, period, r));
    let refs: Vec<_> = (0..8).map(|k| qf(k, 2)).collect();
    println!("independent of the reference: {}", psi_reference_invariance(&ts, period, &refs));
}
