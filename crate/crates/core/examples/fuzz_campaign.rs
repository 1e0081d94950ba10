//! Seeded invariant campaigns, as run by `spheremotion fuzz`.

use spheremotion::fuzz::{run_suite, Suite};

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    for suite in Suite::ALL {
        print!("{}", run_suite(suite, seed, 40).to_text());
    }
}
