//! Times each stage of `D(T)` on random trees of growing size.
//!
//! `cargo run --release --example scale [seed]`

use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::SeedableRng;
use treedist::construction::distinguishing_number_rooted;
use treedist::generate::random_tree;
use treedist::{distinguishing_number, to_rooted};

fn main() {
    let seed = std::env::args()
        .nth(1)
        .map_or(8, |s| s.parse().expect("seed is an integer"));
    let mut rng = StdRng::seed_from_u64(seed);
    for n in [10_000usize, 100_000, 1_000_000] {
        let t = random_tree(n, &mut rng);
        let mut best = [Duration::MAX; 5];
        for _ in 0..5 {
            let s = Instant::now();
            let _ = t.center();
            let center = s.elapsed();
            let s = Instant::now();
            let rt = to_rooted(&t);
            let root = s.elapsed();
            let _ = rt.canon();
            let canon = s.elapsed() - root;
            let _ = distinguishing_number_rooted(&rt);
            let search = s.elapsed() - root - canon;
            let s = Instant::now();
            let _ = distinguishing_number(&t);
            let full = s.elapsed();
            for (b, x) in best.iter_mut().zip([center, root, canon, search, full]) {
                *b = (*b).min(x);
            }
        }
        println!(
            "n={n} center {:?} root {:?} canon {:?} search {:?} total {:?}",
            best[0], best[1], best[2], best[3], best[4]
        );
    }
}
