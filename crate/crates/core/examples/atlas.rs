//! Prints the solubilizer size of each conjugacy class for the named groups.
//!
//!     cargo run --release --example atlas -- A5 PSL2-7 A5xA5

use std::time::Instant;

use solgraph::catalog::by_name;
use solgraph::solubilizer::{PairCache, SolubilizerAtlas};

fn main() {
    for name in std::env::args().skip(1) {
        let entry = match by_name(&name) {
            Ok(e) => e,
            Err(e) => {
                eprintln!("{e}");
                std::process::exit(2);
            }
        };
        let start = Instant::now();
        let cache = PairCache::new();
        let atlas = SolubilizerAtlas::compute(&entry.group, &cache).expect("group is enumerable");
        let eg = atlas.group();
        println!("{} (order {}, {} classes, {:?})", entry.name, eg.len(), atlas.class_count(), start.elapsed());
        for (c, &rep) in eg.classes().reps.iter().enumerate() {
            println!("  {:<28} |Sol| = {}", eg.element(rep).to_string(), atlas.class_set(c).count_ones(..));
        }
    }
}
