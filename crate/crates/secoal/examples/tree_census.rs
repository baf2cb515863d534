//! Enumerates all non-isomorphic trees up to order 8 and profiles each
//! one's SEC category: the full-order trees, the one-below trees, and the
//! rest (at most order minus two).
//!
//! Run with: cargo run --example tree_census

use secoal::classify::{tree_sec_profile, TreeCategory};
use secoal::trees::all_trees;

fn main() {
    println!("order  trees  SEC=n  SEC=n-1  SEC<=n-2  all-agree");
    for n in 1..=8 {
        let trees = all_trees(n).unwrap();
        let mut counts = [0usize; 3];
        let mut agree = true;
        for t in &trees {
            let profile = tree_sec_profile(t).unwrap();
            agree &= profile.agrees;
            let idx = match profile.predicted {
                TreeCategory::SecEqualsOrder => 0,
                TreeCategory::SecOneBelowOrder => 1,
                TreeCategory::SecAtMostOrderMinusTwo => 2,
            };
            counts[idx] += 1;
        }
        println!(
            "{n:>5}  {:>5}  {:>5}  {:>7}  {:>8}  {agree}",
            trees.len(),
            counts[0],
            counts[1],
            counts[2],
        );
    }
}
