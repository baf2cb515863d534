//! Computes the four invariants (domination number, secure domination
//! number, SEC, C) with witnesses for a few named graphs.
//!
//! Run with: cargo run --example compute_invariants

use secoal::coalition::{coalition_number, sec_number};
use secoal::domination::{domination_number, secure_domination_number};
use secoal::graph::{generate, GraphKind};

fn main() {
    let graphs = vec![
        generate(GraphKind::Path, 6).unwrap(),
        generate(GraphKind::Cycle, 5).unwrap(),
        generate(GraphKind::Star, 5).unwrap(),
        generate(GraphKind::Complete, 4).unwrap(),
        generate(GraphKind::Complete, 2)
            .unwrap()
            .disjoint_union(&generate(GraphKind::Complete, 3).unwrap())
            .unwrap()
            .with_label("K_2 + K_3"),
    ];
    for g in graphs {
        let (gamma, d) = domination_number(&g);
        let (gamma_s, s) = secure_domination_number(&g);
        let (sec, sec_witness) = sec_number(&g).unwrap();
        let (c, c_witness) = coalition_number(&g).unwrap();
        println!("{g}  [graph6 {}]", g.to_graph6());
        println!("  gamma   = {gamma}  witness {d}");
        println!("  gamma_s = {gamma_s}  witness {s}");
        println!("  SEC     = {sec}  witness {sec_witness}");
        println!("  C       = {c}  witness {c_witness}");
        println!();
    }
}
