//! Classifies graphs into the structural families that are supposed to
//! characterize SEC = n, and cross-checks each prediction against the
//! exact solver. The wheel on six vertices is included deliberately: it
//! reaches SEC = n while matching no family, a counterexample the sweep
//! reports as a finding.
//!
//! Run with: cargo run --example classify_families

use secoal::classify::{classify_family, predict_sec_equals_n};
use secoal::coalition::sec_number;
use secoal::graph::{generate, Graph, GraphKind};

fn main() {
    let wheel5 = Graph::from_edges(
        6,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (0, 5),
            (1, 5),
            (2, 5),
            (3, 5),
            (4, 5),
        ],
    )
    .unwrap()
    .with_label("W_5 (wheel)");

    let graphs = vec![
        generate(GraphKind::Complete, 5).unwrap(),
        generate(GraphKind::Cycle, 4).unwrap(),
        generate(GraphKind::Cycle, 5).unwrap(),
        generate(GraphKind::Path, 4).unwrap(),
        generate(GraphKind::Star, 4).unwrap(),
        generate(GraphKind::Complete, 1)
            .unwrap()
            .disjoint_union(&generate(GraphKind::Complete, 4).unwrap())
            .unwrap()
            .with_label("K_1 + K_4"),
        wheel5,
    ];
    for g in graphs {
        let label = classify_family(&g);
        let predicted = predict_sec_equals_n(&g);
        let (sec, _) = sec_number(&g).unwrap();
        let agree = predicted == (sec == g.n());
        println!(
            "{g}: labels {:?}, predicted SEC=n: {predicted}, computed SEC = {sec} -> {}",
            label.labels,
            if agree { "agrees" } else { "DISAGREES (reported as a finding)" },
        );
        for w in &label.witnesses {
            println!(
                "    {:?} anchored at vertex {}{}",
                w.family,
                w.min_degree_vertex,
                match &w.clique_split {
                    Some((b1, b2)) => format!(", clique split {b1} / {b2}"),
                    None => String::new(),
                }
            );
        }
    }
}
