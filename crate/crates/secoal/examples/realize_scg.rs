//! Realizes several targets as secure coalition graphs of constructed
//! hosts and prints the verified realization JSON, including the two
//! documented special cases and one unrealizable target.
//!
//! Run with: cargo run --example realize_scg

use secoal::graph::{generate, GraphKind};
use secoal::scg::{realize_as_scg, RealizationExport};

fn main() {
    let targets = vec![
        generate(GraphKind::Path, 3).unwrap(),
        generate(GraphKind::Complete, 3).unwrap(),
        generate(GraphKind::Complete, 2).unwrap(), // special-case host
        generate(GraphKind::Empty, 5).unwrap(),    // complete host, singleton parts
        generate(GraphKind::Cycle, 4).unwrap(),
        generate(GraphKind::Complete, 1)
            .unwrap()
            .disjoint_union(&generate(GraphKind::Complete, 2).unwrap())
            .unwrap()
            .with_label("K_1 + K_2"),
    ];
    for g in targets {
        match realize_as_scg(&g) {
            Ok(r) => {
                println!(
                    "{g}: host on {} vertices / {} edges{}",
                    r.n_host,
                    r.m_host,
                    match r.special_case {
                        Some(sc) => format!(" (special case {sc:?})"),
                        None => String::new(),
                    }
                );
                let export = RealizationExport::from(&r);
                println!("{}", serde_json::to_string_pretty(&export).unwrap());
            }
            Err(e) => println!("{g}: {e}"),
        }
        println!();
    }
}
