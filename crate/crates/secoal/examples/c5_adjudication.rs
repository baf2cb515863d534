//! Adjudicates the two recorded secure-coalition-graph claims about the
//! five-cycle and prints the full certificates. Both claims turn out
//! false: the singleton partition is not a sec-partition at all (no pair
//! of singletons reaches the secure domination number of 3), and the
//! four-part partition builds a plain four-star rather than the claimed
//! star-plus-edge.
//!
//! Run with: cargo run --example c5_adjudication

use secoal::scg::adjudicate_c5_claims;

fn main() {
    for report in adjudicate_c5_claims() {
        println!("claim {}: {}", report.claim, report.statement);
        println!("  partition: {}", report.partition_spec);
        println!("  is a sec-partition: {}", report.partition_valid);
        if let Some(scg) = &report.computed_scg_graph6 {
            println!(
                "  computed SCG graph6: {scg} (claimed {})",
                report.claimed_scg_graph6
            );
        }
        println!("  claim holds: {}", report.holds);
        println!(
            "  certificate:\n{}",
            serde_json::to_string_pretty(&report.verdict).unwrap()
        );
        println!();
    }
}
