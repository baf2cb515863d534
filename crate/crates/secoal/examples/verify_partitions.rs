//! Verifies the four classic candidate partitions of the six-path: three
//! maximum sec-partitions and one partition that is a plain coalition
//! partition but not a secure one.
//!
//! Run with: cargo run --example verify_partitions

use secoal::coalition::{is_c_partition, is_sec_partition, PartStatus, Partition};
use secoal::graph::{generate, GraphKind};

fn main() {
    let p6 = generate(GraphKind::Path, 6).unwrap();
    let candidates = [
        ("pi_1", "0,2;3,5;4;1"),
        ("pi_2", "0,1,4;2;3;5"),
        ("pi_3", "1,4;0,5;3;2"),
        ("pi_4", "0,5;1;2;3;4"),
    ];
    for (name, spec) in candidates {
        let p = Partition::parse_spec(spec, 6).unwrap();
        let verdict = is_sec_partition(&p6, &p).unwrap();
        let c = is_c_partition(&p6, &p).unwrap();
        println!(
            "{name} = {p}: sec-partition {}, c-partition {}",
            if verdict.valid { "VALID" } else { "invalid" },
            if c { "VALID" } else { "invalid" },
        );
        for (i, status) in verdict.per_part.iter().enumerate() {
            match status {
                PartStatus::FullDegreeSingleton => {
                    println!("    part {i}: full-degree singleton")
                }
                PartStatus::CoalitionWith { partners } => {
                    println!("    part {i}: coalitions with {partners:?}")
                }
                PartStatus::Invalid { reason } => println!("    part {i}: invalid ({reason:?})"),
            }
        }
    }
}
