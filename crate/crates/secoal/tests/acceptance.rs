//! Acceptance suite: one test per criterion, each printing a PASS line
//! with the numbers it verified. Run with `cargo test --test acceptance`
//! (add `-- --nocapture` to see the lines for passing tests).
//!
//! Failed statements about the verified material are not hidden: where an
//! exhaustive cross-check contradicts a recorded claim, the requirement is
//! that the sweep reports the counterexample with a replayable witness,
//! and the suite asserts exactly that.

mod common;

use std::collections::BTreeSet;

use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use secoal::classify::predict_sec_equals_n;
use secoal::coalition::{
    coalition_counts, coalition_number, construct_sec_partition, is_sec_partition, sec_number,
    ConstructionRoute,
};
use secoal::corpus::{compute_record, verify_finding, SweepConfig};
use secoal::domination::{domination_number, secure_domination_number};
use secoal::graph::{generate, Graph, GraphKind};
use secoal::scg::{
    adjudicate_c5_claims, build_scg, realize_as_scg, scg_matches_target, RealizeError,
};
use secoal::trees::all_trees;

fn gen(kind: GraphKind, n: usize) -> Graph {
    generate(kind, n).unwrap()
}

fn sec(g: &Graph) -> usize {
    sec_number(g).unwrap().0
}

/// Criterion 1: exact regression of every recorded value (zero tolerance).
#[test]
fn criterion_1_value_regression() {
    assert_eq!(sec(&gen(GraphKind::Path, 6)), 4);
    assert_eq!(sec(&gen(GraphKind::Cycle, 4)), 4);
    assert_eq!(sec(&gen(GraphKind::Complete, 1)), 1);
    assert_eq!(sec(&gen(GraphKind::Complete, 2)), 2);
    for n in 2..=5 {
        assert_eq!(sec(&gen(GraphKind::Empty, n)), 2, "edgeless order {n}");
    }
    for n in 2..=6 {
        assert_eq!(sec(&gen(GraphKind::Complete, n)), n, "complete order {n}");
    }
    assert_eq!(sec(&gen(GraphKind::Path, 4)), 4);
    assert_eq!(sec(&gen(GraphKind::Star, 4)), 3);
    assert_eq!(sec(&gen(GraphKind::Path, 5)), 4);
    for (p, q) in [(1, 2), (2, 3)] {
        let g = gen(GraphKind::Complete, p)
            .disjoint_union(&gen(GraphKind::Complete, q))
            .unwrap();
        assert_eq!(sec(&g), p + q, "two cliques {p}+{q}");
    }
    let p3 = gen(GraphKind::Path, 3);
    let (gamma_s, _) = secure_domination_number(&p3);
    assert_eq!(gamma_s, 2);
    assert_eq!(sec(&p3), 3);
    assert_eq!(sec(&p3), p3.n() - gamma_s + 2);
    println!("ACCEPTANCE 1 PASS: all recorded SEC and secure-domination values match exactly");
}

/// Criterion 2: the constructive partitions hit their promised sizes on the
/// ingested corpora, and every graph gets some valid sec-partition.
#[test]
fn criterion_2_constructive_bounds() {
    let mut graphs = load_corpus_graphs("atlas_le6.g6");
    graphs.extend(load_corpus_graphs("atlas_7.g6"));
    let (mut connected_checked, mut isolate_checked) = (0usize, 0usize);
    for g in &graphs {
        let built = construct_sec_partition(g)
            .unwrap_or_else(|e| panic!("{}: construction failed: {e}", g.to_graph6()));
        let verdict = is_sec_partition(g, &built.partition).unwrap();
        assert!(verdict.valid, "{}: unverified partition", g.to_graph6());
        assert_ne!(
            built.route,
            ConstructionRoute::FallbackSearch,
            "{}: construction gap",
            g.to_graph6()
        );
        if g.is_connected() && !g.is_complete() && g.n() >= 3 {
            assert_eq!(
                built.partition.len(),
                g.min_degree() + 2,
                "{}: wrong constructive size",
                g.to_graph6()
            );
            connected_checked += 1;
        }
        let isolates = g.isolated_vertices();
        if !isolates.is_empty() && g.m() >= 1 {
            let delta_prime = (0..g.n())
                .filter(|&v| !isolates.contains(v))
                .map(|v| g.degree(v))
                .min()
                .unwrap();
            assert_eq!(
                built.partition.len(),
                delta_prime + 2,
                "{}: wrong isolate-variant size",
                g.to_graph6()
            );
            isolate_checked += 1;
        }
    }
    println!(
        "ACCEPTANCE 2 PASS: {} graphs constructed and verified \
         ({connected_checked} connected non-complete at min-degree+2, \
         {isolate_checked} isolate variants)",
        graphs.len()
    );
}

fn characterization_crosscheck(graphs: &[Graph]) -> (usize, Vec<String>) {
    let cfg = SweepConfig::default();
    let mut counterexamples = Vec::new();
    for g in graphs {
        let computed = sec(g);
        let predicted = if g.is_connected() {
            predict_sec_equals_n(g)
        } else {
            use secoal::classify::{classify_family, Family};
            classify_family(g).has(Family::KpUnionKq)
        };
        if (computed == g.n()) != predicted {
            // the disagreement must surface as a replayable finding
            let record = compute_record(g, &cfg);
            let check_name = if g.is_connected() { "thm3_1" } else { "thm3_2" };
            let finding = record
                .findings
                .iter()
                .find(|f| f.check == check_name)
                .unwrap_or_else(|| {
                    panic!("{}: disagreement without a finding", g.to_graph6())
                });
            assert!(
                verify_finding(g, finding, &cfg),
                "{}: finding does not replay",
                g.to_graph6()
            );
            counterexamples.push(g.to_graph6());
        }
    }
    (graphs.len(), counterexamples)
}

/// Criterion 3 (required part): exhaustive cross-check of the SEC = n
/// characterizations on every graph of order at most 6.
#[test]
fn criterion_3_characterization_crosscheck() {
    let graphs = load_corpus_graphs("atlas_le6.g6");
    let (total, counterexamples) = characterization_crosscheck(&graphs);
    println!(
        "ACCEPTANCE 3 PASS: {total} graphs cross-checked; {} genuine \
         counterexamples reported with replayable witnesses: {:?}",
        counterexamples.len(),
        counterexamples
    );
}

/// Criterion 3 (extended): the same cross-check over every graph of order 7.
#[test]
fn criterion_3_extended_order_seven() {
    let graphs = load_corpus_graphs("atlas_7.g6");
    let (total, counterexamples) = characterization_crosscheck(&graphs);
    println!(
        "ACCEPTANCE 3x PASS: {total} order-7 graphs cross-checked; {} \
         counterexamples reported: {:?}",
        counterexamples.len(),
        counterexamples
    );
}

/// Criterion 4: inequality suite over the same corpora. The order range
/// and the secure-domination upper bound are asserted; the coalition-number
/// comparison is reported, with every violation carrying a verified witness
/// partition that beats the coalition number.
#[test]
fn criterion_4_bound_suite() {
    let mut graphs = load_corpus_graphs("atlas_le6.g6");
    graphs.extend(load_corpus_graphs("atlas_7.g6"));
    let mut sec_gt_c = Vec::new();
    for g in &graphs {
        let n = g.n();
        let (sec_val, sec_witness) = sec_number(g).unwrap();
        let (gamma, _) = domination_number(g);
        let (gamma_s, _) = secure_domination_number(g);
        assert!((1..=n).contains(&sec_val), "{}: SEC out of range", g.to_graph6());
        assert!(
            sec_val <= n - gamma_s + 2,
            "{}: secure-domination upper bound violated",
            g.to_graph6()
        );
        let counts = coalition_counts(g, &sec_witness).unwrap();
        let bound = (g.max_degree() + 1).max(n - gamma);
        assert!(
            counts.iter().all(|&c| c <= bound),
            "{}: coalition count bound violated",
            g.to_graph6()
        );
        let (c_val, _) = coalition_number(g).unwrap();
        if sec_val > c_val {
            // genuine violation of the recorded comparison: witness required
            assert!(is_sec_partition(g, &sec_witness).unwrap().valid);
            assert_eq!(sec_witness.len(), sec_val);
            sec_gt_c.push((g.to_graph6(), sec_val, c_val));
        }
    }
    println!(
        "ACCEPTANCE 4 PASS: bounds verified on {} graphs; SEC <= C violated on {} \
         graphs, each reported with a verified witness partition: {:?}",
        graphs.len(),
        sec_gt_c.len(),
        sec_gt_c.iter().map(|(g6, ..)| g6.as_str()).collect::<Vec<_>>()
    );
}

/// Criterion 5: every tree of order at most 9 lands in its exact category.
#[test]
fn criterion_5_tree_suite() {
    let mut checked = 0usize;
    for n in 1..=9 {
        for t in all_trees(n).unwrap() {
            let is_path = t.max_degree() <= 2;
            let is_star4 = n == 4 && t.max_degree() == 3;
            let sec_val = sec(&t);
            assert_eq!(
                sec_val == n,
                is_path && n <= 4,
                "{}: SEC = n exactly for paths of order <= 4",
                t.to_graph6()
            );
            assert_eq!(
                sec_val + 1 == n,
                is_star4 || (is_path && n == 5),
                "{}: SEC = n-1 exactly for the 4-star and the 5-path",
                t.to_graph6()
            );
            if !(is_path && n <= 5) && !is_star4 {
                assert!(
                    sec_val <= n - 2,
                    "{}: SEC must be at most n-2",
                    t.to_graph6()
                );
            }
            checked += 1;
        }
    }
    // the n-2 ceiling is attained by the six-path
    assert_eq!(sec(&gen(GraphKind::Path, 6)), 4);
    println!("ACCEPTANCE 5 PASS: {checked} trees of order <= 9 match their SEC categories");
}

/// Criterion 6: realizer round-trip over every order <= 5 graph, exact host
/// size formulas, and unrealizability of isolate-plus-edge graphs.
#[test]
fn criterion_6_realizer_roundtrip() {
    let graphs: Vec<Graph> = load_corpus_graphs("atlas_le6.g6")
        .into_iter()
        .filter(|g| g.n() <= 5)
        .collect();
    let (mut realized, mut rejected) = (0usize, 0usize);
    for g in &graphs {
        if g.min_degree() >= 1 {
            let r = realize_as_scg(g)
                .unwrap_or_else(|e| panic!("{}: realization failed: {e}", g.to_graph6()));
            let scg = build_scg(&r.host.0, &r.partition).unwrap();
            assert!(
                scg_matches_target(g, &scg, &r.base_map),
                "{}: round-trip mismatch",
                g.to_graph6()
            );
            if r.special_case.is_none() {
                let n = g.n();
                let mbar = n * (n - 1) / 2 - g.m();
                assert_eq!(r.n_host, 2 * n + mbar, "{}: host order", g.to_graph6());
                assert_eq!(
                    r.m_host,
                    n * (n - 1) / 2 + n * (n - 1) + 2 * mbar * (n - 2),
                    "{}: host size",
                    g.to_graph6()
                );
            }
            realized += 1;
        } else if !g.is_edgeless() {
            assert!(
                matches!(realize_as_scg(g), Err(RealizeError::Unrealizable)),
                "{}: expected unrealizable",
                g.to_graph6()
            );
            rejected += 1;
        }
    }
    println!(
        "ACCEPTANCE 6 PASS: {realized} graphs realized and round-tripped, \
         {rejected} isolate-plus-edge graphs rejected"
    );
}

/// Criterion 7: the optimized solvers agree with the naive oracles on every
/// graph of order <= 6 and on 50 seeded random order-6 graphs.
#[test]
fn criterion_7_oracle_equivalence() {
    let mut graphs = load_corpus_graphs("atlas_le6.g6");
    let mut rng = ChaCha8Rng::seed_from_u64(0x5ec0a1);
    for _ in 0..50 {
        let mut edges = Vec::new();
        for u in 0..6 {
            for v in (u + 1)..6 {
                if rng.random_bool(0.5) {
                    edges.push((u, v));
                }
            }
        }
        graphs.push(Graph::from_edges(6, &edges).unwrap());
    }
    for g in &graphs {
        assert_eq!(
            domination_number(g).0,
            naive_domination_number(g),
            "{}: gamma",
            g.to_graph6()
        );
        assert_eq!(
            secure_domination_number(g).0,
            naive_secure_domination_number(g),
            "{}: gamma_s",
            g.to_graph6()
        );
        assert_eq!(
            sec_number(g).unwrap().0,
            naive_sec_number(g),
            "{}: sec",
            g.to_graph6()
        );
        assert_eq!(
            coalition_number(g).unwrap().0,
            naive_coalition_number(g),
            "{}: c",
            g.to_graph6()
        );
    }
    println!(
        "ACCEPTANCE 7 PASS: four solvers match the naive oracles on {} graphs",
        graphs.len()
    );
}

/// Criterion 8: the five-cycle SCG claims are adjudicated with full,
/// replayable certificates. The requirement is the report, not agreement
/// with the recorded claims.
#[test]
fn criterion_8_c5_adjudication() {
    let reports = adjudicate_c5_claims();
    assert_eq!(reports.len(), 2);
    let c5 = gen(GraphKind::Cycle, 5);
    for report in &reports {
        // certificates present and internally consistent
        assert_eq!(report.verdict.valid, report.partition_valid);
        assert_eq!(report.computed_scg_graph6.is_some(), report.partition_valid);
        // the verdict replays against a fresh verification
        let p = secoal::coalition::Partition::parse_spec(&report.partition_spec, 5).unwrap();
        let fresh = is_sec_partition(&c5, &p).unwrap();
        assert_eq!(fresh, report.verdict, "{}: verdict drifted", report.claim);
    }
    // the sweep surfaces the same adjudication as findings that replay
    let cfg = SweepConfig::default();
    let record = compute_record(&c5, &cfg);
    let claim_findings: BTreeSet<&str> = record
        .findings
        .iter()
        .filter(|f| f.check.starts_with("c5_"))
        .map(|f| f.check.as_str())
        .collect();
    for finding in record.findings.iter().filter(|f| f.check.starts_with("c5_")) {
        assert!(verify_finding(&c5, finding, &cfg), "{} does not replay", finding.check);
    }
    let status: Vec<String> = reports
        .iter()
        .map(|r| format!("{}: holds={}", r.claim, r.holds))
        .collect();
    println!(
        "ACCEPTANCE 8 PASS: both claims adjudicated with certificates ({}); \
         findings recorded for {:?}",
        status.join(", "),
        claim_findings
    );
}
