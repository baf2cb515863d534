//! Corpus ingestion, per-graph sweep records, the JSONL result cache, and
//! report aggregation: the machinery that turns the library into a
//! reproducible verification harness.
//!
//! A sweep computes one [`SweepRecord`] per corpus graph. Check names
//! (`thm2_5`, `cor3_4`, ...) are stable identifiers for the individual
//! statements the suite verifies; each field of [`BoundVerdicts`] documents
//! the property it checks. A failed verdict always comes with a [`Finding`]
//! that carries a replayable witness, and findings are re-verified whenever
//! records are loaded from the cache.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};
use serde_json::json;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::classify::{classify_family, predict_sec_equals_n, Family, FamilyLabel};
use crate::coalition::{
    coalition_counts, coalition_number_with_cap, construct_sec_partition, sec_number_with_cap,
    ConstructionRoute, Partition,
};
use crate::domination::{domination_number, is_secure_dominating, secure_domination_number};
use crate::graph::{Graph, GraphError, GraphKind, VertexSet};
use crate::scg::{adjudicate_c5_claims, realize_as_scg_with_cap, RealizeError};
use crate::trees::{trees_up_to, TreeEnumError};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Solvers are skipped for orders above this by default, regardless of the
/// library's own search caps.
pub const DEFAULT_SWEEP_SEC_CAP: usize = 7;

/// Host order cap for the realizer check.
const REALIZE_CAP: usize = Graph::DEFAULT_CAP;

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("corpus {path} line {line}: {source}")]
    CorpusParse {
        path: String,
        line: usize,
        source: GraphError,
    },
    #[error("bad spec {spec:?}: {detail}")]
    BadSpec { spec: String, detail: String },
    #[error("cached record for {graph6} disagrees with a fresh computation")]
    CacheMismatch { graph6: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Tree(#[from] TreeEnumError),
}

/// The individual statements a sweep can verify.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    /// Constructive lower bound: the built sec-partition verifies at its
    /// expected size (min degree + 2 on isolate-free non-complete graphs,
    /// the isolate variant otherwise), and SEC is at least that size.
    Thm2_5,
    /// Per-part coalition counts stay within max{max degree + 1, n - gamma}.
    Thm2_10,
    /// SEC <= n - gamma_s + 2.
    Thm2_11,
    /// SEC <= C together with 1 <= SEC <= n.
    RemarkSecLeC,
    /// SEC = 1 exactly for the one-vertex graph, SEC = 2 exactly for the
    /// single edge or edgeless graphs on >= 2 vertices.
    Cor2_9,
    /// Connected graphs: SEC = n exactly when the family classifier says so.
    Thm3_1,
    /// Disconnected graphs: SEC = n exactly for two complete components.
    Thm3_2,
    /// Trees: SEC = n exactly for paths of order <= 4.
    Cor3_4,
    /// Trees of order >= 5 other than the 5-path: SEC <= n - 2.
    Thm3_5,
    /// Trees: SEC = n - 1 exactly for the 4-star and the 5-path.
    Cor3_6,
    /// Realizer round-trip: isolate-free targets realize and round-trip with
    /// exact host size formulas; isolated-vertex-with-edge targets are
    /// rejected as unrealizable.
    Thm4_2Roundtrip,
    /// Adjudicates the two recorded five-cycle SCG claims (findings only).
    C5ScgClaims,
    /// Informational: report supersets of secure dominating sets that stop
    /// being secure dominating (findings only).
    SecureSupersetMonotonicity,
}

impl Check {
    pub const ALL: [Check; 13] = [
        Check::Thm2_5,
        Check::Thm2_10,
        Check::Thm2_11,
        Check::RemarkSecLeC,
        Check::Cor2_9,
        Check::Thm3_1,
        Check::Thm3_2,
        Check::Cor3_4,
        Check::Thm3_5,
        Check::Cor3_6,
        Check::Thm4_2Roundtrip,
        Check::C5ScgClaims,
        Check::SecureSupersetMonotonicity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Thm2_5 => "thm2_5",
            Check::Thm2_10 => "thm2_10",
            Check::Thm2_11 => "thm2_11",
            Check::RemarkSecLeC => "remark_sec_le_c",
            Check::Cor2_9 => "cor2_9",
            Check::Thm3_1 => "thm3_1",
            Check::Thm3_2 => "thm3_2",
            Check::Cor3_4 => "cor3_4",
            Check::Thm3_5 => "thm3_5",
            Check::Cor3_6 => "cor3_6",
            Check::Thm4_2Roundtrip => "thm4_2_roundtrip",
            Check::C5ScgClaims => "c5_scg_claims",
            Check::SecureSupersetMonotonicity => "secure_superset_monotonicity",
        }
    }

    /// Does this check have a boolean verdict column (as opposed to being
    /// findings-only)?
    pub fn has_verdict(self) -> bool {
        !matches!(self, Check::C5ScgClaims | Check::SecureSupersetMonotonicity)
    }

    fn needs_solvers(self) -> bool {
        !matches!(self, Check::Thm4_2Roundtrip | Check::C5ScgClaims)
    }
}

/// Parses a check selector: `all`, a group name (`bounds`,
/// `characterization`, `trees`, `scg`, `informational`), an individual
/// check name, or a comma-separated mix.
pub fn parse_checks(selector: &str) -> Result<BTreeSet<Check>, SweepError> {
    let mut out = BTreeSet::new();
    for token in selector.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        match token {
            "all" => out.extend(Check::ALL),
            "bounds" => out.extend([
                Check::Thm2_5,
                Check::Thm2_10,
                Check::Thm2_11,
                Check::RemarkSecLeC,
                Check::Cor2_9,
            ]),
            "characterization" => out.extend([Check::Thm3_1, Check::Thm3_2]),
            "trees" => out.extend([Check::Cor3_4, Check::Thm3_5, Check::Cor3_6]),
            "scg" => out.extend([Check::Thm4_2Roundtrip, Check::C5ScgClaims]),
            "informational" => {
                out.insert(Check::SecureSupersetMonotonicity);
            }
            name => {
                let found = Check::ALL.iter().find(|c| c.name() == name).copied();
                match found {
                    Some(c) => {
                        out.insert(c);
                    }
                    None => {
                        return Err(SweepError::BadSpec {
                            spec: selector.to_string(),
                            detail: format!("unknown check {name:?}"),
                        })
                    }
                }
            }
        }
    }
    if out.is_empty() {
        return Err(SweepError::BadSpec {
            spec: selector.to_string(),
            detail: "no checks selected".into(),
        });
    }
    Ok(out)
}

/// Canonical comma-joined name list, used as part of the cache key.
pub fn checks_key(checks: &BTreeSet<Check>) -> String {
    checks
        .iter()
        .map(|c| c.name())
        .collect::<Vec<_>>()
        .join(",")
}

/// A discrepancy or informational observation, with a witness the library
/// can re-verify.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub check: String,
    pub graph6: String,
    pub detail: String,
    pub witness: serde_json::Value,
}

/// One `Option<bool>` per verdict-backed check: `None` means not applicable
/// or skipped, `Some(false)` always pairs with a finding.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct BoundVerdicts {
    pub thm2_5: Option<bool>,
    pub thm2_10: Option<bool>,
    pub thm2_11: Option<bool>,
    pub remark_sec_le_c: Option<bool>,
    pub cor2_9: Option<bool>,
    pub thm3_1: Option<bool>,
    pub thm3_2: Option<bool>,
    pub cor3_4: Option<bool>,
    pub thm3_5: Option<bool>,
    pub cor3_6: Option<bool>,
    pub thm4_2_roundtrip: Option<bool>,
}

impl BoundVerdicts {
    pub fn get(&self, check: Check) -> Option<bool> {
        match check {
            Check::Thm2_5 => self.thm2_5,
            Check::Thm2_10 => self.thm2_10,
            Check::Thm2_11 => self.thm2_11,
            Check::RemarkSecLeC => self.remark_sec_le_c,
            Check::Cor2_9 => self.cor2_9,
            Check::Thm3_1 => self.thm3_1,
            Check::Thm3_2 => self.thm3_2,
            Check::Cor3_4 => self.cor3_4,
            Check::Thm3_5 => self.thm3_5,
            Check::Cor3_6 => self.cor3_6,
            Check::Thm4_2Roundtrip => self.thm4_2_roundtrip,
            Check::C5ScgClaims | Check::SecureSupersetMonotonicity => None,
        }
    }

    fn set(&mut self, check: Check, value: Option<bool>) {
        match check {
            Check::Thm2_5 => self.thm2_5 = value,
            Check::Thm2_10 => self.thm2_10 = value,
            Check::Thm2_11 => self.thm2_11 = value,
            Check::RemarkSecLeC => self.remark_sec_le_c = value,
            Check::Cor2_9 => self.cor2_9 = value,
            Check::Thm3_1 => self.thm3_1 = value,
            Check::Thm3_2 => self.thm3_2 = value,
            Check::Cor3_4 => self.cor3_4 = value,
            Check::Thm3_5 => self.thm3_5 = value,
            Check::Cor3_6 => self.cor3_6 = value,
            Check::Thm4_2Roundtrip => self.thm4_2_roundtrip = value,
            Check::C5ScgClaims | Check::SecureSupersetMonotonicity => {}
        }
    }
}

/// Everything the sweep computed for one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    #[serde(rename = "Delta")]
    pub big_delta: usize,
    pub connected: bool,
    pub tree: bool,
    pub gamma: Option<usize>,
    pub gamma_s: Option<usize>,
    pub sec: Option<usize>,
    pub c: Option<usize>,
    pub family_labels: FamilyLabel,
    pub bound_verdicts: BoundVerdicts,
    pub findings: Vec<Finding>,
    /// Work skipped on this record, e.g. "cap" when the order exceeds the
    /// solver cap, "host-cap" when the realizer host would be too large.
    pub skipped: Vec<String>,
}

/// Sweep parameters; part of the cache key.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub checks: BTreeSet<Check>,
    pub sec_cap: usize,
    pub jobs: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            checks: Check::ALL.into_iter().collect(),
            sec_cap: DEFAULT_SWEEP_SEC_CAP,
            jobs: std::thread::available_parallelism().map_or(1, |p| p.get()),
        }
    }
}

struct Solved {
    gamma: usize,
    gamma_s: usize,
    sec: usize,
    sec_witness: Partition,
    c: usize,
    c_witness: Partition,
}

/// Computes the full record for one graph. Pure and deterministic: the
/// result depends only on the graph and the configuration.
pub fn compute_record(g: &Graph, cfg: &SweepConfig) -> SweepRecord {
    let graph6 = g.to_graph6();
    let n = g.n();
    let mut skipped = Vec::new();
    let needs_solvers = cfg.checks.iter().any(|c| c.needs_solvers());
    let solved = if needs_solvers && n <= cfg.sec_cap {
        let (gamma, _) = domination_number(g);
        let (gamma_s, _) = secure_domination_number(g);
        let (sec, sec_witness) =
            sec_number_with_cap(g, cfg.sec_cap).expect("order checked against cap");
        let (c, c_witness) =
            coalition_number_with_cap(g, cfg.sec_cap).expect("order checked against cap");
        Some(Solved {
            gamma,
            gamma_s,
            sec,
            sec_witness,
            c,
            c_witness,
        })
    } else {
        if needs_solvers {
            skipped.push("cap".to_string());
        }
        None
    };
    let family_labels = classify_family(g);

    let mut verdicts = BoundVerdicts::default();
    let mut findings = Vec::new();
    let fail = |findings: &mut Vec<Finding>, check: Check, detail: String, witness: serde_json::Value| {
        findings.push(Finding {
            check: check.name().to_string(),
            graph6: graph6.clone(),
            detail,
            witness,
        });
        Some(false)
    };

    for &check in &cfg.checks {
        let verdict: Option<bool> = match check {
            Check::Thm2_5 => match construct_sec_partition(g) {
                Ok(built) => {
                    let expected = match built.route {
                        ConstructionRoute::Singletons => Some(n),
                        ConstructionRoute::EdgelessSplit => Some(2),
                        ConstructionRoute::MinDegreeStar => Some(g.min_degree() + 2),
                        ConstructionRoute::IsolatesAbsorbed => {
                            let isolates = g.isolated_vertices();
                            Some(
                                (0..n)
                                    .filter(|&v| !isolates.contains(v))
                                    .map(|v| g.degree(v))
                                    .min()
                                    .expect("has an edge")
                                    + 2,
                            )
                        }
                        ConstructionRoute::FallbackSearch => None,
                    };
                    let size_ok = expected == Some(built.partition.len());
                    let sec_ok = match (&solved, expected) {
                        (Some(s), Some(e)) => s.sec >= e,
                        _ => true,
                    };
                    if size_ok && sec_ok {
                        Some(true)
                    } else {
                        fail(
                            &mut findings,
                            check,
                            format!(
                                "constructive partition of size {} (route {:?}, expected {:?})",
                                built.partition.len(),
                                built.route,
                                expected
                            ),
                            json!({
                                "partition_spec": built.partition.spec_string(),
                                "route": built.route,
                                "size": built.partition.len(),
                                "expected": expected,
                                "sec": solved.as_ref().map(|s| s.sec),
                            }),
                        )
                    }
                }
                Err(e) => fail(
                    &mut findings,
                    check,
                    format!("construction failed: {e}"),
                    json!({ "error": e.to_string() }),
                ),
            },
            Check::Thm2_10 => solved.as_ref().map(|s| {
                let counts =
                    coalition_counts(g, &s.sec_witness).expect("witness partitions are valid");
                let bound = (g.max_degree() + 1).max(n - s.gamma);
                if counts.iter().all(|&cnt| cnt <= bound) {
                    true
                } else {
                    fail(
                        &mut findings,
                        check,
                        format!("coalition counts {counts:?} exceed bound {bound}"),
                        json!({
                            "partition_spec": s.sec_witness.spec_string(),
                            "counts": counts,
                            "bound": bound,
                        }),
                    );
                    false
                }
            }),
            Check::Thm2_11 => solved.as_ref().map(|s| {
                if s.sec <= n - s.gamma_s + 2 {
                    true
                } else {
                    fail(
                        &mut findings,
                        check,
                        format!("SEC {} above n - gamma_s + 2 = {}", s.sec, n - s.gamma_s + 2),
                        json!({
                            "sec": s.sec,
                            "gamma_s": s.gamma_s,
                            "partition_spec": s.sec_witness.spec_string(),
                        }),
                    );
                    false
                }
            }),
            Check::RemarkSecLeC => solved.as_ref().map(|s| {
                if s.sec <= s.c && (1..=n).contains(&s.sec) {
                    true
                } else {
                    fail(
                        &mut findings,
                        check,
                        format!("SEC {} vs C {} on order {}", s.sec, s.c, n),
                        json!({
                            "sec": s.sec,
                            "c": s.c,
                            "sec_partition_spec": s.sec_witness.spec_string(),
                            "c_partition_spec": s.c_witness.spec_string(),
                        }),
                    );
                    false
                }
            }),
            Check::Cor2_9 => solved.as_ref().map(|s| {
                let complete = g.is_complete();
                let edgeless = g.is_edgeless();
                let one_ok = (s.sec == 1) == (n == 1);
                let two_ok = (s.sec == 2) == ((n == 2 && complete) || (n >= 2 && edgeless));
                if one_ok && two_ok {
                    true
                } else {
                    fail(
                        &mut findings,
                        check,
                        format!("SEC {} contradicts the small-value characterization", s.sec),
                        json!({
                            "sec": s.sec,
                            "complete": complete,
                            "edgeless": edgeless,
                            "partition_spec": s.sec_witness.spec_string(),
                        }),
                    );
                    false
                }
            }),
            Check::Thm3_1 => match (&solved, g.is_connected()) {
                (Some(s), true) => {
                    let predicted = predict_sec_equals_n(g);
                    if (s.sec == n) == predicted {
                        Some(true)
                    } else {
                        fail(
                            &mut findings,
                            check,
                            format!(
                                "classifier predicts SEC=n is {predicted}, solver computed {}",
                                s.sec
                            ),
                            json!({
                                "sec": s.sec,
                                "predicted": predicted,
                                "labels": family_labels.labels,
                                "partition_spec": s.sec_witness.spec_string(),
                            }),
                        )
                    }
                }
                _ => None,
            },
            Check::Thm3_2 => match (&solved, g.is_connected()) {
                (Some(s), false) => {
                    let predicted = family_labels.has(Family::KpUnionKq);
                    if (s.sec == n) == predicted {
                        Some(true)
                    } else {
                        fail(
                            &mut findings,
                            check,
                            format!(
                                "two-clique prediction {predicted} vs computed SEC {}",
                                s.sec
                            ),
                            json!({
                                "sec": s.sec,
                                "predicted": predicted,
                                "partition_spec": s.sec_witness.spec_string(),
                            }),
                        )
                    }
                }
                _ => None,
            },
            Check::Cor3_4 | Check::Thm3_5 | Check::Cor3_6 => match (&solved, g.is_tree()) {
                (Some(s), true) => {
                    let is_path = g.max_degree() <= 2;
                    let is_star4 = n == 4 && g.max_degree() == 3;
                    let (ok, applicable, expected_desc) = match check {
                        Check::Cor3_4 => {
                            ((s.sec == n) == (is_path && n <= 4), true, "SEC=n iff path of order <= 4")
                        }
                        Check::Thm3_5 => {
                            let applies = n >= 5 && !(is_path && n == 5);
                            (!applies || s.sec <= n - 2, applies, "SEC <= n-2")
                        }
                        Check::Cor3_6 => (
                            (s.sec + 1 == n) == (is_star4 || (is_path && n == 5)),
                            true,
                            "SEC=n-1 iff 4-star or 5-path",
                        ),
                        _ => unreachable!(),
                    };
                    if !applicable {
                        None
                    } else if ok {
                        Some(true)
                    } else {
                        fail(
                            &mut findings,
                            check,
                            format!("tree violates {expected_desc}: SEC {}", s.sec),
                            json!({
                                "sec": s.sec,
                                "partition_spec": s.sec_witness.spec_string(),
                            }),
                        )
                    }
                }
                _ => None,
            },
            Check::Thm4_2Roundtrip => match realize_as_scg_with_cap(g, REALIZE_CAP) {
                Ok(r) => {
                    let formulas_ok = r.special_case.is_some() || {
                        let mbar = n * (n - 1) / 2 - g.m();
                        r.n_host == 2 * n + mbar
                            && r.m_host == n * (n - 1) / 2 + n * (n - 1) + 2 * mbar * (n - 2)
                    };
                    if g.min_degree() >= 1 || g.is_edgeless() {
                        if formulas_ok && r.verified {
                            Some(true)
                        } else {
                            fail(
                                &mut findings,
                                check,
                                "host size formulas or verification failed".to_string(),
                                json!({
                                    "n_host": r.n_host,
                                    "m_host": r.m_host,
                                    "special_case": r.special_case,
                                }),
                            )
                        }
                    } else {
                        fail(
                            &mut findings,
                            check,
                            "graph with an isolated vertex and an edge was realized".to_string(),
                            json!({ "host_graph6": r.host.0.to_graph6() }),
                        )
                    }
                }
                Err(RealizeError::Unrealizable) => {
                    if g.min_degree() == 0 && !g.is_edgeless() {
                        Some(true)
                    } else {
                        fail(
                            &mut findings,
                            check,
                            "realizable graph reported unrealizable".to_string(),
                            json!({}),
                        )
                    }
                }
                Err(RealizeError::HostExceedsCap { required, cap }) => {
                    skipped.push("host-cap".to_string());
                    let _ = (required, cap);
                    None
                }
                Err(e) => fail(
                    &mut findings,
                    check,
                    format!("realizer failed: {e}"),
                    match &e {
                        RealizeError::ConstructionGap(gap) => {
                            serde_json::to_value(gap.as_ref()).unwrap_or(json!({}))
                        }
                        _ => json!({ "error": e.to_string() }),
                    },
                ),
            },
            Check::C5ScgClaims => {
                if n == 5 && crate::graph::is_isomorphic(g, &c5()).unwrap_or(false) {
                    for report in adjudicate_c5_claims() {
                        if !report.holds {
                            findings.push(Finding {
                                check: report.claim.clone(),
                                graph6: graph6.clone(),
                                detail: format!("recorded claim does not hold: {}", report.statement),
                                witness: serde_json::to_value(&report)
                                    .expect("reports serialize"),
                            });
                        }
                    }
                }
                None
            }
            Check::SecureSupersetMonotonicity => {
                if n <= cfg.sec_cap {
                    if let Some((s, t)) = superset_monotonicity_counterexample(g) {
                        findings.push(Finding {
                            check: check.name().to_string(),
                            graph6: graph6.clone(),
                            detail: format!(
                                "secure dominating {s} has non-secure-dominating superset {t}"
                            ),
                            witness: json!({ "secure": s.to_vec(), "superset": t.to_vec() }),
                        });
                    }
                }
                None
            }
        };
        verdicts.set(check, verdict);
    }

    SweepRecord {
        graph6,
        n,
        m: g.m(),
        delta: g.min_degree(),
        big_delta: g.max_degree(),
        connected: g.is_connected(),
        tree: g.is_tree(),
        gamma: solved.as_ref().map(|s| s.gamma),
        gamma_s: solved.as_ref().map(|s| s.gamma_s),
        sec: solved.as_ref().map(|s| s.sec),
        c: solved.as_ref().map(|s| s.c),
        family_labels,
        bound_verdicts: verdicts,
        findings,
        skipped,
    }
}

fn c5() -> Graph {
    crate::graph::generate(GraphKind::Cycle, 5).expect("static family")
}

/// First (secure set, non-secure superset) pair in mask order, if any.
fn superset_monotonicity_counterexample(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    let n = g.n();
    let mut secure = vec![false; 1 << n];
    for bits in 1..(1u64 << n) {
        secure[bits as usize] = is_secure_dominating(g, VertexSet::from_bits(bits));
    }
    for bits in 1..(1u64 << n) {
        if !secure[bits as usize] {
            continue;
        }
        // grow by one vertex at a time; a one-step failure is the tightest witness
        for v in 0..n {
            let sup = bits | (1 << v);
            if sup != bits && !secure[sup as usize] {
                return Some((VertexSet::from_bits(bits), VertexSet::from_bits(sup)));
            }
        }
    }
    None
}

/// Re-verifies a finding against a fresh computation on its graph.
///
/// Verdict-backed findings must still fail their check; claim and
/// informational findings must reproduce their witnesses.
pub fn verify_finding(g: &Graph, finding: &Finding, cfg: &SweepConfig) -> bool {
    if let Some(&check) = Check::ALL
        .iter()
        .find(|c| c.has_verdict() && c.name() == finding.check)
    {
        let mut single = cfg.clone();
        single.checks = BTreeSet::from([check]);
        let record = compute_record(g, &single);
        return record.bound_verdicts.get(check) == Some(false);
    }
    match finding.check.as_str() {
        "c5_singleton_scg" | "c5_pair_partition_scg" => adjudicate_c5_claims()
            .iter()
            .any(|r| r.claim == finding.check && !r.holds),
        "secure_superset_monotonicity" => {
            let parse = |key: &str| -> Option<VertexSet> {
                finding.witness.get(key)?.as_array().map(|vals| {
                    vals.iter()
                        .filter_map(|v| v.as_u64().map(|x| x as usize))
                        .collect()
                })
            };
            match (parse("secure"), parse("superset")) {
                (Some(s), Some(t)) => {
                    s.is_subset_of(t)
                        && is_secure_dominating(g, s)
                        && !is_secure_dominating(g, t)
                }
                _ => false,
            }
        }
        _ => false,
    }
}

/// A list of graphs with a provenance string and a content digest.
#[derive(Debug, Clone)]
pub struct Corpus {
    pub source: String,
    pub digest: String,
    pub graphs: Vec<Graph>,
}

fn sha256_hex(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let out = hasher.finalize();
    out.iter().map(|b| format!("{b:02x}")).collect()
}

/// Reads a corpus file of graph6 lines (one graph per line, blanks ignored).
pub fn load_corpus(path: &Path) -> Result<Corpus, SweepError> {
    let text = fs::read_to_string(path).map_err(|source| SweepError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let mut graphs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let g = Graph::from_graph6_with_cap(line, Graph::MAX_VERTICES).map_err(|source| {
            SweepError::CorpusParse {
                path: path.display().to_string(),
                line: i + 1,
                source,
            }
        })?;
        graphs.push(g);
    }
    Ok(Corpus {
        source: path.display().to_string(),
        digest: sha256_hex(text.as_bytes()),
        graphs,
    })
}

/// Builds a named-family corpus: `trees:N`, `paths:N`, `cycles:N`,
/// `stars:N`, `completes:N`, each meaning every member of the family up to
/// order N.
pub fn generate_corpus(spec: &str) -> Result<Corpus, SweepError> {
    let bad = |detail: &str| SweepError::BadSpec {
        spec: spec.to_string(),
        detail: detail.to_string(),
    };
    let (family, n_str) = spec.split_once(':').ok_or_else(|| bad("expected family:N"))?;
    let n: usize = n_str.parse().map_err(|_| bad("N must be a number"))?;
    let family_graphs = |kind: GraphKind, min: usize| -> Result<Vec<Graph>, SweepError> {
        if n > Graph::DEFAULT_CAP {
            return Err(bad(&format!("N above the cap {}", Graph::DEFAULT_CAP)));
        }
        (min..=n)
            .map(|k| crate::graph::generate(kind, k).map_err(SweepError::from))
            .collect()
    };
    let graphs = match family {
        "trees" => trees_up_to(n)?,
        "paths" => family_graphs(GraphKind::Path, 1)?,
        "cycles" => family_graphs(GraphKind::Cycle, 3)?,
        "stars" => family_graphs(GraphKind::Star, 1)?,
        "completes" => family_graphs(GraphKind::Complete, 1)?,
        other => return Err(bad(&format!("unknown family {other:?}"))),
    };
    if graphs.is_empty() {
        return Err(bad("family is empty at this order"));
    }
    let body = corpus_text(&graphs);
    Ok(Corpus {
        source: spec.to_string(),
        digest: sha256_hex(body.as_bytes()),
        graphs,
    })
}

/// The exact bytes a corpus writes to disk: one graph6 line per graph.
pub fn corpus_text(graphs: &[Graph]) -> String {
    let mut out = String::new();
    for g in graphs {
        out.push_str(&g.to_graph6());
        out.push('\n');
    }
    out
}

/// Loads a corpus from a file path or a family spec.
pub fn resolve_corpus(input: &str) -> Result<Corpus, SweepError> {
    if input.contains(':') && !Path::new(input).exists() {
        generate_corpus(input)
    } else {
        load_corpus(Path::new(input))
    }
}

/// Resolves a single-graph input: a family spec like `path:6`, a file
/// containing one graph (graph6 line or an edge list), or a graph6 literal.
pub fn resolve_input(input: &str, cap: usize) -> Result<Graph, SweepError> {
    if let Some((kind, n_str)) = input.split_once(':') {
        if let Ok(kind) = kind.parse::<GraphKind>() {
            let n: usize = n_str.parse().map_err(|_| SweepError::BadSpec {
                spec: input.to_string(),
                detail: "order must be a number".into(),
            })?;
            if n > cap {
                return Err(SweepError::Graph(GraphError::OrderExceedsCap { n, cap }));
            }
            return crate::graph::generate(kind, n).map_err(SweepError::from);
        }
    }
    let path = Path::new(input);
    if path.exists() {
        let text = fs::read_to_string(path).map_err(|source| SweepError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let trimmed = text.trim_start();
        // graph6 bytes sit above the ASCII digits, so a leading digit means
        // an edge list
        let g = if trimmed.starts_with(|c: char| c.is_ascii_digit()) {
            Graph::from_edge_list_with_cap(&text, cap)?
        } else {
            let line = text
                .lines()
                .find(|l| !l.trim().is_empty())
                .ok_or(GraphError::Graph6Empty)?;
            Graph::from_graph6_with_cap(line, cap)?
        };
        return Ok(g);
    }
    Graph::from_graph6_with_cap(input, cap).map_err(SweepError::from)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct CacheLine {
    version: String,
    checks: String,
    sec_cap: usize,
    record: SweepRecord,
}

/// Append-only JSONL store of sweep records, keyed by canonical graph6.
///
/// Entries from other tool versions, check sets, or caps are ignored on
/// load (invalidated, never trusted); corrupt lines are skipped the same
/// way. Loaded findings are re-verified and entries that fail are dropped.
pub struct SweepCache {
    path: PathBuf,
    version: String,
    checks: String,
    sec_cap: usize,
    entries: HashMap<String, SweepRecord>,
}

impl SweepCache {
    pub fn open(path: &Path, cfg: &SweepConfig) -> Result<Self, SweepError> {
        let mut cache = SweepCache {
            path: path.to_path_buf(),
            version: TOOL_VERSION.to_string(),
            checks: checks_key(&cfg.checks),
            sec_cap: cfg.sec_cap,
            entries: HashMap::new(),
        };
        if path.exists() {
            let text = fs::read_to_string(path).map_err(|source| SweepError::Io {
                path: path.to_path_buf(),
                source,
            })?;
            for line in text.lines().filter(|l| !l.trim().is_empty()) {
                let Ok(entry) = serde_json::from_str::<CacheLine>(line) else {
                    continue;
                };
                if entry.version != cache.version
                    || entry.checks != cache.checks
                    || entry.sec_cap != cache.sec_cap
                {
                    continue;
                }
                let record = entry.record;
                if !record.findings.is_empty() {
                    let Ok(g) = Graph::from_graph6_with_cap(&record.graph6, Graph::MAX_VERTICES)
                    else {
                        continue;
                    };
                    let cfg_for_replay = SweepConfig {
                        checks: cfg.checks.clone(),
                        sec_cap: cfg.sec_cap,
                        jobs: 1,
                    };
                    if !record
                        .findings
                        .iter()
                        .all(|f| verify_finding(&g, f, &cfg_for_replay))
                    {
                        continue;
                    }
                }
                cache.entries.insert(record.graph6.clone(), record);
            }
        }
        Ok(cache)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, graph6: &str) -> Option<&SweepRecord> {
        self.entries.get(graph6)
    }

    /// Appends records not yet present; single-writer, append-only.
    pub fn append(&mut self, records: &[SweepRecord]) -> Result<(), SweepError> {
        let mut file = fs::OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)
            .map_err(|source| SweepError::Io {
                path: self.path.clone(),
                source,
            })?;
        for record in records {
            if self.entries.contains_key(&record.graph6) {
                continue;
            }
            let line = CacheLine {
                version: self.version.clone(),
                checks: self.checks.clone(),
                sec_cap: self.sec_cap,
                record: record.clone(),
            };
            let json = serde_json::to_string(&line).expect("records serialize");
            writeln!(file, "{json}").map_err(|source| SweepError::Io {
                path: self.path.clone(),
                source,
            })?;
            self.entries.insert(record.graph6.clone(), record.clone());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct VerdictTotals {
    pub holds: usize,
    pub fails: usize,
    pub not_applicable: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CounterexampleRef {
    pub check: String,
    pub graph6: String,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RuntimeStats {
    pub wall_ms: u128,
    pub jobs: usize,
    pub cache_hits: usize,
    pub computed: usize,
    pub resampled: usize,
    pub resample_mismatches: usize,
}

/// Aggregate of one sweep run. The per-record JSONL is deterministic; this
/// summary carries the non-deterministic runtime stats.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepReport {
    pub tool_version: String,
    pub corpus: String,
    pub corpus_digest: String,
    pub corpus_size: usize,
    pub checks: Vec<String>,
    pub sec_cap: usize,
    pub totals: BTreeMap<String, VerdictTotals>,
    pub counterexamples: Vec<CounterexampleRef>,
    pub records_skipped: usize,
    pub runtime: RuntimeStats,
}

pub struct SweepOutcome {
    pub records: Vec<SweepRecord>,
    pub report: SweepReport,
}

/// Runs the sweep: cache lookups first, the rest computed in parallel,
/// records merged back in corpus order. With a cache, up to 100 random hits
/// are recomputed and compared; any disagreement aborts the run.
pub fn run_sweep(
    corpus: &Corpus,
    cfg: &SweepConfig,
    mut cache: Option<&mut SweepCache>,
) -> Result<SweepOutcome, SweepError> {
    let started = Instant::now();
    let keys: Vec<String> = corpus.graphs.iter().map(|g| g.to_graph6()).collect();
    let mut records: Vec<Option<SweepRecord>> = vec![None; corpus.graphs.len()];
    let mut hit_indices = Vec::new();
    if let Some(cache) = cache.as_deref() {
        for (i, key) in keys.iter().enumerate() {
            if let Some(rec) = cache.get(key) {
                records[i] = Some(rec.clone());
                hit_indices.push(i);
            }
        }
    }
    let to_compute: Vec<usize> = (0..corpus.graphs.len())
        .filter(|&i| records[i].is_none())
        .collect();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs.max(1))
        .build()
        .map_err(|e| SweepError::BadSpec {
            spec: format!("jobs={}", cfg.jobs),
            detail: e.to_string(),
        })?;
    let computed: Vec<(usize, SweepRecord)> = pool.install(|| {
        use rayon::prelude::*;
        to_compute
            .par_iter()
            .map(|&i| (i, compute_record(&corpus.graphs[i], cfg)))
            .collect()
    });
    let computed_count = computed.len();
    let mut fresh = Vec::with_capacity(computed_count);
    for (i, rec) in computed {
        records[i] = Some(rec.clone());
        fresh.push(rec);
    }
    let records: Vec<SweepRecord> = records
        .into_iter()
        .map(|r| r.expect("every slot filled"))
        .collect();

    // cache soundness resample
    let mut resampled = 0;
    if !hit_indices.is_empty() {
        let mut rng = rand::rng();
        let mut sample = hit_indices.clone();
        sample.shuffle(&mut rng);
        sample.truncate(100);
        for &i in &sample {
            resampled += 1;
            let fresh_rec = compute_record(&corpus.graphs[i], cfg);
            if fresh_rec != records[i] {
                return Err(SweepError::CacheMismatch {
                    graph6: records[i].graph6.clone(),
                });
            }
        }
    }

    if let Some(cache) = cache.as_deref_mut() {
        cache.append(&fresh)?;
    }

    let mut totals: BTreeMap<String, VerdictTotals> = BTreeMap::new();
    for &check in cfg.checks.iter().filter(|c| c.has_verdict()) {
        totals.insert(check.name().to_string(), VerdictTotals::default());
    }
    let mut counterexamples = Vec::new();
    let mut records_skipped = 0;
    for record in &records {
        if !record.skipped.is_empty() {
            records_skipped += 1;
        }
        for &check in cfg.checks.iter().filter(|c| c.has_verdict()) {
            let slot = totals.get_mut(check.name()).expect("pre-seeded");
            match record.bound_verdicts.get(check) {
                Some(true) => slot.holds += 1,
                Some(false) => slot.fails += 1,
                None => slot.not_applicable += 1,
            }
        }
        for finding in &record.findings {
            counterexamples.push(CounterexampleRef {
                check: finding.check.clone(),
                graph6: finding.graph6.clone(),
                detail: finding.detail.clone(),
            });
        }
    }

    let report = SweepReport {
        tool_version: TOOL_VERSION.to_string(),
        corpus: corpus.source.clone(),
        corpus_digest: corpus.digest.clone(),
        corpus_size: corpus.graphs.len(),
        checks: cfg.checks.iter().map(|c| c.name().to_string()).collect(),
        sec_cap: cfg.sec_cap,
        totals,
        counterexamples,
        records_skipped,
        runtime: RuntimeStats {
            wall_ms: started.elapsed().as_millis(),
            jobs: cfg.jobs,
            cache_hits: hit_indices.len(),
            computed: computed_count,
            resampled,
            resample_mismatches: 0,
        },
    };
    Ok(SweepOutcome { records, report })
}

/// One JSON line per record, in corpus order. Byte-identical across runs
/// with the same corpus, checks, and tool version.
pub fn records_to_jsonl(records: &[SweepRecord]) -> String {
    let mut out = String::new();
    for record in records {
        out.push_str(&serde_json::to_string(record).expect("records serialize"));
        out.push('\n');
    }
    out
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "corpus {} ({} graphs, digest {}...)",
            self.corpus,
            self.corpus_size,
            &self.corpus_digest[..12.min(self.corpus_digest.len())]
        )?;
        for (name, t) in &self.totals {
            writeln!(
                f,
                "  {name}: {} hold, {} fail, {} n/a",
                t.holds, t.fails, t.not_applicable
            )?;
        }
        write!(f, "  findings: {}", self.counterexamples.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    fn cfg_all() -> SweepConfig {
        SweepConfig {
            jobs: 2,
            ..SweepConfig::default()
        }
    }

    #[test]
    fn check_parsing() {
        assert_eq!(parse_checks("all").unwrap().len(), Check::ALL.len());
        let set = parse_checks("bounds,thm3_1").unwrap();
        assert!(set.contains(&Check::Thm2_5) && set.contains(&Check::Thm3_1));
        assert!(!set.contains(&Check::Cor3_4));
        assert!(parse_checks("nonsense").is_err());
        assert!(parse_checks("").is_err());
    }

    #[test]
    fn record_for_c4_holds_everywhere() {
        let c4 = generate(GraphKind::Cycle, 4).unwrap();
        let record = compute_record(&c4, &cfg_all());
        assert_eq!(record.sec, Some(4));
        assert_eq!(record.c, Some(4));
        assert_eq!(record.gamma, Some(2));
        assert_eq!(record.bound_verdicts.thm2_5, Some(true));
        assert_eq!(record.bound_verdicts.thm2_10, Some(true));
        assert_eq!(record.bound_verdicts.thm2_11, Some(true));
        assert_eq!(record.bound_verdicts.thm3_1, Some(true));
        assert_eq!(record.bound_verdicts.thm3_2, None); // connected
        assert_eq!(record.bound_verdicts.cor3_4, None); // not a tree
        assert_eq!(record.bound_verdicts.thm4_2_roundtrip, Some(true));
        assert!(record.findings.is_empty());
        assert!(record.skipped.is_empty());
    }

    #[test]
    fn record_for_c5_carries_claim_findings() {
        let c5 = generate(GraphKind::Cycle, 5).unwrap();
        let record = compute_record(&c5, &cfg_all());
        let claim_checks: Vec<&str> = record
            .findings
            .iter()
            .map(|f| f.check.as_str())
            .collect();
        assert!(claim_checks.contains(&"c5_singleton_scg"));
        assert!(claim_checks.contains(&"c5_pair_partition_scg"));
        // claim findings replay
        for finding in &record.findings {
            assert!(verify_finding(&c5, finding, &cfg_all()), "{}", finding.check);
        }
        // a fabricated finding does not replay
        let bogus = Finding {
            check: "thm2_11".into(),
            graph6: record.graph6.clone(),
            detail: "fabricated".into(),
            witness: serde_json::json!({}),
        };
        assert!(!verify_finding(&c5, &bogus, &cfg_all()));
    }

    #[test]
    fn records_skip_solvers_above_cap() {
        let p8 = generate(GraphKind::Path, 8).unwrap();
        let record = compute_record(&p8, &cfg_all()); // cap 7
        assert_eq!(record.sec, None);
        assert!(record.skipped.contains(&"cap".to_string()));
        assert_eq!(record.bound_verdicts.thm2_11, None);
        // construction still runs; the realizer host (37 vertices) is capped
        assert_eq!(record.bound_verdicts.thm2_5, Some(true));
        assert_eq!(record.bound_verdicts.thm4_2_roundtrip, None);
        assert!(record.skipped.contains(&"host-cap".to_string()));

        // a dense order-8 graph has a small host, so the realizer does run
        let k8 = generate(GraphKind::Complete, 8).unwrap();
        let record = compute_record(&k8, &cfg_all());
        assert_eq!(record.sec, None);
        assert_eq!(record.bound_verdicts.thm4_2_roundtrip, Some(true));
    }

    #[test]
    fn family_corpora() {
        let trees5 = generate_corpus("trees:5").unwrap();
        assert_eq!(trees5.graphs.len(), 8); // census 1+1+1+2+3
        assert_eq!(
            trees5.graphs.iter().filter(|g| g.n() == 5).count(),
            3 // the 5-path, the fork, and the 5-star
        );
        assert_eq!(generate_corpus("paths:4").unwrap().graphs.len(), 4);
        assert_eq!(generate_corpus("completes:3").unwrap().graphs.len(), 3);
        assert_eq!(generate_corpus("cycles:5").unwrap().graphs.len(), 3);
        assert!(generate_corpus("webs:4").is_err());
        assert!(generate_corpus("trees:99").is_err());
        assert!(generate_corpus("cycles:2").is_err());
    }

    #[test]
    fn sweep_is_deterministic_across_job_counts() {
        let corpus = generate_corpus("trees:6").unwrap();
        let mut cfg1 = cfg_all();
        cfg1.jobs = 1;
        let mut cfg4 = cfg_all();
        cfg4.jobs = 4;
        let out1 = run_sweep(&corpus, &cfg1, None).unwrap();
        let out4 = run_sweep(&corpus, &cfg4, None).unwrap();
        assert_eq!(records_to_jsonl(&out1.records), records_to_jsonl(&out4.records));
        // totals sum to corpus size per verdict
        for (name, t) in &out1.report.totals {
            assert_eq!(
                t.holds + t.fails + t.not_applicable,
                corpus.graphs.len(),
                "{name}"
            );
        }
    }

    #[test]
    fn cache_round_trip_and_invalidation() {
        let dir = tempfile::tempdir().unwrap();
        let cache_path = dir.path().join("cache.jsonl");
        let corpus = generate_corpus("paths:6").unwrap();
        let cfg = cfg_all();

        let mut cache = SweepCache::open(&cache_path, &cfg).unwrap();
        let first = run_sweep(&corpus, &cfg, Some(&mut cache)).unwrap();
        assert_eq!(first.report.runtime.cache_hits, 0);
        assert_eq!(first.report.runtime.computed, 6);

        // second run with a fresh handle hits the cache for every record
        let mut cache = SweepCache::open(&cache_path, &cfg).unwrap();
        assert_eq!(cache.len(), 6);
        let second = run_sweep(&corpus, &cfg, Some(&mut cache)).unwrap();
        assert_eq!(second.report.runtime.cache_hits, 6);
        assert_eq!(second.report.runtime.computed, 0);
        assert!(second.report.runtime.resampled > 0);
        assert_eq!(
            records_to_jsonl(&first.records),
            records_to_jsonl(&second.records)
        );

        // a different check set misses the old entries
        let mut narrow = cfg.clone();
        narrow.checks = parse_checks("bounds").unwrap();
        let cache = SweepCache::open(&cache_path, &narrow).unwrap();
        assert_eq!(cache.len(), 0);

        // corrupt and alien lines are ignored on load
        {
            use std::io::Write;
            let mut f = fs::OpenOptions::new()
                .append(true)
                .open(&cache_path)
                .unwrap();
            writeln!(f, "not json at all").unwrap();
            writeln!(
                f,
                "{}",
                r#"{"version":"0.0.0","checks":"x","sec_cap":7,"record":{}}"#
            )
            .unwrap();
        }
        let cache = SweepCache::open(&cache_path, &cfg).unwrap();
        assert_eq!(cache.len(), 6);
    }

    #[test]
    fn cached_records_with_findings_reload_after_replay() {
        // the five-cycle record carries claim findings; a reload must
        // re-verify them and keep the entry
        let dir = tempfile::tempdir().unwrap();
        let cache_path = dir.path().join("cache.jsonl");
        let corpus = generate_corpus("cycles:5").unwrap();
        let cfg = cfg_all();
        let mut cache = SweepCache::open(&cache_path, &cfg).unwrap();
        run_sweep(&corpus, &cfg, Some(&mut cache)).unwrap();

        let cache = SweepCache::open(&cache_path, &cfg).unwrap();
        assert_eq!(cache.len(), 3);
        let c5 = generate(GraphKind::Cycle, 5).unwrap();
        let cached = cache.get(&c5.to_graph6()).expect("five-cycle cached");
        assert!(cached.findings.iter().any(|f| f.check.starts_with("c5_")));

        // a finding that no longer replays drops its entry on load
        let mangled = fs::read_to_string(&cache_path)
            .unwrap()
            .replace("c5_singleton_scg", "c5_unknown_claim");
        fs::write(&cache_path, mangled).unwrap();
        let reloaded = SweepCache::open(&cache_path, &cfg).unwrap();
        assert_eq!(reloaded.len(), 2);
        assert!(reloaded.get(&c5.to_graph6()).is_none());
    }

    #[test]
    fn input_resolution() {
        let g = resolve_input("path:6", 32).unwrap();
        assert_eq!(g.n(), 6);
        assert!(resolve_input("path:40", 32).is_err());
        assert!(resolve_input("warp:3", 32).is_err());

        let g = resolve_input("Dhc", 32).unwrap(); // five-cycle graph6
        assert_eq!((g.n(), g.m()), (5, 5));

        let dir = tempfile::tempdir().unwrap();
        let g6file = dir.path().join("one.g6");
        fs::write(&g6file, "Cl\n").unwrap();
        let g = resolve_input(g6file.to_str().unwrap(), 32).unwrap();
        assert_eq!((g.n(), g.m()), (4, 4));

        let elfile = dir.path().join("edges.txt");
        fs::write(&elfile, "3 0 1 1 2\n").unwrap();
        let g = resolve_input(elfile.to_str().unwrap(), 32).unwrap();
        assert_eq!((g.n(), g.m()), (3, 2));
    }

    #[test]
    fn corpus_digest_matches_file_and_spec() {
        let dir = tempfile::tempdir().unwrap();
        let spec_corpus = generate_corpus("paths:5").unwrap();
        let path = dir.path().join("paths.g6");
        fs::write(&path, corpus_text(&spec_corpus.graphs)).unwrap();
        let file_corpus = load_corpus(&path).unwrap();
        assert_eq!(spec_corpus.digest, file_corpus.digest);
        assert_eq!(spec_corpus.graphs, file_corpus.graphs);
    }

    #[test]
    fn superset_monotonicity_scan_is_consistent() {
        // every reported pair must replay; absence means none exists
        for g in [
            generate(GraphKind::Path, 5).unwrap(),
            generate(GraphKind::Star, 5).unwrap(),
            generate(GraphKind::Cycle, 6).unwrap(),
        ] {
            if let Some((s, t)) = superset_monotonicity_counterexample(&g) {
                assert!(s.is_subset_of(t));
                assert!(is_secure_dominating(&g, s));
                assert!(!is_secure_dominating(&g, t));
            }
        }
    }
}
