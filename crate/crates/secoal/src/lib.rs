//! Exact computation and verification of secure domination and secure
//! coalition invariants on small graphs.
//!
//! The library computes domination and secure domination numbers with
//! certificates, verifies and searches secure coalition partitions (SEC and
//! the plain-domination coalition number C), recognizes the structural
//! families characterizing SEC = n, profiles trees, builds secure coalition
//! graphs, realizes isolate-free graphs as secure coalition graphs, and runs
//! corpus-wide sweeps that re-check every one of those facts on enumerated
//! graph collections.
//!
//! All solvers are exact exponential searches intended for desk-scale
//! orders; see the per-module caps. Everything is pure and immutable after
//! construction, so independent graphs can be processed in parallel freely.
//!
//! The `examples/` directory has one runnable program per capability; the
//! thin `secoal` binary exposes the same operations as subcommands.

pub mod classify;
pub mod coalition;
pub mod corpus;
pub mod domination;
pub mod graph;
pub mod scg;
pub mod trees;

pub use classify::{
    classify_family, predict_sec_equals_n, tree_sec_profile, ClassifyError, Family, FamilyLabel,
    FamilyWitness, TreeCategory, TreeVerdict,
};
pub use coalition::{
    check_bounds, coalition_counts, coalition_number, construct_sec_partition,
    forms_secure_coalition, is_c_partition, is_sec_partition, sec_number, BoundReport,
    CoalitionError, ConstructedPartition, ConstructionRoute, Partition, PartitionError,
    PartitionVerdict, PartStatus, SolveError,
};
pub use domination::{
    domination_number, is_dominating, is_secure_dominating, secure_certificate,
    secure_domination_number, SecureCertificate,
};
pub use graph::{generate, is_isomorphic, Graph, GraphError, GraphKind, VertexSet};
pub use scg::{
    adjudicate_c5_claims, build_scg, is_scg_realizable, realize_as_scg, C5ClaimReport,
    ConstructionGap, GapFailure, Realization, RealizationExport, RealizeError,
};
pub use trees::{all_trees, trees_up_to, TreeEnumError};
