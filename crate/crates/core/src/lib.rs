//! Exact solvers and machine-checked experiments for two graph coloring
//! invariants and the gap between them:
//!
//! * **Γ (first-fit worst case)** — the most colors greedy coloring can be
//!   forced to spend over all vertex orderings, computed exactly with a
//!   witness ordering.
//! * **b (b-chromatic number)** — the most color classes a proper coloring
//!   can have with every class containing a color-dominating vertex,
//!   computed exactly with a witness coloring.
//!
//! Around them: the degree ceiling m with b <= m <= Δ+1, exact χ and ω, the
//! class-elimination procedure that turns any proper coloring into a
//! b-coloring, deterministic family generators whose members separate or
//! align the invariants, induced-path detection, a b-monotonicity checker
//! (deleting vertices can *raise* b), and a laboratory for profiling
//! families and emitting reproducible JSON/CSV reports.
//!
//! Graphs are simple, undirected, and hold at most 64 vertices, so every
//! neighborhood is one machine word and the exponential solvers stay fast at
//! the scale the exact answers are affordable anyway. Everything is
//! deterministic: same inputs, same seeds, same bytes out.

pub mod bcolor;
pub mod coloring;
pub mod error;
pub mod generators;
pub mod graph;
pub mod grundy;
pub mod lab;
pub mod monotone;
pub mod pattern;

pub use bcolor::{
    b_number, chromatic_number, chromatic_with_witness, clique_number, clique_with_witness,
    domination_report, eliminate_classes, is_b_coloring, is_proper, m_number, DominationReport,
};
pub use coloring::{Coloring, VertexOrdering};
pub use error::{Error, Result};
pub use generators::{
    gen_b, gen_caterpillar, gen_complete, gen_complete_bipartite, gen_path, gen_r,
    gen_random_tree, FamilyKind, FamilySpec,
};
pub use graph::{Graph, GraphFormat, VertexSet, MAX_VERTICES};
pub use grundy::{
    first_fit, grundy_number, grundy_oracle, is_grundy_coloring, ORACLE_MAX_N,
};
pub use lab::{
    check_b_family, check_r_family, check_tree_bound, emit_csv, emit_json, emit_report, profile,
    r_canonical_coloring, sweep_family, BFamilyCheck, CheckRecord, ProfileRecord,
    ProfileWitnesses, RFamilyCheck, ReportFormat, ReportMetadata, SolverCaps, SweepReport,
    SweepRow, TreeBoundCheck,
};
pub use monotone::{is_b_monotone, sample_b_monotone, MonotonicityVerdict, MonotonicityWitness};
pub use pattern::{find_induced, first_occurrence, is_free, Embedding};
