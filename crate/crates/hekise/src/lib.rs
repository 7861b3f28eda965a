//! Canonical forms, equality and enumeration in Hecke-Kiselman monoids.
//!
//! A simple oriented graph (no self-loops, no 2-cycles, at most one arrow
//! per ordered pair) presents a monoid with one idempotent generator per
//! vertex, subject to `aba = bab = ab` for each arrow `a -> b` and
//! `ab = ba` for each disconnected pair. This crate provides:
//!
//! * [`graph`] — validated graphs, standard families, acyclicity;
//! * [`word`] — words over the vertex alphabet and their commutation
//!   combinatorics (classes, the projection-based equivalence test,
//!   initial letters, tidiness);
//! * [`rewrite`] — the length-decreasing cancellation system, normal
//!   forms, normalization strategies, and the local-confluence checker;
//! * [`canon`] — the lexicographically minimal tidy normal form, giving a
//!   canonical word per monoid element, hence decidable equality and a
//!   computable product;
//! * [`enumerate`] — element censuses for finite monoids, infiniteness
//!   witnesses on cycles, Cayley-graph export;
//! * [`oracle`] — a brute-force equality decision over the raw
//!   presentation, kept independent of the normal-form machinery so the
//!   two can be checked against each other.
//!
//! The `hekise` binary exposes all of this on the command line.

pub mod canon;
pub mod enumerate;
pub mod graph;
pub mod oracle;
pub mod rewrite;
pub mod word;

pub use canon::{
    canonicalize, equal_in_monoid, identity, min_normal_form, multiply, CanonError, CanonicalForm,
};
pub use enumerate::{
    cayley_dot, cycle_power_witnesses, enumerate_elements, EnumerateError, MonoidCensus,
};
pub use graph::{parse_graph, GraphError, GraphParseError, OrderPolicy, OrientedGraph, VertexId};
pub use oracle::{
    oracle_classes, oracle_equal, oracle_partition, OracleError, OracleVerdict, RelationMove,
};
pub use rewrite::{
    all_normal_forms, apply_cancellation, cancellation_sites, check_local_confluence,
    is_normal_form, normalize, CancellationKind, CancellationSite, ConfluenceCondition,
    RewriteError, RewriteTrace, Strategy,
};
pub use word::{cmp_words, words_up_to, Support, Word, WordError};
