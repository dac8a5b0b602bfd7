//! Exact-arithmetic toolkit for the isomorphism invariants of Artin-group
//! defining graphs.
//!
//! An Artin group is presented by a finite labelled simplicial graph: one
//! generator per vertex and one braid relation of length `m` per edge. Several
//! properties of the defining graph are known to be invariants of the group
//! itself — girth, weighted girth, being right-angled, being two-dimensional,
//! the number of free factors, having a separating vertex — and this crate
//! computes them exactly and reports which one (if any) tells two given
//! groups apart.
//!
//! The modules follow the shape of the theory:
//!
//! * [`graph`] — labelled simplicial graphs, girth, weighted girth,
//!   subdivision, odd classes, small-graph isomorphism;
//! * [`classify`] — the class predicates (right-angled, large type,
//!   two-dimensional, hyperbolic type) that gate every theorem;
//! * [`curvature`] — disc diagrams with rational angle assignments and the
//!   combinatorial Gauss–Bonnet ledger;
//! * [`tree_cycles`] — abstract boundary patterns of cycles of standard
//!   trees, their enumeration up to symmetry and curvature-budget exclusion
//!   certificates;
//! * [`raag`] — exact word calculus for right-angled Artin groups and finite
//!   balls of the extension graph, certifying RAAG embeddings;
//! * [`report`] — per-graph invariant reports and the pairwise distinguisher.
//!
//! All arithmetic on angles and curvatures is exact: angles are rational
//! multiples of π and π never appears as a float.

pub mod classify;
pub mod curvature;
pub mod graph;
pub mod raag;
pub mod report;
pub mod tree_cycles;

pub use classify::{classify, ClassReport, ScopeError};
pub use curvature::{fundamental_disc, gauss_bonnet_residual, AngleQ, CurvatureLedger, DiscDiagram};
pub use graph::{CycleSubgraph, DefiningGraph, ExtendedLength, GraphError, OddPartition};
pub use raag::{ExtBall, ExtVertex, NormalForm, Raag, RaagError, RaagWord};
pub use report::{compare, report, ComparisonVerdict, InvariantReport};
pub use tree_cycles::{ClassBudget, Mark, TreeCycleConfig, WedgeConfig};
