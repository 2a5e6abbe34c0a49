//! k-strong Roman domination on simple undirected graphs.
//!
//! A labeling `f: V -> {0, .., min(Δ, k) + 1}` is a proper k-SRD function
//! when, for every set of at most `k` simultaneously attacked vertices, each
//! attacked vertex labeled 0 can be assigned a neighbor `u` with `f(u) >= 2`
//! such that no `u` receives more than `f(u) - 1` of them. The k-SRD number
//! is the minimum total weight of a proper labeling.
//!
//! The crate is `no_std` (it needs `alloc`). File formats, the command line
//! front end and the reproduction sweep live in the `ksrd` crate.
#![no_std]

extern crate alloc;

pub mod constructions;
pub mod discharging;
pub mod error;
pub mod family;
pub mod graph;
pub mod labeling;
pub mod matching;
pub mod solver;
pub mod verifier;

pub use constructions::{construct, formula, general_bounds, FormulaResult, Kind};
pub use discharging::{check_discharge, discharge_cubic_2srd, DischargeState};
pub use error::{ConstructionError, DischargeError, FamilyError, GraphError, LabelingError, SolveError, VerifyError};
pub use family::{make_family, Family, FamilySpec};
pub use graph::{Graph, Vertex};
pub use labeling::Labeling;
pub use solver::{gamma_ksrd_bruteforce, gamma_ksrd_exact, related_numbers, SolveOptions};
pub use verifier::{defendable, is_proper, min_capacity_slack, AttackPattern, Limits, Verdict};
