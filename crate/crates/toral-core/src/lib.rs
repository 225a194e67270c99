//! Classification of balanced toral elements of exceptional simple Lie
//! algebras in characteristic p (equivalently, of balanced inner torsion
//! automorphisms of order p in characteristic 0), by search over Kac
//! coordinates.
//!
//! The crate is organized around five modules:
//!
//! * [`rootsystem`] — exact integer root-system data for G2, F4, E6, E7, E8
//!   in Bourbaki numbering, generated from hard-coded Cartan matrices.
//! * [`diagram`] — extended Dynkin diagram combinatorics: automorphisms, the
//!   Omega action on Kac tuples, connected subgraphs and their injection
//!   into the positive roots, and type-string classification of root
//!   subsystems.
//! * [`toral`] — Kac tuples, adjoint eigenvalue profiles, balance
//!   predicates, centralizers, Killing norms.
//! * [`alcove`] — the affine numbers game on label vectors, scalar
//!   multiplication of classes, and conjugacy tests.
//! * [`search`] — the exhaustive, levi-filtered and pruned backtracking
//!   enumeration engines, candidate primes and the full tables.
//!
//! Everything is exact `i64` arithmetic; there is no floating point in this
//! crate. All data structures are immutable after construction and safe to
//! share across threads; the search engines parallelize internally with
//! rayon and produce canonically sorted, worker-count-independent output.

// index loops over small matrices mirror the formulas they implement
#![allow(clippy::needless_range_loop)]

pub mod alcove;
pub mod diagram;
pub mod error;
pub mod rootsystem;
pub mod search;
pub mod toral;

pub use alcove::{
    canonicalize_omega, conjugate_under, reduce_to_alcove, reflect, scale_class,
    verify_scalar_theorem, ConjugacyGroup, LabelVector, ScalarGroup, ScalarReport,
};
pub use diagram::{
    classify_subsystem, omega_group, phi, CentralizerType, Component, ExtendedDiagram, Family,
    NodePermutation, Subsystem,
};
pub use error::{Error, Result};
pub use rootsystem::{is_prime, ExceptionalType, Root, RootSystem};
pub use search::{
    all_tables, candidate_primes, enumerate_balanced, enumerate_balanced_auto, is_heavy_case,
    table_for, zero_set_candidates, PrimeOutcome, SearchMode, TypeTable, ZeroSetCandidate,
    HEAVY_CASES,
};
pub use toral::{centralizer, eigen_profile, BalancedClassRecord, EigenProfile, KacTuple};
