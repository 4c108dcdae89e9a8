//! Energy of graphs with self-loops.
//!
//! A simple graph `G` has energy `E(G) = sum |lambda_i|` over its adjacency
//! eigenvalues. Attaching self-loops at a vertex subset S of size alpha
//! adds ones on the matching diagonal entries and the energy becomes
//! `E(G_S) = sum |lambda_i - alpha/n|`. This crate computes both, builds a
//! constructive witness that some S strictly raises the energy of every
//! graph on at least two vertices, and assembles the 24n-vertex pairs of
//! non-isomorphic equienergetic self-loop graphs obtained by joining looped
//! cubic blocks to empty or complete partners.
//!
//! Everything numerical runs through one from-scratch cyclic Jacobi
//! eigensolver ([`spectral::eigenvalues_symmetric`]); closed forms only
//! appear as independent cross-checks.
//!
//! The `examples/` directory walks through each capability; the
//! `selfloop-energy` binary exposes the same operations as subcommands
//! (`energy`, `spectrum`, `witness`, `family`, `verify-all`).

pub mod cli;
pub mod energy;
mod error;
pub mod graph;
pub mod graph6;
pub mod report;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};

/// Strictness tolerance for energy comparisons: large enough to dominate
/// eigensolver error at the orders handled here, small enough that genuine
/// strict inequalities never look ambiguous.
pub const DEFAULT_TOL: f64 = 1e-8;

pub use energy::{adjacency, adjacency_with_loops, energy, energy_from_spectrum, energy_self_loop, EnergyReport};
pub use graph::{Bipartition, Graph, LoopSet, SelfLoopGraph, VertexPartition};
pub use graph6::{decode_graph6, encode_graph6, format_record, parse_corpus, parse_record};
pub use spectral::{
    cluster_spectrum, eigenvalues_symmetric, join_spectrum_regular, singular_values_symmetric,
    subadditivity_gap, ClusteredSpectrum, DenseSymmetricMatrix, RegularBlockSpec, Spectrum,
    CLUSTER_TOL,
};
pub use verify::{
    build_family, check_complement_dichotomy, check_subadditivity, conjecture_witness,
    corpus_conjecture_check, exhaustive_conjecture_check, verify_family_pair, CheckFailure,
    CheckSummary, FamilyInstance, FamilyPairReport, FamilyPartner, FamilyVariant,
    WitnessCertificate, WitnessRoute,
};
