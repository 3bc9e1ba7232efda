//! Exact decision procedures for two-dimensional Coxeter groups.
//!
//! The crate answers one question exactly, with rational arithmetic in every
//! verdict-bearing step: given a Coxeter system whose bond matrix makes the
//! group two-dimensional, is the group coherent?  The decision reduces to a
//! finite check over standard subgroups: the group is coherent exactly when no
//! infinite standard subgroup has positive Euler characteristic.
//!
//! Around that core sit four supporting toolkits:
//!
//! * [`coxeter`] / [`graph`]: Coxeter systems, generator subsets, restriction
//!   to standard subgroups, and the finite/diagram graphs attached to a system.
//! * [`classify`]: finite-type recognition by diagram matching, with a
//!   floating-point Gram-matrix check kept as an independent cross-check only.
//! * [`analyze`]: two-dimensionality, Euler characteristics, the coherence
//!   decision itself, L2-Betti profiles, and a graph-based coherence criterion.
//! * [`complex`]: angled 2-complexes with exact corner angles, link graphs,
//!   combinatorial Gauss-Bonnet bookkeeping, and curvature sign checks.
//! * [`smallcancel`]: free-group words, symmetrized closures, piece analysis,
//!   metric small-cancellation tests, incoherence certificates for random
//!   presentations, and an exactly uniform sampler of cyclically reduced words.
//!
//! File formats and the report document produced by the `coxco` binary live in
//! [`formats`] and [`report`].
//!
//! Each major capability has a runnable demonstration under `examples/`:
//! `coherence`, `finite_types`, `curvature`, `small_cancellation`, and
//! `random_lab`.

pub mod analyze;
pub mod classify;
pub mod complex;
pub mod coxeter;
pub mod formats;
pub mod graph;
pub mod rational;
pub mod report;
pub mod smallcancel;
