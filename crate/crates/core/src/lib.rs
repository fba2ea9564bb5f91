//! Sampling-based low-rank approximation for sparse, column-addressable matrices.
//!
//! The central quantity is the ridge leverage score of a column,
//! `a_i' (A A' + lambda I)^+ a_i` with `lambda = ||A - A_k||_F^2 / k`.
//! Sampling columns proportionally to (overestimates of) these scores yields
//! spectral, projection-cost preserving, and column-subset approximations of
//! the input. On top of the score machinery this crate provides:
//!
//! - exact, generalized, and Johnson-Lindenstrauss-accelerated score
//!   computation ([`scores`]),
//! - with-replacement and independent Bernoulli column samplers plus
//!   brute-force verifiers for each guarantee ([`sample`], [`verify`]),
//! - the recursive halving pipeline that reaches near-optimal rank-k
//!   approximation in roughly input-sparsity time ([`halving`]),
//! - a Frequent Directions sketch and two single-pass streaming samplers
//!   built on it ([`fd`], [`stream`]),
//! - MatrixMarket / sparse-line I/O and a synthetic instance generator
//!   ([`io`], [`synth`]).
//!
//! Everything is deterministic under an explicit 64-bit seed; see [`rng`].

pub mod error;
pub mod fd;
pub mod halving;
pub mod io;
pub mod matrix;
pub mod oracle;
pub mod report;
pub mod rng;
pub mod sample;
pub mod scores;
pub mod stream;
pub mod synth;
pub mod verify;

pub use error::Error;
pub use matrix::{ColumnMatrix, SpectralSplit, SvdFactors};
pub use report::{Guarantee, VerificationReport, Witness};
// pub use sample::{ColumnSample, SampleSlot, SamplingGoal, SamplingMode, SamplingPlan};
pub use scores::{Provenance, RidgeScores, RidgeSolver};

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
