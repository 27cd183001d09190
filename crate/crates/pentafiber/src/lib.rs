//! Exact-arithmetic certification of genus bounds for semistable fibrations
//! with five singular fibers on rational surfaces.
//!
//! A non-isotrivial semistable fibration `f: X -> P^1` of fiber genus `g >= 4`
//! with exactly five singular fibers forces `X` into a very narrow numerical
//! range: `K_X^2` must equal `2-3g` (with `g <= 11`) or `3-3g` (with
//! `g <= 10`), and the fibration itself arises from one of five concrete
//! pencils on a minimal rational surface. This crate re-derives all of those
//! bounds by exhaustive finite enumeration over exact integers and rationals,
//! and builds the five pencil models together with machine-checkable
//! certificates for every inequality along the way.
//!
//! Everything is computed exactly: divisor arithmetic in checked 64-bit
//! integers, inequality slacks as arbitrary-precision rationals. There is no
//! floating point anywhere in a verdict path.
//!
//! # Layout
//!
//! - [`lattice`] — intersection theory on the plane, Hirzebruch surfaces and
//!   their blowups: divisor classes, canonical class, adjunction genus,
//!   proper transforms.
//! - [`invariants`] — the numeric profile of a semistable fibration (node
//!   counts, chain data) and the inequality toolkit: the MVT canonical class
//!   inequality family, chain-weight bounds, adjoint-system formulas.
//! - [`enumerator`] — exhaustive searches that certify the `(g, K^2)`
//!   dichotomy, the sharpened bound `g <= 11`, the stability scan and the
//!   del Pezzo base-point constraints.
//! - [`pencils`] — constructors and verifiers for the five classification
//!   cases (trigonal scroll pencils, plane quintics, quadric-cone cubic
//!   sections, plane sextics with double points, quadric quartic sections).
//! - [`cli`] — the `pentafiber` command-line front end and scenario files.
//!
//! # Quick start
//!
//! ```
//! use pentafiber::invariants::FibrationConfig;
//!
//! // The profile that kills genus 12 in the K^2 = 2-3g family: a single
//! // chain of six (-2)-curves is forced, and the canonical class inequality
//! // fails at e = 5 by exactly 4/7.
//! let config = FibrationConfig::rational_five(12, -34, vec![6]).unwrap();
//! let cert = config.mvt_check(5).unwrap();
//! assert!(!cert.verdict);
//! assert_eq!(pentafiber::rat::to_pq(&cert.slack), "-4/7");
//! ```
//!
//! Runnable walkthroughs live in `examples/`; start with
//! `cargo run --example bounds_table`.

pub mod cli;
pub mod enumerator;
pub mod invariants;
pub mod lattice;
pub mod pencils;
pub mod rat;
pub mod selftest;

pub use enumerator::{certify_max_genus, del_pezzo_case_constraints, feasible_genus_k2, K2Family};
pub use invariants::{BoundCertificate, FibrationConfig};
pub use lattice::{BaseSurface, DivisorClass, SurfaceModel};
pub use pencils::{build_case, CaseId, CaseModel};

use thiserror::Error;

/// Unified error type for every fallible operation in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A divisor class has the wrong number of coefficients for a surface.
    #[error("divisor class has {got} coefficients, surface expects {expected}")]
    RankMismatch { expected: usize, got: usize },

    /// Checked 64-bit arithmetic overflowed; no silent wraparound.
    #[error("integer overflow in lattice arithmetic")]
    Overflow,

    /// Adjunction produced an odd `D^2 + K.D`, so no curve represents the class.
    #[error("D^2 + K.D = {0} is odd; the class is not representable by a curve")]
    NonRepresentableClass(i64),

    /// A multiplicity schedule does not match the surface's blowup count.
    #[error("schedule has {got} multiplicities, surface has {expected} blowups")]
    ScheduleMismatch { expected: usize, got: usize },

    /// Blowup multiplicities must be nonnegative.
    #[error("negative multiplicity {0} in blowup schedule")]
    NegativeMultiplicity(i64),

    /// Bad surface parameters (negative Hirzebruch degree, bad near-index).
    #[error("invalid surface parameter: {0}")]
    InvalidSurface(String),

    /// A fibration profile violates a structural constraint.
    #[error("invalid fibration profile: {0}")]
    InvalidConfig(String),

    /// The chains demand more nodes than the fibers contain.
    #[error("node budget exceeded: chains need {required} nodes, only {available} available")]
    NodeBudget { required: i64, available: i64 },

    /// An operation was called outside its mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Classification operations require exactly five singular fibers.
    #[error("unsupported singular fiber count s = {0}: classification requires s = 5")]
    UnsupportedFiberCount(i64),

    /// A certificate failed to re-validate from its substitution map.
    #[error("cannot revalidate certificate `{0}`: {1}")]
    Revalidation(String, String),

    /// Case constructor rejected its parameters.
    #[error("case parameters rejected: {0}")]
    CaseParams(String),

    /// Scenario file syntax or validation error.
    #[error("scenario error at line {line}: {msg}")]
    Scenario { line: usize, msg: String },

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
