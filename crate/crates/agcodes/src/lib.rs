//! Evaluation codes on algebraic curves over small odd-characteristic fields.
//!
//! The crate builds one-point evaluation codes on the projective line,
//! elliptic curves, and Hermitian curves, together with two lengthening
//! constructions (an extended code with one tag column, and a Roth-Lempel
//! style code with two), produces dual generator matrices directly from
//! rational functions, and verifies minimum distances, Singleton-defect
//! classes, and covering radii by exact enumeration.
//!
//! Start with the runnable programs under `examples/` — there is one per
//! capability:
//!
//! * `field_tour` — exact arithmetic in GF(p^e)
//! * `curve_points` — point enumeration and the elliptic group law
//! * `rr_bases` — graded function bases with prescribed pole orders
//! * `build_codes` — plain / extended / Roth-Lempel generator matrices
//! * `functional_duals` — dual generators from functions, with correction
//!   constants, checked against nullspace duals
//! * `classify_code` — weight distributions and defect classification
//! * `covering_radius` — exact coset-coverage enumeration with witnesses
//! * `reference_suite` — the built-in reference computations end to end
//!
//! The same functionality is scriptable through the `agcodes` binary
//! (`construct`, `analyze`, `dual`, `covering-radius`, `reproduce`).

pub mod analysis;
pub mod cli;
pub mod codes;
pub mod curves;
pub mod gf;
pub mod linalg;

mod error;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
