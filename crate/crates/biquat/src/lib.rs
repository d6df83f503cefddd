//! Biquaternions: quaternions whose four coefficients are complex numbers.
//!
//! The algebra lives on the basis `(1, i, j, k)` with the usual quaternion
//! rules `i² = j² = k² = ijk = -1`, plus a second imaginary unit `I` that
//! commutes with everything. Expanded over the reals that gives eight
//! directions: `1, iI, jI, kI, i, j, k, I`. The extra unit buys a lot of
//! structure real quaternions do not have: the norm becomes complex-valued,
//! nonzero elements can square to zero or to themselves, `-1` acquires a
//! two-parameter family of square roots, and every element decomposes into
//! scalar, vector, bivector and pseudoscalar grades exactly as in the
//! geometric algebra of 3-space.
//!
//! Quick taste:
//!
//! ```
//! use biquat::{Biquaternion, Quaternion, Tolerance};
//!
//! let tol = Tolerance::default();
//! let q = Biquaternion::from_parts(Quaternion::new(0.0, 1.0, 0.0, 0.0),
//!                                  Quaternion::new(0.0, 0.0, 1.0, 0.0));
//! // q = i + Ij squares to zero even though q != 0
//! assert_eq!(q * q, Biquaternion::ZERO);
//! assert!(biquat::special::is_nilpotent(q, tol));
//! ```
//!
//! The `examples/` directory is the guided tour; each file is runnable on its
//! own and prints what it demonstrates:
//!
//! ```text
//! cargo run -p biquat --example arithmetic        # products, inverses, zero divisors
//! cargo run -p biquat --example basis_table       # the 8 x 8 basis product grid
//! cargo run -p biquat --example conjugations      # the three conjugates and their identities
//! cargo run -p biquat --example norms             # semi-norm, modulus, rule of the norms
//! cargo run -p biquat --example orthogonality     # the four grades of orthogonality
//! cargo run -p biquat --example special_elements  # roots of -1, idempotents, nilpotents
//! cargo run -p biquat --example representations   # the written forms of a biquaternion
//! cargo run -p biquat --example polar_forms       # both polar decompositions
//! cargo run -p biquat --example geometric_algebra # grades, wedge, dual
//! cargo run -p biquat --example expressions       # the expression language
//! cargo run -p biquat --example verify_run        # the randomized identity harness
//! ```
//!
//! The same functionality is scriptable through the `biquat` binary:
//! `eval`, `classify`, `repr`, `tables` and `verify` subcommands (see the
//! README or `biquat --help`).

pub mod cli;
mod complex;
pub mod conj;
mod error;
pub mod expr;
pub mod geom;
pub mod metric;
mod quaternion;
pub mod repr;
pub mod sample;
pub mod special;
pub mod tables;
mod tolerance;
pub mod verify;

mod biquaternion;

pub use biquaternion::{basis_product, BasisElement, Biquaternion};
pub use complex::Complex;
pub use error::Error;
pub use quaternion::Quaternion;
pub use tolerance::Tolerance;
