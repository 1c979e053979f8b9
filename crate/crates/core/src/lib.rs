//! Exact computations in the tautological ring of symmetric products of
//! curves, diagonal cycle classes and the diagonal cone, together with a
//! general exact rational polyhedral-cone engine (dual cones, face lattices,
//! perfect faces) and brute-force convex-hull oracles.
//!
//! All arithmetic is exact: coefficients are arbitrary-precision rationals
//! and every equality test in the verification suites is an exact zero test.
//!
//! The crate is organised around the mathematical objects:
//!
//! - [`taut_ring`]: the ring R*(C_d) generated by the divisor classes x and
//!   theta — intersection numbers, standard bases, pairing matrices,
//!   reduction and multiplication.
//! - [`partitions`]: integer partitions, elementary symmetric and power-sum
//!   functions, balanced partitions, breaks, the determinant criterion and
//!   the Chebyshev-type positivity certificate.
//! - [`diagonals`]: diagonal cycle classes, the w-basis, the eta class and
//!   push-pull operators.
//! - [`cone_geom`]: rational polyhedral cones — double description, duals,
//!   lineality, face lattices, perfect faces, hull vertices and the
//!   locally-finitely-generated verifier.
//! - [`diag_cone`]: end-to-end analysis of the diagonal cone, comparing
//!   brute-force hull extremal rays against closed-form predictions.
//! - [`sweep`]: grid sweeps over instances, data-parallel by default
//!   (feature `parallel`), with sequential fallbacks for benchmarking.

pub mod cone_geom;
pub mod diag_cone;
pub mod diagonals;
pub mod linalg;
mod par;
pub mod partitions;
pub mod rational;
pub mod simplex;
pub mod sweep;
pub mod taut_ring;

pub use rational::Rat;

use thiserror::Error;

/// Errors produced by library operations.
#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on the inputs was violated.
    #[error("domain error: {0}")]
    Domain(String),
    /// A resource guard (size bound) would be exceeded.
    #[error("resource guard exceeded: {0}")]
    Resource(String),
    /// An operation requiring a salient cone was given one with nonzero
    /// lineality; the witness spans a line contained in the cone.
    #[error("cone is not salient: lineality witness {witness:?}")]
    NonSalient { witness: Vec<Rat> },
}

pub type Result<T> = std::result::Result<T, Error>;

/// Resource guards for the enumeration- and cone-heavy operations.
///
/// Defaults are the desk-scale contract; callers may raise them explicitly.
#[derive(Clone, Debug)]
pub struct Guards {
    /// Largest `t` accepted by `brute_min`.
    pub max_brute_t: u32,
    /// Largest number of parts accepted by `brute_min`.
    pub max_brute_parts: u32,
    /// Largest `t` accepted by `polytope_pi`.
    pub max_polytope_t: u32,
    /// Largest `r` accepted by `polytope_pi`.
    pub max_polytope_r: u32,
    /// Largest ambient dimension accepted by the cone engine.
    pub max_ambient: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            max_brute_t: 30,
            max_brute_parts: 6,
            max_polytope_t: 20,
            max_polytope_r: 6,
            max_ambient: 8,
        }
    }
}

impl Guards {
    /// Guards with every bound lifted. For callers that opt out explicitly.
    pub fn unlimited() -> Self {
        Guards {
            max_brute_t: u32::MAX,
            max_brute_parts: u32::MAX,
            max_polytope_t: u32::MAX,
            max_polytope_r: u32::MAX,
            max_ambient: usize::MAX,
        }
    }
}
