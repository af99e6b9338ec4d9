//! Exact classification of co-torsion rank two modules.
//!
//! Finite-index sublattices of `Z^2` and co-torsion submodules of `O_K^2`
//! (for `O_K` the maximal order of an imaginary quadratic field) are
//! classified by a pair of invariant factor ideals together with a point on
//! the projective line over a residue ring. This crate computes those
//! invariants, rebuilds modules from them, enumerates modules through the
//! projective lines, and checks the associated Dirichlet series identities
//! coefficient by coefficient.
//!
//! All arithmetic is exact. Machine integers are `i64` with overflow checks
//! enabled in every build profile, so an overflow aborts instead of wrapping.

pub mod arith;
pub mod dirichlet;
mod error;
pub mod lattice2;
pub mod matrix;
pub mod okmodules;
pub mod okproj;
pub mod projline;
pub mod quadring;
pub mod zlattice;

pub use error::{Error, Result};
pub use lattice2::Lattice2;
pub use okmodules::{CotorsionModule, OkInvariantData};
pub use okproj::OkProjPoint;
pub use projline::ProjPoint;
pub use quadring::{QuadIdeal, QuadInt, QuadRing};
