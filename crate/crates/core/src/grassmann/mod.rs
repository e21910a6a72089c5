//! Plücker coordinates, skew-symmetric matrices, Pfaffians and the rank strata
//! of the dual Grassmannian of lines.
//!
//! Conventions. A line through `P`, `Q` has `p_ij = P_i Q_j - P_j Q_i` (`i < j`); its skew
//! matrix has entry `(i, j) = p_ij`. A skew matrix `A` of dual coordinates is the linear
//! complex `sum_{i<j} a_ij p_ij = 0`, i.e. `P^T A Q = 0`. A rank-2 matrix `A = u∧v` is
//! at the same time the line `<u, v>` of the dual space and the 3-space
//! `π_A = {u·x = v·x = 0} = P(ker A)`; its coordinates as a point of G(3,5) are read off
//! by complementary index pairing (see [`plucker::three_space_plucker`]).

pub mod plucker;
pub mod skew;
pub mod subspace;

pub use plucker::{pairs, three_space_plucker, PluckerVector};
pub use skew::{in_dual_strata, DualStratum, PolySkew, QSkew, SkewMatrix};
pub use subspace::{kernel_space, kernel_subspace, LinearSubspace};

use crate::arith::Rational;
use crate::error::Result;

/// `pfaffian` of a rational skew matrix (free-function form).
pub fn pfaffian(m: &QSkew) -> Result<Rational> {
    m.pfaffian()
}

pub fn skew_rank(m: &QSkew) -> usize {
    m.rank()
}

pub fn plucker_from_points(p: &[Rational], q: &[Rational]) -> Result<PluckerVector> {
    PluckerVector::from_points(p, q)
}
