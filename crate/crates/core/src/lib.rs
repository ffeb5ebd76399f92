//! Integral closures of powers of monomial ideals.
//!
//! The library computes Newton polyhedra of monomial ideals with exact
//! integer facet data, the integral closures of their powers, depth and
//! local cohomology of the quotients via degree complexes (with an
//! independent multigraded Betti-number oracle), associated-prime and depth
//! stability scans with certified index bounds, and Cohen-Macaulay /
//! equimultiple / complete-intersection classification.

pub mod cm;
pub mod corpus;
pub mod depth;
pub mod error;
pub mod homology;
pub mod ideal;
pub mod io;
mod linalg;
pub mod newton;
pub mod stability;
pub mod suites;
pub mod varset;

pub use error::{Error, Result};
pub use ideal::{ExponentVector, IrreducibleComponent, MonomialIdeal, PrimeSupport};
pub use newton::{Halfspace, MembershipOracle, NewtonPolyhedron, ResourceCaps};
pub use varset::VarSet;
