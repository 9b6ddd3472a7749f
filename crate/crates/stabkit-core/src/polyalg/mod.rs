//! Real univariate polynomial arithmetic, root finding with multiplicity
//! clustering, Routh arrays, and half-plane/disc root-location tests.

mod poly;
mod region;
mod roots;
mod routh;

pub use poly::{poly_gcd, Poly};
pub use region::{PointClass, RegionKind, RegionSpec};
pub use roots::{count_roots_in, poly_roots, RootSet};
pub use routh::{hurwitz_stable, routh_stable};
