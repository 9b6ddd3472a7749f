//! Core library for deciding, certifying, and numerically witnessing
//! stabilization questions about single-input single-output linear systems
//! with real rational transfer functions.
//!
//! The crate is organised bottom-up:
//!
//! * [`polyalg`] — real polynomial arithmetic, root finding with
//!   multiplicity clustering, Routh arrays, and region classification;
//! * [`ratfunc`] — rational functions on the Riemann sphere, divisors,
//!   the disc/half-plane transport, state-space realizations, and
//!   discrete-time simulation;
//! * [`stability`] — stability verdicts, closed-loop algebra, the
//!   internal-stabilization checker, and the parity-interlacing test;
//! * [`avoidance`] — the cross-ratio correspondence between avoidance
//!   problems and zero/pole/one interpolation, plus Goldberg-class
//!   diagnostics;
//! * [`thresholds`] — closed-form stabilizability constants and the exact
//!   decision procedures for the classical example families;
//! * [`search`] — derivative-free multistart search for low-degree
//!   controllers with exact post-hoc certification.
//!
//! The crate is `no_std` (with `alloc`); everything that needs an
//! operating system lives in the companion CLI crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod avoidance;
pub mod config;
pub mod error;
pub mod polyalg;
pub mod ratfunc;
pub mod search;
pub mod stability;
pub mod thresholds;

pub use error::{Error, Result};
pub use polyalg::{Poly, PointClass, RegionKind, RegionSpec, RootSet};
pub use ratfunc::{Divisor, RatFunc, SphereValue, StateSpace};
