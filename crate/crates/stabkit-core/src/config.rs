//! Centralized numeric tolerances and sampling parameters.
//!
//! Every tolerance the toolkit relies on is declared here so the numeric
//! policy can be audited in one place. The values are calibrated for
//! desk-scale inputs: exact-ish user-entered coefficients of moderate
//! degree, not noisy measured data.

/// Default half-width of the band around a region boundary inside which a
/// root is classified as marginal rather than interior or exterior.
pub const DEFAULT_BOUNDARY_BAND: f64 = 1e-9;

/// Exclusive upper bound on admissible boundary bands.
pub const MAX_BOUNDARY_BAND: f64 = 0.1;

/// Two roots merge into one multiple root when their distance is below
/// `ROOT_CLUSTER_REL * (1 + max |root|)`.
pub const ROOT_CLUSTER_REL: f64 = 1e-6;

/// A Euclidean-algorithm remainder whose coefficients all fall below this
/// tolerance (relative to operands normalized to unit magnitude) is
/// treated as zero.
pub const GCD_REL: f64 = 1e-9;

/// A Routh first-column pivot below this fraction of the working rows'
/// magnitude makes the array verdict unreliable.
pub const ROUTH_PIVOT_REL: f64 = 1e-9;

/// Trailing coefficients below this fraction of the scale of the operands
/// that produced them are trimmed away as floating-point residue.
pub const COEFF_TRIM_REL: f64 = 1e-12;

/// Absolute distance under which two divisor points are considered the
/// same point when divisors are compared.
pub const DIVISOR_MATCH_ABS: f64 = 1e-6;

/// A polynomial value below this fraction of the sum `sum |c_k| |z|^k`
/// counts as an exact zero during sphere-valued evaluation.
pub const EVAL_ZERO_REL: f64 = 1e-12;

/// Two canonical rational functions whose coefficient vectors differ by
/// less than this relative amount are treated as the same function.
pub const FUNC_IDENTITY_REL: f64 = 1e-9;

/// Absolute tolerance on the value and derivatives checked by the
/// jet conditions at triple-intersection points.
pub const JET_ABS: f64 = 1e-6;

/// Boundary sample count used when certifying a controller margin.
pub const MARGIN_GRID: usize = 720;

/// Boundary sample count used inside the search objective (coarser than
/// certification for speed; certificates are re-checked at full density).
pub const OBJECTIVE_GRID: usize = 180;

/// Sample count for numerically integrated winding numbers.
pub const WINDING_SAMPLES: usize = 4096;

/// Objective-evaluation budget granted to each search restart.
pub const EVALS_PER_RESTART: usize = 200;

/// Largest controller coefficient magnitude the search will consider.
/// Beyond this scale the floating-point loop polynomial loses the very
/// terms that carry its roots, so such candidates are worthless.
pub const SEARCH_COEFF_LIMIT: f64 = 1e6;

/// Margin value past which the search objective stops rewarding further
/// growth; without a cap the margin term drives coefficients to
/// infinity on problems where the margin is unbounded.
pub const SEARCH_MARGIN_CAP: f64 = 1.0;

/// Clearance from the region boundary that the search objective tries to
/// enforce before handing a candidate to exact certification.
pub const SEARCH_SAFETY: f64 = 1e-2;
