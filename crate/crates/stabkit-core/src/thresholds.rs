//! Recorded extremal constants and the exact decision procedures for the
//! classical worked stabilization families that reduce to them.

use core::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// The constants the decision procedures rest on. Two are evaluated from
/// closed forms at runtime; the rest are recorded at the precision their
/// sources print, since no computable formula is known for them.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConstantsTable {
    /// Smallest preimage radius over the widest (meromorphic) annulus
    /// class: `exp(-pi^2 / log(3 + 2 sqrt 2))`.
    pub a0: f64,
    /// Published lower bound for the holomorphic-class constant.
    pub a2_lower: f64,
    /// Published upper bound for the holomorphic-class constant: the
    /// covering-map value `mu`, recorded at printed precision.
    pub a2_upper_mu: f64,
    /// Bermant's threshold `8 pi^2 / Gamma(1/4)^4` for the symmetric
    /// two-value family.
    pub bermant_delta0: f64,
    /// Caratheodory's threshold 1/16, exactly.
    pub caratheodory: f64,
    /// Best known lower bound for the two-1-points family, from Hempel's
    /// geodesic-length estimate.
    pub chocolate_lower: f64,
    /// Best known upper bound for the two-1-points family, the Chang
    /// record.
    pub chocolate_upper: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictStatus {
    Stabilizable,
    NotStabilizable,
    Unknown,
}

/// A decision together with the threshold it was tested against and the
/// provenance of that threshold.
#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub status: VerdictStatus,
    pub threshold: f64,
    pub citation: &'static str,
}

/// Arithmetic-geometric mean of two positive numbers.
fn agm(mut a: f64, mut b: f64) -> f64 {
    for _ in 0..64 {
        let an = 0.5 * (a + b);
        let bn = libm::sqrt(a * b);
        if (an - bn).abs() <= f64::EPSILON * an {
            return an;
        }
        a = an;
        b = bn;
    }
    0.5 * (a + b)
}

/// `Gamma(1/4)` via the arithmetic-geometric mean:
/// `Gamma(1/4)^2 = 2 sqrt(2 pi) * pi / agm(1, sqrt 2)`.
fn gamma_quarter() -> f64 {
    libm::sqrt(2.0 * libm::sqrt(2.0 * PI) * PI / agm(1.0, libm::sqrt(2.0)))
}

pub fn constants() -> ConstantsTable {
    let gq = gamma_quarter();
    let gq2 = gq * gq;
    ConstantsTable {
        a0: libm::exp(-PI * PI / libm::log(3.0 + 2.0 * libm::sqrt(2.0))),
        a2_lower: 0.005_874_65,
        a2_upper_mu: 0.025_289_6,
        bermant_delta0: 8.0 * PI * PI / (gq2 * gq2),
        caratheodory: 1.0 / 16.0,
        chocolate_lower: 0.014_507_79,
        chocolate_upper: 0.1148,
    }
}

/// Decision for the symmetric family with plants `z^2/(z - delta)`,
/// `z^2/(z + delta)` and `0` on the disc: stabilizable exactly when
/// `delta` exceeds Bermant's threshold. Equality fails because the
/// extremal function is not rational.
pub fn blondel_example_decision(delta: f64) -> Result<Verdict> {
    if !(delta > 0.0) {
        return Err(Error::NonPositiveParameter);
    }
    let d0 = constants().bermant_delta0;
    Ok(Verdict {
        status: if delta > d0 {
            VerdictStatus::Stabilizable
        } else {
            VerdictStatus::NotStabilizable
        },
        threshold: d0,
        citation: "Bermant: admissible iff delta >= 8 pi^2 / Gamma(1/4)^4, \
                   with a non-rational extremal function, so rational \
                   stabilizers require strict inequality",
    })
}

/// Decision for the family with plants `z`, `z^2/(z - a)` and `0` on the
/// disc: stabilizable exactly when `a > 1/16`. Equality fails because
/// the extremal function is not rational.
pub fn patel_example_decision(a: f64) -> Result<Verdict> {
    if !(a > 0.0) {
        return Err(Error::NonPositiveParameter);
    }
    let threshold = constants().caratheodory;
    Ok(Verdict {
        status: if a > threshold {
            VerdictStatus::Stabilizable
        } else {
            VerdictStatus::NotStabilizable
        },
        threshold,
        citation: "Caratheodory: any admissible holomorphic function \
                   forces |a| >= 1/16, with a non-rational extremal \
                   function, so rational stabilizers require strict \
                   inequality",
    })
}

/// Decision for stabilizing `(z + a)^2/(z - a)` by a controller with
/// neither zeros nor poles in the disc: possible exactly when `|a|`
/// exceeds the covering-map constant `mu`. At `|a| = mu` the unique
/// admissible function is transcendental.
pub fn bistable_example_decision(a: Complex64) -> Result<Verdict> {
    if !(a.norm() < 1.0) {
        return Err(Error::OutOfDisc);
    }
    let mu = constants().a2_upper_mu;
    Ok(Verdict {
        status: if a.norm() > mu {
            VerdictStatus::Stabilizable
        } else {
            VerdictStatus::NotStabilizable
        },
        threshold: mu,
        citation: "covering-map constant mu ~ 0.0252896 (recorded at \
                   printed precision): admissible iff |a| >= mu, and at \
                   equality the unique admissible function is \
                   transcendental",
    })
}

/// Decision for the family asking for a disc function with no poles, one
/// simple zero at 0 and exactly two simple 1-points at `±i delta`. The
/// true threshold is unknown; outside the published bracket the answer
/// is definite, inside it the verdict is `Unknown`. The reported
/// threshold is the bound the parameter was tested against (the upper
/// bound in the `Unknown` case, since reaching it would certify).
pub fn chocolate_decision(delta: f64) -> Result<Verdict> {
    if !(delta > 0.0) {
        return Err(Error::NonPositiveParameter);
    }
    let table = constants();
    if delta < table.chocolate_lower {
        Ok(Verdict {
            status: VerdictStatus::NotStabilizable,
            threshold: table.chocolate_lower,
            citation: "below the lower bound 0.01450779 derived from \
                       Hempel's estimate of the minimal closed geodesic \
                       length in a twice punctured disc",
        })
    } else if delta >= table.chocolate_upper {
        Ok(Verdict {
            status: VerdictStatus::Stabilizable,
            threshold: table.chocolate_upper,
            citation: "at or above the Chang record upper bound 0.1148 \
                       for the unknown threshold",
        })
    } else {
        Ok(Verdict {
            status: VerdictStatus::Unknown,
            threshold: table.chocolate_upper,
            citation: "inside the open gap between the Hempel-based \
                       lower bound 0.01450779 and the Chang record \
                       0.1148; the exact threshold is an open problem",
        })
    }
}
