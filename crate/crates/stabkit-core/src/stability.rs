//! Stability verdicts, closed-loop algebra, the internal-stabilization
//! checker in its three equivalent forms, and the parity-interlacing
//! decision for stabilization by a stable controller.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::config;
use crate::error::{Error, Result};
use crate::polyalg::{poly_gcd, poly_roots, PointClass, Poly, RegionSpec};
use crate::ratfunc::{poly_divisor_split, Divisor, RatFunc};

/// Verdict on open-loop stability relative to a region.
#[derive(Clone, Debug, PartialEq)]
pub struct StabReport {
    /// True iff no pole lies inside the region or its boundary band.
    pub stable: bool,
    /// Poles strictly inside the region.
    pub offending_poles: Divisor,
    /// Poles inside the boundary band, reported rather than classified.
    pub marginal: Divisor,
}

/// Result of the internal-stabilization check. `ok` holds exactly when
/// the three divisor fields are empty and all four gang-of-four flags
/// are true; entries in `marginal` mean some classification sat within
/// the boundary tolerance and the verdict should not be trusted without
/// a second look.
#[derive(Clone, Debug, PartialEq)]
pub struct InternalStabReport {
    pub ok: bool,
    /// Zeros of `1 - cp` (as a canonical rational function) in the region.
    pub loop_zeros_in_region: Divisor,
    /// In-region coincidences of poles of `c` with zeros of `p`.
    pub cancellation_cp: Divisor,
    /// In-region coincidences of zeros of `c` with poles of `p`.
    pub cancellation_pc: Divisor,
    /// Stability flags for `pc/(1-pc)`, `c/(1-pc)`, `p/(1-pc)`, `1/(1-pc)`.
    pub gang_of_four_stable: [bool; 4],
    /// Roots whose classification fell inside the boundary band anywhere
    /// along the check.
    pub marginal: Divisor,
}

/// Classifies the poles of `p` against the region.
pub fn is_stable(p: &RatFunc, r: &RegionSpec) -> Result<StabReport> {
    let (offending, marginal) = poly_divisor_split(p.den(), r)?;
    Ok(StabReport {
        stable: offending.is_empty() && marginal.is_empty(),
        offending_poles: offending,
        marginal,
    })
}

/// The loop characteristic polynomial `den_c den_p - num_c num_p` and the
/// product `den_c den_p`; the first is zero exactly when `cp = 1`.
fn loop_parts(p: &RatFunc, c: &RatFunc) -> Result<(Poly, Poly)> {
    let dcdp = c.den() * p.den();
    let d = &dcdp - &(c.num() * p.num());
    if d.is_zero() {
        return Err(Error::DegenerateLoop);
    }
    Ok((d, dcdp))
}

/// The closed-loop transfer function `p/(1 - cp)`, canonicalized.
pub fn closed_loop(p: &RatFunc, c: &RatFunc) -> Result<RatFunc> {
    let (d, _) = loop_parts(p, c)?;
    RatFunc::new(p.num() * c.den(), d)
}

/// The four closed-loop transfer functions `pc/(1-pc)`, `c/(1-pc)`,
/// `p/(1-pc)`, `1/(1-pc)`, in that order.
pub fn gang_of_four(p: &RatFunc, c: &RatFunc) -> Result<(RatFunc, RatFunc, RatFunc, RatFunc)> {
    let (d, _) = loop_parts(p, c)?;
    Ok((
        RatFunc::new(p.num() * c.num(), d.clone())?,
        RatFunc::new(c.num() * p.den(), d.clone())?,
        RatFunc::new(p.num() * c.den(), d.clone())?,
        RatFunc::new(p.den() * c.den(), d)?,
    ))
}

fn located_roots(poly: &Poly, r: &RegionSpec) -> Result<Vec<(Complex64, usize, PointClass)>> {
    match poly.degree() {
        None | Some(0) => Ok(Vec::new()),
        _ => {
            let set = poly_roots(poly)?;
            Ok(set
                .roots
                .iter()
                .map(|&(z, m)| (z, m, r.classify(z)))
                .collect())
        }
    }
}

/// Checks internal stabilization of `p` by `c` over `r`: no zeros of
/// `1 - cp` in the region, no in-region pole/zero coincidences between
/// `c` and `p` in either direction, plus the four gang-of-four stability
/// flags. Marginal classifications land in the report instead of being
/// raised as errors.
pub fn internal_check(p: &RatFunc, c: &RatFunc, r: &RegionSpec) -> Result<InternalStabReport> {
    let (d, dcdp) = loop_parts(p, c)?;
    let tol = config::DIVISOR_MATCH_ABS;

    let one_minus_cp = RatFunc::new(d, dcdp)?;
    let (loop_zeros, mut marginal) = poly_divisor_split(one_minus_cp.num(), r)?;

    let poles_c = located_roots(c.den(), r)?;
    let poles_p = located_roots(p.den(), r)?;

    // A function that is identically zero vanishes everywhere, so every
    // in-region pole of the other factor is a cancellation.
    let mut cancellation_cp = Divisor::empty();
    if p.is_zero() {
        collect_in_region(&poles_c, &mut cancellation_cp, &mut marginal, tol);
    } else {
        let zeros_p = located_roots(p.num(), r)?;
        collect_coincidences(&poles_c, &zeros_p, &mut cancellation_cp, &mut marginal, tol);
    }

    let mut cancellation_pc = Divisor::empty();
    if c.is_zero() {
        collect_in_region(&poles_p, &mut cancellation_pc, &mut marginal, tol);
    } else {
        let zeros_c = located_roots(c.num(), r)?;
        collect_coincidences(&zeros_c, &poles_p, &mut cancellation_pc, &mut marginal, tol);
    }

    let (g1, g2, g3, g4) = gang_of_four(p, c)?;
    let mut gang_of_four_stable = [false; 4];
    for (flag, member) in gang_of_four_stable.iter_mut().zip([&g1, &g2, &g3, &g4]) {
        let report = is_stable(member, r)?;
        *flag = report.stable;
        for &(z, m) in &report.marginal.entries {
            marginal.push_merged(z, m, tol);
        }
    }

    // Internal stability demands all four closed-loop functions stable;
    // the divisor fields and the gang flags are two routes to the same
    // verdict in exact arithmetic, and the conjunction is the robust
    // reading when rounding makes them disagree.
    let ok = loop_zeros.is_empty()
        && cancellation_cp.is_empty()
        && cancellation_pc.is_empty()
        && gang_of_four_stable.iter().all(|&s| s);
    Ok(InternalStabReport {
        ok,
        loop_zeros_in_region: loop_zeros,
        cancellation_cp,
        cancellation_pc,
        gang_of_four_stable,
        marginal,
    })
}

fn collect_in_region(
    located: &[(Complex64, usize, PointClass)],
    out: &mut Divisor,
    marginal: &mut Divisor,
    tol: f64,
) {
    for &(z, m, class) in located {
        match class {
            PointClass::Interior => out.push_merged(z, m, tol),
            PointClass::Marginal => marginal.push_merged(z, m, tol),
            PointClass::Exterior => {}
        }
    }
}

fn collect_coincidences(
    first: &[(Complex64, usize, PointClass)],
    second: &[(Complex64, usize, PointClass)],
    out: &mut Divisor,
    marginal: &mut Divisor,
    tol: f64,
) {
    for &(u, mu, cu) in first {
        for &(v, mv, cv) in second {
            if (u - v).norm() > tol {
                continue;
            }
            let mult = mu.min(mv);
            if cu == PointClass::Interior || cv == PointClass::Interior {
                out.push_merged(u, mult, tol);
            } else if cu == PointClass::Marginal || cv == PointClass::Marginal {
                marginal.push_merged(u, mult, tol);
            }
        }
    }
}

/// True iff `c(z) != q(z)` throughout the region, as sphere-valued
/// functions: the equality locus is the root set of
/// `num_c den_q - num_q den_c` together with common denominator roots
/// (both functions taking the value infinity counts as equality).
pub fn avoids(c: &RatFunc, q: &RatFunc, r: &RegionSpec) -> Result<bool> {
    if c.approx_same(q) {
        return Err(Error::IdenticalFunctions);
    }
    let d = &(c.num() * q.den()) - &(q.num() * c.den());
    if d.is_zero() {
        return Err(Error::IdenticalFunctions);
    }

    let mut classes: Vec<PointClass> = Vec::new();
    for &(_, _, class) in &located_roots(&d, r)? {
        classes.push(class);
    }
    let shared = poly_gcd(c.den(), q.den())?;
    for &(_, _, class) in &located_roots(&shared, r)? {
        classes.push(class);
    }

    if classes.contains(&PointClass::Interior) {
        return Ok(false);
    }
    if classes.contains(&PointClass::Marginal) {
        return Err(Error::MarginalRoot);
    }
    Ok(true)
}

/// Parity-interlacing test on the positive real axis: collects real
/// zeros and poles of `p` in `(0, +inf)` with multiplicity, appends the
/// point at infinity as a zero when `p` is proper, and requires an even
/// total pole multiplicity between every pair of adjacent zeros.
pub fn pip_check(p: &RatFunc) -> Result<bool> {
    pip_check_with(p, true)
}

/// [`pip_check`] with the infinity-zero convention made explicit;
/// `include_infinity_zero = false` restricts the test to finite zeros.
pub fn pip_check_with(p: &RatFunc, include_infinity_zero: bool) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let zeros = positive_axis_roots(p.num())?;
    let poles = positive_axis_roots(p.den())?;

    for &(z, _) in &zeros {
        for &(u, _) in &poles {
            if (z - u).abs() <= config::DIVISOR_MATCH_ABS {
                return Err(Error::MarginalRoot);
            }
        }
    }

    let mut cuts: Vec<f64> = zeros.iter().map(|&(z, _)| z).collect();
    if include_infinity_zero && p.is_proper() {
        cuts.push(f64::INFINITY);
    }

    for pair in cuts.windows(2) {
        let count: usize = poles
            .iter()
            .filter(|&&(u, _)| pair[0] < u && u < pair[1])
            .map(|&(_, m)| m)
            .sum();
        if count % 2 == 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Existence of a stable real stabilizer for the right-half-plane
/// convention; decided by the parity-interlacing test.
pub fn strongly_stabilizable(p: &RatFunc) -> Result<bool> {
    pip_check(p)
}

/// Real roots in `(0, +inf)` with multiplicity, in ascending order.
fn positive_axis_roots(poly: &Poly) -> Result<Vec<(f64, usize)>> {
    match poly.degree() {
        None | Some(0) => Ok(Vec::new()),
        _ => {
            let set = poly_roots(poly)?;
            Ok(set
                .roots
                .iter()
                .filter(|&&(z, _)| z.im == 0.0 && z.re > 0.0)
                .map(|&(z, m)| (z.re, m))
                .collect())
        }
    }
}
