//! Scalar score for a controller candidate: positive while any
//! constraint is violated, measuring the total violation against a small
//! safety band, and otherwise the negative of a conservative margin
//! estimate, so that minimization first reaches feasibility and then
//! pushes the certificate margin up.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::config;
use crate::polyalg::{poly_roots, Poly, RegionSpec};
use crate::ratfunc::{RatFunc, SphereValue};

use super::Prepared;

const BIG: f64 = 1e9;

/// Roots of a polynomial as bare points; empty for constants.
pub(super) fn root_points(p: &Poly) -> crate::error::Result<Vec<Complex64>> {
    match p.degree() {
        None | Some(0) => Ok(Vec::new()),
        _ => Ok(poly_roots(p)?.roots.iter().map(|&(z, _)| z).collect()),
    }
}

/// Builds the controller encoded by a coefficient vector: the first
/// `num_deg + 1` entries are the ascending numerator coefficients, the
/// rest the denominator. `None` when the denominator collapses to zero.
pub(super) fn controller_from(x: &[f64], num_deg: usize, den_deg: usize) -> Option<RatFunc> {
    debug_assert_eq!(x.len(), num_deg + den_deg + 2);
    let num = Poly::new(x[..=num_deg].to_vec());
    let den = Poly::new(x[num_deg + 1..].to_vec());
    RatFunc::new(num, den).ok()
}

fn pair_terms(
    us: &[Complex64],
    vs: &[Complex64],
    r: &RegionSpec,
    safety: f64,
    violation: &mut f64,
    margin: &mut f64,
) {
    for &u in us {
        for &v in vs {
            let m = (u - v)
                .norm()
                .max(r.distance_to_closure(u))
                .max(r.distance_to_closure(v));
            *violation += (safety - m).max(0.0);
            *margin = margin.min(m);
        }
    }
}

fn exterior_terms(
    points: &[Complex64],
    r: &RegionSpec,
    safety: f64,
    violation: &mut f64,
    margin: &mut f64,
) {
    for &z in points {
        *violation += (safety - r.signed_distance(z)).max(0.0);
        *margin = margin.min(r.distance_to_closure(z));
    }
}

pub(super) fn objective(prep: &Prepared, x: &[f64]) -> f64 {
    if x.iter()
        .any(|v| !v.is_finite() || v.abs() > config::SEARCH_COEFF_LIMIT)
    {
        return BIG;
    }
    let (num_deg, den_deg) = prep.spec.controller_degree;
    let c = match controller_from(x, num_deg, den_deg) {
        Some(c) => c,
        None => return BIG,
    };

    let r = &prep.spec.region;
    let safety = config::SEARCH_SAFETY;
    let mut violation = 0.0f64;
    let mut margin = f64::INFINITY;

    let c_zeros = match root_points(c.num()) {
        Ok(z) => z,
        Err(_) => return BIG,
    };
    let c_poles = match root_points(c.den()) {
        Ok(z) => z,
        Err(_) => return BIG,
    };

    if prep.spec.require_stable_controller || prep.spec.require_bistable_controller {
        for &u in &c_poles {
            violation += (safety - r.signed_distance(u)).max(0.0);
        }
    }
    if prep.spec.require_bistable_controller {
        if c.is_zero() {
            violation += 1e3;
        }
        for &u in &c_zeros {
            violation += (safety - r.signed_distance(u)).max(0.0);
        }
    }

    for plant in &prep.plants {
        let dcdp = c.den() * plant.plant.den();
        let d = &dcdp - &(c.num() * plant.plant.num());
        if d.is_zero() {
            violation += 1e6;
            continue;
        }
        // raw loop-polynomial roots, not the canonical form: the gcd in
        // canonicalization can swallow a genuine in-region zero that
        // sits close to a loop pole, and the search must see it
        match root_points(&d) {
            Ok(zs) => exterior_terms(&zs, r, safety, &mut violation, &mut margin),
            Err(_) => return BIG,
        }

        if plant.is_zero {
            // the zero plant cancels against every controller pole in
            // the region
            exterior_terms(&c_poles, r, safety, &mut violation, &mut margin);
        } else {
            pair_terms(&c_poles, &plant.zeros, r, safety, &mut violation, &mut margin);
            if c.is_zero() {
                exterior_terms(&plant.poles, r, safety, &mut violation, &mut margin);
            } else {
                pair_terms(&c_zeros, &plant.poles, r, safety, &mut violation, &mut margin);
            }
        }

        for (w, pv) in prep.grid.iter().zip(&plant.grid_values) {
            if let Some(pv) = pv {
                if let SphereValue::Finite(cv) = c.eval_sphere(*w) {
                    margin = margin.min((Complex64::new(1.0, 0.0) - cv * pv).norm());
                }
            }
        }
    }

    if violation > 0.0 {
        violation
    } else {
        -margin.min(config::SEARCH_MARGIN_CAP)
    }
}
