//! Value-avoidance analysis on the open unit disc: coincidence sets of a
//! triple of rational sections, the cross-ratio transport between an
//! avoiding function and its normalized counterpart, interpolation
//! divisors with jet conditions at coincidence points, and annulus class
//! diagnostics for the associated extremal constants.

pub mod goldberg;

pub use goldberg::{goldberg_profile, winding_number, GoldbergClasses, GoldbergProfile};

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::config;
use crate::error::{Error, Result};
use crate::polyalg::{poly_gcd, RegionSpec};
use crate::ratfunc::{poly_divisor_in, Divisor, MarginalPolicy, RatFunc, SphereValue};

/// Three pairwise distinct rational sections with no common pole. The
/// avoidance problem asks for a rational function staying off all three
/// over the disc.
#[derive(Clone, Debug, PartialEq)]
pub struct AvoidanceTriple {
    phi1: RatFunc,
    phi2: RatFunc,
    phi3: RatFunc,
}

/// A higher-order tangency condition at a coincidence point: the
/// normalized function times `ratio` must equal `1 + O((z - point)^order)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Jet {
    pub point: Complex64,
    pub order: usize,
    pub ratio: RatFunc,
}

/// The divisor data a normalized function must realize, together with
/// the jet conditions that replace plain divisor membership at
/// coincidence points of the triple.
#[derive(Clone, Debug, PartialEq)]
pub struct InterpolationData {
    /// Zeros in the disc of `phi3 - phi2`.
    pub zeros_divisor: Divisor,
    /// Zeros in the disc of `phi3 - phi1`.
    pub poles_divisor: Divisor,
    /// Zeros in the disc of `phi1 - phi2`.
    pub ones_divisor: Divisor,
    pub jets: Vec<Jet>,
}

impl AvoidanceTriple {
    pub fn new(phi1: RatFunc, phi2: RatFunc, phi3: RatFunc) -> Result<Self> {
        if phi1.approx_same(&phi2) || phi1.approx_same(&phi3) || phi2.approx_same(&phi3) {
            return Err(Error::IdenticalFunctions);
        }
        let shared = poly_gcd(&poly_gcd(phi1.den(), phi2.den())?, phi3.den())?;
        if shared.degree().unwrap_or(0) >= 1 {
            return Err(Error::CommonPole);
        }
        Ok(AvoidanceTriple { phi1, phi2, phi3 })
    }

    pub fn phi1(&self) -> &RatFunc {
        &self.phi1
    }

    pub fn phi2(&self) -> &RatFunc {
        &self.phi2
    }

    pub fn phi3(&self) -> &RatFunc {
        &self.phi3
    }
}

/// Points of the open unit disc where all three sections take the same
/// value, with multiplicity equal to the minimal coincidence order. The
/// set is computed as the common roots of the pairwise difference
/// numerators; a common root within the boundary band is an error.
pub fn triple_intersections(t: &AvoidanceTriple) -> Result<Divisor> {
    let d21 = t.phi2() - t.phi1();
    let d31 = t.phi3() - t.phi1();
    let d32 = t.phi3() - t.phi2();
    let common = poly_gcd(&poly_gcd(d21.num(), d31.num())?, d32.num())?;
    poly_divisor_in(&common, &RegionSpec::disc(), MarginalPolicy::Reject)
}

/// The three interpolation divisors of the triple restricted to the open
/// disc, plus one jet per coincidence point. Boundary-band roots of the
/// differences are dropped from the divisors: the disc is open, and a
/// root sitting on the rim within tolerance belongs to neither side.
pub fn interpolation_data(t: &AvoidanceTriple) -> Result<InterpolationData> {
    let disc = RegionSpec::disc();
    let d12 = t.phi1() - t.phi2();
    let d31 = t.phi3() - t.phi1();
    let d32 = t.phi3() - t.phi2();

    let zeros_divisor = poly_divisor_in(d32.num(), &disc, MarginalPolicy::Drop)?;
    let poles_divisor = poly_divisor_in(d31.num(), &disc, MarginalPolicy::Drop)?;
    let ones_divisor = poly_divisor_in(d12.num(), &disc, MarginalPolicy::Drop)?;

    let coincidences = triple_intersections(t)?;
    let mut jets = Vec::new();
    if !coincidences.is_empty() {
        let ratio = d31.div(&d32)?;
        for &(a, _) in &coincidences.entries {
            jets.push(Jet {
                point: a,
                order: ones_divisor.multiplicity_at(a, config::DIVISOR_MATCH_ABS),
                ratio: ratio.clone(),
            });
        }
    }

    Ok(InterpolationData {
        zeros_divisor,
        poles_divisor,
        ones_divisor,
        jets,
    })
}

/// The normalized form of `f` relative to the triple:
/// `g = (f - phi1)(phi3 - phi2) / ((f - phi2)(phi3 - phi1))`, which sends
/// `phi1` to 0, `phi2` to infinity and `phi3` to 1.
pub fn cross_ratio_fg(f: &RatFunc, t: &AvoidanceTriple) -> Result<RatFunc> {
    if f.approx_same(t.phi1()) || f.approx_same(t.phi2()) {
        return Err(Error::DegenerateCrossRatio);
    }
    let num = &(f - t.phi1()) * &(t.phi3() - t.phi2());
    let den = &(f - t.phi2()) * &(t.phi3() - t.phi1());
    num.div(&den)
}

/// The unique `f` whose normalized form relative to the triple is `g`,
/// obtained by solving the linear-fractional relation for `f`.
pub fn inverse_cross_ratio(g: &RatFunc, t: &AvoidanceTriple) -> Result<RatFunc> {
    let r = (t.phi3() - t.phi2()).div(&(t.phi3() - t.phi1()))?;
    if g.approx_same(&r) {
        return Err(Error::DegenerateCrossRatio);
    }
    let num = &(g * t.phi2()) - &(&r * t.phi1());
    let den = g - &r;
    num.div(&den)
}

/// Checks that `g` realizes the interpolation data: its disc divisors of
/// zeros, poles and 1-points match the prescribed ones away from the jet
/// points, and at each jet `(a, k, ratio)` the function `g * ratio - 1`
/// vanishes to order at least `k` at `a`. The jet points themselves are
/// excluded from the divisor comparison, since the jet condition is the
/// sharper statement there.
pub fn verify_g(g: &RatFunc, data: &InterpolationData) -> Result<bool> {
    if g.is_zero() {
        return Ok(false);
    }
    let g_minus_one = g - &RatFunc::one();
    if g_minus_one.is_zero() {
        return Ok(false);
    }

    let disc = RegionSpec::disc();
    let tol = config::DIVISOR_MATCH_ABS;
    let jet_points: Vec<Complex64> = data.jets.iter().map(|jet| jet.point).collect();

    let pairs = [
        (g.zeros_in_with(&disc, MarginalPolicy::Drop)?, &data.zeros_divisor),
        (g.poles_in_with(&disc, MarginalPolicy::Drop)?, &data.poles_divisor),
        (
            poly_divisor_in(g_minus_one.num(), &disc, MarginalPolicy::Drop)?,
            &data.ones_divisor,
        ),
    ];
    for (found, prescribed) in &pairs {
        let found = found.without_points(&jet_points, tol);
        let prescribed = prescribed.without_points(&jet_points, tol);
        if !found.approx_eq(&prescribed, tol) {
            return Ok(false);
        }
    }

    for jet in &data.jets {
        let mut h = &(g * &jet.ratio) - &RatFunc::one();
        for _ in 0..jet.order {
            match h.eval_sphere(jet.point) {
                SphereValue::Finite(v) if v.norm() <= config::JET_ABS => {}
                _ => return Ok(false),
            }
            h = h.derivative();
        }
    }
    Ok(true)
}

/// True iff `f` stays off all three sections of the triple throughout
/// the region, in the sphere-valued sense.
pub fn verify_avoidance(f: &RatFunc, t: &AvoidanceTriple, r: &RegionSpec) -> Result<bool> {
    for phi in [t.phi1(), t.phi2(), t.phi3()] {
        if !crate::stability::avoids(f, phi, r)? {
            return Ok(false);
        }
    }
    Ok(true)
}
