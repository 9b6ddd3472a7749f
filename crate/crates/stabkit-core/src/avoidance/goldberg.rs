//! Annulus diagnostics for a function of the disc relative to the three
//! special values 0, 1 and infinity: the preimage radius, the winding
//! numbers of the mid-annulus image curve, and membership flags for the
//! nested classes over which the extremal avoidance constants are taken.

use num_complex::Complex64;

use crate::config;
use crate::error::{Error, Result};
use crate::polyalg::{Poly, RegionSpec};
use crate::ratfunc::{poly_divisor_split, Divisor, RatFunc, SphereValue};

/// Membership flags for the nested function classes, from the widest
/// (`f0`) to the narrowest (`f4`). The containments `f4 ⊆ f2 ⊆ f1 ⊆ f0`
/// and `f2 ⊆ f3 ⊆ f1` hold by construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GoldbergClasses {
    /// On the annulus `rho < |z| < 1` the function omits 0, 1 and
    /// infinity, and the windings of the mid-annulus image curve about 0
    /// and about 1 are nonzero and distinct.
    pub f0: bool,
    /// Meromorphic members of `f0` whose counts of zeros, poles and
    /// 1-points in the disc are finite and pairwise distinct.
    pub f1: bool,
    /// Members of `f1` holomorphic in the disc: no poles there.
    pub f2: bool,
    /// Rational members of `f1`; rational input qualifies whenever `f1`
    /// does.
    pub f3: bool,
    /// Polynomial members: rational with a constant denominator.
    pub f4: bool,
}

/// Preimage and winding data for one function of the disc.
#[derive(Clone, Debug, PartialEq)]
pub struct GoldbergProfile {
    /// Largest modulus of a disc preimage of 0, 1 or infinity; 0.0 when
    /// no such preimage exists.
    pub rho: f64,
    /// Zeros in the disc, with multiplicity.
    pub n_zeros: usize,
    /// Poles in the disc, with multiplicity.
    pub n_poles: usize,
    /// 1-points in the disc, with multiplicity.
    pub n_ones: usize,
    /// Winding about 0 of the image of `|z| = (1 + rho)/2`; equals zeros
    /// minus poles enclosed.
    pub n0: i64,
    /// Winding about 1; equals 1-points minus poles enclosed.
    pub n1: i64,
    pub classes: GoldbergClasses,
}

fn disc_preimages(p: &Poly, disc: &RegionSpec) -> Result<Divisor> {
    if p.degree().map_or(true, |d| d == 0) {
        return Ok(Divisor::empty());
    }
    let (interior, marginal) = poly_divisor_split(p, disc)?;
    if !marginal.is_empty() {
        return Err(Error::PreimageOnBoundary);
    }
    Ok(interior)
}

/// Profiles a nonconstant rational function: preimages of 0, 1 and
/// infinity in the open unit disc, the resulting preimage radius and
/// winding numbers, and the class flags. Every winding is obtained by
/// direct pole/zero counting; since all preimages have modulus at most
/// `rho`, the counts over the mid-annulus circle are the counts over the
/// whole disc.
pub fn goldberg_profile(f: &RatFunc) -> Result<GoldbergProfile> {
    if f.is_constant() {
        return Err(Error::ConstantFunction);
    }
    let disc = RegionSpec::disc();
    let zeros = disc_preimages(f.num(), &disc)?;
    let poles = disc_preimages(f.den(), &disc)?;
    let ones = disc_preimages(&(f.num() - f.den()), &disc)?;

    let mut rho = 0.0f64;
    for divisor in [&zeros, &poles, &ones] {
        for &(z, _) in &divisor.entries {
            rho = rho.max(z.norm());
        }
    }

    let n_zeros = zeros.total_multiplicity();
    let n_poles = poles.total_multiplicity();
    let n_ones = ones.total_multiplicity();
    let n0 = n_zeros as i64 - n_poles as i64;
    let n1 = n_ones as i64 - n_poles as i64;

    let f0 = n0 != 0 && n1 != 0 && n0 != n1;
    let counts_distinct = n_zeros != n_poles && n_zeros != n_ones && n_poles != n_ones;
    let f1 = f0 && counts_distinct;
    let f3 = f1;
    let f2 = f1 && n_poles == 0;
    let f4 = f2 && f.den().degree() == Some(0);

    Ok(GoldbergProfile {
        rho,
        n_zeros,
        n_poles,
        n_ones,
        n0,
        n1,
        classes: GoldbergClasses { f0, f1, f2, f3, f4 },
    })
}

/// Winding number about `about` of the image under `f` of the circle
/// `|z| = radius`, by accumulation of wrapped phase increments over
/// uniformly spaced samples. Errors if a sample lands on a pole of `f`
/// or exactly on the target value.
pub fn winding_number(f: &RatFunc, radius: f64, about: Complex64) -> Result<i64> {
    let n = config::WINDING_SAMPLES;
    let tau = 2.0 * core::f64::consts::PI;
    let mut total = 0.0f64;
    let mut prev = 0.0f64;
    for k in 0..=n {
        let theta = tau * (k as f64) / (n as f64);
        let z = Complex64::new(radius * libm::cos(theta), radius * libm::sin(theta));
        let w = match f.eval_sphere(z) {
            SphereValue::Finite(v) => v - about,
            SphereValue::Infinity => return Err(Error::PreimageOnBoundary),
        };
        if w.norm() == 0.0 {
            return Err(Error::PreimageOnBoundary);
        }
        let arg = w.arg();
        if k > 0 {
            let mut step = arg - prev;
            if step > core::f64::consts::PI {
                step -= tau;
            } else if step < -core::f64::consts::PI {
                step += tau;
            }
            total += step;
        }
        prev = arg;
    }
    Ok(libm::round(total / tau) as i64)
}
