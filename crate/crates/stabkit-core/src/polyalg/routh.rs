//! The Routh array test for Hurwitz stability.

use alloc::vec::Vec;

use super::poly::Poly;
use super::region::RegionSpec;
use super::roots::count_roots_in;
use crate::config;
use crate::error::{Error, Result};

/// Raw Routh-array verdict: `true` iff every root has strictly negative
/// real part.
///
/// A first-column pivot whose magnitude falls below tolerance (relative
/// to the rows that produced it) raises [`Error::MarginalCase`] instead
/// of applying an epsilon-perturbation trick: an exact fallback exists in
/// [`count_roots_in`], so silently perturbing the array is unnecessary
/// risk. A strict sign change decides the verdict immediately, so an
/// already-proven-unstable polynomial does not report a marginal case for
/// a singular pivot further down the array.
pub fn routh_stable(p: &Poly) -> Result<bool> {
    let deg = p.degree().ok_or(Error::ZeroPolynomial)?;
    if deg == 0 {
        return Ok(true);
    }

    // Descending coefficients, leading coefficient normalized positive.
    let sign = if p.leading().unwrap() < 0.0 { -1.0 } else { 1.0 };
    let desc: Vec<f64> = p.coeffs().iter().rev().map(|c| c * sign).collect();

    let width = deg / 2 + 1;
    let mut prev: Vec<f64> = (0..width)
        .map(|j| desc.get(2 * j).copied().unwrap_or(0.0))
        .collect();
    let mut curr: Vec<f64> = (0..width)
        .map(|j| desc.get(2 * j + 1).copied().unwrap_or(0.0))
        .collect();

    // First column starts with the (positive) leading coefficient; the
    // remaining deg entries come from curr and its successors.
    for _ in 0..deg {
        let scale = prev
            .iter()
            .chain(curr.iter())
            .fold(0.0f64, |m, v| m.max(v.abs()));
        let pivot = curr[0];
        if pivot.abs() <= config::ROUTH_PIVOT_REL * scale {
            return Err(Error::MarginalCase);
        }
        if pivot < 0.0 {
            return Ok(false);
        }
        // rows are kept zero-padded to a fixed width, which encodes the
        // narrowing of the array without index bookkeeping
        let next: Vec<f64> = (0..width)
            .map(|j| {
                let a = prev.get(j + 1).copied().unwrap_or(0.0);
                let b = curr.get(j + 1).copied().unwrap_or(0.0);
                (pivot * a - prev[0] * b) / pivot
            })
            .collect();
        prev = curr;
        curr = next;
    }
    Ok(true)
}

/// Hurwitz stability: `true` iff every root lies strictly in the open
/// left half-plane.
///
/// Uses the Routh array and, when the array is numerically singular,
/// falls back to exact root counting; boundary roots are then not
/// strictly in the open left half-plane, so the verdict is `false`.
pub fn hurwitz_stable(p: &Poly) -> Result<bool> {
    match routh_stable(p) {
        Err(Error::MarginalCase) => {
            let (inside, marginal) = count_roots_in(p, &RegionSpec::half_plane())?;
            Ok(inside == 0 && marginal == 0)
        }
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn first_order() {
        assert_eq!(routh_stable(&Poly::new(vec![1.0, 1.0])), Ok(true)); // z + 1
        assert_eq!(routh_stable(&Poly::new(vec![-1.0, 1.0])), Ok(false)); // z - 1
    }

    #[test]
    fn classic_third_order() {
        // z^3 + 2 z^2 + 3 z + 1: Routh column 1, 2, (6-1)/2, 1 — stable
        assert_eq!(routh_stable(&Poly::new(vec![1.0, 3.0, 2.0, 1.0])), Ok(true));
        // z^3 + z + 1 has a missing z^2 coefficient: pivot is zero
        assert_eq!(
            routh_stable(&Poly::new(vec![1.0, 1.0, 0.0, 1.0])),
            Err(Error::MarginalCase)
        );
    }

    #[test]
    fn boundary_roots_are_marginal_for_the_array() {
        // (z + 1)(z^2 + 1): the array hits a zero pivot
        assert_eq!(
            routh_stable(&Poly::new(vec![1.0, 1.0, 1.0, 1.0])),
            Err(Error::MarginalCase)
        );
    }

    #[test]
    fn fallback_decides_boundary_case() {
        // the open-region convention counts boundary roots as unstable
        assert_eq!(hurwitz_stable(&Poly::new(vec![1.0, 1.0, 1.0, 1.0])), Ok(false));
    }

    #[test]
    fn hurwitz_examples() {
        assert_eq!(hurwitz_stable(&Poly::new(vec![1.0, 1.0])), Ok(true));
        assert_eq!(hurwitz_stable(&Poly::new(vec![-1.0, 1.0])), Ok(false));
        // negative leading coefficient: -(z + 2)(z + 3)
        let p = Poly::from_real_roots(&[-2.0, -3.0]).scaled(-1.0);
        assert_eq!(hurwitz_stable(&p), Ok(true));
        // constants have no roots
        assert_eq!(hurwitz_stable(&Poly::constant(5.0)), Ok(true));
    }

    #[test]
    fn unstable_despite_late_singular_pivot() {
        // (z - 1)(z^2 + 1)(z + 2): sign change appears before any
        // singular pivot, so the verdict is definitive
        let p = {
            let a = Poly::new(vec![1.0, 0.0, 1.0]);
            let b = Poly::from_real_roots(&[1.0, -2.0]);
            &a * &b
        };
        assert_eq!(routh_stable(&p), Ok(false));
    }

    #[test]
    fn zero_poly_rejected() {
        assert_eq!(routh_stable(&Poly::zero()), Err(Error::ZeroPolynomial));
    }
}
