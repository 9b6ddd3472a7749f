//! Transport between the open unit disc and the open right half-plane,
//! and the `z -> 1/z` substitution.
//!
//! Both transports precompose with the self-inverse Mobius map
//! `w(z) = (1 - z)/(1 + z)`, which maps the disc onto the half-plane and
//! back; using one self-inverse map avoids carrying an inverse-map pair
//! with separate sign conventions.

use alloc::vec::Vec;

use crate::polyalg::Poly;

use super::RatFunc;

/// Transports a function on the half-plane to one on the disc: returns
/// `f(w(z))`, with poles in the half-plane corresponding bijectively
/// (with multiplicity) to poles of the result in the disc.
pub fn mobius_to_disc(f: &RatFunc) -> RatFunc {
    precompose_unit_mobius(f)
}

/// Transports a function on the disc to one on the half-plane; inverse of
/// [`mobius_to_disc`] because `w` is self-inverse.
pub fn mobius_to_halfplane(f: &RatFunc) -> RatFunc {
    precompose_unit_mobius(f)
}

fn precompose_unit_mobius(f: &RatFunc) -> RatFunc {
    let m = f.degree();
    // f(w(z)) with both parts multiplied by (1 + z)^m:
    // sum_k c_k (1 - z)^k (1 + z)^(m - k)
    let one_minus = Poly::new([1.0, -1.0].to_vec());
    let one_plus = Poly::new([1.0, 1.0].to_vec());
    let basis: Vec<Poly> = (0..=m)
        .map(|k| &poly_pow(&one_minus, k) * &poly_pow(&one_plus, m - k))
        .collect();
    let expand = |coeffs: &[f64]| {
        let mut acc = Poly::zero();
        for (k, &c) in coeffs.iter().enumerate() {
            if c != 0.0 {
                acc = &acc + &basis[k].scaled(c);
            }
        }
        acc
    };
    let num = expand(f.num().coeffs());
    let den = expand(f.den().coeffs());
    RatFunc::new(num, den).expect("denominator composed with a Mobius map stays nonzero")
}

/// Substitutes `z -> 1/z` and canonicalizes: converts between the two
/// discrete-time transfer-function conventions.
pub fn substitute_inverse(f: &RatFunc) -> RatFunc {
    let m = f.degree();
    let reversed = |coeffs: &[f64]| {
        let mut padded = alloc::vec![0.0; m + 1];
        padded[..coeffs.len()].copy_from_slice(coeffs);
        padded.reverse();
        Poly::new(padded)
    };
    RatFunc::new(reversed(f.num().coeffs()), reversed(f.den().coeffs()))
        .expect("reversal of a nonzero polynomial is nonzero")
}

fn poly_pow(base: &Poly, k: usize) -> Poly {
    let mut acc = Poly::one();
    for _ in 0..k {
        acc = &acc * base;
    }
    acc
}
