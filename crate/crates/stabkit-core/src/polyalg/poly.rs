//! Polynomials in ascending-power coefficient form.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::config;
use crate::error::{Error, Result};

/// A real polynomial stored by ascending powers: `coeffs[k]` multiplies
/// `z^k`.
///
/// The representation is kept trimmed: the leading coefficient is nonzero
/// and the zero polynomial is the empty coefficient vector. Trailing
/// coefficients that are negligible relative to the magnitude of the data
/// that produced them are trimmed away, which keeps floating-point
/// cancellation residue from inflating degrees (a spurious `1e-16 z^9`
/// term would otherwise manufacture phantom roots of enormous modulus).
#[derive(Clone, Debug, PartialEq)]
pub struct Poly {
    coeffs: Vec<f64>,
}

impl Poly {
    /// Builds a polynomial from ascending-power coefficients, trimming
    /// trailing coefficients negligible relative to the largest one.
    pub fn new(coeffs: Vec<f64>) -> Self {
        let scale = coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
        Self::with_scale(coeffs, scale)
    }

    /// Like [`Poly::new`] but trims against an externally supplied scale,
    /// used by arithmetic whose operands set the noise floor.
    fn with_scale(mut coeffs: Vec<f64>, scale: f64) -> Self {
        let eps = config::COEFF_TRIM_REL * scale;
        while let Some(&c) = coeffs.last() {
            if c == 0.0 || c.abs() <= eps {
                coeffs.pop();
            } else {
                break;
            }
        }
        Poly { coeffs }
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Poly::constant(1.0)
    }

    /// A constant polynomial.
    pub fn constant(c: f64) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `z - root`.
    pub fn linear(root: f64) -> Self {
        Poly::new(vec![-root, 1.0])
    }

    /// The monic polynomial with the given real roots.
    pub fn from_real_roots(roots: &[f64]) -> Self {
        roots
            .iter()
            .fold(Poly::one(), |acc, &r| &acc * &Poly::linear(r))
    }

    /// Ascending-power coefficients. Empty for the zero polynomial.
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `true` for nonzero constants and the zero polynomial.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Leading coefficient, or `None` for the zero polynomial.
    pub fn leading(&self) -> Option<f64> {
        self.coeffs.last().copied()
    }

    /// Largest coefficient magnitude (0 for the zero polynomial).
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()))
    }

    /// Horner evaluation at a complex point.
    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Horner evaluation at a real point.
    pub fn eval_real(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for &c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let d: Vec<f64> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| k as f64 * c)
            .collect();
        Poly::new(d)
    }

    /// The polynomial scaled by a constant.
    pub fn scaled(&self, k: f64) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Monic rescale; the zero polynomial stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some(l) => self.scaled(1.0 / l),
            None => Poly::zero(),
        }
    }

    /// Euclidean division, returning `(quotient, remainder)` with
    /// `deg remainder < deg divisor`. The divisor must be nonzero.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let d = divisor
            .degree()
            .expect("division by the zero polynomial");
        let lead = divisor.coeffs[d];
        let n = match self.degree() {
            Some(n) if n >= d => n,
            _ => return (Poly::zero(), self.clone()),
        };
        let mut rem = self.coeffs.clone();
        let mut quo = vec![0.0; n - d + 1];
        for k in (0..=n - d).rev() {
            let q = rem[k + d] / lead;
            quo[k] = q;
            for j in 0..=d {
                rem[k + j] -= q * divisor.coeffs[j];
            }
        }
        rem.truncate(d);
        let scale = self.max_abs().max(divisor.max_abs());
        (Poly::new(quo), Poly::with_scale(rem, scale))
    }

    /// Quotient of an (approximately) exact division; the remainder is
    /// discarded. Used to cancel factors found by [`poly_gcd`].
    pub fn div_exact(&self, divisor: &Poly) -> Poly {
        self.div_rem(divisor).0
    }

    /// Strips trailing coefficients with magnitude at most `tol`, then
    /// declares the whole polynomial zero if nothing of size remains.
    fn trim_tail_abs(mut self, tol: f64) -> Poly {
        while let Some(&c) = self.coeffs.last() {
            if c.abs() <= tol {
                self.coeffs.pop();
            } else {
                break;
            }
        }
        self
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let scale = self.max_abs().max(rhs.max_abs());
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![0.0; n];
        for (k, slot) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(k).copied().unwrap_or(0.0);
            let b = rhs.coeffs.get(k).copied().unwrap_or(0.0);
            *slot = a + b;
        }
        Poly::with_scale(out, scale)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scaled(-1.0)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![0.0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

/// Monic approximate greatest common divisor by the Euclidean algorithm.
///
/// Operands are normalized to unit coefficient magnitude each round and a
/// remainder counts as zero once all its coefficients drop below the
/// relative tolerance. A degree-0 result means the inputs are coprime.
pub fn poly_gcd(a: &Poly, b: &Poly) -> Result<Poly> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if a.is_zero() {
        return Ok(b.monic());
    }
    if b.is_zero() {
        return Ok(a.monic());
    }
    let mut x = a.scaled(1.0 / a.max_abs());
    let mut y = b.scaled(1.0 / b.max_abs());
    if x.degree() < y.degree() {
        core::mem::swap(&mut x, &mut y);
    }
    while !y.is_zero() {
        let (_, r) = x.div_rem(&y);
        let r = r.trim_tail_abs(config::GCD_REL);
        let r = if r.max_abs() <= config::GCD_REL {
            Poly::zero()
        } else {
            r.scaled(1.0 / r.max_abs())
        };
        x = y;
        y = r;
    }
    Ok(x.monic())
}
