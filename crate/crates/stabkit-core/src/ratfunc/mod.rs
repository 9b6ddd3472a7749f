//! Real rational functions on the Riemann sphere: canonical coprime form,
//! sphere-valued evaluation, divisor extraction over a region, the
//! disc/half-plane transport, state-space realizations, and discrete-time
//! simulation.

mod mobius;
mod statespace;

pub use mobius::{mobius_to_disc, mobius_to_halfplane, substitute_inverse};
pub use statespace::{realize, simulate_discrete, transfer_function, StateSpace};

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::config;
use crate::error::{Error, Result};
use crate::polyalg::{poly_gcd, poly_roots, PointClass, Poly, RegionSpec};

/// A value on the Riemann sphere.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SphereValue {
    Finite(Complex64),
    Infinity,
}

impl SphereValue {
    pub fn is_infinity(&self) -> bool {
        matches!(self, SphereValue::Infinity)
    }

    pub fn as_finite(&self) -> Option<Complex64> {
        match self {
            SphereValue::Finite(v) => Some(*v),
            SphereValue::Infinity => None,
        }
    }
}

/// A finite multiset of points with positive multiplicities, sorted by
/// `(re, im)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Divisor {
    pub entries: Vec<(Complex64, usize)>,
}

impl Divisor {
    pub fn empty() -> Self {
        Divisor {
            entries: Vec::new(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total_multiplicity(&self) -> usize {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    /// Multiplicity of the entry within `tol` of `z`, or zero.
    pub fn multiplicity_at(&self, z: Complex64, tol: f64) -> usize {
        self.entries
            .iter()
            .find(|(w, _)| (*w - z).norm() <= tol)
            .map_or(0, |&(_, m)| m)
    }

    /// Equality as multisets: same number of entries, and a bijection
    /// matching points within `tol` with identical multiplicities.
    pub fn approx_eq(&self, other: &Divisor, tol: f64) -> bool {
        if self.entries.len() != other.entries.len() {
            return false;
        }
        let mut used = vec![false; other.entries.len()];
        'outer: for &(z, m) in &self.entries {
            for (j, &(w, wm)) in other.entries.iter().enumerate() {
                if !used[j] && wm == m && (z - w).norm() <= tol {
                    used[j] = true;
                    continue 'outer;
                }
            }
            return false;
        }
        true
    }

    /// Copy with every entry within `tol` of a point of `pts` removed.
    pub fn without_points(&self, pts: &[Complex64], tol: f64) -> Divisor {
        Divisor {
            entries: self
                .entries
                .iter()
                .copied()
                .filter(|(z, _)| pts.iter().all(|p| (*z - *p).norm() > tol))
                .collect(),
        }
    }

    /// Inserts a point, merging with an existing entry within `tol` by
    /// keeping the larger multiplicity.
    pub fn push_merged(&mut self, z: Complex64, m: usize, tol: f64) {
        for e in &mut self.entries {
            if (e.0 - z).norm() <= tol {
                e.1 = e.1.max(m);
                return;
            }
        }
        self.entries.push((z, m));
        self.entries
            .sort_by(|a, b| a.0.re.total_cmp(&b.0.re).then(a.0.im.total_cmp(&b.0.im)));
    }
}

/// How divisor extraction treats roots that fall inside the boundary band.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MarginalPolicy {
    /// Raise [`Error::MarginalRoot`].
    Reject,
    /// Omit them: they are not strictly interior, and the caller accepts
    /// the boundary band as excluded territory.
    Drop,
}

/// Divisor of the roots of `p` strictly inside `r`.
pub fn poly_divisor_in(p: &Poly, r: &RegionSpec, policy: MarginalPolicy) -> Result<Divisor> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let Some(deg) = p.degree() else {
        return Err(Error::ZeroPolynomial);
    };
    if deg == 0 {
        return Ok(Divisor::empty());
    }
    let set = poly_roots(p)?;
    let mut entries = Vec::new();
    for &(z, m) in &set.roots {
        match r.classify(z) {
            PointClass::Interior => entries.push((z, m)),
            PointClass::Marginal => match policy {
                MarginalPolicy::Reject => return Err(Error::MarginalRoot),
                MarginalPolicy::Drop => {}
            },
            PointClass::Exterior => {}
        }
    }
    Ok(Divisor { entries })
}

/// Splits the roots of `p` into `(interior, marginal)` divisors relative
/// to `r`; exterior roots are discarded.
pub fn poly_divisor_split(p: &Poly, r: &RegionSpec) -> Result<(Divisor, Divisor)> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree() == Some(0) {
        return Ok((Divisor::empty(), Divisor::empty()));
    }
    let set = poly_roots(p)?;
    let mut interior = Vec::new();
    let mut marginal = Vec::new();
    for &(z, m) in &set.roots {
        match r.classify(z) {
            PointClass::Interior => interior.push((z, m)),
            PointClass::Marginal => marginal.push((z, m)),
            PointClass::Exterior => {}
        }
    }
    Ok((Divisor { entries: interior }, Divisor { entries: marginal }))
}

/// A real rational function in canonical form: numerator and denominator
/// coprime, denominator monic. The identically-zero function is `0/1`;
/// the identically-infinite function cannot be represented.
#[derive(Clone, Debug, PartialEq)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Builds the canonical form: cancels common factors and rescales the
    /// denominator monic.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFunc {
                num: Poly::zero(),
                den: Poly::one(),
            });
        }
        let g = poly_gcd(&num, &den)?;
        let (n, d) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_exact(&g), den.div_exact(&g))
        };
        let lead = d.leading().expect("nonzero denominator has a leading coefficient");
        Ok(RatFunc {
            num: n.scaled(1.0 / lead),
            den: d.scaled(1.0 / lead),
        })
    }

    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    pub fn constant(v: f64) -> Self {
        RatFunc {
            num: Poly::constant(v),
            den: Poly::one(),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    /// The function `f(z) = z`.
    pub fn identity() -> Self {
        RatFunc {
            num: Poly::new(vec![0.0, 1.0]),
            den: Poly::one(),
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// Degree as a map of the sphere: max of numerator and denominator
    /// degrees (0 for the zero function).
    pub fn degree(&self) -> usize {
        self.num
            .degree()
            .unwrap_or(0)
            .max(self.den.degree().unwrap_or(0))
    }

    /// True iff the function vanishes at infinity (numerator degree
    /// strictly below denominator degree).
    pub fn is_proper(&self) -> bool {
        match self.num.degree() {
            None => true,
            Some(nd) => nd < self.den.degree().unwrap_or(0),
        }
    }

    /// Evaluation on the Riemann sphere. Returns `Infinity` exactly when
    /// the denominator vanishes at `z` within a relative tolerance; the
    /// canonical coprime form excludes 0/0.
    pub fn eval_sphere(&self, z: Complex64) -> SphereValue {
        let dv = self.den.eval_complex(z);
        let ds = eval_scale(&self.den, z);
        if dv.norm() <= config::EVAL_ZERO_REL * ds {
            SphereValue::Infinity
        } else {
            SphereValue::Finite(self.num.eval_complex(z) / dv)
        }
    }

    /// Value at the point at infinity, by degree comparison.
    pub fn eval_at_infinity(&self) -> SphereValue {
        let Some(nd) = self.num.degree() else {
            return SphereValue::Finite(Complex64::new(0.0, 0.0));
        };
        let dd = self.den.degree().unwrap_or(0);
        if nd > dd {
            SphereValue::Infinity
        } else if nd < dd {
            SphereValue::Finite(Complex64::new(0.0, 0.0))
        } else {
            let ratio = self.num.leading().unwrap_or(0.0) / self.den.leading().unwrap_or(1.0);
            SphereValue::Finite(Complex64::new(ratio, 0.0))
        }
    }

    /// Divisor of zeros strictly inside `r`; marginal zeros are an error.
    pub fn zeros_in(&self, r: &RegionSpec) -> Result<Divisor> {
        self.zeros_in_with(r, MarginalPolicy::Reject)
    }

    /// Divisor of poles strictly inside `r`; marginal poles are an error.
    pub fn poles_in(&self, r: &RegionSpec) -> Result<Divisor> {
        self.poles_in_with(r, MarginalPolicy::Reject)
    }

    pub fn zeros_in_with(&self, r: &RegionSpec, policy: MarginalPolicy) -> Result<Divisor> {
        poly_divisor_in(&self.num, r, policy)
    }

    pub fn poles_in_with(&self, r: &RegionSpec, policy: MarginalPolicy) -> Result<Divisor> {
        poly_divisor_in(&self.den, r, policy)
    }

    /// Quotient; the divisor must not be the zero function.
    pub fn div(&self, rhs: &RatFunc) -> Result<RatFunc> {
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    /// Reciprocal; the function must not be identically zero.
    pub fn recip(&self) -> Result<RatFunc> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn derivative(&self) -> RatFunc {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let den = &self.den * &self.den;
        RatFunc::new(num, den).expect("square of a nonzero denominator is nonzero")
    }

    /// True iff `other` is the same rational function up to coefficient
    /// noise, judged on the canonical representations.
    pub fn approx_same(&self, other: &RatFunc) -> bool {
        poly_approx_eq(&self.num, &other.num) && poly_approx_eq(&self.den, &other.den)
    }
}

fn poly_approx_eq(a: &Poly, b: &Poly) -> bool {
    let diff = a - b;
    let scale = 1.0 + a.max_abs().max(b.max_abs());
    diff.max_abs() <= config::FUNC_IDENTITY_REL * scale
}

fn eval_scale(p: &Poly, z: Complex64) -> f64 {
    let r = z.norm();
    let mut s = 0.0;
    let mut pw = 1.0;
    for &c in p.coeffs() {
        s += c.abs() * pw;
        pw *= r;
    }
    s
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        let num = &(self.num() * rhs.den()) + &(rhs.num() * self.den());
        let den = self.den() * rhs.den();
        RatFunc::new(num, den).expect("product of nonzero denominators is nonzero")
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        let num = &(self.num() * rhs.den()) - &(rhs.num() * self.den());
        let den = self.den() * rhs.den();
        RatFunc::new(num, den).expect("product of nonzero denominators is nonzero")
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(self.num() * rhs.num(), self.den() * rhs.den())
            .expect("product of nonzero denominators is nonzero")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: self.num.scaled(-1.0),
            den: self.den.clone(),
        }
    }
}
