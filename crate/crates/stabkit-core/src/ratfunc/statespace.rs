//! State-space realizations: the controllable canonical form, the exact
//! resolvent-based transfer function, and discrete-time simulation.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::polyalg::Poly;

use super::RatFunc;

/// A single-input single-output state-space system
/// `x(n+1) = A x(n) + B u(n)`, `y(n) = C x(n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct StateSpace {
    a: Vec<Vec<f64>>,
    b: Vec<f64>,
    c: Vec<f64>,
}

impl StateSpace {
    /// Validates dimensions: `a` square of size `n >= 1`, `b` and `c` of
    /// length `n`.
    pub fn new(a: Vec<Vec<f64>>, b: Vec<f64>, c: Vec<f64>) -> Result<Self> {
        let n = a.len();
        if n == 0 || b.len() != n || c.len() != n || a.iter().any(|row| row.len() != n) {
            return Err(Error::DimensionMismatch);
        }
        Ok(StateSpace { a, b, c })
    }

    pub fn dim(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self) -> &[Vec<f64>] {
        &self.a
    }

    pub fn b(&self) -> &[f64] {
        &self.b
    }

    pub fn c(&self) -> &[f64] {
        &self.c
    }
}

/// Controllable canonical realization of a proper rational function; the
/// state dimension equals the denominator degree (1 for the zero
/// function, realized with zero gains).
pub fn realize(p: &RatFunc) -> Result<StateSpace> {
    if !p.is_proper() {
        return Err(Error::NotProper);
    }
    if p.is_zero() {
        return StateSpace::new(vec![vec![0.0]], vec![0.0], vec![0.0]);
    }
    let n = p.den().degree().expect("nonzero denominator");
    let den = p.den().coeffs();
    let mut a = vec![vec![0.0; n]; n];
    for (i, row) in a.iter_mut().enumerate().take(n - 1) {
        row[i + 1] = 1.0;
    }
    for j in 0..n {
        a[n - 1][j] = -den[j];
    }
    let mut b = vec![0.0; n];
    b[n - 1] = 1.0;
    let mut c = vec![0.0; n];
    for (j, &v) in p.num().coeffs().iter().enumerate() {
        c[j] = v;
    }
    StateSpace::new(a, b, c)
}

/// The transfer function `C (zI - A)^-1 B`, computed by the
/// Leverrier-Faddeev recursion: the characteristic polynomial and the
/// adjugate expansion in one sweep, then canonicalized. Always proper.
pub fn transfer_function(s: &StateSpace) -> RatFunc {
    let n = s.dim();
    let mut mk = identity(n); // M_0
    let mut char_desc = vec![1.0]; // characteristic coefficients, descending
    let mut num_desc = Vec::with_capacity(n); // C M_k B, descending powers

    for k in 1..=n {
        num_desc.push(bilinear(&s.c, &mk, &s.b));
        let am = mat_mul(&s.a, &mk);
        let ck = -trace(&am) / k as f64;
        char_desc.push(ck);
        mk = mat_add_scaled_identity(&am, ck);
    }

    let num: Vec<f64> = num_desc.into_iter().rev().collect();
    let den: Vec<f64> = char_desc.into_iter().rev().collect();
    RatFunc::new(Poly::new(num), Poly::new(den))
        .expect("characteristic polynomial is monic, hence nonzero")
}

/// Runs the exact recurrence `x(n+1) = A x(n) + B u(n)` from the initial
/// state `x0` and returns `y(n) = C x(n)` for `n = 0..=len(u)`.
pub fn simulate_discrete(s: &StateSpace, u: &[f64], x0: &[f64]) -> Result<Vec<f64>> {
    let n = s.dim();
    if x0.len() != n || u.is_empty() {
        return Err(Error::DimensionMismatch);
    }
    let mut x = x0.to_vec();
    let mut y = Vec::with_capacity(u.len() + 1);
    y.push(dot(&s.c, &x));
    for &uk in u {
        let mut next = vec![0.0; n];
        for i in 0..n {
            let mut acc = 0.0;
            for j in 0..n {
                acc += s.a[i][j] * x[j];
            }
            next[i] = acc + s.b[i] * uk;
        }
        x = next;
        y.push(dot(&s.c, &x));
    }
    Ok(y)
}

fn identity(n: usize) -> Vec<Vec<f64>> {
    let mut m = vec![vec![0.0; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    m
}

fn mat_mul(a: &[Vec<f64>], b: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = a.len();
    let mut out = vec![vec![0.0; n]; n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i][k];
            if aik == 0.0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

fn mat_add_scaled_identity(m: &[Vec<f64>], c: f64) -> Vec<Vec<f64>> {
    let mut out = m.to_vec();
    for (i, row) in out.iter_mut().enumerate() {
        row[i] += c;
    }
    out
}

fn trace(m: &[Vec<f64>]) -> f64 {
    m.iter().enumerate().map(|(i, row)| row[i]).sum()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn bilinear(c: &[f64], m: &[Vec<f64>], b: &[f64]) -> f64 {
    let n = b.len();
    let mut acc = 0.0;
    for i in 0..n {
        let mut mb = 0.0;
        for j in 0..n {
            mb += m[i][j] * b[j];
        }
        acc += c[i] * mb;
    }
    acc
}
