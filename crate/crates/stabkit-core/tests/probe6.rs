//! Throwaway constructive probe: build Patel controllers from Pade
//! approximants of the modular lambda function in the nome coordinate.
//! lambda(q) = 16q - 128q^2 + ... omits 0 and 1 on the punctured disc
//! and has lambda'(0) = 16, so g(z) = lambda_[m/n](r z) with r = 1/(16a)
//! satisfies g(0) = 0, g'(0) = 1/a, and inherits the omission pattern
//! wherever the approximant's zeros, ones, and poles stay outside
//! radius r. The controller is then c = (D - a*N/z)/(z*D).

use stabkit_core::polyalg::{poly_roots, Poly, RegionSpec};
use stabkit_core::ratfunc::RatFunc;
use stabkit_core::search::{certify, CertifyOutcome, SearchSpec};

fn rf(num: &[f64], den: &[f64]) -> RatFunc {
    RatFunc::new(Poly::new(num.to_vec()), Poly::new(den.to_vec())).unwrap()
}

fn patel_plants(a: f64) -> Vec<RatFunc> {
    vec![
        rf(&[0.0, 1.0], &[1.0]),
        rf(&[0.0, 0.0, 1.0], &[-a, 1.0]),
        RatFunc::zero(),
    ]
}

/// Taylor coefficients of lambda(q) up to order `k` from the product
/// lambda = 16 q * prod_{j>=1} ((1+q^{2j})/(1+q^{2j-1}))^8.
fn lambda_series(k: usize) -> Vec<f64> {
    let mul = |p: &[f64], q: &[f64]| -> Vec<f64> {
        let mut out = vec![0.0; k + 1];
        for (i, &x) in p.iter().enumerate() {
            if x == 0.0 {
                continue;
            }
            for (j, &y) in q.iter().enumerate() {
                if i + j <= k {
                    out[i + j] += x * y;
                }
            }
        }
        out
    };
    // series inverse of (1 + q^d) is sum_i (-1)^i q^{d i}
    let inv_one_plus = |d: usize| -> Vec<f64> {
        let mut out = vec![0.0; k + 1];
        let mut i = 0;
        while d * i <= k {
            out[d * i] = if i % 2 == 0 { 1.0 } else { -1.0 };
            i += 1;
        }
        out
    };
    let one_plus = |d: usize| -> Vec<f64> {
        let mut out = vec![0.0; k + 1];
        out[0] = 1.0;
        if d <= k {
            out[d] = 1.0;
        }
        out
    };
    let mut prod = vec![0.0; k + 1];
    prod[0] = 1.0;
    let mut j = 1;
    while 2 * j - 1 <= k {
        for _ in 0..8 {
            prod = mul(&prod, &one_plus(2 * j));
            prod = mul(&prod, &inv_one_plus(2 * j - 1));
        }
        j += 1;
    }
    let mut out = vec![0.0; k + 1];
    for i in 0..k {
        out[i + 1] = 16.0 * prod[i];
    }
    out
}

/// Dense Gaussian elimination with partial pivoting.
fn solve(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let n = b.len();
    for col in 0..n {
        let mut piv = col;
        for row in col + 1..n {
            if a[row][col].abs() > a[piv][col].abs() {
                piv = row;
            }
        }
        if a[piv][col].abs() < 1e-300 {
            return None;
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for row in col + 1..n {
            let f = a[row][col] / a[col][col];
            if f == 0.0 {
                continue;
            }
            for k in col..n {
                a[row][k] -= f * a[col][k];
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for col in (0..n).rev() {
        let mut s = b[col];
        for k in col + 1..n {
            s -= a[col][k] * x[k];
        }
        x[col] = s / a[col][col];
    }
    Some(x)
}

/// [m/n] Pade approximant of a series: returns (num, den) ascending,
/// den normalized to constant term 1.
fn pade(c: &[f64], m: usize, n: usize) -> Option<(Vec<f64>, Vec<f64>)> {
    if c.len() < m + n + 1 {
        return None;
    }
    // unknowns d_1..d_n: sum_{j=0..n} d_j c_{k-j} = 0 for k = m+1..m+n
    let mut mat = vec![vec![0.0; n]; n];
    let mut rhs = vec![0.0; n];
    for (row, k) in (m + 1..=m + n).enumerate() {
        for j in 1..=n {
            mat[row][j - 1] = if k >= j { c[k - j] } else { 0.0 };
        }
        rhs[row] = -c[k];
    }
    let d_tail = solve(mat, rhs)?;
    let mut den = vec![1.0];
    den.extend_from_slice(&d_tail);
    let mut num = vec![0.0; m + 1];
    for k in 0..=m {
        let mut s = 0.0;
        for j in 0..=k.min(n) {
            s += den[j] * c[k - j];
        }
        num[k] = s;
    }
    Some((num, den))
}

fn min_root_modulus(p: &[f64], skip_origin: bool) -> f64 {
    let poly = Poly::new(p.to_vec());
    match poly.degree() {
        None | Some(0) => f64::INFINITY,
        _ => match poly_roots(&poly) {
            Ok(rs) => rs
                .roots
                .iter()
                .filter(|(z, _)| !(skip_origin && z.norm() < 1e-9))
                .map(|(z, _)| z.norm())
                .fold(f64::INFINITY, f64::min),
            Err(_) => 0.0,
        },
    }
}

/// Smallest modulus among zeros (excluding the forced one at the
/// origin), one-points, and poles of the [m/n] approximant: the radius
/// up to which the omission pattern survives.
fn clean_radius(num: &[f64], den: &[f64]) -> f64 {
    let zeros = min_root_modulus(num, true);
    let poles = min_root_modulus(den, false);
    let nm1: Vec<f64> = (0..num.len().max(den.len()))
        .map(|i| num.get(i).copied().unwrap_or(0.0) - den.get(i).copied().unwrap_or(0.0))
        .collect();
    let ones = min_root_modulus(&nm1, false);
    zeros.min(poles).min(ones)
}

/// Controller coefficients for the Patel triple from the rescaled
/// approximant: c = (D_g - a * N_g/z)/(z * D_g) with N_g trimmed of its
/// zero constant term, and the resulting numerator's vanishing constant
/// term dropped exactly.
fn controller_coeffs(a: f64, r: f64, num: &[f64], den: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let scale = |p: &[f64]| -> Vec<f64> {
        let mut rp = 1.0;
        p.iter()
            .map(|&co| {
                let v = co * rp;
                rp *= r;
                v
            })
            .collect()
    };
    let ng = scale(num);
    let dg = scale(den);
    let len = dg.len().max(ng.len().saturating_sub(1));
    let mut t = vec![0.0; len];
    for (i, v) in t.iter_mut().enumerate() {
        let d = dg.get(i).copied().unwrap_or(0.0);
        let n1 = ng.get(i + 1).copied().unwrap_or(0.0);
        *v = d - a * n1;
    }
    let p: Vec<f64> = t[1..].to_vec();
    (p, dg)
}

fn certify_controller(a: f64, p: &[f64], d: &[f64]) -> Result<f64, String> {
    let c = RatFunc::new(Poly::new(p.to_vec()), Poly::new(d.to_vec()))
        .map_err(|e| format!("ratfunc: {e}"))?;
    let nd = p.len().saturating_sub(1);
    let dd = d.len().saturating_sub(1);
    let spec = SearchSpec {
        plants: patel_plants(a),
        region: RegionSpec::disc(),
        controller_degree: (nd, dd),
        require_stable_controller: false,
        require_bistable_controller: false,
        budget: 1,
        seed: 0,
    };
    match certify(&c, &spec) {
        Ok(CertifyOutcome::Certified(cert)) => Ok(cert.margin),
        Ok(CertifyOutcome::Rejected(rej)) => {
            Err(format!("plant={:?} {}", rej.plant_index, rej.reason))
        }
        Err(e) => Err(format!("error: {e}")),
    }
}

#[test]
#[ignore]
fn probe_pade() {
    use std::io::Write as _;
    let mut log = std::fs::File::create("/root/notes/pade.log").unwrap();
    let series = lambda_series(40);
    writeln!(log, "lambda series head: {:?}", &series[..10.min(series.len())]).unwrap();
    for n in 2..=8usize {
        for m in [n.saturating_sub(1), n, n + 1] {
            let Some((num, den)) = pade(&series, m, n) else {
                continue;
            };
            let rstar = clean_radius(&num, &den);
            writeln!(log, "[{m}/{n}] clean radius r*={rstar:.6} (1/(16a): a>{:.6})", 1.0 / (16.0 * rstar)).unwrap();
            for a in [0.5, 0.2, 0.1, 0.07] {
                let r = 1.0 / (16.0 * a);
                if r >= rstar {
                    continue;
                }
                let (p, d) = controller_coeffs(a, r, &num, &den);
                match certify_controller(a, &p, &d) {
                    Ok(mg) => {
                        writeln!(
                            log,
                            "  a={a} CERT margin={mg:.4e} deg=({},{})\n    p={p:?}\n    d={d:?}",
                            p.len() - 1,
                            d.len() - 1
                        )
                        .unwrap();
                    }
                    Err(why) => {
                        writeln!(log, "  a={a} REJ {why}").unwrap();
                    }
                }
            }
        }
        log.flush().unwrap();
    }
}
