//! THROWAWAY existence probe: direct controller-coefficient search at low
//! degrees for the Patel family, to map which (num_deg, den_deg) admit
//! certifiable controllers at a = 0.1 and a = 0.07.

use std::fs::OpenOptions;
use std::io::Write as IoWrite;

use num_complex::Complex64;
use stabkit_core::polyalg::{poly_roots, Poly, RegionSpec};
use stabkit_core::ratfunc::RatFunc;
use stabkit_core::search::{certify, CertifyOutcome, SearchSpec};

const SAFETY: f64 = 1e-2;
const GRID: usize = 180;

fn patel_plants(a: f64) -> Vec<RatFunc> {
    let p1 = RatFunc::new(Poly::new(vec![0.0, 1.0]), Poly::one()).unwrap();
    let p2 = RatFunc::new(Poly::new(vec![0.0, 0.0, 1.0]), Poly::new(vec![-a, 1.0])).unwrap();
    vec![p1, p2, RatFunc::zero()]
}

struct Lcg(u64);
impl Lcg {
    fn next_f(&mut self) -> f64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (self.0 >> 11) as f64 / (1u64 << 53) as f64
    }
    fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f()
    }
}

fn conv(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn score(x: &[f64], nd: usize, dd: usize, plants: &[(Vec<f64>, Vec<f64>)]) -> f64 {
    let nc = &x[..=nd];
    let dc = &x[nd + 1..];
    if dc.iter().all(|v| v.abs() < 1e-12) {
        return 1e9;
    }
    let mut violation = 0.0f64;
    let mut margin = f64::INFINITY;
    for (np, dp) in plants {
        // numerator of 1 - c p as a raw product polynomial
        let mut loop_num = conv(dc, dp);
        let sub = conv(nc, np);
        for (i, v) in sub.iter().enumerate() {
            loop_num[i] -= v;
        }
        while loop_num.len() > 1 && loop_num.last().unwrap().abs() < 1e-300 {
            loop_num.pop();
        }
        if loop_num.iter().any(|v| !v.is_finite() || v.abs() > 1e12) {
            return 1e9;
        }
        let p = Poly::new(loop_num);
        if p.degree().is_some() {
            let Ok(rs) = poly_roots(&p) else { return 1e9 };
            for (z, _) in rs.roots {
                let clear = z.norm() - 1.0;
                if clear < SAFETY {
                    violation += (SAFETY - clear) / SAFETY;
                } else {
                    margin = margin.min(clear);
                }
            }
        }
        // boundary grid of |1 - c p|
        for k in 0..GRID {
            let th = core::f64::consts::TAU * k as f64 / GRID as f64;
            let z = Complex64::new(th.cos(), th.sin());
            let ev = |c: &[f64]| -> Complex64 {
                let mut acc = Complex64::new(0.0, 0.0);
                for &co in c.iter().rev() {
                    acc = acc * z + co;
                }
                acc
            };
            let (ncv, dcv, npv, dpv) = (ev(nc), ev(dc), ev(np), ev(dp));
            if dcv.norm() < 1e-14 || dpv.norm() < 1e-14 {
                violation += 1.0;
                continue;
            }
            let m = (Complex64::new(1.0, 0.0) - (ncv / dcv) * (npv / dpv)).norm();
            if m < SAFETY {
                violation += (SAFETY - m) / SAFETY;
            } else {
                margin = margin.min(m);
            }
        }
    }
    if violation > 0.0 {
        violation + 1.0
    } else {
        -margin.min(1.0)
    }
}

fn nm(f: &dyn Fn(&[f64]) -> f64, x0: &[f64], scale: f64, evals: usize) -> (Vec<f64>, f64) {
    let n = x0.len();
    let mut simplex: Vec<Vec<f64>> = Vec::with_capacity(n + 1);
    simplex.push(x0.to_vec());
    for i in 0..n {
        let mut v = x0.to_vec();
        v[i] += scale;
        simplex.push(v);
    }
    let mut fv: Vec<f64> = simplex.iter().map(|v| f(v)).collect();
    let mut used = n + 1;
    let (alpha, gamma, rho, sigma) = (1.0, 2.0, 0.5, 0.5);
    while used < evals {
        let mut idx: Vec<usize> = (0..=n).collect();
        idx.sort_by(|&i, &j| fv[i].partial_cmp(&fv[j]).unwrap());
        let (best, worst, second) = (idx[0], idx[n], idx[n - 1]);
        let mut centroid = vec![0.0; n];
        for &i in idx.iter().take(n) {
            for k in 0..n {
                centroid[k] += simplex[i][k] / n as f64;
            }
        }
        let refl: Vec<f64> = (0..n)
            .map(|k| centroid[k] + alpha * (centroid[k] - simplex[worst][k]))
            .collect();
        let fr = f(&refl);
        used += 1;
        if fr < fv[best] {
            let exp: Vec<f64> = (0..n)
                .map(|k| centroid[k] + gamma * (refl[k] - centroid[k]))
                .collect();
            let fe = f(&exp);
            used += 1;
            if fe < fr {
                simplex[worst] = exp;
                fv[worst] = fe;
            } else {
                simplex[worst] = refl;
                fv[worst] = fr;
            }
        } else if fr < fv[second] {
            simplex[worst] = refl;
            fv[worst] = fr;
        } else {
            let con: Vec<f64> = (0..n)
                .map(|k| centroid[k] + rho * (simplex[worst][k] - centroid[k]))
                .collect();
            let fc = f(&con);
            used += 1;
            if fc < fv[worst] {
                simplex[worst] = con;
                fv[worst] = fc;
            } else {
                for &i in idx.iter().skip(1) {
                    for k in 0..n {
                        simplex[i][k] =
                            simplex[best][k] + sigma * (simplex[i][k] - simplex[best][k]);
                    }
                    fv[i] = f(&simplex[i]);
                }
                used += n;
            }
        }
    }
    let mut bi = 0;
    for i in 1..=n {
        if fv[i] < fv[bi] {
            bi = i;
        }
    }
    (simplex[bi].clone(), fv[bi])
}

#[test]
#[ignore]
fn probe_low_degree_existence() {
    let mut log = OpenOptions::new()
        .create(true)
        .append(true)
        .open("/root/notes/lowdeg.log")
        .unwrap();
    let configs: Vec<(f64, usize, usize)> = vec![
        (0.1, 3, 3),
        (0.1, 4, 4),
        (0.1, 4, 5),
        (0.1, 5, 5),
        (0.1, 5, 6),
        (0.1, 6, 6),
        (0.07, 5, 5),
        (0.07, 5, 6),
        (0.07, 6, 6),
        (0.07, 6, 7),
        (0.07, 7, 7),
    ];
    for (a, nd, dd) in configs {
        let plants = patel_plants(a);
        let raw: Vec<(Vec<f64>, Vec<f64>)> = plants
            .iter()
            .map(|p| (p.num().coeffs().to_vec(), p.den().coeffs().to_vec()))
            .collect();
        let spec = SearchSpec {
            plants: plants.clone(),
            region: RegionSpec::disc(),
            controller_degree: (nd, dd),
            require_stable_controller: false,
            require_bistable_controller: false,
            budget: 200,
            seed: 1,
        };
        let dims = nd + dd + 2;
        let mut rng = Lcg(0x9b0e_5eed ^ ((nd * 31 + dd) as u64) ^ (a.to_bits()));
        let f = |x: &[f64]| score(x, nd, dd, &raw);
        let started = std::time::Instant::now();
        let mut best_cert: Option<(f64, Vec<f64>)> = None;
        let mut best_score = f64::INFINITY;
        let restarts = 300;
        for _ in 0..restarts {
            let x0: Vec<f64> = (0..dims).map(|_| rng.uniform(-1.0, 1.0)).collect();
            let (x1, _) = nm(&f, &x0, 0.5, 2500);
            let (x2, _) = nm(&f, &x1, 0.1, 2500);
            let (x3, s3) = nm(&f, &x2, 0.02, 2500);
            best_score = best_score.min(s3);
            if s3 < 0.0 {
                let c = RatFunc::new(
                    Poly::new(x3[..=nd].to_vec()),
                    Poly::new(x3[nd + 1..].to_vec()),
                )
                .unwrap();
                if let Ok(CertifyOutcome::Certified(cert)) = certify(&c, &spec) {
                    let entry = (cert.margin, x3.clone());
                    if best_cert.as_ref().map_or(true, |(m, _)| entry.0 > *m) {
                        best_cert = Some(entry);
                    }
                }
            }
        }
        match &best_cert {
            Some((m, x)) => writeln!(
                log,
                "a={a} deg=({nd},{dd}) dims={dims}: CERT margin={m:.4e} ({:.0}s)\n  x={x:?}",
                started.elapsed().as_secs_f64()
            )
            .unwrap(),
            None => writeln!(
                log,
                "a={a} deg=({nd},{dd}) dims={dims}: nothing, best score {best_score:.3e} ({:.0}s)",
                started.elapsed().as_secs_f64()
            )
            .unwrap(),
        }
        log.flush().unwrap();
    }
}
