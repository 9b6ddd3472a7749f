//! Throwaway reachability scanner: at the hard Patel parameters, scan
//! the pinned restart mechanism (200-evaluation Nelder-Mead runs from
//! uniform [-3,3] simplices) across many restart indices and seeds to
//! measure how often a restart certifies, which settles what budget the
//! grid test needs.

use stabkit_core::polyalg::{Poly, RegionSpec};
use stabkit_core::ratfunc::RatFunc;
use stabkit_core::search::{prepare, run_restart, SearchSpec};

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

#[test]
#[ignore]
fn probe_reachability() {
    use std::io::Write as _;
    let mut log = std::fs::File::options()
        .create(true)
        .append(true)
        .open("/root/notes/reach.log")
        .unwrap();
    let configs: [(f64, (usize, usize), u64, usize); 4] = [
        (0.1, (7, 8), 42, 3000),
        (0.1, (8, 8), 42, 3000),
        (0.07, (7, 8), 42, 3000),
        (0.07, (8, 8), 42, 3000),
    ];
    for (a, deg, seed, restarts) in configs {
        let spec = SearchSpec {
            plants: patel_plants(a),
            region: RegionSpec::disc(),
            controller_degree: deg,
            require_stable_controller: false,
            require_bistable_controller: false,
            budget: restarts * 200,
            seed,
        };
        let prep = prepare(&spec).unwrap();
        let mut hits = 0usize;
        let mut first: Option<usize> = None;
        let t0 = std::time::Instant::now();
        for i in 0..restarts {
            let out = run_restart(&prep, i);
            if let Some(cert) = out.certificate {
                hits += 1;
                if first.is_none() {
                    first = Some(i);
                    writeln!(
                        log,
                        "a={a} deg={deg:?} seed={seed} FIRST hit at restart {i} margin={:.4e} c={:?}/{:?}",
                        cert.margin,
                        cert.controller.num().coeffs(),
                        cert.controller.den().coeffs()
                    )
                    .unwrap();
                    log.flush().unwrap();
                }
            }
        }
        let dt = t0.elapsed().as_secs_f64();
        writeln!(
            log,
            "a={a} deg={deg:?} seed={seed}: {hits}/{restarts} hits, first={first:?}, {dt:.1}s ({:.1} ms/restart)",
            1e3 * dt / restarts as f64
        )
        .unwrap();
        log.flush().unwrap();
    }
}
