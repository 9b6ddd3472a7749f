//! Randomized search for a single controller that internally stabilizes
//! up to three plants at once, with an exact a-posteriori certificate.
//!
//! The search runs a fixed number of independent Nelder-Mead restarts
//! over the controller's coefficient vector. Every restart draws its
//! starting simplex from its own counter-based random stream keyed by
//! `(seed, restart index)`, so the outcome is reproducible bit for bit
//! and independent of how the restarts are scheduled. A driver that
//! wants to run restarts in parallel calls [`prepare`], maps
//! [`run_restart`] over `0..restarts`, and folds the results through
//! [`conclude`]; the sequential [`search`] entry point does exactly
//! that in a plain loop.
//!
//! A certificate is only ever produced by [`certify`], which re-checks
//! the candidate with the exact internal-stability test and computes a
//! defensible margin; the smooth objective used during the search has
//! no bearing on the claim.

mod neldermead;
mod objective;
mod rng;

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::config;
use crate::error::{Error, Result};
use crate::polyalg::{PointClass, RegionSpec};
use crate::ratfunc::{poly_divisor_split, RatFunc, SphereValue};
use crate::stability::{internal_check, InternalStabReport};

use objective::{controller_from, objective, root_points};
use rng::SplitMix64;

/// Everything the search needs to know about one problem instance.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchSpec {
    /// Plants that the one controller must stabilize simultaneously.
    pub plants: Vec<RatFunc>,
    /// Region whose closure the closed-loop singularities must avoid.
    pub region: RegionSpec,
    /// Degree bounds for the controller as `(numerator, denominator)`;
    /// the search explores exactly these degrees, with trailing
    /// coefficients free to vanish.
    pub controller_degree: (usize, usize),
    /// Require the controller itself to have no poles in the region.
    pub require_stable_controller: bool,
    /// Require the controller to have neither zeros nor poles in the
    /// region.
    pub require_bistable_controller: bool,
    /// Total objective-evaluation budget across all restarts.
    pub budget: usize,
    /// Seed for the deterministic restart streams.
    pub seed: u64,
}

impl SearchSpec {
    /// Checks the structural limits: one to three plants, controller
    /// degrees at most 8 on each side, and a positive budget.
    pub fn validate(&self) -> Result<()> {
        if self.plants.is_empty() || self.plants.len() > 3 {
            return Err(Error::InvalidSearchSpec(
                "between one and three plants are supported",
            ));
        }
        if self.controller_degree.0 > 8 || self.controller_degree.1 > 8 {
            return Err(Error::InvalidSearchSpec(
                "controller degrees are limited to 8",
            ));
        }
        if self.budget == 0 {
            return Err(Error::InvalidSearchSpec("budget must be positive"));
        }
        Ok(())
    }
}

/// A successful outcome: the controller, the exact per-plant reports
/// that vouch for it, and a conservative distance-to-failure margin.
#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub controller: RatFunc,
    pub per_plant: Vec<InternalStabReport>,
    pub margin: f64,
}

/// Why certification turned a candidate down.
#[derive(Debug, Clone, PartialEq)]
pub struct Rejection {
    /// Index of the offending plant, when the failure is tied to one.
    pub plant_index: Option<usize>,
    pub reason: &'static str,
    /// The failing internal-stability report, when one was produced.
    pub report: Option<InternalStabReport>,
}

/// Result of certifying one candidate controller.
#[derive(Debug, Clone, PartialEq)]
pub enum CertifyOutcome {
    Certified(Certificate),
    Rejected(Rejection),
}

/// Final verdict of a search run.
#[derive(Debug, Clone, PartialEq)]
pub enum SearchOutcome {
    Certified(Certificate),
    NotFound,
}

/// Bookkeeping for a finished search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchStats {
    pub restarts: usize,
    pub evaluations: usize,
    /// Index of the restart whose candidate was certified, if any.
    pub certified_restart: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchReport {
    pub outcome: SearchOutcome,
    pub stats: SearchStats,
}

/// Output of one restart: a certified candidate if the restart found
/// one, plus the number of objective evaluations it spent.
#[derive(Debug, Clone, PartialEq)]
pub struct RestartResult {
    pub certificate: Option<Certificate>,
    pub evaluations: usize,
}

pub(crate) struct PlantData {
    plant: RatFunc,
    zeros: Vec<Complex64>,
    poles: Vec<Complex64>,
    grid_values: Vec<Option<Complex64>>,
    is_zero: bool,
}

/// Precomputed problem context shared by all restarts.
pub struct Prepared {
    spec: SearchSpec,
    plants: Vec<PlantData>,
    grid: Vec<Complex64>,
    restarts: usize,
}

impl Prepared {
    /// Number of restarts the budget pays for.
    pub fn restarts(&self) -> usize {
        self.restarts
    }
}

/// Number of restarts a given evaluation budget is split into.
pub fn restarts_for_budget(budget: usize) -> usize {
    (budget / config::EVALS_PER_RESTART).max(1)
}

/// Validates the spec and precomputes per-plant data (root lists and
/// boundary samples) used by every restart's objective.
pub fn prepare(spec: &SearchSpec) -> Result<Prepared> {
    spec.validate()?;
    let grid = spec.region.boundary_grid(config::OBJECTIVE_GRID);
    let mut plants = Vec::with_capacity(spec.plants.len());
    for p in &spec.plants {
        let grid_values = grid
            .iter()
            .map(|&w| match p.eval_sphere(w) {
                SphereValue::Finite(v) => Some(v),
                SphereValue::Infinity => None,
            })
            .collect();
        plants.push(PlantData {
            zeros: root_points(p.num())?,
            poles: root_points(p.den())?,
            grid_values,
            is_zero: p.is_zero(),
            plant: p.clone(),
        });
    }
    Ok(Prepared {
        spec: spec.clone(),
        plants,
        grid,
        restarts: restarts_for_budget(spec.budget),
    })
}

/// Degree of the loop polynomial `dc dp - nc np` computed with raw
/// convolutions, with no small-coefficient trimming anywhere. Polynomial
/// arithmetic elsewhere drops coefficients that are tiny relative to the
/// largest one; on wildly scaled controllers that can erase the leading
/// term and with it a genuine far-out root, so the certifier compares
/// this raw degree against the trimmed one and refuses candidates where
/// the two disagree.
fn raw_loop_degree(c: &RatFunc, p: &RatFunc) -> Option<usize> {
    fn conv(a: &[f64], b: &[f64]) -> Vec<f64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = alloc::vec![0.0; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }
    let dd = conv(c.den().coeffs(), p.den().coeffs());
    let nn = conv(c.num().coeffs(), p.num().coeffs());
    let mut degree = None;
    for k in 0..dd.len().max(nn.len()) {
        let a = dd.get(k).copied().unwrap_or(0.0);
        let b = nn.get(k).copied().unwrap_or(0.0);
        if a - b != 0.0 {
            degree = Some(k);
        }
    }
    degree
}

/// Exactly checks one candidate controller against the spec and, on
/// success, measures how far the closed loops stay from failure.
///
/// The margin is the smallest of: the distance from any closed-loop
/// zero to the region's closure, the separation of every
/// cancellation-prone zero/pole pair (their mutual distance or either
/// point's distance to the closure, whichever is largest), and the
/// minimum of `|1 - c p|` over a fine boundary grid.
pub fn certify(c: &RatFunc, spec: &SearchSpec) -> Result<CertifyOutcome> {
    spec.validate()?;
    let r = &spec.region;

    if spec.require_stable_controller || spec.require_bistable_controller {
        let (interior, marginal) = poly_divisor_split(c.den(), r)?;
        if !interior.is_empty() || !marginal.is_empty() {
            return Ok(CertifyOutcome::Rejected(Rejection {
                plant_index: None,
                reason: "controller has a pole in or on the region",
                report: None,
            }));
        }
    }
    if spec.require_bistable_controller {
        if c.is_zero() {
            return Ok(CertifyOutcome::Rejected(Rejection {
                plant_index: None,
                reason: "zero controller cannot be bistable",
                report: None,
            }));
        }
        let (interior, marginal) = poly_divisor_split(c.num(), r)?;
        if !interior.is_empty() || !marginal.is_empty() {
            return Ok(CertifyOutcome::Rejected(Rejection {
                plant_index: None,
                reason: "controller has a zero in or on the region",
                report: None,
            }));
        }
    }

    let c_zeros = root_points(c.num())?;
    let c_poles = root_points(c.den())?;
    let grid = r.boundary_grid(config::MARGIN_GRID);

    let mut per_plant = Vec::with_capacity(spec.plants.len());
    let mut margin = f64::INFINITY;

    for (i, p) in spec.plants.iter().enumerate() {
        let dcdp = c.den() * p.den();
        let d = &dcdp - &(c.num() * p.num());
        if d.degree() != raw_loop_degree(c, p) {
            return Ok(CertifyOutcome::Rejected(Rejection {
                plant_index: Some(i),
                reason: "loop polynomial is numerically ill-conditioned",
                report: None,
            }));
        }

        let report = match internal_check(p, c, r) {
            Ok(rep) => rep,
            Err(Error::DegenerateLoop) => {
                return Ok(CertifyOutcome::Rejected(Rejection {
                    plant_index: Some(i),
                    reason: "loop is degenerate: c p is identically 1",
                    report: None,
                }))
            }
            Err(e) => return Err(e),
        };
        if !report.ok {
            return Ok(CertifyOutcome::Rejected(Rejection {
                plant_index: Some(i),
                reason: "internal stability check failed",
                report: Some(report),
            }));
        }
        if !report.marginal.is_empty() {
            return Ok(CertifyOutcome::Rejected(Rejection {
                plant_index: Some(i),
                reason: "closed loop has a singularity on the region boundary",
                report: Some(report),
            }));
        }

        // Roots of the untrimmed loop polynomial, deliberately without
        // the canonical gcd cancellation: an approximate gcd can absorb
        // a genuine in-region loop zero into a nearby loop pole, and a
        // certificate must never ride on that.
        for &z in &root_points(&d)? {
            match r.classify(z) {
                PointClass::Interior => {
                    return Ok(CertifyOutcome::Rejected(Rejection {
                        plant_index: Some(i),
                        reason: "closed-loop zero inside the region",
                        report: Some(report),
                    }))
                }
                PointClass::Marginal => {
                    return Ok(CertifyOutcome::Rejected(Rejection {
                        plant_index: Some(i),
                        reason: "closed-loop zero on the region boundary",
                        report: Some(report),
                    }))
                }
                PointClass::Exterior => margin = margin.min(r.distance_to_closure(z)),
            }
        }

        let pair = |u: Complex64, v: Complex64| {
            (u - v)
                .norm()
                .max(r.distance_to_closure(u))
                .max(r.distance_to_closure(v))
        };
        if p.is_zero() {
            for &u in &c_poles {
                margin = margin.min(r.distance_to_closure(u));
            }
        } else {
            for &u in &c_poles {
                for &v in &root_points(p.num())? {
                    margin = margin.min(pair(u, v));
                }
            }
            if c.is_zero() {
                for &v in &root_points(p.den())? {
                    margin = margin.min(r.distance_to_closure(v));
                }
            } else {
                for &u in &c_zeros {
                    for &v in &root_points(p.den())? {
                        margin = margin.min(pair(u, v));
                    }
                }
            }
        }

        for &w in &grid {
            if let (SphereValue::Finite(cv), SphereValue::Finite(pv)) =
                (c.eval_sphere(w), p.eval_sphere(w))
            {
                margin = margin.min((Complex64::new(1.0, 0.0) - cv * pv).norm());
            }
        }

        per_plant.push(report);
    }

    if !(margin > 0.0) {
        return Ok(CertifyOutcome::Rejected(Rejection {
            plant_index: None,
            reason: "margin is not positive",
            report: None,
        }));
    }

    Ok(CertifyOutcome::Certified(Certificate {
        controller: c.clone(),
        per_plant,
        margin,
    }))
}

/// Runs one restart of the search: a fresh random simplex, a budgeted
/// Nelder-Mead descent, then exact certification of the best vertex.
/// Internal numeric failures never escape; they surface as an
/// uncertified result.
pub fn run_restart(prep: &Prepared, index: usize) -> RestartResult {
    let (num_deg, den_deg) = prep.spec.controller_degree;
    let dims = num_deg + den_deg + 2;
    let mut rng = SplitMix64::keyed(prep.spec.seed, index as u64);
    let simplex: Vec<Vec<f64>> = (0..=dims)
        .map(|_| (0..dims).map(|_| rng.uniform(-3.0, 3.0)).collect())
        .collect();

    let (best, _, evaluations) =
        neldermead::minimize(|x| objective(prep, x), simplex, config::EVALS_PER_RESTART);

    let certificate = controller_from(&best, num_deg, den_deg).and_then(|c| {
        match certify(&c, &prep.spec) {
            Ok(CertifyOutcome::Certified(cert)) => Some(cert),
            _ => None,
        }
    });

    RestartResult {
        certificate,
        evaluations,
    }
}

/// Folds restart results, in restart order, into the final report. The
/// winner is the certified candidate with the smallest restart index,
/// which keeps the outcome independent of execution order.
pub fn conclude(results: Vec<RestartResult>) -> SearchReport {
    let restarts = results.len();
    let evaluations = results.iter().map(|r| r.evaluations).sum();
    let mut outcome = SearchOutcome::NotFound;
    let mut certified_restart = None;
    for (i, r) in results.into_iter().enumerate() {
        if certified_restart.is_none() {
            if let Some(cert) = r.certificate {
                certified_restart = Some(i);
                outcome = SearchOutcome::Certified(cert);
            }
        }
    }
    SearchReport {
        outcome,
        stats: SearchStats {
            restarts,
            evaluations,
            certified_restart,
        },
    }
}

/// Sequential search: validates the spec, runs every restart in order,
/// and reports the first certified candidate.
pub fn search(spec: &SearchSpec) -> Result<SearchReport> {
    let prep = prepare(spec)?;
    let results: Vec<RestartResult> = (0..prep.restarts()).map(|i| run_restart(&prep, i)).collect();
    Ok(conclude(results))
}
