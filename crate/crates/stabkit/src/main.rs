//! `stabkit`: stability verdicts, interpolation data, threshold decisions,
//! certified controller search, and plot-data export for SISO rational
//! transfer functions.
//!
//! Every subcommand prints JSON on standard output (CSV where `--csv` is
//! accepted); exit code 0 marks a definitive verdict (including negative
//! ones), 2 marks an honestly undecidable query, 1 marks input errors.
//! The environment variable `STABKIT_TOLERANCE` overrides the default
//! boundary band used to flag marginal roots.

use clap::{Parser, Subcommand};
use num_complex::Complex64;
use serde::Serialize;
use stabkit::driver::search_parallel;
use stabkit::wire::{
    region_from_name, to_json_17, WireCertified, WireConstants, WireDivisorEntry,
    WireGoldbergProfile, WireInternalStabReport, WireInterpolationData, WireNotFound,
    WireRatFunc, WireSearchSpec, WireStabReport, WireStateSpace, WireTriple, WireVerdict,
};
use stabkit_core::avoidance::{goldberg_profile, interpolation_data, AvoidanceTriple};
use stabkit_core::polyalg::poly_roots;
use stabkit_core::ratfunc::{
    mobius_to_disc, mobius_to_halfplane, realize, simulate_discrete, substitute_inverse,
    transfer_function,
};
use stabkit_core::search::SearchOutcome;
use stabkit_core::stability::{gang_of_four, internal_check, is_stable, pip_check_with};
use stabkit_core::thresholds::{
    bistable_example_decision, blondel_example_decision, chocolate_decision, constants,
    patel_example_decision, VerdictStatus,
};
use stabkit_core::{RatFunc, RegionSpec};

#[derive(Parser)]
#[command(name = "stabkit", version, about = "Stabilization analysis for rational transfer functions", disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify the poles of a transfer function against a region
    Stability {
        /// Transfer function as JSON {"num":[...],"den":[...]}, ascending powers
        ratfunc: String,
        #[arg(long, default_value = "disc")]
        region: String,
    },
    /// Parity-interlacing test for existence of a stable stabilizer
    Pip {
        ratfunc: String,
        /// Do not count infinity as a blocking zero for proper plants
        #[arg(long)]
        no_infinity_zero: bool,
    },
    /// Internal stability of the loop closed around plant and controller
    Stabcheck {
        plant: String,
        controller: String,
        #[arg(long, default_value = "disc")]
        region: String,
    },
    /// The four closed-loop transfer functions, in conventional order
    Gangfour { plant: String, controller: String },
    /// Interpolation data for a triple of avoided functions
    Theorem1 {
        /// JSON {"phi1":{...},"phi2":{...},"phi3":{...}}
        triple: String,
    },
    /// Preimage clustering radius, winding numbers, and class flags
    Goldberg { ratfunc: String },
    /// The recorded and computed extremal constants
    Constants,
    /// Exact threshold decision for a worked example family
    Decide {
        /// One of: blondel, patel, bistable, chocolate
        family: String,
        /// Family parameter; bistable accepts "re" or "re,im"
        parameter: String,
    },
    /// Multistart certified controller search
    Search {
        /// JSON search specification; see docs/schemas/v1/searchspec.json
        spec: String,
    },
    /// Controllable-canonical state-space realization of a proper function
    Realize {
        ratfunc: String,
        /// Treat the input as a function of 1/z: substitute and canonicalize first
        #[arg(long)]
        z_inverse: bool,
    },
    /// Transfer function of a state-space system
    Tf {
        /// JSON {"A":[[...]],"B":[...],"C":[...]}
        statespace: String,
        /// Express the result as a function of 1/z
        #[arg(long)]
        z_inverse: bool,
    },
    /// Discrete-time response of a state-space system
    Simulate {
        statespace: String,
        /// Input signal: step or impulse
        #[arg(long, default_value = "step")]
        input: String,
        #[arg(long, default_value_t = 100)]
        steps: usize,
        /// Emit CSV (n,u,y) instead of JSON
        #[arg(long)]
        csv: bool,
    },
    /// All zeros and poles of a transfer function, with multiplicity
    Polezero {
        ratfunc: String,
        /// Emit CSV (re,im,multiplicity,type) instead of JSON
        #[arg(long)]
        csv: bool,
    },
    /// Transport a function between the half-plane and disc conventions
    Mobius {
        ratfunc: String,
        /// Target region: disc or halfplane
        #[arg(long)]
        to: String,
    },
}

fn band_from_env() -> Result<f64, String> {
    match std::env::var("STABKIT_TOLERANCE") {
        Ok(raw) => {
            let band: f64 = raw
                .trim()
                .parse()
                .map_err(|_| format!("STABKIT_TOLERANCE is not a number: {raw:?}"))?;
            if !band.is_finite() || band < 0.0 {
                return Err(format!("STABKIT_TOLERANCE out of range: {raw:?}"));
            }
            Ok(band)
        }
        Err(std::env::VarError::NotPresent) => Ok(stabkit_core::config::DEFAULT_BOUNDARY_BAND),
        Err(std::env::VarError::NotUnicode(_)) => {
            Err("STABKIT_TOLERANCE is not valid UTF-8".to_owned())
        }
    }
}

fn region_arg(name: &str) -> Result<RegionSpec, String> {
    let band = band_from_env()?;
    region_from_name(name, band).map_err(|e| e.to_string())
}

fn parse_ratfunc(s: &str) -> Result<RatFunc, String> {
    let wire: WireRatFunc =
        serde_json::from_str(s).map_err(|e| format!("invalid transfer function JSON: {e}"))?;
    wire.to_core().map_err(|e| e.to_string())
}

fn parse_statespace(s: &str) -> Result<stabkit_core::StateSpace, String> {
    let wire: WireStateSpace =
        serde_json::from_str(s).map_err(|e| format!("invalid state-space JSON: {e}"))?;
    wire.to_core().map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct PipOut {
    pip: bool,
    infinity_zero_included: bool,
}

#[derive(Serialize)]
struct GangOut {
    members: [WireRatFunc; 4],
}

#[derive(Serialize)]
struct SimulateOut {
    u: Vec<f64>,
    y: Vec<f64>,
}

#[derive(Serialize)]
struct PolezeroOut {
    zeros: Vec<WireDivisorEntry>,
    poles: Vec<WireDivisorEntry>,
}

fn global_divisor(p: &stabkit_core::Poly) -> Result<Vec<WireDivisorEntry>, String> {
    if p.degree().map_or(true, |d| d == 0) {
        return Ok(Vec::new());
    }
    let set = poly_roots(p).map_err(|e| e.to_string())?;
    Ok(set
        .roots
        .iter()
        .map(|&(z, m)| WireDivisorEntry { re: z.re, im: z.im, multiplicity: m })
        .collect())
}

fn csv_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn run(cli: Cli) -> Result<(String, i32), String> {
    match cli.cmd {
        Cmd::Stability { ratfunc, region } => {
            let f = parse_ratfunc(&ratfunc)?;
            let r = region_arg(&region)?;
            let report = is_stable(&f, &r).map_err(|e| e.to_string())?;
            Ok((to_json_17(&WireStabReport::from(&report)), 0))
        }
        Cmd::Pip { ratfunc, no_infinity_zero } => {
            let f = parse_ratfunc(&ratfunc)?;
            let include = !no_infinity_zero;
            let pip = pip_check_with(&f, include).map_err(|e| e.to_string())?;
            Ok((to_json_17(&PipOut { pip, infinity_zero_included: include }), 0))
        }
        Cmd::Stabcheck { plant, controller, region } => {
            let p = parse_ratfunc(&plant)?;
            let c = parse_ratfunc(&controller)?;
            let r = region_arg(&region)?;
            let report = internal_check(&p, &c, &r).map_err(|e| e.to_string())?;
            Ok((to_json_17(&WireInternalStabReport::from(&report)), 0))
        }
        Cmd::Gangfour { plant, controller } => {
            let p = parse_ratfunc(&plant)?;
            let c = parse_ratfunc(&controller)?;
            let (a, b, d, e) = gang_of_four(&p, &c).map_err(|e| e.to_string())?;
            let members = [(&a).into(), (&b).into(), (&d).into(), (&e).into()];
            Ok((to_json_17(&GangOut { members }), 0))
        }
        Cmd::Theorem1 { triple } => {
            let wire: WireTriple =
                serde_json::from_str(&triple).map_err(|e| format!("invalid triple JSON: {e}"))?;
            let t = AvoidanceTriple::new(
                wire.phi1.to_core().map_err(|e| e.to_string())?,
                wire.phi2.to_core().map_err(|e| e.to_string())?,
                wire.phi3.to_core().map_err(|e| e.to_string())?,
            )
            .map_err(|e| e.to_string())?;
            let data = interpolation_data(&t).map_err(|e| e.to_string())?;
            Ok((to_json_17(&WireInterpolationData::from(&data)), 0))
        }
        Cmd::Goldberg { ratfunc } => {
            let f = parse_ratfunc(&ratfunc)?;
            let profile = goldberg_profile(&f).map_err(|e| e.to_string())?;
            Ok((to_json_17(&WireGoldbergProfile::from(&profile)), 0))
        }
        Cmd::Constants => Ok((to_json_17(&WireConstants::from(&constants())), 0)),
        Cmd::Decide { family, parameter } => {
            let verdict = match family.as_str() {
                "blondel" => {
                    let delta: f64 = parameter
                        .parse()
                        .map_err(|_| format!("invalid parameter: {parameter:?}"))?;
                    blondel_example_decision(delta)
                }
                "patel" => {
                    let a: f64 = parameter
                        .parse()
                        .map_err(|_| format!("invalid parameter: {parameter:?}"))?;
                    patel_example_decision(a)
                }
                "bistable" => {
                    let a = parse_complex(&parameter)?;
                    bistable_example_decision(a)
                }
                "chocolate" => {
                    let delta: f64 = parameter
                        .parse()
                        .map_err(|_| format!("invalid parameter: {parameter:?}"))?;
                    chocolate_decision(delta)
                }
                other => return Err(format!("unknown decision family: {other:?}")),
            }
            .map_err(|e| e.to_string())?;
            let code = if verdict.status == VerdictStatus::Unknown { 2 } else { 0 };
            Ok((to_json_17(&WireVerdict::from(&verdict)), code))
        }
        Cmd::Search { spec } => {
            let wire: WireSearchSpec = serde_json::from_str(&spec)
                .map_err(|e| format!("invalid search specification JSON: {e}"))?;
            let band = band_from_env()?;
            let core_spec = wire.to_core(band).map_err(|e| e.to_string())?;
            let report = search_parallel(&core_spec).map_err(|e| e.to_string())?;
            match report.outcome {
                SearchOutcome::Certified(cert) => {
                    Ok((to_json_17(&WireCertified::new(&cert, &report.stats)), 0))
                }
                SearchOutcome::NotFound => {
                    let out =
                        WireNotFound { status: "not_found", stats: (&report.stats).into() };
                    Ok((to_json_17(&out), 0))
                }
            }
        }
        Cmd::Realize { ratfunc, z_inverse } => {
            let mut f = parse_ratfunc(&ratfunc)?;
            if z_inverse {
                f = substitute_inverse(&f);
            }
            let ss = realize(&f).map_err(|e| e.to_string())?;
            Ok((to_json_17(&WireStateSpace::from(&ss)), 0))
        }
        Cmd::Tf { statespace, z_inverse } => {
            let ss = parse_statespace(&statespace)?;
            let mut f = transfer_function(&ss);
            if z_inverse {
                f = substitute_inverse(&f);
            }
            Ok((to_json_17(&WireRatFunc::from(&f)), 0))
        }
        Cmd::Simulate { statespace, input, steps, csv } => {
            let ss = parse_statespace(&statespace)?;
            let u: Vec<f64> = match input.as_str() {
                "step" => vec![1.0; steps],
                "impulse" => {
                    let mut u = vec![0.0; steps];
                    if let Some(first) = u.first_mut() {
                        *first = 1.0;
                    }
                    u
                }
                other => return Err(format!("unknown input signal: {other:?}")),
            };
            let x0 = vec![0.0; ss.dim()];
            let y = simulate_discrete(&ss, &u, &x0).map_err(|e| e.to_string())?;
            if csv {
                let mut out = String::from("n,u,y");
                for (n, (ui, yi)) in u.iter().zip(y.iter()).enumerate() {
                    out.push_str(&format!("\n{n},{},{}", csv_f64(*ui), csv_f64(*yi)));
                }
                Ok((out, 0))
            } else {
                Ok((to_json_17(&SimulateOut { u, y }), 0))
            }
        }
        Cmd::Polezero { ratfunc, csv } => {
            let f = parse_ratfunc(&ratfunc)?;
            let zeros = global_divisor(f.num())?;
            let poles = global_divisor(f.den())?;
            if csv {
                let mut out = String::from("re,im,multiplicity,type");
                for (entries, kind) in [(&zeros, "zero"), (&poles, "pole")] {
                    for e in entries.iter() {
                        out.push_str(&format!(
                            "\n{},{},{},{kind}",
                            csv_f64(e.re),
                            csv_f64(e.im),
                            e.multiplicity
                        ));
                    }
                }
                Ok((out, 0))
            } else {
                Ok((to_json_17(&PolezeroOut { zeros, poles }), 0))
            }
        }
        Cmd::Mobius { ratfunc, to } => {
            let f = parse_ratfunc(&ratfunc)?;
            let g = match to.as_str() {
                "disc" => mobius_to_disc(&f),
                "halfplane" => mobius_to_halfplane(&f),
                other => return Err(format!("unknown transport target: {other:?}")),
            };
            Ok((to_json_17(&WireRatFunc::from(&g)), 0))
        }
    }
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let bad = || format!("invalid complex parameter: {s:?}");
    match s.split_once(',') {
        Some((re, im)) => {
            let re: f64 = re.trim().parse().map_err(|_| bad())?;
            let im: f64 = im.trim().parse().map_err(|_| bad())?;
            Ok(Complex64::new(re, im))
        }
        None => {
            let re: f64 = s.trim().parse().map_err(|_| bad())?;
            Ok(Complex64::new(re, 0.0))
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    std::process::exit(0);
                }
                _ => {
                    eprint!("{e}");
                    std::process::exit(1);
                }
            }
        }
    };
    match run(cli) {
        Ok((output, code)) => {
            println!("{output}");
            std::process::exit(code);
        }
        Err(message) => {
            eprintln!("error: {message}");
            std::process::exit(1);
        }
    }
}
