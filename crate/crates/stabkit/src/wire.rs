//! Serialization mirrors for the core types. Field names here are the
//! stable wire contract; the schemas in docs/schemas/v1 describe them.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use stabkit_core::avoidance::{GoldbergProfile, InterpolationData, Jet};
use stabkit_core::polyalg::Poly;
use stabkit_core::ratfunc::Divisor;
use stabkit_core::search::{Certificate, SearchSpec, SearchStats};
use stabkit_core::stability::{InternalStabReport, StabReport};
use stabkit_core::thresholds::{ConstantsTable, Verdict, VerdictStatus};
use stabkit_core::{RatFunc, RegionKind, RegionSpec, Result, StateSpace};

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct WireComplex {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for WireComplex {
    fn from(z: Complex64) -> Self {
        WireComplex { re: z.re, im: z.im }
    }
}

impl From<WireComplex> for Complex64 {
    fn from(w: WireComplex) -> Self {
        Complex64::new(w.re, w.im)
    }
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct WireDivisorEntry {
    pub re: f64,
    pub im: f64,
    pub multiplicity: usize,
}

pub fn divisor_to_wire(d: &Divisor) -> Vec<WireDivisorEntry> {
    d.entries
        .iter()
        .map(|&(z, m)| WireDivisorEntry { re: z.re, im: z.im, multiplicity: m })
        .collect()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WireRatFunc {
    pub num: Vec<f64>,
    pub den: Vec<f64>,
}

impl WireRatFunc {
    pub fn to_core(&self) -> Result<RatFunc> {
        RatFunc::new(Poly::new(self.num.clone()), Poly::new(self.den.clone()))
    }
}

impl From<&RatFunc> for WireRatFunc {
    fn from(f: &RatFunc) -> Self {
        WireRatFunc { num: f.num().coeffs().to_vec(), den: f.den().coeffs().to_vec() }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WireStateSpace {
    #[serde(rename = "A")]
    pub a: Vec<Vec<f64>>,
    #[serde(rename = "B")]
    pub b: Vec<f64>,
    #[serde(rename = "C")]
    pub c: Vec<f64>,
}

impl WireStateSpace {
    pub fn to_core(&self) -> Result<StateSpace> {
        StateSpace::new(self.a.clone(), self.b.clone(), self.c.clone())
    }
}

impl From<&StateSpace> for WireStateSpace {
    fn from(s: &StateSpace) -> Self {
        WireStateSpace { a: s.a().to_vec(), b: s.b().to_vec(), c: s.c().to_vec() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WireStabReport {
    pub stable: bool,
    pub offending_poles: Vec<WireDivisorEntry>,
    pub marginal: Vec<WireDivisorEntry>,
}

impl From<&StabReport> for WireStabReport {
    fn from(r: &StabReport) -> Self {
        WireStabReport {
            stable: r.stable,
            offending_poles: divisor_to_wire(&r.offending_poles),
            marginal: divisor_to_wire(&r.marginal),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WireInternalStabReport {
    pub ok: bool,
    pub loop_zeros_in_region: Vec<WireDivisorEntry>,
    pub cancellation_cp: Vec<WireDivisorEntry>,
    pub cancellation_pc: Vec<WireDivisorEntry>,
    pub gang_of_four_stable: [bool; 4],
    pub marginal: Vec<WireDivisorEntry>,
}

impl From<&InternalStabReport> for WireInternalStabReport {
    fn from(r: &InternalStabReport) -> Self {
        WireInternalStabReport {
            ok: r.ok,
            loop_zeros_in_region: divisor_to_wire(&r.loop_zeros_in_region),
            cancellation_cp: divisor_to_wire(&r.cancellation_cp),
            cancellation_pc: divisor_to_wire(&r.cancellation_pc),
            gang_of_four_stable: r.gang_of_four_stable,
            marginal: divisor_to_wire(&r.marginal),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WireConstants {
    #[serde(rename = "A0")]
    pub a0: f64,
    #[serde(rename = "A2_lower")]
    pub a2_lower: f64,
    #[serde(rename = "A2_upper_mu")]
    pub a2_upper_mu: f64,
    pub bermant_delta0: f64,
    pub caratheodory: f64,
    pub chocolate_lower: f64,
    pub chocolate_upper: f64,
}

impl From<&ConstantsTable> for WireConstants {
    fn from(t: &ConstantsTable) -> Self {
        WireConstants {
            a0: t.a0,
            a2_lower: t.a2_lower,
            a2_upper_mu: t.a2_upper_mu,
            bermant_delta0: t.bermant_delta0,
            caratheodory: t.caratheodory,
            chocolate_lower: t.chocolate_lower,
            chocolate_upper: t.chocolate_upper,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WireVerdict {
    pub status: &'static str,
    pub threshold: f64,
    pub citation: &'static str,
}

impl From<&Verdict> for WireVerdict {
    fn from(v: &Verdict) -> Self {
        WireVerdict {
            status: match v.status {
                VerdictStatus::Stabilizable => "Stabilizable",
                VerdictStatus::NotStabilizable => "NotStabilizable",
                VerdictStatus::Unknown => "Unknown",
            },
            threshold: v.threshold,
            citation: v.citation,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WireGoldbergClasses {
    #[serde(rename = "F0")]
    pub f0: bool,
    #[serde(rename = "F1")]
    pub f1: bool,
    #[serde(rename = "F2")]
    pub f2: bool,
    #[serde(rename = "F3")]
    pub f3: bool,
    #[serde(rename = "F4")]
    pub f4: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct WireGoldbergProfile {
    pub rho: f64,
    pub n_zeros: usize,
    pub n_poles: usize,
    pub n_ones: usize,
    #[serde(rename = "N0")]
    pub n0: i64,
    #[serde(rename = "N1")]
    pub n1: i64,
    pub classes: WireGoldbergClasses,
}

impl From<&GoldbergProfile> for WireGoldbergProfile {
    fn from(p: &GoldbergProfile) -> Self {
        WireGoldbergProfile {
            rho: p.rho,
            n_zeros: p.n_zeros,
            n_poles: p.n_poles,
            n_ones: p.n_ones,
            n0: p.n0,
            n1: p.n1,
            classes: WireGoldbergClasses {
                f0: p.classes.f0,
                f1: p.classes.f1,
                f2: p.classes.f2,
                f3: p.classes.f3,
                f4: p.classes.f4,
            },
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WireJet {
    pub point: WireComplex,
    pub order: usize,
    pub ratio: WireRatFunc,
}

#[derive(Clone, Debug, Serialize)]
pub struct WireInterpolationData {
    pub zeros_divisor: Vec<WireDivisorEntry>,
    pub poles_divisor: Vec<WireDivisorEntry>,
    pub ones_divisor: Vec<WireDivisorEntry>,
    pub jets: Vec<WireJet>,
}

impl From<&InterpolationData> for WireInterpolationData {
    fn from(d: &InterpolationData) -> Self {
        let jet = |j: &Jet| WireJet {
            point: j.point.into(),
            order: j.order,
            ratio: (&j.ratio).into(),
        };
        WireInterpolationData {
            zeros_divisor: divisor_to_wire(&d.zeros_divisor),
            poles_divisor: divisor_to_wire(&d.poles_divisor),
            ones_divisor: divisor_to_wire(&d.ones_divisor),
            jets: d.jets.iter().map(jet).collect(),
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
pub struct WireTriple {
    pub phi1: WireRatFunc,
    pub phi2: WireRatFunc,
    pub phi3: WireRatFunc,
}

#[derive(Clone, Debug, Deserialize)]
pub struct WireSearchSpec {
    pub plants: Vec<WireRatFunc>,
    #[serde(default = "default_region")]
    pub region: String,
    pub controller_degree: (usize, usize),
    #[serde(default)]
    pub require_stable_controller: bool,
    #[serde(default)]
    pub require_bistable_controller: bool,
    pub budget: usize,
    pub seed: u64,
}

fn default_region() -> String {
    "disc".to_owned()
}

pub fn region_from_name(name: &str, band: f64) -> Result<RegionSpec> {
    let kind = match name {
        "disc" => RegionKind::OpenUnitDisc,
        "rhp" => RegionKind::OpenRightHalfPlane,
        _ => return Err(stabkit_core::Error::InvalidSearchSpec("unknown region name")),
    };
    RegionSpec::new(kind, band)
}

pub fn region_name(r: &RegionSpec) -> &'static str {
    match r.kind() {
        RegionKind::OpenUnitDisc => "disc",
        RegionKind::OpenRightHalfPlane => "rhp",
    }
}

impl WireSearchSpec {
    pub fn to_core(&self, band: f64) -> Result<SearchSpec> {
        let mut plants = Vec::with_capacity(self.plants.len());
        for p in &self.plants {
            plants.push(p.to_core()?);
        }
        Ok(SearchSpec {
            plants,
            region: region_from_name(&self.region, band)?,
            controller_degree: self.controller_degree,
            require_stable_controller: self.require_stable_controller,
            require_bistable_controller: self.require_bistable_controller,
            budget: self.budget,
            seed: self.seed,
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WireSearchStats {
    pub restarts: usize,
    pub evaluations: usize,
    pub certified_restart: Option<usize>,
}

impl From<&SearchStats> for WireSearchStats {
    fn from(s: &SearchStats) -> Self {
        WireSearchStats {
            restarts: s.restarts,
            evaluations: s.evaluations,
            certified_restart: s.certified_restart,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WireCertified {
    pub status: &'static str,
    pub controller: WireRatFunc,
    pub margin: f64,
    pub per_plant: Vec<WireInternalStabReport>,
    pub stats: WireSearchStats,
}

impl WireCertified {
    pub fn new(c: &Certificate, stats: &SearchStats) -> Self {
        WireCertified {
            status: "certified",
            controller: (&c.controller).into(),
            margin: c.margin,
            per_plant: c.per_plant.iter().map(Into::into).collect(),
            stats: stats.into(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WireNotFound {
    pub status: &'static str,
    pub stats: WireSearchStats,
}

/// Serialize any wire value as JSON with every float printed to 17
/// significant digits, so the binary value survives a round trip.
pub fn to_json_17<T: Serialize>(value: &T) -> String {
    struct Sci;
    impl serde_json::ser::Formatter for Sci {
        fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> std::io::Result<()>
        where
            W: ?Sized + std::io::Write,
        {
            write!(writer, "{value:.16e}")
        }
    }
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, Sci);
    value.serialize(&mut ser).expect("serialization cannot fail");
    String::from_utf8(out).expect("serializer emits UTF-8")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_are_printed_with_17_significant_digits() {
        let s = to_json_17(&vec![0.0625_f64, 0.1, -3.0]);
        assert_eq!(
            s,
            "[6.2500000000000000e-2,1.0000000000000001e-1,-3.0000000000000000e0]"
        );
    }

    #[test]
    fn printed_floats_parse_back_exactly() {
        let vals = [0.1, 1.0 / 3.0, 2.0_f64.sqrt(), 1e-300, 6.02e23];
        let s = to_json_17(&vals.to_vec());
        let back: Vec<f64> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, vals.to_vec());
    }

    #[test]
    fn ratfunc_round_trips_through_wire() {
        let f = RatFunc::new(
            Poly::new(vec![1.0, 0.0, -2.0]),
            Poly::new(vec![3.0, 1.0]),
        )
        .unwrap();
        let w: WireRatFunc = (&f).into();
        let back = w.to_core().unwrap();
        assert!(f.approx_same(&back));
    }

    #[test]
    fn region_names_round_trip() {
        for name in ["disc", "rhp"] {
            let r = region_from_name(name, 1e-9).unwrap();
            assert_eq!(region_name(&r), name);
        }
        assert!(region_from_name("annulus", 1e-9).is_err());
    }
}
