//! Stability regions: the open unit disc and the open right half-plane.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::config;
use crate::error::{Error, Result};

/// The two regions in which all stability questions are posed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegionKind {
    /// `{ z : |z| < 1 }` — the discrete-time convention.
    OpenUnitDisc,
    /// `{ z : Re z > 0 }` — the continuous-time convention.
    OpenRightHalfPlane,
}

/// Classification of a point relative to a region and its boundary band.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointClass {
    /// Strictly inside, farther than the boundary band from the boundary.
    Interior,
    /// Within the boundary band of the boundary; genuinely ambiguous for
    /// open-region verdicts, so always reported rather than classified.
    Marginal,
    /// Strictly outside, farther than the boundary band from the boundary.
    Exterior,
}

/// A region together with the half-width of its marginal boundary band.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RegionSpec {
    kind: RegionKind,
    boundary_band: f64,
}

impl RegionSpec {
    /// Builds a region with an explicit boundary band, which must lie in
    /// `[0, 0.1)`.
    pub fn new(kind: RegionKind, boundary_band: f64) -> Result<Self> {
        if !(boundary_band >= 0.0 && boundary_band < config::MAX_BOUNDARY_BAND) {
            return Err(Error::InvalidBoundaryBand);
        }
        Ok(RegionSpec {
            kind,
            boundary_band,
        })
    }

    /// The open unit disc with the default boundary band.
    pub fn disc() -> Self {
        RegionSpec {
            kind: RegionKind::OpenUnitDisc,
            boundary_band: config::DEFAULT_BOUNDARY_BAND,
        }
    }

    /// The open right half-plane with the default boundary band.
    pub fn half_plane() -> Self {
        RegionSpec {
            kind: RegionKind::OpenRightHalfPlane,
            boundary_band: config::DEFAULT_BOUNDARY_BAND,
        }
    }

    pub fn kind(&self) -> RegionKind {
        self.kind
    }

    pub fn boundary_band(&self) -> f64 {
        self.boundary_band
    }

    /// Same region with a different boundary band.
    pub fn with_band(&self, boundary_band: f64) -> Result<Self> {
        RegionSpec::new(self.kind, boundary_band)
    }

    /// Signed distance to the region boundary: negative strictly inside,
    /// positive strictly outside. For the disc this is `|z| - 1`; for the
    /// half-plane it is `-Re z`. Both are exact Euclidean boundary
    /// distances up to sign.
    pub fn signed_distance(&self, z: Complex64) -> f64 {
        match self.kind {
            RegionKind::OpenUnitDisc => z.norm() - 1.0,
            RegionKind::OpenRightHalfPlane => -z.re,
        }
    }

    /// Classifies a point as interior, marginal, or exterior.
    pub fn classify(&self, z: Complex64) -> PointClass {
        let d = self.signed_distance(z);
        if d.abs() <= self.boundary_band {
            PointClass::Marginal
        } else if d < 0.0 {
            PointClass::Interior
        } else {
            PointClass::Exterior
        }
    }

    /// `true` iff the point classifies as interior.
    pub fn contains_interior(&self, z: Complex64) -> bool {
        self.classify(z) == PointClass::Interior
    }

    /// Distance from a point to the closed region (0 inside the closure).
    pub fn distance_to_closure(&self, z: Complex64) -> f64 {
        self.signed_distance(z).max(0.0)
    }

    /// `n` boundary sample points. The samples are staggered off the
    /// axis crossings so that the half-plane grid (the image of the
    /// circle grid under the disc/half-plane transport) never requests
    /// the point at infinity.
    pub fn boundary_grid(&self, n: usize) -> Vec<Complex64> {
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let theta = 2.0 * core::f64::consts::PI * (k as f64 + 0.5) / n as f64;
            match self.kind {
                RegionKind::OpenUnitDisc => {
                    out.push(Complex64::new(libm::cos(theta), libm::sin(theta)));
                }
                RegionKind::OpenRightHalfPlane => {
                    // (1 - e^{i theta}) / (1 + e^{i theta}) = -i tan(theta/2)
                    out.push(Complex64::new(0.0, -libm::tan(theta / 2.0)));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn band_validation() {
        assert!(RegionSpec::new(RegionKind::OpenUnitDisc, 0.0).is_ok());
        assert!(RegionSpec::new(RegionKind::OpenUnitDisc, 0.09).is_ok());
        assert_eq!(
            RegionSpec::new(RegionKind::OpenUnitDisc, 0.1),
            Err(Error::InvalidBoundaryBand)
        );
        assert_eq!(
            RegionSpec::new(RegionKind::OpenUnitDisc, -1e-3),
            Err(Error::InvalidBoundaryBand)
        );
        assert_eq!(
            RegionSpec::new(RegionKind::OpenUnitDisc, f64::NAN),
            Err(Error::InvalidBoundaryBand)
        );
    }

    #[test]
    fn disc_classification() {
        let r = RegionSpec::disc();
        assert_eq!(r.classify(Complex64::new(0.5, 0.0)), PointClass::Interior);
        assert_eq!(r.classify(Complex64::new(2.0, 0.0)), PointClass::Exterior);
        assert_eq!(r.classify(Complex64::new(0.0, 1.0)), PointClass::Marginal);
        assert_eq!(
            r.classify(Complex64::new(1.0 + 1e-10, 0.0)),
            PointClass::Marginal
        );
    }

    #[test]
    fn half_plane_classification() {
        let r = RegionSpec::half_plane();
        assert_eq!(r.classify(Complex64::new(1.0, 5.0)), PointClass::Interior);
        assert_eq!(r.classify(Complex64::new(-1.0, 5.0)), PointClass::Exterior);
        assert_eq!(r.classify(Complex64::new(0.0, 3.0)), PointClass::Marginal);
    }

    #[test]
    fn closure_distance() {
        let d = RegionSpec::disc();
        assert_eq!(d.distance_to_closure(Complex64::new(0.2, 0.0)), 0.0);
        assert!((d.distance_to_closure(Complex64::new(3.0, 0.0)) - 2.0).abs() < 1e-15);
        let h = RegionSpec::half_plane();
        assert!((h.distance_to_closure(Complex64::new(-2.0, 7.0)) - 2.0).abs() < 1e-15);
    }

    #[test]
    fn grids_stay_on_boundaries_and_finite() {
        let d = RegionSpec::disc().boundary_grid(720);
        assert_eq!(d.len(), 720);
        for z in &d {
            assert!((z.norm() - 1.0).abs() < 1e-12);
        }
        let h = RegionSpec::half_plane().boundary_grid(720);
        for z in &h {
            assert_eq!(z.re, 0.0);
            assert!(z.im.is_finite());
        }
        // staggering keeps the largest half-plane sample moderate
        let max_im = h.iter().fold(0.0f64, |m, z| m.max(z.im.abs()));
        assert!(max_im < 1e4, "max imaginary sample {max_im}");
    }
}
