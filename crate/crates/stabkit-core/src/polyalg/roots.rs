//! Root finding: companion-matrix eigenvalues, one Newton polish per
//! root, conjugate-symmetry enforcement, and multiplicity clustering.

use alloc::vec;
use alloc::vec::Vec;

use nalgebra::{DMatrix, Schur};
use num_complex::Complex64;

use super::poly::Poly;
use super::region::{PointClass, RegionSpec};
use crate::config;
use crate::error::{Error, Result};

/// All roots of a polynomial, clustered into multiplicities.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSet {
    /// `(point, multiplicity)` pairs, sorted by `(re, im)`. For real
    /// input the multiset is exactly closed under conjugation.
    pub roots: Vec<(Complex64, usize)>,
    /// Maximum scaled backward error `|p(r)| / sum_k |c_k| |r|^k` over
    /// the returned representatives.
    pub residual: f64,
}

impl RootSet {
    /// Sum of multiplicities; equals the polynomial degree.
    pub fn total_multiplicity(&self) -> usize {
        self.roots.iter().map(|(_, m)| m).sum()
    }
}

/// Computes all complex roots of `p` with multiplicities.
///
/// Eigenvalues of the monic companion matrix are polished by one guarded
/// Newton step each, complex roots are forced into bit-identical
/// conjugate pairs, and nearby roots are merged into multiple roots when
/// they fall within `ROOT_CLUSTER_REL * (1 + max |root|)` of each other.
pub fn poly_roots(p: &Poly) -> Result<RootSet> {
    let deg = p.degree().ok_or(Error::ZeroPolynomial)?;
    if deg == 0 {
        return Ok(RootSet {
            roots: Vec::new(),
            residual: 0.0,
        });
    }

    let monic = p.monic();
    let c = monic.coeffs();
    // Exactly-zero low-order coefficients are roots at the origin; peeling
    // them off keeps the companion matrix away from the nilpotent case, on
    // which QR iteration stalls.
    let at_origin = c.iter().take_while(|&&v| v == 0.0).count().min(deg);
    let mut raw: Vec<Complex64> = vec![Complex64::new(0.0, 0.0); at_origin];
    if at_origin < deg {
        raw.extend(companion_eigenvalues(&c[at_origin..])?);
    }

    // One guarded Newton step per root: accept the step only when it does
    // not increase the residual.
    let dp = p.derivative();
    for r in raw.iter_mut() {
        if !r.re.is_finite() || !r.im.is_finite() {
            continue;
        }
        let f = p.eval_complex(*r);
        let d = dp.eval_complex(*r);
        if d.norm_sqr() > 0.0 {
            let cand = *r - f / d;
            if cand.re.is_finite()
                && cand.im.is_finite()
                && p.eval_complex(cand).norm() <= f.norm()
            {
                *r = cand;
            }
        }
    }

    enforce_conjugate_symmetry(&mut raw);
    let clusters = cluster(&raw);

    let mut residual = 0.0f64;
    for &(r, _) in &clusters {
        let num = p.eval_complex(r).norm();
        let mut den = 0.0;
        let mut pw = 1.0;
        for &ck in p.coeffs() {
            den += ck.abs() * pw;
            pw *= r.norm();
        }
        if den > 0.0 {
            residual = residual.max(num / den);
        }
    }

    Ok(RootSet {
        roots: clusters,
        residual,
    })
}

/// Eigenvalues of the monic companion matrix of `c` (ascending, `c[0] != 0`,
/// last coefficient 1). QR iteration is capped; if it fails to converge the
/// variable is shifted by an irrational offset and the iteration retried,
/// which resolves the defective clustered-root layouts QR dislikes.
fn companion_eigenvalues(c: &[f64]) -> Result<Vec<Complex64>> {
    let n = c.len() - 1;
    let build = |coeffs: &[f64]| {
        let mut m = DMatrix::<f64>::zeros(n, n);
        for i in 1..n {
            m[(i, i - 1)] = 1.0;
        }
        for i in 0..n {
            m[(i, n - 1)] = -coeffs[i];
        }
        m
    };
    let cap = 100 * n + 200;
    if let Some(s) = Schur::try_new(build(c), f64::EPSILON, cap) {
        return Ok(s.complex_eigenvalues().iter().copied().collect());
    }
    let bound = 1.0 + c.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let tau = 0.618_033_988_749_894_9 * bound;
    let mut shifted = c.to_vec();
    for i in 0..n {
        for j in (i..n).rev() {
            shifted[j] += tau * shifted[j + 1];
        }
    }
    if let Some(s) = Schur::try_new(build(&shifted), f64::EPSILON, cap) {
        return Ok(s.complex_eigenvalues().iter().map(|z| z + tau).collect());
    }
    Err(Error::EigenvalueFailure)
}

/// Pairs strictly-complex roots into bit-identical conjugates. Real
/// eigenvalues of a real companion matrix come out with an exactly zero
/// imaginary part, and the eigensolver produces complex roots in
/// conjugate pairs, so this is a normalization rather than a repair; any
/// unpaired leftover is snapped to the real axis.
fn enforce_conjugate_symmetry(roots: &mut [Complex64]) {
    let idx_upper: Vec<usize> = (0..roots.len()).filter(|&i| roots[i].im > 0.0).collect();
    let mut idx_lower: Vec<usize> = (0..roots.len()).filter(|&i| roots[i].im < 0.0).collect();
    for &u in &idx_upper {
        let target = roots[u].conj();
        let mut best: Option<(usize, f64)> = None;
        for (slot, &l) in idx_lower.iter().enumerate() {
            let d = (roots[l] - target).norm();
            if best.map_or(true, |(_, bd)| d < bd) {
                best = Some((slot, d));
            }
        }
        match best {
            Some((slot, _)) => {
                let l = idx_lower.swap_remove(slot);
                roots[l] = target;
            }
            None => {
                roots[u] = Complex64::new(roots[u].re, 0.0);
            }
        }
    }
    for l in idx_lower {
        roots[l] = Complex64::new(roots[l].re, 0.0);
    }
}

/// Single-linkage clustering with the relative multiplicity tolerance;
/// each cluster is replaced by its centroid. Conjugate-symmetric input
/// yields conjugate-symmetric centroids bit-identically, because a
/// self-conjugate cluster's imaginary parts cancel exactly and mirrored
/// clusters average to mirrored centroids.
fn cluster(roots: &[Complex64]) -> Vec<(Complex64, usize)> {
    let n = roots.len();
    let max_mod = roots.iter().fold(0.0f64, |m, r| m.max(r.norm()));
    let tol = config::ROOT_CLUSTER_REL * (1.0 + max_mod);

    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        let mut i = i;
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..n {
        for j in i + 1..n {
            if (roots[i] - roots[j]).norm() <= tol {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }

    let mut groups: Vec<(Complex64, usize)> = Vec::new();
    let mut group_of = vec![usize::MAX; n];
    let mut sums: Vec<Complex64> = Vec::new();
    for i in 0..n {
        let root_rep = find(&mut parent, i);
        if group_of[root_rep] == usize::MAX {
            group_of[root_rep] = groups.len();
            groups.push((Complex64::new(0.0, 0.0), 0));
            sums.push(Complex64::new(0.0, 0.0));
        }
        let g = group_of[root_rep];
        sums[g] += roots[i];
        groups[g].1 += 1;
    }
    for (g, group) in groups.iter_mut().enumerate() {
        group.0 = sums[g] / group.1 as f64;
    }
    groups.sort_by(|a, b| {
        a.0.re
            .total_cmp(&b.0.re)
            .then(a.0.im.total_cmp(&b.0.im))
    });
    groups
}

/// Counts roots `(interior, marginal)` of `p` relative to a region,
/// with multiplicity. Exterior roots are not counted.
pub fn count_roots_in(p: &Poly, r: &RegionSpec) -> Result<(usize, usize)> {
    let set = poly_roots(p)?;
    let mut inside = 0;
    let mut marginal = 0;
    for &(z, m) in &set.roots {
        match r.classify(z) {
            PointClass::Interior => inside += m,
            PointClass::Marginal => marginal += m,
            PointClass::Exterior => {}
        }
    }
    Ok((inside, marginal))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roots_of(coeffs: &[f64]) -> RootSet {
        poly_roots(&Poly::new(coeffs.to_vec())).unwrap()
    }

    #[test]
    fn simple_factored_pair() {
        let set = roots_of(&[-1.0, 0.0, 1.0]); // z^2 - 1
        assert_eq!(set.roots.len(), 2);
        assert!((set.roots[0].0 - Complex64::new(-1.0, 0.0)).norm() < 1e-12);
        assert!((set.roots[1].0 - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        assert_eq!(set.roots[0].1, 1);
        assert_eq!(set.roots[1].1, 1);
    }

    #[test]
    fn pure_monomial_multiplicity() {
        let set = roots_of(&[0.0, 0.0, 0.0, 1.0]); // z^3
        assert_eq!(set.roots.len(), 1);
        assert!(set.roots[0].0.norm() < 1e-9);
        assert_eq!(set.roots[0].1, 3);
    }

    #[test]
    fn clustered_double_root() {
        // (z - 0.5)^2 (z + 2) = z^3 + z^2 - 1.75 z + 0.5
        let set = roots_of(&[0.5, -1.75, 1.0, 1.0]);
        assert_eq!(set.roots.len(), 2);
        let minus_two = set.roots[0];
        let half = set.roots[1];
        assert!((minus_two.0 - Complex64::new(-2.0, 0.0)).norm() < 1e-10);
        assert_eq!(minus_two.1, 1);
        assert!((half.0 - Complex64::new(0.5, 0.0)).norm() < 1e-7);
        assert_eq!(half.1, 2);
        assert_eq!(set.total_multiplicity(), 3);
    }

    #[test]
    fn conjugate_symmetry_is_bit_exact() {
        // (z^2 + z + 1)(z^2 + 0.25)(z - 3)
        let a = Poly::new(vec![1.0, 1.0, 1.0]);
        let b = Poly::new(vec![0.25, 0.0, 1.0]);
        let p = &(&a * &b) * &Poly::linear(3.0);
        let set = poly_roots(&p).unwrap();
        assert_eq!(set.total_multiplicity(), 5);
        for &(z, m) in &set.roots {
            if z.im != 0.0 {
                let conj_found = set
                    .roots
                    .iter()
                    .any(|&(w, wm)| wm == m && w.re == z.re && w.im == -z.im);
                assert!(conj_found, "conjugate of {z} missing bit-identically");
            }
        }
    }

    #[test]
    fn residual_is_small_for_benign_input() {
        let p = Poly::from_real_roots(&[1.0, -2.0, 3.5, 0.25]);
        let set = poly_roots(&p).unwrap();
        assert!(set.residual < 1e-12, "residual {}", set.residual);
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert_eq!(poly_roots(&Poly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn constant_has_no_roots() {
        let set = roots_of(&[4.0]);
        assert!(set.roots.is_empty());
    }

    #[test]
    fn round_trip_reconstruction() {
        // reconstruct the monic polynomial from its computed roots
        let p = Poly::from_real_roots(&[0.3, -1.2, 2.0, 4.5, -0.7]);
        let set = poly_roots(&p).unwrap();
        let mut rec = vec![Complex64::new(1.0, 0.0)];
        for &(z, m) in &set.roots {
            for _ in 0..m {
                let mut next = vec![Complex64::new(0.0, 0.0); rec.len() + 1];
                for (k, &ck) in rec.iter().enumerate() {
                    next[k + 1] += ck;
                    next[k] -= ck * z;
                }
                rec = next;
            }
        }
        for (k, want) in p.monic().coeffs().iter().enumerate() {
            assert!(
                (rec[k].re - want).abs() <= 1e-7 * want.abs().max(1.0),
                "coefficient {k}: {} vs {want}",
                rec[k].re
            );
            assert!(rec[k].im.abs() < 1e-9);
        }
    }

    #[test]
    fn count_in_regions() {
        let disc = RegionSpec::disc();
        assert_eq!(
            count_roots_in(&Poly::linear(2.0), &disc).unwrap(),
            (0, 0)
        );
        assert_eq!(
            count_roots_in(&Poly::new(vec![-0.25, 0.0, 1.0]), &disc).unwrap(),
            (2, 0)
        );
        let rhp = RegionSpec::half_plane();
        assert_eq!(
            count_roots_in(&Poly::new(vec![1.0, 0.0, 1.0]), &rhp).unwrap(),
            (0, 2)
        );
    }
}
