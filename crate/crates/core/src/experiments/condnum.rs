//! Conditioning of the two coefficient systems on a common pole set.

use num_complex::Complex64;
use rand::Rng;
use std::f64::consts::PI;

use super::synthetic::rng;
use crate::error::Result;
use crate::hardy::{CircleSampling, DiskPoint};
use crate::linear::{compare_conditioning, tm_triangular_recover, PoleOrder};
use crate::prony::{grop_moments, vandermonde_recover};

/// Angular half-width of the all-pass-style arc.
pub const ALLPASS_ARC: f64 = 0.75 * PI;

/// Poles at radii `1 - 10^(-2 - j/2)` cycling over `j = 0, 1, 2`, spread over
/// the arc `[-3π/4, 3π/4]` with a seeded angular jitter of a fifth of the
/// spacing. A full circle would make the Vandermonde matrix nearly unitary;
/// the gap in the arc is what makes it ill-conditioned.
pub fn allpass_poles(m: usize, seed: u64) -> Result<Vec<DiskPoint>> {
    let mut r = rng(seed);
    let spacing = 2.0 * ALLPASS_ARC / m as f64;
    (0..m)
        .map(|j| {
            let radius = 1.0 - 10f64.powf(-2.0 - 0.5 * (j % 3) as f64);
            let theta = -ALLPASS_ARC + spacing * (j as f64 + 0.5) + r.gen_range(-0.2..=0.2) * spacing;
            DiskPoint::new(Complex64::from_polar(radius, theta))
        })
        .collect()
}

/// Poles crowded into a small sector near the circle: radii in `[0.95, 0.99]`,
/// angles within `±0.3` of a seeded centre.
pub fn clustered_poles(m: usize, seed: u64) -> Result<Vec<DiskPoint>> {
    let mut r = rng(seed);
    let centre = r.gen_range(0.0..2.0 * PI);
    (0..m)
        .map(|_| {
            let radius = r.gen_range(0.95..=0.99);
            let theta = centre + r.gen_range(-0.3..=0.3);
            DiskPoint::new(Complex64::from_polar(radius, theta))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConditionReport {
    pub size: usize,
    pub vandermonde: f64,
    pub tm_triangular: f64,
    /// Smallest `1 - |λ|` in the set.
    pub min_boundary_distance: f64,
    /// Coefficients by both routes when a signal was supplied.
    pub tm_coefficients: Option<Vec<Complex64>>,
    pub vandermonde_coefficients: Option<Vec<Complex64>>,
}

impl ConditionReport {
    pub fn ratio(&self) -> f64 {
        self.vandermonde / self.tm_triangular
    }
}

pub fn condnum_demo(poles: &[DiskPoint], h: Option<&CircleSampling>) -> Result<ConditionReport> {
    let cmp = compare_conditioning(poles, PoleOrder::DescendingModulus);
    let min_boundary_distance = poles.iter().map(|p| 1.0 - p.modulus()).fold(f64::INFINITY, f64::min);
    let (tm_coefficients, vandermonde_coefficients) = match h {
        Some(h) => {
            let tm = tm_triangular_recover(poles, h, PoleOrder::DescendingModulus)?.coefficients;
            let g = grop_moments(h, poles.len());
            let raw: Vec<Complex64> = poles.iter().map(|p| p.value()).collect();
            let v = vandermonde_recover(&raw, &g.values)?.0;
            (Some(tm), Some(v))
        }
        None => (None, None),
    };
    Ok(ConditionReport {
        size: poles.len(),
        vandermonde: cmp.vandermonde,
        tm_triangular: cmp.tm_triangular,
        min_boundary_distance,
        tm_coefficients,
        vandermonde_coefficients,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn well_separated_real_poles() {
        let poles: Vec<DiskPoint> = [0.1, 0.4, 0.7]
            .iter()
            .map(|&x| DiskPoint::from_re_im(x, 0.0).unwrap())
            .collect();
        let r = condnum_demo(&poles, None).unwrap();
        assert!(r.vandermonde < 1e3 && r.tm_triangular < 1e3, "{r:?}");
    }

    #[test]
    fn generators_are_deterministic_and_inside() {
        let a = allpass_poles(50, 7).unwrap();
        assert_eq!(a, allpass_poles(50, 7).unwrap());
        assert_ne!(a, allpass_poles(50, 8).unwrap());
        assert!(a.iter().all(|p| p.modulus() < 0.9991));
        let c = clustered_poles(20, 3).unwrap();
        assert!(c.iter().all(|p| p.modulus() >= 0.95 && p.modulus() <= 0.99));
    }

    #[test]
    fn coefficient_routes_agree_on_small_sets() {
        let poles: Vec<DiskPoint> = [(0.1, 0.2), (0.5, -0.3), (-0.6, 0.1)]
            .iter()
            .map(|&(a, b)| DiskPoint::from_re_im(a, b).unwrap())
            .collect();
        let coeffs = vec![Complex64::new(1.0, 0.0), Complex64::new(0.5, 0.5), Complex64::new(-1.0, 0.2)];
        let set = crate::hardy::RationalAtomSet::new(poles.clone(), coeffs.clone()).unwrap();
        let h = set.sampling(1024).unwrap();
        let r = condnum_demo(&poles, Some(&h)).unwrap();
        for ((a, b), e) in r.tm_coefficients.unwrap().iter().zip(r.vandermonde_coefficients.unwrap()).zip(&coeffs) {
            assert!((a - e).norm() < 1e-10);
            assert!((b - e).norm() < 1e-10);
        }
    }
}
