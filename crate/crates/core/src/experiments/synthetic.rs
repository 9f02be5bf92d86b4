//! Seeded random rational signals.

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::hardy::{DiskPoint, RationalAtomSet};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `m` poles drawn uniformly from the disk of radius `max_modulus`,
/// rejecting draws closer than `min_separation` to an accepted pole.
pub fn random_separated_poles<R: Rng>(rng: &mut R, m: usize, max_modulus: f64, min_separation: f64) -> Result<Vec<DiskPoint>> {
    let mut out: Vec<DiskPoint> = Vec::with_capacity(m);
    let mut attempts = 0usize;
    while out.len() < m {
        attempts += 1;
        if attempts > 100_000 {
            return Err(Error::InvalidParameter(format!(
                "cannot place {m} poles with separation {min_separation} in radius {max_modulus}"
            )));
        }
        let r = max_modulus * rng.gen::<f64>().sqrt();
        let z = Complex64::from_polar(r, rng.gen_range(0.0..2.0 * PI));
        if out.iter().all(|p| (p.value() - z).norm() >= min_separation) {
            out.push(DiskPoint::new(z)?);
        }
    }
    Ok(out)
}

/// Coefficients with modulus uniform in `[lo, hi]` and uniform phase.
pub fn random_coefficients<R: Rng>(rng: &mut R, m: usize, lo: f64, hi: f64) -> Vec<Complex64> {
    (0..m)
        .map(|_| Complex64::from_polar(rng.gen_range(lo..=hi), rng.gen_range(0.0..2.0 * PI)))
        .collect()
}

/// Random signal with `|λ| ≤ 0.9`, separation `≥ 0.05` and `|c| ∈ [0.5, 2]`.
pub fn random_signal<R: Rng>(rng: &mut R, m: usize) -> Result<RationalAtomSet> {
    let poles = random_separated_poles(rng, m, 0.9, 0.05)?;
    let coefficients = random_coefficients(rng, m, 0.5, 2.0);
    RationalAtomSet::new(poles, coefficients)
}
