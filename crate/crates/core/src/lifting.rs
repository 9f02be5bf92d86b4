//! Reduction of exponential Prony problems to rational pole finding.
//!
//! A moment sequence `g_m = Σ μ_k φ_k^m` is mapped by the weighted
//! Z-transform `G(z) = Σ g_n (z/w)^n` to `Σ μ_k / (1 - (φ_k/w) z)`, a
//! rational function with disk poles `ϱ_k = conj(φ_k / w)`. The rational
//! pipelines recover `ϱ_k`; an [`InverseMap`] turns them back into the
//! original parameters.
//!
//! The recovered linear weights are the lifted `μ_k`, not the original
//! `c_k`: separating the two needs the scheme's atom evaluations, which
//! this module does not know.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hardy::CircleSampling;
use crate::prony::MomentSequence;

pub const WEIGHT_SAFETY: f64 = 1.25;
pub const WEIGHT_WINDOW: usize = 10;
/// Below this trailing ratio a sequence counts as already decaying.
pub const CONTRACTIVE_RATIO: f64 = 0.8;

/// Map from `φ = w · conj(ϱ)` back to the original parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum InverseMap {
    /// `λ = φ`: plain geometric sequences.
    Identity,
    /// `λ = conj(φ)`: moments of a rational function, `φ(λ) = conj(λ)`.
    ConjScaleByW,
    /// `λ = log(φ) / m₀`, principal branch: sampled exponentials with step `m₀`.
    ExpLog { step: f64 },
    /// `λ = C φ`: sequences `Σ c_k (λ_k / C)^m`.
    ScaleByC { c: f64 },
}

impl InverseMap {
    pub fn tag(&self) -> &'static str {
        match self {
            InverseMap::Identity => "identity",
            InverseMap::ConjScaleByW => "conj-scale-by-w",
            InverseMap::ExpLog { .. } => "exp-log",
            InverseMap::ScaleByC { .. } => "scale-by-C",
        }
    }

    /// Scheme value `φ(λ)` for an original parameter.
    pub fn forward(&self, lambda: Complex64) -> Complex64 {
        match *self {
            InverseMap::Identity => lambda,
            InverseMap::ConjScaleByW => lambda.conj(),
            InverseMap::ExpLog { step } => (lambda * step).exp(),
            InverseMap::ScaleByC { c } => lambda / c,
        }
    }

    /// Original parameter from a scheme value.
    pub fn inverse(&self, phi: Complex64) -> Complex64 {
        match *self {
            InverseMap::Identity => phi,
            InverseMap::ConjScaleByW => phi.conj(),
            InverseMap::ExpLog { step } => phi.ln() / step,
            InverseMap::ScaleByC { c } => phi * c,
        }
    }
}

#[derive(Debug, Clone)]
pub struct LiftedProblem {
    pub moments: MomentSequence,
    pub weight: f64,
    /// Number of terms kept in the Z-transform.
    pub truncation: usize,
    /// Estimate of `Σ_{n≥K} |g_n| / w^n`.
    pub tail_bound: f64,
    pub inverse_map: InverseMap,
}

impl LiftedProblem {
    pub fn sampling(&self, n_grid: usize) -> Result<CircleSampling> {
        weighted_z_transform_sampling(&self.moments.values[..self.truncation], self.weight, n_grid)
    }

    /// Disk pole of the lifted function for an original parameter.
    pub fn disk_pole(&self, lambda: Complex64) -> Complex64 {
        (self.inverse_map.forward(lambda) / self.weight).conj()
    }

    /// Original parameter for a recovered disk pole: `φ = w · conj(ϱ)`, then the inverse map.
    pub fn map_back(&self, rho: Complex64) -> Complex64 {
        self.inverse_map.inverse(rho.conj() * self.weight)
    }
}

fn scaled_magnitudes(g: &[Complex64], w: f64) -> Vec<f64> {
    // |g_n| / w^n via logs to avoid overflow for long sequences.
    g.iter()
        .enumerate()
        .map(|(n, v)| {
            let a = v.norm();
            if a == 0.0 {
                0.0
            } else {
                (a.ln() - n as f64 * w.ln()).exp()
            }
        })
        .collect()
}

/// Reject sequences whose scaled terms do not decay over the last window.
fn check_decay(g: &[Complex64], w: f64) -> Result<()> {
    let a = scaled_magnitudes(g, w);
    if a.len() <= WEIGHT_WINDOW {
        return Ok(());
    }
    let tail = &a[a.len() - WEIGHT_WINDOW - 1..];
    let nondecreasing = tail.windows(2).all(|p| p[1] >= p[0]) && tail[tail.len() - 1] > 0.0;
    if nondecreasing {
        return Err(Error::Divergent { weight: w });
    }
    Ok(())
}

/// Estimate of `Σ_{n≥K} |g_n| / w^n` from the trailing decay ratio.
pub fn tail_bound(g: &[Complex64], w: f64) -> f64 {
    let a = scaled_magnitudes(g, w);
    let k = a.len();
    if k < 2 {
        return f64::INFINITY;
    }
    let start = k.saturating_sub(WEIGHT_WINDOW + 1);
    let rho = a[start..]
        .windows(2)
        .filter(|p| p[0] > 0.0)
        .map(|p| p[1] / p[0])
        .fold(0.0, f64::max);
    let last = a[k - 1];
    if last == 0.0 {
        return 0.0;
    }
    if rho >= 1.0 {
        return f64::INFINITY;
    }
    last * rho / (1.0 - rho)
}

/// Samples of `Σ_{n<K} g_n (z/w)^n` on the uniform grid, by Horner's rule.
pub fn weighted_z_transform_sampling(g: &[Complex64], w: f64, n_grid: usize) -> Result<CircleSampling> {
    if !(w > 0.0) || !w.is_finite() {
        return Err(Error::InvalidParameter(format!("weight must be positive, got {w}")));
    }
    if g.is_empty() {
        return Err(Error::InsufficientMoments { needed: 1, got: 0 });
    }
    check_decay(g, w)?;
    CircleSampling::from_fn(n_grid, |z| {
        let x = z / w;
        g.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * x + c)
    })
}

/// Ratio-test weight: `1.25 · max |g_{n+1} / g_n|` over the trailing window,
/// or 1 when the sequence already decays.
pub fn estimate_weight(g: &[Complex64]) -> Result<f64> {
    if g.len() < 8 {
        return Err(Error::InsufficientMoments {
            needed: 8,
            got: g.len(),
        });
    }
    if g.iter().all(|v| v.norm() == 0.0) {
        return Err(Error::ZeroSequence);
    }
    let start = g.len().saturating_sub(WEIGHT_WINDOW + 1);
    let ratio = g[start..]
        .windows(2)
        .filter(|p| p[0].norm() > 0.0)
        .map(|p| p[1].norm() / p[0].norm())
        .fold(0.0, f64::max);
    if ratio < CONTRACTIVE_RATIO {
        Ok(1.0)
    } else {
        Ok(WEIGHT_SAFETY * ratio)
    }
}

/// Package a moment sequence for rational recovery.
pub fn lift(moments: MomentSequence, weight: Option<f64>, inverse_map: InverseMap) -> Result<LiftedProblem> {
    let w = match weight {
        Some(w) => w,
        None => estimate_weight(&moments.values)?,
    };
    if !(w > 0.0) || !w.is_finite() {
        return Err(Error::InvalidParameter(format!("weight must be positive, got {w}")));
    }
    check_decay(&moments.values, w)?;
    let truncation = moments.len();
    let tail_bound = tail_bound(&moments.values, w);
    Ok(LiftedProblem {
        moments,
        weight: w,
        truncation,
        tail_bound,
        inverse_map,
    })
}
