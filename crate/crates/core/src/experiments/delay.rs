//! Identification of a continuous-time system with input delay.
//!
//! `H_τ(s) = e^{-τs} Σ c_k / (s - λ_k)` has impulse response
//! `h(t) = Σ c_k e^{λ_k (t - τ)}` for `t ≥ τ` and 0 before. Sampling at
//! multiples of a step `m₀ ≥ τ` gives `g = (0, h(m₀), h(2m₀), ...)`, a sum
//! of geometric sequences in `α_k = e^{m₀ λ_k}` plus a correction at index
//! 0. Its Z-transform is rational with the poles `α_k` and one extra pole
//! at the origin, which is discarded after recovery.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::bernoulli::{gb_recover_iterative, GbConfig};
use crate::error::{Error, Result};
use crate::hardy::{CircleSampling, GeneratingSequence, DEFAULT_GRID};
use crate::lifting::{lift, InverseMap, LiftedProblem};
use crate::prony::{classical_prony, grop_recover, match_poles, CoefficientMethod, GropConfig, MomentSequence, MomentSource, RecoveryResult};

/// Default number of terms of the lifted sequence.
pub const DEFAULT_TRUNCATION: usize = 200;

#[derive(Debug, Clone, PartialEq)]
pub struct DelaySystemSpec {
    pub poles: Vec<Complex64>,
    pub coefficients: Vec<Complex64>,
    pub tau: f64,
}

impl DelaySystemSpec {
    pub fn new(poles: Vec<Complex64>, coefficients: Vec<Complex64>, tau: f64) -> Result<Self> {
        if poles.is_empty() || poles.len() != coefficients.len() {
            return Err(Error::Dimension(format!(
                "{} poles and {} coefficients",
                poles.len(),
                coefficients.len()
            )));
        }
        if let Some(p) = poles.iter().find(|p| !(p.re < 0.0)) {
            return Err(Error::InvalidParameter(format!("pole {p} is not stable (Re ≥ 0)")));
        }
        if !(tau >= 0.0) || !tau.is_finite() {
            return Err(Error::InvalidParameter(format!("delay must be non-negative, got {tau}")));
        }
        for i in 0..poles.len() {
            for j in (i + 1)..poles.len() {
                if poles[i] == poles[j] {
                    return Err(Error::DuplicatePoles { i, j, distance: 0.0 });
                }
            }
        }
        Ok(Self {
            poles,
            coefficients,
            tau,
        })
    }

    /// Third-order system with a complex pair and a fast real pole, delay 1.5.
    pub fn reference() -> Self {
        Self {
            poles: vec![
                Complex64::new(-0.157, 0.359),
                Complex64::new(-0.157, -0.359),
                Complex64::new(-2.3, 0.0),
            ],
            coefficients: vec![
                Complex64::new(0.026, 0.195),
                Complex64::new(0.026, -0.195),
                Complex64::new(0.022, 0.0),
            ],
            tau: 1.5,
        }
    }

    pub fn order(&self) -> usize {
        self.poles.len()
    }

    /// Impulse response `h(t)`.
    pub fn impulse_response(&self, t: f64) -> Complex64 {
        if t < self.tau {
            return Complex64::new(0.0, 0.0);
        }
        self.poles
            .iter()
            .zip(&self.coefficients)
            .map(|(&l, &c)| c * (l * (t - self.tau)).exp())
            .sum()
    }

    /// Transfer function `H_τ(s)`.
    pub fn transfer(&self, s: Complex64) -> Complex64 {
        let rational: Complex64 = self
            .poles
            .iter()
            .zip(&self.coefficients)
            .map(|(&l, &c)| c / (s - l))
            .sum();
        (-s * self.tau).exp() * rational
    }
}

/// The sample `h(m)`, in closed form.
pub fn delay_moment(spec: &DelaySystemSpec, m: usize) -> Complex64 {
    spec.impulse_response(m as f64)
}

/// `(1/2π) ∫_{-Ω}^{Ω} H_τ(iω) e^{iωm} dω` by the trapezoidal rule on
/// `points` nodes. Approximates [`delay_moment`] with an error that decays
/// like `1/Ω`; at `m = τ` it converges to half the jump.
pub fn delay_moment_fourier(spec: &DelaySystemSpec, m: usize, omega: f64, points: usize) -> Complex64 {
    let n = points.max(2);
    let h = 2.0 * omega / (n - 1) as f64;
    let mut sum = Complex64::new(0.0, 0.0);
    for j in 0..n {
        let w = -omega + h * j as f64;
        let s = Complex64::new(0.0, w);
        let weight = if j == 0 || j == n - 1 { 0.5 } else { 1.0 };
        sum += spec.transfer(s) * Complex64::from_polar(1.0, w * m as f64) * weight;
    }
    sum * h / (2.0 * PI)
}

/// Smallest integer step `m₀ ≥ max(τ, 1)` keeping every `m₀ Im(λ_k)` inside
/// `(-π, π)`, so that `λ ↦ e^{m₀ λ}` is invertible on the principal branch.
pub fn choose_m0(spec: &DelaySystemSpec) -> Result<usize> {
    let m0 = spec.tau.ceil().max(1.0) as usize;
    let max_im = spec.poles.iter().map(|p| p.im.abs()).fold(0.0, f64::max);
    if max_im * m0 as f64 >= PI {
        return Err(Error::InvalidParameter(format!(
            "no step m0 >= {m0} keeps m0·|Im λ| = {} below π",
            max_im * m0 as f64
        )));
    }
    Ok(m0)
}

/// `(0, h(m₀), h(2m₀), ...)` with `len` terms.
pub fn delay_sequence(spec: &DelaySystemSpec, m0: usize, len: usize) -> Result<MomentSequence> {
    if (m0 as f64) < spec.tau {
        return Err(Error::InvalidParameter(format!(
            "step m0 = {m0} is shorter than the delay {}",
            spec.tau
        )));
    }
    let values = (0..len)
        .map(|k| {
            if k == 0 {
                Complex64::new(0.0, 0.0)
            } else {
                delay_moment(spec, k * m0)
            }
        })
        .collect();
    MomentSequence::new(values, MomentSource::DelayDemo)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DelayMethod {
    Grop,
    Gb,
    Classical,
}

impl DelayMethod {
    pub fn tag(self) -> &'static str {
        match self {
            DelayMethod::Grop => "grop",
            DelayMethod::Gb => "gb",
            DelayMethod::Classical => "classical",
        }
    }
}

#[derive(Debug, Clone)]
pub struct DelayConfig {
    /// Sampling step; chosen by [`choose_m0`] when absent.
    pub m0: Option<usize>,
    pub truncation: usize,
    pub n_grid: usize,
    pub gb: GbConfig,
    /// Starting generating sequence for the GB route. The origin entry keeps
    /// the structural pole at 0 from ever dominating; the non-real entry
    /// breaks the modulus tie of a conjugate pole pair.
    pub gb_gen0: Vec<Complex64>,
}

impl Default for DelayConfig {
    fn default() -> Self {
        Self {
            m0: None,
            truncation: DEFAULT_TRUNCATION,
            n_grid: DEFAULT_GRID,
            gb: GbConfig::default(),
            gb_gen0: vec![Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.5)],
        }
    }
}

#[derive(Debug, Clone)]
pub struct DelayReport {
    pub method: DelayMethod,
    pub m0: usize,
    /// Recovered continuous-time poles.
    pub poles: Vec<Complex64>,
    /// Recovered discrete poles `α_k`.
    pub alphas: Vec<Complex64>,
    /// Root removed as the structural pole at the origin, if any.
    pub discarded: Option<Complex64>,
    /// Distance of each spec pole to its matched estimate, in spec order.
    pub errors: Vec<f64>,
    pub result: RecoveryResult,
    pub lifted: LiftedProblem,
}

impl DelayReport {
    pub fn max_error(&self) -> f64 {
        self.errors.iter().cloned().fold(0.0, f64::max)
    }
}

fn remove_nearest_zero(values: &mut Vec<Complex64>) -> Option<Complex64> {
    let (i, _) = values
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.norm().total_cmp(&b.1.norm()))?;
    Some(values.remove(i))
}

pub fn delay_demo(spec: &DelaySystemSpec, method: DelayMethod, cfg: &DelayConfig) -> Result<DelayReport> {
    let m0 = match cfg.m0 {
        Some(m) => m,
        None => choose_m0(spec)?,
    };
    let order = spec.order();
    let g = delay_sequence(spec, m0, cfg.truncation)?;
    let lifted = lift(g, Some(1.0), InverseMap::ExpLog { step: m0 as f64 })?;
    let mut warnings = Vec::new();

    let (mut result, alphas, discarded) = match method {
        DelayMethod::Grop => {
            let h: CircleSampling = lifted.sampling(cfg.n_grid)?;
            let mut gcfg = GropConfig::new(order + 1);
            gcfg.coefficients = CoefficientMethod::TmTriangular;
            let r = grop_recover(&h, &gcfg)?;
            let mut alphas: Vec<Complex64> = r.poles.iter().map(|p| p.conj() * lifted.weight).collect();
            let d = remove_nearest_zero(&mut alphas);
            (r, alphas, d)
        }
        DelayMethod::Classical => {
            let r = classical_prony(&lifted.moments.values, order + 1)?;
            let mut alphas = r.poles.clone();
            let d = remove_nearest_zero(&mut alphas);
            (r, alphas, d)
        }
        DelayMethod::Gb => {
            let h = lifted.sampling(cfg.n_grid)?;
            let gen0 = GeneratingSequence::from_complex(&cfg.gb_gen0)?;
            let rec = gb_recover_iterative(&h, &gen0, order, &cfg.gb)?;
            if rec.poles.len() < order {
                return Err(Error::NonConvergence {
                    last_delta: rec.diagnostics.last().map_or(f64::INFINITY, |d| d.final_delta),
                    tol: cfg.gb.tol,
                    steps: rec.diagnostics.len(),
                });
            }
            let alphas = rec.poles.iter().map(|p| p.value().conj() * lifted.weight).collect();
            (rec.into_result(), alphas, None)
        }
    };
    if let Some(d) = discarded {
        if d.norm() > 1e-6 {
            warnings.push(format!("root removed as the origin pole has modulus {:e}", d.norm()));
        }
    }
    let poles: Vec<Complex64> = alphas.iter().map(|&a| lifted.inverse_map.inverse(a)).collect();
    for (a, p) in alphas.iter().zip(&poles) {
        if (a.arg().abs() - PI).abs() < 1e-9 {
            warnings.push(format!("α = {a} lies on the branch cut; λ = {p} is ambiguous"));
        }
    }
    let mut errors = vec![f64::INFINITY; order];
    for m in match_poles(&poles, &spec.poles) {
        errors[m.truth] = m.distance;
    }
    result.diagnostics.warnings.extend(warnings);
    Ok(DelayReport {
        method,
        m0,
        poles,
        alphas,
        discarded,
        errors,
        result,
        lifted,
    })
}
