//! Generalized Bernoulli (GB) pole iteration.
//!
//! For `H = Σ c_k r_{λ_k}` the TM-Fourier coefficients are
//! `⟨H, Φ_ν⟩ = Σ c_k conj(Φ_ν(λ_k))`. Along the ladder `ν_k = n + p·k` of a
//! `p`-periodic system each term scales by `conj(B_gen(λ_k))` per step, so
//! the ratio `⟨H, Φ_{ν+1}⟩ / ⟨H, Φ_ν⟩` tends to
//! `conj(Φ_{n+1}(λ₁)) / conj(Φ_n(λ₁))` for the pole maximizing `|B_gen|`,
//! at rate `β = |B_gen(λ₂)| / |B_gen(λ₁)|`.
//!
//! The limit is extracted with iterated Aitken Δ² and read off where the
//! accelerated sequence moves least. Coefficients below a noise floor
//! relative to `‖H‖` are discarded, since their ratios carry no signal.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hardy::{CircleSampling, DiskPoint, GeneratingSequence, TmSweep};
use crate::prony::{Diagnostics, Method, RecoveryResult};

/// Coefficients below this absolute size are treated as underflow.
pub const UNDERFLOW: f64 = 1e-300;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GbConfig {
    /// Ladder offset `n` in `[0, p)`.
    pub offset: usize,
    pub tol: f64,
    pub k_max: usize,
    /// Number of Aitken Δ² passes; 0 uses raw ratios.
    pub aitken_depth: usize,
    /// Ladder coefficients below `noise_floor · ‖H‖` end the ladder.
    pub noise_floor: f64,
    /// Looser increment bound accepted when the ladder hits the noise floor
    /// before reaching `tol`; no further precision is available then.
    pub stall_tol: f64,
}

impl Default for GbConfig {
    fn default() -> Self {
        Self {
            offset: 0,
            tol: 1e-8,
            k_max: 200,
            aitken_depth: 3,
            noise_floor: 1e-15,
            stall_tol: 1e-5,
        }
    }
}

/// TM coefficient pairs `(c_{ν_k}, c_{ν_k + 1})` along `ν_k = n + p·k`.
#[derive(Debug, Clone)]
pub struct TmCoefficientLadder {
    pub gen: GeneratingSequence,
    pub offset: usize,
    /// Ladder step of the first stored pair.
    pub start: usize,
    pub pairs: Vec<(Complex64, Complex64)>,
    /// Absolute size below which a coefficient is noise.
    pub floor: f64,
    /// Why the ladder is shorter than requested, if it is.
    pub truncation: Option<String>,
}

impl TmCoefficientLadder {
    /// Coefficient index `ν` of the `i`-th stored pair.
    pub fn index(&self, i: usize) -> usize {
        self.offset + self.gen.period() * (self.start + i)
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn ratios(&self) -> Vec<Complex64> {
        self.pairs.iter().map(|(a, b)| b / a).collect()
    }

    /// Build a ladder from `H`, computing coefficients only as far as needed.
    pub fn from_sampling(h: &CircleSampling, gen: &GeneratingSequence, offset: usize, k_max: usize, noise_floor: f64) -> Result<Self> {
        let p = gen.period();
        if offset >= p {
            return Err(Error::InvalidParameter(format!(
                "ladder offset {offset} must be below the period {p}"
            )));
        }
        let floor = (noise_floor * h.norm()).max(UNDERFLOW);
        let mut sweep = TmSweep::new(gen, h.len());
        let mut coeff = Vec::new();
        let mut pairs = Vec::new();
        let mut truncation = None;
        let mut start = 0;
        for k in 0..=k_max {
            let nu = offset + p * k;
            while coeff.len() <= nu + 1 {
                coeff.push(sweep.next_coefficient(h)?);
            }
            let a = coeff[nu];
            if a.norm() < floor {
                if pairs.is_empty() {
                    // Structural zeros at the bottom of the ladder carry no
                    // information about the tail; start after them.
                    start = k + 1;
                    continue;
                }
                truncation = Some(format!(
                    "coefficient at index {nu} is below the noise floor {floor:e}; ladder truncated at k = {k}"
                ));
                break;
            }
            pairs.push((a, coeff[nu + 1]));
        }
        Ok(Self {
            gen: gen.clone(),
            offset,
            start,
            pairs,
            floor,
            truncation,
        })
    }
}

/// `⟨H, Φ_n⟩` for `n = 0..=n_max`.
pub fn tm_fourier_coefficients(h: &CircleSampling, gen: &GeneratingSequence, n_max: usize) -> Result<Vec<Complex64>> {
    let mut sweep = TmSweep::new(gen, h.len());
    (0..=n_max).map(|_| sweep.next_coefficient(h)).collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct GbDiagnostics {
    pub estimated_limit: Complex64,
    /// `|r_k - r_{k-1}|` of the raw ratios.
    pub deltas: Vec<f64>,
    /// Increment of the (accelerated) sequence at the selected index.
    pub final_delta: f64,
    pub converged: bool,
    /// The ladder ended at the noise floor before the increment reached `tol`.
    pub noise_limited: bool,
    /// Fitted per-step contraction of the raw deltas, if enough clean steps exist.
    pub estimated_rate: Option<f64>,
    /// Ratios available on the ladder.
    pub steps: usize,
    pub aitken_depth: usize,
    pub truncation: Option<String>,
}

fn aitken(r: &[Complex64]) -> Vec<Complex64> {
    (2..r.len())
        .map(|i| {
            let d1 = r[i] - r[i - 1];
            let d0 = r[i - 1] - r[i - 2];
            let den = d1 - d0;
            if den.norm() <= f64::EPSILON * r[i].norm().max(f64::MIN_POSITIVE) {
                r[i]
            } else {
                r[i] - d1 * d1 / den
            }
        })
        .collect()
}

/// Deltas must exceed their noise estimate by this factor to enter the rate fit.
const RATE_FIT_MARGIN: f64 = 100.0;

/// Slope of `log δ_k` over the leading deltas that stand clear of
/// `noise[k]`, as a per-step rate.
fn fit_rate(deltas: &[f64], noise: &[f64]) -> Option<f64> {
    let clean: Vec<(usize, f64)> = deltas
        .iter()
        .zip(noise)
        .take_while(|(d, n)| **d > RATE_FIT_MARGIN * **n)
        .map(|(d, _)| *d)
        .enumerate()
        .collect();
    if clean.len() < 2 {
        return None;
    }
    // The early steps carry the subdominant transients; fit the tail half.
    let start = if clean.len() >= 6 { clean.len() / 2 } else { 0 };
    let pts = &clean[start..];
    let n = pts.len() as f64;
    let mx = pts.iter().map(|(i, _)| *i as f64).sum::<f64>() / n;
    let my = pts.iter().map(|(_, d)| d.ln()).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|(i, _)| (*i as f64 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|(i, d)| (*i as f64 - mx) * (d.ln() - my)).sum();
    if sxx == 0.0 {
        return None;
    }
    Some((sxy / sxx).exp())
}

/// Estimate the ratio limit along a ladder.
pub fn gb_ratio_estimate(ladder: &TmCoefficientLadder, tol: f64, aitken_depth: usize) -> Result<GbDiagnostics> {
    if ladder.is_empty() {
        return Err(Error::ZeroLadder);
    }
    let ratios = ladder.ratios();
    let deltas: Vec<f64> = ratios.windows(2).map(|w| (w[1] - w[0]).norm()).collect();
    // Rounding in a coefficient of size |c| perturbs its ratio by about |r| floor / |c|.
    let noise: Vec<f64> = ladder
        .pairs
        .iter()
        .zip(&ratios)
        .skip(1)
        .map(|((a, _), r)| r.norm() * ladder.floor / a.norm())
        .collect();
    let mut depth = aitken_depth;
    // Each pass shortens the sequence by two; keep at least three terms.
    while depth > 0 && ratios.len() < 2 * depth + 3 {
        depth -= 1;
    }
    let mut seq = ratios.clone();
    for _ in 0..depth {
        seq = aitken(&seq);
    }
    let (estimated_limit, final_delta) = if seq.len() < 2 {
        (seq[seq.len() - 1], f64::INFINITY)
    } else {
        let (i, d) = seq
            .windows(2)
            .map(|w| (w[1] - w[0]).norm())
            .enumerate()
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap();
        (seq[i + 1], d)
    };
    let converged = final_delta <= tol && estimated_limit.norm().is_finite();
    Ok(GbDiagnostics {
        estimated_limit,
        final_delta,
        converged,
        noise_limited: !converged && ladder.truncation.is_some() && estimated_limit.norm().is_finite(),
        estimated_rate: fit_rate(&deltas, &noise),
        deltas,
        steps: ratios.len(),
        aitken_depth: depth,
        truncation: ladder.truncation.clone(),
    })
}

impl GbDiagnostics {
    /// Converged, or noise-limited with an increment within `stall_tol`.
    pub fn accepted(&self, stall_tol: f64) -> bool {
        self.converged || (self.noise_limited && self.final_delta <= stall_tol)
    }
}

/// Invert the TM ratio map: the `λ` whose conjugated ratio
/// `conj(Φ_{n+1}(λ)) / conj(Φ_n(λ))` equals `limit`.
pub fn invert_tm_ratio(limit: Complex64, gen: &GeneratingSequence, n: usize) -> Result<DiskPoint> {
    let an = gen.entry(n).value();
    let an1 = gen.entry(n + 1).value();
    let kappa = ((1.0 - an1.norm_sqr()) / (1.0 - an.norm_sqr())).sqrt();
    // The only conjugation of the GB limit in the pipeline.
    let u = limit.conj() / kappa;
    DiskPoint::new((u + an) / (Complex64::new(1.0, 0.0) + an1.conj() * u))
}

/// A dominant pole together with the ladder diagnostics that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct DominantPole {
    pub pole: DiskPoint,
    pub diagnostics: GbDiagnostics,
}

/// Ladder diagnostics for `H` and `gen` without deciding convergence.
pub fn gb_probe(h: &CircleSampling, gen: &GeneratingSequence, cfg: &GbConfig) -> Result<GbDiagnostics> {
    let ladder = TmCoefficientLadder::from_sampling(h, gen, cfg.offset, cfg.k_max, cfg.noise_floor)?;
    gb_ratio_estimate(&ladder, cfg.tol, cfg.aitken_depth)
}

/// The `B_gen`-dominant pole of `H`. Fails with `NonConvergence` when the
/// ratio sequence does not settle, e.g. when two poles tie in dominance.
pub fn gb_find_dominant(h: &CircleSampling, gen: &GeneratingSequence, cfg: &GbConfig) -> Result<DominantPole> {
    let diagnostics = gb_probe(h, gen, cfg)?;
    if !diagnostics.accepted(cfg.stall_tol) {
        return Err(Error::NonConvergence {
            last_delta: diagnostics.final_delta,
            tol: cfg.tol,
            steps: diagnostics.steps,
        });
    }
    let pole = invert_tm_ratio(diagnostics.estimated_limit, gen, cfg.offset)?;
    Ok(DominantPole { pole, diagnostics })
}

/// Poles found by repeated dominant-pole search with deflation.
#[derive(Debug, Clone)]
pub struct GbRecovery {
    pub poles: Vec<DiskPoint>,
    pub diagnostics: Vec<GbDiagnostics>,
    /// Why the search stopped before `count` poles, if it did.
    pub terminated: Option<String>,
    /// Generating sequence after the last deflation.
    pub final_gen: GeneratingSequence,
}

impl GbRecovery {
    pub fn into_result(self) -> RecoveryResult {
        let residual = self.diagnostics.last().map_or(f64::NAN, |d| d.final_delta);
        let mut warnings: Vec<String> = self.terminated.into_iter().collect();
        for (i, d) in self.diagnostics.iter().enumerate() {
            if let Some(t) = &d.truncation {
                warnings.push(format!("stage {i}: {t}"));
            }
            if d.noise_limited {
                warnings.push(format!(
                    "stage {i}: accepted at the noise floor with increment {:e}",
                    d.final_delta
                ));
            }
        }
        RecoveryResult {
            poles: self.poles.iter().map(|p| p.value()).collect(),
            coefficients: None,
            diagnostics: Diagnostics {
                hankel_condition: None,
                residual,
                method: Method::Bernoulli,
                warnings,
            },
        }
    }
}

/// Find up to `count` poles in dominance order. Each found pole is appended
/// to the generating sequence, which zeroes its Blaschke product there and
/// removes it from later dominance contests.
pub fn gb_recover_iterative(h: &CircleSampling, gen0: &GeneratingSequence, count: usize, cfg: &GbConfig) -> Result<GbRecovery> {
    if count == 0 {
        return Err(Error::InvalidParameter("pole count must be at least 1".into()));
    }
    let mut gen = gen0.clone();
    let mut poles = Vec::new();
    let mut diagnostics = Vec::new();
    let mut terminated = None;
    for stage in 0..count {
        let found = gb_probe(h, &gen, cfg).and_then(|d| {
            if d.accepted(cfg.stall_tol) {
                let pole = invert_tm_ratio(d.estimated_limit, &gen, cfg.offset)?;
                Ok((pole, d))
            } else {
                Err(Error::NonConvergence {
                    last_delta: d.final_delta,
                    tol: cfg.tol,
                    steps: d.steps,
                })
            }
        });
        match found {
            Ok((pole, d)) => {
                poles.push(pole);
                diagnostics.push(d);
                gen = gen.extended(pole);
            }
            Err(e) => {
                terminated = Some(format!("stage {stage}: {e}"));
                break;
            }
        }
    }
    Ok(GbRecovery {
        poles,
        diagnostics,
        terminated,
        final_gen: gen,
    })
}
