//! Operator-based Prony method, rational realization.
//!
//! For `H = Σ c_k r_{λ_k}` the moments `g_m = mean((S*)^m H)` equal
//! `Σ c_k conj(λ_k)^m`, a sum of geometric sequences. The Hankel system
//! built from them yields a monic polynomial whose roots are `conj(λ_k)`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hardy::{adjoint_shift, CircleSampling, DiskPoint};
use crate::linear::tm_triangular_recover;
use crate::linear::PoleOrder;
use crate::numerics::{companion_eigenvalues, least_squares_min_norm, least_squares_solve, numerical_rank, CMatrix};

/// Recovered roots closer than this are flagged as a multiplicity violation.
pub const DUPLICATE_TOL: f64 = 1e-8;

/// Where a moment sequence came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MomentSource {
    GropQuadrature,
    DualScheme,
    DelayDemo,
    RkhsDemo,
    File,
}

impl MomentSource {
    pub fn tag(self) -> &'static str {
        match self {
            MomentSource::GropQuadrature => "grop-quadrature",
            MomentSource::DualScheme => "dual-scheme",
            MomentSource::DelayDemo => "delay-demo",
            MomentSource::RkhsDemo => "rkhs-demo",
            MomentSource::File => "file",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MomentSequence {
    pub values: Vec<Complex64>,
    pub source: MomentSource,
    /// Set when the moments were computed past the quadrature exactness bound.
    pub accuracy_warning: Option<String>,
}

impl MomentSequence {
    pub fn new(values: Vec<Complex64>, source: MomentSource) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InsufficientMoments { needed: 1, got: 0 });
        }
        Ok(Self {
            values,
            source,
            accuracy_warning: None,
        })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }
}

/// Monic polynomial `z^M + Σ_{k<M} p_k z^k`, stored as `[p_0, ..., p_{M-1}]`.
#[derive(Debug, Clone, PartialEq)]
pub struct PronyPolynomial {
    pub coeffs: Vec<Complex64>,
}

impl PronyPolynomial {
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(1.0, 0.0), |acc, &c| acc * z + c)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Grop,
    Gop,
    Bernoulli,
    Classical,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::Grop => "grop",
            Method::Gop => "gop",
            Method::Bernoulli => "gb",
            Method::Classical => "classical",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Diagnostics {
    /// Spectral condition number of the Hankel (sampling) matrix, when one was solved.
    pub hankel_condition: Option<f64>,
    /// Hankel least-squares residual, or the last ratio increment for GB.
    pub residual: f64,
    pub method: Method,
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RecoveryResult {
    pub poles: Vec<Complex64>,
    pub coefficients: Option<Vec<Complex64>>,
    pub diagnostics: Diagnostics,
}

/// `g_m` for `m = 0..count`: the grid mean of the m-fold adjoint shift of `h`.
pub fn grop_moments(h: &CircleSampling, count: usize) -> MomentSequence {
    let mut values = Vec::with_capacity(count);
    let mut f = h.clone();
    for m in 0..count {
        values.push(f.mean());
        if m + 1 < count {
            f = adjoint_shift(&f);
        }
    }
    let accuracy_warning = (count > h.len() / 2).then(|| {
        format!(
            "{count} moments from a {}-point grid exceeds the quadrature exactness bound {}",
            h.len(),
            h.len() / 2
        )
    });
    MomentSequence {
        values,
        source: MomentSource::GropQuadrature,
        accuracy_warning,
    }
}

/// Default row count minus one: `2M - 1`, reduced to fit the available moments.
pub fn default_rows(order: usize, available: usize) -> usize {
    let cap = available.saturating_sub(order + 1);
    (2 * order).saturating_sub(1).min(cap).max(order.saturating_sub(1))
}

/// Hankel matrix `(g_{m+j})` of size `(n+1) × order` and right-hand side `-g_{m+order}`.
pub fn build_hankel(g: &[Complex64], order: usize, n: usize) -> Result<(CMatrix, Vec<Complex64>)> {
    if order == 0 {
        return Err(Error::EmptyPolynomial);
    }
    if n + 1 < order {
        return Err(Error::InvalidParameter(format!(
            "need at least {order} Hankel rows, got {}",
            n + 1
        )));
    }
    let needed = n + order + 1;
    if g.len() < needed {
        return Err(Error::InsufficientMoments {
            needed,
            got: g.len(),
        });
    }
    let a = CMatrix::from_fn(n + 1, order, |m, j| g[m + j]);
    let b = (0..=n).map(|m| -g[m + order]).collect();
    Ok((a, b))
}

/// Conditioning and fit of a Hankel solve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HankelSolve {
    pub condition: f64,
    pub residual: f64,
    pub rank: usize,
}

/// Least-squares Prony polynomial of the given order from `n + 1` Hankel rows.
/// Fails on a numerically rank-deficient Hankel matrix.
pub fn solve_prony(g: &[Complex64], order: usize, n: usize) -> Result<(PronyPolynomial, HankelSolve)> {
    solve_prony_with(g, order, n, true)
}

/// As [`solve_prony`]; with `require_full_rank = false` a rank-deficient
/// system gets its minimum-norm solution instead of an error.
pub fn solve_prony_with(g: &[Complex64], order: usize, n: usize, require_full_rank: bool) -> Result<(PronyPolynomial, HankelSolve)> {
    let (a, b) = build_hankel(g, order, n)?;
    let ls = if require_full_rank {
        least_squares_solve(&a, &b)?
    } else {
        least_squares_min_norm(&a, &b)?
    };
    Ok((
        PronyPolynomial {
            coeffs: ls.solution,
        },
        HankelSolve {
            condition: ls.condition,
            residual: ls.residual_norm,
            rank: ls.rank,
        },
    ))
}

pub fn prony_roots(poly: &PronyPolynomial) -> Result<Vec<Complex64>> {
    companion_eigenvalues(&poly.coeffs)
}

/// Largest `|Σ_{k=0}^{M} p_k g_{m+k}|` over all available `m`, with `p_M = 1`.
pub fn annihilation_residual(poly: &PronyPolynomial, g: &[Complex64]) -> f64 {
    let order = poly.order();
    if g.len() <= order {
        return 0.0;
    }
    (0..g.len() - order)
        .map(|m| {
            let s: Complex64 = poly
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, &p)| p * g[m + k])
                .sum();
            (s + g[m + order]).norm()
        })
        .fold(0.0, f64::max)
}

/// Pairs of roots closer than [`DUPLICATE_TOL`].
pub fn duplicate_pairs(roots: &[Complex64]) -> Vec<(usize, usize, f64)> {
    let mut out = Vec::new();
    for i in 0..roots.len() {
        for j in (i + 1)..roots.len() {
            let d = (roots[i] - roots[j]).norm();
            if d < DUPLICATE_TOL {
                out.push((i, j, d));
            }
        }
    }
    out
}

fn duplicate_warnings(roots: &[Complex64]) -> Vec<String> {
    duplicate_pairs(roots)
        .into_iter()
        .map(|(i, j, d)| format!("roots {i} and {j} coincide within {d:e}"))
        .collect()
}

/// Least-squares solve of `Σ_k x_k node_k^m = g_m`, `m = 0..M-1`.
/// Returns the solution and the condition number of the Vandermonde matrix.
pub fn vandermonde_solve(nodes: &[Complex64], g: &[Complex64]) -> Result<(Vec<Complex64>, f64)> {
    let m = nodes.len();
    if m == 0 {
        return Err(Error::EmptyPolynomial);
    }
    if g.len() < m {
        return Err(Error::InsufficientMoments {
            needed: m,
            got: g.len(),
        });
    }
    if let Some(&(i, j, distance)) = duplicate_pairs(nodes).first() {
        return Err(Error::DuplicatePoles { i, j, distance });
    }
    let v = vandermonde_matrix(nodes);
    let svd = v.clone().svd(true, true);
    let smax = svd.singular_values.max();
    let smin = svd.singular_values.min();
    let rhs = nalgebra::DVector::from_column_slice(&g[..m]);
    // Plain pseudo-inverse without rank truncation: an ill-conditioned
    // Vandermonde system is still solved, its condition is reported.
    let x = svd
        .solve(&rhs, 0.0)
        .map_err(|e| Error::Dimension(e.to_string()))?;
    let cond = if smin == 0.0 { f64::INFINITY } else { smax / smin };
    Ok((x.iter().cloned().collect(), cond))
}

/// Transposed Vandermonde matrix with entry `(m, k) = node_k^m`.
pub fn vandermonde_matrix(nodes: &[Complex64]) -> CMatrix {
    let m = nodes.len();
    CMatrix::from_fn(m, m, |row, k| nodes[k].powu(row as u32))
}

/// Coefficients of `Σ c_k r_{λ_k}` from its moments: Vandermonde nodes `conj(λ_k)`.
pub fn vandermonde_recover(poles: &[Complex64], g: &[Complex64]) -> Result<(Vec<Complex64>, f64)> {
    let nodes: Vec<Complex64> = poles.iter().map(|p| p.conj()).collect();
    vandermonde_solve(&nodes, g)
}

/// Classical Prony on a sum of geometric sequences `g_m = Σ c_k z_k^m`:
/// Hankel solve, rooting, and Vandermonde recovery, with no quadrature.
/// The reported poles are the bases `z_k`.
pub fn classical_prony(g: &[Complex64], order: usize) -> Result<RecoveryResult> {
    let n = default_rows(order, g.len());
    let (poly, solve) = solve_prony(g, order, n)?;
    let roots = prony_roots(&poly)?;
    let warnings = duplicate_warnings(&roots);
    let coefficients = if warnings.is_empty() {
        Some(vandermonde_solve(&roots, g)?.0)
    } else {
        None
    };
    Ok(RecoveryResult {
        poles: roots,
        coefficients,
        diagnostics: Diagnostics {
            hankel_condition: Some(solve.condition),
            residual: solve.residual,
            method: Method::Classical,
            warnings,
        },
    })
}

/// How the GROP pipeline computes coefficients after pole recovery.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoefficientMethod {
    TmTriangular,
    Vandermonde,
    None,
}

#[derive(Debug, Clone, Copy)]
pub struct GropConfig {
    pub order: usize,
    /// Hankel rows minus one; `None` uses `2M - 1`.
    pub rows: Option<usize>,
    pub coefficients: CoefficientMethod,
    /// Solve rank-deficient Hankel systems in the minimum-norm sense instead of failing.
    pub allow_rank_deficient: bool,
}

impl GropConfig {
    pub fn new(order: usize) -> Self {
        Self {
            order,
            rows: None,
            coefficients: CoefficientMethod::TmTriangular,
            allow_rank_deficient: false,
        }
    }
}

/// Full rational pipeline on boundary samples: moments, Hankel solve, roots,
/// conjugation back to poles, then coefficients.
pub fn grop_recover(h: &CircleSampling, cfg: &GropConfig) -> Result<RecoveryResult> {
    let order = cfg.order;
    if order == 0 {
        return Err(Error::EmptyPolynomial);
    }
    let n = cfg.rows.unwrap_or(2 * order - 1);
    let moments = grop_moments(h, n + order + 1);
    let (poly, solve) = solve_prony_with(&moments.values, order, n, !cfg.allow_rank_deficient)?;
    let roots = prony_roots(&poly)?;
    let poles: Vec<Complex64> = roots.iter().map(|r| r.conj()).collect();
    let mut warnings = duplicate_warnings(&poles);
    if solve.rank < order {
        warnings.push(format!(
            "Hankel matrix has numerical rank {} < order {order}; minimum-norm solution used",
            solve.rank
        ));
    }
    if let Some(w) = &moments.accuracy_warning {
        warnings.push(w.clone());
    }
    let mut inside = true;
    for p in &poles {
        if let Err(e) = DiskPoint::new(*p) {
            if !cfg.allow_rank_deficient {
                return Err(e);
            }
            warnings.push(format!("recovered root rejected: {e}"));
            inside = false;
        }
    }
    let coefficients = if inside && duplicate_pairs(&poles).is_empty() {
        match cfg.coefficients {
            CoefficientMethod::TmTriangular => {
                let pts = crate::hardy::disk_points(&poles)?;
                Some(tm_triangular_recover(&pts, h, PoleOrder::DescendingModulus)?.coefficients)
            }
            CoefficientMethod::Vandermonde => Some(vandermonde_recover(&poles, &moments.values)?.0),
            CoefficientMethod::None => None,
        }
    } else {
        None
    };
    Ok(RecoveryResult {
        poles,
        coefficients,
        diagnostics: Diagnostics {
            hankel_condition: Some(solve.condition),
            residual: solve.residual,
            method: Method::Grop,
            warnings,
        },
    })
}

/// Outcome of a rank test on an evaluation-scheme matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Admissibility {
    pub admissible: bool,
    pub rank: usize,
}

/// A scheme is admissible for `order` atoms iff its value matrix has rank `order`.
pub fn check_admissibility(matrix: &CMatrix, order: usize) -> Admissibility {
    if matrix.nrows() < order || matrix.ncols() != order {
        let rank = if matrix.is_empty() { 0 } else { numerical_rank(matrix) };
        return Admissibility {
            admissible: false,
            rank,
        };
    }
    let rank = numerical_rank(matrix);
    Admissibility {
        admissible: rank == order,
        rank,
    }
}

/// Values `c_k φ_k^m` of an exponential scheme, `m = 0..rows`.
pub fn exponential_scheme_matrix(phi: &[Complex64], weights: &[Complex64], rows: usize) -> CMatrix {
    CMatrix::from_fn(rows, phi.len(), |m, k| weights[k] * phi[k].powu(m as u32))
}

/// A pairing of an estimated pole with a reference pole.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoleMatch {
    pub estimated: usize,
    pub truth: usize,
    pub distance: f64,
}

/// Greedy nearest-neighbour matching: repeatedly pair the closest unmatched
/// estimate and reference. Returns `min(len)` pairs.
pub fn match_poles(estimated: &[Complex64], truth: &[Complex64]) -> Vec<PoleMatch> {
    let mut pairs: Vec<PoleMatch> = Vec::with_capacity(estimated.len() * truth.len());
    for (i, e) in estimated.iter().enumerate() {
        for (j, t) in truth.iter().enumerate() {
            pairs.push(PoleMatch {
                estimated: i,
                truth: j,
                distance: (e - t).norm(),
            });
        }
    }
    pairs.sort_by(|a, b| a.distance.total_cmp(&b.distance));
    let mut used_e = vec![false; estimated.len()];
    let mut used_t = vec![false; truth.len()];
    let mut out = Vec::new();
    for p in pairs {
        if !used_e[p.estimated] && !used_t[p.truth] {
            used_e[p.estimated] = true;
            used_t[p.truth] = true;
            out.push(p);
        }
    }
    out.sort_by_key(|p| p.truth);
    out
}

/// Largest matched distance; infinite if the sets differ in size.
pub fn max_match_error(estimated: &[Complex64], truth: &[Complex64]) -> f64 {
    if estimated.len() != truth.len() {
        return f64::INFINITY;
    }
    match_poles(estimated, truth)
        .iter()
        .map(|m| m.distance)
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hardy::{rational_atom_sampling, RationalAtomSet};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn real(v: &[f64]) -> Vec<Complex64> {
        v.iter().map(|&x| c(x, 0.0)).collect()
    }

    #[test]
    fn moments_of_scaled_atom() {
        let p = DiskPoint::from_re_im(0.5, 0.0).unwrap();
        let h = rational_atom_sampling(p, 256).unwrap();
        let h = CircleSampling::new(h.values().iter().map(|v| v * 2.0).collect()).unwrap();
        let g = grop_moments(&h, 3);
        for (a, b) in g.values.iter().zip(&real(&[2.0, 1.0, 0.5])) {
            assert!((a - b).norm() < 1e-14);
        }
        assert!(g.accuracy_warning.is_none());
    }

    #[test]
    fn moments_of_symmetric_pair() {
        let set = RationalAtomSet::new(
            vec![DiskPoint::from_re_im(0.3, 0.0).unwrap(), DiskPoint::from_re_im(-0.3, 0.0).unwrap()],
            real(&[1.0, 1.0]),
        )
        .unwrap();
        let g = grop_moments(&set.sampling(256).unwrap(), 3);
        for (a, b) in g.values.iter().zip(&real(&[2.0, 0.0, 0.18])) {
            assert!((a - b).norm() < 1e-14);
        }
    }

    #[test]
    fn moments_past_exactness_bound_warn() {
        let h = CircleSampling::from_fn(16, |_| c(1.0, 0.0)).unwrap();
        assert!(grop_moments(&h, 9).accuracy_warning.is_some());
        assert!(grop_moments(&h, 8).accuracy_warning.is_none());
    }

    #[test]
    fn hankel_indexing() {
        let g = real(&[2.0, 1.0, 0.5, 0.25]);
        let (a, b) = build_hankel(&g, 1, 1).unwrap();
        assert_eq!(a.shape(), (2, 1));
        assert_eq!(a[(0, 0)], c(2.0, 0.0));
        assert_eq!(a[(1, 0)], c(1.0, 0.0));
        assert_eq!(b, real(&[-1.0, -0.5]));
    }

    #[test]
    fn hankel_needs_enough_moments() {
        let g = real(&[1.0, 2.0, 3.0]);
        assert!(matches!(
            build_hankel(&g, 2, 1),
            Err(Error::InsufficientMoments { needed: 4, got: 3 })
        ));
    }

    #[test]
    fn single_atom_annihilator() {
        let (poly, _) = solve_prony(&real(&[2.0, 1.0, 0.5, 0.25]), 1, 1).unwrap();
        assert!((poly.coeffs[0] - c(-0.5, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn two_pole_polynomial_matches_expansion() {
        // poles 0.3 and 0.5i: the Hankel sees conj-poles 0.3 and -0.5i.
        // (z - 0.3)(z + 0.5i) = z² + (-0.3 + 0.5i) z - 0.15i
        let set = RationalAtomSet::new(
            vec![DiskPoint::from_re_im(0.3, 0.0).unwrap(), DiskPoint::from_re_im(0.0, 0.5).unwrap()],
            vec![c(1.0, 0.0), c(0.7, -0.2)],
        )
        .unwrap();
        let g = set.moments(8);
        let (poly, _) = solve_prony(&g, 2, 1).unwrap();
        assert!((poly.coeffs[0] - c(0.0, -0.15)).norm() < 1e-10);
        assert!((poly.coeffs[1] - c(-0.3, 0.5)).norm() < 1e-10);
        let (poly3, _) = solve_prony(&g, 2, 3).unwrap();
        assert!((poly3.coeffs[0] - poly.coeffs[0]).norm() < 1e-10);
    }

    #[test]
    fn rank_deficiency_on_overestimated_order() {
        let g: Vec<Complex64> = (0..10).map(|m| c(0.5f64.powi(m), 0.0)).collect();
        assert!(matches!(solve_prony(&g, 2, 3), Err(Error::RankDeficient { .. })));
    }

    #[test]
    fn classical_single_geometric() {
        let g: Vec<Complex64> = (0..4).map(|m| c(0.9f64.powi(m), 0.0)).collect();
        let r = classical_prony(&g, 1).unwrap();
        assert!((r.poles[0] - c(0.9, 0.0)).norm() < 1e-12);
        assert!((r.coefficients.unwrap()[0] - c(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn classical_two_geometrics() {
        let g: Vec<Complex64> = (0..8)
            .map(|m| c(2.0 * 0.5f64.powi(m) + 3.0 * (-0.4f64).powi(m), 0.0))
            .collect();
        let r = classical_prony(&g, 2).unwrap();
        let coeffs = r.coefficients.clone().unwrap();
        let matches = match_poles(&r.poles, &real(&[0.5, -0.4]));
        let want = [2.0, 3.0];
        for m in &matches {
            assert!(m.distance < 1e-9);
            assert!((coeffs[m.estimated] - c(want[m.truth], 0.0)).norm() < 1e-9);
        }
    }

    #[test]
    fn vandermonde_single_and_pair() {
        let (x, _) = vandermonde_recover(&[c(0.5, 0.0)], &real(&[2.0, 1.0])).unwrap();
        assert!((x[0] - c(2.0, 0.0)).norm() < 1e-14);
        let g: Vec<Complex64> = (0..2)
            .map(|m| c(2.0 * 0.5f64.powi(m) + 3.0 * (-0.4f64).powi(m), 0.0))
            .collect();
        let (x, cond) = vandermonde_recover(&real(&[0.5, -0.4]), &g).unwrap();
        assert!((x[0] - c(2.0, 0.0)).norm() < 1e-12);
        assert!((x[1] - c(3.0, 0.0)).norm() < 1e-12);
        assert!(cond > 1.0 && cond < 10.0);
    }

    #[test]
    fn vandermonde_rejects_duplicate_nodes() {
        let r = vandermonde_recover(&real(&[0.5, 0.5]), &real(&[1.0, 1.0]));
        assert!(matches!(r, Err(Error::DuplicatePoles { .. })));
    }

    #[test]
    fn admissibility_cases() {
        let phi = vec![c(0.5, 0.1), c(-0.3, 0.0), c(0.0, 0.8)];
        let w = vec![c(1.0, 0.0), c(0.5, 0.5), c(2.0, 0.0)];
        let ok = check_admissibility(&exponential_scheme_matrix(&phi, &w, 3), 3);
        assert_eq!(ok, Admissibility { admissible: true, rank: 3 });
        let dup = vec![c(0.5, 0.1), c(0.5, 0.1), c(0.0, 0.8)];
        assert!(!check_admissibility(&exponential_scheme_matrix(&dup, &w, 5), 3).admissible);
        let zero_w = vec![c(1.0, 0.0), c(0.0, 0.0), c(2.0, 0.0)];
        assert!(!check_admissibility(&exponential_scheme_matrix(&phi, &zero_w, 5), 3).admissible);
        assert!(!check_admissibility(&exponential_scheme_matrix(&phi, &w, 2), 3).admissible);
    }

    #[test]
    fn greedy_matching() {
        let est = vec![c(0.51, 0.0), c(-0.1, 0.0)];
        let truth = vec![c(-0.12, 0.0), c(0.5, 0.0)];
        let m = match_poles(&est, &truth);
        assert_eq!(m[0].estimated, 1);
        assert_eq!(m[1].estimated, 0);
        assert!((max_match_error(&est, &truth) - 0.02).abs() < 1e-12);
    }

    #[test]
    fn grop_pipeline_three_poles() {
        let poles = vec![c(0.6, 0.2), c(-0.4, 0.5), c(0.1, -0.7)];
        let coeffs = vec![c(1.0, 0.5), c(-0.8, 0.0), c(0.3, 1.2)];
        let set = RationalAtomSet::new(crate::hardy::disk_points(&poles).unwrap(), coeffs.clone()).unwrap();
        let r = grop_recover(&set.sampling(1024).unwrap(), &GropConfig::new(3)).unwrap();
        let rc = r.coefficients.clone().unwrap();
        for m in match_poles(&r.poles, &poles) {
            assert!(m.distance < 1e-10);
            assert!((rc[m.estimated] - coeffs[m.truth]).norm() < 1e-9);
        }
        assert_eq!(r.diagnostics.method, Method::Grop);
    }
}
