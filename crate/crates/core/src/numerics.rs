//! Dense complex linear algebra used by the recovery pipelines.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type CMatrix = DMatrix<Complex64>;

/// Result of an SVD-based least-squares solve.
#[derive(Debug, Clone)]
pub struct LeastSquares {
    pub solution: Vec<Complex64>,
    /// Euclidean norm of `A x - b`.
    pub residual_norm: f64,
    pub rank: usize,
    /// Spectral condition number of `A`.
    pub condition: f64,
}

fn rank_threshold(sv: &[f64], rows: usize, cols: usize) -> f64 {
    let smax = sv.iter().cloned().fold(0.0, f64::max);
    smax * rows.max(cols) as f64 * f64::EPSILON
}

pub fn singular_values(a: &CMatrix) -> Vec<f64> {
    a.clone().svd(false, false).singular_values.iter().cloned().collect()
}

/// Number of singular values above `σ_max · max(rows, cols) · ε`.
pub fn numerical_rank(a: &CMatrix) -> usize {
    let sv = singular_values(a);
    let tol = rank_threshold(&sv, a.nrows(), a.ncols());
    sv.iter().filter(|&&s| s > tol).count()
}

/// `σ_max / σ_min`; infinite for a singular matrix.
pub fn condition_number_spectral(a: &CMatrix) -> f64 {
    let sv = singular_values(a);
    if sv.is_empty() {
        return f64::INFINITY;
    }
    let smax = sv.iter().cloned().fold(0.0, f64::max);
    let smin = sv.iter().cloned().fold(f64::INFINITY, f64::min);
    if smin == 0.0 {
        f64::INFINITY
    } else {
        smax / smin
    }
}

/// Minimum-norm least-squares solution of `A x ≈ b`. Fails if `A` does not
/// have full column rank.
pub fn least_squares_solve(a: &CMatrix, b: &[Complex64]) -> Result<LeastSquares> {
    let ls = least_squares_min_norm(a, b)?;
    if ls.rank < a.ncols() {
        return Err(Error::RankDeficient {
            rank: ls.rank,
            expected: a.ncols(),
        });
    }
    Ok(ls)
}

/// Truncated-SVD least squares that accepts rank deficiency and reports the rank.
pub fn least_squares_min_norm(a: &CMatrix, b: &[Complex64]) -> Result<LeastSquares> {
    if a.nrows() != b.len() {
        return Err(Error::Dimension(format!(
            "matrix has {} rows, right-hand side has {}",
            a.nrows(),
            b.len()
        )));
    }
    let svd = a.clone().svd(true, true);
    let sv: Vec<f64> = svd.singular_values.iter().cloned().collect();
    let tol = rank_threshold(&sv, a.nrows(), a.ncols());
    let rank = sv.iter().filter(|&&s| s > tol).count();
    let bv = DVector::from_column_slice(b);
    let x = svd
        .solve(&bv, tol)
        .map_err(|e| Error::Dimension(e.to_string()))?;
    let residual_norm = (a * &x - &bv).norm();
    let smax = sv.iter().cloned().fold(0.0, f64::max);
    let smin = sv.iter().cloned().fold(f64::INFINITY, f64::min);
    Ok(LeastSquares {
        solution: x.iter().cloned().collect(),
        residual_norm,
        rank,
        condition: if smin == 0.0 { f64::INFINITY } else { smax / smin },
    })
}

/// Roots of the monic polynomial `z^M + p_{M-1} z^{M-1} + ... + p_0`,
/// given `coeffs = [p_0, ..., p_{M-1}]`.
///
/// Eigenvalues of the companion matrix from a complex Schur form, each
/// refined by Newton steps on the polynomial while the residual shrinks.
pub fn companion_eigenvalues(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    let m = coeffs.len();
    if m == 0 {
        return Err(Error::EmptyPolynomial);
    }
    if m == 1 {
        return Ok(vec![-coeffs[0]]);
    }
    let mut c = CMatrix::zeros(m, m);
    for i in 1..m {
        c[(i, i - 1)] = Complex64::new(1.0, 0.0);
    }
    for (i, &p) in coeffs.iter().enumerate() {
        c[(i, m - 1)] = -p;
    }
    let schur = nalgebra::linalg::Schur::try_new(c, f64::EPSILON, 10_000).ok_or(Error::EigenFailure)?;
    let eig = schur.eigenvalues().ok_or(Error::EigenFailure)?;
    Ok(eig.iter().map(|&z| polish_root(coeffs, z)).collect())
}

fn eval_monic(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    // Horner for value and derivative.
    let mut p = Complex64::new(1.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

fn polish_root(coeffs: &[Complex64], mut z: Complex64) -> Complex64 {
    let (mut p, mut dp) = eval_monic(coeffs, z);
    for _ in 0..3 {
        if dp.norm() == 0.0 {
            break;
        }
        let cand = z - p / dp;
        let (pc, dpc) = eval_monic(coeffs, cand);
        if !(pc.norm() < p.norm()) {
            break;
        }
        z = cand;
        p = pc;
        dp = dpc;
    }
    z
}

/// Coefficients `[p_0, ..., p_{M-1}]` of the monic polynomial with the given roots.
pub fn monic_from_roots(roots: &[Complex64]) -> Vec<Complex64> {
    let mut p = vec![Complex64::new(1.0, 0.0)];
    for &r in roots {
        let mut q = vec![Complex64::new(0.0, 0.0); p.len() + 1];
        for (i, &pi) in p.iter().enumerate() {
            q[i + 1] += pi;
            q[i] -= r * pi;
        }
        p = q;
    }
    p.pop();
    p
}

/// Solve `U x = b` for upper triangular `U`, ignoring entries below the diagonal.
pub fn back_substitute_upper(u: &CMatrix, b: &[Complex64]) -> Result<Vec<Complex64>> {
    let n = u.nrows();
    if u.ncols() != n || b.len() != n {
        return Err(Error::Dimension(format!(
            "{}x{} system with right-hand side of length {}",
            u.nrows(),
            u.ncols(),
            b.len()
        )));
    }
    let mut x = vec![Complex64::new(0.0, 0.0); n];
    for i in (0..n).rev() {
        let d = u[(i, i)];
        if d.norm() <= f64::MIN_POSITIVE || !d.norm().is_finite() {
            return Err(Error::ZeroPivot { index: i });
        }
        let s: Complex64 = ((i + 1)..n).map(|k| u[(i, k)] * x[k]).sum();
        x[i] = (b[i] - s) / d;
    }
    Ok(x)
}
