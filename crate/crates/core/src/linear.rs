//! Linear-parameter recovery through an upper triangular TM system.
//!
//! With the generating sequence set to the poles themselves, `Φ_n` carries
//! the Blaschke factors of `λ_1..λ_n` and so vanishes at those poles. The
//! coefficient system `⟨H, Φ_n⟩ = Σ_k c_k conj(Φ_n(λ_k))` is therefore upper
//! triangular, and far better conditioned than the Vandermonde alternative.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hardy::{blaschke, CircleSampling, DiskPoint, GeneratingSequence, TmSweep};
use crate::numerics::{back_substitute_upper, condition_number_spectral, CMatrix};
use crate::prony::{duplicate_pairs, vandermonde_matrix};

/// Order in which poles enter the generating sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PoleOrder {
    #[default]
    DescendingModulus,
    AsGiven,
}

#[derive(Debug, Clone)]
pub struct TmTriangularSystem {
    /// Poles in generating-sequence order.
    pub poles: Vec<DiskPoint>,
    /// `permutation[i]` is the caller's index of `poles[i]`.
    pub permutation: Vec<usize>,
    pub matrix: CMatrix,
    pub rhs: Vec<Complex64>,
}

fn ordering(poles: &[DiskPoint], order: PoleOrder) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..poles.len()).collect();
    if order == PoleOrder::DescendingModulus {
        idx.sort_by(|&a, &b| poles[b].modulus().total_cmp(&poles[a].modulus()));
    }
    idx
}

/// Upper triangular matrix with entry `(n, k) = conj(Φ_n(λ_k))` for `n ≤ k`
/// and exact zeros below the diagonal.
pub fn tm_triangular_matrix(poles: &[DiskPoint]) -> CMatrix {
    let m = poles.len();
    let mut a = CMatrix::zeros(m, m);
    for (k, &lk) in poles.iter().enumerate() {
        let z = lk.value();
        let mut prod = Complex64::new(1.0, 0.0);
        for n in 0..=k {
            let an = poles[n].value();
            let head = (1.0 - an.norm_sqr()).sqrt() / (Complex64::new(1.0, 0.0) - an.conj() * z);
            a[(n, k)] = (head * prod).conj();
            prod *= blaschke(poles[n], z);
        }
    }
    a
}

pub fn build_tm_triangular(poles: &[DiskPoint], h: &CircleSampling, order: PoleOrder) -> Result<TmTriangularSystem> {
    if poles.is_empty() {
        return Err(Error::EmptyPolynomial);
    }
    let raw: Vec<Complex64> = poles.iter().map(|p| p.value()).collect();
    if let Some(&(i, j, distance)) = duplicate_pairs(&raw).first() {
        return Err(Error::DuplicatePoles { i, j, distance });
    }
    let permutation = ordering(poles, order);
    let ordered: Vec<DiskPoint> = permutation.iter().map(|&i| poles[i]).collect();
    let matrix = tm_triangular_matrix(&ordered);
    let gen = GeneratingSequence::new(ordered.clone())?;
    let mut sweep = TmSweep::new(&gen, h.len());
    let rhs = (0..ordered.len())
        .map(|_| sweep.next_coefficient(h))
        .collect::<Result<Vec<_>>>()?;
    Ok(TmTriangularSystem {
        poles: ordered,
        permutation,
        matrix,
        rhs,
    })
}

#[derive(Debug, Clone)]
pub struct LinearRecovery {
    /// Coefficients in the caller's pole order.
    pub coefficients: Vec<Complex64>,
    /// Spectral condition number of the triangular matrix.
    pub tm_condition: f64,
}

pub fn tm_triangular_recover(poles: &[DiskPoint], h: &CircleSampling, order: PoleOrder) -> Result<LinearRecovery> {
    let sys = build_tm_triangular(poles, h, order)?;
    let x = back_substitute_upper(&sys.matrix, &sys.rhs)?;
    let mut coefficients = vec![Complex64::new(0.0, 0.0); x.len()];
    for (i, &orig) in sys.permutation.iter().enumerate() {
        coefficients[orig] = x[i];
    }
    Ok(LinearRecovery {
        coefficients,
        tm_condition: condition_number_spectral(&sys.matrix),
    })
}

/// Spectral condition numbers of the two coefficient systems for one pole set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConditionComparison {
    pub vandermonde: f64,
    pub tm_triangular: f64,
}

pub fn compare_conditioning(poles: &[DiskPoint], order: PoleOrder) -> ConditionComparison {
    let idx = ordering(poles, order);
    let ordered: Vec<DiskPoint> = idx.iter().map(|&i| poles[i]).collect();
    let nodes: Vec<Complex64> = poles.iter().map(|p| p.value().conj()).collect();
    ConditionComparison {
        vandermonde: condition_number_spectral(&vandermonde_matrix(&nodes)),
        tm_triangular: condition_number_spectral(&tm_triangular_matrix(&ordered)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hardy::{rational_atom_sampling, tm_eval, RationalAtomSet};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn single_pole_system() {
        let p = DiskPoint::from_re_im(0.2, 0.0).unwrap();
        let h = rational_atom_sampling(p, 256).unwrap();
        let h = CircleSampling::new(h.values().iter().map(|v| v * 3.0).collect()).unwrap();
        let sys = build_tm_triangular(&[p], &h, PoleOrder::AsGiven).unwrap();
        let d = 1.0 / 0.96f64.sqrt();
        assert!((sys.matrix[(0, 0)] - c(d, 0.0)).norm() < 1e-14);
        assert!((sys.rhs[0] - c(3.0 * d, 0.0)).norm() < 1e-13);
        let r = tm_triangular_recover(&[p], &h, PoleOrder::AsGiven).unwrap();
        assert!((r.coefficients[0] - c(3.0, 0.0)).norm() < 1e-13);
    }

    #[test]
    fn structure_and_entries() {
        let poles = vec![
            DiskPoint::from_re_im(0.5, 0.1).unwrap(),
            DiskPoint::from_re_im(-0.2, 0.6).unwrap(),
        ];
        let a = tm_triangular_matrix(&poles);
        assert_eq!(a[(1, 0)], c(0.0, 0.0));
        let gen = GeneratingSequence::new(poles.clone()).unwrap();
        let want = tm_eval(&gen, 1, poles[1].value()).conj();
        assert!((a[(1, 1)] - want).norm() < 1e-14);
        assert!(a[(1, 1)].norm() > 0.1);
        // The structural zero agrees with evaluation.
        assert!(tm_eval(&gen, 1, poles[0].value()).norm() < 1e-15);
    }

    #[test]
    fn duplicate_poles_rejected() {
        let p = DiskPoint::from_re_im(0.3, 0.3).unwrap();
        let h = rational_atom_sampling(p, 64).unwrap();
        assert!(matches!(
            tm_triangular_recover(&[p, p], &h, PoleOrder::AsGiven),
            Err(Error::DuplicatePoles { .. })
        ));
    }

    #[test]
    fn equidistant_real_poles() {
        // Thirty poles on this interval are beyond double precision for any
        // coefficient solver; eight still separate the two conditionings.
        let m = 8;
        let poles: Vec<DiskPoint> = (0..m)
            .map(|k| DiskPoint::from_re_im(-0.9 + 0.2 * k as f64 / (m - 1) as f64, 0.0).unwrap())
            .collect();
        let coeffs: Vec<Complex64> = (0..m).map(|k| c(1.0 + 0.1 * k as f64, (k as f64).sin())).collect();
        let set = RationalAtomSet::new(poles.clone(), coeffs.clone()).unwrap();
        let h = set.sampling(4096).unwrap();
        let r = tm_triangular_recover(&poles, &h, PoleOrder::DescendingModulus).unwrap();
        let err = r
            .coefficients
            .iter()
            .zip(&coeffs)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        assert!(err < 1e-7, "max coefficient error {err:e}");
        let cmp = compare_conditioning(&poles, PoleOrder::DescendingModulus);
        assert!(cmp.vandermonde > 1e4 * cmp.tm_triangular, "{cmp:?}");
    }
}
