use std::f64::consts::PI;

use num_complex::Complex64;
use proptest::prelude::*;

use hardy_prony::numerics::*;

fn entry() -> impl Strategy<Value = Complex64> {
    (-1.0..1.0f64, -1.0..1.0f64).prop_map(|(a, b)| Complex64::new(a, b))
}

fn matrix(r: usize, c: usize) -> impl Strategy<Value = CMatrix> {
    prop::collection::vec(entry(), r * c).prop_map(move |v| CMatrix::from_vec(r, c, v))
}

/// Roots in |z| ≤ 0.95 with pairwise separation ≥ 0.05, by rejection.
fn separated_roots() -> impl Strategy<Value = Vec<Complex64>> {
    prop::collection::vec((0.0..0.95f64, 0.0..2.0 * PI), 1..=12).prop_map(|raw| {
        let mut out: Vec<Complex64> = Vec::new();
        for (r, t) in raw {
            let z = Complex64::from_polar(r, t);
            if out.iter().all(|w| (w - z).norm() >= 0.05) {
                out.push(z);
            }
        }
        out
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn roots_round_trip(roots in separated_roots()) {
        let coeffs = monic_from_roots(&roots);
        let mut found = companion_eigenvalues(&coeffs).unwrap();
        prop_assert_eq!(found.len(), roots.len());
        for r in &roots {
            let (i, d) = found.iter().enumerate()
                .map(|(i, f)| (i, (f - r).norm()))
                .min_by(|a, b| a.1.total_cmp(&b.1)).unwrap();
            prop_assert!(d < 1e-10, "root {r} off by {d:e}");
            found.remove(i);
        }
    }

    #[test]
    fn residual_orthogonal_to_range(a in matrix(9, 4), b in prop::collection::vec(entry(), 9)) {
        let ls = least_squares_solve(&a, &b).unwrap();
        let x = CMatrix::from_vec(4, 1, ls.solution.clone());
        let bv = CMatrix::from_vec(9, 1, b.clone());
        let r = &a * x - bv;
        let g = a.adjoint() * r;
        let bound = 1e-10 * a.norm() * b.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
        prop_assert!(g.norm() <= bound.max(1e-300), "{:e} > {:e}", g.norm(), bound);
    }

    #[test]
    fn condition_submultiplicative(a in matrix(5, 5), u in matrix(5, 5)) {
        let lhs = condition_number_spectral(&(&u * &a));
        let rhs = condition_number_spectral(&a) * condition_number_spectral(&u);
        prop_assert!(lhs <= rhs * (1.0 + 1e-9));
    }
}
