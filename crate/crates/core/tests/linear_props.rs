use num_complex::Complex64;
use proptest::prelude::*;

use hardy_prony::experiments::condnum::{allpass_poles, clustered_poles};
use hardy_prony::experiments::synthetic::{random_signal, rng};
use hardy_prony::hardy::{DiskPoint, DEFAULT_GRID};
use hardy_prony::linear::*;
use hardy_prony::prony::vandermonde_recover;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn tm_matches_vandermonde_on_small_instances(seed in any::<u64>(), m in 1usize..=5) {
        let set = random_signal(&mut rng(seed), m).unwrap();
        let h = set.sampling(DEFAULT_GRID).unwrap();
        let poles: Vec<Complex64> = set.poles.iter().map(|p| p.value()).collect();
        let tm = tm_triangular_recover(&set.poles, &h, PoleOrder::DescendingModulus).unwrap();
        let (vd, _) = vandermonde_recover(&poles, &set.moments(2 * m)).unwrap();
        for ((a, b), c) in tm.coefficients.iter().zip(&vd).zip(&set.coefficients) {
            prop_assert!((a - b).norm() < 1e-8);
            prop_assert!((a - c).norm() < 1e-8);
        }
    }

    #[test]
    fn strictly_lower_part_is_exactly_zero(seed in any::<u64>(), m in 1usize..=12) {
        let set = random_signal(&mut rng(seed), m).unwrap();
        let a = tm_triangular_matrix(&set.poles);
        for n in 0..m {
            for k in 0..n {
                prop_assert_eq!(a[(n, k)].re.to_bits(), 0u64);
                prop_assert_eq!(a[(n, k)].im.to_bits(), 0u64);
            }
        }
    }

    #[test]
    fn ordering_does_not_change_solution(seed in any::<u64>(), m in 2usize..=6) {
        let set = random_signal(&mut rng(seed), m).unwrap();
        let h = set.sampling(DEFAULT_GRID).unwrap();
        let a = tm_triangular_recover(&set.poles, &h, PoleOrder::DescendingModulus).unwrap();
        let b = tm_triangular_recover(&set.poles, &h, PoleOrder::AsGiven).unwrap();
        for (x, y) in a.coefficients.iter().zip(&b.coefficients) {
            prop_assert!((x - y).norm() < 1e-8);
        }
    }
}

fn near_boundary(poles: &[DiskPoint]) -> bool {
    poles.iter().any(|p| 1.0 - p.modulus() < 0.05)
}

#[test]
fn tm_dominates_near_boundary() {
    for seed in 0..3 {
        for poles in [allpass_poles(60, seed).unwrap(), clustered_poles(50, seed).unwrap()] {
            assert!(poles.len() >= 50 && near_boundary(&poles));
            let c = compare_conditioning(&poles, PoleOrder::DescendingModulus);
            assert!(c.tm_triangular <= 1e-6 * c.vandermonde, "{c:?}");
        }
    }
}
