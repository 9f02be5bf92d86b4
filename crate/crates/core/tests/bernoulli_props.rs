use std::f64::consts::PI;

use num_complex::Complex64;
use proptest::prelude::*;

use hardy_prony::bernoulli::*;
use hardy_prony::hardy::*;

fn disk(max: f64) -> impl Strategy<Value = Complex64> {
    (0.0..max, 0.0..2.0 * PI).prop_map(|(r, t)| Complex64::from_polar(r, t))
}

fn two_atom(l1: Complex64, l2: Complex64) -> CircleSampling {
    RationalAtomSet::new(
        vec![DiskPoint::new(l1).unwrap(), DiskPoint::new(l2).unwrap()],
        vec![Complex64::new(1.0, 0.0), Complex64::new(0.7, -0.4)],
    )
    .unwrap()
    .sampling(DEFAULT_GRID)
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn inversion_inverts_forward(lambda in disk(0.9), entries in prop::collection::vec(disk(0.8), 1..=3), n in 0usize..3) {
        let gen = GeneratingSequence::from_complex(&entries).unwrap();
        let n = n % gen.period();
        let u = tm_eval(&gen, n + 1, lambda).conj() / tm_eval(&gen, n, lambda).conj();
        let back = invert_tm_ratio(u, &gen, n).unwrap();
        prop_assert!((back.value() - lambda).norm() < 1e-12);
    }

    #[test]
    fn ladder_indices_step_by_period(entries in prop::collection::vec(disk(0.8), 1..=3), lambda in disk(0.8)) {
        let gen = GeneratingSequence::from_complex(&entries).unwrap();
        let h = rational_atom_sampling(DiskPoint::new(lambda).unwrap(), 1024).unwrap();
        let ladder = TmCoefficientLadder::from_sampling(&h, &gen, 0, 20, 1e-15).unwrap();
        for i in 1..ladder.len() {
            prop_assert_eq!(ladder.index(i) - ladder.index(i - 1), gen.period());
        }
    }

    #[test]
    fn converged_implies_small_delta(l1 in disk(0.9), l2 in disk(0.9)) {
        prop_assume!((l1 - l2).norm() > 0.05);
        let d = gb_probe(&two_atom(l1, l2), &GeneratingSequence::zero(), &GbConfig::default()).unwrap();
        if d.converged {
            prop_assert!(d.final_delta <= GbConfig::default().tol);
        }
    }

    #[test]
    fn deflation_excludes_found_pole(m1 in 0.5..0.9f64, ratio in 0.2..0.8f64, t1 in 0.0..2.0 * PI, t2 in 0.0..2.0 * PI) {
        let l1 = Complex64::from_polar(m1, t1);
        let l2 = Complex64::from_polar(m1 * ratio, t2);
        let r = gb_recover_iterative(&two_atom(l1, l2), &GeneratingSequence::zero(), 2, &GbConfig::default()).unwrap();
        let first = r.poles[0];
        let gen1 = GeneratingSequence::zero().extended(first);
        prop_assert_eq!(blaschke_product(&gen1, first.value()).norm(), 0.0);
        if let Some(second) = r.poles.get(1) {
            prop_assert!((second.value() - first.value()).norm() > 1e-3);
        }
    }

    #[test]
    fn equal_moduli_never_converge(m in 0.3..0.9f64, t1 in 0.0..2.0 * PI, dt in 0.5..(2.0 * PI - 0.5)) {
        let l1 = Complex64::from_polar(m, t1);
        let l2 = Complex64::from_polar(m, t1 + dt);
        let d = gb_probe(&two_atom(l1, l2), &GeneratingSequence::zero(), &GbConfig::default()).unwrap();
        prop_assert!(!d.converged);
    }
}

#[test]
fn rate_tracks_modulus_ratio() {
    for beta in [0.3, 0.5, 0.7] {
        let h = two_atom(Complex64::new(0.9, 0.0), Complex64::from_polar(0.9 * beta, 2.0));
        let cfg = GbConfig { k_max: 60, ..GbConfig::default() };
        let d = gb_probe(&h, &GeneratingSequence::zero(), &cfg).unwrap();
        let bhat = d.estimated_rate.unwrap();
        assert!((bhat - beta).abs() <= 0.2 * beta, "beta {beta} fitted {bhat}");
    }
}

#[test]
fn laguerre_coefficients_are_moments() {
    // With gen = (0) the TM system is the monomial basis, so the TM
    // coefficients of Σ c/(1 - conj(a) z) are Σ c conj(a)^n.
    let h = two_atom(Complex64::new(0.6, 0.2), Complex64::new(-0.3, 0.4));
    let coeffs = tm_fourier_coefficients(&h, &GeneratingSequence::zero(), 8).unwrap();
    for (n, c) in coeffs.iter().enumerate() {
        let want = Complex64::new(0.6, -0.2).powu(n as u32) + Complex64::new(0.7, -0.4) * Complex64::new(-0.3, -0.4).powu(n as u32);
        assert!((c - want).norm() < 1e-12);
    }
}
