use num_complex::Complex64;
use proptest::prelude::*;

use hardy_prony::experiments::delay::*;
use hardy_prony::experiments::rkhs::*;
use hardy_prony::prony::max_match_error;

/// Gauss-Legendre nodes and weights by Newton on the three-term recurrence,
/// independent of the crate's Legendre code.
fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    (0..n)
        .map(|i| {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, x);
                for k in 2..=n {
                    let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            (x, 2.0 / ((1.0 - x * x) * dp * dp))
        })
        .collect()
}

#[test]
fn normalized_legendre_orthonormal() {
    let q = gauss_legendre(40);
    for j in 0..=12 {
        for k in 0..=12 {
            let s: f64 = q.iter().map(|&(x, w)| w * legendre_normalized(j, x) * legendre_normalized(k, x)).sum();
            let want = if j == k { 1.0 } else { 0.0 };
            assert!((s - want).abs() < 1e-12, "({j},{k}) {s}");
        }
    }
}

#[test]
fn kernel_reproduces_polynomials() {
    // ⟨K(·, y), p⟩ = p(y) for polynomials of degree ≤ N.
    let q = gauss_legendre(30);
    let p = |x: f64| 1.0 - 2.0 * x + 0.5 * x.powi(3) - x.powi(6);
    for y in [-0.9, -0.3, 0.0, 0.55] {
        let s: f64 = q.iter().map(|&(x, w)| w * rkhs_kernel_eval(8, x, y) * p(x)).sum();
        assert!((s - p(y)).abs() < 1e-12);
    }
}

#[test]
fn delay_branch_safety() {
    let spec = DelaySystemSpec::reference();
    let m0 = choose_m0(&spec).unwrap();
    assert_eq!(m0, 2);
    let worst = spec.poles.iter().map(|l| (l * m0 as f64).im.abs()).fold(0.0, f64::max);
    assert!(worst < std::f64::consts::PI);
}

#[test]
fn delay_zero_root_isolated() {
    let spec = DelaySystemSpec::reference();
    let rep = delay_demo(&spec, DelayMethod::Grop, &DelayConfig::default()).unwrap();
    let d = rep.discarded.expect("order M+1 solve discards one root");
    assert!(d.norm() < 1e-6);
    assert_eq!(rep.poles.len(), spec.order());
}

#[test]
fn delay_methods_agree() {
    let spec = DelaySystemSpec::reference();
    let cfg = DelayConfig::default();
    let a = delay_demo(&spec, DelayMethod::Grop, &cfg).unwrap();
    let b = delay_demo(&spec, DelayMethod::Gb, &cfg).unwrap();
    assert!(max_match_error(&a.poles, &b.poles) < 1e-4);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn rkhs_cap_is_enforced(degree in 1usize..40, extra in 1usize..10) {
        let spec = RkhsDemoSpec::new(degree, vec![-0.8, 0.3], vec![Complex64::new(1.0, 0.0); 2], 1.0).unwrap();
        prop_assert!(rkhs_moments(&spec, degree + 1).is_ok());
        prop_assert!(rkhs_moments(&spec, degree + 1 + extra).is_err());
    }

    #[test]
    fn rkhs_moments_match_kernel_expansion(degree in 4usize..20, pole in -0.9..0.9f64) {
        // Brute force: the moment g_m is ⟨x^m, Σ c K(·, λ)⟩ = Σ c λ^m for m ≤ N,
        // computed here by quadrature against the kernel.
        let spec = RkhsDemoSpec::new(degree, vec![pole], vec![Complex64::new(1.5, 0.0)], 1.0).unwrap();
        let g = rkhs_moments(&spec, degree + 1).unwrap();
        let q = gauss_legendre(degree + 2);
        for (m, gm) in g.values.iter().enumerate() {
            let s: f64 = q.iter().map(|&(x, w)| w * x.powi(m as i32) * 1.5 * rkhs_kernel_eval(degree, x, pole)).sum();
            prop_assert!((gm.re - s).abs() < 1e-10 * (1.0 + s.abs()));
        }
    }
}
