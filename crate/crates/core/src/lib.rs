//! Rational Prony and generalized Bernoulli parameter recovery.
//!
//! Signals are finite sums `H = Σ c_k r_{λ_k}` of Szegő kernels
//! `r_λ(z) = 1/(1 - conj(λ) z)` in the Hardy space of the unit disk, given
//! by samples on the unit circle. Two recovery routes are provided:
//!
//! * [`prony`]: moments `⟨(S*)^m H, 1⟩` and a Hankel solve, for a known
//!   number of poles.
//! * [`bernoulli`]: ratios of Takenaka-Malmquist coefficients, which
//!   converge to a function of the dominant pole; deflation by extending the
//!   generating sequence finds further poles one at a time.
//!
//! Coefficients come from an upper triangular system in the TM basis
//! ([`linear`]). Exponential moment problems of other kinds are reduced to
//! the rational case by a weighted Z-transform ([`lifting`]).
//!
//! ```
//! use hardy_prony::hardy::{DiskPoint, RationalAtomSet};
//! use hardy_prony::prony::{grop_recover, GropConfig};
//! use num_complex::Complex64;
//!
//! let poles = vec![
//!     DiskPoint::from_re_im(0.5, 0.2).unwrap(),
//!     DiskPoint::from_re_im(-0.3, -0.6).unwrap(),
//! ];
//! let coeffs = vec![Complex64::new(1.0, 0.0), Complex64::new(0.5, -1.0)];
//! let h = RationalAtomSet::new(poles, coeffs).unwrap().sampling(1024).unwrap();
//! let r = grop_recover(&h, &GropConfig::new(2)).unwrap();
//! assert_eq!(r.poles.len(), 2);
//! ```

pub mod bernoulli;
pub mod error;
pub mod experiments;
pub mod hardy;
pub mod io;
pub mod lifting;
pub mod linear;
pub mod numerics;
pub mod prony;

pub use error::{Error, Result};
