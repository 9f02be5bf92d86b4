//! Hardy space primitives on the unit disk.
//!
//! Functions in H² are represented by their samples on the uniform grid
//! `z_j = exp(2πij/N)`. The inner product is the trapezoidal rule for the
//! boundary integral, which is exact for trigonometric polynomials of
//! degree below `N`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Points closer than this to the unit circle are rejected as poles.
pub const BOUNDARY_MARGIN: f64 = 1e-12;

/// Default number of boundary samples.
pub const DEFAULT_GRID: usize = 4096;

/// A point strictly inside the unit disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskPoint(Complex64);

impl DiskPoint {
    pub fn new(z: Complex64) -> Result<Self> {
        let modulus = z.norm();
        if !modulus.is_finite() || modulus >= 1.0 - BOUNDARY_MARGIN {
            return Err(Error::OutsideDisk {
                re: z.re,
                im: z.im,
                modulus,
            });
        }
        Ok(DiskPoint(z))
    }

    pub fn from_re_im(re: f64, im: f64) -> Result<Self> {
        Self::new(Complex64::new(re, im))
    }

    pub fn origin() -> Self {
        DiskPoint(Complex64::new(0.0, 0.0))
    }

    #[inline]
    pub fn value(self) -> Complex64 {
        self.0
    }

    #[inline]
    pub fn modulus(self) -> f64 {
        self.0.norm()
    }
}

impl From<DiskPoint> for Complex64 {
    fn from(p: DiskPoint) -> Self {
        p.0
    }
}

/// Validate a slice of raw complex numbers as disk points.
pub fn disk_points(values: &[Complex64]) -> Result<Vec<DiskPoint>> {
    values.iter().map(|&z| DiskPoint::new(z)).collect()
}

/// Periodic generating sequence `a_n = a_{n mod p}` of a Takenaka-Malmquist system.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratingSequence {
    entries: Vec<DiskPoint>,
}

impl GeneratingSequence {
    pub fn new(entries: Vec<DiskPoint>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyGeneratingSequence);
        }
        Ok(Self { entries })
    }

    /// The period-1 sequence `(0)`, whose TM system is the monomial basis.
    pub fn zero() -> Self {
        Self {
            entries: vec![DiskPoint::origin()],
        }
    }

    pub fn from_complex(values: &[Complex64]) -> Result<Self> {
        Self::new(disk_points(values)?)
    }

    #[inline]
    pub fn period(&self) -> usize {
        self.entries.len()
    }

    #[inline]
    pub fn entry(&self, n: usize) -> DiskPoint {
        self.entries[n % self.entries.len()]
    }

    pub fn entries(&self) -> &[DiskPoint] {
        &self.entries
    }

    /// A new sequence with `a` appended to the period.
    pub fn extended(&self, a: DiskPoint) -> Self {
        let mut entries = self.entries.clone();
        entries.push(a);
        Self { entries }
    }
}

/// Blaschke factor `B_a(z) = (z - a) / (1 - conj(a) z)`.
#[inline]
pub fn blaschke(a: DiskPoint, z: Complex64) -> Complex64 {
    let a = a.0;
    (z - a) / (Complex64::new(1.0, 0.0) - a.conj() * z)
}

/// Product of the Blaschke factors over one period of `gen`.
pub fn blaschke_product(gen: &GeneratingSequence, z: Complex64) -> Complex64 {
    gen.entries
        .iter()
        .fold(Complex64::new(1.0, 0.0), |acc, &a| acc * blaschke(a, z))
}

/// Takenaka-Malmquist function
/// `Φ_n(z) = sqrt(1 - |a_n|²) / (1 - conj(a_n) z) · Π_{j<n} B_{a_j}(z)`.
pub fn tm_eval(gen: &GeneratingSequence, n: usize, z: Complex64) -> Complex64 {
    let p = gen.period();
    // Whole periods contribute a power of the period product.
    let full = blaschke_product(gen, z).powu((n / p) as u32);
    let partial = (0..n % p).fold(Complex64::new(1.0, 0.0), |acc, j| {
        acc * blaschke(gen.entry(j), z)
    });
    tm_head(gen.entry(n), z) * full * partial
}

#[inline]
fn tm_head(a: DiskPoint, z: Complex64) -> Complex64 {
    let a = a.0;
    Complex64::new((1.0 - a.norm_sqr()).sqrt(), 0.0) / (Complex64::new(1.0, 0.0) - a.conj() * z)
}

/// Boundary samples of a function on the uniform grid of the unit circle.
#[derive(Debug, Clone, PartialEq)]
pub struct CircleSampling {
    values: Vec<Complex64>,
}

impl CircleSampling {
    pub fn new(values: Vec<Complex64>) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::GridTooSmall {
                min: 2,
                got: values.len(),
            });
        }
        Ok(Self { values })
    }

    /// Sample `f` at the grid points `exp(2πij/n)`.
    pub fn from_fn(n: usize, f: impl Fn(Complex64) -> Complex64) -> Result<Self> {
        Self::new((0..n).map(|j| f(grid_point(j, n))).collect())
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.values.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    /// Quadrature for `(1/2π) ∫ f dt`, the value at the origin for analytic `f`.
    pub fn mean(&self) -> Complex64 {
        self.values.iter().sum::<Complex64>() / self.values.len() as f64
    }

    /// Root-mean-square of the samples, the discrete H² norm.
    pub fn norm(&self) -> f64 {
        (self.values.iter().map(|v| v.norm_sqr()).sum::<f64>() / self.values.len() as f64).sqrt()
    }

    pub fn check_same_grid(&self, other: &CircleSampling) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::GridMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(())
    }

    /// Linear combination `self + c · other` on a common grid.
    pub fn add_scaled(&self, c: Complex64, other: &CircleSampling) -> Result<CircleSampling> {
        self.check_same_grid(other)?;
        Ok(CircleSampling {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + c * b)
                .collect(),
        })
    }
}

/// Grid point `exp(2πij/n)`.
#[inline]
pub fn grid_point(j: usize, n: usize) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI * j as f64 / n as f64)
}

/// Discrete H² inner product `(1/N) Σ f_j conj(g_j)`.
pub fn h2_inner(f: &CircleSampling, g: &CircleSampling) -> Result<Complex64> {
    f.check_same_grid(g)?;
    let n = f.len() as f64;
    Ok(f.values
        .iter()
        .zip(&g.values)
        .map(|(a, b)| a * b.conj())
        .sum::<Complex64>()
        / n)
}

/// Samples of `Φ_n` on an `n_grid`-point grid.
pub fn tm_sampling(gen: &GeneratingSequence, n: usize, n_grid: usize) -> Result<CircleSampling> {
    CircleSampling::from_fn(n_grid, |z| tm_eval(gen, n, z))
}

/// Generates `Φ_0, Φ_1, ...` on a fixed grid by updating the running
/// Blaschke product, so each step costs one pass over the samples.
pub struct TmSweep<'a> {
    gen: &'a GeneratingSequence,
    grid: Vec<Complex64>,
    product: Vec<Complex64>,
    n: usize,
}

impl<'a> TmSweep<'a> {
    pub fn new(gen: &'a GeneratingSequence, n_grid: usize) -> Self {
        let grid: Vec<Complex64> = (0..n_grid).map(|j| grid_point(j, n_grid)).collect();
        Self {
            gen,
            product: vec![Complex64::new(1.0, 0.0); n_grid],
            grid,
            n: 0,
        }
    }

    /// Index of the function the next call to `next_values` yields.
    pub fn index(&self) -> usize {
        self.n
    }

    /// Samples of `Φ_n` for the current `n`, then advance.
    pub fn next_values(&mut self) -> Vec<Complex64> {
        let a = self.gen.entry(self.n);
        let out = self
            .grid
            .iter()
            .zip(&self.product)
            .map(|(&z, &p)| tm_head(a, z) * p)
            .collect();
        for (p, &z) in self.product.iter_mut().zip(&self.grid) {
            *p *= blaschke(a, z);
        }
        self.n += 1;
        out
    }

    /// `⟨f, Φ_n⟩` for the current `n`, then advance.
    pub fn next_coefficient(&mut self, f: &CircleSampling) -> Result<Complex64> {
        if f.len() != self.grid.len() {
            return Err(Error::GridMismatch {
                left: f.len(),
                right: self.grid.len(),
            });
        }
        let phi = self.next_values();
        Ok(f.values
            .iter()
            .zip(&phi)
            .map(|(a, b)| a * b.conj())
            .sum::<Complex64>()
            / f.len() as f64)
    }
}

/// Rational atom `r_λ(z) = 1 / (1 - conj(λ) z)`, the Szegő kernel at `λ`.
#[inline]
pub fn rational_atom(pole: DiskPoint, z: Complex64) -> Complex64 {
    Complex64::new(1.0, 0.0) / (Complex64::new(1.0, 0.0) - pole.0.conj() * z)
}

pub fn rational_atom_sampling(pole: DiskPoint, n_grid: usize) -> Result<CircleSampling> {
    CircleSampling::from_fn(n_grid, |z| rational_atom(pole, z))
}

/// Adjoint of the shift `f ↦ z f`: `(f - f(0)) / z`, with `f(0)` taken
/// as the grid mean.
pub fn adjoint_shift(f: &CircleSampling) -> CircleSampling {
    let n = f.len();
    let m = f.mean();
    CircleSampling {
        values: f
            .values
            .iter()
            .enumerate()
            .map(|(j, &v)| (v - m) * grid_point(j, n).conj())
            .collect(),
    }
}

/// A finite combination `Σ c_k r_{λ_k}` of rational atoms.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalAtomSet {
    pub poles: Vec<DiskPoint>,
    pub coefficients: Vec<Complex64>,
}

impl RationalAtomSet {
    pub fn new(poles: Vec<DiskPoint>, coefficients: Vec<Complex64>) -> Result<Self> {
        if poles.len() != coefficients.len() {
            return Err(Error::Dimension(format!(
                "{} poles but {} coefficients",
                poles.len(),
                coefficients.len()
            )));
        }
        Ok(Self {
            poles,
            coefficients,
        })
    }

    pub fn len(&self) -> usize {
        self.poles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poles.is_empty()
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.poles
            .iter()
            .zip(&self.coefficients)
            .map(|(&p, &c)| c * rational_atom(p, z))
            .sum()
    }

    pub fn sampling(&self, n_grid: usize) -> Result<CircleSampling> {
        CircleSampling::from_fn(n_grid, |z| self.eval(z))
    }

    /// Exact moments `Σ c_k conj(λ_k)^m` for `m = 0..count`.
    pub fn moments(&self, count: usize) -> Vec<Complex64> {
        (0..count)
            .map(|m| {
                self.poles
                    .iter()
                    .zip(&self.coefficients)
                    .map(|(p, &c)| c * p.0.conj().powu(m as u32))
                    .sum()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn blaschke_vanishes_at_its_zero() {
        let a = DiskPoint::from_re_im(0.5, 0.0).unwrap();
        assert!(blaschke(a, c(0.5, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn blaschke_is_unimodular_on_circle() {
        let a = DiskPoint::from_re_im(0.3, -0.6).unwrap();
        for j in 0..64 {
            let z = grid_point(j, 64);
            assert!((blaschke(a, z).norm() - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn boundary_points_rejected() {
        assert!(DiskPoint::from_re_im(1.0, 0.0).is_err());
        assert!(DiskPoint::new(c(0.0, 1.0 - 1e-13)).is_err());
        assert!(DiskPoint::new(c(f64::NAN, 0.0)).is_err());
        assert!(DiskPoint::new(c(0.0, 0.999)).is_ok());
    }

    #[test]
    fn zero_sequence_gives_monomials() {
        let gen = GeneratingSequence::zero();
        let z = c(0.3, 0.4);
        for n in 0..6 {
            assert!((tm_eval(&gen, n, z) - z.powu(n as u32)).norm() < 1e-15);
        }
    }

    #[test]
    fn tm_matches_direct_product() {
        let gen = GeneratingSequence::from_complex(&[c(0.2, 0.1), c(-0.5, 0.3), c(0.0, -0.7)]).unwrap();
        let z = c(0.1, -0.9);
        for n in 0..8 {
            let mut direct = tm_head(gen.entry(n), z);
            for j in 0..n {
                direct *= blaschke(gen.entry(j), z);
            }
            assert!((tm_eval(&gen, n, z) - direct).norm() < 1e-13);
        }
    }

    #[test]
    fn sweep_matches_pointwise() {
        let gen = GeneratingSequence::from_complex(&[c(0.4, 0.0), c(0.1, 0.5)]).unwrap();
        let mut sweep = TmSweep::new(&gen, 32);
        for n in 0..7 {
            let v = sweep.next_values();
            for (j, vj) in v.iter().enumerate() {
                assert!((vj - tm_eval(&gen, n, grid_point(j, 32))).norm() < 1e-13);
            }
        }
    }

    #[test]
    fn adjoint_shift_of_atom() {
        // S* r_λ = conj(λ) r_λ
        let p = DiskPoint::from_re_im(0.4, 0.3).unwrap();
        let r = rational_atom_sampling(p, 512).unwrap();
        let s = adjoint_shift(&r);
        for (a, b) in s.values().iter().zip(r.values()) {
            assert!((a - p.value().conj() * b).norm() < 1e-12);
        }
    }

    #[test]
    fn inner_product_reproduces_point_values() {
        // ⟨f, r_λ⟩ = f(λ)
        let p = DiskPoint::from_re_im(-0.3, 0.2).unwrap();
        let f = |z: Complex64| c(1.0, 0.5) + z * z * c(0.0, 2.0);
        let fs = CircleSampling::from_fn(256, f).unwrap();
        let r = rational_atom_sampling(p, 256).unwrap();
        assert!((h2_inner(&fs, &r).unwrap() - f(p.value())).norm() < 1e-13);
    }

    #[test]
    fn grid_mismatch_is_an_error() {
        let a = CircleSampling::from_fn(8, |z| z).unwrap();
        let b = CircleSampling::from_fn(16, |z| z).unwrap();
        assert!(matches!(h2_inner(&a, &b), Err(Error::GridMismatch { .. })));
    }
}
