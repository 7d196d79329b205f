//! Truncated complex power series.
//!
//! A [`PowerSeries`] stores the Taylor coefficients `c_0 ..= c_N` of an
//! analytic function about the origin. Arithmetic between series of
//! different orders truncates to the smaller order. [`NormalizedSeries`]
//! is the refinement with `c_0 = 0` and `c_1 = 1`.

use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Deref, Mul, Neg, Sub};
use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default truncation degree.
pub const DEFAULT_ORDER: usize = 128;

/// Magnitude below which a constant term is treated as zero.
pub const ZERO_TOL: f64 = 1e-12;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Truncated Taylor series `sum_{n=0}^{N} c_n z^n` with complex coefficients.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "SeriesJson", into = "SeriesJson")]
pub struct PowerSeries {
    coeffs: Vec<Complex64>,
}

/// Wire format: `{"order": N, "coeffs": [[re, im], ...]}` with `N + 1` pairs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub order: usize,
    pub coeffs: Vec<[f64; 2]>,
}

impl TryFrom<SeriesJson> for PowerSeries {
    type Error = Error;

    fn try_from(json: SeriesJson) -> Result<Self> {
        if json.coeffs.len() != json.order + 1 {
            return Err(Error::BadSeries(format!(
                "order {} requires {} coefficients, found {}",
                json.order,
                json.order + 1,
                json.coeffs.len()
            )));
        }
        PowerSeries::new(
            json.coeffs
                .into_iter()
                .map(|[re, im]| Complex64::new(re, im))
                .collect(),
        )
    }
}

impl From<PowerSeries> for SeriesJson {
    fn from(s: PowerSeries) -> Self {
        SeriesJson {
            order: s.order(),
            coeffs: s.coeffs.iter().map(|c| [c.re, c.im]).collect(),
        }
    }
}

impl fmt::Debug for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown = self.coeffs.len().min(8);
        write!(f, "PowerSeries(order={}, [", self.order())?;
        for (i, c) in self.coeffs[..shown].iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        if shown < self.coeffs.len() {
            write!(f, ", ...")?;
        }
        write!(f, "])")
    }
}

impl PowerSeries {
    /// Builds a series from its coefficients. Rejects empty or non-finite input.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::BadSeries("no coefficients".into()));
        }
        if let Some(i) = coeffs.iter().position(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::BadSeries(format!("coefficient {i} is not finite")));
        }
        Ok(Self { coeffs })
    }

    /// Builds a series from real coefficients.
    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    /// Builds a series of the given order from a coefficient generator.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Complex64) -> Self {
        let coeffs: Vec<Complex64> = (0..=order).map(f).collect();
        debug_assert!(coeffs.iter().all(|c| c.re.is_finite() && c.im.is_finite()));
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![ZERO; order + 1] }
    }

    /// The constant series `c`.
    pub fn constant(c: Complex64, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The identity function `z`.
    pub fn identity(order: usize) -> Self {
        let mut s = Self::zero(order.max(1));
        s.coeffs[1] = ONE;
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Complex64 {
        self.coeffs.get(n).copied().unwrap_or(ZERO)
    }

    pub fn into_coeffs(self) -> Vec<Complex64> {
        self.coeffs
    }

    /// Truncates (or zero-pads) to the given order.
    pub fn with_order(&self, order: usize) -> Self {
        Self::from_fn(order, |n| self.coeff(n))
    }

    /// Horner evaluation of the truncated polynomial.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(ZERO, |acc, &c| acc * z + c)
    }

    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        Self::from_fn(self.order() - 1, |n| self.coeffs[n + 1] * (n as f64 + 1.0))
    }

    /// Term-by-term antiderivative vanishing at the origin; order grows by one.
    pub fn antiderivative(&self) -> Self {
        Self::from_fn(self.order() + 1, |n| {
            if n == 0 {
                ZERO
            } else {
                self.coeffs[n - 1] / n as f64
            }
        })
    }

    /// Cauchy product truncated to the smaller order.
    pub fn multiply(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![ZERO; order + 1];
        for (i, &a) in self.coeffs[..=order].iter().enumerate() {
            if a == ZERO {
                continue;
            }
            for (j, &b) in other.coeffs[..=order - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self { coeffs: out }
    }

    /// Multiplicative inverse via `r_0 = 1/c_0`, `r_n = -(sum_{k=1}^n c_k r_{n-k}) / c_0`.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = self.coeffs[0];
        if c0.norm() <= ZERO_TOL {
            return Err(Error::ZeroConstantTerm(c0.norm()));
        }
        let n_max = self.order();
        let inv0 = c0.inv();
        let mut r = Vec::with_capacity(n_max + 1);
        r.push(inv0);
        for n in 1..=n_max {
            let acc: Complex64 = (1..=n).map(|k| self.coeffs[k] * r[n - k]).sum();
            r.push(-acc * inv0);
        }
        Ok(Self { coeffs: r })
    }

    /// Hadamard (coefficientwise) product.
    pub fn hadamard(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::from_fn(order, |n| self.coeffs[n] * other.coeffs[n])
    }

    /// `f(rz)/r`, i.e. coefficients `c_n r^{n-1}`; keeps normalized series normalized.
    pub fn rescale(&self, r: f64) -> Result<Self> {
        if !(r > 0.0 && r <= 1.0) {
            return Err(Error::BadRadius(r));
        }
        let mut pw = 1.0 / r;
        Ok(Self::from_fn(self.order(), |n| {
            let c = self.coeffs[n] * pw;
            pw *= r;
            c
        }))
    }

    /// Multiplies every coefficient by `rho^n` (the series of `f(rho z)`).
    pub fn dilate(&self, rho: f64) -> Self {
        let mut pw = 1.0;
        Self::from_fn(self.order(), |n| {
            let c = self.coeffs[n] * pw;
            pw *= rho;
            c
        })
    }

    /// `f(z)/z`; the order drops by one. Fails unless `c_0` vanishes.
    pub fn divide_by_z(&self) -> Result<Self> {
        let c0 = self.coeffs[0];
        if c0.norm() > ZERO_TOL {
            return Err(Error::NonVanishingConstant(c0.norm()));
        }
        if self.order() == 0 {
            return Ok(Self::zero(0));
        }
        Ok(Self { coeffs: self.coeffs[1..].to_vec() })
    }

    /// `z f(z)`; the order grows by one.
    pub fn times_z(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(ZERO);
        coeffs.extend_from_slice(&self.coeffs);
        Self { coeffs }
    }

    pub fn scale(&self, k: Complex64) -> Self {
        Self::from_fn(self.order(), |n| self.coeffs[n] * k)
    }

    /// Largest coefficientwise distance, over the common order.
    pub fn max_coeff_diff(&self, other: &Self) -> f64 {
        let order = self.order().min(other.order());
        (0..=order)
            .map(|n| (self.coeffs[n] - other.coeffs[n]).norm())
            .fold(0.0, f64::max)
    }

    /// Values on the ring `z_j = r e^{2 pi i j / m}`, `j = 0..m`.
    pub fn eval_ring(&self, r: f64, m: usize) -> Vec<Complex64> {
        RingSampler::new(m).eval(self, r)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for &PowerSeries {
            type Output = PowerSeries;
            fn $method(self, rhs: &PowerSeries) -> PowerSeries {
                let order = self.order().min(rhs.order());
                PowerSeries::from_fn(order, |n| self.coeffs[n] $op rhs.coeffs[n])
            }
        }
        impl $trait for PowerSeries {
            type Output = PowerSeries;
            fn $method(self, rhs: PowerSeries) -> PowerSeries {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        self.multiply(rhs)
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        self.scale(-ONE)
    }
}

/// Normalized series: `c_0 = 0` and `c_1 = 1` exactly.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct NormalizedSeries(PowerSeries);

impl<'de> Deserialize<'de> for NormalizedSeries {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = PowerSeries::deserialize(d)?;
        NormalizedSeries::new(s).map_err(serde::de::Error::custom)
    }
}

impl NormalizedSeries {
    pub fn new(s: PowerSeries) -> Result<Self> {
        if s.order() < 1 || s.coeff(0) != ZERO || s.coeff(1) != ONE {
            return Err(Error::BadSeries(format!(
                "expected f(0) = 0 and f'(0) = 1, got c0 = {}, c1 = {}",
                s.coeff(0),
                s.coeff(1)
            )));
        }
        Ok(Self(s))
    }

    /// `z + sum_{n>=2} a_n z^n` from the tail `a_2, a_3, ...`.
    pub fn from_tail(tail: &[Complex64]) -> Self {
        let mut coeffs = vec![ZERO, ONE];
        coeffs.extend_from_slice(tail);
        Self(PowerSeries { coeffs })
    }

    pub fn identity(order: usize) -> Self {
        Self(PowerSeries::identity(order))
    }

    pub fn as_series(&self) -> &PowerSeries {
        &self.0
    }

    pub fn into_series(self) -> PowerSeries {
        self.0
    }

    /// `f(z)/z`, constant term 1.
    pub fn over_z(&self) -> PowerSeries {
        PowerSeries { coeffs: self.0.coeffs[1..].to_vec() }
    }

    /// Series of `z f'(z) / f(z)`; constant term is exactly 1.
    pub fn log_deriv_ratio(&self) -> Result<PowerSeries> {
        let df = self.0.derivative();
        let q = self.over_z().reciprocal()?;
        let mut out = df.multiply(&q);
        out.coeffs[0] = ONE;
        Ok(out)
    }

    /// `f(rz)/r`.
    pub fn rescale(&self, r: f64) -> Result<Self> {
        self.0.rescale(r).map(Self)
    }

    pub fn hadamard(&self, other: &NormalizedSeries) -> Self {
        Self(self.0.hadamard(&other.0))
    }
}

impl Deref for NormalizedSeries {
    type Target = PowerSeries;
    fn deref(&self) -> &PowerSeries {
        &self.0
    }
}

impl TryFrom<PowerSeries> for NormalizedSeries {
    type Error = Error;
    fn try_from(s: PowerSeries) -> Result<Self> {
        Self::new(s)
    }
}

/// `exp( int_0^z h(t)/t dt )` for `h(0) = 0`.
///
/// With `H_n = h_n / n` the result `E` satisfies `E_0 = 1` and
/// `n E_n = sum_{k=1}^n k H_k E_{n-k} = sum_{k=1}^n h_k E_{n-k}`.
pub fn exp_integral_transform(h: &PowerSeries) -> Result<PowerSeries> {
    let h0 = h.coeff(0);
    if h0.norm() > ZERO_TOL {
        return Err(Error::NonVanishingConstant(h0.norm()));
    }
    let order = h.order();
    let mut e = Vec::with_capacity(order + 1);
    e.push(ONE);
    for n in 1..=order {
        let acc: Complex64 = (1..=n).map(|k| h.coeffs[k] * e[n - k]).sum();
        e.push(acc / n as f64);
    }
    Ok(PowerSeries { coeffs: e })
}

/// Evaluates series on equally spaced points of a circle.
///
/// Coefficients are scaled by `r^n`, folded modulo the number of samples,
/// and transformed with one inverse FFT, so the cost is linear in the order.
#[derive(Clone)]
pub struct RingSampler {
    m: usize,
    fft: Arc<dyn Fft<f64>>,
}

impl RingSampler {
    pub fn new(m: usize) -> Self {
        assert!(m > 0, "ring needs at least one sample");
        let fft = FftPlanner::new().plan_fft_inverse(m);
        Self { m, fft }
    }

    pub fn samples(&self) -> usize {
        self.m
    }

    /// The sample point of index `j` on the ring of radius `r`.
    pub fn point(&self, r: f64, j: usize) -> Complex64 {
        Complex64::from_polar(r, 2.0 * PI * j as f64 / self.m as f64)
    }

    pub fn eval(&self, s: &PowerSeries, r: f64) -> Vec<Complex64> {
        let mut buf = vec![ZERO; self.m];
        let mut pw = 1.0;
        for (n, &c) in s.coeffs.iter().enumerate() {
            if pw < 1e-300 {
                break;
            }
            buf[n % self.m] += c * pw;
            pw *= r;
        }
        self.fft.process(&mut buf);
        buf
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn geometric_z(order: usize) -> PowerSeries {
        PowerSeries::from_fn(order, |n| if n == 0 { ZERO } else { ONE })
    }

    fn koebe(order: usize) -> NormalizedSeries {
        NormalizedSeries::new(PowerSeries::from_fn(order, |n| c(n as f64, 0.0))).unwrap()
    }

    #[test]
    fn eval_examples() {
        let id = PowerSeries::from_real(&[0.0, 1.0]).unwrap();
        assert_eq!(id.eval(c(0.5, 0.0)), c(0.5, 0.0));
        let f = PowerSeries::from_real(&[0.0, 1.0, 1.0]).unwrap();
        assert_eq!(f.eval(c(0.0, 1.0)), c(-1.0, 1.0));
        let g = geometric_z(50);
        assert_abs_diff_eq!(g.eval(c(0.5, 0.0)).re, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn derivative_examples() {
        let f = PowerSeries::from_real(&[0.0, 1.0, 1.0]).unwrap();
        assert_eq!(f.derivative(), PowerSeries::from_real(&[1.0, 2.0]).unwrap());
        let f = PowerSeries::from_real(&[0.0, 1.0, 0.0, 4.0]).unwrap();
        assert_eq!(f.derivative(), PowerSeries::from_real(&[1.0, 0.0, 12.0]).unwrap());
        let d = geometric_z(30).derivative();
        for n in 0..=d.order() {
            assert_eq!(d.coeff(n), c(n as f64 + 1.0, 0.0));
        }
        // 1/(1-z)^2 = sum (n+1) z^n, obtained as the square of 1/(1-z)
        let sq = PowerSeries::from_fn(30, |_| ONE).multiply(&PowerSeries::from_fn(30, |_| ONE));
        for n in 0..=d.order() {
            assert_eq!(sq.coeff(n), c(n as f64 + 1.0, 0.0));
        }
    }

    #[test]
    fn multiply_examples() {
        let z = PowerSeries::from_real(&[0.0, 1.0]).unwrap();
        assert_eq!(z.multiply(&z), PowerSeries::from_real(&[0.0, 0.0]).unwrap());
        let z2 = PowerSeries::identity(2);
        assert_eq!(z2.multiply(&z2), PowerSeries::from_real(&[0.0, 0.0, 1.0]).unwrap());
        let a = PowerSeries::from_real(&[1.0, 1.0, 0.0]).unwrap();
        let b = PowerSeries::from_real(&[1.0, -1.0, 0.0]).unwrap();
        assert_eq!(a.multiply(&b), PowerSeries::from_real(&[1.0, 0.0, -1.0]).unwrap());

        let one_minus_z = PowerSeries::from_real(&[1.0, -1.0]).unwrap().with_order(20);
        let geo = PowerSeries::from_fn(20, |_| ONE);
        let prod = one_minus_z.multiply(&geo);
        assert_eq!(prod.coeff(0), ONE);
        for n in 1..20 {
            assert_eq!(prod.coeff(n), ZERO);
        }
    }

    #[test]
    fn multiply_truncates_to_min_order() {
        let a = PowerSeries::from_fn(10, |_| ONE);
        let b = PowerSeries::from_fn(4, |_| ONE);
        assert_eq!(a.multiply(&b).order(), 4);
        assert_eq!(a.hadamard(&b).order(), 4);
        assert_eq!((&a + &b).order(), 4);
    }

    #[test]
    fn reciprocal_examples() {
        let r = PowerSeries::from_real(&[1.0, -1.0]).unwrap().with_order(10).reciprocal().unwrap();
        assert!(r.coeffs().iter().all(|&x| x == ONE));
        let r = PowerSeries::from_real(&[2.0, 0.0]).unwrap().reciprocal().unwrap();
        assert_eq!(r, PowerSeries::from_real(&[0.5, 0.0]).unwrap());

        let f = PowerSeries::from_real(&[1.0, 1.5, 0.5]).unwrap().with_order(40);
        let r = f.reciprocal().unwrap();
        let unit = f.multiply(&r);
        assert_abs_diff_eq!(unit.coeff(0).re, 1.0, epsilon = 1e-12);
        for n in 1..=40 {
            assert!(unit.coeff(n).norm() < 1e-12);
        }
        // partial fractions: 1/((1+z)(1+z/2)) = 2/(1+z) - 1/(1+z/2)
        for n in 0..=40 {
            let expect = 2.0 * (-1f64).powi(n as i32) - (-0.5f64).powi(n as i32);
            assert_abs_diff_eq!(r.coeff(n).re, expect, epsilon = 1e-12);
        }
    }

    #[test]
    fn reciprocal_rejects_zero_constant() {
        let f = PowerSeries::from_real(&[1e-13, 1.0]).unwrap();
        assert!(matches!(f.reciprocal(), Err(Error::ZeroConstantTerm(_))));
    }

    #[test]
    fn hadamard_kernel_identities() {
        let f = PowerSeries::new((0..=12).map(|n| c(n as f64 * 0.3 - 1.0, 0.1 * n as f64)).collect())
            .unwrap();
        let f = {
            let mut v = f.into_coeffs();
            v[0] = ZERO;
            v[1] = ONE;
            PowerSeries::new(v).unwrap()
        };
        let z = PowerSeries::identity(12);
        let lin = f.hadamard(&z);
        assert_eq!(lin.coeff(1), ONE);
        assert!(lin.coeffs().iter().enumerate().all(|(n, &x)| n == 1 || x == ZERO));

        assert_eq!(f.hadamard(&geometric_z(12)), f);

        let zdf = f.derivative().times_z();
        let k = koebe(12);
        assert_eq!(f.hadamard(&k), zdf);
    }

    #[test]
    fn log_deriv_ratio_examples() {
        let id = NormalizedSeries::identity(10);
        let q = id.log_deriv_ratio().unwrap();
        assert_eq!(q.coeff(0), ONE);
        assert!(q.coeffs()[1..].iter().all(|&x| x == ZERO));

        let q = koebe(40).log_deriv_ratio().unwrap();
        assert_eq!(q.coeff(0), ONE);
        for n in 1..=q.order() {
            assert_abs_diff_eq!(q.coeff(n).re, 2.0, epsilon = 1e-10);
            assert_abs_diff_eq!(q.coeff(n).im, 0.0, epsilon = 1e-10);
        }

        let g = NormalizedSeries::new(geometric_z(30)).unwrap();
        let q = g.log_deriv_ratio().unwrap();
        for n in 0..=q.order() {
            assert_abs_diff_eq!(q.coeff(n).re, 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn exp_integral_transform_examples() {
        let e = exp_integral_transform(&PowerSeries::zero(8)).unwrap();
        assert_eq!(e, PowerSeries::constant(ONE, 8));

        // h = 2z/(1-z): exp(-2 log(1-z)) = 1/(1-z)^2
        let h = PowerSeries::from_fn(30, |n| if n == 0 { ZERO } else { c(2.0, 0.0) });
        let e = exp_integral_transform(&h).unwrap();
        for n in 0..=30 {
            assert_abs_diff_eq!(e.coeff(n).re, n as f64 + 1.0, epsilon = 1e-9);
        }

        // h = -z/(1-z): exp(log(1-z)) = 1 - z
        let h = PowerSeries::from_fn(30, |n| if n == 0 { ZERO } else { -ONE });
        let e = exp_integral_transform(&h).unwrap();
        assert_abs_diff_eq!(e.coeff(0).re, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(e.coeff(1).re, -1.0, epsilon = 1e-12);
        for n in 2..=30 {
            assert!(e.coeff(n).norm() < 1e-12);
        }
    }

    #[test]
    fn exp_integral_transform_rejects_constant() {
        let h = PowerSeries::from_real(&[0.5, 1.0]).unwrap();
        assert!(matches!(exp_integral_transform(&h), Err(Error::NonVanishingConstant(_))));
    }

    #[test]
    fn rescale_examples() {
        let f = PowerSeries::from_real(&[0.0, 1.0, 1.0]).unwrap();
        assert_eq!(f.rescale(1.0).unwrap(), f);
        assert_eq!(f.rescale(0.5).unwrap(), PowerSeries::from_real(&[0.0, 1.0, 0.5]).unwrap());
        assert!(matches!(f.rescale(0.0), Err(Error::BadRadius(_))));
        assert!(matches!(f.rescale(1.5), Err(Error::BadRadius(_))));

        // order-1/2 starlikeness radius of the Koebe function is 1/3
        let k = koebe(400).rescale(1.0 / 3.0).unwrap();
        let q = k.log_deriv_ratio().unwrap();
        let min = q
            .eval_ring(1.0, 720)
            .iter()
            .map(|w| w.re)
            .fold(f64::INFINITY, f64::min);
        assert_abs_diff_eq!(min, 0.5, epsilon = 1e-9);
    }

    #[test]
    fn ring_sampler_matches_horner() {
        let f = PowerSeries::new((0..=300).map(|n| c((n as f64).sin(), 1.0 / (n as f64 + 1.0))).collect())
            .unwrap();
        let sampler = RingSampler::new(37);
        let vals = sampler.eval(&f, 0.93);
        for (j, v) in vals.iter().enumerate() {
            let direct = f.eval(sampler.point(0.93, j));
            assert!((v - direct).norm() < 1e-10, "j = {j}");
        }
    }

    #[test]
    fn json_shape() {
        let f = PowerSeries::from_real(&[0.0, 1.0, -0.25]).unwrap();
        let text = serde_json::to_string(&f).unwrap();
        assert_eq!(text, r#"{"order":2,"coeffs":[[0.0,0.0],[1.0,0.0],[-0.25,0.0]]}"#);
        let bad = r#"{"order":3,"coeffs":[[0.0,0.0]]}"#;
        assert!(serde_json::from_str::<PowerSeries>(bad).is_err());
        let nan = r#"{"order":0,"coeffs":[[NaN,0.0]]}"#;
        assert!(serde_json::from_str::<PowerSeries>(nan).is_err());
    }

    #[test]
    fn normalized_requires_exact_normalization() {
        assert!(NormalizedSeries::new(PowerSeries::from_real(&[0.0, 1.0, 3.0]).unwrap()).is_ok());
        assert!(NormalizedSeries::new(PowerSeries::from_real(&[0.0, 2.0]).unwrap()).is_err());
        assert!(NormalizedSeries::new(PowerSeries::from_real(&[0.1, 1.0]).unwrap()).is_err());
    }
}
