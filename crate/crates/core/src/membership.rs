//! Grid-based membership checks for the generator and starlike classes.
//!
//! Every check samples the relevant functional on concentric rings of a
//! [`GridSpec`] and reduces to a single witness value. A series must be
//! truncated at an order where its tail is negligible on the outermost
//! ring; [`GridSpec::recommended_order`] gives a safe choice for functions
//! with bounded coefficients.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{exp_integral_transform, NormalizedSeries, PowerSeries, RingSampler, ZERO_TOL};

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Sampling grid for "for all z in the disk" predicates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub radii: Vec<f64>,
    pub angular_samples: usize,
    pub margin: f64,
}

impl Default for GridSpec {
    fn default() -> Self {
        let mut radii: Vec<f64> = (1..=9).map(|i| i as f64 / 10.0).collect();
        radii.extend([0.99, 0.999]);
        Self { radii, angular_samples: 720, margin: 1e-9 }
    }
}

impl GridSpec {
    /// `rings` equally spaced radii `r_max * i / rings`, `i = 1..=rings`.
    pub fn with_rings(rings: usize, r_max: f64, angular_samples: usize) -> Result<Self> {
        let radii = (1..=rings).map(|i| r_max * i as f64 / rings as f64).collect();
        let g = Self { radii, angular_samples, margin: 1e-9 };
        g.validate()?;
        Ok(g)
    }

    /// The default radii with every ring above `r_max` dropped and `r_max` appended.
    pub fn up_to(r_max: f64) -> Self {
        let mut g = Self::default();
        g.radii.retain(|&r| r < r_max);
        g.radii.push(r_max);
        g
    }

    pub fn validate(&self) -> Result<()> {
        if self.radii.is_empty() {
            return Err(Error::BadParams("grid has no rings".into()));
        }
        if self.radii.iter().any(|&r| !(r > 0.0 && r < 1.0)) {
            return Err(Error::BadParams("grid radii must lie in (0, 1)".into()));
        }
        if self.radii.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::BadParams("grid radii must be strictly increasing".into()));
        }
        if self.angular_samples < 8 {
            return Err(Error::BadParams("need at least 8 angular samples".into()));
        }
        if !(self.margin >= 0.0) {
            return Err(Error::BadParams("margin must be non-negative".into()));
        }
        Ok(())
    }

    pub fn max_radius(&self) -> f64 {
        self.radii.iter().copied().fold(0.0, f64::max)
    }

    /// A power-of-two truncation order with `r_max^N < 1e-14`.
    pub fn recommended_order(&self) -> usize {
        let n = (1e-14f64.ln() / self.max_radius().ln()).ceil() as usize;
        n.next_power_of_two().max(64)
    }

    /// Calls `visit(z, values)` for every grid point, ring by ring, where
    /// `values[i]` is `series[i]` evaluated at `z`.
    fn sample(&self, series: &[&PowerSeries], mut visit: impl FnMut(Complex64, &[Complex64])) {
        let ring = RingSampler::new(self.angular_samples);
        let mut buf = vec![Complex64::new(0.0, 0.0); series.len()];
        for &r in &self.radii {
            let vals: Vec<Vec<Complex64>> = series.iter().map(|s| ring.eval(s, r)).collect();
            for j in 0..self.angular_samples {
                for (b, v) in buf.iter_mut().zip(&vals) {
                    *b = v[j];
                }
                visit(ring.point(r, j), &buf);
            }
        }
    }
}

/// Outcome of a grid membership check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MembershipReport {
    pub member: bool,
    /// The minimized functional; `member` holds exactly when this exceeds the margin.
    pub witness_min: f64,
    pub witness_point: Complex64,
    pub functional_name: String,
}

impl MembershipReport {
    fn new(witness_min: f64, witness_point: Complex64, name: &str, margin: f64) -> Self {
        Self {
            member: witness_min > margin,
            witness_min,
            witness_point,
            functional_name: name.to_string(),
        }
    }
}

/// Running minimum that keeps the first point attaining it.
struct MinTracker {
    value: f64,
    point: Complex64,
}

impl MinTracker {
    fn new() -> Self {
        Self { value: f64::INFINITY, point: Complex64::new(0.0, 0.0) }
    }

    fn offer(&mut self, value: f64, point: Complex64) {
        if value < self.value || (value.is_nan() && !self.value.is_nan()) {
            self.value = value;
            self.point = point;
        }
    }
}

fn check_beta(beta: f64) -> Result<()> {
    if (0.0..=1.0).contains(&beta) {
        Ok(())
    } else {
        Err(Error::BadParams(format!("beta = {beta} must lie in [0, 1]")))
    }
}

/// Series of `beta f(z)/z + (1-beta) f'(z)`: coefficient `n` is
/// `(beta + (n+1)(1-beta)) a_{n+1}`.
pub fn a_beta_functional(f: &NormalizedSeries, beta: f64) -> PowerSeries {
    let n_max = f.order() - 1;
    PowerSeries::from_fn(n_max, |n| f.coeff(n + 1) * (beta + (n as f64 + 1.0) * (1.0 - beta)))
}

/// `Re(beta f/z + (1-beta) f') > 0` on the grid. `beta = 1` is `G_0`, `beta = 0` is
/// the bounded-turning class.
pub fn check_a_beta(f: &NormalizedSeries, beta: f64, grid: &GridSpec) -> Result<MembershipReport> {
    check_beta(beta)?;
    grid.validate()?;
    let q = a_beta_functional(f, beta);
    let mut min = MinTracker::new();
    grid.sample(&[&q], |z, v| min.offer(v[0].re, z));
    Ok(MembershipReport::new(
        min.value,
        min.point,
        "min Re(beta f/z + (1-beta) f')",
        grid.margin,
    ))
}

/// Which reading of the telescoped coefficient sum to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoefficientVariant {
    /// `|sum_n c_n|`.
    LiteralTelescoped,
    /// `sum_n |c_n|`.
    AbsoluteSeries,
}

/// Coefficients `c_n = (n(beta-1) - beta) a_n + (n(1-beta) + 1) a_{n+1}`, `n = 1..=N`,
/// i.e. the Taylor coefficients of `(beta f/z + (1-beta) f')(1-z) - 1`.
pub fn telescoped_coefficients(f: &NormalizedSeries, beta: f64) -> Vec<Complex64> {
    let n_max = f.order();
    (1..=n_max)
        .map(|n| {
            let n = n as f64;
            f.coeff(n as usize) * (n * (beta - 1.0) - beta) + f.coeff(n as usize + 1) * (n * (1.0 - beta) + 1.0)
        })
        .collect()
}

/// Coefficient test for `A_beta`; returns `(value <= 1, value)`.
pub fn coeff_sufficient_a_beta(f: &NormalizedSeries, beta: f64, variant: CoefficientVariant) -> Result<(bool, f64)> {
    check_beta(beta)?;
    let c = telescoped_coefficients(f, beta);
    let value = match variant {
        CoefficientVariant::LiteralTelescoped => c.iter().sum::<Complex64>().norm(),
        CoefficientVariant::AbsoluteSeries => c.iter().map(|x| x.norm()).sum(),
    };
    Ok((value <= 1.0, value))
}

/// Kernel `z(1 - beta z)/(1-z)^2 = sum_n (n - beta(n-1)) z^n`; convolving with it
/// gives `beta f + (1-beta) z f'`.
pub fn a_beta_kernel(beta: f64, order: usize) -> PowerSeries {
    PowerSeries::from_fn(order, |n| {
        if n == 0 {
            Complex64::new(0.0, 0.0)
        } else {
            Complex64::new(n as f64 - beta * (n as f64 - 1.0), 0.0)
        }
    })
}

/// Principal-branch winding number of a closed sampled curve about 0.
fn winding_number(values: &[Complex64]) -> i64 {
    let mut total = 0.0;
    for j in 0..values.len() {
        let a = values[j];
        let b = values[(j + 1) % values.len()];
        total += (b / a).arg();
    }
    (total / (2.0 * PI)).round() as i64
}

/// Hadamard-product criterion: `f * K_{beta,zeta}` must not vanish in the
/// punctured disk for any `|zeta| = 1`, where
/// `K_{beta,zeta} = z(1 - beta z)/(1-z)^2 - z (1+zeta)/(1-zeta)`.
///
/// `zeta = e^{i psi}` runs over `psi = 2 pi j / zeta_samples`, `j = 1..zeta_samples-1`.
/// `witness_min` is the smallest sampled `|f * K|`; it is set to 0 when the
/// argument principle on some ring shows a zero besides the one at the origin.
pub fn hadamard_criterion_a_beta(
    f: &NormalizedSeries,
    beta: f64,
    zeta_samples: usize,
    grid: &GridSpec,
) -> Result<MembershipReport> {
    check_beta(beta)?;
    grid.validate()?;
    if zeta_samples < 16 {
        return Err(Error::BadParams("need at least 16 zeta samples".into()));
    }
    let conv = f.as_series().hadamard(&a_beta_kernel(beta, f.order()));
    let ring = RingSampler::new(grid.angular_samples);
    let shifts: Vec<Complex64> = (1..zeta_samples)
        .map(|j| {
            let zeta = Complex64::from_polar(1.0, 2.0 * PI * j as f64 / zeta_samples as f64);
            (ONE + zeta) / (ONE - zeta)
        })
        .collect();

    let mut min = MinTracker::new();
    let mut zero_at: Option<Complex64> = None;
    let mut values = vec![Complex64::new(0.0, 0.0); grid.angular_samples];
    for &r in &grid.radii {
        let base = ring.eval(&conv, r);
        let points: Vec<Complex64> = (0..grid.angular_samples).map(|j| ring.point(r, j)).collect();
        for &c in &shifts {
            let mut local = MinTracker::new();
            for ((v, &s), &z) in values.iter_mut().zip(&base).zip(&points) {
                *v = s - c * z;
                local.offer(v.norm(), z);
            }
            if zero_at.is_none() && local.value > 0.0 && winding_number(&values) != 1 {
                zero_at = Some(local.point);
            }
            min.offer(local.value, local.point);
        }
    }
    let name = "min |f * K_(beta,zeta)|";
    Ok(match zero_at {
        Some(z) => MembershipReport::new(0.0, z, name, grid.margin),
        None => MembershipReport::new(min.value, min.point, name, grid.margin),
    })
}

/// `|f'(z)(z/f(z))^2 - 1| < lambda` on the grid; `witness_min = lambda - max |.|`.
pub fn check_u_lambda(f: &NormalizedSeries, lambda: f64, grid: &GridSpec) -> Result<MembershipReport> {
    if !(lambda > 0.0 && lambda <= 1.0) {
        return Err(Error::BadParams(format!("lambda = {lambda} must lie in (0, 1]")));
    }
    grid.validate()?;
    let over_z = f.over_z();
    let df = f.derivative();
    let mut min = MinTracker::new();
    grid.sample(&[&over_z, &df], |z, v| {
        let value = if v[0].norm() <= ZERO_TOL {
            -f64::MAX
        } else {
            let w = v[1] / (v[0] * v[0]) - ONE;
            lambda - w.norm()
        };
        min.offer(value, z);
    });
    Ok(MembershipReport::new(
        min.value,
        min.point,
        "lambda - max |f'(z)(z/f)^2 - 1|",
        grid.margin,
    ))
}

/// Both solutions of `alpha w t^2 + t - w = 0`, i.e. the preimages of `w`
/// under `t / (1 - alpha t^2)`. The first root is the one that tends to `w`
/// as `alpha -> 0`.
pub fn bs_preimages(w: Complex64, alpha: f64) -> [Complex64; 2] {
    if w.norm() == 0.0 {
        return [w, w];
    }
    if alpha == 0.0 {
        return [w, w];
    }
    let root = (ONE + w * w * (4.0 * alpha)).sqrt();
    let denom = w * (2.0 * alpha);
    let near = (root - ONE) / denom;
    let far = (-root - ONE) / denom;
    [near, far]
}

/// `z f'/f - 1 < z/(1 - alpha z^2)`, checked pointwise through the quadratic
/// preimage. `witness_min = 1 - max_z min_root |t|`.
pub fn check_bs_subordination(f: &NormalizedSeries, alpha: f64, grid: &GridSpec) -> Result<MembershipReport> {
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::BadParams(format!("alpha = {alpha} must lie in [0, 1)")));
    }
    grid.validate()?;
    let over_z = f.over_z();
    let df = f.derivative();
    let mut min = MinTracker::new();
    grid.sample(&[&over_z, &df], |z, v| {
        let value = if v[0].norm() <= ZERO_TOL {
            -f64::MAX
        } else {
            let w = v[1] / v[0] - ONE;
            let [a, b] = bs_preimages(w, alpha);
            1.0 - a.norm().min(b.norm())
        };
        min.offer(value, z);
    });
    Ok(MembershipReport::new(
        min.value,
        min.point,
        "1 - max |preimage of (z f'/f - 1)|",
        grid.margin,
    ))
}

/// `z f'/f < (1+Az)/(1+Bz)`, checked through the Mobius inverse
/// `t = (w-1)/(A - Bw)`. `witness_min = 1 - max |t|`.
pub fn check_janowski_subordination(f: &NormalizedSeries, a: f64, b: f64, grid: &GridSpec) -> Result<MembershipReport> {
    if !(-1.0 <= b && b < a && a <= 1.0) {
        return Err(Error::BadParams(format!("need -1 <= B < A <= 1, got A = {a}, B = {b}")));
    }
    grid.validate()?;
    let over_z = f.over_z();
    let df = f.derivative();
    let mut min = MinTracker::new();
    grid.sample(&[&over_z, &df], |z, v| {
        let value = if v[0].norm() <= ZERO_TOL {
            -f64::MAX
        } else {
            let w = v[1] / v[0];
            let den = Complex64::new(a, 0.0) - w * b;
            if den.norm() <= ZERO_TOL {
                -f64::MAX
            } else {
                1.0 - ((w - ONE) / den).norm()
            }
        };
        min.offer(value, z);
    });
    Ok(MembershipReport::new(
        min.value,
        min.point,
        "1 - max |preimage of z f'/f|",
        grid.margin,
    ))
}

/// `min Re exp(int_0^z psi(t)/t dt)` over the grid; a positive value is the
/// inclusion certificate and the semigroup decay rate.
pub fn inclusion_rate_from_psi(psi: &PowerSeries, grid: &GridSpec) -> Result<f64> {
    grid.validate()?;
    let e = exp_integral_transform(psi)?;
    let mut min = MinTracker::new();
    grid.sample(&[&e], |z, v| min.offer(v[0].re, z));
    Ok(min.value)
}

/// `min Re exp(int_0^z (phi(t)-1)/t dt)` over the grid.
pub fn inclusion_rate_from_phi(phi: &PowerSeries, grid: &GridSpec) -> Result<f64> {
    if (phi.coeff(0) - ONE).norm() > ZERO_TOL {
        return Err(Error::BadNormalization(phi.coeff(0).to_string()));
    }
    let mut h = phi.clone().into_coeffs();
    h[0] = Complex64::new(0.0, 0.0);
    inclusion_rate_from_psi(&PowerSeries::new(h)?, grid)
}

/// `1 - (2/pi) sup |arg(f(z)/z)|`, clamped to `[0, 1]`.
pub fn sector_extension_angle(f: &NormalizedSeries, grid: &GridSpec) -> Result<f64> {
    grid.validate()?;
    let over_z = f.over_z();
    let mut sup: f64 = 0.0;
    let mut undefined = None;
    grid.sample(&[&over_z], |z, v| {
        if v[0].norm() <= ZERO_TOL {
            undefined.get_or_insert(z);
        } else {
            sup = sup.max(v[0].arg().abs());
        }
    });
    if let Some(z) = undefined {
        return Err(Error::ArgUndefined(z.to_string()));
    }
    Ok((1.0 - 2.0 * sup / PI).clamp(0.0, 1.0))
}

/// The generator `g = f / f'` of the semigroup `f^{-1}(e^{-t} f)`, together
/// with the grid check `Re(g/z) > 0`.
pub fn generator_from_starlike(f: &NormalizedSeries, grid: &GridSpec) -> Result<(PowerSeries, MembershipReport)> {
    grid.validate()?;
    let df = f.derivative();
    let g = f.as_series().multiply(&df.reciprocal()?);
    let over_z = f.over_z();
    let mut min = MinTracker::new();
    grid.sample(&[&over_z, &df], |z, v| {
        let value = if v[1].norm() <= ZERO_TOL { -f64::MAX } else { (v[0] / v[1]).re };
        min.offer(value, z);
    });
    let report = MembershipReport::new(min.value, min.point, "min Re(g/z)", grid.margin);
    Ok((g, report))
}
