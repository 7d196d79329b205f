//! Closed-form radii of starlikeness, the `kappa` integral, the lower bound
//! for `Re((1-alpha) z p'/(alpha + (1-alpha) p))`, and a bisection oracle
//! that measures radii directly from a series.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::class::ClassSpec;
use crate::error::{Error, Result};
use crate::numeric::{bisect, bisect_predicate, golden_section_min, integrate_adaptive, sampled_min, scan_roots};
use crate::series::{NormalizedSeries, PowerSeries, RingSampler};

const ONE: Complex64 = Complex64::new(1.0, 0.0);
const RADICAND_SLACK: f64 = 1e-12;
const K1_WINDOW: f64 = 1e-8;

fn sqrt_clamped(x: f64, what: &str) -> Result<f64> {
    if x >= 0.0 {
        Ok(x.sqrt())
    } else if x >= -RADICAND_SLACK {
        Ok(0.0)
    } else {
        Err(Error::BadRange(format!("negative radicand {x:e} in {what}")))
    }
}

/// `kappa(beta) = int_0^1 (1 - t^{1-beta})/(1 + t^{1-beta}) dt`, decreasing from
/// `2 ln 2 - 1` at `beta = 0` to `0` at `beta = 1`.
pub fn kappa(beta: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&beta) {
        return Err(Error::BadParams(format!("beta = {beta} must lie in [0, 1]")));
    }
    if beta == 1.0 {
        return Ok(0.0);
    }
    let s = 1.0 - beta;
    let integrand = |t: f64| {
        let p = t.powf(s);
        (1.0 - p) / (1.0 + p)
    };
    let (head, _) = integrate_adaptive(integrand, 0.0, 1e-4, 5e-12, 4000);
    let (tail, _) = integrate_adaptive(integrand, 1e-4, 1.0, 5e-12, 4000);
    Ok(head + tail)
}

/// Threshold between the two radius formulas.
pub fn k0(m: f64) -> f64 {
    let root = ((m - 1.0).powi(4) * (m * (m - 2.0) + 4.0)).sqrt();
    (2.0 * m.powi(3) - 6.0 * m * m + 9.0 * m - 6.0 + 2.0 * root) / (4.0 * m.powi(3) - 21.0 * m * m + 36.0 * m - 20.0)
}

/// The value of `k` where the second radius formula degenerates.
pub fn k1(m: f64) -> f64 {
    (m * m - 4.0 * m + 4.0) / (m * m - 8.0 * m + 8.0)
}

/// A Ma-Minda target `phi` together with `m = inf Re phi` on the unit circle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "tag", rename_all = "snake_case")]
pub enum PhiTarget {
    /// `(1+Az)/(1+Bz)`.
    Janowski { a: f64, b: f64 },
    /// `2/(1+e^{-z})`.
    Sg,
    /// `1 + (2/pi^2) (log((1+sqrt z)/(1-sqrt z)))^2`.
    Parabolic,
    /// `1 + z e^z`.
    RhoExp,
    /// Any series with constant term 1, summed on the circle by Horner.
    Custom { series: PowerSeries },
}

impl PhiTarget {
    pub fn name(&self) -> &'static str {
        match self {
            PhiTarget::Janowski { .. } => "janowski",
            PhiTarget::Sg => "sg",
            PhiTarget::Parabolic => "parabolic",
            PhiTarget::RhoExp => "rhoexp",
            PhiTarget::Custom { .. } => "custom",
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            PhiTarget::Janowski { a, b } if !(-1.0 <= *b && b < a && *a <= 1.0) => {
                Err(Error::BadParams(format!("need -1 <= B < A <= 1, got A = {a}, B = {b}")))
            }
            PhiTarget::Custom { series } if (series.coeff(0) - ONE).norm() > 1e-12 => {
                Err(Error::BadNormalization(series.coeff(0).to_string()))
            }
            _ => Ok(()),
        }
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        match self {
            PhiTarget::Janowski { a, b } => (ONE + z * *a) / (ONE + z * *b),
            PhiTarget::Sg => 2.0 / (ONE + (-z).exp()),
            PhiTarget::Parabolic => {
                let s = z.sqrt();
                let l = ((ONE + s) / (ONE - s)).ln();
                ONE + l * l * (2.0 / (PI * PI))
            }
            PhiTarget::RhoExp => ONE + z * z.exp(),
            PhiTarget::Custom { series } => series.eval(z),
        }
    }
}

fn check_samples(samples: usize) -> Result<()> {
    if samples < 360 {
        return Err(Error::BadParams(format!("need at least 360 boundary samples, got {samples}")));
    }
    Ok(())
}

/// `min Re phi(e^{i theta})` by dense sampling plus a golden-section polish.
pub fn phi_inf_re_sampled(target: &PhiTarget, samples: usize) -> Result<f64> {
    target.validate()?;
    check_samples(samples)?;
    let f = |theta: f64| {
        let v = target.eval(Complex64::from_polar(1.0, theta)).re;
        if v.is_nan() {
            f64::INFINITY
        } else {
            v
        }
    };
    Ok(sampled_min(f, -PI, PI, samples, 1e-8).1)
}

/// `m = inf Re phi` on the unit circle: closed form where one is known,
/// otherwise [`phi_inf_re_sampled`].
pub fn phi_inf_re(target: &PhiTarget, samples: usize) -> Result<f64> {
    target.validate()?;
    check_samples(samples)?;
    match *target {
        PhiTarget::Janowski { a, b } => Ok((1.0 - a) / (1.0 - b)),
        PhiTarget::Parabolic => Ok(0.5),
        PhiTarget::Sg => Ok(2.0 / (1.0 + std::f64::consts::E)),
        PhiTarget::RhoExp | PhiTarget::Custom { .. } => phi_inf_re_sampled(target, samples),
    }
}

/// Boundary samples used by the radius operations.
pub const PHI_SAMPLES: usize = 2048;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Branch {
    Case1,
    Case2,
    Case3Degenerate,
}

/// Lower bound `k` for `Re(f/z)` and `m = inf Re phi`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadiusQuery {
    pub k: f64,
    pub m: f64,
}

impl RadiusQuery {
    pub fn new(k: f64, m: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&k) {
            return Err(Error::BadParams(format!("k = {k} must lie in [0, 1)")));
        }
        if !(0.0..=1.0).contains(&m) {
            return Err(Error::BadParams(format!("m = {m} must lie in [0, 1]")));
        }
        Ok(Self { k, m })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadiusResult {
    pub r: f64,
    pub branch: Branch,
    pub k: f64,
    pub m: f64,
    pub k0: f64,
    pub k1: f64,
    /// Parameter where the branch switches, when it lies in `[0, 1]`.
    pub beta_star: Option<f64>,
}

/// First formula, rationalized:
/// `(2k - mk - 1 + sqrt D)/((1-2k)(1-m)) = (1-m)/(1 + mk - 2k + sqrt D)`.
fn case1(k: f64, m: f64) -> Result<f64> {
    let d = (k - 1.0) * (k * (m - 2.0).powi(2) - (m - 2.0) * m - 2.0);
    let den = 1.0 + m * k - 2.0 * k + sqrt_clamped(d, "first radius formula")?;
    if den <= 0.0 {
        return Err(Error::DegenerateDenominator(format!("first radius formula at k = {k}, m = {m}")));
    }
    Ok((1.0 - m) / den)
}

/// Second formula in the form `r^2 = (a-1)/(a-2k+1)` with
/// `a = 1 - (1-k)m + 2 sqrt(k(1-k)(1-m))`.
fn case2(k: f64, m: f64) -> Result<f64> {
    let a = 1.0 - (1.0 - k) * m + 2.0 * sqrt_clamped(k * (1.0 - k) * (1.0 - m), "second radius formula")?;
    let den = a - 2.0 * k + 1.0;
    if den <= 0.0 {
        return Err(Error::DegenerateDenominator(format!("second radius formula at k = {k}, m = {m}")));
    }
    sqrt_clamped((a - 1.0) / den, "second radius formula")
}

fn case3(m: f64) -> Result<f64> {
    sqrt_clamped((m - 1.0) / (m - 2.0), "degenerate radius formula")
}

/// Radius of `S*(phi)` for `Re(f/z) > k` and `inf Re phi = m`.
pub fn radius_ithm(q: RadiusQuery) -> Result<RadiusResult> {
    let RadiusQuery { k, m } = RadiusQuery::new(q.k, q.m)?;
    let (k0, k1) = (k0(m), k1(m));
    let (r, branch) = if k <= k0 {
        (case1(k, m)?, Branch::Case1)
    } else if (k - k1).abs() < K1_WINDOW {
        (case3(m)?, Branch::Case3Degenerate)
    } else {
        (case2(k, m)?, Branch::Case2)
    };
    Ok(RadiusResult { r: r.clamp(0.0, 1.0), branch, k, m, k0, k1, beta_star: None })
}

/// `beta` with `kappa(beta) = target`, or `None` when `target > kappa(0)`.
pub fn solve_kappa(target: f64) -> Result<Option<f64>> {
    if target <= 0.0 {
        return Ok(Some(1.0));
    }
    if target > kappa(0.0)? {
        return Ok(None);
    }
    let f = |b: f64| kappa(b).expect("beta lies in [0, 1]") - target;
    bisect(f, 0.0, 1.0, 1e-10).map(Some)
}

/// Radius of `S*(phi)` on `A_beta`, with `k = kappa(beta)`.
pub fn radius_a_beta(beta: f64, target: &PhiTarget) -> Result<RadiusResult> {
    let k = kappa(beta)?;
    let m = phi_inf_re(target, PHI_SAMPLES)?;
    let mut res = radius_ithm(RadiusQuery::new(k, m)?)?;
    res.beta_star = solve_kappa(res.k0)?;
    Ok(res)
}

/// Threshold for `kappa(beta)` in the Janowski closed form.
pub fn janowski_k_star(a: f64, b: f64) -> f64 {
    let root = ((a - b).powi(4) * (3.0 + a * a - 2.0 * (3.0 + a) * b + 4.0 * b * b)).sqrt();
    let den = -2.0 * root - 1.0 - 3.0 * a - 2.0 * a.powi(3) + 6.0 * (1.0 + a + a * a) * b - 9.0 * (1.0 + a) * b * b
        + 6.0 * b.powi(3);
    (b - 1.0).powi(3) / den
}

/// Radius of `S*[A,B]` on `A_beta`, evaluated from the Janowski formulas
/// directly in `A`, `B` and `kappa(beta)`.
pub fn radius_janowski_closed_form(beta: f64, a: f64, b: f64) -> Result<RadiusResult> {
    PhiTarget::Janowski { a, b }.validate()?;
    let k = kappa(beta)?;
    let m = (1.0 - a) / (1.0 - b);
    let k_star = janowski_k_star(a, b);
    let c = 1.0 + a - 2.0 * b;
    let (r, branch) = if k <= k_star {
        let y = (1.0 - k) * (1.0 + a * a - 2.0 * b - 2.0 * a * b + 2.0 * b * b - c * c * k);
        let x = c * k - (1.0 - b);
        let den = sqrt_clamped(y, "Janowski radius")? - x;
        if den <= 0.0 {
            return Err(Error::DegenerateDenominator(format!("Janowski radius at A = {a}, B = {b}")));
        }
        ((a - b) / den, Branch::Case1)
    } else {
        let num = 4.0 * sqrt_clamped((a - b) * (1.0 - b).powi(3) * (1.0 - k) * k, "Janowski radius")?
            - (1.0 - a) * c
            + (1.0 - a * (4.0 + a) + 2.0 * b + 6.0 * a * b - 4.0 * b * b) * k;
        let den = c * c - (1.0 + a * a + a * (6.0 - 8.0 * b) - 8.0 * (1.0 - b) * b) * k;
        if den.abs() < K1_WINDOW * c * c {
            (case3(m)?, Branch::Case3Degenerate)
        } else {
            (sqrt_clamped(num / den, "Janowski radius")?, Branch::Case2)
        }
    };
    Ok(RadiusResult {
        r: r.clamp(0.0, 1.0),
        branch,
        k,
        m,
        k0: k_star,
        k1: k1(m),
        beta_star: solve_kappa(k_star)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TuanAnhBranch {
    R1leR2,
    R2leR1,
}

/// Sharp lower bound of `Re((1-alpha) z p'/(alpha + (1-alpha) p))` on `|z| = r`
/// over the Caratheodory class.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TuanAnhBound {
    pub bound: f64,
    pub branch: TuanAnhBranch,
    pub r1: f64,
    pub r2: f64,
    pub a: f64,
    /// A root of the printed angle equation, when the second branch is active
    /// and the equation has one in `[-1, 1]`.
    pub cos_theta: Option<f64>,
}

pub fn tuan_anh_bound(alpha: f64, r: f64) -> Result<TuanAnhBound> {
    if !(0.0..1.0).contains(&alpha) || !(0.0..1.0).contains(&r) {
        return Err(Error::BadRange(format!("need alpha, r in [0, 1), got alpha = {alpha}, r = {r}")));
    }
    let r2s = r * r;
    let r1 = ((alpha - alpha * (2.0 * alpha - 1.0) * r2s) / (1.0 - r2s)).sqrt();
    let r2 = (1.0 + (2.0 * alpha - 1.0) * r) / (1.0 + r);
    let a = (1.0 - (2.0 * alpha - 1.0) * r2s) / (1.0 - r2s);
    if r1 <= r2 {
        let bound = -2.0 * (1.0 - alpha) * r / ((1.0 + (2.0 * alpha - 1.0) * r) * (1.0 + r));
        Ok(TuanAnhBound { bound, branch: TuanAnhBranch::R1leR2, r1, r2, a, cos_theta: None })
    } else {
        let bound = -alpha / (1.0 - alpha) + (2.0 * r1 - a) / (1.0 - alpha);
        let cos_theta = eqnf3_cos_theta(alpha, r).ok().and_then(|roots| roots.first().copied());
        Ok(TuanAnhBound { bound, branch: TuanAnhBranch::R2leR1, r1, r2, a, cos_theta })
    }
}

/// The printed angle equation as a function of `c = cos(theta)`.
pub fn eqnf3_polynomial(alpha: f64, r: f64, c: f64) -> f64 {
    let r2s = r * r;
    let r1 = ((alpha - alpha * (2.0 * alpha - 1.0) * r2s) / (1.0 - r2s)).sqrt();
    let a = (1.0 - (2.0 * alpha - 1.0) * r2s) / (1.0 - r2s);
    let g = 2.0 * r1 - a - alpha;
    let w = (1.0 - alpha).powi(2);
    (2.0 * alpha - 1.0) * r.powi(4) - 2.0 * c * (g * (3.0 * alpha - 1.0) + w) * r.powi(3)
        + (2.0 * alpha * g * (1.0 + 2.0 * c * c) + 4.0 * w) * r2s
        - 2.0 * c * (g * (1.0 + alpha) + w) * r
        + g
}

/// Real roots in `[-1, 1]` of the printed angle equation, located by
/// scanning and bisection, plus double roots found as zero minima of `|P|`. Only meaningful on the `R2 <= R1` branch.
pub fn eqnf3_cos_theta(alpha: f64, r: f64) -> Result<Vec<f64>> {
    if !(0.0..1.0).contains(&alpha) || !(r > 0.0 && r < 1.0) {
        return Err(Error::BadRange(format!("need alpha in [0, 1), r in (0, 1), got {alpha}, {r}")));
    }
    let p = |c: f64| eqnf3_polynomial(alpha, r, c);
    let mut roots = scan_roots(p, -1.0, 1.0, 400, 1e-10);
    // double roots touch zero without a sign change: refine local extrema of |P|
    const CELLS: usize = 400;
    let h = 2.0 / CELLS as f64;
    let vals: Vec<f64> = (0..=CELLS).map(|i| p(-1.0 + h * i as f64).abs()).collect();
    for i in 1..CELLS {
        if vals[i] <= vals[i - 1] && vals[i] <= vals[i + 1] {
            let c0 = -1.0 + h * i as f64;
            let (c, v) = golden_section_min(|c| p(c).abs(), c0 - h, c0 + h, 1e-12);
            if v < 1e-9 && roots.iter().all(|x| (x - c).abs() > 1e-6) {
                roots.push(c);
            }
        }
    }
    roots.sort_by(f64::total_cmp);
    if roots.is_empty() {
        return Err(Error::NoRootInRange { alpha, r });
    }
    Ok(roots)
}

/// `Re((1-alpha) z p'/(alpha + (1-alpha) p))` for the two-point function
/// `p = (1/2)((1+z e^{-i t})/(1-z e^{-i t}) + (1+z e^{i t})/(1-z e^{i t}))`.
pub fn two_point_functional(alpha: f64, theta: f64, z: Complex64) -> f64 {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for s in [-1.0, 1.0] {
        let e = Complex64::from_polar(1.0, s * theta);
        let d = ONE - z * e;
        p += 0.5 * (ONE + z * e) / d;
        dp += e / (d * d);
    }
    ((1.0 - alpha) * z * dp / (alpha + (1.0 - alpha) * p)).re
}

/// `min over |z| = r` of [`two_point_functional`]; returns `(phi, value)`.
pub fn two_point_ring_min(alpha: f64, r: f64, theta: f64) -> (f64, f64) {
    sampled_min(|phi| two_point_functional(alpha, theta, Complex64::from_polar(r, phi)), -PI, PI, 720, 1e-10)
}

/// `cos(theta)` of the two-point function whose ring minimum is smallest,
/// found numerically. Returns `(cos_theta, attained_min)`.
pub fn extremal_cos_theta(alpha: f64, r: f64) -> (f64, f64) {
    let (theta, value) = sampled_min(|t| two_point_ring_min(alpha, r, t).1, 0.0, PI, 180, 1e-9);
    (theta.cos(), value)
}

/// `min over |z| = r of Re(z f'/f)`, from `f` and `f'` sampled on the ring
/// and the best cell refined by golden section.
fn ring_min(f: &PowerSeries, df: &PowerSeries, ring: &RingSampler, r: f64) -> f64 {
    let q = |z: Complex64, fz: Complex64, dfz: Complex64| (z * dfz / fz).re;
    let vals_f = ring.eval(f, r);
    let vals_df = ring.eval(df, r);
    let (j, best) = (0..ring.samples())
        .map(|j| q(ring.point(r, j), vals_f[j], vals_df[j]))
        .enumerate()
        .fold((0, f64::INFINITY), |acc, (j, v)| if v < acc.1 || v.is_nan() { (j, v) } else { acc });
    if best.is_nan() {
        return f64::NAN;
    }
    let h = 2.0 * PI / ring.samples() as f64;
    let t = h * j as f64;
    let at = |phi: f64| {
        let z = Complex64::from_polar(r, phi);
        q(z, f.eval(z), df.eval(z))
    };
    let (_, polished) = golden_section_min(at, t - h, t + h, 1e-10);
    best.min(polished)
}

/// Largest `r` with `min over |z| = r of Re(z f'/f) >= m`, by bisection on
/// `r`. Returns 1 when the condition holds at `r = 0.999`.
pub fn radius_numeric_oracle(f: &NormalizedSeries, m: f64, tol: f64) -> Result<f64> {
    if !(tol > 1e-12 && tol < 1e-2) {
        return Err(Error::BadParams(format!("tolerance {tol} must lie in (1e-12, 1e-2)")));
    }
    let df = f.as_series().derivative();
    let ring = RingSampler::new(PHI_SAMPLES);
    let holds = |r: f64| ring_min(f.as_series(), &df, &ring, r) >= m;
    const R_MAX: f64 = 0.999;
    if holds(R_MAX) {
        return Ok(1.0);
    }
    Ok(bisect_predicate(holds, 0.0, R_MAX, tol))
}

/// Sharpness extremal of the first radius formula: `z (1 + (2k-1) z)/(1+z)`.
pub fn case1_extremal(k: f64, order: usize) -> NormalizedSeries {
    // (1 + (2k-1)z)/(1+z) = 1 + (2k-2) z/(1+z)
    let tail: Vec<Complex64> = (2..=order)
        .map(|n| {
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            Complex64::new((2.0 * k - 2.0) * sign, 0.0)
        })
        .collect();
    NormalizedSeries::from_tail(&tail)
}

/// Sharpness extremal of the second radius formula: `z (k + (1-k) p)` with the
/// two-point `p` that is extremal on `|z| = r`.
pub fn case2_extremal(k: f64, r: f64, order: usize) -> NormalizedSeries {
    let (c, _) = extremal_cos_theta(k, r);
    let theta = c.clamp(-1.0, 1.0).acos();
    let tail: Vec<Complex64> =
        (1..order).map(|n| Complex64::new((1.0 - k) * 2.0 * (n as f64 * theta).cos(), 0.0)).collect();
    NormalizedSeries::from_tail(&tail)
}

/// Exponential decay rate `k` with `|u(t,z)| <= e^{-tk} |z|` for the
/// classes with a closed-form rate.
pub fn decay_rate(class: &ClassSpec) -> Result<f64> {
    const SLACK: f64 = 1e-12;
    match *class {
        ClassSpec::Janowski { a, b } => {
            if !(-1.0 <= b && b < a && a <= 0.0) {
                return Err(Error::OutOfStatedRange(format!("need -1 <= B < A <= 0, got A = {a}, B = {b}")));
            }
            Ok((1.0 - b).powf((a - b) / b))
        }
        ClassSpec::Bs { alpha } => {
            let top = 3.0 - 2.0 * 2f64.sqrt();
            if !(alpha > 0.0 && alpha <= top + SLACK) {
                return Err(Error::OutOfStatedRange(format!("need 0 < alpha <= 3 - 2 sqrt 2, got {alpha}")));
            }
            let s = alpha.sqrt();
            Ok(((1.0 - s) / (1.0 + s)).powf(1.0 / (2.0 * s)))
        }
        ClassSpec::ULambda { lambda } => {
            if !(lambda > 0.0 && lambda <= 1.0 / 3.0 + SLACK) {
                return Err(Error::OutOfStatedRange(format!("need 0 < lambda <= 1/3, got {lambda}")));
            }
            Ok(((1.0 - 3.0 * lambda) / (2.0 * lambda * lambda - 4.0 * lambda + 2.0)).max(0.0))
        }
        ClassSpec::ABeta { .. } | ClassSpec::G0 => {
            Err(Error::OutOfStatedRange(format!("no closed-form rate for class `{}`", class.name())))
        }
    }
}

/// Positive root of `r^4 - 6 r^2 + 1`, the radius where `-2z/(1-z^2)` stops
/// being convex.
pub fn convexity_radius_root() -> Result<f64> {
    bisect(|r| r.powi(4) - 6.0 * r * r + 1.0, 0.0, 1.0, 1e-14)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{E, LN_2};

    fn printed_case1(k: f64, m: f64) -> f64 {
        (2.0 * k - m * k - 1.0 + ((k - 1.0) * (k * (m - 2.0).powi(2) - (m - 2.0) * m - 2.0)).sqrt())
            / ((1.0 - 2.0 * k) * (1.0 - m))
    }

    fn printed_case2(k: f64, m: f64) -> f64 {
        let num = m * m * (1.0 - k) - m * (2.0 - 6.0 * k) - 4.0 * k + 4.0 * ((m - 1.0) * (k - 1.0) * k).sqrt();
        let den = m * m * (1.0 - k) - m * (4.0 - 8.0 * k) - 8.0 * k + 4.0;
        (num / den).sqrt()
    }

    /// `kappa` as an alternating series `1 + 2 sum (-1)^j/(s j + 1)`, averaged
    /// over consecutive partial sums.
    fn kappa_series(beta: f64) -> f64 {
        let s = 1.0 - beta;
        let mut sum = 1.0;
        let mut prev = sum;
        for j in 1..=2_000_000 {
            prev = sum;
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            sum += 2.0 * sign / (s * j as f64 + 1.0);
        }
        0.5 * (sum + prev)
    }

    #[test]
    fn kappa_values() {
        assert_eq!(kappa(1.0).unwrap(), 0.0);
        assert_abs_diff_eq!(kappa(0.0).unwrap(), 2.0 * LN_2 - 1.0, epsilon = 1e-10);
        assert_abs_diff_eq!(kappa(0.5).unwrap(), 3.0 - 4.0 * LN_2, epsilon = 1e-10);
        for beta in [0.1, 0.35, 0.8, 0.99] {
            assert_abs_diff_eq!(kappa(beta).unwrap(), kappa_series(beta), epsilon = 1e-6);
        }
        assert!(kappa(-0.1).is_err());
        assert!(kappa(1.1).is_err());
    }

    #[test]
    fn kappa_strictly_decreasing() {
        let vals: Vec<f64> = (0..100).map(|i| kappa(i as f64 / 99.0).unwrap()).collect();
        assert!(vals.windows(2).all(|w| w[1] < w[0]));
    }

    #[test]
    fn k0_k1_values() {
        assert_abs_diff_eq!(k0(0.0), 0.1, epsilon = 1e-15);
        assert_abs_diff_eq!(k0(1.0), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(k0(0.5), (11.0 - 13f64.sqrt()) / 27.0, epsilon = 1e-12);
        assert_abs_diff_eq!(k1(0.0), 0.5, epsilon = 1e-15);
        for i in 0..=100 {
            let v = k0(i as f64 / 100.0);
            assert!((0.1 - 1e-15..=1.0 + 1e-15).contains(&v));
        }
    }

    #[test]
    fn phi_targets() {
        assert_abs_diff_eq!(
            phi_inf_re(&PhiTarget::Janowski { a: 1.0 - 2.0 * 0.3, b: -1.0 }, 720).unwrap(),
            0.3,
            epsilon = 1e-15
        );
        let closed = phi_inf_re(&PhiTarget::Sg, 2048).unwrap();
        assert_abs_diff_eq!(closed, 2.0 / (1.0 + E), epsilon = 1e-15);
        assert_abs_diff_eq!(phi_inf_re_sampled(&PhiTarget::Sg, 2048).unwrap(), closed, epsilon = 1e-10);
        assert_abs_diff_eq!(phi_inf_re_sampled(&PhiTarget::Parabolic, 2048).unwrap(), 0.5, epsilon = 1e-8);
        let janowski = PhiTarget::Janowski { a: 0.5, b: -0.5 };
        assert_abs_diff_eq!(phi_inf_re_sampled(&janowski, 2048).unwrap(), 1.0 / 3.0, epsilon = 1e-10);

        // 1 + e^{cos t} cos(t + sin t), minimized by a dense independent scan
        let brute = (0..2_000_000)
            .map(|i| {
                let t = 2.0 * PI * i as f64 / 2_000_000.0;
                1.0 + t.cos().exp() * (t + t.sin()).cos()
            })
            .fold(f64::INFINITY, f64::min);
        let m = phi_inf_re(&PhiTarget::RhoExp, 2048).unwrap();
        assert_abs_diff_eq!(m, brute, epsilon = 1e-10);
        assert_abs_diff_eq!(m, 0.136_038_490_736_931_2, epsilon = 1e-9);

        let custom = PhiTarget::Custom { series: crate::functions::janowski_series(0.0, -0.5, 200) };
        assert_abs_diff_eq!(phi_inf_re(&custom, 2048).unwrap(), 1.0 / 1.5, epsilon = 1e-9);
        assert!(phi_inf_re(&PhiTarget::Sg, 100).is_err());
        assert!(PhiTarget::Custom { series: PowerSeries::zero(3) }.validate().is_err());
    }

    #[test]
    fn radius_examples() {
        let r = radius_ithm(RadiusQuery::new(0.0, 0.5).unwrap()).unwrap();
        assert_eq!(r.branch, Branch::Case1);
        assert_abs_diff_eq!(r.r, 5f64.sqrt() - 2.0, epsilon = 1e-14);
        let r = radius_ithm(RadiusQuery::new(0.0, 2.0 / (1.0 + E)).unwrap()).unwrap();
        assert_abs_diff_eq!(r.r, 0.219887, epsilon = 5e-7);
        let r = radius_ithm(RadiusQuery::new(0.0, 0.0).unwrap()).unwrap();
        assert_abs_diff_eq!(r.r, 2f64.sqrt() - 1.0, epsilon = 1e-15);
        let r = radius_ithm(RadiusQuery::new(0.5, 0.0).unwrap()).unwrap();
        assert_eq!(r.branch, Branch::Case3Degenerate);
        assert_abs_diff_eq!(r.r, 0.5f64.sqrt(), epsilon = 1e-15);
        assert!(RadiusQuery::new(1.0, 0.5).is_err());
        assert!(RadiusQuery::new(0.2, 1.5).is_err());
    }

    #[test]
    fn stable_forms_match_printed_formulas() {
        for &m in &[0.0, 0.13, 0.3, 0.5, 0.75, 0.9] {
            for i in 0..50 {
                let k = i as f64 / 50.0;
                if k <= k0(m) && (k - 0.5).abs() > 1e-3 {
                    assert_abs_diff_eq!(case1(k, m).unwrap(), printed_case1(k, m), epsilon = 1e-10);
                }
                if k > k0(m) && (k - k1(m)).abs() > 1e-3 {
                    assert_abs_diff_eq!(case2(k, m).unwrap(), printed_case2(k, m), epsilon = 1e-10);
                }
            }
        }
    }

    #[test]
    fn branch_continuity_at_k0() {
        for &m in &[0.0, 0.25, 0.5, 0.75] {
            let t = k0(m);
            let below = radius_ithm(RadiusQuery::new(t - 1e-9, m).unwrap()).unwrap();
            let above = radius_ithm(RadiusQuery::new(t + 1e-9, m).unwrap()).unwrap();
            assert_eq!(below.branch, Branch::Case1);
            assert_eq!(above.branch, Branch::Case2);
            assert_abs_diff_eq!(below.r, above.r, epsilon = 1e-6);
        }
    }

    #[test]
    fn case3_is_limit_of_case2() {
        for &m in &[0.0, 0.3, 0.6] {
            let t = k1(m);
            let near = case2(t + 1e-6, m).unwrap();
            assert_abs_diff_eq!(near, case3(m).unwrap(), epsilon = 1e-5);
        }
    }

    #[test]
    fn radius_at_m_one_collapses() {
        let r = radius_ithm(RadiusQuery::new(0.3, 1.0).unwrap()).unwrap();
        assert_eq!(r.r, 0.0);
    }

    #[test]
    fn radius_a_beta_examples() {
        let r = radius_a_beta(1.0, &PhiTarget::Parabolic).unwrap();
        assert_abs_diff_eq!(r.r, 5f64.sqrt() - 2.0, epsilon = 1e-12);
        let r = radius_a_beta(1.0, &PhiTarget::RhoExp).unwrap();
        assert_abs_diff_eq!(r.r, 0.372153, epsilon = 5e-6);
        let r = radius_a_beta(0.0, &PhiTarget::Janowski { a: 1.0, b: -1.0 }).unwrap();
        let direct = radius_ithm(RadiusQuery::new(2.0 * LN_2 - 1.0, 0.0).unwrap()).unwrap();
        assert_abs_diff_eq!(r.r, direct.r, epsilon = 1e-10);
        let bs = r.beta_star.unwrap();
        assert_abs_diff_eq!(kappa(bs).unwrap(), k0(0.0), epsilon = 1e-8);
    }

    #[test]
    fn beta_zero_radius_matches_oracle_on_hypergeometric_extremal() {
        // Re(f/z) > 2 ln 2 - 1 is attained in the limit by the beta = 0 extremal
        let r = radius_a_beta(0.0, &PhiTarget::Janowski { a: 1.0, b: -1.0 }).unwrap();
        let f = crate::functions::NamedFunction::HypergeometricExtremal { beta: 0.0 }.normalized(400).unwrap();
        let measured = radius_numeric_oracle(&f, 0.0, 1e-9).unwrap();
        assert!(measured >= r.r - 1e-6, "{measured} < {}", r.r);
    }

    #[test]
    fn janowski_closed_form_examples() {
        let r = radius_janowski_closed_form(1.0, 1.0, -1.0).unwrap();
        assert_abs_diff_eq!(r.r, 2f64.sqrt() - 1.0, epsilon = 1e-14);
        let r = radius_janowski_closed_form(1.0, 0.0, -1.0).unwrap();
        let ithm = radius_ithm(RadiusQuery::new(0.0, 0.5).unwrap()).unwrap();
        assert_abs_diff_eq!(r.r, ithm.r, epsilon = 1e-10);
        let alpha = 0.75;
        let r = radius_janowski_closed_form(1.0, 1.0 - 2.0 * alpha, -1.0).unwrap();
        let ithm = radius_ithm(RadiusQuery::new(0.0, 0.75).unwrap()).unwrap();
        assert_abs_diff_eq!(r.r, ithm.r, epsilon = 1e-10);
        assert!(radius_janowski_closed_form(1.0, -1.0, 0.0).is_err());
    }

    #[test]
    fn janowski_threshold_matches_k0() {
        for &(a, b) in &[(1.0, -1.0), (0.0, -1.0), (0.5, -0.5), (0.3, 0.1), (-0.2, -0.9)] {
            let m = (1.0 - a) / (1.0 - b);
            assert_abs_diff_eq!(janowski_k_star(a, b), k0(m), epsilon = 1e-12);
        }
    }

    #[test]
    fn janowski_closed_form_matches_general_radius() {
        let grid = [-1.0, -0.5, 0.0, 0.5, 1.0];
        for &a in &grid {
            for &b in &grid {
                if !(b < a) {
                    continue;
                }
                for &beta in &[0.0, 0.5, 1.0] {
                    let closed = radius_janowski_closed_form(beta, a, b).unwrap();
                    let general = radius_a_beta(beta, &PhiTarget::Janowski { a, b }).unwrap();
                    assert_abs_diff_eq!(closed.r, general.r, epsilon = 1e-8);
                }
            }
        }
    }

    #[test]
    fn tuan_anh_examples() {
        let t = tuan_anh_bound(0.0, 0.5).unwrap();
        assert_eq!(t.branch, TuanAnhBranch::R1leR2);
        assert_abs_diff_eq!(t.bound, -4.0 / 3.0, epsilon = 1e-15);
        for alpha in [0.0, 0.3, 0.9] {
            let t = tuan_anh_bound(alpha, 0.0).unwrap();
            assert_eq!(t.bound, 0.0);
            assert_abs_diff_eq!(t.r1, alpha.sqrt(), epsilon = 1e-15);
        }
        for i in 1..=9 {
            let r = i as f64 / 10.0;
            assert_abs_diff_eq!(tuan_anh_bound(0.0, r).unwrap().bound, -2.0 * r / (1.0 - r * r), epsilon = 1e-12);
        }
        let t = tuan_anh_bound(0.9, 0.9).unwrap();
        assert_eq!(t.branch, TuanAnhBranch::R2leR1);
        assert_abs_diff_eq!(t.r1, 1.291_266_208_4, epsilon = 1e-9);
        assert_abs_diff_eq!(t.r2, 0.905_263_157_9, epsilon = 1e-9);
        assert_abs_diff_eq!(t.a, 1.852_631_578_9, epsilon = 1e-9);
        assert_abs_diff_eq!(t.bound, -1.700_991_620_723_106, epsilon = 1e-10);
        assert!(tuan_anh_bound(1.0, 0.5).is_err());
        assert!(tuan_anh_bound(0.5, 1.0).is_err());
    }

    #[test]
    fn tuan_anh_bound_is_attained_by_two_point_functions() {
        for &(alpha, r) in &[(0.9, 0.9), (0.7, 0.8), (0.5, 0.95), (0.2, 0.3)] {
            let t = tuan_anh_bound(alpha, r).unwrap();
            let (_, attained) = extremal_cos_theta(alpha, r);
            assert_abs_diff_eq!(attained, t.bound, epsilon = 1e-7);
        }
    }

    #[test]
    fn eqnf3_roots_checked_against_extremal() {
        // as printed, the angle equation does not single out the extremal at (0.9, 0.9)
        let roots = eqnf3_cos_theta(0.9, 0.9).unwrap();
        let bound = tuan_anh_bound(0.9, 0.9).unwrap().bound;
        let (c_star, _) = extremal_cos_theta(0.9, 0.9);
        // theta and pi - theta give the same minimum
        assert_abs_diff_eq!(c_star.abs(), 0.9786, epsilon = 1e-3);
        for c in roots {
            assert!((-1.0..=1.0).contains(&c));
            let (_, attained) = two_point_ring_min(0.9, 0.9, c.acos());
            assert!(attained >= bound - 1e-9);
            assert!((attained - bound).abs() > 1e-3);
        }
        // at alpha = 1/2 it does
        for r in [0.6, 0.8, 0.9] {
            let t = tuan_anh_bound(0.5, r).unwrap();
            assert_eq!(t.branch, TuanAnhBranch::R2leR1);
            let roots = eqnf3_cos_theta(0.5, r).unwrap();
            let best = roots
                .iter()
                .map(|c| (two_point_ring_min(0.5, r, c.acos()).1 - t.bound).abs())
                .fold(f64::INFINITY, f64::min);
            assert!(best < 1e-6, "r = {r}: {best}");
        }
    }

    #[test]
    fn numeric_oracle_examples() {
        assert_eq!(radius_numeric_oracle(&NormalizedSeries::identity(8), 0.9, 1e-8).unwrap(), 1.0);
        // the oracle probes r = 0.999 first, so the truncation must be accurate there
        let order = crate::membership::GridSpec::default().recommended_order();
        let koebe = crate::functions::NamedFunction::Koebe.normalized(order).unwrap();
        assert_abs_diff_eq!(radius_numeric_oracle(&koebe, 0.5, 1e-9).unwrap(), 1.0 / 3.0, epsilon = 1e-6);
        let f = case1_extremal(0.0, order);
        // z(1-z)/(1+z)
        assert_abs_diff_eq!(f.coeff(2).re, -2.0, epsilon = 1e-15);
        assert_abs_diff_eq!(f.coeff(3).re, 2.0, epsilon = 1e-15);
        assert_abs_diff_eq!(radius_numeric_oracle(&f, 0.0, 1e-9).unwrap(), 2f64.sqrt() - 1.0, epsilon = 1e-6);
        assert!(radius_numeric_oracle(&f, 0.0, 0.5).is_err());
    }

    #[test]
    fn formula_matches_oracle_on_sharpness_extremals() {
        for &k in &[0.0, 0.2, 0.4] {
            for &m in &[0.0, 0.3, 0.5] {
                let res = radius_ithm(RadiusQuery::new(k, m).unwrap()).unwrap();
                let f = match res.branch {
                    Branch::Case1 => case1_extremal(k, 600),
                    _ => case2_extremal(k, res.r, 600),
                };
                let measured = radius_numeric_oracle(&f, m, 1e-9).unwrap();
                assert_abs_diff_eq!(measured, res.r, epsilon = 1e-4);
            }
        }
    }

    #[test]
    fn decay_rates() {
        assert_abs_diff_eq!(decay_rate(&ClassSpec::Janowski { a: 0.0, b: -1.0 }).unwrap(), 0.5, epsilon = 1e-15);
        assert_eq!(decay_rate(&ClassSpec::ULambda { lambda: 1.0 / 3.0 }).unwrap(), 0.0);
        assert_abs_diff_eq!(
            decay_rate(&ClassSpec::ULambda { lambda: 0.25 }).unwrap(),
            0.25 / 1.125,
            epsilon = 1e-15
        );
        let s = 2f64.sqrt() - 1.0;
        let bs = decay_rate(&ClassSpec::Bs { alpha: s * s }).unwrap();
        assert_abs_diff_eq!(bs, s.powf(1.0 / (2.0 * s)), epsilon = 1e-12);
        assert_abs_diff_eq!(bs, 0.34511, epsilon = 1e-5);
        assert!(matches!(decay_rate(&ClassSpec::ULambda { lambda: 0.4 }), Err(Error::OutOfStatedRange(_))));
        assert!(matches!(decay_rate(&ClassSpec::Bs { alpha: 0.2 }), Err(Error::OutOfStatedRange(_))));
        assert!(matches!(decay_rate(&ClassSpec::Janowski { a: 0.1, b: -1.0 }), Err(Error::OutOfStatedRange(_))));
        assert!(decay_rate(&ClassSpec::G0).is_err());
    }

    #[test]
    fn convexity_root() {
        let r = convexity_radius_root().unwrap();
        assert_abs_diff_eq!(r, 2f64.sqrt() - 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(r.powi(4) - 6.0 * r * r + 1.0, 0.0, epsilon = 1e-12);
    }
}
