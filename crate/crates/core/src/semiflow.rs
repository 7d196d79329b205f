//! Semiflows `du/dt = -f(u)`, `u(0) = z`, integrated with an adaptive
//! Dormand-Prince 5(4) pair and its continuous extension.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::PowerSeries;

pub const DEFAULT_STEP_TOL: f64 = 1e-9;
const ESCAPE_SLACK: f64 = 1e-6;

const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const A71: f64 = 35.0 / 384.0;
const A73: f64 = 500.0 / 1113.0;
const A74: f64 = 125.0 / 192.0;
const A75: f64 = -2187.0 / 6784.0;
const A76: f64 = 11.0 / 84.0;

const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

const D1: f64 = -12715105075.0 / 11282082432.0;
const D3: f64 = 87487479700.0 / 32700410799.0;
const D4: f64 = -10690763975.0 / 1880347072.0;
const D5: f64 = 701980252875.0 / 199316789632.0;
const D6: f64 = -1453857185.0 / 822651844.0;
const D7: f64 = 69997945.0 / 29380423.0;

/// Sampled orbit `u(t_i, z0)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub points: Vec<Complex64>,
    pub z0: Complex64,
    pub f_id: String,
}

impl Trajectory {
    pub fn end(&self) -> Complex64 {
        *self.points.last().expect("trajectory has at least one point")
    }

    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.f_id = id.into();
        self
    }
}

/// Outcome of checking `|u(t)| <= |z0| e^{-kt}` along a trajectory.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DecayCertificate {
    pub rate_k: f64,
    pub max_violation: f64,
    pub holds: bool,
}

/// `|u(t+s, z0) - u(t, u(s, z0))|`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SemigroupDefect {
    pub defect: f64,
    pub holds: bool,
}

/// One accepted step with what is needed for dense output.
struct Step {
    t0: f64,
    t1: f64,
    h: f64,
    y1: Complex64,
    cont: [Complex64; 5],
}

impl Step {
    fn eval(&self, t: f64) -> Complex64 {
        let th = (t - self.t0) / self.h;
        let th1 = 1.0 - th;
        let [r1, r2, r3, r4, r5] = self.cont;
        r1 + th * (r2 + th1 * (r3 + th * (r4 + th1 * r5)))
    }
}

fn check_inside(u: Complex64, t: f64) -> Result<()> {
    let modulus = u.norm();
    if !(modulus <= 1.0 + ESCAPE_SLACK) {
        return Err(Error::EscapedDisk { t, modulus });
    }
    Ok(())
}

/// Drives the integrator from `0` to `t_end`, calling `on_step` after each
/// accepted step.
fn drive(
    rhs: impl Fn(Complex64) -> Complex64,
    z0: Complex64,
    t_end: f64,
    step_tol: f64,
    mut on_step: impl FnMut(&Step) -> Result<()>,
) -> Result<Complex64> {
    if !(z0.norm() < 1.0) {
        return Err(Error::BadParams(format!("start point {z0} must lie in the open unit disk")));
    }
    if !(t_end >= 0.0) || !t_end.is_finite() {
        return Err(Error::BadParams(format!("end time {t_end} must be finite and non-negative")));
    }
    if !(step_tol > 0.0) {
        return Err(Error::BadParams(format!("step tolerance {step_tol} must be positive")));
    }
    let f = |u: Complex64| -rhs(u);
    let mut t = 0.0;
    let mut y = z0;
    let mut k1 = f(y);
    let mut h = (0.01f64).min(t_end);
    while t < t_end {
        if t + h > t_end {
            h = t_end - t;
        }
        if h < 1e-14 * t.abs().max(1.0) {
            return Err(Error::StepUnderflow(t));
        }
        let k2 = f(y + k1 * (h * A21));
        let k3 = f(y + (k1 * A31 + k2 * A32) * h);
        let k4 = f(y + (k1 * A41 + k2 * A42 + k3 * A43) * h);
        let k5 = f(y + (k1 * A51 + k2 * A52 + k3 * A53 + k4 * A54) * h);
        let k6 = f(y + (k1 * A61 + k2 * A62 + k3 * A63 + k4 * A64 + k5 * A65) * h);
        let y1 = y + (k1 * A71 + k3 * A73 + k4 * A74 + k5 * A75 + k6 * A76) * h;
        let k7 = f(y1);
        let err_vec = (k1 * E1 + k3 * E3 + k4 * E4 + k5 * E5 + k6 * E6 + k7 * E7) * h;
        let scale = step_tol * (1.0 + y.norm().max(y1.norm()));
        let err = err_vec.norm() / scale;
        if err <= 1.0 && y1.is_finite() {
            let ydiff = y1 - y;
            let bspl = k1 * h - ydiff;
            let cont = [
                y,
                ydiff,
                bspl,
                ydiff - k7 * h - bspl,
                (k1 * D1 + k3 * D3 + k4 * D4 + k5 * D5 + k6 * D6 + k7 * D7) * h,
            ];
            let t1 = if t_end - (t + h) < 1e-15 * t_end.max(1.0) { t_end } else { t + h };
            let step = Step { t0: t, t1, h, y1, cont };
            t = t1;
            check_inside(y1, t)?;
            on_step(&step)?;
            y = y1;
            k1 = k7;
        }
        let fac = if err == 0.0 || !err.is_finite() {
            if err.is_finite() {
                5.0
            } else {
                0.2
            }
        } else {
            (0.9 * err.powf(-0.2)).clamp(0.2, 5.0)
        };
        h *= fac;
    }
    Ok(y)
}

fn series_id(f: &PowerSeries) -> String {
    format!("series(order={})", f.order())
}

/// Solution of `du/dt = -f(u)`, `u(0) = z0`, recorded at every accepted step.
pub fn integrate(f: &PowerSeries, z0: Complex64, t_end: f64, step_tol: f64) -> Result<Trajectory> {
    integrate_fn(|u| f.eval(u), z0, t_end, step_tol).map(|t| t.with_id(series_id(f)))
}

/// As [`integrate`] for any right-hand side.
pub fn integrate_fn(
    rhs: impl Fn(Complex64) -> Complex64,
    z0: Complex64,
    t_end: f64,
    step_tol: f64,
) -> Result<Trajectory> {
    let mut times = vec![0.0];
    let mut points = vec![z0];
    drive(rhs, z0, t_end, step_tol, |s| {
        times.push(s.t1);
        points.push(s.y1);
        Ok(())
    })?;
    Ok(Trajectory { times, points, z0, f_id: "fn".into() })
}

/// Solution sampled at the given increasing times via dense output.
pub fn integrate_at(f: &PowerSeries, z0: Complex64, times: &[f64], step_tol: f64) -> Result<Trajectory> {
    integrate_at_fn(|u| f.eval(u), z0, times, step_tol).map(|t| t.with_id(series_id(f)))
}

/// As [`integrate_at`] for any right-hand side.
pub fn integrate_at_fn(
    rhs: impl Fn(Complex64) -> Complex64,
    z0: Complex64,
    times: &[f64],
    step_tol: f64,
) -> Result<Trajectory> {
    if times.iter().any(|t| !(*t >= 0.0)) || times.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::BadParams("sample times must be non-negative and nondecreasing".into()));
    }
    let t_end = times.last().copied().unwrap_or(0.0);
    let mut points = Vec::with_capacity(times.len());
    let mut next = 0;
    while next < times.len() && times[next] == 0.0 {
        points.push(z0);
        next += 1;
    }
    drive(rhs, z0, t_end, step_tol, |s| {
        while next < times.len() && times[next] <= s.t1 {
            let u = s.eval(times[next]);
            check_inside(u, times[next])?;
            points.push(u);
            next += 1;
        }
        Ok(())
    })?;
    Ok(Trajectory { times: times.to_vec(), points, z0, f_id: "fn".into() })
}

/// `n + 1` equally spaced times on `[0, t_end]`.
pub fn uniform_times(t_end: f64, n: usize) -> Vec<f64> {
    (0..=n).map(|i| if i == n { t_end } else { t_end * i as f64 / n as f64 }).collect()
}

/// Checks `|u(t_i)| <= |z0| e^{-k t_i} + tol` at every sample.
pub fn verify_decay(traj: &Trajectory, k: f64, tol: f64) -> DecayCertificate {
    let r0 = traj.z0.norm();
    let max_violation = traj
        .times
        .iter()
        .zip(&traj.points)
        .map(|(&t, u)| u.norm() - r0 * (-k * t).exp())
        .fold(f64::NEG_INFINITY, f64::max);
    DecayCertificate { rate_k: k, max_violation, holds: max_violation <= tol }
}

/// Semigroup-law defect for the flow of `f`. The step tolerance is the
/// smaller of [`DEFAULT_STEP_TOL`] and `tol / 1000`.
pub fn verify_semigroup_law(f: &PowerSeries, z0: Complex64, t: f64, s: f64, tol: f64) -> Result<SemigroupDefect> {
    if !(t >= 0.0 && s >= 0.0) {
        return Err(Error::BadParams(format!("times must be non-negative, got t = {t}, s = {s}")));
    }
    let step_tol = DEFAULT_STEP_TOL.min(tol * 1e-3);
    let direct = integrate(f, z0, t + s, step_tol)?.end();
    let mid = integrate(f, z0, s, step_tol)?.end();
    let composed = integrate(f, mid, t, step_tol)?.end();
    let defect = (direct - composed).norm();
    Ok(SemigroupDefect { defect, holds: defect < tol })
}

/// `u(horizon, z0)`, the estimate of the attracting point.
pub fn wolff_limit(f: &PowerSeries, z0: Complex64, horizon: f64) -> Result<Complex64> {
    Ok(integrate(f, z0, horizon, DEFAULT_STEP_TOL)?.end())
}
