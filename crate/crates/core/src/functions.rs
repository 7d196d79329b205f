//! Named functions, kernels and extremals, Herglotz functions, and random
//! class members for property testing.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{exp_integral_transform, NormalizedSeries, PowerSeries, ZERO_TOL};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// A function from the registry, with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "tag", rename_all = "snake_case")]
pub enum NamedFunction {
    /// `z`.
    Identity,
    /// `z(1+z)/(1-z)`: a generator in `G[0]` that is not starlike.
    HalfPlaneExtremal,
    /// `z/(1-z+z^2)`: starlike but not a generator.
    StarlikeNonGenerator,
    /// `z/(1-z)^2`.
    Koebe,
    /// `z/((1+z)(1+lambda z))`, extremal for `U(lambda)`.
    ULambdaExtremal { lambda: f64 },
    /// `z + sum_{n>=2} 2/(n-(n-1)beta) z^n`, extremal for the coefficient test.
    HypergeometricExtremal { beta: f64 },
    /// `sum_{n>=1} (1+gamma)/(n+gamma) z^n`, convex for `Re gamma >= -1/2`.
    BernardiKernel { gamma: Complex64 },
    /// `-log(1-z)`.
    LogKernel,
    /// `log((1-xz)/(1-z)) / (1-x)` for `|x| <= 1`, `x != 1`.
    XLogKernel { x: Complex64 },
    /// `z exp(int_0^z (phi(t)-1)/t dt)` for the Janowski target `(1+Az)/(1+Bz)`.
    MaMindaExtremal { a: f64, b: f64 },
    /// `p(z) = ((1+z e^{-i theta})/(1-z e^{-i theta}) + (1+z e^{i theta})/(1-z e^{i theta}))/2`.
    /// Not normalized: this is a Caratheodory function with `p(0) = 1`.
    TwoPointHerglotz { theta: f64 },
}

impl NamedFunction {
    /// Stable registry name, usable on the command line.
    pub fn name(&self) -> &'static str {
        match self {
            NamedFunction::Identity => "identity",
            NamedFunction::HalfPlaneExtremal => "half_plane",
            NamedFunction::StarlikeNonGenerator => "starlike_non_generator",
            NamedFunction::Koebe => "koebe",
            NamedFunction::ULambdaExtremal { .. } => "u_lambda",
            NamedFunction::HypergeometricExtremal { .. } => "hyper",
            NamedFunction::BernardiKernel { .. } => "bernardi",
            NamedFunction::LogKernel => "log",
            NamedFunction::XLogKernel { .. } => "xlog",
            NamedFunction::MaMindaExtremal { .. } => "ma_minda",
            NamedFunction::TwoPointHerglotz { .. } => "two_point",
        }
    }

    pub const NAMES: [&'static str; 11] = [
        "identity",
        "half_plane",
        "starlike_non_generator",
        "koebe",
        "u_lambda",
        "hyper",
        "bernardi",
        "log",
        "xlog",
        "ma_minda",
        "two_point",
    ];

    /// Builds a registry entry from its name and `key=value` parameters.
    ///
    /// Complex parameters take an optional `_im` companion, e.g.
    /// `xlog` with `x=0, x_im=1` is `x = i`.
    pub fn from_name(name: &str, params: &[(String, f64)]) -> Result<Self> {
        let get = |key: &str| params.iter().find(|(k, _)| k == key).map(|(_, v)| *v);
        let need = |key: &str| {
            get(key).ok_or_else(|| Error::BadParams(format!("function `{name}` needs parameter `{key}`")))
        };
        let complex = |key: &str, default: f64| {
            Complex64::new(get(key).unwrap_or(default), get(&format!("{key}_im")).unwrap_or(0.0))
        };
        let allowed: &[&str] = match name {
            "u_lambda" => &["lambda"],
            "hyper" => &["beta"],
            "bernardi" => &["gamma", "gamma_im"],
            "xlog" => &["x", "x_im"],
            "ma_minda" => &["a", "b"],
            "two_point" => &["theta"],
            _ => &[],
        };
        if let Some((k, _)) = params.iter().find(|(k, _)| !allowed.contains(&k.as_str())) {
            return Err(Error::BadParams(format!("function `{name}` has no parameter `{k}`")));
        }
        let f = match name {
            "identity" => NamedFunction::Identity,
            "half_plane" => NamedFunction::HalfPlaneExtremal,
            "starlike_non_generator" => NamedFunction::StarlikeNonGenerator,
            "koebe" => NamedFunction::Koebe,
            "u_lambda" => NamedFunction::ULambdaExtremal { lambda: need("lambda")? },
            "hyper" => NamedFunction::HypergeometricExtremal { beta: need("beta")? },
            "bernardi" => NamedFunction::BernardiKernel { gamma: complex("gamma", 0.0) },
            "log" => NamedFunction::LogKernel,
            "xlog" => NamedFunction::XLogKernel { x: complex("x", -1.0) },
            "ma_minda" => NamedFunction::MaMindaExtremal { a: need("a")?, b: need("b")? },
            "two_point" => NamedFunction::TwoPointHerglotz { theta: need("theta")? },
            other => {
                return Err(Error::BadParams(format!(
                    "unknown function `{other}` (known: {})",
                    Self::NAMES.join(", ")
                )))
            }
        };
        f.validate()?;
        Ok(f)
    }

    /// Checks the parameter range of the tag.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::BadParams(msg));
        match *self {
            NamedFunction::ULambdaExtremal { lambda } if !(lambda > 0.0 && lambda <= 1.0) => {
                bad(format!("lambda = {lambda} must lie in (0, 1]"))
            }
            NamedFunction::HypergeometricExtremal { beta } if !(0.0..=1.0).contains(&beta) => {
                bad(format!("beta = {beta} must lie in [0, 1]"))
            }
            NamedFunction::BernardiKernel { gamma } if !(gamma.re >= -0.5) => {
                bad(format!("Re gamma = {} must be >= -1/2", gamma.re))
            }
            NamedFunction::XLogKernel { x } if !(x.norm() <= 1.0 + 1e-12) || (x - ONE).norm() < 1e-12 => {
                bad(format!("x = {x} must satisfy |x| <= 1, x != 1"))
            }
            NamedFunction::MaMindaExtremal { a, b } if !(-1.0 <= b && b < a && a <= 1.0) => {
                bad(format!("need -1 <= B < A <= 1, got A = {a}, B = {b}"))
            }
            NamedFunction::TwoPointHerglotz { theta } if !theta.is_finite() => {
                bad(format!("theta = {theta} must be finite"))
            }
            _ => Ok(()),
        }
    }

    /// Whether the series is normalized (`f(0) = 0`, `f'(0) = 1`).
    pub fn is_normalized(&self) -> bool {
        !matches!(self, NamedFunction::TwoPointHerglotz { .. })
    }

    /// Truncated series of the function, of the given order (at least 2).
    pub fn series(&self, order: usize) -> Result<PowerSeries> {
        if order < 2 {
            return Err(Error::BadParams(format!("order {order} must be at least 2")));
        }
        self.validate()?;
        let real = |x: f64| Complex64::new(x, 0.0);
        let s = match *self {
            NamedFunction::Identity => PowerSeries::identity(order),
            NamedFunction::HalfPlaneExtremal => {
                PowerSeries::from_fn(order, |n| match n {
                    0 => ZERO,
                    1 => ONE,
                    _ => real(2.0),
                })
            }
            NamedFunction::StarlikeNonGenerator => {
                // 1/(1-z+z^2) has b_n = b_{n-1} - b_{n-2}: period 1, 1, 0, -1, -1, 0
                const CYCLE: [f64; 6] = [1.0, 1.0, 0.0, -1.0, -1.0, 0.0];
                PowerSeries::from_fn(order, |n| if n == 0 { ZERO } else { real(CYCLE[(n - 1) % 6]) })
            }
            NamedFunction::Koebe => PowerSeries::from_fn(order, |n| real(n as f64)),
            NamedFunction::ULambdaExtremal { lambda } => {
                // 1/((1+z)(1+lambda z)) = sum (-1)^n (1 + lambda + ... + lambda^n) z^n
                let mut partial = 0.0;
                let mut pw = 1.0;
                let mut tail = Vec::with_capacity(order);
                for n in 0..order {
                    partial += pw;
                    pw *= lambda;
                    tail.push(real(if n % 2 == 0 { partial } else { -partial }));
                }
                PowerSeries::from_fn(order, |n| if n == 0 { ZERO } else { tail[n - 1] })
            }
            NamedFunction::HypergeometricExtremal { beta } => PowerSeries::from_fn(order, |n| match n {
                0 => ZERO,
                1 => ONE,
                _ => real(2.0 / (n as f64 - (n as f64 - 1.0) * beta)),
            }),
            NamedFunction::BernardiKernel { gamma } => PowerSeries::from_fn(order, |n| {
                if n == 0 {
                    ZERO
                } else {
                    (ONE + gamma) / (gamma + n as f64)
                }
            }),
            NamedFunction::LogKernel => {
                PowerSeries::from_fn(order, |n| if n == 0 { ZERO } else { real(1.0 / n as f64) })
            }
            NamedFunction::XLogKernel { x } => {
                // (1 - x^n) / (n (1 - x)) = (1 + x + ... + x^{n-1}) / n
                let mut partial = ZERO;
                let mut pw = ONE;
                PowerSeries::from_fn(order, |n| {
                    if n == 0 {
                        return ZERO;
                    }
                    partial += pw;
                    pw *= x;
                    partial / n as f64
                })
            }
            NamedFunction::MaMindaExtremal { a, b } => {
                let phi = janowski_series(a, b, order - 1);
                ma_minda_extremal(&phi)?.into_series()
            }
            NamedFunction::TwoPointHerglotz { theta } => PowerSeries::from_fn(order, |n| {
                if n == 0 {
                    ONE
                } else {
                    real(2.0 * (n as f64 * theta).cos())
                }
            }),
        };
        Ok(s)
    }

    /// Normalized series; fails for the Caratheodory-type entries.
    pub fn normalized(&self, order: usize) -> Result<NormalizedSeries> {
        if !self.is_normalized() {
            return Err(Error::BadParams(format!("`{}` is not a normalized function", self.name())));
        }
        NormalizedSeries::new(self.series(order)?)
    }
}

impl fmt::Display for NamedFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            NamedFunction::ULambdaExtremal { lambda } => write!(f, "u_lambda:lambda={lambda}"),
            NamedFunction::HypergeometricExtremal { beta } => write!(f, "hyper:beta={beta}"),
            NamedFunction::BernardiKernel { gamma } => {
                write!(f, "bernardi:gamma={},gamma_im={}", gamma.re, gamma.im)
            }
            NamedFunction::XLogKernel { x } => write!(f, "xlog:x={},x_im={}", x.re, x.im),
            NamedFunction::MaMindaExtremal { a, b } => write!(f, "ma_minda:a={a},b={b}"),
            NamedFunction::TwoPointHerglotz { theta } => write!(f, "two_point:theta={theta}"),
            _ => f.write_str(self.name()),
        }
    }
}

/// Parses the `name:key=value,key=value` mini-grammar.
impl FromStr for NamedFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, rest) = s.split_once(':').unwrap_or((s, ""));
        let params = parse_params(rest)?;
        NamedFunction::from_name(name.trim(), &params)
    }
}

/// Parses `key=value,key=value` into pairs; an empty string gives no pairs.
pub fn parse_params(s: &str) -> Result<Vec<(String, f64)>> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            let (k, v) = p
                .split_once('=')
                .ok_or_else(|| Error::BadParams(format!("expected key=value, got `{p}`")))?;
            let v: f64 = v
                .trim()
                .parse()
                .map_err(|_| Error::BadParams(format!("`{v}` is not a number (key `{k}`)")))?;
            Ok((k.trim().to_string(), v))
        })
        .collect()
}

/// Janowski target `(1+Az)/(1+Bz)`: `phi_n = (A-B)(-B)^{n-1}` for `n >= 1`.
pub fn janowski_series(a: f64, b: f64, order: usize) -> PowerSeries {
    let mut pw = 1.0;
    PowerSeries::from_fn(order, |n| {
        if n == 0 {
            return ONE;
        }
        let c = (a - b) * pw;
        pw *= -b;
        Complex64::new(c, 0.0)
    })
}

/// `z exp(int_0^z (phi(t)-1)/t dt)`: the function whose `z f'/f` equals `phi`.
pub fn ma_minda_extremal(phi: &PowerSeries) -> Result<NormalizedSeries> {
    if (phi.coeff(0) - ONE).norm() > ZERO_TOL {
        return Err(Error::BadNormalization(phi.coeff(0).to_string()));
    }
    let mut h = phi.clone().into_coeffs();
    h[0] = ZERO;
    let e = exp_integral_transform(&PowerSeries::new(h)?)?;
    NormalizedSeries::new(e.times_z())
}

/// The function with `z f'/f - 1 = psi`, i.e. `z exp(int_0^z psi(t)/t dt)`.
pub fn f_psi_extremal(psi: &PowerSeries) -> Result<NormalizedSeries> {
    let e = exp_integral_transform(psi)?;
    NormalizedSeries::new(e.times_z())
}

/// A convex combination of Mobius kernels, `p(z) = sum_j w_j (1 + conj(x_j) z)/(1 - conj(x_j) z)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HerglotzSpec {
    points: Vec<Complex64>,
    weights: Vec<f64>,
}

impl HerglotzSpec {
    pub fn new(points: Vec<Complex64>, weights: Vec<f64>) -> Result<Self> {
        if points.is_empty() || points.len() != weights.len() {
            return Err(Error::BadWeights(format!(
                "{} points but {} weights",
                points.len(),
                weights.len()
            )));
        }
        if let Some(w) = weights.iter().find(|w| !(**w > 0.0)) {
            return Err(Error::BadWeights(format!("weight {w} is not positive")));
        }
        let total: f64 = weights.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::BadWeights(format!("weights sum to {total}, not 1")));
        }
        if let Some(x) = points.iter().find(|x| (x.norm() - 1.0).abs() > 1e-12) {
            return Err(Error::BadWeights(format!("point {x} is not unimodular")));
        }
        Ok(Self { points, weights })
    }

    /// Atoms at the given angles.
    pub fn from_angles(angles: &[f64], weights: Vec<f64>) -> Result<Self> {
        Self::new(angles.iter().map(|&t| Complex64::from_polar(1.0, t)).collect(), weights)
    }

    /// 2 to 5 atoms at uniform angles with Dirichlet(1) weights.
    pub fn random(rng: &mut impl Rng) -> Self {
        let atoms = rng.gen_range(2..=5);
        let angles: Vec<f64> = (0..atoms).map(|_| rng.gen_range(0.0..2.0 * PI)).collect();
        let raw: Vec<f64> = (0..atoms).map(|_| -(1.0 - rng.gen::<f64>()).ln() + 1e-9).collect();
        let total: f64 = raw.iter().sum();
        let mut weights: Vec<f64> = raw.iter().map(|w| w / total).collect();
        // absorb rounding so the weights sum to 1 to the last bit
        let drift = 1.0 - weights.iter().sum::<f64>();
        weights[0] += drift;
        Self::from_angles(&angles, weights).expect("random Herglotz spec is valid")
    }

    pub fn points(&self) -> &[Complex64] {
        &self.points
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Series of `p`: `p_0 = 1`, `p_n = 2 sum_j w_j conj(x_j)^n`.
    pub fn p_series(&self, order: usize) -> PowerSeries {
        let mut powers: Vec<Complex64> = vec![ONE; self.points.len()];
        PowerSeries::from_fn(order, |n| {
            if n == 0 {
                return ONE;
            }
            let mut acc = ZERO;
            for ((pw, x), w) in powers.iter_mut().zip(&self.points).zip(&self.weights) {
                *pw *= x.conj();
                acc += *pw * *w;
            }
            acc * 2.0
        })
    }

    /// Closed-form value of `p(z)`, for cross-checks.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.points
            .iter()
            .zip(&self.weights)
            .map(|(x, w)| (ONE + x.conj() * z) / (ONE - x.conj() * z) * *w)
            .sum()
    }
}

/// Series of `p` for a Herglotz spec.
pub fn herglotz_p(spec: &HerglotzSpec, order: usize) -> PowerSeries {
    spec.p_series(order)
}

/// The normalized `f` with `beta f/z + (1-beta) f' = p`:
/// `a_1 = 1` and `a_n = p_{n-1} / (beta + n(1-beta))` for `n >= 2`.
/// The result has order `p.order() + 1`.
pub fn solve_a_beta_from_p(p: &PowerSeries, beta: f64) -> Result<NormalizedSeries> {
    if !(0.0..=1.0).contains(&beta) {
        return Err(Error::BadParams(format!("beta = {beta} must lie in [0, 1]")));
    }
    if (p.coeff(0) - ONE).norm() > ZERO_TOL {
        return Err(Error::BadNormalization(p.coeff(0).to_string()));
    }
    let tail: Vec<Complex64> = (2..=p.order() + 1)
        .map(|n| p.coeff(n - 1) / (beta + n as f64 * (1.0 - beta)))
        .collect();
    Ok(NormalizedSeries::from_tail(&tail))
}

/// A random member of `A_beta`, built from a random Herglotz function.
/// The returned series has the requested order.
pub fn random_a_beta_member(rng: &mut impl Rng, beta: f64, order: usize) -> Result<NormalizedSeries> {
    let spec = HerglotzSpec::random(rng);
    solve_a_beta_from_p(&spec.p_series(order.max(2) - 1), beta)
}
