//! Parsers for the argument mini-grammars.

use std::fs;
use std::path::{Path, PathBuf};

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use semigen::functions::{parse_params, random_a_beta_member};
use semigen::{ClassSpec, GridSpec, NamedFunction, NormalizedSeries, PhiTarget, PowerSeries};

use crate::error::CliError;

/// Where a function's coefficients come from.
#[derive(Debug, Clone, PartialEq)]
pub enum FunctionSource {
    Named(NamedFunction),
    /// Seeded random member of `A_beta` built from a Herglotz measure.
    RandomABeta { beta: f64 },
    File(PathBuf),
}

pub const RANDOM_A_BETA: &str = "random_a_beta";

impl FunctionSource {
    /// `name:key=value,...` or a path ending in `.json`; `extra` holds
    /// further `key=value` pairs.
    pub fn parse(spec: &str, extra: &[String]) -> Result<Self, CliError> {
        let spec = spec.trim();
        if spec.ends_with(".json") {
            if !extra.is_empty() {
                return Err(CliError::Usage("--param does not apply to a series file".into()));
            }
            return Ok(FunctionSource::File(PathBuf::from(spec)));
        }
        let (name, rest) = spec.split_once(':').unwrap_or((spec, ""));
        let mut params = parse_params(rest)?;
        for p in extra {
            params.extend(parse_params(p)?);
        }
        if name == RANDOM_A_BETA {
            let beta = match params.as_slice() {
                [(k, v)] if k == "beta" => *v,
                _ => return Err(CliError::Usage(format!("`{RANDOM_A_BETA}` takes exactly one parameter `beta`"))),
            };
            return Ok(FunctionSource::RandomABeta { beta });
        }
        Ok(FunctionSource::Named(NamedFunction::from_name(name, &params)?))
    }

    /// Order the source fixes by itself, if any.
    pub fn intrinsic_order(&self) -> Result<Option<usize>, CliError> {
        match self {
            FunctionSource::File(p) => Ok(Some(read_series(p)?.order())),
            _ => Ok(None),
        }
    }

    pub fn series(&self, order: usize, seed: u64) -> Result<PowerSeries, CliError> {
        match self {
            FunctionSource::Named(f) => Ok(f.series(order)?),
            FunctionSource::RandomABeta { .. } => Ok(self.normalized(order, seed)?.into_series()),
            FunctionSource::File(p) => read_series(p),
        }
    }

    pub fn normalized(&self, order: usize, seed: u64) -> Result<NormalizedSeries, CliError> {
        match self {
            FunctionSource::Named(f) => Ok(f.normalized(order)?),
            FunctionSource::RandomABeta { beta } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                Ok(random_a_beta_member(&mut rng, *beta, order)?)
            }
            FunctionSource::File(p) => Ok(NormalizedSeries::new(read_series(p)?)?),
        }
    }
}

pub fn read_series(path: &Path) -> Result<PowerSeries, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: not a series file: {e}", path.display())))
}

/// `--class name:key=value` merged with `--param key=value` pairs.
pub fn class(spec: &str, extra: &[String]) -> Result<ClassSpec, CliError> {
    let (name, rest) = spec.split_once(':').unwrap_or((spec, ""));
    let mut params = parse_params(rest)?;
    for p in extra {
        params.extend(parse_params(p)?);
    }
    Ok(ClassSpec::from_name(name.trim(), &params)?)
}

/// `janowski:A,B`, `janowski:a=A,b=B`, `sg`, `parabolic`, `rhoexp`, `custom:file.json`.
pub fn target(spec: &str) -> Result<PhiTarget, CliError> {
    let (name, rest) = spec.split_once(':').unwrap_or((spec, ""));
    let t = match name.trim() {
        "sg" if rest.is_empty() => PhiTarget::Sg,
        "parabolic" if rest.is_empty() => PhiTarget::Parabolic,
        "rhoexp" if rest.is_empty() => PhiTarget::RhoExp,
        "janowski" => {
            let (a, b) = if rest.contains('=') {
                let params = parse_params(rest)?;
                let get = |key: &str| {
                    params
                        .iter()
                        .find(|(k, _)| k == key)
                        .map(|(_, v)| *v)
                        .ok_or_else(|| CliError::Usage(format!("janowski target needs `{key}`")))
                };
                if params.len() != 2 {
                    return Err(CliError::Usage("janowski target takes exactly `a` and `b`".into()));
                }
                (get("a")?, get("b")?)
            } else {
                let nums = numbers(rest, 2).map_err(|e| CliError::Usage(format!("janowski target: {e}")))?;
                (nums[0], nums[1])
            };
            PhiTarget::Janowski { a, b }
        }
        "custom" if !rest.is_empty() => PhiTarget::Custom { series: read_series(Path::new(rest))? },
        _ => {
            return Err(CliError::Usage(format!(
                "unknown target `{spec}` (known: janowski:A,B, sg, parabolic, rhoexp, custom:FILE)"
            )))
        }
    };
    t.validate()?;
    Ok(t)
}

/// Exactly `n` comma-separated numbers.
fn numbers(s: &str, n: usize) -> Result<Vec<f64>, String> {
    let v: Vec<f64> = s
        .split(',')
        .map(|p| p.trim().parse::<f64>().map_err(|_| format!("`{}` is not a number", p.trim())))
        .collect::<Result<_, _>>()?;
    if v.len() != n {
        return Err(format!("expected {n} comma-separated numbers, got {}", v.len()));
    }
    Ok(v)
}

/// `re,im` or a real number.
pub fn complex(s: &str) -> Result<Complex64, String> {
    if s.contains(',') {
        let v = numbers(s, 2)?;
        Ok(Complex64::new(v[0], v[1]))
    } else {
        let re = s.trim().parse::<f64>().map_err(|_| format!("`{s}` is not a number"))?;
        Ok(Complex64::new(re, 0.0))
    }
}

/// `rings=K,angles=M[,rmax=R]`.
pub fn grid(s: &str) -> Result<GridSpec, String> {
    let params = parse_params(s).map_err(|e| e.to_string())?;
    let mut rings = None;
    let mut angles = None;
    let mut r_max = 0.999;
    for (k, v) in params {
        let count = || {
            if v >= 1.0 && v.fract() == 0.0 {
                Ok(v as usize)
            } else {
                Err(format!("`{k}` must be a positive integer, got {v}"))
            }
        };
        match k.as_str() {
            "rings" => rings = Some(count()?),
            "angles" => angles = Some(count()?),
            "rmax" => r_max = v,
            other => return Err(format!("unknown grid key `{other}` (known: rings, angles, rmax)")),
        }
    }
    let defaults = GridSpec::default();
    let rings = rings.unwrap_or(defaults.radii.len());
    let angles = angles.unwrap_or(defaults.angular_samples);
    GridSpec::with_rings(rings, r_max, angles).map_err(|e| e.to_string())
}

/// Inclusive range `name=start:end:step`.
#[derive(Debug, Clone, PartialEq)]
pub struct Sweep {
    pub name: String,
    pub values: Vec<f64>,
}

pub fn sweep(s: &str) -> Result<Sweep, String> {
    let (name, range) = s.split_once('=').ok_or_else(|| format!("expected name=start:end:step, got `{s}`"))?;
    let parts: Vec<f64> = range
        .split(':')
        .map(|p| p.trim().parse::<f64>().map_err(|_| format!("`{p}` is not a number")))
        .collect::<Result<_, _>>()?;
    let [start, end, step] = parts[..] else {
        return Err(format!("expected start:end:step, got `{range}`"));
    };
    if !(step > 0.0) || !(end >= start) {
        return Err(format!("need step > 0 and end >= start, got `{range}`"));
    }
    let count = ((end - start) / step + 1e-9).floor() as usize;
    let mut values: Vec<f64> = (0..=count).map(|i| start + step * i as f64).collect();
    // snap the last sample to `end` when the step divides the range
    if let Some(last) = values.last_mut() {
        if (end - *last).abs() < 1e-9 * step.max(1.0) {
            *last = end;
        }
    }
    Ok(Sweep { name: name.trim().to_string(), values })
}
