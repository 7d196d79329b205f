//! Class identifiers with parameters, parsed from the `name:key=value` grammar.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::functions::parse_params;
use crate::membership::{
    check_a_beta, check_bs_subordination, check_janowski_subordination, check_u_lambda, GridSpec,
    MembershipReport,
};
use crate::series::NormalizedSeries;

/// A function class together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum ClassSpec {
    /// `Re(beta f/z + (1-beta) f') > 0`.
    ABeta { beta: f64 },
    /// `Re(f/z) > 0`, the same as `ABeta { beta: 1 }`.
    G0,
    /// `|f'(z/f)^2 - 1| < lambda`.
    ULambda { lambda: f64 },
    /// `z f'/f - 1 < z/(1 - alpha z^2)`.
    Bs { alpha: f64 },
    /// `z f'/f < (1+Az)/(1+Bz)`.
    Janowski { a: f64, b: f64 },
}

impl ClassSpec {
    pub const NAMES: [&'static str; 5] = ["a_beta", "g0", "u", "bs", "janowski"];

    pub fn name(&self) -> &'static str {
        match self {
            ClassSpec::ABeta { .. } => "a_beta",
            ClassSpec::G0 => "g0",
            ClassSpec::ULambda { .. } => "u",
            ClassSpec::Bs { .. } => "bs",
            ClassSpec::Janowski { .. } => "janowski",
        }
    }

    pub fn from_name(name: &str, params: &[(String, f64)]) -> Result<Self> {
        let get = |key: &str| params.iter().find(|(k, _)| k == key).map(|(_, v)| *v);
        let need = |key: &str| {
            get(key).ok_or_else(|| Error::BadParams(format!("class `{name}` needs parameter `{key}`")))
        };
        let allowed: &[&str] = match name {
            "a_beta" => &["beta"],
            "u" => &["lambda"],
            "bs" => &["alpha"],
            "janowski" => &["a", "b"],
            _ => &[],
        };
        if let Some((k, _)) = params.iter().find(|(k, _)| !allowed.contains(&k.as_str())) {
            return Err(Error::BadParams(format!("class `{name}` has no parameter `{k}`")));
        }
        let c = match name {
            "a_beta" => ClassSpec::ABeta { beta: need("beta")? },
            "g0" => ClassSpec::G0,
            "u" => ClassSpec::ULambda { lambda: need("lambda")? },
            "bs" => ClassSpec::Bs { alpha: need("alpha")? },
            "janowski" => ClassSpec::Janowski { a: need("a")?, b: need("b")? },
            other => {
                return Err(Error::BadParams(format!(
                    "unknown class `{other}` (known: {})",
                    Self::NAMES.join(", ")
                )))
            }
        };
        Ok(c)
    }

    /// Grid membership check for this class.
    pub fn check(&self, f: &NormalizedSeries, grid: &GridSpec) -> Result<MembershipReport> {
        match *self {
            ClassSpec::ABeta { beta } => check_a_beta(f, beta, grid),
            ClassSpec::G0 => check_a_beta(f, 1.0, grid),
            ClassSpec::ULambda { lambda } => check_u_lambda(f, lambda, grid),
            ClassSpec::Bs { alpha } => check_bs_subordination(f, alpha, grid),
            ClassSpec::Janowski { a, b } => check_janowski_subordination(f, a, b, grid),
        }
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ClassSpec::ABeta { beta } => write!(f, "a_beta:beta={beta}"),
            ClassSpec::G0 => f.write_str("g0"),
            ClassSpec::ULambda { lambda } => write!(f, "u:lambda={lambda}"),
            ClassSpec::Bs { alpha } => write!(f, "bs:alpha={alpha}"),
            ClassSpec::Janowski { a, b } => write!(f, "janowski:a={a},b={b}"),
        }
    }
}

impl FromStr for ClassSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, rest) = s.split_once(':').unwrap_or((s, ""));
        ClassSpec::from_name(name.trim(), &parse_params(rest)?)
    }
}
