//! One function per subcommand; each returns the text written to stdout.

use std::fs;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use semigen::radius::{decay_rate, kappa, radius_a_beta};
use semigen::semiflow::{integrate_at, uniform_times, verify_decay};
use semigen::{ClassSpec, DecayCertificate, GridSpec, MembershipReport, PhiTarget, RadiusResult, Trajectory};

use crate::args::{FunctionSource, Sweep};
use crate::error::CliError;
use crate::format::{json, Cell, Csv};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Truncation order used when neither `--order` nor `SEMIGEN_ORDER` is set
/// and the grid does not dictate one.
pub const FLOW_ORDER: usize = 4096;

pub fn member_report(report: &MembershipReport, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => json(report),
        Format::Csv => {
            let mut t = Csv::new(&["member", "witness_min", "witness_re", "witness_im", "functional"]);
            t.row([
                Cell::from(report.member.to_string()),
                report.witness_min.into(),
                report.witness_point.re.into(),
                report.witness_point.im.into(),
                report.functional_name.as_str().into(),
            ]);
            Ok(t.finish())
        }
    }
}

pub fn member(
    class: ClassSpec,
    f: &FunctionSource,
    grid: &GridSpec,
    order: Option<usize>,
    seed: u64,
    format: Format,
) -> Result<String, CliError> {
    let order = match f.intrinsic_order()? {
        Some(n) => n,
        None => order.unwrap_or_else(|| grid.recommended_order()),
    };
    let f = f.normalized(order, seed)?;
    member_report(&class.check(&f, grid)?, format)
}

/// One row of a radius table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub beta: f64,
    pub kappa: f64,
    pub m: f64,
    pub r: f64,
    pub branch: semigen::Branch,
}

impl From<(f64, RadiusResult)> for SweepRow {
    fn from((beta, res): (f64, RadiusResult)) -> Self {
        Self { beta, kappa: res.k, m: res.m, r: res.r, branch: res.branch }
    }
}

fn branch_name(b: semigen::Branch) -> String {
    format!("{b:?}")
}

pub fn radius_rows(rows: &[SweepRow]) -> String {
    let mut t = Csv::new(&["beta", "kappa", "m", "r", "branch"]);
    for row in rows {
        t.row([row.beta.into(), row.kappa.into(), row.m.into(), row.r.into(), branch_name(row.branch).into()]);
    }
    t.finish()
}

fn check_beta(beta: f64) -> Result<(), CliError> {
    if (0.0..=1.0).contains(&beta) {
        Ok(())
    } else {
        Err(CliError::Usage(format!("beta = {beta} must lie in [0, 1]")))
    }
}

pub fn radius(beta: f64, target: &PhiTarget, format: Format) -> Result<String, CliError> {
    check_beta(beta)?;
    let res = radius_a_beta(beta, target)?;
    match format {
        Format::Json => json(&res),
        Format::Csv => Ok(radius_rows(&[(beta, res).into()])),
    }
}

pub fn radius_sweep_rows(sweep: &Sweep, target: &PhiTarget) -> Result<Vec<SweepRow>, CliError> {
    if sweep.name != "beta" {
        return Err(CliError::Usage(format!("can only sweep `beta`, got `{}`", sweep.name)));
    }
    sweep
        .values
        .iter()
        .map(|&beta| {
            check_beta(beta)?;
            Ok((beta, radius_a_beta(beta, target)?).into())
        })
        .collect()
}

pub fn radius_sweep(sweep: &Sweep, target: &PhiTarget, format: Format) -> Result<String, CliError> {
    let rows = radius_sweep_rows(sweep, target)?;
    match format {
        Format::Json => json(&rows),
        Format::Csv => Ok(radius_rows(&rows)),
    }
}

/// `--rate` value: a number, or a class whose closed-form decay rate is used.
pub fn rate(spec: &str) -> Result<f64, CliError> {
    if let Ok(k) = spec.trim().parse::<f64>() {
        if !(k >= 0.0 && k.is_finite()) {
            return Err(CliError::Usage(format!("rate must be a finite number >= 0, got {k}")));
        }
        return Ok(k);
    }
    let class: ClassSpec = spec.parse()?;
    Ok(decay_rate(&class)?)
}

/// Trajectory together with its decay check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FlowReport {
    pub trajectory: Trajectory,
    pub certificate: DecayCertificate,
}

/// Parameters of `flow`.
pub struct FlowQuery<'a> {
    pub f: &'a FunctionSource,
    pub label: String,
    pub z0: Complex64,
    pub t_end: f64,
    pub samples: usize,
    pub rate: f64,
    pub step_tol: f64,
    pub order: Option<usize>,
    pub seed: u64,
}

pub const DECAY_TOL: f64 = 1e-6;

pub fn flow(q: &FlowQuery, format: Format) -> Result<String, CliError> {
    if !(q.z0.norm() < 1.0) {
        return Err(CliError::Usage(format!("|z0| = {} must be < 1", q.z0.norm())));
    }
    if !(q.t_end > 0.0 && q.t_end.is_finite()) {
        return Err(CliError::Usage(format!("T = {} must be positive", q.t_end)));
    }
    if q.samples == 0 {
        return Err(CliError::Usage("--samples must be at least 1".into()));
    }
    if !(q.step_tol > 0.0) {
        return Err(CliError::Usage(format!("step tolerance {} must be positive", q.step_tol)));
    }
    let order = match q.f.intrinsic_order()? {
        Some(n) => n,
        None => q.order.unwrap_or(FLOW_ORDER),
    };
    let f = q.f.series(order, q.seed)?;
    let times = uniform_times(q.t_end, q.samples);
    let trajectory = integrate_at(&f, q.z0, &times, q.step_tol)?.with_id(q.label.clone());
    let certificate = verify_decay(&trajectory, q.rate, DECAY_TOL);
    match format {
        Format::Json => json(&FlowReport { trajectory, certificate }),
        Format::Csv => {
            let r0 = q.z0.norm();
            let mut t = Csv::new(&["t", "re_u", "im_u", "abs_u", "bound"]);
            for (&ti, u) in trajectory.times.iter().zip(&trajectory.points) {
                t.row([ti.into(), u.re.into(), u.im.into(), u.norm().into(), (r0 * (-q.rate * ti).exp()).into()]);
            }
            Ok(t.finish())
        }
    }
}

/// Coefficients of a convolution.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvolveReport {
    pub f: String,
    pub g: String,
    pub series: semigen::PowerSeries,
}

pub struct ConvolveQuery<'a> {
    pub f: &'a FunctionSource,
    pub g: &'a FunctionSource,
    pub labels: (String, String),
    pub check: Option<ClassSpec>,
    pub grid: &'a GridSpec,
    pub order: Option<usize>,
    pub seed: u64,
}

pub fn convolve(q: &ConvolveQuery, format: Format) -> Result<String, CliError> {
    let order = match (q.f.intrinsic_order()?, q.g.intrinsic_order()?) {
        (Some(a), Some(b)) => a.min(b),
        (Some(a), None) | (None, Some(a)) => a,
        (None, None) => q.order.unwrap_or_else(|| q.grid.recommended_order()),
    };
    let f = q.f.normalized(order, q.seed)?;
    let g = q.g.normalized(order, q.seed)?;
    let h = f.hadamard(&g);
    if let Some(class) = q.check {
        return member_report(&class.check(&h, q.grid)?, format);
    }
    match format {
        Format::Json => json(&ConvolveReport { f: q.labels.0.clone(), g: q.labels.1.clone(), series: h.into_series() }),
        Format::Csv => {
            let mut t = Csv::new(&["n", "re", "im"]);
            for (n, c) in h.as_series().coeffs().iter().enumerate() {
                t.row([Cell::from(n.to_string()), c.re.into(), c.im.into()]);
            }
            Ok(t.finish())
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KappaRow {
    pub beta: f64,
    pub kappa: f64,
}

pub fn kappa_rows(betas: &[f64]) -> Result<Vec<KappaRow>, CliError> {
    betas
        .iter()
        .map(|&beta| {
            check_beta(beta)?;
            Ok(KappaRow { beta, kappa: kappa(beta)? })
        })
        .collect()
}

fn kappa_csv(rows: &[KappaRow]) -> String {
    let mut t = Csv::new(&["beta", "kappa"]);
    for r in rows {
        t.row([r.beta.into(), r.kappa.into()]);
    }
    t.finish()
}

pub fn kappa_cmd(betas: &[f64], single: bool, format: Format) -> Result<String, CliError> {
    let rows = kappa_rows(betas)?;
    match (format, single) {
        (Format::Json, true) => json(&rows[0]),
        (Format::Json, false) => json(&rows),
        (Format::Csv, _) => Ok(kappa_csv(&rows)),
    }
}

/// Classes and parameters listed in the decay-rate table.
pub fn decay_table_classes() -> Vec<ClassSpec> {
    let mut out = vec![];
    for (a, b) in [(0.0, -1.0), (-0.5, -1.0), (0.0, -0.5), (-0.25, -0.75), (-0.5, -0.75)] {
        out.push(ClassSpec::Janowski { a, b });
    }
    for alpha in [0.025, 0.05, 0.1, 0.15, 3.0 - 2.0 * 2f64.sqrt()] {
        out.push(ClassSpec::Bs { alpha });
    }
    for lambda in [0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 1.0 / 3.0] {
        out.push(ClassSpec::ULambda { lambda });
    }
    out
}

/// Files written by `table`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableManifest {
    pub files: Vec<String>,
}

pub fn table(out: &Path, betas: &Sweep, janowski: (f64, f64)) -> Result<String, CliError> {
    fs::create_dir_all(out).map_err(|e| CliError::Io(format!("cannot create {}: {e}", out.display())))?;
    let (a, b) = janowski;
    let targets = [
        ("radius_janowski.csv", PhiTarget::Janowski { a, b }),
        ("radius_sg.csv", PhiTarget::Sg),
        ("radius_parabolic.csv", PhiTarget::Parabolic),
        ("radius_rhoexp.csv", PhiTarget::RhoExp),
    ];
    for (_, t) in &targets {
        t.validate()?;
    }
    let mut files = vec![];
    let mut write = |name: &str, body: String| -> Result<(), CliError> {
        let path = out.join(name);
        fs::write(&path, body).map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?;
        files.push(name.to_string());
        Ok(())
    };
    for (name, target) in &targets {
        write(name, radius_rows(&radius_sweep_rows(betas, target)?))?;
    }
    write("kappa.csv", kappa_csv(&kappa_rows(&betas.values)?))?;
    let mut t = Csv::new(&["class", "rate"]);
    for class in decay_table_classes() {
        t.row([class.to_string().into(), decay_rate(&class)?.into()]);
    }
    write("decay_rates.csv", t.finish())?;
    json(&TableManifest { files })
}
