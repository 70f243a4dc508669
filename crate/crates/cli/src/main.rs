//! `ohsz`: spectra sweeps, crossing catalogs, B₁ and gap scans, power-law
//! fits, discriminant audits and plots for the OH X²Π₃/₂ Stark-Zeeman
//! problem.
//!
//! Exit status: 0 success, 1 usage or input error, 2 validation failure.

mod plot;
mod table;

use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use ohsz_core::crossings::{
    b1_approx, b1_exact, crossing_catalog, gap_delta_3_2, CrossingOptions, CROSSING_THRESHOLD,
};
use ohsz_core::discriminant::{audit, AuditOptions, Transcription};
use ohsz_core::fit::{fit_power_law, fit_sin_power, FitResult};
use ohsz_core::{analytic_eigenvalues, convert_energy, EnergyUnit, ScaledParameters, Scaling, SymmetricMatrix8};
use rayon::prelude::*;

use table::{num, Cell, Table};

#[derive(Parser)]
#[command(name = "ohsz", version, about = "OH Stark-Zeeman spectra, crossings and gap scaling")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Angle between the fields, degrees.
    #[arg(long, global = true, conflicts_with = "theta_rad")]
    theta_deg: Option<f64>,
    /// Angle between the fields, radians.
    #[arg(long, global = true)]
    theta_rad: Option<f64>,
    /// Electric field, V/cm.
    #[arg(long, global = true, default_value_t = 0.0)]
    e_vcm: f64,
    /// Energy unit for eigenvalues and gaps.
    #[arg(long, global = true, value_enum, default_value_t = Unit::Percm)]
    unit: Unit,
    /// Output file; stdout when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// TOML file with `delta_ghz` and/or `mu_e_debye`.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Unit {
    Ghz,
    Percm,
}

impl Unit {
    fn energy(self) -> EnergyUnit {
        match self {
            Unit::Ghz => EnergyUnit::InternalGhz,
            Unit::Percm => EnergyUnit::InverseCm,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Sweep {
    E,
    Theta,
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    PowerInE,
    PowerInSinTheta,
}

#[derive(Args)]
struct SweepArgs {
    /// Swept variable; the other one comes from --e-vcm or --theta-*.
    #[arg(long, value_enum)]
    vs: Sweep,
    /// Start of the sweep (V/cm, or radians for theta unless --deg).
    #[arg(long)]
    from: f64,
    /// End of the sweep.
    #[arg(long)]
    to: f64,
    #[arg(long, default_value_t = 101)]
    points: usize,
    /// Theta sweep bounds are in degrees.
    #[arg(long)]
    deg: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Eigenvalues λ₁…λ₈ versus magnetic field.
    Spectrum {
        #[arg(long, default_value_t = 0.0)]
        b_min: f64,
        #[arg(long, default_value_t = 0.2)]
        b_max: f64,
        #[arg(long, default_value_t = 201)]
        points: usize,
    },
    /// Crossings and avoided crossings at fixed E and theta.
    Crossings {
        /// Also list the negative-field mirror records.
        #[arg(long)]
        mirror: bool,
        /// Gap (GHz) below which a minimum is a true crossing.
        #[arg(long, default_value_t = CROSSING_THRESHOLD)]
        threshold: f64,
    },
    /// Exact and approximate B₁ versus E or theta.
    B1(SweepArgs),
    /// The δ₋₃/₂ gap at B₁ versus E or theta.
    Gap(SweepArgs),
    /// Power-law fit of one column of a data file against another.
    Fit {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        model: Model,
        /// Lower end of the fit window, in the units of the x column.
        #[arg(long)]
        from: f64,
        /// Upper end of the fit window.
        #[arg(long)]
        to: f64,
        #[arg(long, default_value_t = 0)]
        x_col: usize,
        #[arg(long, default_value_t = 1)]
        y_col: usize,
    },
    /// Check the factored discriminant against the eigenvalue product.
    Audit {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = AuditOptions::default().seed)]
        seed: u64,
        /// Test mode: flip the sign of coefficient g<K>.
        #[arg(long, value_name = "K")]
        flip_sign: Option<usize>,
        /// Restrict the sample to E = 0.
        #[arg(long)]
        zero_field: bool,
        /// Use the coefficients exactly as printed, without corrections.
        #[arg(long)]
        as_printed: bool,
    },
    /// Line plot (SVG) of a data file: first column against the rest.
    Plot {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        title: Option<String>,
    },
    /// Dump the 8×8 matrix (internal units) at one field point.
    Hamiltonian {
        #[arg(long, default_value_t = 0.0)]
        b_tesla: f64,
    },
}

/// A computed result failed its acceptance check.
#[derive(Debug)]
struct ValidationFailure(String);

impl fmt::Display for ValidationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ValidationFailure {}

fn exit_code(err: &anyhow::Error) -> u8 {
    use ohsz_core::Error as E;
    if err.downcast_ref::<ValidationFailure>().is_some() {
        return 2;
    }
    match err.downcast_ref::<E>() {
        Some(E::BranchValidation(_) | E::RootFinding(_) | E::NonRealSpectrum { .. }) => 2,
        _ => 1,
    }
}

struct Ctx {
    scaling: Scaling,
    theta: f64,
    e_vcm: f64,
    unit: Unit,
}

impl Ctx {
    fn new(c: &Common) -> Result<Self> {
        let scaling = match &c.config {
            Some(p) => Scaling::from_config_file(p)?,
            None => Scaling::default(),
        };
        let theta = match (c.theta_deg, c.theta_rad) {
            (Some(d), _) => d.to_radians(),
            (_, Some(r)) => r,
            _ => 0.0,
        };
        if !theta.is_finite() || !c.e_vcm.is_finite() {
            bail!("field parameters must be finite");
        }
        Ok(Self { scaling, theta, e_vcm: c.e_vcm, unit: c.unit })
    }

    fn energy(&self, ghz: f64) -> f64 {
        convert_energy(ghz, EnergyUnit::InternalGhz, self.unit.energy())
    }

    fn unit_label(&self) -> &'static str {
        self.unit.energy().label()
    }

    fn table(&self, command: &str, columns: &[&str]) -> Table {
        let mut t = Table::new(command, columns);
        t.note("theta_rad", num(self.theta));
        t.note("e_vcm", num(self.e_vcm));
        t.note("delta_tilde_ghz", num(self.scaling.delta_tilde()));
        t.note("b_tilde_ghz_per_tesla", num(self.scaling.b_tilde_per_tesla()));
        t.note("e_tilde_ghz_per_vcm", num(self.scaling.e_tilde_from_vcm(1.0)));
        t.note("energy_unit", self.unit_label());
        t
    }
}

fn grid(from: f64, to: f64, points: usize) -> Result<Vec<f64>> {
    if points < 2 {
        bail!("--points must be at least 2, got {points}");
    }
    if !(from.is_finite() && to.is_finite() && from < to) {
        bail!("invalid range: need min < max, got [{from}, {to}]");
    }
    Ok((0..points).map(|k| from + (to - from) * k as f64 / (points - 1) as f64).collect())
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn spectrum(ctx: &Ctx, b_min: f64, b_max: f64, points: usize) -> Result<String> {
    let bs = grid(b_min, b_max, points)?;
    let unit = ctx.unit_label();
    let names: Vec<String> = std::iter::once("B_T".to_string())
        .chain((1..=8).map(|i| format!("lambda{i}_{unit}")))
        .collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let mut t = ctx.table("spectrum", &refs);
    let rows = bs
        .par_iter()
        .map(|&b| {
            let s = analytic_eigenvalues(&ctx.scaling.scaled(ctx.e_vcm, b, ctx.theta))?;
            let mut row = vec![Cell::Num(b)];
            row.extend(s.lambdas.iter().map(|&l| Cell::Num(ctx.energy(l))));
            Ok(row)
        })
        .collect::<std::result::Result<Vec<_>, ohsz_core::Error>>()?;
    t.rows = rows;
    Ok(t.render())
}

fn crossings(ctx: &Ctx, mirror: bool, threshold: f64) -> Result<String> {
    if !(threshold > 0.0) {
        bail!("--threshold must be positive");
    }
    let p = ctx.scaling.scaled(ctx.e_vcm, 0.0, ctx.theta);
    let opts = CrossingOptions { include_mirror: mirror, threshold, ..Default::default() };
    let records = crossing_catalog(&ctx.scaling, &p, &opts)?;
    let gap_col = format!("gap_{}", ctx.unit_label());
    let mut t = ctx.table(
        "crossings",
        &["b_location_T", "root_location_T", "kind", "pair_i", "pair_j", &gap_col, "source"],
    );
    t.note("threshold_ghz", num(threshold));
    t.note("mirror", mirror);
    for r in records {
        t.rows.push(vec![
            Cell::Num(r.b_location),
            Cell::Num(r.root_location),
            Cell::Text(r.kind.label()),
            Cell::Int(r.pair.0),
            Cell::Int(r.pair.1),
            Cell::Num(ctx.energy(r.gap)),
            Cell::Text(r.source.label()),
        ]);
    }
    Ok(t.render())
}

/// Sweep values in lab units and the scaled parameters at `B = 0`.
fn sweep_points(ctx: &Ctx, a: &SweepArgs) -> Result<(Vec<f64>, Vec<ScaledParameters>, &'static str)> {
    let (from, to) = match (a.vs, a.deg) {
        (Sweep::Theta, true) => (a.from.to_radians(), a.to.to_radians()),
        _ => (a.from, a.to),
    };
    let xs = grid(from, to, a.points)?;
    let (params, name) = match a.vs {
        Sweep::E => (xs.iter().map(|&e| ctx.scaling.scaled(e, 0.0, ctx.theta)).collect(), "E_vcm"),
        Sweep::Theta => (xs.iter().map(|&t| ctx.scaling.scaled(ctx.e_vcm, 0.0, t)).collect(), "theta_rad"),
    };
    Ok((xs, params, name))
}

fn note_sweep(t: &mut Table, a: &SweepArgs) {
    t.note("sweep", match a.vs {
        Sweep::E => "E",
        Sweep::Theta => "theta",
    });
    if a.vs == Sweep::E {
        t.provenance.retain(|(k, _)| k != "e_vcm");
    } else {
        t.provenance.retain(|(k, _)| k != "theta_rad");
    }
}

fn b1_scan(ctx: &Ctx, a: &SweepArgs) -> Result<String> {
    let (xs, params, name) = sweep_points(ctx, a)?;
    let mut t = ctx.table("b1", &[name, "B1_exact_T", "B1_approx_T"]);
    note_sweep(&mut t, a);
    let vals = params
        .par_iter()
        .map(|p| Ok((b1_exact(&ctx.scaling, p)?, b1_approx(&ctx.scaling, p))))
        .collect::<std::result::Result<Vec<_>, ohsz_core::Error>>()?;
    t.rows = xs.iter().zip(vals).map(|(&x, (e, ap))| vec![Cell::Num(x), Cell::Num(e), Cell::Num(ap)]).collect();
    Ok(t.render())
}

fn gap_scan(ctx: &Ctx, a: &SweepArgs) -> Result<String> {
    let (xs, params, name) = sweep_points(ctx, a)?;
    let gap_col = format!("gap_{}", ctx.unit_label());
    let mut t = ctx.table("gap", &[name, &gap_col]);
    note_sweep(&mut t, a);
    let vals = params
        .par_iter()
        .map(gap_delta_3_2)
        .collect::<std::result::Result<Vec<_>, ohsz_core::Error>>()?;
    t.rows = xs.iter().zip(vals).map(|(&x, g)| vec![Cell::Num(x), Cell::Num(ctx.energy(g))]).collect();
    Ok(t.render())
}

fn fit(input: &Path, model: Model, from: f64, to: f64, x_col: usize, y_col: usize) -> Result<String> {
    if !(from < to) {
        bail!("invalid fit window: need --from < --to, got [{from}, {to}]");
    }
    let data = table::read(input)?;
    let mut xs = data.column(x_col)?;
    let ys = data.column(y_col)?;
    let x_name = &data.columns[x_col];
    if matches!(model, Model::PowerInSinTheta) && x_name.ends_with("_deg") {
        xs.iter_mut().for_each(|x| *x = x.to_radians());
    }
    let (wx, wy): (Vec<f64>, Vec<f64>) = xs.iter().zip(&ys).filter(|(x, _)| (from..=to).contains(*x)).unzip();
    let r: FitResult = match model {
        Model::PowerInE => fit_power_law(&wx, &wy)?,
        Model::PowerInSinTheta => fit_sin_power(&wx, &wy)?,
    };
    let y_name = &data.columns[y_col];
    let form = match model {
        Model::PowerInE => format!("{y_name} = coefficient * {x_name}^exponent"),
        Model::PowerInSinTheta => format!("{y_name} = coefficient * |sin {x_name}|^exponent"),
    };
    Ok(format!(
        "model: {}\nform: {form}\ninput: {}\ncoefficient: {}\nexponent: {}\nrms_residual: {}\nwindow: [{}, {}]\npoints: {}\n",
        r.model.label(),
        input.display(),
        num(r.coefficient),
        num(r.exponent),
        num(r.rms_residual),
        num(r.window.0),
        num(r.window.1),
        r.points
    ))
}

fn run_audit(ctx: &Ctx, samples: usize, seed: u64, flip: Option<usize>, zero_field: bool, as_printed: bool) -> Result<(String, bool)> {
    if samples == 0 {
        bail!("--samples must be positive");
    }
    let opts = AuditOptions {
        samples,
        seed,
        flip_sign: flip,
        zero_field_only: zero_field,
        transcription: if as_printed { Transcription::AsPrinted } else { Transcription::Corrected },
        ..Default::default()
    };
    let report = audit(&ctx.scaling, &opts)?;
    Ok((report.to_string(), report.passed))
}

fn hamiltonian(ctx: &Ctx, b_tesla: f64) -> String {
    let h = SymmetricMatrix8::from_params(&ctx.scaling.scaled(ctx.e_vcm, b_tesla, ctx.theta));
    let mut s = String::new();
    for row in h.entries {
        let cells: Vec<String> = row.iter().map(|&v| num(v)).collect();
        s.push_str(&cells.join(" "));
        s.push('\n');
    }
    s
}

fn run(cli: Cli) -> Result<()> {
    let ctx = Ctx::new(&cli.common)?;
    let out = cli.common.out.as_deref();
    let text = match cli.command {
        Command::Spectrum { b_min, b_max, points } => spectrum(&ctx, b_min, b_max, points)?,
        Command::Crossings { mirror, threshold } => crossings(&ctx, mirror, threshold)?,
        Command::B1(a) => b1_scan(&ctx, &a)?,
        Command::Gap(a) => gap_scan(&ctx, &a)?,
        Command::Fit { input, model, from, to, x_col, y_col } => fit(&input, model, from, to, x_col, y_col)?,
        Command::Audit { samples, seed, flip_sign, zero_field, as_printed } => {
            let (text, passed) = run_audit(&ctx, samples, seed, flip_sign, zero_field, as_printed)?;
            emit(out, &text)?;
            if !passed {
                return Err(ValidationFailure("discriminant audit exceeded tolerance".into()).into());
            }
            return Ok(());
        }
        Command::Plot { input, title } => {
            let data = table::read(&input)?;
            let title = title.unwrap_or_else(|| {
                input.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
            });
            plot::render(&data, &title)?
        }
        Command::Hamiltonian { b_tesla } => hamiltonian(&ctx, b_tesla),
    };
    emit(out, &text)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
