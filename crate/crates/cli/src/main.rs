//! `whichpath`: config-driven sweeps over the two-slit which-path
//! observables, emitted as CSV or JSON.
//!
//! Exit codes: 0 success, 1 configuration/validation error, 2 numerical
//! failure.

mod config;
mod table;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use whichpath::decoherence::{
    visibility_closed_form, visibility_numeric, zero_photon_factor, TrajectoryPair,
};
use whichpath::fieldmeas::{
    critical_charge_z1, critical_charge_z1_exact_geometry, field_difference,
    field_difference_first_order, field_uncertainty, BrApparatus,
};
use whichpath::gravity::{
    critical_mass, detector_response, fringe_vs_planck, required_phi_pp_accuracy, GravityDetector,
};
use whichpath::pathinfo::distinguishability_of_charge;
use whichpath::pattern::{
    duality_curve, monte_carlo_pattern, recover_visibility, Envelope, PatternConfig,
};
use whichpath::units::constants;

use config::{DetectorBlock, Format, RunConfig};
use table::{Cell, Table};

#[derive(Parser)]
#[command(name = "whichpath", version, about = "Two-slit which-path observables: field-measurement limits, distinguishability, radiative visibility, duality curve, pattern buildup, gravitational analog")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Field-measurement limit, averaged-field difference, and the critical charge Z1
    BohrRosenfeld(RunArgs),
    /// Distinguishability sweep D(Z)
    Distinguishability(RunArgs),
    /// Visibility sweep V(Z) with the zero-photon factors
    Visibility(VisibilityArgs),
    /// Duality curve: columns Z, V, D, f with f = V^2 + D^2
    DualityCurve(RunArgs),
    /// Monte Carlo pattern buildup: histogram CSV plus a sidecar JSON with the recovered visibility
    Pattern(RunArgs),
    /// Gravitational analog: critical mass, fringe scale, Planck-length ratio
    Gravity(RunArgs),
}

#[derive(Args)]
struct RunArgs {
    /// JSON run configuration
    #[arg(long)]
    config: PathBuf,
    /// Override a dot-path key, e.g. --set experiment.Z=7e5 (repeatable)
    #[arg(long = "set", value_name = "KEY=VALUE")]
    overrides: Vec<String>,
    /// Output path (defaults to the config's output.path, else stdout)
    #[arg(long)]
    output: Option<PathBuf>,
    /// Output format (defaults to the config's output.format, else csv)
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args)]
struct VisibilityArgs {
    #[command(flatten)]
    run: RunArgs,
    /// Also evaluate the mode-integral pipeline (slower)
    #[arg(long)]
    numeric: bool,
}

#[derive(Debug)]
pub enum CliError {
    Config(String),
    Numerics(String),
}

impl From<whichpath::Error> for CliError {
    fn from(e: whichpath::Error) -> Self {
        match e {
            whichpath::Error::Numerics(m) => CliError::Numerics(m),
            other => CliError::Config(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::BohrRosenfeld(args) => run(args, cmd_bohr_rosenfeld),
        Command::Distinguishability(args) => run(args, cmd_distinguishability),
        Command::Visibility(args) => run(&args.run, |cfg| cmd_visibility(cfg, args.numeric)),
        Command::DualityCurve(args) => run(args, cmd_duality_curve),
        Command::Pattern(args) => run_pattern(args),
        Command::Gravity(args) => run(args, cmd_gravity),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Numerics(msg)) => {
            eprintln!("numerical error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(args: &RunArgs, build: impl Fn(&RunConfig) -> Result<Table, CliError>) -> Result<(), CliError> {
    let cfg = config::load(&args.config, &args.overrides)?;
    print_warnings(&cfg)?;
    let table = build(&cfg)?;
    let (format, path) = output_target(args, &cfg);
    let rendered = match format {
        Format::Csv => table.to_csv(),
        Format::Json => table.to_json(),
    };
    match path {
        Some(p) => fs::write(&p, rendered)
            .map_err(|e| CliError::Config(format!("cannot write {}: {e}", p.display())))?,
        None => print!("{rendered}"),
    }
    Ok(())
}

fn print_warnings(cfg: &RunConfig) -> Result<(), CliError> {
    let exp = cfg.experiment_config()?;
    for w in exp.warnings() {
        eprintln!("warning: {w}");
    }
    Ok(())
}

fn output_target(args: &RunArgs, cfg: &RunConfig) -> (Format, Option<PathBuf>) {
    let block = cfg.output.as_ref();
    let format = args
        .format
        .or_else(|| block.map(|b| b.format))
        .unwrap_or_default();
    let path = args
        .output
        .clone()
        .or_else(|| block.and_then(|b| b.path.clone()));
    (format, path)
}

fn cmd_bohr_rosenfeld(cfg: &RunConfig) -> Result<Table, CliError> {
    let exp = cfg.experiment_config()?;
    let app = match &cfg.detector {
        Some(DetectorBlock::BohrRosenfeld(b)) => {
            BrApparatus::new(b.xi, b.t_meas, exp.detector_distance())?
        }
        Some(DetectorBlock::Gravity(_)) => {
            return Err(CliError::Config(
                "`bohr-rosenfeld` needs a field detector block (xi, t_meas), found a gravity detector".into(),
            ))
        }
        None => BrApparatus::canonical(&exp),
    };
    let z = exp.charge_number();
    let d = exp.slit_spacing();
    let mut t = Table::new(vec![
        "delta_e",
        "field_difference",
        "field_difference_first_order",
        "z1",
        "z1_exact_geometry",
    ]);
    t.push(vec![
        Cell::Float(field_uncertainty(&app)),
        Cell::Float(field_difference(z, app.r, d, app.xi)),
        Cell::Float(field_difference_first_order(z, app.r, d, app.xi)),
        Cell::Float(critical_charge_z1(&exp)),
        Cell::Float(critical_charge_z1_exact_geometry(&exp)),
    ]);
    Ok(t)
}

fn cmd_distinguishability(cfg: &RunConfig) -> Result<Table, CliError> {
    let exp = cfg.experiment_config()?;
    let grid = cfg.sweep_grid("distinguishability")?;
    let mut t = Table::new(vec!["Z", "D"]);
    for z in grid {
        t.push(vec![
            Cell::Float(z),
            Cell::Float(distinguishability_of_charge(z, &exp)?),
        ]);
    }
    Ok(t)
}

fn cmd_visibility(cfg: &RunConfig, numeric: bool) -> Result<Table, CliError> {
    let exp = cfg.experiment_config()?;
    let grid = cfg.sweep_grid("visibility")?;
    let mut columns = vec![
        "Z",
        "log_V",
        "V",
        "zero_photon_factor",
        "single_path_factor",
    ];
    if numeric {
        columns.push("log_V_numeric");
        columns.push("V_numeric");
    }
    let trajectory = if numeric {
        Some(TrajectoryPair::central_fringe(&exp)?)
    } else {
        None
    };
    let mut t = Table::new(columns);
    for z in grid {
        let v = visibility_closed_form(z, &exp)?;
        let zp = zero_photon_factor(z, &exp)?;
        let mut row = vec![
            Cell::Float(z),
            Cell::Float(v.log_visibility),
            Cell::Float(v.visibility),
            Cell::Float(zp.pattern_factor),
            Cell::Float(zp.single_path_factor),
        ];
        if let Some(traj) = &trajectory {
            let vn = visibility_numeric(z, &exp, traj)?;
            row.push(Cell::Float(vn.log_visibility));
            row.push(Cell::Float(vn.visibility));
        }
        t.push(row);
    }
    Ok(t)
}

fn cmd_duality_curve(cfg: &RunConfig) -> Result<Table, CliError> {
    let exp = cfg.experiment_config()?;
    let grid = cfg.sweep_grid("duality-curve")?;
    let mut t = Table::new(vec!["Z", "V", "D", "f"]);
    for p in duality_curve(&exp, &grid)? {
        t.push(vec![
            Cell::Float(p.charge_number),
            Cell::Float(p.visibility),
            Cell::Float(p.distinguishability),
            Cell::Float(p.duality_sum),
        ]);
    }
    Ok(t)
}

fn run_pattern(args: &RunArgs) -> Result<(), CliError> {
    let cfg = config::load(&args.config, &args.overrides)?;
    print_warnings(&cfg)?;
    let exp = cfg.experiment_config()?;
    let mc = cfg
        .mc
        .as_ref()
        .ok_or_else(|| CliError::Config("`pattern` needs an `mc` block (n_particles, seed, bins, halfwidth)".into()))?;
    let (format, path) = output_target(args, &cfg);
    let Some(path) = path else {
        return Err(CliError::Config(
            "`pattern` writes a histogram plus a sidecar JSON and needs an output path (--output or output.path)".into(),
        ));
    };

    let pcfg = PatternConfig::new(exp, mc.bins, mc.halfwidth, Envelope::None)?;
    let z = exp.charge_number();
    let hist = monte_carlo_pattern(&pcfg, z, mc.n_particles, mc.seed)?;
    let fringe = exp.fringe_spacing();
    let estimate = recover_visibility(&hist, fringe);
    if !estimate.is_reliable() {
        eprintln!(
            "warning: histogram spans only {:.2} fringe periods (< 3); the recovered visibility is imprecise",
            estimate.periods_spanned
        );
    }

    let mut t = Table::new(vec!["bin_center", "counts"]);
    for (i, &c) in hist.counts().iter().enumerate() {
        t.push(vec![Cell::Float(hist.bin_center(i)), Cell::Int(c)]);
    }
    let rendered = match format {
        Format::Csv => t.to_csv(),
        Format::Json => t.to_json(),
    };
    fs::write(&path, rendered)
        .map_err(|e| CliError::Config(format!("cannot write {}: {e}", path.display())))?;

    let model_v = visibility_closed_form(z, &exp)?.visibility;
    let sidecar = serde_json::json!({
        "recovered_visibility": estimate.value,
        "periods_spanned": estimate.periods_spanned,
        "reliable": estimate.is_reliable(),
        "model_visibility": model_v,
        "fringe_spacing": fringe,
        "Z": z,
        "n_particles": mc.n_particles,
        "seed": mc.seed,
        "bins": mc.bins,
        "halfwidth": mc.halfwidth,
    });
    let sidecar_path = path.with_extension("meta.json");
    fs::write(&sidecar_path, format!("{sidecar:#}\n"))
        .map_err(|e| CliError::Config(format!("cannot write {}: {e}", sidecar_path.display())))?;
    Ok(())
}

fn cmd_gravity(cfg: &RunConfig) -> Result<Table, CliError> {
    let exp = cfg.experiment_config()?;
    let k = constants();
    let report = fringe_vs_planck(&exp, exp.mass())?;
    let accuracy =
        required_phi_pp_accuracy(exp.mass(), exp.detector_distance(), exp.slit_spacing())?;
    let mut columns = vec![
        "m_crit",
        "fringe",
        "ratio_to_planck_length",
        "ct_over_r",
        "mass_exceeds_critical",
        "bound_holds",
        "required_phi_pp",
        "required_phi_pp_leading",
        "planck_mass",
        "planck_length",
    ];
    let gravity_det = match &cfg.detector {
        Some(DetectorBlock::Gravity(g)) => {
            columns.push("response_quarter_period");
            Some(GravityDetector::new(g.s, g.omega, g.x0, exp.detector_distance())?)
        }
        _ => None,
    };
    let mut row = vec![
        Cell::Float(critical_mass(&exp)),
        Cell::Float(report.fringe),
        Cell::Float(report.ratio_to_planck_length),
        Cell::Float(report.ct_over_r),
        Cell::Bool(report.mass_exceeds_critical),
        Cell::Bool(report.bound_holds),
        Cell::Float(accuracy.exact),
        Cell::Float(accuracy.leading_order),
        Cell::Float(k.planck_mass),
        Cell::Float(k.planck_length),
    ];
    if let Some(det) = gravity_det {
        let quarter = 0.5 * std::f64::consts::PI / det.frequency;
        row.push(Cell::Float(detector_response(&det, accuracy.exact, quarter)?));
    }
    let mut t = Table::new(columns);
    t.push(row);
    Ok(t)
}
