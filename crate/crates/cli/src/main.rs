//! `superwalk`: run the superlattice quantum walk, sweep pulse-timing
//! errors, and report lattice design numbers.
//!
//! Exit codes: 0 on success, 2 for usage and domain errors, 1 when a
//! simulation outgrows its lattice or an output file cannot be written.

mod manifest;
mod output;

use std::fmt;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use superwalk_core::classical::CLASSICAL_LABEL;
use superwalk_core::{analysis, lattice, Error as CoreError};

use manifest::{CommandConfig, DataFormat, Manifest};

#[derive(Parser)]
#[command(
    name = "superwalk",
    version,
    about = "Discrete-time quantum walk of a single atom in an alternating optical superlattice"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evolve the walk and emit the final site distribution per timing offset.
    Run(RunArgs),
    /// Track the probability at one site across steps 0..=N.
    Trace(TraceArgs),
    /// Report couplings, pulse timing, and rotation angle for a lattice design.
    Lattice(LatticeArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Number of walk steps.
    #[arg(long, required_unless_present = "config", conflicts_with = "config")]
    steps: Option<usize>,
    /// Comma-separated dimensionless pulse-timing offsets (J * dt0).
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "0",
        conflicts_with = "config",
        allow_negative_numbers = true
    )]
    dt0: Vec<f64>,
    /// Append the classical random-walk baseline as the last column.
    #[arg(long, conflicts_with = "config")]
    classical: bool,
    /// Lattice half-width override (default: steps + 1).
    #[arg(long, conflicts_with = "config")]
    lattice_halfwidth: Option<usize>,
    /// Payload layout.
    #[arg(long, value_enum, default_value_t = DataFormat::Csv, conflicts_with = "config")]
    format: DataFormat,
    /// Write the payload here (plus a .manifest.json sidecar) instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Re-run the exact configuration recorded in a manifest.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct TraceArgs {
    /// Site whose probability is tracked.
    #[arg(
        long,
        required_unless_present = "config",
        conflicts_with = "config",
        allow_negative_numbers = true
    )]
    site: Option<i64>,
    /// Largest step index to evolve to.
    #[arg(long, required_unless_present = "config", conflicts_with = "config")]
    max_steps: Option<usize>,
    /// Comma-separated dimensionless pulse-timing offsets (J * dt0).
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "0",
        conflicts_with = "config",
        allow_negative_numbers = true
    )]
    dt0: Vec<f64>,
    /// Append the classical random-walk baseline as the last column.
    #[arg(long, conflicts_with = "config")]
    classical: bool,
    /// Lattice half-width override (default: max-steps + 1).
    #[arg(long, conflicts_with = "config")]
    lattice_halfwidth: Option<usize>,
    /// Payload layout.
    #[arg(long, value_enum, default_value_t = DataFormat::Csv, conflicts_with = "config")]
    format: DataFormat,
    /// Write the payload here (plus a .manifest.json sidecar) instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Re-run the exact configuration recorded in a manifest.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct LatticeArgs {
    /// Primary lattice amplitude in recoil energies.
    #[arg(long, allow_negative_numbers = true)]
    v: f64,
    /// Secondary lattice amplitude in recoil energies.
    #[arg(long, conflicts_with = "solve_ratio", allow_negative_numbers = true)]
    vprime: Option<f64>,
    /// Solve for the secondary amplitude that reaches this coupling ratio.
    #[arg(long)]
    solve_ratio: Option<f64>,
    /// Dimensionless pulse-timing offset used for the reported angle.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    dt0: f64,
    /// Trap frequency in kHz; adds the adiabatic ramp-time estimate.
    #[arg(long)]
    omega_t_khz: Option<f64>,
    /// Report layout.
    #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
    format: ReportFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Table,
    Json,
}

enum CliError {
    Core(CoreError),
    Usage(String),
    Runtime(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            // A state that outgrew its lattice is a runtime failure; every
            // other core error is a bad parameter.
            CliError::Core(CoreError::BoundaryOverflow { .. }) => 1,
            CliError::Core(_) => 2,
            CliError::Usage(_) => 2,
            CliError::Runtime(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => e.fmt(f),
            CliError::Usage(msg) | CliError::Runtime(msg) => f.write_str(msg),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Core(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Runtime(format!("cannot encode JSON: {e}"))
    }
}

fn main() {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run(args) => cmd_run(args),
        Command::Trace(args) => cmd_trace(args),
        Command::Lattice(args) => cmd_lattice(args),
    };
    if let Err(err) = result {
        eprintln!("error: {err}");
        std::process::exit(err.exit_code());
    }
}

fn cmd_run(args: RunArgs) -> Result<(), CliError> {
    let config = match &args.config {
        Some(path) => match manifest::load_config(path).map_err(CliError::Usage)? {
            c @ CommandConfig::Run { .. } => c,
            _ => {
                return Err(CliError::Usage(format!(
                    "{} does not describe a run command",
                    path.display()
                )))
            }
        },
        None => CommandConfig::Run {
            steps: args.steps.expect("clap enforces --steps"),
            dt0: args.dt0.clone(),
            classical: args.classical,
            lattice_halfwidth: args.lattice_halfwidth,
            format: args.format,
        },
    };
    let CommandConfig::Run {
        steps,
        ref dt0,
        classical,
        lattice_halfwidth,
        format,
    } = config
    else {
        unreachable!()
    };

    let mut series = analysis::error_sweep(steps, dt0, lattice_halfwidth)?;
    if !classical {
        series.retain(|d| d.label() != CLASSICAL_LABEL);
    }
    let payload = match format {
        DataFormat::Csv => output::distribution_csv(&series),
        DataFormat::Json => output::distribution_json(steps, &series)?,
    };
    emit(&payload, args.out.as_deref(), config)
}

fn cmd_trace(args: TraceArgs) -> Result<(), CliError> {
    let config = match &args.config {
        Some(path) => match manifest::load_config(path).map_err(CliError::Usage)? {
            c @ CommandConfig::Trace { .. } => c,
            _ => {
                return Err(CliError::Usage(format!(
                    "{} does not describe a trace command",
                    path.display()
                )))
            }
        },
        None => CommandConfig::Trace {
            site: args.site.expect("clap enforces --site"),
            max_steps: args.max_steps.expect("clap enforces --max-steps"),
            dt0: args.dt0.clone(),
            classical: args.classical,
            lattice_halfwidth: args.lattice_halfwidth,
            format: args.format,
        },
    };
    let CommandConfig::Trace {
        site,
        max_steps,
        ref dt0,
        classical,
        lattice_halfwidth,
        format,
    } = config
    else {
        unreachable!()
    };

    let mut series = analysis::site_trace(site, max_steps, dt0, lattice_halfwidth)?;
    if !classical {
        series.retain(|t| t.label() != CLASSICAL_LABEL);
    }
    let payload = match format {
        DataFormat::Csv => output::trace_csv(&series),
        DataFormat::Json => output::trace_json(site, &series)?,
    };
    emit(&payload, args.out.as_deref(), config)
}

/// Everything the lattice report shows. Couplings are named by their role:
/// the drive coupling moves the walker through the short barriers, the leak
/// coupling is the unwanted tunneling through the tall ones.
#[derive(Serialize)]
struct LatticeReport {
    v: f64,
    v_prime: f64,
    v_tall: f64,
    v_short: f64,
    j_drive: f64,
    j_leak: f64,
    coupling_ratio: f64,
    pulse_time: f64,
    timing_offset: f64,
    theta: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    adiabatic_time_us: Option<f64>,
}

impl LatticeReport {
    fn table(&self) -> String {
        let mut rows = vec![
            ("primary amplitude V", format!("{:.6} E_R", self.v)),
            ("secondary amplitude V'", format!("{:.6} E_R", self.v_prime)),
            ("tall barrier V+V'", format!("{:.6} E_R", self.v_tall)),
            ("short barrier V-V'", format!("{:.6} E_R", self.v_short)),
            (
                "drive coupling J(V-V')",
                format!("{:.6e} E_R", self.j_drive),
            ),
            ("leak coupling J(V+V')", format!("{:.6e} E_R", self.j_leak)),
            ("coupling ratio", format!("{:.6e}", self.coupling_ratio)),
            (
                "half-period pulse",
                format!("{:.6} hbar/E_R", self.pulse_time),
            ),
            ("timing offset J*dt0", format!("{:.6}", self.timing_offset)),
            ("pulse angle theta", format!("{:.6} rad", self.theta)),
        ];
        if let Some(us) = self.adiabatic_time_us {
            rows.push(("adiabatic ramp", format!("{us:.6} us")));
        }
        let mut out = String::new();
        for (key, value) in rows {
            out.push_str(&format!("{key:<24} {value}\n"));
        }
        out
    }
}

fn cmd_lattice(args: LatticeArgs) -> Result<(), CliError> {
    let v_prime = match (args.vprime, args.solve_ratio) {
        (Some(vp), None) => vp,
        (None, Some(target)) => lattice::solve_secondary_amplitude(args.v, target)?,
        (None, None) => {
            return Err(CliError::Usage(
                "pass either --vprime or --solve-ratio".into(),
            ))
        }
        (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
    };
    let params = lattice::LatticeParams::new(args.v, v_prime)?;
    let j_drive = lattice::tunneling_coupling(params.v_min())?;
    let j_leak = lattice::tunneling_coupling(params.v_max())?;
    let pulse = lattice::pulse_time(j_drive)?;
    // The offset is dimensionless (J * dt0), so the extra hold time is
    // offset / J on top of the exact half period.
    let theta = lattice::theta_from_timing(j_drive, pulse + args.dt0 / j_drive)?;
    let adiabatic_time_us = match args.omega_t_khz {
        // 1/kHz is milliseconds; report microseconds.
        Some(khz) => Some(1000.0 * lattice::adiabatic_time(khz)?),
        None => None,
    };
    let report = LatticeReport {
        v: args.v,
        v_prime,
        v_tall: params.v_max(),
        v_short: params.v_min(),
        j_drive,
        j_leak,
        coupling_ratio: lattice::coupling_ratio(&params),
        pulse_time: pulse,
        timing_offset: args.dt0,
        theta,
        adiabatic_time_us,
    };
    match args.format {
        ReportFormat::Table => print!("{}", report.table()),
        ReportFormat::Json => println!("{}", serde_json::to_string_pretty(&report)?),
    }
    Ok(())
}

/// Prints to stdout, or writes the payload plus its manifest sidecar.
fn emit(payload: &str, out: Option<&Path>, config: CommandConfig) -> Result<(), CliError> {
    match out {
        None => {
            print!("{payload}");
            Ok(())
        }
        Some(path) => {
            write_file(path, payload)?;
            let manifest = Manifest::for_output(config, path, payload);
            let text = serde_json::to_string_pretty(&manifest)? + "\n";
            write_file(&Manifest::sidecar_path(path), &text)
        }
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents)
        .map_err(|e| CliError::Runtime(format!("cannot write {}: {e}", path.display())))
}
