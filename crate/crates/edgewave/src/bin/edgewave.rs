//! Command-line front end: batch field maps, decompositions, geometry
//! dumps, self-validation and convergence scans.
//!
//! Angles are taken in degrees on the command line and converted once,
//! here; the library works in radians throughout. A JSON config file can
//! supply any scenario parameter; explicit flags win over the file.

use std::fs::File;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde::Deserialize;

use edgewave::error::EdgewaveError;
use edgewave::kinematics::{Motion, WaveParams};
use edgewave::scenario::{
    run_convergence, run_decompose, run_fieldmap, run_geometry, run_validate, Grid, OutputFormat,
};
use edgewave::validation::SampleRegion;

#[derive(Parser)]
#[command(
    name = "edgewave",
    version,
    about = "Plane-wave diffraction by a uniformly moving conducting half-plane"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact laboratory field over a grid
    Fieldmap {
        #[command(flatten)]
        scenario: ScenarioArgs,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Geometrical-optics / diffracted split over a grid
    Decompose {
        #[command(flatten)]
        scenario: ScenarioArgs,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Shadow boundaries, singularity and extremal lines, equiphase circles
    Geometry {
        #[command(flatten)]
        scenario: ScenarioArgs,
        /// Phase levels of the equiphase circles to report
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, default_value = "1.0")]
        c_levels: Vec<f64>,
        /// Output file (stdout when omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check Maxwell equations and boundary conditions numerically
    Validate {
        #[command(flatten)]
        scenario: ScenarioArgs,
        #[command(flatten)]
        grid: GridArgs,
        /// Finite-difference step in wavelengths
        #[arg(long)]
        stencil_h: Option<f64>,
        /// Fail (exit 3) if any relative residual exceeds this
        #[arg(long)]
        tolerance: Option<f64>,
        /// Output file (stdout when omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Error of the high-frequency split against the exact field vs k*rho
    Convergence {
        #[command(flatten)]
        scenario: ScenarioArgs,
        /// Scan directions around the edge, degrees
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
        directions_deg: Vec<f64>,
        /// Scaled distances k*rho to sample
        #[arg(long, value_delimiter = ',', default_value = "30,100,300,1000,3000")]
        k_rho: Vec<f64>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
struct ScenarioArgs {
    /// JSON file with scenario parameters (flags override it)
    #[arg(long)]
    config: Option<PathBuf>,
    /// Wavenumber of the incident wave
    #[arg(long)]
    k: Option<f64>,
    /// Incidence angle, degrees in (-180, 180)
    #[arg(long, allow_negative_numbers = true)]
    theta_deg: Option<f64>,
    /// E-wave amplitude, real part
    #[arg(long, allow_negative_numbers = true)]
    a1_re: Option<f64>,
    /// E-wave amplitude, imaginary part
    #[arg(long, allow_negative_numbers = true)]
    a1_im: Option<f64>,
    /// H-wave amplitude, real part
    #[arg(long, allow_negative_numbers = true)]
    a2_re: Option<f64>,
    /// H-wave amplitude, imaginary part
    #[arg(long, allow_negative_numbers = true)]
    a2_im: Option<f64>,
    /// Wave speed
    #[arg(long)]
    c: Option<f64>,
    /// Screen velocity as a fraction of c, |beta| < 1
    #[arg(long, allow_negative_numbers = true)]
    beta: Option<f64>,
    /// Laboratory time of the snapshot
    #[arg(long, allow_negative_numbers = true)]
    time: Option<f64>,
}

#[derive(Args)]
struct GridArgs {
    #[arg(long, allow_hyphen_values = true)]
    x_min: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    x_max: Option<f64>,
    #[arg(long)]
    nx: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    z_min: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    z_max: Option<f64>,
    #[arg(long)]
    nz: Option<usize>,
}

#[derive(Args)]
struct OutputArgs {
    /// Output file (stdout when omitted)
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// csv or json
    #[arg(long, default_value = "csv")]
    format: String,
}

/// Scenario parameters as stored in a config file. All fields optional so a
/// file can carry any subset.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    k: Option<f64>,
    theta_deg: Option<f64>,
    a1: Option<[f64; 2]>,
    a2: Option<[f64; 2]>,
    c: Option<f64>,
    beta: Option<f64>,
    time: Option<f64>,
    grid: Option<GridConfig>,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
struct GridConfig {
    x_min: f64,
    x_max: f64,
    nx: usize,
    z_min: f64,
    z_max: f64,
    nz: usize,
}

struct Resolved {
    wave: WaveParams,
    motion: Motion,
    time: f64,
    grid_config: Option<GridConfig>,
}

fn resolve(args: &ScenarioArgs) -> Result<Resolved, EdgewaveError> {
    let cfg = match &args.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)?;
            serde_json::from_str::<ConfigFile>(&text)
                .map_err(|e| EdgewaveError::Usage(format!("bad config file: {e}")))?
        }
        None => ConfigFile::default(),
    };
    let k = args
        .k
        .or(cfg.k)
        .ok_or_else(|| EdgewaveError::Usage("missing wavenumber (--k or config)".into()))?;
    let theta_deg = args
        .theta_deg
        .or(cfg.theta_deg)
        .ok_or_else(|| EdgewaveError::Usage("missing incidence angle (--theta-deg or config)".into()))?;
    let (cfg_a1, cfg_a2) = (cfg.a1.unwrap_or([1.0, 0.0]), cfg.a2.unwrap_or([0.0, 0.0]));
    let a1 = Complex64::new(args.a1_re.unwrap_or(cfg_a1[0]), args.a1_im.unwrap_or(cfg_a1[1]));
    let a2 = Complex64::new(args.a2_re.unwrap_or(cfg_a2[0]), args.a2_im.unwrap_or(cfg_a2[1]));
    let c = args.c.or(cfg.c).unwrap_or(1.0);
    let beta = args.beta.or(cfg.beta).unwrap_or(0.0);
    let time = args.time.or(cfg.time).unwrap_or(0.0);
    Ok(Resolved {
        wave: WaveParams::new(k, theta_deg.to_radians(), a1, a2, c)?,
        motion: Motion::new(beta)?,
        time,
        grid_config: cfg.grid,
    })
}

fn resolve_grid(args: &GridArgs, cfg: Option<GridConfig>) -> Result<Grid, EdgewaveError> {
    let missing = |what: &str| EdgewaveError::Usage(format!("missing grid bound --{what} (or config grid)"));
    let grid = Grid {
        x_min: args.x_min.or(cfg.map(|g| g.x_min)).ok_or_else(|| missing("x-min"))?,
        x_max: args.x_max.or(cfg.map(|g| g.x_max)).ok_or_else(|| missing("x-max"))?,
        nx: args.nx.or(cfg.map(|g| g.nx)).unwrap_or(51),
        z_min: args.z_min.or(cfg.map(|g| g.z_min)).ok_or_else(|| missing("z-min"))?,
        z_max: args.z_max.or(cfg.map(|g| g.z_max)).ok_or_else(|| missing("z-max"))?,
        nz: args.nz.or(cfg.map(|g| g.nz)).unwrap_or(51),
    };
    grid.validate()?;
    Ok(grid)
}

fn open_output(path: &Option<PathBuf>) -> Result<Box<dyn Write>, EdgewaveError> {
    Ok(match path {
        Some(p) => Box::new(File::create(p)?),
        None => Box::new(std::io::stdout().lock()),
    })
}

fn parse_format(s: &str) -> Result<OutputFormat, EdgewaveError> {
    s.parse()
}

fn run(cli: Cli) -> Result<(), EdgewaveError> {
    match cli.command {
        Command::Fieldmap { scenario, grid, output } => {
            let r = resolve(&scenario)?;
            let g = resolve_grid(&grid, r.grid_config)?;
            let fmt = parse_format(&output.format)?;
            let mut out = open_output(&output.output)?;
            run_fieldmap(&mut out, &r.wave, &r.motion, r.time, &g, fmt)
        }
        Command::Decompose { scenario, grid, output } => {
            let r = resolve(&scenario)?;
            let g = resolve_grid(&grid, r.grid_config)?;
            let fmt = parse_format(&output.format)?;
            let mut out = open_output(&output.output)?;
            run_decompose(&mut out, &r.wave, &r.motion, r.time, &g, fmt)
        }
        Command::Geometry { scenario, c_levels, output } => {
            let r = resolve(&scenario)?;
            let mut out = open_output(&output)?;
            run_geometry(&mut out, &r.wave, &r.motion, r.time, &c_levels)
        }
        Command::Validate {
            scenario,
            grid,
            stencil_h,
            tolerance,
            output,
        } => {
            let r = resolve(&scenario)?;
            let g = resolve_grid(&grid, r.grid_config)?;
            let region = SampleRegion {
                x_min: g.x_min,
                x_max: g.x_max,
                z_min: g.z_min,
                z_max: g.z_max,
                nx: g.nx,
                nz: g.nz,
            };
            let mut out = open_output(&output)?;
            run_validate(&mut out, &r.wave, &r.motion, r.time, &region, stencil_h, tolerance)
        }
        Command::Convergence {
            scenario,
            directions_deg,
            k_rho,
            output,
        } => {
            let r = resolve(&scenario)?;
            let fmt = parse_format(&output.format)?;
            let dirs: Vec<f64> = directions_deg.iter().map(|d| d.to_radians()).collect();
            let mut out = open_output(&output.output)?;
            run_convergence(&mut out, &r.wave, &r.motion, r.time, &dirs, &k_rho, fmt)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help / --version land here too and are not failures
            if e.use_stderr() {
                eprint!("{e}");
                return ExitCode::from(1);
            }
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e @ EdgewaveError::ToleranceBreach { .. }) => {
            eprintln!("edgewave: {e}");
            ExitCode::from(3)
        }
        Err(e @ (EdgewaveError::Io(_) | EdgewaveError::Serialization(_))) => {
            eprintln!("edgewave: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("edgewave: {e}");
            ExitCode::from(1)
        }
    }
}
