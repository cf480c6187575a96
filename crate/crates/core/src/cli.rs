//! Command-line front end.
//!
//! Exit codes: 0 success / member, 1 usage or evaluation error (nothing is
//! written to stdout), 2 `FailNumeric` from `check`, 3 vanishing
//! denominator from `mean`.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::classes::{
    check_membership, class_radius_with_grid, starlike_scan, MembershipReport, StarlikeReport, Verdict,
    DEFAULT_GRID, DEFAULT_RADII,
};
use crate::emit::{boundary_csv, boundary_svg, table1_csv};
use crate::error::Error;
use crate::families::{boundary_image, table1, table1_extended, Table1Row};
use crate::functionals::{FunctionalKind, MIN_GRID};
use crate::means::{harmonic_mean, verify_closure, DEFAULT_CLOSURE_SAMPLES};
use crate::numfmt::{angle, shortest};
use crate::series::DEFAULT_ORDER;
use crate::source::FunctionSource;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_FAIL_NUMERIC: i32 = 2;
pub const EXIT_DENOMINATOR: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
    Svg,
}

/// Every tunable default of a run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub order: usize,
    pub radii: Vec<f64>,
    pub grid: usize,
    pub tol: f64,
    pub output_format: OutputFormat,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            order: DEFAULT_ORDER,
            radii: DEFAULT_RADII.to_vec(),
            grid: DEFAULT_GRID,
            tol: 1e-6,
            output_format: OutputFormat::Json,
            seed: 0,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), Error> {
        if self.order < 8 {
            return Err(Error::InvalidArgument(format!("order {} must be at least 8", self.order)));
        }
        if self.radii.is_empty() || self.radii.iter().any(|r| !(*r > 0.0 && *r < 1.0)) {
            return Err(Error::InvalidArgument(format!("radii {:?} must be nonempty and lie in (0, 1)", self.radii)));
        }
        if self.grid < MIN_GRID {
            return Err(Error::InvalidArgument(format!("grid {} must be at least {MIN_GRID}", self.grid)));
        }
        if self.tol.is_nan() || self.tol <= 0.0 {
            return Err(Error::InvalidArgument(format!("tol {} must be positive", self.tol)));
        }
        Ok(())
    }
}

#[derive(Debug, Parser)]
#[command(name = "univalent", version, about = "Differential-inequality classes U, P, M, N of normalized univalent functions")]
struct Cli {
    #[command(flatten)]
    config: ConfigArgs,

    /// Print the effective configuration as JSON and exit.
    #[arg(long, global = true)]
    show_config: bool,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Debug, Args)]
struct ConfigArgs {
    /// Series truncation order.
    #[arg(long, global = true, env = "UNIVALENT_ORDER", default_value_t = DEFAULT_ORDER)]
    order: usize,

    /// Comma-separated scan radii in (0, 1).
    #[arg(long, global = true, env = "UNIVALENT_RADII", value_delimiter = ',', default_values_t = DEFAULT_RADII.to_vec())]
    radii: Vec<f64>,

    /// Number of angles on each scanned circle.
    #[arg(long, global = true, env = "UNIVALENT_GRID", default_value_t = DEFAULT_GRID)]
    grid: usize,

    /// Absolute tolerance of the radius search.
    #[arg(long, global = true, default_value_t = 1e-6)]
    tol: f64,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,

    /// Seed for randomized sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

impl From<&ConfigArgs> for RunConfig {
    fn from(a: &ConfigArgs) -> Self {
        RunConfig {
            order: a.order,
            radii: a.radii.clone(),
            grid: a.grid,
            tol: a.tol,
            output_format: a.format,
            seed: a.seed,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check class membership by coefficient criterion and circle scans.
    Check {
        #[arg(long = "class")]
        kind: FunctionalKind,
        source: FunctionSource,
    },
    /// Harmonic mean of two functions with the averaging-identity residual.
    Mean {
        f: FunctionSource,
        g: FunctionSource,
        #[arg(long = "class")]
        kind: FunctionalKind,
        #[arg(long, default_value_t = DEFAULT_CLOSURE_SAMPLES)]
        samples: usize,
    },
    /// Values of A(theta) for the Ex34 family at theta_n = 2(2n+1)pi/(4n+3).
    Table1 {
        /// Append golden-section-refined rows for n = 15..=K.
        #[arg(long)]
        extend: Option<u32>,
    },
    /// Minimum of Re(z f'/f) over the scan circles.
    Starlike { source: FunctionSource },
    /// Image of the circle |z| = r under f.
    Boundary {
        source: FunctionSource,
        #[arg(long, default_value_t = 0.999)]
        radius: f64,
        /// Emit an SVG document (same as --format svg).
        #[arg(long)]
        svg: bool,
    },
    /// Largest radius on which the class inequality holds.
    Radius {
        source: FunctionSource,
        #[arg(long = "class")]
        kind: FunctionalKind,
    },
}

/// Runs the CLI on `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_ERROR
                }
            };
        }
    };
    let config = RunConfig::from(&cli.config);
    if let Err(e) = config.validate() {
        let _ = writeln!(err, "error: {e}");
        return EXIT_ERROR;
    }
    if cli.show_config {
        let _ = writeln!(out, "{}", pretty(&config));
        return EXIT_OK;
    }
    let Some(command) = cli.command else {
        let _ = writeln!(err, "error: no command given (try --help)");
        return EXIT_ERROR;
    };
    match execute(&command, &config) {
        Ok((code, text)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::DenominatorVanishes { .. } => EXIT_DENOMINATOR,
                _ => EXIT_ERROR,
            }
        }
    }
}

fn pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

fn unsupported(format: OutputFormat, what: &str) -> Error {
    Error::InvalidArgument(format!("{what} does not support --format {format:?}"))
}

fn execute(command: &Command, config: &RunConfig) -> Result<(i32, String), Error> {
    match command {
        Command::Check { kind, source } => {
            let f = source.build(config.order)?;
            let report = check_membership(*kind, &f, &config.radii, config.grid)?;
            let code = if report.verdict == Verdict::FailNumeric {
                EXIT_FAIL_NUMERIC
            } else {
                EXIT_OK
            };
            Ok((code, render_membership(&report, config.output_format)?))
        }
        Command::Mean { f, g, kind, samples } => {
            let f = f.build(config.order)?;
            let g = g.build(config.order)?;
            let mean = harmonic_mean(&f, &g)?;
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            let residual = verify_closure(*kind, &f, &g, *samples, &mut rng)?;
            let membership = check_membership(*kind, &mean.mean, &config.radii, config.grid)?;
            let text = match config.output_format {
                OutputFormat::Json => {
                    let doc = json!({
                        "kind": kind,
                        "mean": mean,
                        "averaging_residual": residual,
                        "samples": samples,
                        "membership": membership,
                    });
                    format!("{}\n", pretty(&doc))
                }
                OutputFormat::Csv => {
                    let mut s = String::from("k,re,im\n");
                    for (k, c) in mean.mean.phi().coeffs().iter().enumerate() {
                        s.push_str(&format!("{k},{},{}\n", shortest(c.re), shortest(c.im)));
                    }
                    s
                }
                other => return Err(unsupported(other, "mean")),
            };
            Ok((EXIT_OK, text))
        }
        Command::Table1 { extend } => {
            let mut rows: Vec<Table1Row> = table1(1, 14);
            if let Some(k) = extend {
                rows.extend(table1_extended(15, *k));
            }
            let text = match config.output_format {
                OutputFormat::Json => format!("{}\n", pretty(&rows)),
                OutputFormat::Csv => table1_csv(&rows),
                other => return Err(unsupported(other, "table1")),
            };
            Ok((EXIT_OK, text))
        }
        Command::Starlike { source } => {
            let f = source.build(config.order)?;
            let report = starlike_scan(&f, &config.radii, config.grid)?;
            Ok((EXIT_OK, render_starlike(&report, config.output_format)?))
        }
        Command::Boundary { source, radius, svg } => {
            let f = source.build(config.order)?;
            let points = boundary_image(&f, *radius, config.grid)?;
            let format = if *svg { OutputFormat::Svg } else { config.output_format };
            let text = match format {
                OutputFormat::Svg => boundary_svg(&points),
                OutputFormat::Csv => boundary_csv(&points),
                OutputFormat::Json => {
                    let pts: Vec<_> = points
                        .iter()
                        .map(|(t, w)| json!({"theta": angle(*t), "re": w.re, "im": w.im}))
                        .collect();
                    format!("{}\n", pretty(&pts))
                }
            };
            Ok((EXIT_OK, text))
        }
        Command::Radius { source, kind } => {
            let f = source.build(config.order)?;
            let r = class_radius_with_grid(*kind, &f, config.tol, config.grid);
            let text = match config.output_format {
                OutputFormat::Json => format!("{}\n", pretty(&json!({"kind": kind, "radius": r, "tol": config.tol}))),
                OutputFormat::Csv => format!("kind,radius\n{kind},{}\n", shortest(r)),
                other => return Err(unsupported(other, "radius")),
            };
            Ok((EXIT_OK, text))
        }
    }
}

fn render_membership(report: &MembershipReport, format: OutputFormat) -> Result<String, Error> {
    match format {
        OutputFormat::Json => Ok(format!("{}\n", pretty(report))),
        OutputFormat::Csv => {
            let mut s = String::from("kind,radius,grid_size,extremal_value,extremal_angle,margin\n");
            for r in &report.scans {
                s.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    r.kind,
                    shortest(r.radius),
                    r.grid_size,
                    shortest(r.extremal_value),
                    shortest(angle(r.extremal_angle)),
                    shortest(r.margin)
                ));
            }
            Ok(s)
        }
        other => Err(unsupported(other, "check")),
    }
}

fn render_starlike(report: &StarlikeReport, format: OutputFormat) -> Result<String, Error> {
    match format {
        OutputFormat::Json => Ok(format!("{}\n", pretty(report))),
        OutputFormat::Csv => Ok(format!(
            "min_value,argmin_angle,argmin_radius,starlike_numeric\n{},{},{},{}\n",
            shortest(report.min_value),
            shortest(angle(report.argmin_angle)),
            shortest(report.argmin_radius),
            report.starlike_numeric
        )),
        other => Err(unsupported(other, "starlike")),
    }
}
