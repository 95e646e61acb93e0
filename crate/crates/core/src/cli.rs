//! Command-line front end behind the `casimir-shell` binary.
//!
//! ```text
//! casimir-shell compute     --material gold --radius 1e-7 --bc both
//! casimir-shell sweep       --material gold --radius-range 1e-8:1e-6:9 --bc dirichlet
//! casimir-shell convergence --material silver --bc neumann --m-max 200 --format csv
//! ```
//!
//! `--config PATH` reads `key = value` lines whose keys are the long flag
//! names (`omega-p`, `m-max`, ...); flags given on the command line win.
//! Relative `--output` paths are resolved against `$CASIMIR_OUT_DIR` when it
//! is set.
//!
//! Exit codes: 0 success, 2 usage error, 3 numerical non-convergence (the
//! affected records are still written, with `converged = false`).

use std::collections::HashMap;
use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::green::BoundaryCondition;
use crate::pressure::{
    compute_force, cutoff_from_material, families, lookup_material, Geometry, MaterialSpec,
    PressureError, PressureResult, SPEED_OF_LIGHT_CODATA, SPEED_OF_LIGHT_ROUNDED,
};
use crate::quadrature::QuadConfig;
use crate::report::{
    convergence_rows, write_convergence, Format, OutputRecord, RecordWriter, ReportError,
};
use crate::series::{sum_orders, SumConfig, SumError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NONCONVERGENCE: i32 = 3;

/// Directory for relative `--output` paths.
pub const OUT_DIR_ENV: &str = "CASIMIR_OUT_DIR";

pub const DEFAULT_RADIUS: f64 = 1e-7;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Report(#[from] ReportError),
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

#[derive(Debug, Parser)]
#[command(
    name = "casimir-shell",
    version,
    about = "Casimir stress and force coefficients on a cylindrical shell with a plasma-frequency cutoff"
)]
struct Cli {
    /// File of key = value pairs using the long flag names; flags override it.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// One material and radius; one record per boundary condition.
    Compute(CommonArgs),
    /// Log-spaced grid over radius or plasma frequency.
    Sweep(SweepArgs),
    /// Per-order contributions and running partial sums.
    Convergence(CommonArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BcChoice {
    Dirichlet,
    Neumann,
    /// Two separate records.
    Both,
}

impl BcChoice {
    fn conditions(self) -> Vec<BoundaryCondition> {
        match self {
            BcChoice::Dirichlet => vec![BoundaryCondition::Dirichlet],
            BcChoice::Neumann => vec![BoundaryCondition::Neumann],
            BcChoice::Both => vec![BoundaryCondition::Dirichlet, BoundaryCondition::Neumann],
        }
    }
}

#[derive(Debug, Clone, Default, Args)]
struct CommonArgs {
    /// Built-in material: gold or silver.
    #[arg(long, value_name = "NAME", conflicts_with = "omega_p")]
    material: Option<String>,
    /// Plasma frequency in rad/s (material reported as "custom").
    #[arg(long, value_name = "RAD_PER_S", value_parser = parse_positive)]
    omega_p: Option<f64>,
    /// Shell radius in metres [default: 1e-7].
    #[arg(long, value_name = "M", value_parser = parse_positive)]
    radius: Option<f64>,
    /// Boundary condition [default: both].
    #[arg(long, value_enum)]
    bc: Option<BcChoice>,
    /// Speed of light in m/s, or `codata` / `rounded` (3e8) [default: codata].
    #[arg(long, value_name = "M_PER_S", value_parser = parse_speed)]
    c: Option<f64>,
    /// Highest azimuthal order [default: 1000].
    #[arg(long, value_name = "M")]
    m_max: Option<u32>,
    /// Relative tolerance of each per-order integral [default: 1e-9].
    #[arg(long, value_name = "TOL", value_parser = parse_positive)]
    rel_tol: Option<f64>,
    /// Absolute tolerance of each per-order integral [default: 1e-12].
    #[arg(long, value_name = "TOL", value_parser = parse_positive)]
    abs_tol: Option<f64>,
    /// Bisections allowed per integral [default: 200].
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u32).range(1..))]
    max_subdivisions: Option<u32>,
    /// Stop summing once |c_m| / |partial sum| drops below this; 0 sums to m-max
    /// [default: 1e-6; convergence always sums to m-max].
    #[arg(long, value_name = "TOL", value_parser = parse_non_negative)]
    tail_tol: Option<f64>,
    /// Output format [default: json; jsonl for sweep; csv for convergence].
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write to FILE instead of stdout.
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
struct SweepArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Radii LO:HI:N, log-spaced.
    #[arg(long, value_name = "LO:HI:N", conflicts_with = "omega_p_range")]
    radius_range: Option<GridSpec>,
    /// Plasma frequencies LO:HI:N in rad/s, log-spaced.
    #[arg(long, value_name = "LO:HI:N")]
    omega_p_range: Option<GridSpec>,
}

fn parse_positive(s: &str) -> Result<f64, String> {
    match s.trim().parse::<f64>() {
        Ok(v) if v.is_finite() && v > 0.0 => Ok(v),
        _ => Err(format!("expected a finite positive number, got {s:?}")),
    }
}

fn parse_non_negative(s: &str) -> Result<f64, String> {
    match s.trim().parse::<f64>() {
        Ok(v) if v.is_finite() && v >= 0.0 => Ok(v),
        _ => Err(format!("expected a finite non-negative number, got {s:?}")),
    }
}

fn parse_speed(s: &str) -> Result<f64, String> {
    match s.trim().to_ascii_lowercase().as_str() {
        "codata" => Ok(SPEED_OF_LIGHT_CODATA),
        "rounded" => Ok(SPEED_OF_LIGHT_ROUNDED),
        _ => parse_positive(s),
    }
}

/// `lo:hi:n`, log-spaced and inclusive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub lo: f64,
    pub hi: f64,
    pub n: usize,
}

impl GridSpec {
    pub fn points(&self) -> Vec<f64> {
        if self.n == 1 {
            return vec![self.lo];
        }
        // Decimal logs so decade grids land on 1e-7 and friends exactly.
        let (l0, l1) = (self.lo.log10(), self.hi.log10());
        (0..self.n)
            .map(|i| {
                if i == 0 {
                    self.lo
                } else if i == self.n - 1 {
                    self.hi
                } else {
                    10f64.powf(l0 + (l1 - l0) * i as f64 / (self.n - 1) as f64)
                }
            })
            .collect()
    }
}

impl FromStr for GridSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let [lo, hi, n] = parts.as_slice() else {
            return Err(format!("expected LO:HI:N, got {s:?}"));
        };
        let lo = parse_positive(lo)?;
        let hi = parse_positive(hi)?;
        let n: usize = n
            .trim()
            .parse()
            .map_err(|_| format!("grid size must be a positive integer, got {n:?}"))?;
        if n == 0 || hi < lo {
            return Err(format!("need N >= 1 and LO <= HI, got {s:?}"));
        }
        Ok(GridSpec { lo, hi, n })
    }
}

/// `key = value` lines; `#` starts a comment.
pub fn parse_config(text: &str) -> Result<HashMap<String, String>, String> {
    let mut map = HashMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((k, v)) = line.split_once('=') else {
            return Err(format!("config line {}: expected key = value", i + 1));
        };
        let key = k.trim().trim_start_matches("--").replace('_', "-");
        map.insert(key, v.trim().to_string());
    }
    Ok(map)
}

const CONFIG_KEYS: [&str; 14] = [
    "material",
    "omega-p",
    "radius",
    "bc",
    "c",
    "m-max",
    "rel-tol",
    "abs-tol",
    "max-subdivisions",
    "tail-tol",
    "format",
    "output",
    "radius-range",
    "omega-p-range",
];

struct Config(HashMap<String, String>);

impl Config {
    fn load(path: Option<&Path>) -> Result<Self, CliError> {
        let Some(path) = path else {
            return Ok(Config(HashMap::new()));
        };
        let text = std::fs::read_to_string(path)
            .map_err(|e| usage(format!("cannot read config {}: {e}", path.display())))?;
        let map = parse_config(&text).map_err(usage)?;
        if let Some(bad) = map.keys().find(|k| !CONFIG_KEYS.contains(&k.as_str())) {
            return Err(usage(format!("unknown config key {bad:?}")));
        }
        Ok(Config(map))
    }

    fn get<T>(
        &self,
        key: &str,
        parse: impl Fn(&str) -> Result<T, String>,
    ) -> Result<Option<T>, CliError> {
        self.0
            .get(key)
            .map(|v| parse(v).map_err(|e| usage(format!("config {key}: {e}"))))
            .transpose()
    }

    fn fill(&self, args: &mut CommonArgs) -> Result<(), CliError> {
        // The material source is one choice; a flag for either replaces both keys.
        if args.material.is_none() && args.omega_p.is_none() {
            args.material = self.get("material", |s| Ok(s.to_string()))?;
            args.omega_p = self.get("omega-p", parse_positive)?;
        }
        if args.radius.is_none() {
            args.radius = self.get("radius", parse_positive)?;
        }
        if args.bc.is_none() {
            args.bc = self.get("bc", |s| BcChoice::from_str(s, true))?;
        }
        if args.c.is_none() {
            args.c = self.get("c", parse_speed)?;
        }
        if args.m_max.is_none() {
            args.m_max = self.get("m-max", |s| s.parse::<u32>().map_err(|e| e.to_string()))?;
        }
        if args.rel_tol.is_none() {
            args.rel_tol = self.get("rel-tol", parse_positive)?;
        }
        if args.abs_tol.is_none() {
            args.abs_tol = self.get("abs-tol", parse_positive)?;
        }
        if args.max_subdivisions.is_none() {
            args.max_subdivisions = self.get("max-subdivisions", |s| match s.parse::<u32>() {
                Ok(n) if n >= 1 => Ok(n),
                _ => Err(format!("expected a positive integer, got {s:?}")),
            })?;
        }
        if args.tail_tol.is_none() {
            args.tail_tol = self.get("tail-tol", parse_non_negative)?;
        }
        if args.format.is_none() {
            args.format = self.get("format", |s| Format::from_str(s, true))?;
        }
        if args.output.is_none() {
            args.output = self.get("output", |s| Ok(PathBuf::from(s)))?;
        }
        Ok(())
    }
}

/// Inputs after merging flags, config and defaults.
struct Resolved {
    material: Option<MaterialSpec>,
    radius: f64,
    bcs: Vec<BoundaryCondition>,
    c: f64,
    qcfg: QuadConfig,
    scfg: SumConfig,
    format: Format,
    output: Option<PathBuf>,
}

fn resolve(args: &CommonArgs, default_format: Format, need_source: bool) -> Result<Resolved, CliError> {
    let material = match (&args.material, args.omega_p) {
        (Some(_), Some(_)) => return Err(usage("give only one of --material and --omega-p")),
        (Some(name), None) => Some(lookup_material(name).map_err(|e| usage(e.to_string()))?),
        (None, Some(w)) => Some(MaterialSpec::new("custom", w).map_err(|e| usage(e.to_string()))?),
        (None, None) if need_source => {
            return Err(usage("one of --material or --omega-p is required"))
        }
        (None, None) => None,
    };
    let scfg_default = SumConfig::default();
    let qdef = QuadConfig::default();
    let qcfg = QuadConfig {
        rel_tol: args.rel_tol.unwrap_or(qdef.rel_tol),
        abs_tol: args.abs_tol.unwrap_or(qdef.abs_tol),
        max_subdivisions: args.max_subdivisions.map_or(qdef.max_subdivisions, |n| n as usize),
    };
    Ok(Resolved {
        material,
        radius: args.radius.unwrap_or(DEFAULT_RADIUS),
        bcs: args.bc.unwrap_or(BcChoice::Both).conditions(),
        c: args.c.unwrap_or(SPEED_OF_LIGHT_CODATA),
        qcfg,
        scfg: SumConfig {
            m_max: args.m_max.unwrap_or(scfg_default.m_max),
            tail_rel_threshold: args.tail_tol.unwrap_or(scfg_default.tail_rel_threshold),
        },
        format: args.format.unwrap_or(default_format),
        output: args.output.clone(),
    })
}

fn open_output<'a>(
    path: Option<&Path>,
    stdout: &'a mut dyn Write,
) -> Result<Box<dyn Write + 'a>, CliError> {
    let Some(path) = path else {
        return Ok(Box::new(stdout));
    };
    let full = match std::env::var_os(OUT_DIR_ENV) {
        Some(dir) if path.is_relative() => PathBuf::from(dir).join(path),
        _ => path.to_path_buf(),
    };
    let file = File::create(&full)
        .map_err(|e| CliError::Io(std::io::Error::new(e.kind(), format!("{}: {e}", full.display()))))?;
    Ok(Box::new(BufWriter::new(file)))
}

/// Outcome of one `(material, radius, bc)` point.
enum PointOutcome {
    Ok(OutputRecord),
    /// Written, but flagged.
    NotConverged(OutputRecord, String),
    Failed(String),
}

fn compute_point(
    bc: BoundaryCondition,
    mat: &MaterialSpec,
    radius: f64,
    r: &Resolved,
) -> Result<PointOutcome, CliError> {
    let geom = Geometry::new(radius).map_err(|e| usage(e.to_string()))?;
    let record = |res: &PressureResult| OutputRecord::from_result(res, &mat.name, radius, mat.omega_p);
    Ok(match compute_force(bc, mat, &geom, r.c, &r.qcfg, &r.scfg) {
        Ok(res) => PointOutcome::Ok(record(&res)),
        Err(PressureError::NonConvergence { partial, source, .. }) => {
            PointOutcome::NotConverged(record(&partial), format!("{bc}: {source}"))
        }
        Err(e) => PointOutcome::Failed(format!("{bc}, a = {radius:e}, omega_p = {:e}: {e}", mat.omega_p)),
    })
}

fn cmd_compute(args: &CommonArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, CliError> {
    let r = resolve(args, Format::Json, true)?;
    let mat = r.material.clone().expect("source required");
    cutoff_from_material(&mat, &Geometry::new(r.radius).map_err(|e| usage(e.to_string()))?, r.c)
        .map_err(|e| usage(e.to_string()))?;
    let mut records = Vec::new();
    let mut code = EXIT_OK;
    for &bc in &r.bcs {
        match compute_point(bc, &mat, r.radius, &r)? {
            PointOutcome::Ok(rec) => records.push(rec),
            PointOutcome::NotConverged(rec, msg) => {
                writeln!(stderr, "warning: {msg}")?;
                records.push(rec);
                code = EXIT_NONCONVERGENCE;
            }
            PointOutcome::Failed(msg) => {
                writeln!(stderr, "error: {msg}")?;
                code = EXIT_NONCONVERGENCE;
            }
        }
    }
    let out = open_output(r.output.as_deref(), stdout)?;
    let mut w = RecordWriter::new(out, r.format, records.len() != 1);
    for rec in &records {
        w.write(rec)?;
    }
    w.finish()?;
    Ok(code)
}

fn cmd_sweep(
    args: &SweepArgs,
    config: &Config,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, CliError> {
    let mut radius_range = args.radius_range;
    let mut omega_range = args.omega_p_range;
    if radius_range.is_none() && omega_range.is_none() {
        radius_range = config.get("radius-range", GridSpec::from_str)?;
        omega_range = config.get("omega-p-range", GridSpec::from_str)?;
    }
    // (material, radius) grid in output order
    let grid: Vec<(MaterialSpec, f64)> = match (radius_range, omega_range) {
        (Some(_), Some(_)) => {
            return Err(usage("give only one of --radius-range and --omega-p-range"))
        }
        (None, None) => return Err(usage("one of --radius-range or --omega-p-range is required")),
        (Some(g), None) => {
            let r = resolve(&args.common, Format::Jsonl, true)?;
            let mat = r.material.expect("source required");
            g.points().into_iter().map(|a| (mat.clone(), a)).collect()
        }
        (None, Some(g)) => {
            if args.common.material.is_some() || args.common.omega_p.is_some() {
                return Err(usage("--omega-p-range replaces --material / --omega-p"));
            }
            let radius = args.common.radius.unwrap_or(DEFAULT_RADIUS);
            g.points()
                .into_iter()
                .map(|w| Ok((MaterialSpec::new("custom", w).map_err(|e| usage(e.to_string()))?, radius)))
                .collect::<Result<_, CliError>>()?
        }
    };
    let r = resolve(&args.common, Format::Jsonl, false)?;
    let out = open_output(r.output.as_deref(), stdout)?;
    let mut w = RecordWriter::new(out, r.format, true);
    let mut code = EXIT_OK;
    for (mat, radius) in &grid {
        for &bc in &r.bcs {
            match compute_point(bc, mat, *radius, &r)? {
                PointOutcome::Ok(rec) => w.write(&rec)?,
                PointOutcome::NotConverged(rec, msg) => {
                    writeln!(stderr, "warning: a = {radius:e}: {msg}")?;
                    w.write(&rec)?;
                    code = EXIT_NONCONVERGENCE;
                }
                PointOutcome::Failed(msg) => {
                    writeln!(stderr, "error: {msg}")?;
                    code = EXIT_NONCONVERGENCE;
                }
            }
        }
    }
    w.finish()?;
    Ok(code)
}

fn cmd_convergence(args: &CommonArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, CliError> {
    let r = resolve(args, Format::Csv, true)?;
    let mat = r.material.clone().expect("source required");
    let geom = Geometry::new(r.radius).map_err(|e| usage(e.to_string()))?;
    let cutoff = cutoff_from_material(&mat, &geom, r.c).map_err(|e| usage(e.to_string()))?;
    let scfg = SumConfig {
        tail_rel_threshold: args.tail_tol.unwrap_or(0.0),
        ..r.scfg
    };
    let mut rows = Vec::new();
    let mut code = EXIT_OK;
    for &bc in &r.bcs {
        for &kind in families(bc) {
            let sum = match sum_orders(kind, cutoff.x_cutoff, &r.qcfg, &scfg) {
                Ok(s) => s,
                Err(SumError::Quadrature { partial, source, m }) => {
                    writeln!(stderr, "warning: {kind} order {m}: {source}")?;
                    code = EXIT_NONCONVERGENCE;
                    *partial
                }
                Err(e) => {
                    writeln!(stderr, "error: {kind}: {e}")?;
                    code = EXIT_NONCONVERGENCE;
                    continue;
                }
            };
            rows.extend(convergence_rows(&sum));
        }
    }
    let out = open_output(r.output.as_deref(), stdout)?;
    write_convergence(out, &rows, r.format)?;
    Ok(code)
}

/// Run with explicit streams; returns the process exit code.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(stderr, "{text}")
            } else {
                write!(stdout, "{text}")
            };
            return e.exit_code();
        }
    };
    let result = Config::load(cli.config.as_deref()).and_then(|config| match cli.command {
        Command::Compute(mut a) => {
            config.fill(&mut a)?;
            cmd_compute(&a, stdout, stderr)
        }
        Command::Sweep(mut a) => {
            config.fill(&mut a.common)?;
            cmd_sweep(&a, &config, stdout, stderr)
        }
        Command::Convergence(mut a) => {
            config.fill(&mut a)?;
            cmd_convergence(&a, stdout, stderr)
        }
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            match e {
                CliError::Usage(_) => EXIT_USAGE,
                _ => EXIT_FAILURE,
            }
        }
    }
}

/// Run against the process's stdout and stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}
