//! Command-line front end: argument model, defaults and output rendering.
//!
//! Every subcommand writes a header row followed by data rows, either as
//! CSV (LF line endings, floats with 17 significant digits) or as an aligned
//! plain-text table. Diagnostics and summaries go to stderr.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bench::{default_oracle_order, run_bench};
use crate::legendre::abs32_reference_coeff;
use crate::oracle::Timings;
use crate::spectral::default_grid_size;
use crate::{
    compare, legendre_transform, oracle_coefficients, parse_spec, Error, FunctionSpec,
    QuadratureRule,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Absolute error allowed per entry of the `table1` reproduction.
pub const TABLE1_TOLERANCE: f64 = 1e-8;
/// Coefficients computed by `table1`; the table lists even `n < 32`.
pub const TABLE1_N: usize = 32;
pub const TABLE1_DEFAULT_GRID: usize = 8192;

#[derive(Debug, Parser)]
#[command(
    name = "legendre-abel",
    version,
    about = "Legendre coefficients via an Abel-type transform and one FFT"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: CliCommand,
}

#[derive(Debug, Subcommand)]
pub enum CliCommand {
    /// Fast coefficients `n,c_n`
    Transform(Flags),
    /// Direct-quadrature coefficients `n,c_n`
    Oracle(Flags),
    /// Fast vs oracle, `n,c_fast,c_oracle,abs_error`
    Compare(Flags),
    /// Timing of fast vs oracle over `--n-list`
    Bench(Flags),
    /// Coefficients of |x|^{3/2} against the closed form, even n = 0..30
    Table1(Flags),
}

#[derive(Debug, Args, Clone)]
pub struct Flags {
    /// Function spec: one | x | abs32 | exp | cosh | rational:<gamma> | pk:<k> | file:<path>[:linear|:cubic]
    #[arg(long = "function")]
    pub function: Option<String>,
    /// Number of coefficients
    #[arg(long = "n")]
    pub n: Option<usize>,
    /// Grid size (power of two); default max(4n, 1024) rounded up
    #[arg(long = "m")]
    pub m: Option<usize>,
    /// Quadrature order for the Abel integral
    #[arg(long = "k", default_value_t = crate::abel::DEFAULT_QUAD_ORDER)]
    pub k: usize,
    /// Oracle quadrature order; default max(2n, 256)
    #[arg(long = "q")]
    pub q: Option<usize>,
    #[arg(long = "out")]
    pub out: Option<PathBuf>,
    #[arg(long = "format", value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,
    /// Comma-separated sizes for `bench`
    #[arg(long = "n-list", value_delimiter = ',')]
    pub n_list: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Transform,
    Oracle,
    Compare,
    Bench,
    Table1,
}

/// A fully resolved invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub spec_text: String,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub q: usize,
    pub output_format: OutputFormat,
    pub output_path: Option<PathBuf>,
    pub n_list: Vec<usize>,
}

const DEFAULT_N: usize = 32;
const DEFAULT_BENCH_SIZES: [usize; 3] = [1024, 4096, 16384];

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, String> {
        let (command, flags) = match cli.command {
            CliCommand::Transform(f) => (Command::Transform, f),
            CliCommand::Oracle(f) => (Command::Oracle, f),
            CliCommand::Compare(f) => (Command::Compare, f),
            CliCommand::Bench(f) => (Command::Bench, f),
            CliCommand::Table1(f) => (Command::Table1, f),
        };
        let spec_text = match (command, flags.function) {
            (Command::Table1, Some(f)) if f != "abs32" => {
                return Err(format!("table1 always uses abs32, got --function {f}"))
            }
            (Command::Table1, _) => "abs32".to_owned(),
            (Command::Bench, None) => "exp".to_owned(),
            (_, Some(f)) => f,
            (_, None) => return Err("--function is required".into()),
        };
        let n = match command {
            Command::Table1 => TABLE1_N,
            _ => flags.n.unwrap_or(DEFAULT_N),
        };
        if n == 0 {
            return Err("--n must be >= 1".into());
        }
        let m = match (command, flags.m) {
            (_, Some(m)) => m,
            (Command::Table1, None) => TABLE1_DEFAULT_GRID,
            (_, None) => default_grid_size(n),
        };
        if !m.is_power_of_two() || m < 4 {
            return Err(format!("--m must be a power of two >= 4, got {m}"));
        }
        if flags.k == 0 {
            return Err("--k must be >= 1".into());
        }
        let q = flags.q.unwrap_or_else(|| default_oracle_order(n));
        let n_list = if flags.n_list.is_empty() {
            DEFAULT_BENCH_SIZES.to_vec()
        } else {
            flags.n_list
        };
        if n_list.contains(&0) {
            return Err("--n-list entries must be >= 1".into());
        }
        Ok(Self {
            command,
            spec_text,
            n,
            m,
            k: flags.k,
            q,
            output_format: flags.format,
            output_path: flags.out,
            n_list,
        })
    }
}

/// `x` with 17 significant digits, locale independent.
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

struct Table {
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn new(header: Vec<&'static str>) -> Self {
        Self {
            header,
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    fn write(&self, format: OutputFormat, out: &mut dyn Write) -> io::Result<()> {
        match format {
            OutputFormat::Csv => {
                writeln!(out, "{}", self.header.join(","))?;
                for row in &self.rows {
                    writeln!(out, "{}", row.join(","))?;
                }
            }
            OutputFormat::Table => {
                let widths: Vec<usize> = (0..self.header.len())
                    .map(|c| {
                        self.rows
                            .iter()
                            .map(|r| r[c].len())
                            .chain([self.header[c].len()])
                            .max()
                            .unwrap_or(0)
                    })
                    .collect();
                let line = |cells: Vec<&str>| {
                    cells
                        .iter()
                        .zip(&widths)
                        .map(|(c, w)| format!("{c:>w$}"))
                        .collect::<Vec<_>>()
                        .join("  ")
                };
                writeln!(out, "{}", line(self.header.clone()))?;
                for row in &self.rows {
                    writeln!(out, "{}", line(row.iter().map(String::as_str).collect()))?;
                }
            }
        }
        Ok(())
    }
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::Parse { .. }
        | Error::Io { .. }
        | Error::Validation(_)
        | Error::Aliasing { .. }
        | Error::InvalidParameter(_)
        | Error::Domain { .. } => EXIT_USAGE,
        Error::LengthMismatch { .. } | Error::NonFinite { .. } => EXIT_FAILURE,
    }
}

struct Outcome {
    table: Table,
    status: i32,
}

fn execute(
    config: &RunConfig,
    spec: &FunctionSpec,
    stderr: &mut dyn Write,
) -> Result<Outcome, Error> {
    let rule = QuadratureRule::gauss_legendre(config.k)?;
    let mut status = EXIT_OK;
    let table = match config.command {
        Command::Transform => {
            let c = legendre_transform(spec, config.n, config.m, &rule)?;
            let _ = writeln!(stderr, "imag_residual={}", format_float(c.imag_residual()));
            coefficient_table(c.values())
        }
        Command::Oracle => {
            let c = oracle_coefficients(spec, config.n, config.q)?;
            coefficient_table(c.values())
        }
        Command::Compare => {
            let start = Instant::now();
            let fast = legendre_transform(spec, config.n, config.m, &rule)?;
            let fast_seconds = start.elapsed().as_secs_f64();
            let start = Instant::now();
            let slow = oracle_coefficients(spec, config.n, config.q)?;
            let oracle_seconds = start.elapsed().as_secs_f64();
            let report = compare(&fast, &slow)?.with_timings(Timings {
                fast_seconds,
                oracle_seconds,
            });
            let mut table = Table::new(vec!["n", "c_fast", "c_oracle", "abs_error"]);
            for (i, ((a, b), e)) in fast
                .values()
                .iter()
                .zip(slow.values())
                .zip(&report.per_index_abs_error)
                .enumerate()
            {
                table.push(vec![
                    i.to_string(),
                    format_float(*a),
                    format_float(*b),
                    format_float(*e),
                ]);
            }
            let _ = writeln!(
                stderr,
                "max_abs_error={} n_at_max={} fast_seconds={} oracle_seconds={}",
                format_float(report.max_abs_error),
                report.n_at_max,
                format_float(fast_seconds),
                format_float(oracle_seconds)
            );
            table
        }
        Command::Bench => {
            let report = run_bench(spec, &config.n_list, &rule)?;
            let mut table = Table::new(vec![
                "n",
                "m",
                "q",
                "fast_seconds",
                "oracle_seconds",
                "speedup",
                "max_abs_error_vs_oracle",
            ]);
            for row in &report.rows {
                table.push(vec![
                    row.n.to_string(),
                    row.grid_size.to_string(),
                    row.oracle_order.to_string(),
                    format_float(row.fast_seconds),
                    format_float(row.oracle_seconds),
                    format_float(row.speedup),
                    format_float(row.max_abs_error_vs_oracle),
                ]);
            }
            table
        }
        Command::Table1 => {
            let c = legendre_transform(spec, config.n, config.m, &rule)?;
            let mut table = Table::new(vec!["n", "true_cn", "computed_cn", "abs_error"]);
            let mut worst = 0.0f64;
            for n in (0..config.n).step_by(2) {
                let truth = abs32_reference_coeff(n);
                let got = c.values()[n];
                let err = (got - truth).abs();
                worst = worst.max(err);
                table.push(vec![
                    n.to_string(),
                    format_float(truth),
                    format_float(got),
                    format_float(err),
                ]);
            }
            let verdict = if worst <= TABLE1_TOLERANCE {
                "PASS"
            } else {
                "FAIL"
            };
            let _ = writeln!(
                stderr,
                "{verdict}: max_abs_error={} tolerance={} m={} k={}",
                format_float(worst),
                format_float(TABLE1_TOLERANCE),
                config.m,
                config.k
            );
            if worst > TABLE1_TOLERANCE || !worst.is_finite() {
                status = EXIT_FAILURE;
            }
            table
        }
    };
    Ok(Outcome { table, status })
}

fn coefficient_table(values: &[f64]) -> Table {
    let mut table = Table::new(vec!["n", "c_n"]);
    for (i, v) in values.iter().enumerate() {
        table.push(vec![i.to_string(), format_float(*v)]);
    }
    table
}

/// Runs a resolved configuration; returns the process exit status.
pub fn run(config: &RunConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let spec = match parse_spec(&config.spec_text) {
        Ok(s) => s,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let outcome = match execute(config, &spec, stderr) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return exit_code_for(&e);
        }
    };
    let written = match &config.output_path {
        Some(path) => File::create(path).and_then(|file| {
            let mut w = BufWriter::new(file);
            outcome.table.write(config.output_format, &mut w)?;
            w.flush()
        }),
        None => outcome.table.write(config.output_format, stdout),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: cannot write output: {e}");
        return EXIT_FAILURE;
    }
    outcome.status
}
