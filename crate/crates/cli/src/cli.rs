use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use polycoef::approx::cc_phi_coefficient;
use polycoef::{
    cc_phi_approx, central_approx, central_coefficient, coefficient, count_compositions, enumerate_compositions,
    error_sweep, exact_pmf, pmf_vs_normal, pointwise_approx, triangle_row, CoeffQuery, CompositionQuery, LogApprox,
    SamplerConfig,
};

use crate::{csv_out, parallel};

/// Exact polynomial coefficients and their normal approximations.
#[derive(Debug, Parser)]
#[command(name = "polycoef", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print row k of the (l+1)-nomial triangle, one entry per line.
    Row { k: u64, l: u64 },
    /// Print the coefficient of x^n in (1 + x + ... + x^l)^k.
    Coeff {
        k: u64,
        #[arg(allow_negative_numbers = true)]
        n: i64,
        l: u64,
    },
    /// Print the central coefficient at floor(ml/2).
    Central { m: u64, l: u64 },
    /// Print a normal approximation of the coefficient (m, n, l) as a log and,
    /// when it fits in a double, a value.
    Approx {
        m: u64,
        n: u64,
        l: u64,
        #[arg(long, value_enum, default_value_t = Method::Pointwise)]
        method: Method,
    },
    /// Print P[S = n] for n = 0..=ml, one per line.
    Pmf {
        m: u64,
        l: u64,
        /// Print exact fractions instead of decimals.
        #[arg(long)]
        rational: bool,
    },
    /// Simulate sums of m uniform draws on {0..l} and print counts per outcome.
    Sample {
        m: u64,
        l: u64,
        #[arg(long)]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Write the pointwise-approximation error for every n to a CSV file.
    Errors {
        m: u64,
        l: u64,
        #[arg(long = "out")]
        out_path: PathBuf,
    },
    /// Write the central-approximation error for each m to a CSV file.
    CentralErrors {
        l: u64,
        #[arg(long = "m-list", value_delimiter = ',', required = true)]
        m_list: Vec<u64>,
        #[arg(long = "out")]
        out_path: PathBuf,
    },
    /// Count compositions of n into k parts from {a..b}.
    Compositions {
        n: u64,
        k: u64,
        a: u64,
        b: u64,
        /// List every composition instead of counting.
        #[arg(long)]
        list: bool,
    },
    /// Write the exact PMF beside the normal density and the corrected
    /// normal probability to a CSV file.
    PmfNormal {
        m: u64,
        l: u64,
        #[arg(long = "out")]
        out_path: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Pointwise,
    CcPhi,
    Central,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Usage(#[from] clap::Error),
    #[error("{0}")]
    Library(#[from] polycoef::Error),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    /// 1 for domain and i/o failures, 2 for usage errors, 3 for resource limits.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Library(e) if e.is_resource() => 3,
            _ => 1,
        }
    }
}

/// Parses `argv`, runs the command, and returns the process exit status.
pub fn run<I, T>(argv: I, out: &mut impl Write, err: &mut impl Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = write!(out, "{}", e.render());
            return 0;
        }
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return CliError::Usage(e).exit_code();
        }
    };
    match execute(&cli.command, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "polycoef: {e}");
            e.exit_code()
        }
    }
}

fn print_log_approx(out: &mut impl Write, approx: &LogApprox) -> io::Result<()> {
    writeln!(out, "log_value {:?}", approx.log_value)?;
    if let Some(v) = approx.value {
        writeln!(out, "value {v:?}")?;
    }
    Ok(())
}

fn create(path: &PathBuf) -> Result<BufWriter<File>, CliError> {
    Ok(BufWriter::new(File::create(path)?))
}

pub fn execute(command: &Command, out: &mut impl Write, err: &mut impl Write) -> Result<(), CliError> {
    match *command {
        Command::Row { k, l } => {
            for v in triangle_row(k, l)?.values() {
                writeln!(out, "{v}")?;
            }
        }
        Command::Coeff { k, n, l } => writeln!(out, "{}", coefficient(CoeffQuery::new(k, n, l))?)?,
        Command::Central { m, l } => writeln!(out, "{}", central_coefficient(m, l)?)?,
        Command::Approx { m, n, l, method } => match method {
            Method::Pointwise => print_log_approx(out, &pointwise_approx(m, n, l)?)?,
            Method::Central => print_log_approx(out, &central_approx(m, l)?)?,
            Method::CcPhi => {
                let p = cc_phi_approx(m, n, l)?;
                print_log_approx(out, &cc_phi_coefficient(m, n, l)?)?;
                writeln!(out, "probability {p:?}")?;
            }
        },
        Command::Pmf { m, l, rational } => {
            let pmf = exact_pmf(m, l)?;
            if rational {
                for p in pmf.probs() {
                    writeln!(out, "{}/{}", p.numer(), p.denom())?;
                }
            } else {
                for p in pmf.probs_f64() {
                    writeln!(out, "{p:?}")?;
                }
            }
        }
        Command::Sample { m, l, count, seed } => {
            let cfg = SamplerConfig { m, l, sample_count: count, seed };
            for c in parallel::sample_sums(&cfg)? {
                writeln!(out, "{c}")?;
            }
        }
        Command::Errors { m, l, ref out_path } => {
            let records = error_sweep(m, l)?;
            let mut file = create(out_path)?;
            csv_out::write_error_records(&mut file, &records)?;
            file.flush()?;
            writeln!(err, "wrote {} records to {}", records.len(), out_path.display())?;
        }
        Command::CentralErrors { l, ref m_list, ref out_path } => {
            let records = parallel::central_error_curve(l, m_list)?;
            let mut file = create(out_path)?;
            csv_out::write_error_records(&mut file, &records)?;
            file.flush()?;
            writeln!(err, "wrote {} records to {}", records.len(), out_path.display())?;
        }
        Command::Compositions { n, k, a, b, list } => {
            let q = CompositionQuery::new(n, k, a, b);
            if list {
                for parts in enumerate_compositions(q)? {
                    let fields: Vec<String> = parts.iter().map(u64::to_string).collect();
                    writeln!(out, "{}", fields.join(","))?;
                }
            } else {
                writeln!(out, "{}", count_compositions(q)?)?;
            }
        }
        Command::PmfNormal { m, l, ref out_path } => {
            let points = pmf_vs_normal(m, l)?;
            let mut file = create(out_path)?;
            csv_out::write_pmf_points(&mut file, &points)?;
            file.flush()?;
            writeln!(err, "wrote {} records to {}", points.len(), out_path.display())?;
        }
    }
    Ok(())
}
