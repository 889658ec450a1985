// SPDX-License-Identifier: Apache-2.0

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{Map, Value};

use deutsch_paths::output::{render_suites, Format, OutputRecord, TableRecord};
use deutsch_paths::strip::{det_d_replaced, det_dm_closed, det_replaced_poly, phi_closed, phi_limit, z_poly_to_v};
use deutsch_paths::verify::{all_pass, Suite, VerifyConfig};
use deutsch_paths::{count_series, CountTable, Error, StripSpec, TruncatedSeries, Upper};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_DISAGREE: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "deutsch", version, about = "Count Deutsch lattice paths exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Dynamic programming over levels.
    Dp,
    /// Closed-form generating function.
    Closed,
}

#[derive(Debug, clap::Args)]
struct Strip {
    /// Start level.
    #[arg(long)]
    t: usize,
    /// Strip size; levels 0..m-1 are allowed. Omit for no upper boundary.
    #[arg(long)]
    m: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Number of n-step paths from t to j.
    Count {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        strip: Strip,
        /// End level.
        #[arg(long)]
        j: usize,
        #[arg(long, value_enum, default_value_t = Method::Dp)]
        method: Method,
        /// Also run the other method and fail with exit code 3 on disagreement.
        #[arg(long)]
        check: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Coefficients 0..trunc-1 of the generating function from t to j.
    Series {
        #[command(flatten)]
        strip: Strip,
        #[arg(long)]
        j: usize,
        #[arg(long, default_value_t = 16)]
        trunc: usize,
        #[arg(long, value_enum, default_value_t = Method::Dp)]
        method: Method,
        #[arg(long)]
        check: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Grid of counts by step count and end level.
    Table {
        /// Largest step count.
        #[arg(long = "n", alias = "n-max")]
        n_max: usize,
        #[command(flatten)]
        strip: Strip,
        #[arg(long, value_enum, default_value_t = Method::Dp)]
        method: Method,
        #[arg(long)]
        check: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Determinant of the strip system (or of its column-replaced variant).
    Det {
        #[arg(long)]
        m: usize,
        /// Row of the unit right-hand side, used with --j.
        #[arg(long, requires = "j")]
        t: Option<usize>,
        /// Column replaced by the right-hand side, used with --t.
        #[arg(long, requires = "t")]
        j: Option<usize>,
        /// Compare with the closed form in v up to this order.
        #[arg(long)]
        check: bool,
        #[arg(long, default_value_t = 31)]
        trunc: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the cross-check suites.
    Verify {
        #[arg(long, default_value_t = 6)]
        m_max: usize,
        #[arg(long, default_value_t = 5)]
        t_max: usize,
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        #[arg(long, default_value_t = 16)]
        trunc: usize,
        /// Run only the named suites (repeatable).
        #[arg(long, value_enum)]
        suite: Vec<Suite>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

enum Failure {
    Invalid(Error),
    Disagree(String),
    Verify,
    Internal(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParams(_) | Error::EmptySeries | Error::TooManySteps { .. } => Failure::Invalid(e),
            other => Failure::Internal(other),
        }
    }
}

impl Strip {
    fn upper(&self) -> Result<Upper, Error> {
        match self.m {
            None => Ok(Upper::Unbounded),
            Some(0) => Err(Error::InvalidParams("m must be at least 1".into())),
            Some(m) => Ok(Upper::Bound(m - 1)),
        }
    }

    fn spec(&self, j: usize) -> Result<StripSpec, Error> {
        let spec = StripSpec {
            t: self.t,
            j,
            upper: self.upper()?,
        };
        spec.validate()?;
        Ok(spec)
    }

    fn params(&self) -> Map<String, Value> {
        let mut p = Map::new();
        p.insert("t".into(), Value::from(self.t));
        p.insert("m".into(), self.m.map_or(Value::Null, Value::from));
        p
    }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Dp => "dp",
        Method::Closed => "closed",
    }
}

fn closed_series(spec: &StripSpec, order: usize) -> Result<TruncatedSeries, Error> {
    match spec.height() {
        Some(m) => phi_closed(m, spec.t, spec.j, order),
        None => phi_limit(spec.t, spec.j, order),
    }
}

fn counts(spec: &StripSpec, order: usize, method: Method) -> Result<Vec<BigUint>, Error> {
    let s = match method {
        Method::Dp => count_series(spec, order)?,
        Method::Closed => closed_series(spec, order)?,
    };
    s.to_counts()
}

fn other(method: Method) -> Method {
    match method {
        Method::Dp => Method::Closed,
        Method::Closed => Method::Dp,
    }
}

fn checked_counts(spec: &StripSpec, order: usize, method: Method, check: bool) -> Result<Vec<BigUint>, Failure> {
    let primary = counts(spec, order, method)?;
    if check {
        let second = counts(spec, order, other(method))?;
        if second != primary {
            return Err(Failure::Disagree(format!(
                "dp and closed forms differ for t={} j={}",
                spec.t, spec.j
            )));
        }
    }
    Ok(primary)
}

fn decimal(v: &[BigUint]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Count { n, strip, j, method, check, format } => {
            let spec = strip.spec(j)?;
            let c = checked_counts(&spec, n + 1, method, check)?;
            let mut params = strip.params();
            params.insert("n".into(), Value::from(n));
            params.insert("j".into(), Value::from(j));
            params.insert("method".into(), Value::from(method_name(method)));
            let record = OutputRecord::new("count", params, format, vec![c[n].to_string()]);
            Ok(record.render(format))
        }
        Command::Series { strip, j, trunc, method, check, format } => {
            if trunc == 0 {
                return Err(Error::EmptySeries.into());
            }
            let spec = strip.spec(j)?;
            let c = checked_counts(&spec, trunc, method, check)?;
            let mut params = strip.params();
            params.insert("j".into(), Value::from(j));
            params.insert("trunc".into(), Value::from(trunc));
            params.insert("method".into(), Value::from(method_name(method)));
            Ok(OutputRecord::new("series", params, format, decimal(&c)).render(format))
        }
        Command::Table { n_max, strip, method, check, format } => {
            let upper = strip.upper()?;
            strip.spec(strip.t)?;
            let table = CountTable::build(n_max, strip.t, upper)?;
            let rows: Vec<Vec<String>> = match method {
                Method::Dp => table.rows().iter().map(|r| decimal(r)).collect(),
                Method::Closed => {
                    let columns = (0..table.width())
                        .map(|j| counts(&strip.spec(j)?, n_max + 1, Method::Closed))
                        .collect::<Result<Vec<_>, Error>>()?;
                    (0..=n_max)
                        .map(|s| columns.iter().map(|c| c[s].to_string()).collect())
                        .collect()
                }
            };
            if check {
                for j in 0..table.width() {
                    checked_counts(&strip.spec(j)?, n_max + 1, method, true)?;
                }
            }
            let mut params = strip.params();
            params.insert("n".into(), Value::from(n_max));
            params.insert("method".into(), Value::from(method_name(method)));
            let record = TableRecord {
                command: "table".into(),
                params,
                format: format.as_str().into(),
                first_level: 0,
                coefficients: rows,
            };
            Ok(record.render(format))
        }
        Command::Det { m, t, j, check, trunc, format } => {
            if m == 0 {
                return Err(Error::InvalidParams("m must be at least 1".into()).into());
            }
            let (poly, closed) = match (t, j) {
                (Some(t), Some(j)) => (det_replaced_poly(m, t, j)?, det_d_replaced(m, t, j, trunc.max(1))?),
                _ => (
                    deutsch_paths::poly::PolyMatrix::strip_system(m).det()?,
                    det_dm_closed(m, trunc.max(1))?,
                ),
            };
            if check && z_poly_to_v(&poly, trunc.max(1))? != closed {
                return Err(Failure::Disagree("determinant differs from its closed form".into()));
            }
            let mut params = Map::new();
            params.insert("m".into(), Value::from(m));
            params.insert("t".into(), t.map_or(Value::Null, Value::from));
            params.insert("j".into(), j.map_or(Value::Null, Value::from));
            let coeffs = poly.coeffs().iter().map(ToString::to_string).collect();
            Ok(OutputRecord::new("det", params, format, coeffs).render(format))
        }
        Command::Verify { m_max, t_max, n_max, trunc, suite, format, inject_fault } => {
            if m_max == 0 || n_max == 0 || trunc < 2 {
                return Err(Error::InvalidParams("bounds must be at least 1 (trunc at least 2)".into()).into());
            }
            let cfg = VerifyConfig {
                m_max,
                t_max,
                n_max,
                trunc,
                inject_fault,
                ..VerifyConfig::default()
            };
            let suites = if suite.is_empty() { Suite::ALL.to_vec() } else { suite };
            let reports = cfg.run(&suites);
            let text = render_suites(&reports, format);
            if all_pass(&reports) {
                Ok(text)
            } else {
                println!("{text}");
                Err(Failure::Verify)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            println!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Invalid(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INVALID)
        }
        Err(Failure::Disagree(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_DISAGREE)
        }
        Err(Failure::Verify) => ExitCode::from(EXIT_VERIFY_FAILED),
        Err(Failure::Internal(e)) => {
            eprintln!("internal error: {e}");
            ExitCode::from(EXIT_VERIFY_FAILED)
        }
    }
}
