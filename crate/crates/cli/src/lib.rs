//! Record building and output formatting behind the `square-ice` binary.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use square_ice::closed_forms::closed_count;
use square_ice::hankel::{enumeration_from_partition, refined_from_correlator};
use square_ice::moments::SpecialPoint;
use square_ice::oracle::{oracle_counts, DEFAULT_LIMIT};
use square_ice::verify::{refined_closed_route, run_suites, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DISAGREE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "square-ice",
    version,
    about = "Exact x-enumerations of alternating sign matrices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Total count A(N; x) by every available route.
    Enumerate(SizeArgs),
    /// Refined counts A(N, r; x), r = 1..N, by every available route.
    Refined {
        #[command(flatten)]
        size: SizeArgs,
        /// Print only this row position.
        #[arg(long)]
        r: Option<usize>,
    },
    /// Run the cross-route verification suites.
    Verify {
        /// moments, orthopoly, determinant, refined3, appendix or all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 6)]
        max: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args, Debug)]
pub struct SizeArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=3))]
    pub x: u32,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
    /// Add an approximate floating-point column next to the exact value.
    #[arg(long)]
    pub scientific: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct ValueRecord {
    #[serde(rename = "N")]
    pub n: usize,
    pub x: u32,
    pub r: Option<usize>,
    pub value: String,
    pub routes: String,
    pub agree: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub approx: Option<String>,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct CheckRecord {
    pub suite: String,
    pub check: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Serialize)]
struct Document<'a, T> {
    command: &'a str,
    records: &'a [T],
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.into())
    }
}

/// One value per route; a route that failed contributes its error text.
struct RouteValues {
    names: Vec<&'static str>,
    values: Vec<Result<BigInt, String>>,
}

impl RouteValues {
    fn new() -> Self {
        Self {
            names: Vec::new(),
            values: Vec::new(),
        }
    }

    fn push(&mut self, name: &'static str, value: Result<BigInt, String>) {
        self.names.push(name);
        self.values.push(value);
    }

    fn record(&self, n: usize, x: u32, r: Option<usize>, scientific: bool) -> ValueRecord {
        let first = &self.values[0];
        let agree = first.is_ok() && self.values.iter().all(|v| v == first);
        let value = match first {
            Ok(v) => v.to_string(),
            Err(e) => e.clone(),
        };
        let approx = scientific.then(|| match first {
            Ok(v) => v.to_f64().map_or_else(|| "inf".to_string(), |f| format!("{f:.6e}")),
            Err(_) => String::new(),
        });
        ValueRecord {
            n,
            x,
            r,
            value,
            routes: self.names.join(";"),
            agree,
            approx,
        }
    }
}

fn point_for(x: u32) -> Result<SpecialPoint, CliError> {
    SpecialPoint::from_weight(x).map_err(|e| CliError::Usage(e.to_string()))
}

pub fn enumerate_records(n: usize, x: u32, scientific: bool) -> Result<Vec<ValueRecord>, CliError> {
    if n == 0 {
        return Err(CliError::Usage("N must be at least 1".into()));
    }
    let point = point_for(x)?;
    let mut routes = RouteValues::new();
    routes.push("closed", closed_count(n, x).map_err(|e| e.to_string()));
    routes.push(
        "determinant",
        enumeration_from_partition(point, n).map_err(|e| e.to_string()),
    );
    if n <= DEFAULT_LIMIT {
        routes.push(
            "oracle",
            oracle_counts(n, x).map(|t| t.total).map_err(|e| e.to_string()),
        );
    }
    Ok(vec![routes.record(n, x, None, scientific)])
}

pub fn refined_records(
    n: usize,
    x: u32,
    only_r: Option<usize>,
    scientific: bool,
) -> Result<Vec<ValueRecord>, CliError> {
    if n == 0 {
        return Err(CliError::Usage("N must be at least 1".into()));
    }
    if let Some(r) = only_r {
        if r == 0 || r > n {
            return Err(CliError::Usage(format!("r must lie in 1..={n}")));
        }
    }
    let point = point_for(x)?;
    let row = |v: Result<Vec<BigInt>, String>| -> Vec<Result<BigInt, String>> {
        match v {
            Ok(values) => values.into_iter().map(Ok).collect(),
            Err(e) => vec![Err(e); n],
        }
    };
    let mut columns: Vec<(&'static str, Vec<Result<BigInt, String>>)> = vec![
        ("closed", row(refined_closed_route(n, x).map_err(|e| e.to_string()))),
        (
            "determinant",
            row(refined_from_correlator(point, n)
                .map(|t| t.refined)
                .map_err(|e| e.to_string())),
        ),
    ];
    if n <= DEFAULT_LIMIT {
        columns.push((
            "oracle",
            row(oracle_counts(n, x).map(|t| t.refined).map_err(|e| e.to_string())),
        ));
    }
    Ok((1..=n)
        .filter(|r| only_r.is_none_or(|o| o == *r))
        .map(|r| {
            let mut routes = RouteValues::new();
            for (name, values) in &columns {
                routes.push(name, values[r - 1].clone());
            }
            routes.record(n, x, Some(r), scientific)
        })
        .collect())
}

pub fn verify_records(suite: &str, max: usize) -> Result<Vec<CheckRecord>, CliError> {
    let suites = Suite::parse_selection(suite).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(run_suites(&suites, max)
        .into_iter()
        .map(|o| CheckRecord {
            suite: o.suite.to_string(),
            check: o.name,
            passed: o.passed,
            detail: o.detail.unwrap_or_default(),
        })
        .collect())
}

pub fn render<T: Serialize>(command: &str, records: &[T], format: Format) -> Result<Vec<u8>, CliError> {
    match format {
        Format::Json => {
            let mut bytes = serde_json::to_vec_pretty(&Document { command, records }).map_err(std::io::Error::from)?;
            bytes.push(b'\n');
            Ok(bytes)
        }
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            for record in records {
                writer.serialize(record)?;
            }
            writer.into_inner().map_err(|e| CliError::Io(e.into_error()))
        }
    }
}

fn emit(bytes: &[u8], output: &OutputArgs) -> Result<(), CliError> {
    match &output.out {
        Some(path) => std::fs::write(path, bytes)?,
        None => std::io::stdout().lock().write_all(bytes)?,
    }
    Ok(())
}

/// Executes a parsed command and returns the process exit code.
pub fn execute(cli: Cli) -> Result<i32, CliError> {
    let (bytes, ok, output) = match cli.command {
        Command::Enumerate(args) => {
            let records = enumerate_records(args.n, args.x, args.output.scientific)?;
            let ok = records.iter().all(|r| r.agree);
            (render("enumerate", &records, args.output.format)?, ok, args.output)
        }
        Command::Refined { size, r } => {
            let records = refined_records(size.n, size.x, r, size.output.scientific)?;
            let ok = records.iter().all(|r| r.agree);
            (render("refined", &records, size.output.format)?, ok, size.output)
        }
        Command::Verify { suite, max, output } => {
            let records = verify_records(&suite, max)?;
            let ok = records.iter().all(|r| r.passed);
            (render("verify", &records, output.format)?, ok, output)
        }
    };
    emit(&bytes, &output)?;
    Ok(if ok { EXIT_OK } else { EXIT_DISAGREE })
}
