//! Command-line front end.
//!
//! Exit status: 0 on success, 1 when verification fails or two methods
//! disagree, 2 for argument or input errors, 3 when the oracle runs out of
//! factorization budget. Data goes to the output stream, diagnostics to the
//! error stream.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use crate::error::Error;
use crate::factor::DEFAULT_BUDGET;
use crate::families::{parametric_row, recurrence_rows, FamilyId, FamilyRow};
use crate::fixtures::{table1_records, table2_rows};
use crate::identities::{alpha_scan, cube, cube_sum_consecutive, verify_record};
use crate::io::{
    alpha_table, decode_verify_input, families_markdown, family_table, multi_table, records_markdown,
    records_table, representation_table, OutputFormat, VerifyInput,
};
use crate::oracle::{divisor_representations, multi_representations};
use crate::search::{scan_ab_with, search_consecutive_with, SearchConfig};

/// Environment variable that overrides the oracle's trial-division budget.
pub const BUDGET_ENV: &str = "TWOCUBES_ORACLE_BUDGET";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "twocubes",
    version,
    about = "Integers that are a sum of two consecutive cubes and of two other cubes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
    Markdown,
    Bfile,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Csv => OutputFormat::Csv,
            Format::Json => OutputFormat::Json,
            Format::Markdown => OutputFormat::Markdown,
            Format::Bfile => OutputFormat::Bfile,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilySelect {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    Both,
}

impl FamilySelect {
    fn families(self) -> &'static [FamilyId] {
        match self {
            FamilySelect::One => &[FamilyId::One],
            FamilySelect::Two => &[FamilyId::Two],
            FamilySelect::Both => &FamilyId::ALL,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Method {
    Parametric,
    Recurrence,
    Check,
}

#[derive(Debug, clap::Args)]
struct Output {
    /// Output format.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Integer column written by `--format bfile`.
    #[arg(long)]
    column: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// All solutions with 0 < n < nmax and b < 0 < a < |b|, via the divisor oracle.
    Search {
        #[arg(long)]
        nmax: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Closed-form roots over an (a, b) window.
    ScanAb {
        #[arg(long)]
        amax: i64,
        #[arg(long, allow_hyphen_values = true)]
        bmin: i64,
        #[arg(long)]
        nlimit: i64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Every representation of N as a sum of two cubes.
    Oracle {
        value: String,
        /// Keep only pairs of positive cubes.
        #[arg(long)]
        positive_only: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Rows of the two infinite families.
    Families {
        #[arg(long, value_enum)]
        family: FamilySelect,
        #[arg(long)]
        count: u64,
        #[arg(long, value_enum, default_value = "parametric")]
        method: Method,
        #[command(flatten)]
        output: Output,
    },
    /// Integer roots of n^3+(n+1)^3 = (n+3)^3+(n+alpha)^3 over an alpha range.
    Alpha {
        #[arg(long, allow_hyphen_values = true)]
        min: i64,
        #[arg(long, allow_hyphen_values = true)]
        max: i64,
        #[command(flatten)]
        output: Output,
    },
    /// Consecutive-cube sums with at least `min-reps` representations.
    Multi {
        #[arg(long)]
        nmax: u64,
        #[arg(long)]
        min_reps: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Check solution records or family rows from a CSV or JSON file.
    Verify {
        #[arg(long)]
        input: PathBuf,
    },
    /// Built-in table of solutions with n < 1000.
    Table1 {
        #[command(flatten)]
        output: Output,
    },
    /// Built-in table of the first twenty rows of both families.
    Table2 {
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug)]
enum Failure {
    /// Message already reported; exit with this status.
    Status(i32),
    Error(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        _ if e.is_budget_exceeded() => EXIT_BUDGET,
        Error::NotVerifying { .. } => EXIT_FAILED,
        _ => EXIT_USAGE,
    }
}

fn budget_from_env() -> Result<u64, Error> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::invalid(format!("{BUDGET_ENV} must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{e}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{e}");
                EXIT_OK
            };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(()) => EXIT_OK,
        Err(Failure::Status(code)) => code,
        Err(Failure::Error(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn emit_records(
    out: &mut dyn Write,
    records: &[crate::identities::CubeSumRecord],
    output: &Output,
    default: Format,
) -> Result<(), Failure> {
    let format = output.format.unwrap_or(default);
    let text = match format {
        Format::Markdown => records_markdown(records),
        other => records_table(records).encode(other.into(), output.column.as_deref().unwrap_or("N"))?,
    };
    out.write_all(text.as_bytes())?;
    Ok(())
}

fn emit_families(out: &mut dyn Write, rows: &[FamilyRow], output: &Output, default: Format) -> Result<(), Failure> {
    let format = output.format.unwrap_or(default);
    let text = match format {
        Format::Markdown => families_markdown(rows),
        other => family_table(rows).encode(other.into(), output.column.as_deref().unwrap_or("N"))?,
    };
    out.write_all(text.as_bytes())?;
    Ok(())
}

fn emit_table(out: &mut dyn Write, table: crate::io::Table, output: &Output, column: &str) -> Result<(), Failure> {
    let format = output.format.unwrap_or(Format::Csv);
    let text = table.encode(format.into(), output.column.as_deref().unwrap_or(column))?;
    out.write_all(text.as_bytes())?;
    Ok(())
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Search { nmax, jobs, output } => {
            let config = SearchConfig::default()
                .with_jobs(jobs.max(1))
                .with_budget(budget_from_env()?);
            let records = search_consecutive_with(nmax, &config)?;
            emit_records(out, &records, &output, Format::Csv)
        }
        Command::ScanAb {
            amax,
            bmin,
            nlimit,
            jobs,
            output,
        } => {
            let config = SearchConfig::default().with_jobs(jobs.max(1));
            let records = scan_ab_with(amax, bmin, nlimit, &config)?;
            emit_records(out, &records, &output, Format::Csv)
        }
        Command::Oracle {
            value,
            positive_only,
            output,
        } => {
            let n: BigInt = value
                .trim()
                .parse()
                .map_err(|_| Error::invalid(format!("not an integer: {value:?}")))?;
            let mut set = divisor_representations(&n, budget_from_env()?)?;
            if positive_only {
                set = set.positive_only();
            }
            emit_table(out, representation_table(&set), &output, "x")
        }
        Command::Families {
            family,
            count,
            method,
            output,
        } => {
            if count == 0 {
                return Err(Error::invalid("--count must be at least 1").into());
            }
            match method {
                Method::Check => check_families(out, family.families(), count),
                Method::Parametric | Method::Recurrence => {
                    let mut rows = Vec::new();
                    for &f in family.families() {
                        match method {
                            Method::Parametric => {
                                for i in 1..=count {
                                    rows.push(parametric_row(f, i)?);
                                }
                            }
                            _ => rows.extend(recurrence_rows(f, count)?),
                        }
                    }
                    emit_families(out, &rows, &output, Format::Csv)
                }
            }
        }
        Command::Alpha { min, max, output } => {
            let found = alpha_scan(min, max)?;
            emit_table(out, alpha_table(&found), &output, "n")
        }
        Command::Multi {
            nmax,
            min_reps,
            output,
        } => {
            let found = multi_representations(nmax, min_reps, budget_from_env()?)?;
            emit_table(out, multi_table(&found), &output, "n")
        }
        Command::Verify { input } => verify_file(out, err, &input),
        Command::Table1 { output } => emit_records(out, &table1_records(), &output, Format::Markdown),
        Command::Table2 { output } => {
            let mut rows = table2_rows(FamilyId::One);
            rows.extend(table2_rows(FamilyId::Two));
            emit_families(out, &rows, &output, Format::Markdown)
        }
    }
}

fn check_families(out: &mut dyn Write, families: &[FamilyId], count: u64) -> Result<(), Failure> {
    let mut agree = true;
    for &f in families {
        let recurrence = recurrence_rows(f, count)?;
        let mut mismatches = 0u64;
        for row in &recurrence {
            let closed = parametric_row(f, row.i)?;
            if &closed != row {
                mismatches += 1;
                writeln!(out, "family {f} row {}: parametric and recurrence differ", row.i)?;
            }
        }
        if mismatches == 0 {
            writeln!(out, "family {f}: parametric and recurrence agree on {count} rows")?;
        } else {
            agree = false;
            writeln!(out, "family {f}: {mismatches} of {count} rows disagree")?;
        }
    }
    if agree {
        Ok(())
    } else {
        Err(Failure::Status(EXIT_FAILED))
    }
}

fn family_row_ok(row: &FamilyRow) -> bool {
    let lhs = cube_sum_consecutive(&row.n);
    lhs == row.sum && cube(&row.x) + cube(&row.y) == lhs && row.eta == &row.x + &row.y
}

fn verify_file(out: &mut dyn Write, err: &mut dyn Write, path: &PathBuf) -> Result<(), Failure> {
    let text = std::fs::read_to_string(path)?;
    let is_json = path
        .extension()
        .and_then(|e| e.to_str())
        .is_some_and(|e| e.eq_ignore_ascii_case("json"));
    let results: Vec<(bool, String)> = match decode_verify_input(&text, is_json)? {
        VerifyInput::Records(records) => records
            .iter()
            .map(|r| {
                (
                    verify_record(r),
                    format!("n={} a={} b={} N={}", r.n, r.a, r.b, r.sum),
                )
            })
            .collect(),
        VerifyInput::Families(rows) => rows
            .iter()
            .map(|r| {
                (
                    family_row_ok(r),
                    format!("family={} i={} n={} N={}", r.family, r.i, r.n, r.sum),
                )
            })
            .collect(),
    };
    let mut failed = 0usize;
    for (k, (ok, what)) in results.iter().enumerate() {
        let tag = if *ok { "PASS" } else { "FAIL" };
        writeln!(out, "{tag} {} {what}", k + 1)?;
        failed += usize::from(!ok);
    }
    writeln!(err, "{} rows checked, {failed} failed", results.len())?;
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Status(EXIT_FAILED))
    }
}
