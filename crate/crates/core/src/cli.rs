//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 verification mismatch, 3 budget
//! exceeded. JSON output is an object with `schema_version`, `query` and
//! `result`, with every count written as a decimal string.

use std::ffi::OsString;
use std::io::{self, Write};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::Error;
use crate::oracle::{Oracle, RangeReport, VerificationReport, DEFAULT_BUDGET};
use crate::problems::{
    distribution_table, problem1_matches_fixed_length, problem2_matches_any_length,
    problem3_repeats_fixed_length, problem4_repeats_any_length,
};
use crate::sequence::{z_count, SequenceClass};
use crate::surjective::doubly_surjective_count;
use crate::table::DistributionTable;
use crate::Count;

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "colorseq",
    version,
    about = "Exact counts of colored ball sequences by matched balls, repeated colors and repeats"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sequences with exactly m matched balls and exactly lambda repeated colors
    #[command(allow_negative_numbers = true)]
    Z {
        #[arg(long, value_parser = parse_param)]
        k: u64,
        #[arg(long, value_parser = parse_param)]
        n: u64,
        #[arg(long, value_parser = parse_param)]
        m: u64,
        #[arg(long, value_parser = parse_param)]
        lambda: u64,
        #[arg(long, value_enum, default_value_t = ScalarFormat::Text)]
        format: ScalarFormat,
    },
    /// Doubly-surjective functions from an m-set onto a lambda-set
    #[command(allow_negative_numbers = true)]
    S {
        #[arg(long, value_parser = parse_param)]
        m: u64,
        #[arg(long, value_parser = parse_param)]
        lambda: u64,
        #[arg(long, value_enum, default_value_t = ScalarFormat::Text)]
        format: ScalarFormat,
    },
    /// Length-k sequences with exactly m matched balls
    #[command(allow_negative_numbers = true)]
    Problem1 {
        #[arg(long, value_parser = parse_param)]
        k: u64,
        #[arg(long, value_parser = parse_param)]
        n: u64,
        #[arg(long, value_parser = parse_param)]
        m: u64,
        #[arg(long, value_enum, default_value_t = ScalarFormat::Text)]
        format: ScalarFormat,
    },
    /// Sequences of lengths m..=m+n-1 with exactly m matched balls
    #[command(allow_negative_numbers = true)]
    Problem2 {
        #[arg(long, value_parser = parse_param)]
        n: u64,
        #[arg(long, value_parser = parse_param)]
        m: u64,
        #[arg(long, value_enum, default_value_t = ScalarFormat::Text)]
        format: ScalarFormat,
    },
    /// Length-k sequences with exactly mu balls whose color appeared earlier
    #[command(allow_negative_numbers = true)]
    Problem3 {
        #[arg(long, value_parser = parse_param)]
        k: u64,
        #[arg(long, value_parser = parse_param)]
        n: u64,
        #[arg(long, value_parser = parse_param)]
        mu: u64,
        #[arg(long, value_enum, default_value_t = ScalarFormat::Text)]
        format: ScalarFormat,
    },
    /// Sequences of lengths mu+1..=n+mu with exactly mu repeats.
    ///
    /// The empty sequence is never counted, so mu = 0 sums the injective
    /// colorings of lengths 1..=n.
    #[command(allow_negative_numbers = true)]
    Problem4 {
        #[arg(long, value_parser = parse_param)]
        n: u64,
        #[arg(long, value_parser = parse_param)]
        mu: u64,
        #[arg(long, value_enum, default_value_t = ScalarFormat::Text)]
        format: ScalarFormat,
    },
    /// Every non-zero (m, lambda) cell and mu bucket for fixed k and n
    #[command(allow_negative_numbers = true)]
    Table {
        #[arg(long, value_parser = parse_param)]
        k: u64,
        #[arg(long, value_parser = parse_param)]
        n: u64,
        #[arg(long, value_enum, default_value_t = TableFormat::Tsv)]
        format: TableFormat,
    },
    /// Check the formulas against exhaustive enumeration for one (k, n)
    #[command(allow_negative_numbers = true)]
    Verify {
        #[arg(long, value_parser = parse_param)]
        k: u64,
        #[arg(long, value_parser = parse_param)]
        n: u64,
        /// Largest number of colorings to enumerate
        #[arg(long, value_parser = parse_param, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        /// Omit the elapsed time so output is byte-identical across runs
        #[arg(long)]
        no_timing: bool,
    },
    /// Verify every pair 0 <= k <= max-k, 0 <= n <= max-n within budget
    #[command(allow_negative_numbers = true)]
    VerifyRange {
        #[arg(long, value_parser = parse_param)]
        max_k: u64,
        #[arg(long, value_parser = parse_param)]
        max_n: u64,
        /// Largest number of colorings to enumerate per pair; larger pairs are skipped
        #[arg(long, value_parser = parse_param, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        /// Omit the elapsed time so output is byte-identical across runs
        #[arg(long)]
        no_timing: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ScalarFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Tsv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

fn parse_param(s: &str) -> Result<u64, String> {
    if let Ok(v) = s.parse::<u64>() {
        return Ok(v);
    }
    match s.parse::<i64>() {
        Ok(v) => Err(format!("must be non-negative, got {v}")),
        Err(e) => Err(format!("`{s}` is not a non-negative integer: {e}")),
    }
}

/// Echo of the parsed parameters in a JSON record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Query {
    Z { k: u64, n: u64, m: u64, lambda: u64 },
    S { m: u64, lambda: u64 },
    Problem1 { k: u64, n: u64, m: u64 },
    Problem2 { n: u64, m: u64 },
    Problem3 { k: u64, n: u64, mu: u64 },
    Problem4 { n: u64, mu: u64 },
    Table { k: u64, n: u64 },
    Verify { k: u64, n: u64, budget: u64 },
    VerifyRange { max_k: u64, max_n: u64, budget: u64 },
}

/// One JSON document on standard output.
#[derive(Debug, Clone, Serialize)]
pub struct OutputRecord<R> {
    pub schema_version: u32,
    pub query: Query,
    pub result: R,
}

#[derive(Serialize)]
struct Timed<R> {
    #[serde(flatten)]
    report: R,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u128>,
}

/// Parses `args` (program name first), runs the command and returns the exit
/// status. Results go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(rendered.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(rendered.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    match command {
        Command::Z { k, n, m, lambda, format } => {
            let count = z_count(SequenceClass::new(k, n, m, lambda));
            scalar(out, format, Query::Z { k, n, m, lambda }, count)
        }
        Command::S { m, lambda, format } => {
            scalar(out, format, Query::S { m, lambda }, doubly_surjective_count(m, lambda))
        }
        Command::Problem1 { k, n, m, format } => {
            scalar(out, format, Query::Problem1 { k, n, m }, problem1_matches_fixed_length(k, n, m))
        }
        Command::Problem2 { n, m, format } => {
            scalar(out, format, Query::Problem2 { n, m }, problem2_matches_any_length(n, m))
        }
        Command::Problem3 { k, n, mu, format } => {
            scalar(out, format, Query::Problem3 { k, n, mu }, problem3_repeats_fixed_length(k, n, mu))
        }
        Command::Problem4 { n, mu, format } => {
            scalar(out, format, Query::Problem4 { n, mu }, problem4_repeats_any_length(n, mu))
        }
        Command::Table { k, n, format } => {
            let table = distribution_table(k, n);
            match format {
                TableFormat::Tsv => out.write_all(render_tsv(&table).as_bytes())?,
                TableFormat::Json => json(out, Query::Table { k, n }, &table)?,
            }
            Ok(EXIT_OK)
        }
        Command::Verify { k, n, budget, format, no_timing } => {
            let start = Instant::now();
            let report = match Oracle::new().with_budget(budget).verify(k, n) {
                Ok(report) => report,
                Err(e @ Error::BudgetExceeded { .. }) => {
                    writeln!(err, "error: {e}")?;
                    return Ok(EXIT_BUDGET);
                }
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    return Ok(EXIT_USAGE);
                }
            };
            let elapsed = (!no_timing).then(|| start.elapsed().as_millis());
            match format {
                ReportFormat::Text => {
                    out.write_all(render_report(&report).as_bytes())?;
                    if let Some(ms) = elapsed {
                        writeln!(out, "elapsed_ms: {ms}")?;
                    }
                }
                ReportFormat::Json => {
                    json(out, Query::Verify { k, n, budget }, &Timed { report: &report, elapsed_ms: elapsed })?
                }
            }
            Ok(if report.passed { EXIT_OK } else { EXIT_MISMATCH })
        }
        Command::VerifyRange { max_k, max_n, budget, format, no_timing } => {
            let start = Instant::now();
            let report = Oracle::new().with_budget(budget).verify_range(max_k, max_n);
            let elapsed = (!no_timing).then(|| start.elapsed().as_millis());
            match format {
                ReportFormat::Text => {
                    out.write_all(render_range(&report).as_bytes())?;
                    if let Some(ms) = elapsed {
                        writeln!(out, "elapsed_ms: {ms}")?;
                    }
                }
                ReportFormat::Json => json(
                    out,
                    Query::VerifyRange { max_k, max_n, budget },
                    &Timed { report: &report, elapsed_ms: elapsed },
                )?,
            }
            Ok(if report.passed { EXIT_OK } else { EXIT_MISMATCH })
        }
    }
}

fn scalar(out: &mut dyn Write, format: ScalarFormat, query: Query, count: Count) -> io::Result<i32> {
    match format {
        ScalarFormat::Text => writeln!(out, "{count}")?,
        ScalarFormat::Json => json(out, query, &count)?,
    }
    Ok(EXIT_OK)
}

fn json<R: Serialize>(out: &mut dyn Write, query: Query, result: R) -> io::Result<()> {
    let record = OutputRecord { schema_version: SCHEMA_VERSION, query, result };
    serde_json::to_writer(&mut *out, &record)?;
    writeln!(out)
}

/// `m, lambda, count` rows, a blank line, then `mu, count` rows.
pub fn render_tsv(table: &DistributionTable) -> String {
    let mut s = String::from("m\tlambda\tcount\n");
    for ((m, lambda), count) in &table.by_match_cell {
        s.push_str(&format!("{m}\t{lambda}\t{count}\n"));
    }
    s.push_str("\nmu\tcount\n");
    for (mu, count) in &table.by_repeat_count {
        s.push_str(&format!("{mu}\t{count}\n"));
    }
    s
}

fn render_report(report: &VerificationReport) -> String {
    let mut s = format!(
        "k={} n={}: {} ({} cells checked, {} mismatches)\n",
        report.k,
        report.n,
        if report.passed { "PASS" } else { "FAIL" },
        report.cells_checked,
        report.mismatches.len()
    );
    for mm in &report.mismatches {
        s.push_str(&format!("  mismatch {}: formula {}, oracle {}\n", mm.cell, mm.formula, mm.oracle));
    }
    s
}

fn render_range(range: &RangeReport) -> String {
    let mut s = String::new();
    for report in &range.reports {
        s.push_str(&render_report(report));
    }
    for (k, n) in &range.skipped {
        s.push_str(&format!("k={k} n={n}: SKIPPED (n^k exceeds budget)\n"));
    }
    s.push_str(&format!(
        "verify-range: {} ({} pairs verified, {} skipped)\n",
        if range.passed { "PASS" } else { "FAIL" },
        range.reports.len(),
        range.skipped.len()
    ));
    s
}
