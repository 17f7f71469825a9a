//! Terminal front end: six verbs over the combinatorics library, emitting
//! JSON lines (default) or aligned tables on stdout.  Errors go to stderr
//! as a single JSON record.  Exit codes: 0 success, 1 a failed check from
//! the `verify` verb, 2 usage errors and exceeded bounds.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use springer_kit::cuspidal::{
    self, CuspidalError, DEFAULT_SWEEP_BOUND, VerificationReport,
};
use springer_kit::partition::{
    enumerate_symplectic_classes_bounded, Bipartition, Partition, PartitionError,
    DEFAULT_CLASS_ENUM_BOUND,
};
use springer_kit::springer::{springer, SpringerError};
use springer_kit::symbol::Symbol;
use springer_kit::weyl::{harish_chandra_levi, series_labels, WeylError, MAX_WEYL_RANK};

pub const SCHEMA_VERSION: u32 = 1;

/// Environment variable overriding the default rank bounds of `classes`,
/// `cuspidal`, and `verify`.
pub const MAX_RANK_VAR: &str = "SPRINGER_KIT_MAX_RANK";

#[derive(Debug, Parser)]
#[command(name = "springer-kit", version, about = "Symplectic class, symbol, and series combinatorics")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format for stdout records
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// One JSON object per line
    Json,
    /// Aligned columns
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Unipotent class labels of Sp_2n with component group orders
    Classes {
        /// Half-rank of the group
        #[arg(long)]
        n: u64,
    },
    /// Symbol and wave-front data of a bipartition, e.g. "[[3,1],[2]]"
    Springer {
        /// Bipartition as a JSON pair of partitions
        bipartition: String,
    },
    /// Cuspidal datum and identity check for torsion parameters (e, f)
    Cuspidal {
        #[arg(long)]
        e: u64,
        #[arg(long)]
        f: u64,
    },
    /// Check the multiplicity-one identity for all (e, f) with e(e+1) + f^2 <= max-n
    Verify {
        #[arg(long = "max-n")]
        max_n: u64,
    },
    /// Quasi-isolated series labels at rank n
    Series {
        #[arg(long)]
        n: u64,
    },
    /// Harish-Chandra Levi data for cuspidal support (n, e)
    Levi {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        e: u64,
    },
}

pub fn parse_args<I, T>(argv: I) -> Result<Cli, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    Cli::try_parse_from(argv)
}

/// Parses the override variable's value; `Err` is the message for a value
/// that is present but not a number.
pub fn max_rank_from_env(value: Option<String>) -> Result<Option<u64>, String> {
    match value {
        None => Ok(None),
        Some(raw) => raw
            .trim()
            .parse::<u64>()
            .map(Some)
            .map_err(|_| format!("{MAX_RANK_VAR} must be an unsigned integer, got {raw:?}")),
    }
}

#[derive(Serialize)]
struct ClassRecord {
    schema_version: u32,
    n: u64,
    partition: Partition,
    n_u: u64,
    delta_u: u64,
    component_group_order: u64,
}

#[derive(Serialize)]
struct SpringerRecord {
    schema_version: u32,
    bipartition: Bipartition,
    symbol: Symbol,
    rank: u64,
    /// Absent when the merged entries repeat and the wave-front rule does
    /// not apply.
    wavefront: Option<Partition>,
}

#[derive(Serialize)]
struct CuspidalRecord {
    schema_version: u32,
    e: u64,
    f: u64,
    a: u64,
    b: u64,
    n: u64,
    cuspidal_exists: bool,
    n_chi: u64,
    special_b: Symbol,
    special_d: Symbol,
    j_symbol: Symbol,
    springer_symbol: Symbol,
    lambda: Partition,
    mu: Partition,
    a_order: u64,
    identity_holds: bool,
    mu_matches_closed_form: bool,
}

impl CuspidalRecord {
    fn from_report(report: &VerificationReport) -> CuspidalRecord {
        CuspidalRecord {
            schema_version: SCHEMA_VERSION,
            e: report.datum.e(),
            f: report.datum.f(),
            a: report.datum.a(),
            b: report.datum.b(),
            n: report.datum.n(),
            cuspidal_exists: report.datum.cuspidal_exists(),
            n_chi: report.datum.n_chi(),
            special_b: report.datum.special_b().clone(),
            special_d: report.datum.special_d().clone(),
            j_symbol: report.j_symbol.clone(),
            springer_symbol: report.springer_symbol.clone(),
            lambda: report.lambda.partition().clone(),
            mu: report.mu.clone(),
            a_order: report.a_order,
            identity_holds: report.identity_holds,
            mu_matches_closed_form: report.mu_matches_closed_form,
        }
    }

    fn table_row(&self) -> Vec<String> {
        vec![
            self.e.to_string(),
            self.f.to_string(),
            self.n.to_string(),
            self.cuspidal_exists.to_string(),
            self.n_chi.to_string(),
            self.a_order.to_string(),
            self.lambda.to_string(),
            self.identity_holds.to_string(),
            self.mu_matches_closed_form.to_string(),
        ]
    }
}

const CUSPIDAL_HEADERS: [&str; 9] =
    ["e", "f", "n", "cuspidal", "n_chi", "a_order", "lambda", "identity", "mu_match"];

#[derive(Serialize)]
struct SeriesRecord {
    schema_version: u32,
    n: u64,
    a: u64,
    b: u64,
    component_order: u64,
    h1_index: u64,
    h1_label: String,
}

#[derive(Serialize)]
struct LeviRecord {
    schema_version: u32,
    n: u64,
    e: u64,
    cuspidal_rank: u64,
    torus_factors: u64,
    levi_shape: String,
    relative_weyl_type: String,
}

#[derive(Serialize)]
struct ErrorRecord {
    schema_version: u32,
    error: &'static str,
    message: String,
}

/// Executes a parsed command.  Records go to `out`, at most one error
/// record to `err`; the return value is the process exit code.
pub fn run(cli: &Cli, max_rank: Option<u64>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match &cli.command {
        Command::Classes { n } => run_classes(*n, max_rank, cli.format, out, err),
        Command::Springer { bipartition } => run_springer(bipartition, cli.format, out, err),
        Command::Cuspidal { e, f } => run_cuspidal(*e, *f, max_rank, cli.format, out, err),
        Command::Verify { max_n } => run_verify(*max_n, max_rank, cli.format, out, err),
        Command::Series { n } => run_series(*n, cli.format, out, err),
        Command::Levi { n, e } => run_levi(*n, *e, cli.format, out, err),
    }
}

fn run_classes(
    n: u64,
    max_rank: Option<u64>,
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let bound = max_rank.unwrap_or(DEFAULT_CLASS_ENUM_BOUND);
    let classes = match enumerate_symplectic_classes_bounded(n, bound) {
        Ok(classes) => classes,
        Err(e) => return emit_error(partition_error_name(&e), &e.to_string(), err),
    };
    let records: Vec<ClassRecord> = classes
        .iter()
        .map(|label| {
            let (n_u, delta_u) = label.n_delta();
            ClassRecord {
                schema_version: SCHEMA_VERSION,
                n,
                partition: label.partition().clone(),
                n_u,
                delta_u,
                component_group_order: label.component_group_order(),
            }
        })
        .collect();
    match format {
        Format::Json => {
            for record in &records {
                emit_json(record, out);
            }
        }
        Format::Table => {
            let rows: Vec<Vec<String>> = records
                .iter()
                .map(|r| {
                    vec![
                        r.partition.to_string(),
                        r.n_u.to_string(),
                        r.delta_u.to_string(),
                        r.component_group_order.to_string(),
                    ]
                })
                .collect();
            write_table(&["partition", "n_u", "delta_u", "a_order"], &rows, out);
        }
    }
    0
}

fn run_springer(raw: &str, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let bp: Bipartition = match serde_json::from_str(raw) {
        Ok(bp) => bp,
        Err(e) => {
            return emit_error("UsageError", &format!("cannot parse bipartition {raw:?}: {e}"), err)
        }
    };
    let image = springer(&bp);
    let wavefront = match image.wavefront() {
        Ok(label) => Some(label.partition().clone()),
        Err(SpringerError::RepeatedEntries { .. }) => None,
        Err(e) => return emit_error(springer_error_name(&e), &e.to_string(), err),
    };
    let record = SpringerRecord {
        schema_version: SCHEMA_VERSION,
        bipartition: bp,
        symbol: image.symbol().clone(),
        rank: image.rank(),
        wavefront,
    };
    match format {
        Format::Json => emit_json(&record, out),
        Format::Table => {
            let row = vec![
                record.bipartition.to_string(),
                record.symbol.to_string(),
                record.rank.to_string(),
                record.wavefront.as_ref().map_or("-".to_string(), Partition::to_string),
            ];
            write_table(&["bipartition", "symbol", "rank", "wavefront"], &[row], out);
        }
    }
    0
}

fn run_cuspidal(
    e: u64,
    f: u64,
    max_rank: Option<u64>,
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let bound = max_rank.unwrap_or(DEFAULT_SWEEP_BOUND);
    let n = e as u128 * (e as u128 + 1) + f as u128 * f as u128;
    if n > bound as u128 {
        let message = format!("rank {n} of (e, f) = ({e}, {f}) exceeds the bound {bound}");
        return emit_error("BoundExceeded", &message, err);
    }
    let report = match cuspidal::verify_multiplicity_one(e, f) {
        Ok(report) => report,
        Err(error) => return emit_error(cuspidal_error_name(&error), &error.to_string(), err),
    };
    let record = CuspidalRecord::from_report(&report);
    match format {
        Format::Json => emit_json(&record, out),
        Format::Table => write_table(&CUSPIDAL_HEADERS, &[record.table_row()], out),
    }
    0
}

fn run_verify(
    max_n: u64,
    max_rank: Option<u64>,
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let bound = max_rank.unwrap_or(DEFAULT_SWEEP_BOUND);
    let reports = match cuspidal::sweep_bounded(max_n, bound) {
        Ok(reports) => reports,
        Err(error @ CuspidalError::BoundExceeded { .. }) => {
            return emit_error(cuspidal_error_name(&error), &error.to_string(), err)
        }
        // A pipeline error is a failed verification, not a usage problem.
        Err(error) => {
            emit_error(cuspidal_error_name(&error), &error.to_string(), err);
            return 1;
        }
    };
    let records: Vec<CuspidalRecord> = reports.iter().map(CuspidalRecord::from_report).collect();
    match format {
        Format::Json => {
            for record in &records {
                emit_json(record, out);
            }
        }
        Format::Table => {
            let rows: Vec<Vec<String>> = records.iter().map(CuspidalRecord::table_row).collect();
            write_table(&CUSPIDAL_HEADERS, &rows, out);
        }
    }
    verify_exit_code(&reports)
}

/// 1 if any swept pair failed either comparison, else 0.
pub fn verify_exit_code(reports: &[VerificationReport]) -> i32 {
    let clean = reports
        .iter()
        .all(|r| r.identity_holds && r.mu_matches_closed_form);
    if clean {
        0
    } else {
        1
    }
}

fn run_series(n: u64, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if n > MAX_WEYL_RANK as u64 {
        let error = WeylError::BoundExceeded { requested: n as usize, bound: MAX_WEYL_RANK };
        return emit_error(weyl_error_name(&error), &error.to_string(), err);
    }
    let labels = match series_labels(n as usize) {
        Ok(labels) => labels,
        Err(error) => return emit_error(weyl_error_name(&error), &error.to_string(), err),
    };
    let records: Vec<SeriesRecord> = labels
        .iter()
        .map(|label| SeriesRecord {
            schema_version: SCHEMA_VERSION,
            n,
            a: label.involution.a() as u64,
            b: label.involution.b() as u64,
            component_order: label.component_order as u64,
            h1_index: label.h1_index as u64,
            h1_label: label.h1_label.clone(),
        })
        .collect();
    match format {
        Format::Json => {
            for record in &records {
                emit_json(record, out);
            }
        }
        Format::Table => {
            let rows: Vec<Vec<String>> = records
                .iter()
                .map(|r| {
                    vec![
                        r.a.to_string(),
                        r.b.to_string(),
                        r.component_order.to_string(),
                        r.h1_index.to_string(),
                        r.h1_label.clone(),
                    ]
                })
                .collect();
            write_table(&["a", "b", "a_order", "h1_index", "h1_label"], &rows, out);
        }
    }
    0
}

fn run_levi(n: u64, e: u64, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let datum = match harish_chandra_levi(n, e) {
        Ok(datum) => datum,
        Err(error) => return emit_error(weyl_error_name(&error), &error.to_string(), err),
    };
    let record = LeviRecord {
        schema_version: SCHEMA_VERSION,
        n: datum.n,
        e: datum.e,
        cuspidal_rank: datum.cuspidal_rank,
        torus_factors: datum.torus_factors,
        levi_shape: datum.levi_shape(),
        relative_weyl_type: datum.relative_weyl_type(),
    };
    match format {
        Format::Json => emit_json(&record, out),
        Format::Table => {
            let row = vec![
                record.n.to_string(),
                record.e.to_string(),
                record.cuspidal_rank.to_string(),
                record.levi_shape.clone(),
                record.relative_weyl_type.clone(),
            ];
            write_table(&["n", "e", "k", "levi", "relative_weyl"], &[row], out);
        }
    }
    0
}

/// Writes one line; when the consumer has hung up (`head`, a closed pager)
/// the process stops quietly instead of panicking mid-stream.  Rust leaves
/// SIGPIPE ignored, so the hangup arrives here as a plain write error.
fn write_line(out: &mut dyn Write, line: &str) {
    if let Err(error) = writeln!(out, "{line}") {
        if error.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        panic!("write to output: {error}");
    }
}

fn emit_json<T: Serialize>(record: &T, out: &mut dyn Write) {
    let line = serde_json::to_string(record).expect("records serialize");
    write_line(out, &line);
}

/// Writes the error record (always JSON — it must stay machine-readable
/// even in table mode) and returns the usage exit code.  A hangup on
/// stderr is swallowed rather than exiting 0: the code must still report
/// the failure.
pub fn emit_error(name: &'static str, message: &str, err: &mut dyn Write) -> i32 {
    let record = ErrorRecord { schema_version: SCHEMA_VERSION, error: name, message: message.to_string() };
    let line = serde_json::to_string(&record).expect("error records serialize");
    let _ = writeln!(err, "{line}");
    2
}

fn write_table(headers: &[&str], rows: &[Vec<String>], out: &mut dyn Write) {
    let width = |s: &str| s.chars().count();
    let mut widths: Vec<usize> = headers.iter().map(|h| width(h)).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(width(cell));
        }
    }
    let mut render = |cells: Vec<&str>| {
        let line = cells
            .iter()
            .enumerate()
            .map(|(i, cell)| format!("{cell:<w$}", w = widths[i]))
            .collect::<Vec<_>>()
            .join("  ");
        write_line(out, line.trim_end());
    };
    render(headers.to_vec());
    for row in rows {
        render(row.iter().map(String::as_str).collect());
    }
}

fn partition_error_name(error: &PartitionError) -> &'static str {
    match error {
        PartitionError::NotSorted { .. } => "NotSorted",
        PartitionError::NonPositivePart => "NonPositivePart",
        PartitionError::SumOverflow => "SumOverflow",
        PartitionError::NotSymplectic => "NotSymplectic",
        PartitionError::BoundExceeded { .. } => "BoundExceeded",
    }
}

fn springer_error_name(error: &SpringerError) -> &'static str {
    match error {
        SpringerError::WrongParameters { .. } => "WrongParameters",
        SpringerError::RepeatedEntries { .. } => "RepeatedEntries",
        SpringerError::NotInImage => "NotInImage",
    }
}

fn cuspidal_error_name(error: &CuspidalError) -> &'static str {
    match error {
        CuspidalError::BoundExceeded { .. } => "BoundExceeded",
        CuspidalError::Springer(inner) => springer_error_name(inner),
    }
}

fn weyl_error_name(error: &WeylError) -> &'static str {
    match error {
        WeylError::BoundExceeded { .. } => "BoundExceeded",
        WeylError::RankExceeded { .. } => "RankExceeded",
    }
}
