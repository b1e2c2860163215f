use std::io::{self, Write};
use std::process::ExitCode;

use annulus_core::homology::{self, HomologyReport, Summand, TruncationSpec};
use annulus_core::open::diff;
use annulus_core::predict::Scope;
use annulus_core::verify::{self, Suite};
use annulus_core::{parse_element, Complex, HalfInt};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

mod range;

use range::{parse_half_range, HalfRange};

#[derive(Parser)]
#[command(name = "annulus", version, about = "Z2 string chain complexes of marked annuli")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the differential of an element.
    Diff {
        #[arg(long, value_parser = parse_complex)]
        complex: Complex,
        #[arg(long)]
        expr: String,
    },
    /// Homology dimensions of windows of fixed winding and bounded weight.
    #[command(alias = "table")]
    Homology(HomologyArgs),
    /// Run a batch of identity and dimension checks.
    Verify {
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = 10)]
        max_weight: i64,
    },
}

#[derive(clap::Args)]
struct HomologyArgs {
    #[arg(long, value_parser = parse_complex)]
    complex: Complex,
    /// `P`, `P/2` or an inclusive range `A..B`.
    #[arg(long, value_parser = parse_half_range, allow_hyphen_values = true)]
    winding: HalfRange,
    /// `P`, `P/2` or an inclusive range `A..B`.
    #[arg(long, value_parser = parse_half_range)]
    max_weight: HalfRange,
    #[arg(long, value_parser = parse_summand)]
    summand: Option<Summand>,
    #[arg(long, value_parser = parse_half)]
    max_a_degree: Option<HalfInt>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads; defaults to the number of CPUs.
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

fn parse_complex(s: &str) -> Result<Complex, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_summand(s: &str) -> Result<Summand, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_half(s: &str) -> Result<HalfInt, String> {
    s.parse().map_err(|e| format!("{e}"))
}

#[derive(Serialize)]
#[serde(untagged)]
enum HalfValue {
    Int(i64),
    Half(String),
}

impl From<HalfInt> for HalfValue {
    fn from(h: HalfInt) -> Self {
        match h.to_int() {
            Some(n) => HalfValue::Int(n),
            None => HalfValue::Half(h.to_string()),
        }
    }
}

#[derive(Serialize)]
struct Record {
    complex: String,
    winding: HalfValue,
    max_weight: HalfValue,
    summand: Option<String>,
    max_a_degree: Option<HalfValue>,
    dim_space: usize,
    dim_kernel: usize,
    dim_image: usize,
    dim_homology: usize,
    predicted: Option<usize>,
    prediction_scope: Option<&'static str>,
    stable: bool,
}

impl Record {
    fn new(r: &HomologyReport, stable: bool) -> Self {
        Record {
            complex: r.spec.complex.name().to_string(),
            winding: r.spec.winding.into(),
            max_weight: r.spec.max_weight.into(),
            summand: r.spec.summand.map(|s| s.to_string()),
            max_a_degree: r.spec.max_a_degree.map(HalfValue::from),
            dim_space: r.dim_space,
            dim_kernel: r.dim_kernel,
            dim_image: r.dim_image,
            dim_homology: r.dim_homology,
            predicted: r.predicted_dim(),
            prediction_scope: r.predicted.map(|p| match p.scope {
                Scope::Window => "window",
                Scope::Limit => "limit",
            }),
            stable,
        }
    }
}

/// A failure with its exit code: 1 for failed checks, 2 for bad input.
struct Failure(u8, String);

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(code, msg)) => {
            if !msg.is_empty() {
                eprintln!("error: {msg}");
            }
            ExitCode::from(code)
        }
    }
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure(2, e.to_string())
}

fn run(command: Command) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    match command {
        Command::Diff { complex, expr } => {
            let e = parse_element(&expr, complex).map_err(usage)?;
            writeln!(out, "{}", diff(&e)).map_err(usage)?;
        }
        Command::Homology(args) => homology_table(&args, &mut out)?,
        Command::Verify { suite, max_weight } => {
            let checks = verify::run(suite, max_weight);
            let failed = checks.iter().filter(|c| !c.passed).count();
            for c in &checks {
                writeln!(out, "{c}").map_err(usage)?;
            }
            writeln!(out, "{} passed, {failed} failed", checks.len() - failed).map_err(usage)?;
            if failed > 0 {
                return Err(Failure(1, String::new()));
            }
        }
    }
    Ok(())
}

fn homology_table(args: &HomologyArgs, out: &mut impl Write) -> Result<(), Failure> {
    let mut base = TruncationSpec::new(args.complex, args.winding.start, args.max_weight.start);
    if let Some(s) = args.summand {
        base = base.with_summand(s);
    }
    if let Some(cap) = args.max_a_degree {
        base = base.with_max_a_degree(cap);
    }
    base.validate().map_err(usage)?;

    let windings = args.winding.values();
    let weights = args.max_weight.values();
    let specs: Vec<TruncationSpec> = windings
        .iter()
        .flat_map(|&w| weights.iter().map(move |&m| TruncationSpec { winding: w, max_weight: m, ..base }))
        .collect();

    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = args.jobs {
        pool = pool.num_threads(n);
    }
    let pool = pool.build().map_err(usage)?;
    let reports: Vec<HomologyReport> = pool
        .install(|| specs.par_iter().map(homology::homology_dim).collect::<Result<_, _>>())
        .map_err(usage)?;

    let records: Vec<Record> = reports
        .chunks(weights.len())
        .flat_map(|scan| homology::mark_stable(scan.to_vec()))
        .map(|row| Record::new(&row.report, row.stable))
        .collect();

    let io_err = |e: io::Error| usage(e);
    match args.format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &records).map_err(usage)?;
            writeln!(out).map_err(io_err)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            for r in &records {
                w.serialize(CsvRow::from(r)).map_err(usage)?;
            }
            w.flush().map_err(io_err)?;
        }
        Format::Text => {
            writeln!(out, "complex winding max_weight dim_space dim_kernel dim_image dim_homology predicted stable")
                .map_err(io_err)?;
            for r in &records {
                let row = CsvRow::from(r);
                writeln!(
                    out,
                    "{} {} {} {} {} {} {} {} {}",
                    row.complex,
                    row.winding,
                    row.max_weight,
                    row.dim_space,
                    row.dim_kernel,
                    row.dim_image,
                    row.dim_homology,
                    if row.predicted.is_empty() { "-" } else { &row.predicted },
                    row.stable
                )
                .map_err(io_err)?;
            }
        }
    }
    Ok(())
}

/// Flat rendering of a [`Record`] for CSV and text output.
#[derive(Serialize)]
struct CsvRow {
    complex: String,
    winding: String,
    max_weight: String,
    summand: String,
    max_a_degree: String,
    dim_space: usize,
    dim_kernel: usize,
    dim_image: usize,
    dim_homology: usize,
    predicted: String,
    prediction_scope: String,
    stable: bool,
}

impl From<&Record> for CsvRow {
    fn from(r: &Record) -> Self {
        let half = |h: &HalfValue| match h {
            HalfValue::Int(n) => n.to_string(),
            HalfValue::Half(s) => s.clone(),
        };
        CsvRow {
            complex: r.complex.clone(),
            winding: half(&r.winding),
            max_weight: half(&r.max_weight),
            summand: r.summand.clone().unwrap_or_default(),
            max_a_degree: r.max_a_degree.as_ref().map(half).unwrap_or_default(),
            dim_space: r.dim_space,
            dim_kernel: r.dim_kernel,
            dim_image: r.dim_image,
            dim_homology: r.dim_homology,
            predicted: r.predicted.map(|p| p.to_string()).unwrap_or_default(),
            prediction_scope: r.prediction_scope.unwrap_or_default().to_string(),
            stable: r.stable,
        }
    }
}
