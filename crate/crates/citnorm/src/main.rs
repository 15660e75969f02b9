use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use citnorm::axioms::{search_counterexample, ConsistencyKind, IndicatorFn, SearchBounds};
use citnorm::baselines::{derive_baselines, AveragingMode};
use citnorm::indicators::IndicatorKind;
use citnorm::io::{load_corpus, load_groups, load_scored_set};
use citnorm::publication::PublicationSet;
use citnorm::report::{report_corpus, report_sets, IndicatorReport};
use citnorm::Result;

#[derive(Parser)]
#[command(
    name = "citnorm",
    version,
    about = "Field-normalized citation impact indicators with exact rational arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Derive per-field citation baselines from a corpus
    Baselines(BaselinesArgs),
    /// Score publication groups with normalized indicators
    Report(ReportArgs),
    /// Check consistency axioms and search for counterexamples
    Axioms(AxiomsArgs),
}

#[derive(Args)]
struct BaselinesArgs {
    /// Corpus CSV (header `id,citations,fields`; fields separated by `;`)
    corpus: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct ReportArgs {
    /// Corpus CSV; baselines are derived from the whole corpus
    #[arg(required_unless_present = "scored_set", conflicts_with = "scored_set")]
    corpus: Option<PathBuf>,
    /// Group definitions CSV (header `group,members`); default is one
    /// whole-corpus group named `world`
    #[arg(long, requires = "corpus")]
    groups: Option<PathBuf>,
    /// Pre-normalized set CSV (header `citations,expected,count`);
    /// repeatable, each file reports as one group named by its file stem
    #[arg(long = "scored-set", value_name = "FILE")]
    scored_set: Vec<PathBuf>,
    /// How a multi-field record averages its field baselines
    #[arg(long, value_enum, default_value_t = Averaging::Harmonic)]
    averaging: Averaging,
    /// Indicators to compute, comma separated
    #[arg(
        long,
        value_enum,
        value_delimiter = ',',
        default_values_t = [Indicator::CppFcsm, Indicator::Mncs, Indicator::Tncs, Indicator::BruteForce]
    )]
    indicators: Vec<Indicator>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct AxiomsArgs {
    /// Indicator under test
    #[arg(value_enum)]
    indicator: Indicator,
    /// Consistency definition to check; defaults to the natural one for
    /// the indicator (total for tncs and brute-force, average for mncs
    /// and cpp-fcsm)
    #[arg(long, value_enum)]
    definition: Option<Definition>,
    /// Largest citation count in the search grid
    #[arg(long, default_value_t = 12)]
    max_cites: u64,
    /// Largest numerator for expected values in the search grid
    #[arg(long, default_value_t = 12)]
    max_expected_numerator: u64,
    /// Denominators for expected values, comma separated
    #[arg(long, value_delimiter = ',', default_values_t = [1u64, 2])]
    expected_denominators: Vec<u64>,
    /// Largest size of each compared set
    #[arg(long, default_value_t = 2)]
    max_set_size: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Averaging {
    Harmonic,
    Arithmetic,
}

impl From<Averaging> for AveragingMode {
    fn from(averaging: Averaging) -> Self {
        match averaging {
            Averaging::Harmonic => AveragingMode::Harmonic,
            Averaging::Arithmetic => AveragingMode::Arithmetic,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Indicator {
    CppFcsm,
    Mncs,
    Tncs,
    BruteForce,
}

impl From<Indicator> for IndicatorKind {
    fn from(indicator: Indicator) -> Self {
        match indicator {
            Indicator::CppFcsm => IndicatorKind::CppFcsm,
            Indicator::Mncs => IndicatorKind::Mncs,
            Indicator::Tncs => IndicatorKind::Tncs,
            Indicator::BruteForce => IndicatorKind::BruteForce,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Definition {
    Total,
    Average,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Baselines(args) => run_baselines(&args),
        Command::Report(args) => run_report(&args),
        Command::Axioms(args) => run_axioms(&args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::FAILURE
        }
    }
}

fn run_baselines(args: &BaselinesArgs) -> Result<()> {
    let corpus = load_corpus(&args.corpus)?;
    let baselines = derive_baselines(&corpus);
    let rows: Vec<[String; 3]> = baselines
        .iter()
        .map(|(field, baseline)| {
            [
                field.to_string(),
                baseline.to_string(),
                baseline.to_decimal(2),
            ]
        })
        .collect();
    match args.format {
        Format::Text => print!("{}", aligned_table(&["field", "baseline", "rendered"], &rows)),
        Format::Csv => {
            println!("field,exact,rendered");
            for [field, exact, rendered] in &rows {
                println!("{field},{exact},{rendered}");
            }
        }
        Format::Json => {
            let objects: Vec<serde_json::Value> = rows
                .iter()
                .map(|[field, exact, rendered]| {
                    serde_json::json!({
                        "field": field,
                        "exact": exact,
                        "rendered": rendered,
                    })
                })
                .collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&objects).expect("string tree")
            );
        }
    }
    Ok(())
}

fn aligned_table(header: &[&str], rows: &[[String; 3]]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|cell| cell.len()).collect();
    for row in rows {
        for (width, cell) in widths.iter_mut().zip(row) {
            *width = (*width).max(cell.len());
        }
    }
    let mut out = String::new();
    let mut push_line = |cells: Vec<&str>| {
        let line = cells
            .iter()
            .zip(&widths)
            .map(|(cell, &width)| format!("{cell:<width$}"))
            .collect::<Vec<_>>()
            .join("  ");
        out.push_str(line.trim_end());
        out.push('\n');
    };
    push_line(header.to_vec());
    for row in rows {
        push_line(row.iter().map(String::as_str).collect());
    }
    out
}

fn run_report(args: &ReportArgs) -> Result<()> {
    let kinds: Vec<IndicatorKind> = args.indicators.iter().map(|&i| i.into()).collect();
    let report: IndicatorReport = if let Some(corpus_path) = &args.corpus {
        let corpus = load_corpus(corpus_path)?;
        let groups = match &args.groups {
            Some(path) => load_groups(path)?,
            None => Vec::new(),
        };
        report_corpus(&corpus, &groups, args.averaging.into(), &kinds)?
    } else {
        let mut sets: Vec<(String, PublicationSet)> = Vec::new();
        for path in &args.scored_set {
            let name = path
                .file_stem()
                .map(|stem| stem.to_string_lossy().into_owned())
                .unwrap_or_else(|| path.display().to_string());
            sets.push((name, load_scored_set(path)?));
        }
        report_sets(&sets, &kinds)?
    };
    let rendered = match args.format {
        Format::Text => report.to_text(),
        Format::Csv => report.to_csv(),
        Format::Json => report.to_json(),
    };
    print!("{rendered}");
    Ok(())
}

fn run_axioms(args: &AxiomsArgs) -> Result<()> {
    let kind: IndicatorKind = args.indicator.into();
    let definition = match args.definition {
        Some(Definition::Total) => ConsistencyKind::Total,
        Some(Definition::Average) => ConsistencyKind::Average,
        None => match kind {
            IndicatorKind::Tncs | IndicatorKind::BruteForce => ConsistencyKind::Total,
            IndicatorKind::Mncs | IndicatorKind::CppFcsm => ConsistencyKind::Average,
        },
    };
    let bounds = SearchBounds::new(
        args.max_cites,
        args.max_expected_numerator,
        args.expected_denominators.iter().copied(),
        args.max_set_size,
    )?;
    let rule = IndicatorFn::builtin(kind);
    println!(
        "checking {} consistency of {} (citations <= {}, expected <= {} over denominators {:?}, sets up to {} publications)",
        definition,
        kind.label(),
        bounds.max_cites(),
        bounds.max_expected_numerator(),
        bounds.expected_denominators().collect::<Vec<_>>(),
        bounds.max_set_size(),
    );
    match search_counterexample(&rule, &bounds, definition) {
        None => println!("no counterexample: {} is consistent within bounds", kind.label()),
        Some(witness) => {
            println!("counterexample found:");
            println!("{witness}");
        }
    }
    Ok(())
}
