use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use mcpi::config::{OutputFormat, RunConfig};
use mcpi::input::{self, Diagnostic};
use mcpi::report::{self, ReportBundle};
use mcpi::{svg, DecisionMatrix, RatingRule};

const EXIT_VALIDATION: u8 = 2;
const EXIT_IO: u8 = 3;

/// Multicriteria composite performance intervals.
#[derive(Parser)]
#[command(name = "mcpi", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a data file against a config; prints `OK n=<rows> m=<indicators>`.
    Validate(Inputs),
    /// Per-indicator mean, sd, max, min and excess kurtosis.
    Describe {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long)]
        format: Option<OutputFormat>,
        /// Write `describe.csv` or `describe.json` here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dimension intervals, overall intervals and ratings.
    Compute {
        #[command(flatten)]
        inputs: Inputs,
        /// Also report overall intervals without this dimension.
        #[arg(long)]
        exclude: Option<String>,
        #[arg(long)]
        format: Option<OutputFormat>,
        #[arg(long, value_name = "minmax|maxfrac")]
        rating_rule: Option<RatingRule>,
        #[arg(long)]
        decimals: Option<u8>,
        /// Write one file per table (csv) or `report.json` here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Interval chart from a JSON report written by `compute --format json`.
    Plot {
        report: PathBuf,
        #[arg(long, default_value = "overall", value_parser = ["overall", "exclusion"])]
        table: String,
        #[arg(long, default_value = "MCPI")]
        title: String,
        /// Write `<table>.svg` here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Inputs {
    /// CSV data: `alternative` column followed by indicator columns.
    data: PathBuf,
    /// JSON config with `dimensions` and optional `options`.
    config: PathBuf,
}

enum Failure {
    Validation(Vec<Diagnostic>),
    Io(Diagnostic),
}

impl Failure {
    fn validation(err: &mcpi::Error) -> Self {
        Failure::Validation(vec![Diagnostic::from_error(err)])
    }
}

fn io_diag(code: &'static str, path: &Path, err: std::io::Error) -> Failure {
    Failure::Io(Diagnostic {
        code,
        file: Some(path.display().to_string()),
        line: None,
        column: None,
        message: err.to_string(),
    })
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| io_diag("UnreadableInput", path, e))
}

fn write(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| io_diag("UnwritableOutput", path, e))
}

fn write_in(dir: &Path, files: &[(String, String)]) -> Result<(), Failure> {
    fs::create_dir_all(dir).map_err(|e| io_diag("UnwritableOutput", dir, e))?;
    for (name, contents) in files {
        write(&dir.join(name), contents)?;
    }
    Ok(())
}

/// Reads and checks both inputs, reporting every defect found in either.
fn load(inputs: &Inputs) -> Result<(RunConfig, DecisionMatrix), Failure> {
    let config_text = read(&inputs.config)?;
    let data_text = read(&inputs.data)?;
    let config_name = inputs.config.display().to_string();
    let data_name = inputs.data.display().to_string();

    let config = RunConfig::check_json(&config_text).map_err(|errs| {
        errs.iter()
            .map(|e| Diagnostic::from_error(e).in_file(&config_name))
            .collect::<Vec<_>>()
    });
    let matrix = input::parse_matrix(&data_text);

    let mut diags = Vec::new();
    match (&config, &matrix) {
        (Ok(cfg), Ok(m)) => diags.extend(input::check_against(m, &cfg.schema)),
        _ => {
            if let Err(d) = &config {
                diags.extend(d.iter().cloned());
            }
        }
    }
    if let Err(d) = &matrix {
        diags.extend(d.iter().cloned());
    }
    for d in &mut diags {
        if d.file.is_none() {
            d.file = Some(data_name.clone());
        }
    }
    if !diags.is_empty() {
        return Err(Failure::Validation(diags));
    }
    Ok((config.ok().unwrap(), matrix.ok().unwrap()))
}

fn emit(
    bundle: &ReportBundle,
    format: OutputFormat,
    out: Option<&Path>,
    json_name: &str,
) -> Result<(), Failure> {
    match (format, out) {
        (OutputFormat::Csv, None) => print!("{}", bundle.to_csv_stream()),
        (OutputFormat::Json, None) => print!("{}", bundle.to_json()),
        (OutputFormat::Csv, Some(dir)) => {
            let files: Vec<_> = bundle
                .tables
                .iter()
                .map(|t| (format!("{}.csv", t.name), t.to_csv()))
                .collect();
            write_in(dir, &files)?;
        }
        (OutputFormat::Json, Some(dir)) => {
            write_in(dir, &[(json_name.to_string(), bundle.to_json())])?;
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Validate(inputs) => {
            let (_, matrix) = load(&inputs)?;
            println!("OK n={} m={}", matrix.rows(), matrix.cols());
        }
        Command::Describe {
            inputs,
            format,
            out,
        } => {
            let (cfg, matrix) = load(&inputs)?;
            let bundle = ReportBundle {
                tables: vec![report::describe_table(&matrix, &cfg.schema)],
                svg: None,
            };
            emit(
                &bundle,
                format.unwrap_or(cfg.options.format),
                out.as_deref(),
                "describe.json",
            )?;
        }
        Command::Compute {
            inputs,
            exclude,
            format,
            rating_rule,
            decimals,
            out,
        } => {
            let (mut cfg, matrix) = load(&inputs)?;
            if exclude.is_some() {
                cfg.options.exclude = exclude;
            }
            if let Some(f) = format {
                cfg.options.format = f;
            }
            if let Some(r) = rating_rule {
                cfg.options.rating_rule = r;
            }
            if let Some(d) = decimals {
                cfg.options.decimals = d;
            }
            cfg.validate_options()
                .map_err(|e| Failure::validation(&e))?;
            let bundle = report::compute(&cfg.schema, &matrix, &cfg.options)
                .map_err(|e| Failure::validation(&e))?;
            emit(&bundle, cfg.options.format, out.as_deref(), "report.json")?;
        }
        Command::Plot {
            report,
            table,
            title,
            out,
        } => {
            let text = read(&report)?;
            let name = report.display().to_string();
            let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| {
                Failure::Validation(vec![Diagnostic::from_error(&mcpi::Error::Parse(
                    e.to_string(),
                ))
                .in_file(&name)])
            })?;
            let rows = svg::rows_from_report(&value, &table).map_err(|e| {
                Failure::Validation(vec![Diagnostic::from_error(&e).in_file(&name)])
            })?;
            let chart = svg::render(&rows, &title);
            match out {
                Some(dir) => write_in(&dir, &[(format!("{table}.svg"), chart)])?,
                None => print!("{chart}"),
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Validation(diags)) => {
            for d in diags {
                eprintln!("{d}");
            }
            ExitCode::from(EXIT_VALIDATION)
        }
        Err(Failure::Io(d)) => {
            eprintln!("{d}");
            ExitCode::from(EXIT_IO)
        }
    }
}
