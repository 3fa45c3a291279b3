use std::process::ExitCode;

use clap::Parser;
use knotclover::laurent::FactorConfig;
use knotclover::obstruct::SearchBounds;
use knotclover_cli::{parse_batch, read_input, render_text, run_batch, run_job, Command, JobOutcome, Options};

/// Exact Alexander-polynomial, clover and wheel analyses.
///
/// INPUT is inline JSON, a path to a JSON file, or `-` for stdin.
/// Exit status: 0 on any completed analysis, 2 on invalid input,
/// 3 when a resource limit was hit.
#[derive(Parser, Debug)]
#[command(name = "knotclover", version)]
struct Cli {
    /// Emit structured JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Witness search bounds `max_factors,max_k,max_n`.
    #[arg(long, global = true, value_parser = parse_bounds)]
    bounds: Option<SearchBounds>,

    /// Largest degree span accepted by the factorizer.
    #[arg(long, global = true)]
    degree_limit: Option<usize>,

    /// JSON array of `{"command": ..., "input": ...}` jobs.
    #[arg(long, conflicts_with_all = ["command", "input"])]
    batch: Option<String>,

    #[arg(value_enum, required_unless_present = "batch")]
    command: Option<Command>,

    #[arg(required_unless_present = "batch")]
    input: Option<String>,
}

fn parse_bounds(s: &str) -> Result<SearchBounds, String> {
    s.parse().map_err(|e: knotclover::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut opts = Options::default();
    if let Some(b) = cli.bounds {
        opts.bounds = b;
    }
    if let Some(limit) = cli.degree_limit {
        opts.factor = FactorConfig::with_degree_limit(limit);
    }

    let outcomes: Vec<JobOutcome> = match &cli.batch {
        Some(path) => match read_input(path).and_then(parse_batch) {
            Ok(jobs) => run_batch(jobs, &opts),
            Err(e) => vec![Err(e).into()],
        },
        None => {
            let (command, input) = (cli.command.unwrap(), cli.input.unwrap());
            vec![read_input(&input).and_then(|v| run_job(command, v, &opts)).into()]
        }
    };

    let mut code = 0;
    if cli.json {
        let doc = if cli.batch.is_some() {
            serde_json::to_string_pretty(&outcomes)
        } else {
            serde_json::to_string_pretty(&outcomes[0])
        };
        println!("{}", doc.expect("reports serialize"));
    }
    for (i, o) in outcomes.iter().enumerate() {
        match o {
            JobOutcome::Ok(report) => {
                if !cli.json {
                    if cli.batch.is_some() {
                        println!("# job {i}");
                    }
                    print!("{}", render_text(report));
                }
            }
            JobOutcome::Error { code: c, message } => {
                if cli.batch.is_some() {
                    eprintln!("job {i}: {message}");
                } else {
                    eprintln!("error: {message}");
                }
                code = code.max(*c);
            }
        }
    }
    ExitCode::from(code as u8)
}
