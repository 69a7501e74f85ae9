use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use elias_cli::corpus::{self, parse_corpus, run_corpus};
use elias_cli::parse::{parse_ideal, parse_ring, Ring};
use elias_cli::report::{self, expected_value, lookup, SearchOptions};
use elias_cli::{exit, CliError};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "elias", version, about = "Elias ideals of semigroup and axis rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Search {
    /// Largest power of m to search.
    #[arg(long)]
    smax: Option<u32>,
    /// Random combinations tried per power, after the generators of m.
    #[arg(long, default_value_t = 32)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Truncation N of the series model.
    #[arg(long)]
    truncation: Option<i64>,
}

impl From<Search> for SearchOptions {
    fn from(s: Search) -> Self {
        SearchOptions {
            s_max: s.smax,
            trials: s.trials,
            seed: s.seed,
            truncation: s.truncation,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of a ring: `g1,g2,...` or `axis:n`.
    Info {
        ring: String,
        #[arg(long)]
        json: bool,
    },
    /// Criteria report for an ideal.
    Check {
        ring: String,
        ideal: String,
        #[arg(long)]
        json: bool,
        /// `path=value` assertion on the JSON report; exit 1 on mismatch.
        #[arg(long = "expect", value_name = "KEY=VALUE")]
        expect: Vec<String>,
        /// Random trials for the randomized gll bound (0 skips it).
        #[arg(long, default_value_t = 0)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        truncation: Option<i64>,
    },
    /// Elias, Ulrich and generalized Loewy indices.
    Indices {
        ring: String,
        #[command(flatten)]
        search: Search,
        #[arg(long)]
        json: bool,
    },
    /// Randomized search for principal ideals containing m^s.
    Gll {
        ring: String,
        #[command(flatten)]
        search: Search,
        #[arg(long)]
        json: bool,
    },
    /// Run a regression corpus (the bundled one by default).
    Corpus {
        path: Option<PathBuf>,
        /// Only run cases whose name contains this string.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// A failure and the input it points into, if any.
struct Failure {
    error: CliError,
    source: Option<String>,
}

impl From<CliError> for Failure {
    fn from(error: CliError) -> Self {
        Failure {
            error,
            source: None,
        }
    }
}

fn ring_arg(src: &str) -> Result<Ring, Failure> {
    parse_ring(src).map_err(|error| Failure {
        error,
        source: Some(src.to_string()),
    })
}

fn emit<T: Serialize>(json: bool, value: &T, text: impl FnOnce() -> String) {
    if json {
        println!("{}", serde_json::to_string_pretty(value).expect("reports serialize"));
    } else {
        print!("{}", text());
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Info { ring, json } => {
            let ring = ring_arg(&ring)?;
            let info = report::info(&ring)?;
            emit(json, &info, || report::render_info(&ring, &info));
            Ok(exit::OK)
        }
        Command::Check {
            ring,
            ideal,
            json,
            expect,
            trials,
            seed,
            truncation,
        } => {
            let ring = ring_arg(&ring)?;
            let expr = parse_ideal(&ideal, &ring).map_err(|e| Failure {
                error: e.into(),
                source: Some(ideal.clone()),
            })?;
            let options = SearchOptions {
                s_max: None,
                trials,
                seed,
                truncation,
            };
            let check = report::check(&ring, &expr, &options)?;
            emit(json, &check, || report::render_check(&check));
            let doc = serde_json::to_value(&check).expect("reports serialize");
            let mut code = exit::OK;
            for e in &expect {
                let Some((key, value)) = e.split_once('=') else {
                    return Err(CliError::Unsupported(format!("--expect '{e}' is not key=value")).into());
                };
                let expected = expected_value(value.trim());
                match lookup(&doc, key.trim()) {
                    Some(actual) if *actual == expected => {}
                    actual => {
                        let shown = actual.map_or("<missing>".to_string(), |a| a.to_string());
                        eprintln!("expectation failed: {key} expected {expected}, got {shown}");
                        code = exit::MISMATCH;
                    }
                }
            }
            Ok(code)
        }
        Command::Indices { ring, search, json } => {
            let ring = ring_arg(&ring)?;
            let idx = report::indices(&ring, &search.into())?;
            emit(json, &idx, || report::render_indices(&ring, &idx));
            Ok(exit::OK)
        }
        Command::Gll { ring, search, json } => {
            let ring = ring_arg(&ring)?;
            let rows = report::gll(&ring, &search.into())?;
            emit(json, &rows, || report::render_gll(&rows));
            Ok(exit::OK)
        }
        Command::Corpus {
            path,
            filter,
            jobs,
            seed,
        } => {
            let text = match &path {
                Some(p) => std::fs::read_to_string(p).map_err(CliError::from)?,
                None => corpus::BUNDLED.to_string(),
            };
            let cases: Vec<_> = parse_corpus(&text)?
                .into_iter()
                .filter(|c| filter.as_deref().is_none_or(|f| c.name.contains(f)))
                .collect();
            let outcomes = run_corpus(&cases, jobs, seed);
            let mut failed = 0;
            for o in &outcomes {
                if o.passed() {
                    println!("ok    {} ({} checks)", o.name, o.checked);
                } else {
                    failed += 1;
                    println!("FAIL  {}", o.name);
                    for f in &o.failures {
                        println!("  {}", f.replace('\n', "\n  "));
                    }
                }
            }
            println!("{} cases, {} passed, {failed} failed", outcomes.len(), outcomes.len() - failed);
            Ok(if failed == 0 { exit::OK } else { exit::MISMATCH })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure { error, source }) => {
            match (&error, source) {
                (CliError::Parse(p), Some(src)) => eprintln!("error: {}\n{}", p, p.render(&src)),
                _ => eprintln!("error: {error}"),
            }
            ExitCode::from(exit::USAGE)
        }
    }
}
