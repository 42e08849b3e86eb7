//! Command-line surface for the arithmetic metric toolkit.
//!
//! Every subcommand is a thin shell over one library call. Output is
//! `plain` by default; `--format json` wraps every result in a
//! `{"command", "input", "result"}` envelope, `--format csv` serves the
//! tabular commands, and `--format dot` (or `hasse --dot`) emits Graphviz
//! text. Exit codes: 0 success, 1 invalid argument, 2 out of range.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use arith_metric::{
    big_omega, closed_ball, diameter_bruteforce, diameter_formula, dist, ext_dist, factor,
    omega_census, run_all, run_suite, xi, BkIndex, Error, ExtendedNumber, Factorizer, HasseGraph,
    SpfSieve,
};

#[derive(Parser)]
#[command(
    name = "arith-metric",
    version,
    about = "Tools for the arithmetic metric d(a,b) = Omega(lcm(a,b)) - Omega(gcd(a,b))"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,

    /// Pretty-print JSON output (minified by default).
    #[arg(long, global = true)]
    pretty: bool,

    /// Smallest-prime-factor sieve limit for bulk commands.
    #[arg(
        long,
        global = true,
        env = "ARITH_METRIC_SIEVE_LIMIT",
        default_value_t = Factorizer::DEFAULT_SIEVE_LIMIT
    )]
    sieve_limit: u64,

    /// Seed for the randomized verification suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Distance between two positive integers.
    Dist { a: u64, b: u64 },
    /// Prime factorization of n.
    Factor { n: u64 },
    /// Number of prime factors of n, counted with multiplicity.
    Omega { n: u64 },
    /// All y in [1, max] within distance r of x.
    Ball {
        x: u64,
        r: u64,
        /// Upper end of the scanned interval.
        #[arg(long)]
        max: u64,
    },
    /// Diameter of [1, n]: closed formula, or exhaustive scan with --brute.
    Diameter {
        n: u64,
        /// Scan all pairs and report a witness instead of using the formula.
        #[arg(long)]
        brute: bool,
    },
    /// Covering-relation graph on [1, n]: summary, edge list, or DOT text.
    Hasse {
        n: u64,
        /// Emit Graphviz DOT text (same as --format dot).
        #[arg(long)]
        dot: bool,
    },
    /// Count integers in [1, n] by prime-factor count, against the
    /// asymptotic estimate.
    Census {
        n: u64,
        /// Largest prime-factor count to report (default: largest observed).
        #[arg(long)]
        kmax: Option<u64>,
    },
    /// Largest k with p^k <= s.
    Xi { p: u64, s: u64 },
    /// The k corpus values nearest to x.
    Nn {
        x: u64,
        k: usize,
        /// Newline-delimited integer file to index.
        #[arg(long)]
        corpus: PathBuf,
    },
    /// Corpus values within distance r of x.
    Range {
        x: u64,
        r: u64,
        /// Newline-delimited integer file to index.
        #[arg(long)]
        corpus: PathBuf,
    },
    /// Distance between two extended numbers; literals are `n`, `num/den`,
    /// or `root(k, num/den)`.
    ExtDist { x: String, y: String },
    /// Run the self-verification suites.
    Verify {
        /// Run a single suite by name (default: all suites).
        #[arg(long)]
        suite: Option<String>,
    },
}

/// Everything a subcommand can say, rendered per format on demand. `csv`
/// and `dot` are `None` for commands without a sensible such form.
struct Outcome {
    command: &'static str,
    input: Value,
    result: Value,
    plain: String,
    csv: Option<String>,
    dot: Option<String>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // clap's own convention is exit 2 for usage errors; this tool
            // reserves 2 for out-of-range, so usage problems map to 1
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            let code = match err {
                Error::OutOfRange(_) => 2,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}

/// A factorization engine sized for the command: never beyond the
/// configured limit, never larger than the command needs.
fn engine(limit: u64, needed: u64) -> Result<Factorizer, Error> {
    Factorizer::with_limit(limit.min(needed).max(2))
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

fn load_corpus(path: &PathBuf) -> Result<Vec<u64>, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| invalid(format!("cannot read corpus {}: {e}", path.display())))?;
    let mut values = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let v: u64 = line.parse().map_err(|_| {
            invalid(format!(
                "corpus {} line {}: `{line}` is not a non-negative integer",
                path.display(),
                i + 1
            ))
        })?;
        values.push(v);
    }
    Ok(values)
}

fn float_value(x: Option<f64>) -> Value {
    x.and_then(serde_json::Number::from_f64)
        .map(Value::Number)
        .unwrap_or(Value::Null)
}

fn run(cli: Cli) -> Result<u8, Error> {
    let mut format = cli.format;
    let outcome = match cli.command {
        Command::Dist { a, b } => {
            let d = dist(a, b)?;
            Outcome {
                command: "dist",
                input: json!({"a": a, "b": b}),
                result: json!(d),
                plain: d.to_string(),
                csv: Some(d.to_string()),
                dot: None,
            }
        }
        Command::Factor { n } => {
            let f = factor(n)?;
            let pairs: Vec<Value> = f.entries().iter().map(|&(p, e)| json!([p, e])).collect();
            let csv = std::iter::once("prime,exponent".to_string())
                .chain(f.entries().iter().map(|&(p, e)| format!("{p},{e}")))
                .collect::<Vec<_>>()
                .join("\n");
            Outcome {
                command: "factor",
                input: json!({"n": n}),
                result: Value::Array(pairs),
                plain: f.to_string(),
                csv: Some(csv),
                dot: None,
            }
        }
        Command::Omega { n } => {
            let w = big_omega(n)?;
            Outcome {
                command: "omega",
                input: json!({"n": n}),
                result: json!(w),
                plain: w.to_string(),
                csv: Some(w.to_string()),
                dot: None,
            }
        }
        Command::Ball { x, r, max } => {
            let factorizer = engine(cli.sieve_limit, max)?;
            let ball = closed_ball(x, r, max, &factorizer)?;
            let plain = ball
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(" ");
            let csv = ball
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join("\n");
            Outcome {
                command: "ball",
                input: json!({"x": x, "r": r, "max": max}),
                result: json!(ball),
                plain,
                csv: Some(csv),
                dot: None,
            }
        }
        Command::Diameter { n, brute } => {
            if brute {
                let w = diameter_bruteforce(n)?;
                Outcome {
                    command: "diameter",
                    input: json!({"n": n, "brute": true}),
                    result: json!({"diameter": w.diameter, "witness": [w.pair.0, w.pair.1]}),
                    plain: format!("{} ({}, {})", w.diameter, w.pair.0, w.pair.1),
                    csv: Some(format!("diameter,a,b\n{},{},{}", w.diameter, w.pair.0, w.pair.1)),
                    dot: None,
                }
            } else {
                let d = diameter_formula(n)?;
                Outcome {
                    command: "diameter",
                    input: json!({"n": n, "brute": false}),
                    result: json!({"diameter": d}),
                    plain: d.to_string(),
                    csv: Some(d.to_string()),
                    dot: None,
                }
            }
        }
        Command::Hasse { n, dot } => {
            if dot {
                format = Format::Dot;
            }
            let sieve = SpfSieve::build(n.clamp(2, HasseGraph::DEFAULT_CAP))?;
            let graph = HasseGraph::build(n, &sieve)?;
            let csv = std::iter::once("a,b".to_string())
                .chain(graph.edges().map(|(a, b)| format!("{a},{b}")))
                .collect::<Vec<_>>()
                .join("\n");
            Outcome {
                command: "hasse",
                input: json!({"n": n}),
                result: json!({"vertices": graph.vertex_count(), "edges": graph.edge_count()}),
                plain: format!(
                    "{} vertices, {} edges",
                    graph.vertex_count(),
                    graph.edge_count()
                ),
                csv: Some(csv),
                dot: Some(graph.to_dot()),
            }
        }
        Command::Census { n, kmax } => {
            let factorizer = engine(cli.sieve_limit, n)?;
            let census = omega_census(n, &factorizer)?;
            let kmax = kmax.unwrap_or(census.counts().len() as u64 - 1);
            let rows = census.rows(kmax);
            let result: Vec<Value> = rows
                .iter()
                .map(|row| {
                    json!({
                        "k": row.k,
                        "count": row.count,
                        "estimate": float_value(row.estimate),
                        "ratio": float_value(row.ratio),
                    })
                })
                .collect();
            let csv = std::iter::once("k,count,estimate,ratio".to_string())
                .chain(rows.iter().map(|row| {
                    format!(
                        "{},{},{},{}",
                        row.k,
                        row.count,
                        row.estimate.map(|e| e.to_string()).unwrap_or_default(),
                        row.ratio.map(|r| r.to_string()).unwrap_or_default(),
                    )
                }))
                .collect::<Vec<_>>()
                .join("\n");
            Outcome {
                command: "census",
                input: json!({"n": n, "kmax": kmax}),
                result: Value::Array(result),
                plain: csv.clone(),
                csv: Some(csv),
                dot: None,
            }
        }
        Command::Xi { p, s } => {
            let k = xi(p, s)?;
            Outcome {
                command: "xi",
                input: json!({"p": p, "s": s}),
                result: json!(k),
                plain: k.to_string(),
                csv: Some(k.to_string()),
                dot: None,
            }
        }
        Command::Nn { x, k, corpus } => {
            let index = BkIndex::from_values(load_corpus(&corpus)?)?;
            let hits = index.nearest(x, k)?;
            let plain = hits
                .iter()
                .map(|(v, d)| format!("{v} {d}"))
                .collect::<Vec<_>>()
                .join("\n");
            let csv = std::iter::once("value,distance".to_string())
                .chain(hits.iter().map(|(v, d)| format!("{v},{d}")))
                .collect::<Vec<_>>()
                .join("\n");
            Outcome {
                command: "nn",
                input: json!({"x": x, "k": k, "corpus": corpus.display().to_string()}),
                result: json!(hits.iter().map(|&(v, d)| json!([v, d])).collect::<Vec<_>>()),
                plain,
                csv: Some(csv),
                dot: None,
            }
        }
        Command::Range { x, r, corpus } => {
            let index = BkIndex::from_values(load_corpus(&corpus)?)?;
            let hits = index.range(x, r)?;
            let plain = hits
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(" ");
            let csv = hits
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join("\n");
            Outcome {
                command: "range",
                input: json!({"x": x, "r": r, "corpus": corpus.display().to_string()}),
                result: json!(hits),
                plain,
                csv: Some(csv),
                dot: None,
            }
        }
        Command::ExtDist { x, y } => {
            let parsed_x: ExtendedNumber = x.parse()?;
            let parsed_y: ExtendedNumber = y.parse()?;
            let d = ext_dist(&parsed_x, &parsed_y)?;
            Outcome {
                command: "ext-dist",
                input: json!({"x": x, "y": y}),
                result: json!(d.to_string()),
                plain: d.to_string(),
                csv: Some(d.to_string()),
                dot: None,
            }
        }
        Command::Verify { suite } => {
            // the heaviest suite scans [1, 10^6]
            let factorizer = engine(cli.sieve_limit, 1_000_000)?;
            let reports = match &suite {
                Some(name) => vec![run_suite(name, &factorizer, cli.seed)?],
                None => run_all(&factorizer, cli.seed)?,
            };
            let passed = reports.iter().filter(|r| r.passed()).count();
            let mut lines = Vec::new();
            for report in &reports {
                if report.passed() {
                    lines.push(format!("ok   {}: {} checks", report.name, report.checks));
                } else {
                    lines.push(format!(
                        "FAIL {}: {}/{} checks failed",
                        report.name, report.failures, report.checks
                    ));
                    for sample in &report.samples {
                        lines.push(format!("     {sample}"));
                    }
                }
            }
            lines.push(format!("{passed}/{} suites passed", reports.len()));
            let result: Vec<Value> = reports
                .iter()
                .map(|r| {
                    json!({
                        "suite": r.name,
                        "checks": r.checks,
                        "failures": r.failures,
                        "samples": r.samples,
                    })
                })
                .collect();
            let csv = std::iter::once("suite,checks,failures".to_string())
                .chain(
                    reports
                        .iter()
                        .map(|r| format!("{},{},{}", r.name, r.checks, r.failures)),
                )
                .collect::<Vec<_>>()
                .join("\n");
            let all_passed = passed == reports.len();
            let outcome = Outcome {
                command: "verify",
                input: json!({"suite": suite, "seed": cli.seed}),
                result: Value::Array(result),
                plain: lines.join("\n"),
                csv: Some(csv),
                dot: None,
            };
            emit(outcome, format, cli.pretty)?;
            return Ok(if all_passed { 0 } else { 1 });
        }
    };
    emit(outcome, format, cli.pretty)?;
    Ok(0)
}

fn emit(outcome: Outcome, format: Format, pretty: bool) -> Result<(), Error> {
    match format {
        Format::Plain => println!("{}", outcome.plain),
        Format::Json => {
            let envelope = json!({
                "command": outcome.command,
                "input": outcome.input,
                "result": outcome.result,
            });
            if pretty {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&envelope)
                        .map_err(|e| Error::Internal(e.to_string()))?
                );
            } else {
                println!("{envelope}");
            }
        }
        Format::Csv => match outcome.csv {
            Some(csv) => println!("{csv}"),
            None => {
                return Err(invalid(format!(
                    "csv output is not defined for `{}`",
                    outcome.command
                )))
            }
        },
        Format::Dot => match outcome.dot {
            Some(dot) => print!("{dot}"),
            None => {
                return Err(invalid(format!(
                    "dot output is not defined for `{}`",
                    outcome.command
                )))
            }
        },
    }
    Ok(())
}
