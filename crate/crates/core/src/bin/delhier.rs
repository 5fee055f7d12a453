use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use delaunay_hierarchy::bench::{emit_csv, run_bench, BenchOptions, BenchReport, Method};
use delaunay_hierarchy::costmodel;
use delaunay_hierarchy::datasets::{generate, read_points, write_points, DatasetKind, DatasetSpec};
use delaunay_hierarchy::{Error, Hierarchy, Phase3Mode, Point};

#[derive(Parser)]
#[command(
    name = "delhier",
    version,
    about = "Delaunay hierarchy benchmarks and tools"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build structures and report predicate counters as CSV.
    Bench(BenchArgs),
    /// Write a dataset as `x y` lines.
    Generate(GenerateArgs),
    /// Print the analytic cost curves as CSV.
    Costmodel(CostArgs),
    /// Build from points and check every level; exits 1 on any violation.
    Validate(ValidateArgs),
}

#[derive(Args)]
struct Input {
    /// Point distribution.
    #[arg(long, default_value = "random")]
    dist: DatasetKind,
    /// Number of generated points.
    #[arg(long, default_value_t = 5000)]
    n: usize,
    /// Seed for the dataset, level draws and sampling.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Read points from a file instead of generating them.
    #[arg(long)]
    points: Option<PathBuf>,
}

impl Input {
    fn load(&self) -> Result<(String, Vec<Point>), Error> {
        match &self.points {
            Some(path) => {
                let name = path
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_else(|| "file".into());
                Ok((name, read_points(BufReader::new(File::open(path)?))?))
            }
            None => Ok((
                self.dist.to_string(),
                generate(&DatasetSpec::new(self.dist, self.n, self.seed)),
            )),
        }
    }
}

#[derive(Args)]
struct BenchArgs {
    #[command(flatten)]
    input: Input,
    /// Location strategy; repeat the flag to compare several.
    #[arg(long, default_value = "hierarchy-msz")]
    method: Vec<Method>,
    #[arg(long, default_value_t = 30.0)]
    alpha: f64,
    #[arg(long, default_value_t = 1.0)]
    beta: f64,
    /// Insert in a seeded random order.
    #[arg(long)]
    shuffle: bool,
    /// Timed builds per method.
    #[arg(long, default_value_t = 1)]
    repeats: usize,
    /// Random queries located after each build.
    #[arg(long, default_value_t = 0)]
    queries: usize,
    /// Exact nearest vertex on every level.
    #[arg(long)]
    exact: bool,
    /// Give up on a build after this many seconds.
    #[arg(long)]
    timeout: Option<f64>,
    /// Write the CSV here instead of stdout.
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, default_value = "random")]
    dist: DatasetKind,
    #[arg(long, default_value_t = 5000)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file; stdout if absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CostArgs {
    #[arg(long, default_value_t = 30.0)]
    alpha: f64,
    #[arg(long, default_value_t = 1.0)]
    beta: f64,
    /// Largest total level count tabulated.
    #[arg(long, default_value_t = 3)]
    levels: u32,
    /// Sizes, comma separated; 1 to 10^7 in 1-2-5 steps if absent.
    #[arg(long, value_delimiter = ',')]
    n: Vec<u64>,
}

#[derive(Args)]
struct ValidateArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long, default_value = "hierarchy-msz")]
    method: Method,
    #[arg(long, default_value_t = 30.0)]
    alpha: f64,
    /// Also test every triangle against every site (quadratic).
    #[arg(long)]
    exhaustive: bool,
}

fn output(path: Option<&Path>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn bench(args: BenchArgs) -> Result<ExitCode, Error> {
    let (name, points) = args.input.load()?;
    let mut report = BenchReport::default();
    let mut code = ExitCode::SUCCESS;
    for &method in &args.method {
        let opts = BenchOptions {
            method,
            alpha: args.alpha,
            beta: args.beta,
            seed: args.input.seed,
            shuffle: args.shuffle,
            repeats: args.repeats,
            queries: args.queries,
            phase3_mode: if args.exact {
                Phase3Mode::Exact
            } else {
                Phase3Mode::Modified
            },
            time_limit: args.timeout.map(Duration::from_secs_f64),
        };
        match run_bench(&name, &points, &opts) {
            Ok(row) => {
                if !row.valid {
                    eprintln!("{name} {method}: level 0 failed validation");
                    code = ExitCode::FAILURE;
                }
                report.rows.push(row);
            }
            Err(Error::TimeLimit(limit)) => {
                eprintln!(
                    "{name} {method}: long (over {:.1}s), skipped",
                    limit.as_secs_f64()
                );
            }
            Err(e) => return Err(e),
        }
    }
    let mut out = output(args.csv.as_deref())?;
    out.write_all(emit_csv(&report).as_bytes())?;
    out.flush()?;
    Ok(code)
}

fn cost(args: CostArgs) -> Result<ExitCode, Error> {
    if !(args.alpha > 1.0) || !(args.beta > 0.0) {
        return Err(Error::InvalidConfig(
            "alpha must exceed 1 and beta be positive".into(),
        ));
    }
    let ns = if args.n.is_empty() {
        let mut ns = Vec::new();
        let mut decade = 1u64;
        while decade <= 10_000_000 {
            ns.extend([decade, 2 * decade, 5 * decade]);
            decade *= 10;
        }
        ns.retain(|&n| n <= 10_000_000);
        ns
    } else {
        args.n
    };
    let mut out = output(None)?;
    out.write_all(costmodel::table(&ns, args.alpha, args.beta, args.levels).as_bytes())?;
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn validate(args: ValidateArgs) -> Result<ExitCode, Error> {
    let (name, points) = args.input.load()?;
    let mut h = Hierarchy::new(args.method.config(args.alpha, 1.0, args.input.seed))?;
    for p in points {
        h.insert(p)?;
    }
    let mut problems = h.validate();
    if args.exhaustive {
        for (i, t) in h.levels().iter().enumerate() {
            problems.extend(
                t.validate_exhaustive()
                    .into_iter()
                    .map(|v| (Some(i), v.to_string())),
            );
        }
        problems.sort();
        problems.dedup();
    }
    if problems.is_empty() {
        println!(
            "{name}: {} sites, levels {:?}, ok",
            h.len(),
            h.level_sizes()
        );
        return Ok(ExitCode::SUCCESS);
    }
    for (level, msg) in &problems {
        match level {
            Some(l) => eprintln!("level {l}: {msg}"),
            None => eprintln!("{msg}"),
        }
    }
    eprintln!("{name}: {} violations", problems.len());
    Ok(ExitCode::FAILURE)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Bench(a) => bench(a),
        Command::Generate(a) => (|| {
            let pts = generate(&DatasetSpec::new(a.dist, a.n, a.seed));
            write_points(output(a.out.as_deref())?, &pts)?;
            Ok(ExitCode::SUCCESS)
        })(),
        Command::Costmodel(a) => cost(a),
        Command::Validate(a) => validate(a),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        ExitCode::from(2)
    })
}
