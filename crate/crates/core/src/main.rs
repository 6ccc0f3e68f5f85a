use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cleft_core::catalog::{LambdaMode, SchemeTag};
use cleft_core::report::Report;
use cleft_core::run::{default_grid, describe_catalog, describe_resolution, run, run_torsor, GridPoint, SuiteConfig, TorsorConfig};
use cleft_core::suites::{Bounds, Suite};
use cleft_core::{Error, Result};

#[derive(Parser)]
#[command(name = "cleft", version, about = "Exact checks for unit group schemes, their resolutions and torsors over F_p")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run suites at one (p, n, λ)
    Run {
        #[command(flatten)]
        point: PointArgs,
        /// Comma-separated suites (default: all)
        #[arg(long, value_delimiter = ',')]
        suite: Vec<Suite>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run suites over (2,1), (3,1), (2,2) and λ ∈ {sym, 0, 1}
    Grid {
        #[arg(long, value_delimiter = ',')]
        suite: Vec<Suite>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Torsor checks and the bounded cleft search for given parameters
    Torsor {
        #[arg(long, default_value_t = 2)]
        p: u32,
        /// Base variables of R
        #[arg(long, value_delimiter = ',', default_value = "X,Y")]
        vars: Vec<String>,
        /// Designated denominator of R (repeatable)
        #[arg(long)]
        invert: Vec<String>,
        #[arg(long, default_value = "1")]
        lambda: String,
        #[arg(long, default_value = "1")]
        a: String,
        /// Omit for the full torsor only
        #[arg(long)]
        c: Option<String>,
        /// Use the built-in non-cleft example instead of --vars/--invert/--lambda/--a/--c
        #[arg(long)]
        example: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Print Hopf presentations of the catalog schemes
    Catalog {
        #[command(flatten)]
        point: PointArgs,
        /// Ga, Gm, Mu, GLambda or GammaLambda (default: all)
        #[arg(long)]
        scheme: Option<SchemeTag>,
    },
    /// Print the P table and coinvariant generators
    Resolve {
        #[command(flatten)]
        point: PointArgs,
    },
}

#[derive(Args)]
struct PointArgs {
    #[arg(long, default_value_t = 2)]
    p: u32,
    #[arg(long, default_value_t = 1)]
    n: u32,
    /// `sym` or a residue mod p
    #[arg(long, default_value = "sym")]
    lambda: LambdaMode,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, default_value_t = Bounds::default().k_max)]
    kmax: u32,
    #[arg(long, default_value_t = Bounds::default().degree_bound)]
    search_degree: u32,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Lift the p^n ≤ 9 guard
    #[arg(long)]
    allow_large: bool,
    /// Record per-suite elapsed time (breaks byte determinism)
    #[arg(long)]
    timings: bool,
}

impl OutputArgs {
    fn bounds(&self) -> Bounds {
        Bounds { k_max: self.kmax, degree_bound: self.search_degree }
    }

    fn emit(&self, report: &Report) -> Result<ExitCode> {
        let text = match self.format {
            Format::Json => report.to_json(),
            Format::Text => report.to_text(),
        };
        match &self.out {
            Some(path) => std::fs::write(path, text).map_err(|e| Error::ConfigInvalid(format!("{}: {e}", path.display())))?,
            None => print!("{text}"),
        }
        Ok(if report.success() { ExitCode::SUCCESS } else { ExitCode::from(1) })
    }
}

fn suites_or_all(s: Vec<Suite>) -> Vec<Suite> {
    let mut s = if s.is_empty() { Suite::ALL.to_vec() } else { s };
    s.sort();
    s.dedup();
    s
}

fn grid_config(points: Vec<GridPoint>, suites: Vec<Suite>, out: &OutputArgs) -> SuiteConfig {
    let mut c = SuiteConfig::new(points, suites_or_all(suites));
    c.bounds = out.bounds();
    c.allow_large = out.allow_large;
    c.timings = out.timings;
    c
}

fn dispatch(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Run { point, suite, out } => {
            let pt = GridPoint { p: point.p, n: point.n, lambda: point.lambda };
            out.emit(&run(&grid_config(vec![pt], suite, &out))?)
        }
        Command::Grid { suite, out } => out.emit(&run(&grid_config(default_grid(), suite, &out))?),
        Command::Torsor { p, vars, invert, lambda, a, c, example, out } => {
            let config = if example {
                TorsorConfig::example(p, out.bounds())
            } else {
                TorsorConfig { p, vars, invert, lambda, a, c, bounds: out.bounds() }
            };
            out.emit(&run_torsor(&config)?)
        }
        Command::Catalog { point, scheme } => {
            print!("{}", describe_catalog(point.p, point.n, point.lambda, scheme)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Resolve { point } => {
            print!("{}", describe_resolution(point.p, point.n, point.lambda)?);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    if let Ok(t) = std::env::var("CLEFT_THREADS") {
        match t.parse::<usize>() {
            Ok(n) if n > 0 => {
                rayon::ThreadPoolBuilder::new().num_threads(n).build_global().expect("thread pool builds once");
            }
            _ => {
                eprintln!("error: CLEFT_THREADS must be a positive integer");
                return ExitCode::from(2);
            }
        }
    }
    match dispatch(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
