//! `almg`: check, explore and enumerate autometrized lattice-ordered monoids.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use almg_core::models::{ModelSpec, DEFAULT_WINDOW};
use almg_core::search::{SearchSpec, DEFAULT_BUDGET, DEFAULT_LIMIT};
use clap::{Args, Parser, Subcommand};

use commands::Usage;
use report::ReportDocument;

#[derive(Parser)]
#[command(name = "almg", version, about = "Finite-model tools for autometrized lattice-ordered monoids")]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Leave timings out of the report.
    #[arg(long, global = true)]
    no_timing: bool,
    /// Worker threads (default: one per core). Output does not depend on it.
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms on an algebra file and classify it.
    Check {
        file: PathBuf,
        /// Axiom groups that must hold (default: the AL-monoid axioms).
        #[arg(long, value_delimiter = ',')]
        require: Option<Vec<String>>,
    },
    /// Run the geometry theorems, or evaluate one predicate.
    Geometry {
        file: PathBuf,
        /// NAME ARGS…, e.g. `M 0 2 1` or `fixty 1 2 3`. Names: M, L, fixty,
        /// subgeometry, b-linear, b-linear-lattice, d-linear.
        #[arg(long, num_args = 1.., value_name = "NAME ARGS", allow_hyphen_values = true)]
        predicate: Option<Vec<String>>,
    },
    /// Enumerate all AL-monoids of a given size up to isomorphism.
    Enumerate {
        #[command(flatten)]
        common: SearchFlags,
        /// Also run the theorem suite on every algebra found.
        #[arg(long)]
        suite: bool,
    },
    /// Search for algebras satisfying some axiom groups and violating others.
    Search {
        #[command(flatten)]
        common: SearchFlags,
        #[arg(long, value_delimiter = ',')]
        require: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        violate: Vec<String>,
        /// Collect every solution instead of stopping at the first.
        #[arg(long)]
        all: bool,
    },
    /// Closed subsets of the real line: demos `ex` and `fixty`, `axiom2 A B…`,
    /// and `union|meet|star A B` on literals like `[0,2]+[5/2,3]`.
    Intervals {
        name: String,
        #[arg(allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// Write a standard model in the algebra file format.
    Model {
        #[command(subcommand)]
        family: Family,
    },
}

#[derive(Args)]
struct SearchFlags {
    #[arg(long)]
    size: usize,
    /// Node-expansion cap.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Stop collecting after this many solutions.
    #[arg(long, default_value_t = DEFAULT_LIMIT)]
    limit: u64,
    /// Keep isomorphic copies apart.
    #[arg(long)]
    no_dedup: bool,
    /// Directory for the algebra files and summary.json.
    #[arg(long, value_name = "DIR")]
    out: Option<PathBuf>,
}

impl SearchFlags {
    fn apply(&self, spec: &mut SearchSpec) {
        spec.size = self.size;
        spec.budget = self.budget;
        spec.limit = self.limit;
        spec.dedup = !self.no_dedup;
    }
}

#[derive(Subcommand)]
enum Family {
    /// Subsets of a k-set.
    Boolean {
        #[arg(long)]
        k: usize,
    },
    /// The chain 0 < 1 < … < n−1.
    Chain {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "truncated")]
        mode: String,
    },
    /// Window of ℤ ∪ {u}.
    #[command(name = "z-u")]
    ZU {
        #[arg(long, default_value_t = DEFAULT_WINDOW)]
        window: usize,
        /// Place u below every integer.
        #[arg(long)]
        u_bottom: bool,
    },
    /// Window of ℤ ∪ {u, v}.
    #[command(name = "z-uv")]
    ZUv {
        #[arg(long, default_value_t = DEFAULT_WINDOW)]
        window: usize,
    },
    /// Closed unions of grid points and unit segments in [0, m].
    ClosedGrid {
        #[arg(long)]
        m: usize,
    },
    /// Componentwise product of factors like boolean:2, chain:3:max, grid:1.
    Product {
        #[arg(long = "factor", required = true)]
        factors: Vec<String>,
    },
}

fn model_spec(family: &Family) -> Result<ModelSpec, Usage> {
    Ok(match family {
        Family::Boolean { k } => ModelSpec::Boolean { k: *k },
        Family::Chain { n, mode } => ModelSpec::Chain { n: *n, mode: commands::parse_mode(mode)? },
        Family::ZU { window, u_bottom } => ModelSpec::ZWindowU { radius: *window, u_bottom: *u_bottom },
        Family::ZUv { window } => ModelSpec::ZWindowUv { radius: *window },
        Family::ClosedGrid { m } => ModelSpec::ClosedGrid { m: *m },
        Family::Product { factors } => ModelSpec::Product {
            factors: factors.iter().map(|f| commands::parse_factor(f)).collect::<Result<_, _>>()?,
        },
    })
}

enum Output {
    Report(ReportDocument),
    Text(String),
}

fn run(cli: &Cli) -> Result<Output, Usage> {
    Ok(match &cli.command {
        Command::Check { file, require } => Output::Report(commands::cmd_check(file, require.as_deref())?),
        Command::Geometry { file, predicate } => {
            Output::Report(commands::cmd_geometry(file, predicate.as_deref())?)
        }
        Command::Enumerate { common, suite } => {
            let mut spec = SearchSpec::al_monoids(common.size, common.budget);
            common.apply(&mut spec);
            let args = commands::SearchArgs { spec, out: common.out.as_deref(), suite: *suite };
            Output::Report(commands::cmd_search("enumerate", args)?)
        }
        Command::Search { common, require, violate, all } => {
            let mut spec = SearchSpec::new(common.size);
            common.apply(&mut spec);
            spec.require = commands::parse_axioms(require)?;
            spec.violate = commands::parse_axioms(violate)?;
            spec.all = *all;
            let args = commands::SearchArgs { spec, out: common.out.as_deref(), suite: false };
            Output::Report(commands::cmd_search("search", args)?)
        }
        Command::Intervals { name, args } => Output::Report(commands::cmd_intervals(name, args)?),
        Command::Model { family } => Output::Text(commands::model_text(&model_spec(family)?)?),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| run(&cli)),
            Err(e) => Err(format!("cannot start {n} threads: {e}")),
        },
        None => run(&cli),
    };
    match result {
        Ok(Output::Text(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Ok(Output::Report(mut doc)) => {
            if cli.no_timing {
                doc.timing = None;
            }
            if cli.json {
                print!("{}", doc.to_json());
            } else {
                print!("{}", doc.to_text());
            }
            if doc.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
