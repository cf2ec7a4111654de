use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use linkwidth_cli::commands::{self, GraphChoice};
use linkwidth_cli::envelope::error_object;
use linkwidth_cli::selfcheck::selfcheck;
use linkwidth_cli::{CliError, ReportEnvelope};
use linkwidth_core::{BoundConstants, LinkClass};

#[derive(Parser)]
#[command(
    name = "linkwidth",
    version,
    about = "Twist-region widths and spectral bounds for link diagrams"
)]
struct Cli {
    /// Input encoding.
    #[arg(long, value_enum, default_value_t = InputFormat::Pd, global = true)]
    format: InputFormat,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Pd,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    Alternating,
    HighlyTwisted,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphArg {
    Twist,
    Diagram,
}

impl From<GraphArg> for GraphChoice {
    fn from(g: GraphArg) -> Self {
        match g {
            GraphArg::Twist => GraphChoice::Twist,
            GraphArg::Diagram => GraphChoice::Diagram,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Crossings, twist regions and face statistics.
    Analyze { path: PathBuf },
    /// Twist-graph and lifted diagram orderings with their profiles.
    Order {
        path: PathBuf,
        /// Also compute the exact width of the twist graph (at most 20 vertices).
        #[arg(long)]
        exact: bool,
    },
    /// Width, Heegaard, Cheeger, eigenvalue and bridge bounds.
    Bounds {
        path: PathBuf,
        #[arg(long)]
        volume: Option<f64>,
        #[arg(long, value_enum)]
        class: Option<ClassArg>,
        /// Attest that the knot is not tangle-composite.
        #[arg(long)]
        tangle_prime: bool,
    },
    /// Planar separator of the twist or diagram graph.
    Separator {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = GraphArg::Twist)]
        graph: GraphArg,
    },
    /// Exact width against the separator construction.
    Oracle {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = GraphArg::Twist)]
        graph: GraphArg,
    },
    /// Exact isoperimetric number of the twist or diagram graph.
    CheegerGraph {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = GraphArg::Twist)]
        graph: GraphArg,
    },
    /// Seeded random diagram as a PD document.
    Gen {
        #[arg(long)]
        crossings: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Recompute all constants and run a seeded property suite.
    Selfcheck {
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn read(path: &Path) -> Result<Vec<u8>, CliError> {
    std::fs::read(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn run(command: Command) -> Result<(ReportEnvelope, u8), CliError> {
    let ok = |env| Ok((env, 0));
    match command {
        Command::Analyze { path } => ok(commands::analyze(&read(&path)?)?),
        Command::Order { path, exact } => ok(commands::order(&read(&path)?, exact)?),
        Command::Bounds {
            path,
            volume,
            class,
            tangle_prime,
        } => {
            let class = class.map(|c| match c {
                ClassArg::Alternating => LinkClass::Alternating,
                ClassArg::HighlyTwisted => LinkClass::HighlyTwisted,
            });
            ok(commands::bounds(
                &read(&path)?,
                volume,
                class,
                tangle_prime,
            )?)
        }
        Command::Separator { path, graph } => ok(commands::separator(&read(&path)?, graph.into())?),
        Command::Oracle { path, graph } => ok(commands::oracle(&read(&path)?, graph.into())?),
        Command::CheegerGraph { path, graph } => {
            ok(commands::cheeger_graph(&read(&path)?, graph.into())?)
        }
        Command::Gen { crossings, seed } => ok(commands::gen(crossings, seed)),
        Command::Selfcheck { seed } => {
            let (env, passed) = selfcheck(&BoundConstants::standard(), seed);
            Ok((env, if passed { 0 } else { 1 }))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let InputFormat::Pd = cli.format;
    match run(cli.command) {
        Ok((env, code)) => {
            let text = env.render();
            match &cli.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, &text) {
                        let msg = format!("cannot write {}: {e}", path.display());
                        print!("{}", error_object("Io", &msg));
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::from(code)
        }
        Err(e) => {
            print!("{}", error_object(e.kind(), &e.to_string()));
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
