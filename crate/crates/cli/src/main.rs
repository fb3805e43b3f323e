mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "sutcomb", version, about = "Sutured manifold combinatorics: slopes, norms, index, fat graphs, cobordisms")]
struct Cli {
    /// `records` prints one JSON record per line.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Seed for randomized families.
    #[arg(long, default_value_t = 1, global = true)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Records,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Distance between two slopes given as p/q.
    SlopeDelta {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Euler characteristic, Thurston norm and β-norm of a surface.
    Norm {
        /// Surface file with a `components` list.
        file: Option<PathBuf>,
        #[arg(long, conflicts_with = "file")]
        genus: Option<u32>,
        #[arg(long, default_value_t = 0)]
        boundary: u32,
        #[arg(long, default_value_t = 0)]
        punctures: u32,
    },
    /// Index of a parameterizing surface, with its conditions when sutured
    /// data is given.
    Index { file: PathBuf },
    /// Admissibility report of a fat graph.
    GraphCheck {
        file: PathBuf,
        /// Print the graph in dot language instead.
        #[arg(long)]
        dot: bool,
    },
    /// Scharlemann-cycle search on a Gabai disc graph.
    GraphScharlemann { file: PathBuf },
    /// First homology of a tube-compression cobordism.
    Cobordism {
        file: Option<PathBuf>,
        #[arg(long, conflicts_with = "file", requires_all = ["kind", "q", "alpha"])]
        genus: Option<u32>,
        #[arg(long, value_parser = ["sphere", "disc", "closed_genus_g", "bounded"])]
        kind: Option<String>,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        alpha: Option<u64>,
        /// Comma-separated class of ∂D on the surface basis.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        a: Vec<i64>,
    },
    /// Exhaustive or randomized verification runs.
    Verify {
        #[arg(value_enum)]
        family: Family,
        #[arg(long, default_value_t = 4)]
        max_v: u32,
        /// Defaults to 2, 3 and 4 for graph families, 2 and 3 for connectivity.
        #[arg(long)]
        mu: Option<u32>,
        /// Defaults to mu - 1.
        #[arg(long)]
        max_boundary: Option<u32>,
        /// Instances drawn for the connectivity family.
        #[arg(long, default_value_t = 2000)]
        instances: u64,
    },
    /// Surgery inequality and theorem conclusion for a scenario file.
    Scenario { file: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Scharlemann,
    Lambda,
    Connectivity,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = commands::Context { format: cli.format, seed: cli.seed };
    let result = match cli.command {
        Command::SlopeDelta { a, b } => commands::slope_delta(&ctx, &a, &b),
        Command::Norm { file, genus, boundary, punctures } => {
            commands::norm(&ctx, file.as_deref(), genus.map(|g| (g, boundary, punctures)))
        }
        Command::Index { file } => commands::index(&ctx, &file),
        Command::GraphCheck { file, dot } => commands::graph_check(&ctx, &file, dot),
        Command::GraphScharlemann { file } => commands::graph_scharlemann(&ctx, &file),
        Command::Cobordism { file, genus, kind, q, alpha, a } => {
            let inline = genus.map(|g| commands::InlineTube { genus: g, kind, q, alpha, a });
            commands::cobordism(&ctx, file.as_deref(), inline)
        }
        Command::Verify { family, max_v, mu, max_boundary, instances } => {
            commands::verify(&ctx, family, max_v, mu, max_boundary, instances)
        }
        Command::Scenario { file } => commands::scenario(&ctx, &file),
    };
    match result {
        Ok(out) => {
            print!("{}", out.stdout);
            if !out.stderr.is_empty() {
                eprint!("{}", out.stderr);
            }
            ExitCode::from(out.status)
        }
        Err(e) => {
            eprintln!("{}", e.message);
            ExitCode::from(e.status)
        }
    }
}
