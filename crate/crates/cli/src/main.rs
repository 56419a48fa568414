use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod oeis;

/// Count, enumerate and draw fission trees.
#[derive(Parser)]
#[command(name = "fission", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a table of counts.
    Count {
        /// Phi, phi, psi, sigma, ext or ext-ss
        #[arg(long)]
        stat: fission::counting::Stat,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=2000))]
        k_max: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=2000))]
        n_max: u32,
        #[arg(long, value_enum, default_value_t = TableFormat::Md)]
        format: TableFormat,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List every tree of the given slope and rank, one per line.
    Enumerate {
        #[arg(long)]
        slope: u32,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        leaves: u64,
        /// Enumerate multiplicity trees instead of leaf-count trees.
        #[arg(long)]
        mult: bool,
        #[arg(long, value_enum, default_value_t = TreeFormat::Brackets)]
        format: TreeFormat,
    },
    /// Build the fission graph or Stokes quiver of a tree.
    Graph {
        /// Bracket text such as `[[2],[1,1]]`, or tree JSON with a view field.
        #[arg(long)]
        tree: String,
        #[arg(long, value_enum)]
        kind: GraphKind,
        /// Comma-separated leg lengths, one per vertex.
        #[arg(long, value_delimiter = ',')]
        legs: Option<Vec<u64>>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
    /// Split a supernova graph (JSON file) into core and legs.
    Core {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Run the built-in consistency checks.
    Verify {
        /// oracle, tables, closed-form, figures or all
        #[arg(long, default_value = "all")]
        suite: fission::verify::Suite,
        #[arg(long, default_value_t = 5)]
        k_max: usize,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
    },
    /// Compare a local statistic with an OEIS b-file.
    Oeis {
        #[arg(long)]
        id: fission::bfile::OeisId,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=2000))]
        terms: u32,
        /// Never touch the network; use the cache or bundled snapshots.
        #[arg(long)]
        offline: bool,
        #[arg(long, env = "FISSION_CACHE_DIR")]
        cache_dir: Option<PathBuf>,
        /// Report cache hits and network requests on stderr.
        #[arg(long)]
        trace: bool,
        #[arg(long, env = "FISSION_OEIS_URL", default_value = "https://oeis.org", hide = true)]
        base_url: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Md,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TreeFormat {
    Brackets,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphKind {
    Fission,
    Stokes,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Count { stat, k_max, n_max, format, out } => {
            commands::count(stat, k_max as usize, n_max as usize, format, out.as_deref())
        }
        Command::Enumerate { slope, leaves, mult, format } => commands::enumerate(slope as usize, leaves, mult, format),
        Command::Graph { tree, kind, legs, format } => commands::graph(&tree, kind, legs.as_deref(), format),
        Command::Core { graph } => commands::core(&graph),
        Command::Verify { suite, k_max, n_max } => commands::verify(suite, k_max, n_max),
        Command::Oeis { id, terms, offline, cache_dir, trace, base_url } => {
            let cache_dir = cache_dir.unwrap_or_else(oeis::default_cache_dir);
            let source = oeis::Source { base_url, cache_dir, offline, trace };
            commands::oeis(&id, terms as usize, &source)
        }
    };
    match result {
        Ok(commands::Status::Success) => ExitCode::SUCCESS,
        Ok(commands::Status::Mismatch) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}
