use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use spantree_core::graphs::{MultipartiteSpec, Partition, ThresholdSpec};
use spantree_core::Route;

use crate::{Command, JobSpec, Source};

#[derive(Debug, Parser)]
#[command(name = "spantree", version, about = "Exact weighted spanning tree enumerators")]
struct Cli {
    #[command(subcommand)]
    command: CommandArgs,
}

#[derive(Debug, Subcommand)]
enum CommandArgs {
    /// Print the spanning tree enumerator as a canonical polynomial.
    Enumerate {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, value_parser = parse_route)]
        route: Option<Route>,
    },
    /// Print the number of spanning trees.
    Count {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, value_parser = parse_route)]
        route: Option<Route>,
    },
    /// Run every applicable route and compare the results pairwise.
    Verify {
        #[command(flatten)]
        source: SourceArgs,
    },
    /// Print the wall time of every applicable route.
    Bench {
        #[command(flatten)]
        source: SourceArgs,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct SourceArgs {
    /// Complete graph K_n.
    #[arg(long, value_name = "N")]
    complete: Option<usize>,
    /// Complete multipartite graph with the given part sizes.
    #[arg(long, value_name = "N1,N2,...")]
    multipartite: Option<MultipartiteSpec>,
    /// Ferrers graph of a partition.
    #[arg(long, value_name = "L1,L2,...")]
    ferrers: Option<Partition>,
    /// Threshold graph from a creation sequence of d (dominating) and i (isolated).
    #[arg(long, value_name = "SEQ")]
    threshold: Option<ThresholdSpec>,
    /// Weighted edge-list file.
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
}

impl SourceArgs {
    fn into_source(self) -> Source {
        if let Some(n) = self.complete {
            Source::Complete(n)
        } else if let Some(spec) = self.multipartite {
            Source::Multipartite(spec)
        } else if let Some(lambda) = self.ferrers {
            Source::Ferrers(lambda)
        } else if let Some(spec) = self.threshold {
            Source::Threshold(spec)
        } else {
            Source::File(self.file.expect("clap requires one source"))
        }
    }
}

fn parse_route(s: &str) -> Result<Route, String> {
    Route::ALL.into_iter().find(|r| r.name() == s).ok_or_else(|| {
        let names: Vec<&str> = Route::ALL.iter().map(|r| r.name()).collect();
        format!("unknown route {s:?}; expected one of {}", names.join(", "))
    })
}

/// Parses command-line arguments (including the program name) into a job.
///
/// Help and version requests also come back as errors; check
/// [`clap::Error::use_stderr`] to tell them apart.
pub fn parse_args<I, T>(args: I) -> Result<JobSpec, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args)?;
    let (command, source, route) = match cli.command {
        CommandArgs::Enumerate { source, route } => (Command::Enumerate, source, route),
        CommandArgs::Count { source, route } => (Command::Count, source, route),
        CommandArgs::Verify { source } => (Command::Verify, source, None),
        CommandArgs::Bench { source } => (Command::Bench, source, None),
    };
    JobSpec::new(command, source.into_source(), route).map_err(|e| {
        use clap::CommandFactory;
        Cli::command().error(clap::error::ErrorKind::ArgumentConflict, e)
    })
}
