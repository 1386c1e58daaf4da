use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod io;

use commands::Outcome;

#[derive(Parser, Debug)]
#[command(name = "cellres", version, about = "Cellular supports of monomial ideal resolutions over GF(p)")]
struct Cli {
    /// Characteristic of the coefficient field.
    #[arg(long, global = true, default_value_t = 2)]
    p: u32,
    /// Comma-separated variable names for text ideals (default: order of appearance).
    #[arg(long, global = true)]
    vars: Option<String>,
    /// Allow lower-degree coordinates in the basis search.
    #[arg(long, global = true)]
    stage2: bool,
    /// Candidate budget per degree group in the basis search.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    bound: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimal free resolution of an ideal and its Betti table.
    Resolve { ideal: PathBuf },
    /// Whether a labeled CW complex supports the minimal resolution of an ideal.
    CheckSupport { cw: PathBuf, ideal: PathBuf },
    /// Face poset of a CW complex over GF(p).
    FacePoset { cw: PathBuf },
    /// Minimal-support basis of a labeled CW complex or a resolution file.
    FindBasis { input: PathBuf },
    /// Full pipeline: transform the CW complex so its face poset matches the incidence poset.
    Transform { cw: PathBuf, ideal: PathBuf },
    /// Run the bundled examples, optionally diffing against a golden file.
    Corpus {
        #[arg(long)]
        golden: Option<PathBuf>,
    },
}

/// Settings shared by all subcommands.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub p: cellres::exactlin::Prime,
    pub vars: Option<Vec<String>>,
    pub search: cellres::cwposet::SearchOptions,
    pub format: Format,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    fn from_cli(cli: &Cli) -> Result<Self, Outcome> {
        let p = cellres::exactlin::Prime::new(cli.p).map_err(|e| Outcome::error(2, format!("--p: {e}")))?;
        let vars = cli.vars.as_ref().map(|v| v.split(',').map(|s| s.trim().to_string()).collect());
        let mut search = cellres::cwposet::SearchOptions { stage2: cli.stage2, ..Default::default() };
        if let Some(b) = cli.bound {
            search.bound = usize::try_from(b).unwrap_or(usize::MAX);
        }
        Ok(RunConfig { p, vars, search, format: cli.format, out: cli.out.clone() })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match RunConfig::from_cli(&cli) {
        Err(o) => o,
        Ok(cfg) => match &cli.command {
            Command::Resolve { ideal } => commands::resolve(&cfg, ideal),
            Command::CheckSupport { cw, ideal } => commands::check_support(&cfg, cw, ideal),
            Command::FacePoset { cw } => commands::face_poset(&cfg, cw),
            Command::FindBasis { input } => commands::find_basis(&cfg, input),
            Command::Transform { cw, ideal } => commands::transform(&cfg, cw, ideal),
            Command::Corpus { golden } => commands::corpus(&cfg, golden.as_deref()),
        },
    };
    outcome.finish()
}
