use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use spheremotion::cli::*;
use spheremotion::fuzz::Suite;
use spheremotion::group::BaseGroup;
use spheremotion::io::GOLDEN_NAMES;
use spheremotion::report::RunReport;

#[derive(Parser)]
#[command(name = "spheremotion", version, about = "Maps, car motions, comotions and relative presentations")]
struct Cli {
    #[arg(long, value_enum, global = true, default_value = "text")]
    format: Format,
    /// Overridden by SPHEREMOTION_SEED.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 100)]
    cases: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Am,
    Bm,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Weights,
    Collisions,
    Rewriting,
    Diagrams,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum WordOp {
    Classify,
    Rewrite,
    Criterion,
}

#[derive(Subcommand)]
enum Command {
    /// Census and Euler characteristic of a map file.
    Validate { map: PathBuf },
    /// Collision loci and motion checks, from a file or the standard schedule.
    Motion {
        map: PathBuf,
        motion: Option<PathBuf>,
        #[arg(long, value_enum, conflicts_with = "motion")]
        standard: Option<Family>,
        #[arg(long, default_value_t = 0)]
        m: u32,
    },
    /// Weights and collisions of a comotion.
    Comotion { map: PathBuf, comotion: PathBuf },
    /// Classify, rewrite or test a relator.
    Word {
        #[arg(value_enum)]
        op: WordOp,
        /// A word.json file.
        #[arg(long, conflicts_with = "text")]
        file: Option<PathBuf>,
        /// Word text such as "a t B t^-1 a t".
        #[arg(long)]
        text: Option<String>,
        #[arg(long, default_value = "free")]
        kind: String,
        #[arg(long, default_value_t = 2)]
        rank: usize,
        /// Treat G as simple for the criterion.
        #[arg(long)]
        g_simple: bool,
    },
    /// Label checks and reduction of a diagram file.
    Diagram {
        diagram: PathBuf,
        #[arg(long)]
        presentation: Option<PathBuf>,
        #[arg(long)]
        reduce: bool,
    },
    /// Seeded invariant campaigns.
    Fuzz {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
    },
    /// Built-in examples.
    Examples {
        #[command(subcommand)]
        action: ExamplesAction,
    },
}

#[derive(Subcommand)]
enum ExamplesAction {
    /// Write the golden files of an example.
    Emit {
        #[arg(value_parser = GOLDEN_NAMES)]
        name: String,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    List,
}

fn run(cli: &Cli, seed: u64) -> spheremotion::error::Result<RunReport> {
    match &cli.command {
        Command::Validate { map } => cmd_validate(map),
        Command::Motion { map, motion, standard, m } => {
            let source = match (motion, standard) {
                (Some(p), _) => MotionSource::File(p),
                (None, Some(Family::Am)) => MotionSource::Standard { family: StandardFamily::Am, m: *m },
                (None, Some(Family::Bm)) => MotionSource::Standard { family: StandardFamily::Bm, m: *m },
                (None, None) => {
                    return Err(spheremotion::error::Error::Parse("give a motion file or --standard".into()));
                }
            };
            cmd_motion(map, source)
        }
        Command::Comotion { map, comotion } => cmd_comotion(map, comotion),
        Command::Word { op, file, text, kind, rank, g_simple } => {
            let base = match kind.as_str() {
                "free" => BaseGroup::free(*rank),
                "abelian" => BaseGroup::abelian(*rank),
                other => return Err(spheremotion::error::Error::Parse(format!("unknown group kind {other}"))),
            };
            let source = match (file, text) {
                (Some(p), _) => WordSource::File(p),
                (None, Some(t)) => WordSource::Text { base, text: t },
                (None, None) => return Err(spheremotion::error::Error::Parse("give --file or --text".into())),
            };
            let op = match op {
                WordOp::Classify => WordCommand::Classify,
                WordOp::Rewrite => WordCommand::Rewrite,
                WordOp::Criterion => WordCommand::Criterion { g_is_simple: *g_simple },
            };
            cmd_word(source, op)
        }
        Command::Diagram { diagram, presentation, reduce } => cmd_diagram(diagram, presentation.as_deref(), *reduce),
        Command::Fuzz { suite } => {
            let suite = match suite {
                SuiteArg::Weights => Some(Suite::Weights),
                SuiteArg::Collisions => Some(Suite::Collisions),
                SuiteArg::Rewriting => Some(Suite::Rewriting),
                SuiteArg::Diagrams => Some(Suite::Diagrams),
                SuiteArg::All => None,
            };
            Ok(cmd_fuzz(suite, seed, cli.cases.max(1)))
        }
        Command::Examples { action: ExamplesAction::Emit { name, out } } => cmd_examples_emit(name, out),
        Command::Examples { action: ExamplesAction::List } => {
            let mut r = RunReport::new("examples list");
            r.result("examples", GOLDEN_NAMES);
            Ok(r)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let seed = match std::env::var("SPHEREMOTION_SEED") {
        Ok(s) => match s.parse() {
            Ok(v) => v,
            Err(_) => {
                eprintln!("error: SPHEREMOTION_SEED must be an unsigned integer");
                return ExitCode::from(2);
            }
        },
        Err(_) => cli.seed,
    };
    match run(&cli, seed) {
        Ok(report) => {
            match cli.format {
                Format::Json => print!("{}", report.to_json()),
                Format::Text => print!("{}", report.to_text()),
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
