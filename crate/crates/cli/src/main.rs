use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use graphprod::groupalg::{Budgets, DEFAULT_EXTRA_TRUNCATION};
use graphprod::ncalg::DEFAULT_WORD_BUDGET;
use graphprod::words::DEFAULT_BALL_BUDGET;
use graphprod::AlgebraKind;
use graphprod_cli::*;

#[derive(Parser)]
#[command(
    name = "graphprod",
    version,
    about = "Graph products of groups and graded algebras over prime fields"
)]
struct Cli {
    /// Indent the JSON report.
    #[arg(long, global = true)]
    pretty: bool,
    /// Seed for randomized checks; recorded in the report.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Add wall-clock time to the report (makes reports non-reproducible).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Face counts, missing faces, flagness and chordality of a complex.
    Analyze { file: PathBuf },
    /// Hilbert series of a graph-product algebra.
    Hilbert {
        file: PathBuf,
        #[arg(long, default_value = "trunc")]
        algebra: AlgebraKind,
        #[arg(long, default_value_t = 2)]
        p: u64,
        #[arg(long, default_value_t = 6)]
        degree: usize,
        /// Cross-check every degree against brute-force ranks.
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = DEFAULT_WORD_BUDGET)]
        max_words: usize,
    },
    /// Graded dimensions of the (restricted) graph Lie algebra.
    LieDims {
        file: PathBuf,
        /// Prime for the restricted Lie algebra; omit for the right-angled Artin group.
        #[arg(long)]
        p: Option<u64>,
        #[arg(long, default_value_t = 6)]
        degree: usize,
        /// Compare with the augmentation filtration of the group algebra.
        #[arg(long)]
        verify_group_oracle: bool,
        #[arg(long, default_value_t = DEFAULT_WORD_BUDGET)]
        max_words: usize,
        #[arg(long, default_value_t = DEFAULT_BALL_BUDGET)]
        max_ball: usize,
        #[arg(long, default_value_t = DEFAULT_EXTRA_TRUNCATION)]
        max_extra_truncation: usize,
    },
    /// Iterated commutators generating the commutator subgroup.
    CommGens { file: PathBuf },
    /// Normal form of a word in a graph product of cyclic groups.
    Word {
        file: PathBuf,
        word: String,
        /// One order for all vertices (`2`, `inf`, ...) or a comma separated list.
        #[arg(long, default_value = "2")]
        orders: String,
    },
    /// Substitution complex K(K_1, ..., K_m).
    Subst {
        file: PathBuf,
        parts: Vec<PathBuf>,
        #[arg(long, default_value_t = 2)]
        p: u64,
        #[arg(long, default_value_t = 5)]
        degree: usize,
        #[arg(long, default_value_t = DEFAULT_WORD_BUDGET)]
        max_words: usize,
    },
    /// Randomized check of the restricted p-power axioms.
    Axioms {
        #[arg(long, default_value_t = 2)]
        p: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
    },
}

fn run(cli: &Cli) -> CliResult<Report> {
    let seed = cli.seed;
    match &cli.command {
        Command::Analyze { file } => cmd_analyze(&Input::read(file)?, seed),
        Command::Hilbert {
            file,
            algebra,
            p,
            degree,
            oracle,
            max_words,
        } => {
            let args = HilbertArgs {
                algebra: *algebra,
                p: *p,
                degree: *degree,
                oracle: *oracle,
                max_words: *max_words,
            };
            cmd_hilbert(&Input::read(file)?, &args, seed)
        }
        Command::LieDims {
            file,
            p,
            degree,
            verify_group_oracle,
            max_words,
            max_ball,
            max_extra_truncation,
        } => {
            let budgets = Budgets {
                max_words: *max_words,
                max_ball: *max_ball,
                extra_truncation: *max_extra_truncation,
            };
            let args = LieArgs {
                p: *p,
                degree: *degree,
                verify_group_oracle: *verify_group_oracle,
                budgets,
            };
            cmd_lie_dims(&Input::read(file)?, &args, seed)
        }
        Command::CommGens { file } => cmd_comm_gens(&Input::read(file)?, seed),
        Command::Word { file, word, orders } => cmd_word(&Input::read(file)?, orders, word, seed),
        Command::Subst {
            file,
            parts,
            p,
            degree,
            max_words,
        } => {
            let outer = Input::read(file)?;
            let parts = parts.iter().map(|p| Input::read(p)).collect::<CliResult<Vec<_>>>()?;
            cmd_subst(
                &outer,
                &parts,
                &SubstArgs {
                    p: *p,
                    degree: *degree,
                    max_words: *max_words,
                },
                seed,
            )
        }
        Command::Axioms { p, trials } => cmd_axioms(*p, *trials, seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli) {
        Ok(mut report) => {
            if cli.timing {
                report.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
            }
            println!("{}", report.to_json(cli.pretty));
            ExitCode::from(report.exit_code() as u8)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.code as u8)
        }
    }
}
