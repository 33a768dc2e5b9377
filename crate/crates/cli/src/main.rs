use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use tictactoe::ai::PerfectPlayer;
use tictactoe::persist;
use tictactoe::sim::{simulate, summary_line, SimConfig, Strategy};
use tictactoe::{Mark, Mode};
use tictactoe_cli::{exit, play, replay};
use tictactoe_server::ServeError;

#[derive(Debug, Parser)]
#[command(
    name = "tictactoe",
    version,
    about = "Tic-tac-toe game sets with a perfect computer player"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GameArgs {
    /// Who controls the lead and other seat: H2H, H2C, C2H or C2C
    #[arg(long, default_value = "H2H")]
    mode: Mode,
    /// Mark that moves first in every game
    #[arg(long, default_value = "x")]
    lead: Mark,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Play in the terminal
    Play(GameArgs),
    /// Run computer-vs-computer games and print the totals
    Simulate {
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        games: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "x")]
        lead: Mark,
        #[arg(long, default_value = "perfect")]
        x_strategy: Strategy,
        #[arg(long, default_value = "perfect")]
        o_strategy: Strategy,
    },
    /// Step through a saved game set
    Replay {
        #[arg(long)]
        file: PathBuf,
    },
    /// Start the HTTP service
    Serve {
        #[arg(long, default_value = "127.0.0.1")]
        host: String,
        #[arg(long, default_value_t = 8080)]
        port: u16,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => code(exit::USAGE),
            };
        }
    };
    code(run(cli.command))
}

fn code(c: i32) -> ExitCode {
    ExitCode::from(c as u8)
}

fn run(command: Command) -> i32 {
    match command {
        Command::Play(args) => {
            let stdin = io::stdin();
            play(
                args.mode,
                args.lead,
                stdin.lock(),
                io::stdout(),
                &mut PerfectPlayer::new(),
            )
        }
        Command::Simulate {
            games,
            seed,
            lead,
            x_strategy,
            o_strategy,
        } => {
            let stats = simulate(&SimConfig {
                games,
                seed,
                lead,
                x_strategy,
                o_strategy,
            });
            let mut out = BufWriter::new(io::stdout());
            let _ = writeln!(out, "{}", summary_line(&stats));
            exit::SUCCESS
        }
        Command::Replay { file } => match persist::load(&file) {
            Ok(session) => replay(session, io::stdin().lock(), io::stdout()),
            Err(e) => {
                eprintln!("error: {e}");
                exit::BAD_SAVE_FILE
            }
        },
        Command::Serve { host, port } => {
            tracing_subscriber::fmt().with_writer(io::stderr).init();
            let runtime = match tokio::runtime::Runtime::new() {
                Ok(rt) => rt,
                Err(e) => {
                    eprintln!("error: {e}");
                    return exit::USAGE;
                }
            };
            match runtime.block_on(tictactoe_server::serve(&host, port)) {
                Ok(()) => exit::SUCCESS,
                Err(e @ ServeError::Bind { .. }) => {
                    eprintln!("error: {e}");
                    exit::BIND_FAILURE
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    exit::USAGE
                }
            }
        }
    }
}
