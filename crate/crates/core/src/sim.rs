//! Headless computer-vs-computer game sets.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::ai::{random_legal_move, Solver};
use crate::rules::Mark;
use crate::session::{GameSession, GameStats, Mode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    #[default]
    Perfect,
    Random,
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "perfect" => Ok(Strategy::Perfect),
            "random" => Ok(Strategy::Random),
            _ => Err(format!("unknown strategy {s:?}, expected perfect or random")),
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Perfect => "perfect",
            Strategy::Random => "random",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SimConfig {
    pub games: u32,
    pub seed: u64,
    pub lead: Mark,
    pub x_strategy: Strategy,
    pub o_strategy: Strategy,
}

impl Default for SimConfig {
    fn default() -> Self {
        SimConfig {
            games: 1,
            seed: 0,
            lead: Mark::X,
            x_strategy: Strategy::Perfect,
            o_strategy: Strategy::Perfect,
        }
    }
}

/// Plays `config.games` games and returns the totals. One seeded generator
/// drives every random seat, so the outcome depends only on the config.
pub fn simulate(config: &SimConfig) -> GameStats {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut solver = Solver::new();
    let mut session = GameSession::new(Mode::C2C, config.lead);
    for _ in 0..config.games {
        session.initialize();
        while let Some(mark) = session.next_player() {
            let board = session.current_board();
            let strategy = match mark {
                Mark::X => config.x_strategy,
                Mark::O => config.o_strategy,
            };
            let choice = match strategy {
                Strategy::Perfect => solver.best_move(&board, mark),
                Strategy::Random => random_legal_move(&board, mark, &mut rng),
            }
            .expect("game in progress has a move");
            session
                .play_move(choice.row, choice.col)
                .expect("chosen move is legal");
        }
    }
    session.stats()
}

/// `x=<n> o=<n> draw=<n> games=<N>`
pub fn summary_line(stats: &GameStats) -> String {
    format!("{stats} games={}", stats.games())
}
