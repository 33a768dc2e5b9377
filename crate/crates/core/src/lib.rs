//! Tic-tac-toe game sets: rules, sessions with move history and cursor
//! navigation, statistics across games, and a perfect-play computer player.

pub mod ai;
pub mod game_loop;
pub mod persist;
pub mod rules;
pub mod session;
pub mod sim;
pub mod tree;

pub use ai::{best_move, minimax_value, random_legal_move, AiError, GameValue, MoveChoice, Solver};
pub use rules::{
    apply_move, check_result, empty_board, legal_moves, Board, Cell, GameResult, Mark, Move, RulesError,
};
pub use session::{
    controller_of, random_valid_session, Controller, GameSession, GameStats, Mode, Navigation, SessionError,
    Violation,
};
