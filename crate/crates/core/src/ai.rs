//! Computer players.
//!
//! [`Solver`] runs an exact negamax search over the full game tree with a
//! memo table keyed on (board, side to move). No symmetry reduction is done.
//! Ties between equally valued moves are broken by distance to the end of
//! the game (win fast, lose or draw slowly) and then by row-major order.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::collections::HashMap;

use rand::Rng;
use thiserror::Error;

use crate::rules::{apply_move, check_result, legal_moves, Board, GameResult, Mark, Move};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum AiError {
    #[error("no legal moves: the game is already over")]
    NoLegalMoves,
}

/// Game-theoretic value from the point of view of the side to move.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GameValue(i8);

impl GameValue {
    pub const LOSS: GameValue = GameValue(-1);
    pub const DRAW: GameValue = GameValue(0);
    pub const WIN: GameValue = GameValue(1);

    pub fn get(self) -> i8 {
        self.0
    }

    pub fn negate(self) -> GameValue {
        GameValue(-self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MoveChoice {
    pub row: usize,
    pub col: usize,
    pub value: GameValue,
    /// Plies until the game ends under optimal play, counting this move.
    pub plies_to_end: u8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Outcome {
    value: GameValue,
    plies: u8,
}

impl Outcome {
    /// `Greater` means `self` is the better outcome for the side choosing it.
    fn preference(&self, other: &Outcome) -> Ordering {
        self.value.cmp(&other.value).then_with(|| {
            if self.value == GameValue::WIN {
                other.plies.cmp(&self.plies)
            } else {
                self.plies.cmp(&other.plies)
            }
        })
    }
}

fn terminal_value(result: GameResult, to_move: Mark) -> Option<GameValue> {
    match result {
        GameResult::Continue => None,
        GameResult::Draw => Some(GameValue::DRAW),
        r if r.winner() == Some(to_move) => Some(GameValue::WIN),
        _ => Some(GameValue::LOSS),
    }
}

/// Memoized perfect-play search.
#[derive(Debug, Default)]
pub struct Solver {
    memo: HashMap<(Board, Mark), Outcome>,
}

impl Solver {
    pub fn new() -> Solver {
        Solver::default()
    }

    /// Number of positions currently cached.
    pub fn cached_positions(&self) -> usize {
        self.memo.len()
    }

    pub fn value(&mut self, board: &Board, to_move: Mark) -> GameValue {
        self.solve(board, to_move).value
    }

    pub fn best_move(&mut self, board: &Board, to_move: Mark) -> Result<MoveChoice, AiError> {
        if check_result(board).is_over() {
            return Err(AiError::NoLegalMoves);
        }
        self.choose(board, to_move).ok_or(AiError::NoLegalMoves)
    }

    /// Every legal move with its value for `to_move`, row-major.
    pub fn evaluate_moves(&mut self, board: &Board, to_move: Mark) -> Vec<MoveChoice> {
        if check_result(board).is_over() {
            return Vec::new();
        }
        legal_moves(board)
            .into_iter()
            .map(|(row, col)| {
                let child = apply_move(board, Move::new(to_move, row, col)).expect("legal move");
                let reply = self.solve(&child, to_move.other());
                MoveChoice {
                    row,
                    col,
                    value: reply.value.negate(),
                    plies_to_end: reply.plies + 1,
                }
            })
            .collect()
    }

    fn choose(&mut self, board: &Board, to_move: Mark) -> Option<MoveChoice> {
        let mut best: Option<MoveChoice> = None;
        for choice in self.evaluate_moves(board, to_move) {
            let better = match &best {
                None => true,
                Some(b) => {
                    let cand = Outcome {
                        value: choice.value,
                        plies: choice.plies_to_end,
                    };
                    let cur = Outcome {
                        value: b.value,
                        plies: b.plies_to_end,
                    };
                    // strict: earlier row-major moves win ties
                    cand.preference(&cur) == Ordering::Greater
                }
            };
            if better {
                best = Some(choice);
            }
        }
        best
    }

    fn solve(&mut self, board: &Board, to_move: Mark) -> Outcome {
        if let Some(value) = terminal_value(check_result(board), to_move) {
            return Outcome { value, plies: 0 };
        }
        if let Some(hit) = self.memo.get(&(*board, to_move)) {
            return *hit;
        }
        let best = self
            .choose(board, to_move)
            .expect("non-terminal board has a move");
        let outcome = Outcome {
            value: best.value,
            plies: best.plies_to_end,
        };
        self.memo.insert((*board, to_move), outcome);
        outcome
    }
}

thread_local! {
    static SOLVER: RefCell<Solver> = RefCell::new(Solver::new());
}

/// Exact value of the position for `to_move`, using a per-thread cache.
pub fn minimax_value(board: &Board, to_move: Mark) -> GameValue {
    SOLVER.with(|s| s.borrow_mut().value(board, to_move))
}

pub fn best_move(board: &Board, to_move: Mark) -> Result<MoveChoice, AiError> {
    SOLVER.with(|s| s.borrow_mut().best_move(board, to_move))
}

pub fn evaluate_moves(board: &Board, to_move: Mark) -> Vec<MoveChoice> {
    SOLVER.with(|s| s.borrow_mut().evaluate_moves(board, to_move))
}

/// Uniform choice among the empty cells. The returned value is always
/// [`GameValue::DRAW`] and `plies_to_end` is 0: the move is not evaluated.
pub fn random_legal_move<R: Rng + ?Sized>(
    board: &Board,
    _to_move: Mark,
    rng: &mut R,
) -> Result<MoveChoice, AiError> {
    if check_result(board).is_over() {
        return Err(AiError::NoLegalMoves);
    }
    let moves = legal_moves(board);
    let (row, col) = moves[rng.gen_range(0..moves.len())];
    Ok(MoveChoice {
        row,
        col,
        value: GameValue::DRAW,
        plies_to_end: 0,
    })
}

/// Something that picks a cell for the side to move.
pub trait ComputerPlayer {
    fn choose_move(&mut self, board: &Board, to_move: Mark) -> Result<MoveChoice, AiError>;
}

/// Plays [`best_move`].
#[derive(Debug, Default)]
pub struct PerfectPlayer {
    solver: Solver,
}

impl PerfectPlayer {
    pub fn new() -> PerfectPlayer {
        PerfectPlayer::default()
    }
}

impl ComputerPlayer for PerfectPlayer {
    fn choose_move(&mut self, board: &Board, to_move: Mark) -> Result<MoveChoice, AiError> {
        self.solver.best_move(board, to_move)
    }
}

/// Plays [`random_legal_move`] with its own generator.
#[derive(Debug)]
pub struct RandomPlayer<R> {
    rng: R,
}

impl<R: Rng> RandomPlayer<R> {
    pub fn new(rng: R) -> Self {
        RandomPlayer { rng }
    }
}

impl<R: Rng> ComputerPlayer for RandomPlayer<R> {
    fn choose_move(&mut self, board: &Board, to_move: Mark) -> Result<MoveChoice, AiError> {
        random_legal_move(board, to_move, &mut self.rng)
    }
}
