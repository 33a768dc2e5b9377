//! A game set: several games under one configuration with running
//! statistics, plus the move history of the current game and a cursor for
//! stepping back and forth through it.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rules::{
    apply_move, check_result, empty_board, legal_moves, Board, GameResult, Mark, Move, RulesError,
};

/// Who controls the lead seat and the other seat, in that order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Mode {
    #[default]
    H2H,
    H2C,
    C2H,
    C2C,
}

impl Mode {
    pub const ALL: [Mode; 4] = [Mode::H2H, Mode::H2C, Mode::C2H, Mode::C2C];

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::H2H => "H2H",
            Mode::H2C => "H2C",
            Mode::C2H => "C2H",
            Mode::C2C => "C2C",
        }
    }

    pub fn lead_controller(self) -> Controller {
        match self {
            Mode::H2H | Mode::H2C => Controller::Human,
            Mode::C2H | Mode::C2C => Controller::Computer,
        }
    }

    pub fn other_controller(self) -> Controller {
        match self {
            Mode::H2H | Mode::C2H => Controller::Human,
            Mode::H2C | Mode::C2C => Controller::Computer,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Mode::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| format!("unknown mode {s:?}, expected H2H, H2C, C2H or C2C"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Controller {
    Human,
    Computer,
}

pub fn controller_of(mode: Mode, lead: Mark, mark: Mark) -> Controller {
    if mark == lead {
        mode.lead_controller()
    } else {
        mode.other_controller()
    }
}

/// Counters over the completed games of a set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GameStats {
    pub x_win_count: u32,
    pub o_win_count: u32,
    pub draw_count: u32,
}

impl GameStats {
    pub fn new(x_win_count: u32, o_win_count: u32, draw_count: u32) -> GameStats {
        GameStats {
            x_win_count,
            o_win_count,
            draw_count,
        }
    }

    pub fn games(&self) -> u32 {
        self.x_win_count + self.o_win_count + self.draw_count
    }

    /// Counter matching a finished result.
    pub fn count_for(&self, result: GameResult) -> Option<u32> {
        match result {
            GameResult::XWins => Some(self.x_win_count),
            GameResult::OWins => Some(self.o_win_count),
            GameResult::Draw => Some(self.draw_count),
            GameResult::Continue => None,
        }
    }

    pub fn record(&mut self, result: GameResult) {
        match result {
            GameResult::XWins => self.x_win_count += 1,
            GameResult::OWins => self.o_win_count += 1,
            GameResult::Draw => self.draw_count += 1,
            GameResult::Continue => {}
        }
    }
}

impl fmt::Display for GameStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "x={} o={} draw={}",
            self.x_win_count, self.o_win_count, self.draw_count
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SessionError {
    #[error("the game is over; initialize a new game first")]
    GameOver,
    #[error("viewing an earlier state; go to the last state to play")]
    NotAtLatestState,
    #[error("already at the first state")]
    AtFirstState,
    #[error("already at the last state")]
    AtLastState,
    #[error("the game set has been stopped")]
    SessionStopped,
    #[error(transparent)]
    Rules(#[from] RulesError),
}

impl SessionError {
    pub fn code(&self) -> &'static str {
        match self {
            SessionError::GameOver => "GameOver",
            SessionError::NotAtLatestState => "NotAtLatestState",
            SessionError::AtFirstState => "AtFirstState",
            SessionError::AtLastState => "AtLastState",
            SessionError::SessionStopped => "SessionStopped",
            SessionError::Rules(e) => e.code(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Navigation {
    First,
    Previous,
    Next,
    Last,
}

impl FromStr for Navigation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "first" => Ok(Navigation::First),
            "prev" => Ok(Navigation::Previous),
            "next" => Ok(Navigation::Next),
            "last" => Ok(Navigation::Last),
            _ => Err(format!("unknown navigation target {s:?}")),
        }
    }
}

/// One game set. The board is never stored: it is rebuilt from the history.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameSession {
    mode: Mode,
    lead: Mark,
    history: Vec<Move>,
    cursor: usize,
    result: GameResult,
    stats: GameStats,
    stopped: bool,
}

impl Default for GameSession {
    fn default() -> Self {
        GameSession::new(Mode::default(), Mark::X)
    }
}

impl GameSession {
    pub fn new(mode: Mode, lead: Mark) -> GameSession {
        GameSession {
            mode,
            lead,
            history: Vec::with_capacity(9),
            cursor: 0,
            result: GameResult::Continue,
            stats: GameStats::default(),
            stopped: false,
        }
    }

    /// Rebuilds a session from stored parts, checking every invariant.
    pub fn restore(
        mode: Mode,
        lead: Mark,
        stats: GameStats,
        history: Vec<Move>,
        cursor: usize,
    ) -> Result<GameSession, Violation> {
        if history.len() > 9 {
            return Err(Violation::HistoryLength);
        }
        let mut board = empty_board();
        let mut result = GameResult::Continue;
        for (i, mv) in history.iter().enumerate() {
            if result.is_over() {
                return Err(Violation::MoveAfterGameOver);
            }
            let expected = if i % 2 == 0 { lead } else { lead.other() };
            if mv.mark != expected {
                return Err(if i == 0 {
                    Violation::LeadPlayer
                } else {
                    Violation::Alternation
                });
            }
            board = apply_move(&board, *mv).map_err(|_| Violation::ReplayLegality)?;
            result = check_result(&board);
        }
        if cursor > history.len() {
            return Err(Violation::CursorBounds);
        }
        if stats.count_for(result) == Some(0) {
            return Err(Violation::StatsConservation);
        }
        Ok(GameSession {
            mode,
            lead,
            history,
            cursor,
            result,
            stats,
            stopped: false,
        })
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn lead_player(&self) -> Mark {
        self.lead
    }

    /// `None` once the current game is over.
    pub fn next_player(&self) -> Option<Mark> {
        if self.result.is_over() {
            None
        } else if self.history.len().is_multiple_of(2) {
            Some(self.lead)
        } else {
            Some(self.lead.other())
        }
    }

    pub fn result(&self) -> GameResult {
        self.result
    }

    pub fn status(&self) -> &'static str {
        self.result.status()
    }

    pub fn moves_count(&self) -> usize {
        self.history.len()
    }

    pub fn history(&self) -> &[Move] {
        &self.history
    }

    pub fn cursor(&self) -> usize {
        self.cursor
    }

    pub fn stats(&self) -> GameStats {
        self.stats
    }

    pub fn is_stopped(&self) -> bool {
        self.stopped
    }

    pub fn at_latest_state(&self) -> bool {
        self.cursor == self.history.len()
    }

    pub fn controller_of(&self, mark: Mark) -> Controller {
        controller_of(self.mode, self.lead, mark)
    }

    /// Controller of the side to move, if the game is still going.
    pub fn next_controller(&self) -> Option<Controller> {
        self.next_player().map(|m| self.controller_of(m))
    }

    /// Board at the cursor.
    pub fn view_board(&self) -> Board {
        self.board_at(self.cursor)
    }

    /// Board after the latest move, whatever the cursor.
    pub fn current_board(&self) -> Board {
        self.board_at(self.history.len())
    }

    /// Board after the first `k` moves (clamped to the history length).
    pub fn board_at(&self, k: usize) -> Board {
        self.history[..k.min(self.history.len())]
            .iter()
            .fold(empty_board(), |b, mv| {
                apply_move(&b, *mv).expect("history replays")
            })
    }

    /// Changes mode and lead player and starts a fresh game. Stats are kept.
    pub fn set_up(&mut self, mode: Mode, lead: Mark) {
        self.mode = mode;
        self.lead = lead;
        self.initialize();
    }

    /// Clears the board for the next game. Stats, mode and lead are kept.
    pub fn initialize(&mut self) {
        self.history.clear();
        self.cursor = 0;
        self.result = GameResult::Continue;
    }

    /// Places the next player's mark at (row, col) and scores the game if it
    /// just ended.
    pub fn play_move(&mut self, row: usize, col: usize) -> Result<GameResult, SessionError> {
        if self.stopped {
            return Err(SessionError::SessionStopped);
        }
        let mark = self.next_player().ok_or(SessionError::GameOver)?;
        if !self.at_latest_state() {
            return Err(SessionError::NotAtLatestState);
        }
        let mv = Move::new(mark, row, col);
        let board = apply_move(&self.current_board(), mv)?;
        self.history.push(mv);
        self.cursor = self.history.len();
        self.result = check_result(&board);
        self.stats.record(self.result);
        Ok(self.result)
    }

    pub fn move_to_previous_state(&mut self) -> Result<(), SessionError> {
        if self.cursor == 0 {
            return Err(SessionError::AtFirstState);
        }
        self.cursor -= 1;
        Ok(())
    }

    pub fn move_to_next_state(&mut self) -> Result<(), SessionError> {
        if self.at_latest_state() {
            return Err(SessionError::AtLastState);
        }
        self.cursor += 1;
        Ok(())
    }

    pub fn move_to_first_state(&mut self) {
        self.cursor = 0;
    }

    pub fn move_to_last_state(&mut self) {
        self.cursor = self.history.len();
    }

    pub fn navigate(&mut self, target: Navigation) -> Result<(), SessionError> {
        match target {
            Navigation::First => self.move_to_first_state(),
            Navigation::Previous => self.move_to_previous_state()?,
            Navigation::Next => self.move_to_next_state()?,
            Navigation::Last => self.move_to_last_state(),
        }
        Ok(())
    }

    /// Ends the game set. Later moves fail with [`SessionError::SessionStopped`].
    pub fn stop(&mut self) -> GameStats {
        self.stopped = true;
        self.stats
    }

    /// Checks every structural invariant; used by tests and loaders.
    pub fn check_invariants(&self) -> Result<(), Violation> {
        let restored = GameSession::restore(
            self.mode,
            self.lead,
            self.stats,
            self.history.clone(),
            self.cursor,
        )?;
        if restored.result != self.result {
            return Err(Violation::ResultConsistency);
        }
        Ok(())
    }
}

/// Names of the invariants a stored or reconstructed session can break.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Error)]
pub enum Violation {
    #[error("HistoryLength: a game has at most 9 moves")]
    HistoryLength,
    #[error("LeadPlayer: the first move must be made by the lead player")]
    LeadPlayer,
    #[error("Alternation: marks must alternate along the history")]
    Alternation,
    #[error("ReplayLegality: a move targets an occupied cell")]
    ReplayLegality,
    #[error("MoveAfterGameOver: moves continue after the game was decided")]
    MoveAfterGameOver,
    #[error("CursorBounds: cursor must lie between 0 and movesCount")]
    CursorBounds,
    #[error("StatsConservation: the finished game is missing from the stats")]
    StatsConservation,
    #[error("ResultConsistency: stored result disagrees with the board")]
    ResultConsistency,
}

impl Violation {
    pub fn name(&self) -> &'static str {
        match self {
            Violation::HistoryLength => "HistoryLength",
            Violation::LeadPlayer => "LeadPlayer",
            Violation::Alternation => "Alternation",
            Violation::ReplayLegality => "ReplayLegality",
            Violation::MoveAfterGameOver => "MoveAfterGameOver",
            Violation::CursorBounds => "CursorBounds",
            Violation::StatsConservation => "StatsConservation",
            Violation::ResultConsistency => "ResultConsistency",
        }
    }
}

/// Builds a random but valid session, deterministic in `seed`.
///
/// Mode and lead are drawn at random, a few earlier games are played out at
/// random to populate the stats, and the current game is a random playout
/// cut at a uniformly chosen ply with the cursor anywhere in its history.
pub fn random_valid_session(seed: u64) -> GameSession {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mode = *Mode::ALL.choose(&mut rng).expect("non-empty");
    let lead = *Mark::ALL.choose(&mut rng).expect("non-empty");
    let mut session = GameSession::new(mode, lead);

    for _ in 0..rng.gen_range(0..4) {
        while !session.result().is_over() {
            let (r, c) = *legal_moves(&session.current_board())
                .choose(&mut rng)
                .expect("open cell");
            session.play_move(r, c).expect("legal random move");
        }
        session.initialize();
    }

    let mut playout = Vec::with_capacity(9);
    let mut board = empty_board();
    let mut mark = lead;
    while !check_result(&board).is_over() {
        let (r, c) = *legal_moves(&board).choose(&mut rng).expect("open cell");
        board = apply_move(&board, Move::new(mark, r, c)).expect("legal");
        playout.push((r, c));
        mark = mark.other();
    }
    let plies = rng.gen_range(0..=playout.len());
    for &(r, c) in &playout[..plies] {
        session.play_move(r, c).expect("legal playout move");
    }
    session.cursor = rng.gen_range(0..=session.moves_count());
    session
}
