//! The interactive game loop shared by the terminal front end and tests.
//!
//! Each turn the loop asks an [`InputSource`] for an action, applies it to
//! the session and reports what happened to an observer. Finished games are
//! scored and the board is cleared for the next one. The loop ends when the
//! input asks to exit or to stop the set.

use thiserror::Error;

use crate::ai::{AiError, ComputerPlayer};
use crate::rules::{GameResult, Mark, Move};
use crate::session::{Controller, GameSession, GameStats, Mode, Navigation, SessionError};

/// What the loop is waiting for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Prompt {
    HumanTurn(Mark),
    ComputerTurn(Mark),
    /// Viewing an earlier state; only navigation and game controls apply.
    Reviewing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Action {
    Move {
        row: usize,
        col: usize,
    },
    /// Let the computer make its move.
    Step,
    Navigate(Navigation),
    Initialize,
    SetUp {
        mode: Mode,
        lead: Mark,
    },
    Stop,
    Exit,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LoopError {
    #[error(transparent)]
    Session(#[from] SessionError),
    #[error("it is the computer's turn")]
    NotHumanTurn,
    #[error("it is not the computer's turn")]
    NotComputerTurn,
    #[error(transparent)]
    Ai(#[from] AiError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LoopEvent {
    Moved {
        mv: Move,
        result: GameResult,
    },
    /// Sent while the session still shows the final board.
    GameFinished {
        result: GameResult,
        stats: GameStats,
    },
    NewGame,
    Navigated(Navigation),
    SetUp,
    /// The action failed; the session is unchanged and the loop goes on.
    Rejected(LoopError),
    Stopped(GameStats),
}

pub trait InputSource {
    fn next_action(&mut self, session: &GameSession, prompt: Prompt) -> Action;
}

/// Replays a fixed list of actions, then exits.
#[derive(Debug, Clone, Default)]
pub struct ScriptedInput {
    actions: std::collections::VecDeque<Action>,
}

impl ScriptedInput {
    pub fn new(actions: impl IntoIterator<Item = Action>) -> Self {
        ScriptedInput {
            actions: actions.into_iter().collect(),
        }
    }
}

impl InputSource for ScriptedInput {
    fn next_action(&mut self, _session: &GameSession, _prompt: Prompt) -> Action {
        self.actions.pop_front().unwrap_or(Action::Exit)
    }
}

pub fn prompt_for(session: &GameSession) -> Prompt {
    match session.next_player() {
        Some(_) if !session.at_latest_state() => Prompt::Reviewing,
        Some(mark) => match session.controller_of(mark) {
            Controller::Human => Prompt::HumanTurn(mark),
            Controller::Computer => Prompt::ComputerTurn(mark),
        },
        // finished games are cleared before the next prompt
        None => Prompt::Reviewing,
    }
}

pub fn run_game_loop<I, C, F>(
    mut session: GameSession,
    input: &mut I,
    computer: &mut C,
    mut observe: F,
) -> GameSession
where
    I: InputSource + ?Sized,
    C: ComputerPlayer + ?Sized,
    F: FnMut(&GameSession, &LoopEvent),
{
    while !session.is_stopped() {
        let prompt = prompt_for(&session);
        let outcome = match input.next_action(&session, prompt) {
            Action::Exit => break,
            Action::Stop => {
                let stats = session.stop();
                observe(&session, &LoopEvent::Stopped(stats));
                break;
            }
            Action::Move { row, col } => match prompt {
                Prompt::ComputerTurn(_) => Err(LoopError::NotHumanTurn),
                _ => play(&mut session, row, col, &mut observe),
            },
            Action::Step => match prompt {
                Prompt::ComputerTurn(mark) => computer
                    .choose_move(&session.current_board(), mark)
                    .map_err(LoopError::from)
                    .and_then(|c| play(&mut session, c.row, c.col, &mut observe)),
                _ => Err(LoopError::NotComputerTurn),
            },
            Action::Navigate(target) => session
                .navigate(target)
                .map(|()| observe(&session, &LoopEvent::Navigated(target)))
                .map_err(LoopError::from),
            Action::Initialize => {
                session.initialize();
                observe(&session, &LoopEvent::NewGame);
                Ok(())
            }
            Action::SetUp { mode, lead } => {
                session.set_up(mode, lead);
                observe(&session, &LoopEvent::SetUp);
                Ok(())
            }
        };
        if let Err(e) = outcome {
            observe(&session, &LoopEvent::Rejected(e));
        }
    }
    session
}

fn play<F>(session: &mut GameSession, row: usize, col: usize, observe: &mut F) -> Result<(), LoopError>
where
    F: FnMut(&GameSession, &LoopEvent),
{
    let result = session.play_move(row, col)?;
    let mv = *session.history().last().expect("move recorded");
    observe(session, &LoopEvent::Moved { mv, result });
    if result.is_over() {
        observe(
            session,
            &LoopEvent::GameFinished {
                result,
                stats: session.stats(),
            },
        );
        session.initialize();
        observe(session, &LoopEvent::NewGame);
    }
    Ok(())
}
