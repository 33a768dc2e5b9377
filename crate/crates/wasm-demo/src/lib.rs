//! Browser bindings for the demo page in `www/`.
//!
//! The page drives one [`Demo`] game set: click cells to play, ask the
//! computer to move, show the perfect-play value of every open cell, and
//! step through the history of the current game.

use tictactoe::ai::{best_move, evaluate_moves};
use tictactoe::{Controller, GameSession, Mark, Mode, Move, Navigation};
use wasm_bindgen::prelude::*;

/// Marker in [`Demo::move_values`] for cells that are not playable.
pub const NOT_PLAYABLE: i8 = 2;

#[wasm_bindgen]
#[derive(Debug, Clone, Default)]
pub struct Demo {
    session: GameSession,
}

impl Demo {
    pub fn session(&self) -> &GameSession {
        &self.session
    }

    pub fn try_new(mode: &str, lead: &str) -> Result<Demo, String> {
        Ok(Demo {
            session: GameSession::new(mode.parse()?, lead.parse()?),
        })
    }

    pub fn try_click(&mut self, row: usize, col: usize) -> Result<(), String> {
        if self.session.next_controller() == Some(Controller::Computer) && self.session.at_latest_state() {
            return Err("NotHumanTurn: the computer controls the side to move".into());
        }
        self.session
            .play_move(row, col)
            .map_err(|e| format!("{}: {e}", e.code()))?;
        Ok(())
    }

    pub fn try_computer_move(&mut self) -> Result<(), String> {
        let mark = self.session.next_player().ok_or("GameOver: the game is over")?;
        if !self.session.at_latest_state() {
            return Err("NotAtLatestState: go to the last state to play".into());
        }
        let choice = best_move(&self.session.current_board(), mark).map_err(|e| e.to_string())?;
        self.session
            .play_move(choice.row, choice.col)
            .map_err(|e| format!("{}: {e}", e.code()))?;
        Ok(())
    }

    pub fn try_navigate(&mut self, target: &str) -> Result<(), String> {
        let target: Navigation = target.parse()?;
        self.session
            .navigate(target)
            .map_err(|e| format!("{}: {e}", e.code()))
    }

    pub fn try_set_up(&mut self, mode: &str, lead: &str) -> Result<(), String> {
        let mode: Mode = mode.parse()?;
        let lead: Mark = lead.parse()?;
        self.session.set_up(mode, lead);
        Ok(())
    }
}

#[wasm_bindgen]
impl Demo {
    #[wasm_bindgen(constructor)]
    pub fn new(mode: &str, lead: &str) -> Result<Demo, JsError> {
        Demo::try_new(mode, lead).map_err(|e| JsError::new(&e))
    }

    /// Human move at (row, col).
    pub fn click(&mut self, row: usize, col: usize) -> Result<(), JsError> {
        self.try_click(row, col).map_err(|e| JsError::new(&e))
    }

    /// One ply by the perfect computer player.
    #[wasm_bindgen(js_name = computerMove)]
    pub fn computer_move(&mut self) -> Result<(), JsError> {
        self.try_computer_move().map_err(|e| JsError::new(&e))
    }

    /// `first`, `prev`, `next` or `last`.
    pub fn navigate(&mut self, target: &str) -> Result<(), JsError> {
        self.try_navigate(target).map_err(|e| JsError::new(&e))
    }

    pub fn initialize(&mut self) {
        self.session.initialize();
    }

    #[wasm_bindgen(js_name = setUp)]
    pub fn set_up(&mut self, mode: &str, lead: &str) -> Result<(), JsError> {
        self.try_set_up(mode, lead).map_err(|e| JsError::new(&e))
    }

    /// Whether the side to move at the latest state is a computer.
    #[wasm_bindgen(js_name = computerToMove)]
    pub fn computer_to_move(&self) -> bool {
        self.session.at_latest_state() && self.session.next_controller() == Some(Controller::Computer)
    }

    /// Perfect-play value of each cell for the side to move, row-major:
    /// 1 win, 0 draw, -1 loss, [`NOT_PLAYABLE`] for occupied cells or when
    /// the viewed state is not the live one.
    #[wasm_bindgen(js_name = moveValues)]
    pub fn move_values(&self) -> Vec<i8> {
        let mut values = vec![NOT_PLAYABLE; 9];
        if let (Some(mark), true) = (self.session.next_player(), self.session.at_latest_state()) {
            for choice in evaluate_moves(&self.session.current_board(), mark) {
                values[choice.row * 3 + choice.col] = choice.value.get();
            }
        }
        values
    }

    /// Session at the cursor as JSON, with the same field names the HTTP
    /// service uses.
    #[wasm_bindgen(js_name = viewJson)]
    pub fn view_json(&self) -> String {
        let s = &self.session;
        let board: Vec<String> = s
            .view_board()
            .cells()
            .iter()
            .map(|c| c.mark().map(|m| m.to_string()).unwrap_or_default())
            .collect();
        serde_json::json!({
            "mode": s.mode().as_str(),
            "leadPlayer": s.lead_player().to_string(),
            "board": board,
            "result": s.result().code().to_string(),
            "status": s.status(),
            "movesCount": s.moves_count(),
            "cursor": s.cursor(),
            "nextPlayer": s.next_player().map(|m| m.to_string()),
            "stats": s.stats(),
            "history": s.history().iter().map(Move::encode).collect::<Vec<_>>(),
        })
        .to_string()
    }
}
