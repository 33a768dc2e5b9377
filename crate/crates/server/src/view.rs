use serde::{Deserialize, Serialize};
use tictactoe::{GameSession, GameStats, Mark, Mode, Move};

/// What every endpoint returns: the session as seen at its cursor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SessionView {
    pub id: String,
    pub mode: String,
    pub lead_player: String,
    /// Nine entries, row-major: "x", "o" or "".
    pub board: Vec<String>,
    pub result: String,
    pub status: String,
    pub moves_count: usize,
    pub cursor: usize,
    pub next_player: Option<String>,
    pub stats: GameStats,
    pub history: Vec<String>,
}

impl SessionView {
    pub fn new(id: &str, session: &GameSession) -> SessionView {
        SessionView {
            id: id.to_owned(),
            mode: session.mode().to_string(),
            lead_player: session.lead_player().to_string(),
            board: session
                .view_board()
                .cells()
                .iter()
                .map(|c| c.mark().map(|m| m.to_string()).unwrap_or_default())
                .collect(),
            result: session.result().code().to_string(),
            status: session.status().to_owned(),
            moves_count: session.moves_count(),
            cursor: session.cursor(),
            next_player: session.next_player().map(|m| m.to_string()),
            stats: session.stats(),
            history: session.history().iter().map(Move::encode).collect(),
        }
    }

    /// Rebuilds the session from mode, lead, stats, history and cursor and
    /// checks that every derived field agrees with the rebuilt one.
    pub fn validate(&self) -> Result<(), String> {
        let mode: Mode = self.mode.parse()?;
        let lead: Mark = self.lead_player.parse()?;
        let history = self
            .history
            .iter()
            .map(|t| Move::decode(t))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| e.to_string())?;
        let session =
            GameSession::restore(mode, lead, self.stats, history, self.cursor).map_err(|v| v.to_string())?;
        let expected = SessionView::new(&self.id, &session);
        if *self != expected {
            return Err(format!(
                "view disagrees with replay: got {self:?}, expected {expected:?}"
            ));
        }
        if self.board.len() != 9 {
            return Err("board must have 9 cells".into());
        }
        if self.board.iter().any(|c| !matches!(c.as_str(), "" | "x" | "o")) {
            return Err("board cells must be \"x\", \"o\" or \"\"".into());
        }
        let marked = self.board.iter().filter(|c| !c.is_empty()).count();
        if marked != self.cursor {
            return Err(format!("{marked} marks shown at cursor {}", self.cursor));
        }
        Ok(())
    }
}
