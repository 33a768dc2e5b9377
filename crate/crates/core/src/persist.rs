//! Versioned JSON save format for a game set.
//!
//! ```json
//! {"version":1,"mode":"H2C","leadPlayer":"x","stats":{"xWinCount":3,"oWinCount":1,"drawCount":2},"history":["x11","o00","x02"],"cursor":3}
//! ```
//!
//! Only the configuration, stats, history and cursor are stored. Board,
//! move count, result and next player are rebuilt by replaying the history.

use std::fs;
use std::io;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rules::{Mark, Move};
use crate::session::{GameSession, GameStats, Mode};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct SaveFile {
    version: u32,
    mode: String,
    lead_player: String,
    stats: GameStats,
    history: Vec<String>,
    cursor: usize,
}

/// A save file that does not describe a valid game set. `invariant` names
/// the rule that failed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid save file ({invariant}): {detail}")]
pub struct InvalidSaveFile {
    pub invariant: &'static str,
    pub detail: String,
}

impl InvalidSaveFile {
    fn new(invariant: &'static str, detail: impl Into<String>) -> Self {
        InvalidSaveFile {
            invariant,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Error)]
pub enum PersistError {
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error(transparent)]
    Invalid(#[from] InvalidSaveFile),
}

pub fn to_json(session: &GameSession) -> String {
    let file = SaveFile {
        version: FORMAT_VERSION,
        mode: session.mode().as_str().to_owned(),
        lead_player: session.lead_player().to_string(),
        stats: session.stats(),
        history: session.history().iter().map(Move::encode).collect(),
        cursor: session.cursor(),
    };
    serde_json::to_string(&file).expect("save file serializes")
}

pub fn from_json(text: &str) -> Result<GameSession, InvalidSaveFile> {
    let file: SaveFile =
        serde_json::from_str(text).map_err(|e| InvalidSaveFile::new("Syntax", e.to_string()))?;
    if file.version != FORMAT_VERSION {
        return Err(InvalidSaveFile::new(
            "Version",
            format!("unsupported version {}, expected {FORMAT_VERSION}", file.version),
        ));
    }
    let mode: Mode = file
        .mode
        .parse()
        .map_err(|e: String| InvalidSaveFile::new("Mode", e))?;
    let lead: Mark = file
        .lead_player
        .parse()
        .map_err(|e: String| InvalidSaveFile::new("LeadPlayerValue", e))?;
    let history = file
        .history
        .iter()
        .map(|t| Move::decode(t))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| InvalidSaveFile::new("MoveTuple", e.to_string()))?;
    GameSession::restore(mode, lead, file.stats, history, file.cursor)
        .map_err(|v| InvalidSaveFile::new(v.name(), v.to_string()))
}

pub fn save(session: &GameSession, path: impl AsRef<Path>) -> Result<(), PersistError> {
    let path = path.as_ref();
    fs::write(path, to_json(session)).map_err(|source| PersistError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn load(path: impl AsRef<Path>) -> Result<GameSession, PersistError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| PersistError::Io {
        path: path.display().to_string(),
        source,
    })?;
    Ok(from_json(&text)?)
}
