use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::Json;
use serde::Serialize;
use tictactoe::persist::PersistError;
use tictactoe::{RulesError, SessionError};

/// An error response: HTTP status plus a machine-readable code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApiError {
    pub status: StatusCode,
    pub code: &'static str,
    pub message: String,
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    code: &'a str,
    message: &'a str,
}

impl ApiError {
    pub fn new(status: StatusCode, code: &'static str, message: impl Into<String>) -> Self {
        ApiError {
            status,
            code,
            message: message.into(),
        }
    }

    pub fn not_found(id: &str) -> Self {
        ApiError::new(
            StatusCode::NOT_FOUND,
            "SessionNotFound",
            format!("no session with id {id:?}"),
        )
    }

    pub fn bad_request(message: impl Into<String>) -> Self {
        ApiError::new(StatusCode::BAD_REQUEST, "BadRequest", message)
    }

    pub fn not_human_turn() -> Self {
        ApiError::new(
            StatusCode::CONFLICT,
            "NotHumanTurn",
            "the computer controls the side to move",
        )
    }

    pub fn not_computer_turn() -> Self {
        ApiError::new(
            StatusCode::CONFLICT,
            "NotComputerTurn",
            "a human controls the side to move",
        )
    }
}

impl From<SessionError> for ApiError {
    fn from(e: SessionError) -> Self {
        let status = match &e {
            SessionError::SessionStopped => StatusCode::GONE,
            SessionError::Rules(RulesError::OutOfRange { .. } | RulesError::MalformedTuple(_)) => {
                StatusCode::BAD_REQUEST
            }
            SessionError::GameOver
            | SessionError::NotAtLatestState
            | SessionError::AtFirstState
            | SessionError::AtLastState
            | SessionError::Rules(RulesError::CellOccupied { .. }) => StatusCode::CONFLICT,
        };
        ApiError::new(status, e.code(), e.to_string())
    }
}

impl From<PersistError> for ApiError {
    fn from(e: PersistError) -> Self {
        match e {
            PersistError::Invalid(invalid) => ApiError::new(
                StatusCode::UNPROCESSABLE_ENTITY,
                "InvalidSaveFile",
                invalid.to_string(),
            ),
            PersistError::Io { ref source, .. } if source.kind() == std::io::ErrorKind::NotFound => {
                ApiError::new(StatusCode::NOT_FOUND, "FileNotFound", e.to_string())
            }
            PersistError::Io { .. } => ApiError::new(StatusCode::INTERNAL_SERVER_ERROR, "Io", e.to_string()),
        }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let body = ErrorBody {
            code: self.code,
            message: &self.message,
        };
        (self.status, Json(body)).into_response()
    }
}
