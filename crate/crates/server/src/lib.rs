//! HTTP + JSON service for tic-tac-toe game sets.
//!
//! Sessions live in memory, keyed by an opaque id. Every request that
//! touches a session holds that session's lock for its whole duration, so
//! requests to one session are applied one at a time.
//!
//! | Method | Path                       | Body                     |
//! |--------|----------------------------|--------------------------|
//! | POST   | /sessions                  | `{mode, leadPlayer}`     |
//! | GET    | /sessions/{id}             |                          |
//! | POST   | /sessions/{id}/moves       | `{row, col}`             |
//! | POST   | /sessions/{id}/ai-move     |                          |
//! | POST   | /sessions/{id}/navigate    | `{target}`               |
//! | POST   | /sessions/{id}/initialize  |                          |
//! | PUT    | /sessions/{id}/setup       | `{mode, leadPlayer}`     |
//! | POST   | /sessions/{id}/stop        |                          |
//! | POST   | /sessions/{id}/save        | `{path}`                 |
//! | POST   | /sessions/load             | `{path}`                 |

mod error;
mod view;

use std::collections::HashMap;
use std::net::SocketAddr;
use std::sync::{Arc, Mutex, MutexGuard};

use axum::body::Bytes;
use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::routing::{get, post, put};
use axum::{Json, Router};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use thiserror::Error;
use tictactoe::persist;
use tictactoe::{best_move, Controller, GameSession, GameStats, Mark, Mode, Navigation, SessionError};
use tower_http::cors::CorsLayer;

pub use error::ApiError;
pub use view::SessionView;

type Shared<T> = Arc<Mutex<T>>;

#[derive(Debug, Default, Clone)]
pub struct AppState {
    sessions: Shared<HashMap<String, Shared<GameSession>>>,
}

impl AppState {
    pub fn new() -> AppState {
        AppState::default()
    }

    fn insert(&self, session: GameSession) -> SessionView {
        let id = uuid::Uuid::new_v4().simple().to_string();
        let view = SessionView::new(&id, &session);
        lock(&self.sessions).insert(id, Arc::new(Mutex::new(session)));
        view
    }

    fn get(&self, id: &str) -> Result<Shared<GameSession>, ApiError> {
        lock(&self.sessions)
            .get(id)
            .cloned()
            .ok_or_else(|| ApiError::not_found(id))
    }

    /// Runs `f` with the session locked.
    fn with_session<T>(
        &self,
        id: &str,
        f: impl FnOnce(&mut GameSession) -> Result<T, ApiError>,
    ) -> Result<T, ApiError> {
        let slot = self.get(id)?;
        let mut session = lock(&slot);
        f(&mut session)
    }

    /// Runs a mutating operation on a live session and returns its new view.
    fn update(
        &self,
        id: &str,
        f: impl FnOnce(&mut GameSession) -> Result<(), ApiError>,
    ) -> Result<Json<SessionView>, ApiError> {
        self.with_session(id, |session| {
            if session.is_stopped() {
                return Err(SessionError::SessionStopped.into());
            }
            f(session)?;
            Ok(Json(SessionView::new(id, session)))
        })
    }
}

fn lock<T>(m: &Mutex<T>) -> MutexGuard<'_, T> {
    m.lock().unwrap_or_else(|poisoned| poisoned.into_inner())
}

pub fn router(state: AppState) -> Router {
    Router::new()
        .route("/sessions", post(create_session))
        .route("/sessions/load", post(load_session))
        .route("/sessions/{id}", get(get_session))
        .route("/sessions/{id}/moves", post(play_move))
        .route("/sessions/{id}/ai-move", post(ai_move))
        .route("/sessions/{id}/navigate", post(navigate))
        .route("/sessions/{id}/initialize", post(initialize))
        .route("/sessions/{id}/setup", put(set_up))
        .route("/sessions/{id}/stop", post(stop))
        .route("/sessions/{id}/save", post(save))
        .layer(CorsLayer::permissive())
        .with_state(state)
}

#[derive(Debug, Error)]
pub enum ServeError {
    #[error("cannot bind {addr}: {source}")]
    Bind { addr: String, source: std::io::Error },
    #[error("server error: {0}")]
    Io(#[from] std::io::Error),
}

/// Binds `host:port` and serves until the process ends.
pub async fn serve(host: &str, port: u16) -> Result<(), ServeError> {
    let addr = format!("{host}:{port}");
    let listener = tokio::net::TcpListener::bind(&addr)
        .await
        .map_err(|source| ServeError::Bind {
            addr: addr.clone(),
            source,
        })?;
    let local: SocketAddr = listener.local_addr()?;
    tracing::info!("listening on http://{local}");
    axum::serve(listener, router(AppState::new())).await?;
    Ok(())
}

/// Parses a JSON body; an empty body counts as `{}`.
fn parse_body<T: DeserializeOwned>(body: &Bytes) -> Result<T, ApiError> {
    let text: &[u8] = if body.iter().all(u8::is_ascii_whitespace) {
        b"{}"
    } else {
        body
    };
    serde_json::from_slice(text).map_err(|e| ApiError::bad_request(format!("invalid request body: {e}")))
}

#[derive(Debug, Default, Deserialize)]
#[serde(rename_all = "camelCase")]
struct ConfigRequest {
    mode: Option<String>,
    lead_player: Option<String>,
}

impl ConfigRequest {
    fn resolve(&self) -> Result<(Mode, Mark), ApiError> {
        let mode = match &self.mode {
            None => Mode::default(),
            Some(m) => m
                .parse()
                .map_err(|e: String| ApiError::new(StatusCode::BAD_REQUEST, "BadMode", e))?,
        };
        let lead = match &self.lead_player {
            None => Mark::X,
            Some(l) => l
                .parse()
                .map_err(|e: String| ApiError::new(StatusCode::BAD_REQUEST, "BadLeadPlayer", e))?,
        };
        Ok((mode, lead))
    }
}

#[derive(Debug, Deserialize)]
struct MoveRequest {
    row: i64,
    col: i64,
}

#[derive(Debug, Deserialize)]
struct NavigateRequest {
    target: String,
}

#[derive(Debug, Deserialize)]
struct PathRequest {
    path: String,
}

async fn create_session(State(state): State<AppState>, body: Bytes) -> Result<Json<SessionView>, ApiError> {
    let (mode, lead) = parse_body::<ConfigRequest>(&body)?.resolve()?;
    Ok(Json(state.insert(GameSession::new(mode, lead))))
}

async fn get_session(
    State(state): State<AppState>,
    Path(id): Path<String>,
) -> Result<Json<SessionView>, ApiError> {
    state.with_session(&id, |s| Ok(Json(SessionView::new(&id, s))))
}

async fn play_move(
    State(state): State<AppState>,
    Path(id): Path<String>,
    body: Bytes,
) -> Result<Json<SessionView>, ApiError> {
    state.update(&id, |session| {
        let req: MoveRequest = parse_body(&body)?;
        if session.next_controller() == Some(Controller::Computer) && session.at_latest_state() {
            return Err(ApiError::not_human_turn());
        }
        let coord = |v: i64| usize::try_from(v).unwrap_or(usize::MAX);
        session.play_move(coord(req.row), coord(req.col))?;
        Ok(())
    })
}

async fn ai_move(
    State(state): State<AppState>,
    Path(id): Path<String>,
) -> Result<Json<SessionView>, ApiError> {
    state.update(&id, |session| {
        let mark = session.next_player().ok_or(SessionError::GameOver)?;
        if !session.at_latest_state() {
            return Err(SessionError::NotAtLatestState.into());
        }
        if session.controller_of(mark) != Controller::Computer {
            return Err(ApiError::not_computer_turn());
        }
        let choice = best_move(&session.current_board(), mark).map_err(|_| SessionError::GameOver)?;
        session.play_move(choice.row, choice.col)?;
        Ok(())
    })
}

async fn navigate(
    State(state): State<AppState>,
    Path(id): Path<String>,
    body: Bytes,
) -> Result<Json<SessionView>, ApiError> {
    state.update(&id, |session| {
        let req: NavigateRequest = parse_body(&body)?;
        let target: Navigation = req
            .target
            .parse()
            .map_err(|e: String| ApiError::new(StatusCode::BAD_REQUEST, "BadTarget", e))?;
        Ok(session.navigate(target)?)
    })
}

async fn initialize(
    State(state): State<AppState>,
    Path(id): Path<String>,
) -> Result<Json<SessionView>, ApiError> {
    state.update(&id, |session| {
        session.initialize();
        Ok(())
    })
}

async fn set_up(
    State(state): State<AppState>,
    Path(id): Path<String>,
    body: Bytes,
) -> Result<Json<SessionView>, ApiError> {
    state.update(&id, |session| {
        let (mode, lead) = parse_body::<ConfigRequest>(&body)?.resolve()?;
        session.set_up(mode, lead);
        Ok(())
    })
}

async fn stop(State(state): State<AppState>, Path(id): Path<String>) -> Result<Json<GameStats>, ApiError> {
    state.with_session(&id, |session| {
        if session.is_stopped() {
            return Err(SessionError::SessionStopped.into());
        }
        Ok(Json(session.stop()))
    })
}

async fn save(
    State(state): State<AppState>,
    Path(id): Path<String>,
    body: Bytes,
) -> Result<Json<SessionView>, ApiError> {
    state.with_session(&id, |session| {
        let req: PathRequest = parse_body(&body)?;
        persist::save(session, &req.path)?;
        Ok(Json(SessionView::new(&id, session)))
    })
}

async fn load_session(State(state): State<AppState>, body: Bytes) -> Result<Json<SessionView>, ApiError> {
    let req: PathRequest = parse_body(&body)?;
    let session = persist::load(&req.path)?;
    Ok(Json(state.insert(session)))
}
