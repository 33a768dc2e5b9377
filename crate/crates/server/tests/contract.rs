use axum::body::Body;
use axum::http::{Method, Request, StatusCode};
use axum::Router;
use http_body_util::BodyExt;
use serde_json::{json, Value};
use tictactoe_server::{router, AppState, SessionView};
use tower::ServiceExt;

async fn call(app: &Router, method: Method, uri: &str, body: Option<Value>) -> (StatusCode, Value) {
    let req = Request::builder()
        .method(method)
        .uri(uri)
        .header("content-type", "application/json")
        .body(body.map_or_else(Body::empty, |b| Body::from(b.to_string())))
        .unwrap();
    let resp = app.clone().oneshot(req).await.unwrap();
    let status = resp.status();
    let bytes = resp.into_body().collect().await.unwrap().to_bytes();
    let value = if bytes.is_empty() {
        Value::Null
    } else {
        serde_json::from_slice(&bytes).unwrap()
    };
    (status, value)
}

/// Asserts a 200 with a view that passes every invariant.
fn view(status: StatusCode, body: Value) -> SessionView {
    assert_eq!(status, StatusCode::OK, "{body}");
    let view: SessionView = serde_json::from_value(body).unwrap();
    view.validate().unwrap();
    view
}

fn error(status: StatusCode, body: &Value, expected: StatusCode, code: &str) {
    assert_eq!(status, expected, "{body}");
    assert_eq!(body["code"], code, "{body}");
    assert!(body["message"].is_string());
}

async fn create(app: &Router, mode: &str, lead: &str) -> SessionView {
    let (s, b) = call(
        app,
        Method::POST,
        "/sessions",
        Some(json!({"mode": mode, "leadPlayer": lead})),
    )
    .await;
    view(s, b)
}

async fn play(app: &Router, id: &str, row: i64, col: i64) -> (StatusCode, Value) {
    call(
        app,
        Method::POST,
        &format!("/sessions/{id}/moves"),
        Some(json!({"row": row, "col": col})),
    )
    .await
}

async fn nav(app: &Router, id: &str, target: &str) -> (StatusCode, Value) {
    call(
        app,
        Method::POST,
        &format!("/sessions/{id}/navigate"),
        Some(json!({ "target": target })),
    )
    .await
}

#[tokio::test]
async fn create_sessions() {
    let app = router(AppState::new());
    let v = create(&app, "H2H", "x").await;
    assert_eq!(v.board, vec![""; 9]);
    assert_eq!(v.next_player.as_deref(), Some("x"));
    assert_eq!((v.status.as_str(), v.result.as_str()), ("Continue", "c"));

    let (s, b) = call(&app, Method::POST, "/sessions", None).await;
    let v = view(s, b);
    assert_eq!((v.mode.as_str(), v.lead_player.as_str()), ("H2H", "x"));

    let (s, b) = call(&app, Method::POST, "/sessions", Some(json!({}))).await;
    assert_eq!(view(s, b).mode, "H2H");

    let (s, b) = call(
        &app,
        Method::POST,
        "/sessions",
        Some(json!({"mode": "Q2Q", "leadPlayer": "x"})),
    )
    .await;
    error(s, &b, StatusCode::BAD_REQUEST, "BadMode");
    let (s, b) = call(
        &app,
        Method::POST,
        "/sessions",
        Some(json!({"mode": "H2H", "leadPlayer": "z"})),
    )
    .await;
    error(s, &b, StatusCode::BAD_REQUEST, "BadLeadPlayer");

    let req = Request::builder()
        .method(Method::POST)
        .uri("/sessions")
        .body(Body::from("{oops"))
        .unwrap();
    let resp = app.clone().oneshot(req).await.unwrap();
    assert_eq!(resp.status(), StatusCode::BAD_REQUEST);
}

#[tokio::test]
async fn unknown_ids_are_404() {
    let app = router(AppState::new());
    let (s, b) = call(&app, Method::GET, "/sessions/nope", None).await;
    error(s, &b, StatusCode::NOT_FOUND, "SessionNotFound");
    for path in ["moves", "ai-move", "navigate", "initialize", "stop", "save"] {
        let body = match path {
            "moves" => Some(json!({"row": 0, "col": 0})),
            "navigate" => Some(json!({"target": "first"})),
            "save" => Some(json!({"path": "/tmp/never-written.json"})),
            _ => None,
        };
        let (s, b) = call(&app, Method::POST, &format!("/sessions/nope/{path}"), body).await;
        error(s, &b, StatusCode::NOT_FOUND, "SessionNotFound");
    }
    let (s, b) = call(
        &app,
        Method::PUT,
        "/sessions/nope/setup",
        Some(json!({"mode": "C2C"})),
    )
    .await;
    error(s, &b, StatusCode::NOT_FOUND, "SessionNotFound");
}

#[tokio::test]
async fn moves_and_move_errors() {
    let app = router(AppState::new());
    let id = create(&app, "H2H", "x").await.id;
    let (s, b) = play(&app, &id, 1, 1).await;
    let v = view(s, b);
    assert_eq!(v.board[4], "x");
    assert_eq!(v.history, ["x11"]);

    let (s, b) = play(&app, &id, 1, 1).await;
    error(s, &b, StatusCode::CONFLICT, "CellOccupied");
    let (s, b) = play(&app, &id, 3, 0).await;
    error(s, &b, StatusCode::BAD_REQUEST, "OutOfRange");
    let (s, b) = play(&app, &id, -1, 0).await;
    error(s, &b, StatusCode::BAD_REQUEST, "OutOfRange");
    let (s, b) = call(
        &app,
        Method::POST,
        &format!("/sessions/{id}/moves"),
        Some(json!({"row": 1})),
    )
    .await;
    error(s, &b, StatusCode::BAD_REQUEST, "BadRequest");

    let (s, b) = nav(&app, &id, "prev").await;
    assert_eq!(view(s, b).cursor, 0);
    let (s, b) = play(&app, &id, 0, 0).await;
    error(s, &b, StatusCode::CONFLICT, "NotAtLatestState");

    // x: (1,1) (0,0) (2,2) against o: (0,1) (0,2)
    nav(&app, &id, "last").await;
    for (r, c) in [(0, 1), (0, 0), (0, 2), (2, 2)] {
        let (s, b) = play(&app, &id, r, c).await;
        view(s, b);
    }
    let (s, b) = call(&app, Method::GET, &format!("/sessions/{id}"), None).await;
    let v = view(s, b);
    assert_eq!((v.result.as_str(), v.status.as_str()), ("x", "x Won"));
    assert_eq!(v.next_player, None);
    assert_eq!(v.stats.x_win_count, 1);
    let (s, b) = play(&app, &id, 2, 0).await;
    error(s, &b, StatusCode::CONFLICT, "GameOver");
}

#[tokio::test]
async fn seat_control() {
    let app = router(AppState::new());
    let id = create(&app, "H2C", "x").await.id;
    let (s, b) = call(&app, Method::POST, &format!("/sessions/{id}/ai-move"), None).await;
    error(s, &b, StatusCode::CONFLICT, "NotComputerTurn");
    view_ok(play(&app, &id, 1, 1).await);
    let (s, b) = play(&app, &id, 0, 0).await;
    error(s, &b, StatusCode::CONFLICT, "NotHumanTurn");
    let (s, b) = call(&app, Method::POST, &format!("/sessions/{id}/ai-move"), None).await;
    let v = view(s, b);
    assert_eq!(v.moves_count, 2);
    assert_eq!(v.next_player.as_deref(), Some("x"));

    let h2h = create(&app, "H2H", "o").await.id;
    let (s, b) = call(&app, Method::POST, &format!("/sessions/{h2h}/ai-move"), None).await;
    error(s, &b, StatusCode::CONFLICT, "NotComputerTurn");
}

fn view_ok((s, b): (StatusCode, Value)) -> SessionView {
    view(s, b)
}

#[tokio::test]
async fn computer_self_play_draws_in_nine_steps() {
    let app = router(AppState::new());
    let id = create(&app, "C2C", "x").await.id;
    let uri = format!("/sessions/{id}/ai-move");
    let first = view_ok(call(&app, Method::POST, &uri, None).await);
    assert_eq!(first.moves_count, 1);
    assert_eq!(first.board.iter().filter(|c| !c.is_empty()).count(), 1);
    let mut last = first;
    for _ in 1..9 {
        last = view_ok(call(&app, Method::POST, &uri, None).await);
    }
    assert_eq!((last.status.as_str(), last.moves_count), ("Draw", 9));
    assert_eq!(last.stats.draw_count, 1);
    let (s, b) = call(&app, Method::POST, &uri, None).await;
    error(s, &b, StatusCode::CONFLICT, "GameOver");

    view_ok(nav(&app, &id, "prev").await);
    view_ok(call(&app, Method::POST, &format!("/sessions/{id}/initialize"), None).await);
    view_ok(call(&app, Method::POST, &uri, None).await);
    view_ok(nav(&app, &id, "first").await);
    let (s, b) = call(&app, Method::POST, &uri, None).await;
    error(s, &b, StatusCode::CONFLICT, "NotAtLatestState");
}

#[tokio::test]
async fn navigation() {
    let app = router(AppState::new());
    let id = create(&app, "H2H", "x").await.id;
    let (s, b) = nav(&app, &id, "prev").await;
    error(s, &b, StatusCode::CONFLICT, "AtFirstState");
    let (s, b) = nav(&app, &id, "next").await;
    error(s, &b, StatusCode::CONFLICT, "AtLastState");
    let (s, b) = nav(&app, &id, "sideways").await;
    error(s, &b, StatusCode::BAD_REQUEST, "BadTarget");

    for (r, c) in [(0, 0), (1, 1), (2, 2)] {
        view_ok(play(&app, &id, r, c).await);
    }
    let latest = view_ok(nav(&app, &id, "last").await);
    let first = view_ok(nav(&app, &id, "first").await);
    assert_eq!((first.cursor, first.board.clone()), (0, vec![String::new(); 9]));
    assert_eq!(first.stats, latest.stats);
    let v = view_ok(nav(&app, &id, "next").await);
    assert_eq!(v.board[0], "x");
    let v = view_ok(nav(&app, &id, "last").await);
    assert_eq!(v.cursor, v.moves_count);
    assert_eq!(v, latest);
}

#[tokio::test]
async fn initialize_setup_and_stop() {
    let app = router(AppState::new());
    let id = create(&app, "H2H", "x").await.id;
    for (r, c) in [(0, 0), (1, 0), (0, 1), (1, 1), (0, 2)] {
        view_ok(play(&app, &id, r, c).await);
    }
    view_ok(call(&app, Method::POST, &format!("/sessions/{id}/initialize"), None).await);
    view_ok(play(&app, &id, 1, 1).await);
    let v = view_ok(call(&app, Method::POST, &format!("/sessions/{id}/initialize"), None).await);
    assert_eq!(v.board, vec![""; 9]);
    assert_eq!(v.stats.x_win_count, 1);

    view_ok(play(&app, &id, 2, 2).await);
    let (s, b) = call(
        &app,
        Method::PUT,
        &format!("/sessions/{id}/setup"),
        Some(json!({"mode": "C2C", "leadPlayer": "o"})),
    )
    .await;
    let v = view(s, b);
    assert_eq!(
        (v.mode.as_str(), v.lead_player.as_str(), v.moves_count),
        ("C2C", "o", 0)
    );
    assert_eq!(v.stats.x_win_count, 1);
    assert_eq!(v.next_player.as_deref(), Some("o"));
    let (s, b) = call(
        &app,
        Method::PUT,
        &format!("/sessions/{id}/setup"),
        Some(json!({"mode": "X2X"})),
    )
    .await;
    error(s, &b, StatusCode::BAD_REQUEST, "BadMode");

    let (s, b) = call(&app, Method::POST, &format!("/sessions/{id}/stop"), None).await;
    assert_eq!(s, StatusCode::OK);
    assert_eq!(b, json!({"xWinCount": 1, "oWinCount": 0, "drawCount": 0}));

    let (s, b) = play(&app, &id, 0, 0).await;
    error(s, &b, StatusCode::GONE, "SessionStopped");
    let (s, b) = call(&app, Method::POST, &format!("/sessions/{id}/ai-move"), None).await;
    error(s, &b, StatusCode::GONE, "SessionStopped");
    let (s, b) = call(&app, Method::POST, &format!("/sessions/{id}/initialize"), None).await;
    error(s, &b, StatusCode::GONE, "SessionStopped");
    let (s, b) = nav(&app, &id, "first").await;
    error(s, &b, StatusCode::GONE, "SessionStopped");
    let (s, b) = call(&app, Method::POST, &format!("/sessions/{id}/stop"), None).await;
    error(s, &b, StatusCode::GONE, "SessionStopped");
    // still readable
    view_ok(call(&app, Method::GET, &format!("/sessions/{id}"), None).await);
}

#[tokio::test]
async fn save_and_load() {
    let dir = tempfile::tempdir().unwrap();
    let app = router(AppState::new());
    let id = create(&app, "H2C", "x").await.id;
    view_ok(play(&app, &id, 1, 1).await);
    view_ok(call(&app, Method::POST, &format!("/sessions/{id}/ai-move"), None).await);
    let saved = view_ok(nav(&app, &id, "prev").await);

    let path = dir.path().join("set.json");
    let p = path.to_str().unwrap();
    view_ok(
        call(
            &app,
            Method::POST,
            &format!("/sessions/{id}/save"),
            Some(json!({ "path": p })),
        )
        .await,
    );
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(
        text.starts_with(r#"{"version":1,"mode":"H2C","leadPlayer":"x","stats":{"#),
        "{text}"
    );

    let loaded = view_ok(call(&app, Method::POST, "/sessions/load", Some(json!({ "path": p }))).await);
    assert_ne!(loaded.id, saved.id);
    assert_eq!(
        SessionView {
            id: saved.id.clone(),
            ..loaded
        },
        saved
    );

    let bad = dir.path().join("bad.json");
    let bp = bad.to_str().unwrap();
    let write = |body: &str| std::fs::write(&bad, body).unwrap();
    let base =
        r#""version":1,"mode":"H2H","leadPlayer":"x","stats":{"xWinCount":0,"oWinCount":0,"drawCount":0}"#;
    write(&format!(r#"{{{base},"history":["x00","x01"],"cursor":2}}"#));
    let (s, b) = call(&app, Method::POST, "/sessions/load", Some(json!({ "path": bp }))).await;
    error(s, &b, StatusCode::UNPROCESSABLE_ENTITY, "InvalidSaveFile");
    assert!(b["message"].as_str().unwrap().contains("Alternation"), "{b}");
    write(&format!(r#"{{{base},"history":["x00","o01","x02"],"cursor":5}}"#));
    let (s, b) = call(&app, Method::POST, "/sessions/load", Some(json!({ "path": bp }))).await;
    error(s, &b, StatusCode::UNPROCESSABLE_ENTITY, "InvalidSaveFile");
    assert!(b["message"].as_str().unwrap().contains("CursorBounds"), "{b}");

    let missing = dir.path().join("missing.json");
    let (s, b) = call(
        &app,
        Method::POST,
        "/sessions/load",
        Some(json!({ "path": missing.to_str().unwrap() })),
    )
    .await;
    error(s, &b, StatusCode::NOT_FOUND, "FileNotFound");
}

#[tokio::test(flavor = "multi_thread", worker_threads = 4)]
async fn concurrent_moves_for_one_ply() {
    let app = router(AppState::new());
    for round in 0..10 {
        let id = create(&app, "H2H", "x").await.id;
        let mut tasks = Vec::new();
        for k in 0..16 {
            let app = app.clone();
            let id = id.clone();
            let (r, c) = if round % 2 == 0 {
                (1, 1)
            } else {
                (k % 3, (k / 3) % 3)
            };
            tasks.push(tokio::spawn(async move { play(&app, &id, r, c).await }));
        }
        let mut ok = 0;
        for t in tasks {
            let (s, b) = t.await.unwrap();
            if s == StatusCode::OK {
                ok += 1;
                view(s, b);
            } else {
                assert_eq!(s, StatusCode::CONFLICT, "{b}");
            }
        }
        let v = view_ok(call(&app, Method::GET, &format!("/sessions/{id}"), None).await);
        // distinct cells may all succeed, but each as its own ply
        assert_eq!(v.moves_count, ok);
        if round % 2 == 0 {
            assert_eq!(ok, 1);
        }
    }
}
