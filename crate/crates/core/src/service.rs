//! HTTP/JSON service for stepping through serialisations interactively.
//!
//! Frameworks are uploaded once and kept for the life of the process.
//! Sessions pair a framework with a semantics and a current state; each one
//! sits behind its own lock and expires after a period of inactivity.

use std::collections::HashMap;
use std::net::SocketAddr;
use std::path::PathBuf;
use std::sync::{Arc, Mutex, RwLock};
use std::time::{Duration, Instant};

use axum::body::Bytes;
use axum::extract::{Path, Query, State};
use axum::http::StatusCode;
use axum::response::{Html, IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::json;
use tower_http::services::ServeDir;
use uuid::Uuid;

use crate::error::Error;
use crate::framework::Framework;
use crate::initial::{decompose, enumerate_initial_sets};
use crate::io::json::{FrameworkDoc, InitialSetDoc, SequenceDoc};
use crate::io::{self, Format};
use crate::serial::{self, SemanticsSpec, SerialisationState};

pub const DEFAULT_TTL: Duration = Duration::from_secs(3600);

const PLACEHOLDER_UI: &str = "<!doctype html>
<html><head><meta charset=\"utf-8\"><title>saf</title></head>
<body><h1>saf</h1>
<p>No explorer bundle is installed. Start the server with <code>--ui-dir</code> pointing at a built bundle,
or use the JSON API under <code>/api</code>.</p></body></html>
";

#[derive(Debug)]
struct Session {
    framework: Arc<Framework>,
    spec: SemanticsSpec,
    state: SerialisationState,
    undo: Vec<SerialisationState>,
    touched: Instant,
}

pub struct AppState {
    frameworks: RwLock<HashMap<Uuid, Arc<Framework>>>,
    sessions: RwLock<HashMap<Uuid, Arc<Mutex<Session>>>>,
    ttl: Duration,
}

impl AppState {
    pub fn new(ttl: Duration) -> Arc<Self> {
        Arc::new(AppState {
            frameworks: RwLock::default(),
            sessions: RwLock::default(),
            ttl,
        })
    }

    /// Drops sessions idle for longer than the TTL; returns how many.
    pub fn evict_expired(&self, now: Instant) -> usize {
        let mut sessions = self.sessions.write().unwrap();
        let before = sessions.len();
        sessions.retain(|_, s| now.duration_since(s.lock().unwrap().touched) <= self.ttl);
        before - sessions.len()
    }

    pub fn session_count(&self) -> usize {
        self.sessions.read().unwrap().len()
    }

    fn framework(&self, id: &str) -> Result<Arc<Framework>, ApiError> {
        let id = Uuid::parse_str(id).map_err(|_| ApiError::not_found("framework"))?;
        self.frameworks
            .read()
            .unwrap()
            .get(&id)
            .cloned()
            .ok_or_else(|| ApiError::not_found("framework"))
    }

    fn session(&self, id: &str) -> Result<Arc<Mutex<Session>>, ApiError> {
        let id = Uuid::parse_str(id).map_err(|_| ApiError::not_found("session"))?;
        self.sessions
            .read()
            .unwrap()
            .get(&id)
            .cloned()
            .ok_or_else(|| ApiError::not_found("session"))
    }
}

#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    message: String,
}

impl ApiError {
    fn new(status: StatusCode, message: impl Into<String>) -> Self {
        ApiError {
            status,
            message: message.into(),
        }
    }

    fn not_found(what: &str) -> Self {
        Self::new(StatusCode::NOT_FOUND, format!("unknown {what} id"))
    }

    fn bad_request(message: impl Into<String>) -> Self {
        Self::new(StatusCode::BAD_REQUEST, message)
    }

    fn unprocessable(message: impl Into<String>) -> Self {
        Self::new(StatusCode::UNPROCESSABLE_ENTITY, message)
    }
}

impl From<Error> for ApiError {
    fn from(e: Error) -> Self {
        match e {
            Error::NotAdmissible | Error::NotConflictFree | Error::InvalidSelection(_) => {
                ApiError::unprocessable(e.to_string())
            }
            _ => ApiError::bad_request(e.to_string()),
        }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.status, Json(json!({ "error": self.message }))).into_response()
    }
}

/// Request bodies are parsed by hand so that every malformed body is a 400.
fn body<T: DeserializeOwned>(bytes: &Bytes) -> Result<T, ApiError> {
    serde_json::from_slice(bytes).map_err(|e| ApiError::bad_request(format!("malformed body: {e}")))
}

fn semantics(code: &str) -> Result<SemanticsSpec, ApiError> {
    SemanticsSpec::from_code(code).ok_or_else(|| ApiError::bad_request(format!("unknown semantics `{code}`")))
}

#[derive(Deserialize)]
struct UploadRequest {
    format: String,
    content: String,
}

#[derive(Serialize)]
struct UploadResponse {
    id: Uuid,
    args: Vec<String>,
    attacks: Vec<(String, String)>,
}

async fn upload(State(app): State<Arc<AppState>>, bytes: Bytes) -> Result<Response, ApiError> {
    let req: UploadRequest = body(&bytes)?;
    let format: Format = req.format.parse()?;
    let f = io::parse(&req.content, format)?;
    let doc = FrameworkDoc::new(&f);
    let id = Uuid::new_v4();
    app.frameworks.write().unwrap().insert(id, Arc::new(f));
    let resp = UploadResponse {
        id,
        args: doc.arguments,
        attacks: doc.attacks,
    };
    Ok((StatusCode::CREATED, Json(resp)).into_response())
}

async fn initial_sets(
    State(app): State<Arc<AppState>>,
    Path(id): Path<String>,
) -> Result<Json<Vec<InitialSetDoc>>, ApiError> {
    let f = app.framework(&id)?;
    let docs = tokio::task::spawn_blocking(move || {
        enumerate_initial_sets(&f)
            .iter()
            .map(|i| InitialSetDoc::new(&f, i))
            .collect()
    })
    .await
    .map_err(|e| ApiError::new(StatusCode::INTERNAL_SERVER_ERROR, e.to_string()))?;
    Ok(Json(docs))
}

#[derive(Deserialize)]
struct ExtensionsQuery {
    semantics: String,
}

#[derive(Serialize)]
struct ExtensionDoc {
    extension: Vec<String>,
    witness: SequenceDoc,
}

async fn extensions(
    State(app): State<Arc<AppState>>,
    Path(id): Path<String>,
    Query(q): Query<ExtensionsQuery>,
) -> Result<Response, ApiError> {
    let f = app.framework(&id)?;
    let spec = semantics(&q.semantics)?;
    let docs: Vec<ExtensionDoc> = tokio::task::spawn_blocking(move || {
        serial::enumerate_with_witnesses(&f, &spec)
            .iter()
            .map(|w| ExtensionDoc {
                extension: f.labels_of(&w.extension),
                witness: SequenceDoc::new(&f, w),
            })
            .collect()
    })
    .await
    .map_err(|e| ApiError::new(StatusCode::INTERNAL_SERVER_ERROR, e.to_string()))?;
    Ok(Json(json!({ "semantics": spec.label(), "extensions": docs })).into_response())
}

#[derive(Deserialize)]
struct DecomposeRequest {
    extension: Vec<String>,
}

async fn decompose_handler(
    State(app): State<Arc<AppState>>,
    Path(id): Path<String>,
    bytes: Bytes,
) -> Result<Json<SequenceDoc>, ApiError> {
    let f = app.framework(&id)?;
    let req: DecomposeRequest = body(&bytes)?;
    let e = f.set_of(&req.extension)?;
    let seq = decompose(&f, &e)?;
    Ok(Json(SequenceDoc::new(&f, &seq)))
}

#[derive(Deserialize)]
#[serde(rename_all = "camelCase")]
struct SessionRequest {
    framework_id: String,
    semantics: String,
}

#[derive(Serialize)]
struct StateDoc {
    semantics: String,
    remaining: Vec<String>,
    accumulated: Vec<String>,
    choices: Vec<InitialSetDoc>,
    terminal: bool,
    steps: usize,
}

fn state_doc(s: &Session) -> StateDoc {
    let f = &s.framework;
    StateDoc {
        semantics: s.spec.label(),
        remaining: f.labels_of(&s.state.remaining),
        accumulated: f.labels_of(&s.state.accumulated),
        choices: serial::choices(f, &s.state, s.spec.alpha)
            .iter()
            .map(|i| InitialSetDoc::new(f, i))
            .collect(),
        terminal: serial::is_terminal(f, &s.state, s.spec.beta),
        steps: s.state.history.len(),
    }
}

fn check_session(s: &Session) {
    debug_assert_eq!(serial::validate_state(&s.framework, &s.state), Ok(()));
    debug_assert_eq!(s.undo.len(), s.state.history.len());
}

async fn open_session(State(app): State<Arc<AppState>>, bytes: Bytes) -> Result<Response, ApiError> {
    let req: SessionRequest = body(&bytes)?;
    let framework = app.framework(&req.framework_id)?;
    let spec = semantics(&req.semantics)?;
    let session = Session {
        state: serial::init_state(&framework),
        framework,
        spec,
        undo: Vec::new(),
        touched: Instant::now(),
    };
    let doc = state_doc(&session);
    let id = Uuid::new_v4();
    app.sessions
        .write()
        .unwrap()
        .insert(id, Arc::new(Mutex::new(session)));
    Ok((
        StatusCode::CREATED,
        Json(json!({ "sessionId": id, "state": doc })),
    )
        .into_response())
}

async fn get_session(
    State(app): State<Arc<AppState>>,
    Path(id): Path<String>,
) -> Result<Json<StateDoc>, ApiError> {
    let session = app.session(&id)?;
    let mut s = session.lock().unwrap();
    s.touched = Instant::now();
    Ok(Json(state_doc(&s)))
}

#[derive(Deserialize)]
struct StepRequest {
    select: Vec<String>,
}

async fn step_session(
    State(app): State<Arc<AppState>>,
    Path(id): Path<String>,
    bytes: Bytes,
) -> Result<Json<StateDoc>, ApiError> {
    let session = app.session(&id)?;
    let req: StepRequest = body(&bytes)?;
    let mut s = session.lock().unwrap();
    s.touched = Instant::now();
    let selection = s.framework.set_of(&req.select)?;
    let next = serial::step_under(&s.framework, &s.state, &selection, &s.spec)
        .map_err(|e| ApiError::unprocessable(e.to_string()))?;
    let prev = std::mem::replace(&mut s.state, next);
    s.undo.push(prev);
    check_session(&s);
    Ok(Json(state_doc(&s)))
}

async fn undo_session(
    State(app): State<Arc<AppState>>,
    Path(id): Path<String>,
) -> Result<Json<StateDoc>, ApiError> {
    let session = app.session(&id)?;
    let mut s = session.lock().unwrap();
    s.touched = Instant::now();
    let prev = s
        .undo
        .pop()
        .ok_or_else(|| ApiError::new(StatusCode::CONFLICT, "already at the initial state"))?;
    s.state = prev;
    check_session(&s);
    Ok(Json(state_doc(&s)))
}

async fn session_sequence(
    State(app): State<Arc<AppState>>,
    Path(id): Path<String>,
) -> Result<Json<SequenceDoc>, ApiError> {
    let session = app.session(&id)?;
    let mut s = session.lock().unwrap();
    s.touched = Instant::now();
    Ok(Json(SequenceDoc::new(&s.framework, &s.state.to_sequence(s.spec))))
}

/// The API routes, plus the explorer bundle from `ui_dir` (or a placeholder
/// page) at `/`.
pub fn router(app: Arc<AppState>, ui_dir: Option<PathBuf>) -> Router {
    let api = Router::new()
        .route("/api/frameworks", post(upload))
        .route("/api/frameworks/{id}/initial-sets", get(initial_sets))
        .route("/api/frameworks/{id}/extensions", get(extensions))
        .route("/api/frameworks/{id}/decompose", post(decompose_handler))
        .route("/api/sessions", post(open_session))
        .route("/api/sessions/{id}", get(get_session))
        .route("/api/sessions/{id}/step", post(step_session))
        .route("/api/sessions/{id}/undo", post(undo_session))
        .route("/api/sessions/{id}/sequence", get(session_sequence))
        .with_state(app);
    match ui_dir {
        Some(dir) => api.fallback_service(ServeDir::new(dir)),
        None => api.route("/", get(|| async { Html(PLACEHOLDER_UI) })),
    }
}

/// Serves until the process is stopped, evicting idle sessions once a minute.
pub async fn serve(addr: SocketAddr, ui_dir: Option<PathBuf>, ttl: Duration) -> std::io::Result<()> {
    let app = AppState::new(ttl);
    let sweeper = Arc::clone(&app);
    tokio::spawn(async move {
        let mut tick = tokio::time::interval(Duration::from_secs(60));
        loop {
            tick.tick().await;
            sweeper.evict_expired(Instant::now());
        }
    });
    let listener = tokio::net::TcpListener::bind(addr).await?;
    eprintln!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router(app, ui_dir)).await
}
