//! JSON-over-HTTP front end for [`Session`]s.
//!
//! | route                       | body                          |
//! |-----------------------------|-------------------------------|
//! | `POST /session`             | `{"matrix": ..}` or `{"triangulation": ..}` |
//! | `POST /session/{id}/mutate` | `{"k": 1}`                    |
//! | `POST /session/{id}/flip`   | `{"diagonal": [0, 3]}`        |
//! | `POST /session/{id}/undo`   | none                          |
//! | `GET  /session/{id}`        | none                          |
//!
//! Every successful call answers with the session view. Errors are
//! `{"error": message}` with status 400 (bad body), 404 (unknown session) or
//! 409 (illegal move).

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex};

use axum::body::Bytes;
use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use mutwb_core::{Diagonal, ExchangeMatrix, Triangulation};
use serde::de::DeserializeOwned;
use serde::Deserialize;

use crate::session::{Seed, Session, SessionView};

#[derive(Default)]
pub struct Store {
    next_id: AtomicU64,
    sessions: Mutex<HashMap<u64, Arc<Mutex<Session>>>>,
}

impl Store {
    fn insert(&self, session: Session) -> (u64, SessionView) {
        let id = self.next_id.fetch_add(1, Ordering::Relaxed) + 1;
        let view = session.view(id);
        self.sessions
            .lock()
            .expect("session table lock")
            .insert(id, Arc::new(Mutex::new(session)));
        (id, view)
    }

    fn get(&self, id: &str) -> Result<(u64, Arc<Mutex<Session>>), ApiError> {
        let missing = || ApiError::NotFound(format!("no session {id:?}"));
        let n: u64 = id.parse().map_err(|_| missing())?;
        let table = self.sessions.lock().expect("session table lock");
        table
            .get(&n)
            .map(|s| (n, Arc::clone(s)))
            .ok_or_else(missing)
    }
}

#[derive(Debug)]
pub enum ApiError {
    BadRequest(String),
    NotFound(String),
    Conflict(String),
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let (status, msg) = match self {
            ApiError::BadRequest(m) => (StatusCode::BAD_REQUEST, m),
            ApiError::NotFound(m) => (StatusCode::NOT_FOUND, m),
            ApiError::Conflict(m) => (StatusCode::CONFLICT, m),
        };
        (status, Json(serde_json::json!({ "error": msg }))).into_response()
    }
}

fn parse<T: DeserializeOwned>(body: &Bytes) -> Result<T, ApiError> {
    serde_json::from_slice(body).map_err(|e| ApiError::BadRequest(format!("invalid body: {e}")))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CreateBody {
    matrix: Option<ExchangeMatrix>,
    triangulation: Option<Triangulation>,
}

#[derive(Deserialize)]
struct MutateBody {
    k: usize,
}

#[derive(Deserialize)]
struct FlipBody {
    diagonal: Diagonal,
}

type Shared = Arc<Store>;

pub fn router() -> Router {
    router_with(Arc::new(Store::default()))
}

pub fn router_with(store: Shared) -> Router {
    Router::new()
        .route("/session", post(create))
        .route("/session/{id}", get(show))
        .route("/session/{id}/mutate", post(mutate))
        .route("/session/{id}/flip", post(flip))
        .route("/session/{id}/undo", post(undo))
        .with_state(store)
}

async fn create(State(store): State<Shared>, body: Bytes) -> Result<Response, ApiError> {
    let seed = match parse::<CreateBody>(&body)? {
        CreateBody {
            matrix: Some(b),
            triangulation: None,
        } => Seed::Matrix(b),
        CreateBody {
            matrix: None,
            triangulation: Some(t),
        } => Seed::Triangulation(t),
        _ => {
            return Err(ApiError::BadRequest(
                "expected exactly one of \"matrix\" or \"triangulation\"".into(),
            ))
        }
    };
    let (_, view) = store.insert(Session::new(seed));
    Ok((StatusCode::CREATED, Json(view)).into_response())
}

async fn show(
    State(store): State<Shared>,
    Path(id): Path<String>,
) -> Result<Json<SessionView>, ApiError> {
    let (n, session) = store.get(&id)?;
    let view = session.lock().expect("session lock").view(n);
    Ok(Json(view))
}

fn with_session(
    store: &Store,
    id: &str,
    op: impl FnOnce(&mut Session) -> Result<(), ApiError>,
) -> Result<Json<SessionView>, ApiError> {
    let (n, session) = store.get(id)?;
    let mut s = session.lock().expect("session lock");
    op(&mut s)?;
    Ok(Json(s.view(n)))
}

async fn mutate(
    State(store): State<Shared>,
    Path(id): Path<String>,
    body: Bytes,
) -> Result<Json<SessionView>, ApiError> {
    store.get(&id)?;
    let MutateBody { k } = parse(&body)?;
    with_session(&store, &id, |s| {
        s.mutate(k).map_err(|e| ApiError::Conflict(e.to_string()))
    })
}

async fn flip(
    State(store): State<Shared>,
    Path(id): Path<String>,
    body: Bytes,
) -> Result<Json<SessionView>, ApiError> {
    store.get(&id)?;
    let FlipBody { diagonal } = parse(&body)?;
    with_session(&store, &id, |s| {
        s.flip(diagonal)
            .map_err(|e| ApiError::Conflict(e.to_string()))
    })
}

async fn undo(
    State(store): State<Shared>,
    Path(id): Path<String>,
) -> Result<Json<SessionView>, ApiError> {
    with_session(&store, &id, |s| {
        s.undo()
            .map(|_| ())
            .ok_or_else(|| ApiError::Conflict("nothing to undo".into()))
    })
}

/// Serves until the process is stopped.
pub async fn serve(listener: tokio::net::TcpListener) -> std::io::Result<()> {
    axum::serve(listener, router()).await
}
