//! Local JSON-over-HTTP service.
//!
//! | method | path | body |
//! |---|---|---|
//! | POST | `/session` | seed document (generalized or LP) |
//! | GET | `/session/{id}` | |
//! | POST | `/session/{id}/mutate` | `{"direction": k}` |
//! | POST | `/session/{id}/undo` | |
//! | GET | `/session/{id}/classgroup` | optional `?mode=rational\|closed` |
//! | POST | `/realize` | `{"free_rank": r, "torsion": [..]}` |
//!
//! Errors are 422 with the same payload the command line prints, 404 for an
//! unknown session and 500 for internal failures.

use std::collections::HashMap;
use std::net::SocketAddr;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex};

use axum::extract::{Path, Query, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::classgroup::{unmet_preconditions, ClassGroupOptions, FieldMode};
use crate::error::{Error, Result};
use crate::exactmath::LaurentPoly;
use crate::genseed::{RationalExpression, TrackedSeed};
use crate::io::{self, AnySeed};
use crate::lpalgebra::{lp_step, LPSeed};
use crate::report;

#[derive(Debug, Clone)]
enum SeedState {
    Generalized(TrackedSeed),
    Lp {
        seed: LPSeed,
        cluster: Vec<RationalExpression>,
    },
}

impl SeedState {
    fn initial(s: AnySeed) -> Self {
        match s {
            AnySeed::Generalized(s) => SeedState::Generalized(TrackedSeed::initial(&s)),
            AnySeed::Lp(s) => {
                let cluster = (0..s.n).map(|v| RationalExpression::var(s.n, v)).collect();
                SeedState::Lp { seed: s, cluster }
            }
        }
    }

    fn step(&self, k: usize) -> Result<Self> {
        match self {
            SeedState::Generalized(t) => Ok(SeedState::Generalized(t.step(k)?)),
            SeedState::Lp { seed, cluster } => {
                let (seed, cluster) = lp_step(seed, cluster, k)?;
                Ok(SeedState::Lp { seed, cluster })
            }
        }
    }
}

#[derive(Debug)]
struct Session {
    id: u64,
    initial: SeedState,
    current: SeedState,
    history: Vec<usize>,
}

impl Session {
    fn view(&self) -> Value {
        match &self.current {
            SeedState::Generalized(t) => {
                let s = &t.seed;
                let opts = ClassGroupOptions {
                    mode: report::default_mode(s.ring),
                    allow_non_acyclic: false,
                };
                json!({
                    "id": self.id,
                    "kind": "generalized",
                    "seed": io::seed_to_value(s),
                    "history": self.history,
                    "graph": report::graph_json(s),
                    "expressions": report::expressions_json(&t.cluster, &initial_names(self)),
                    "exchange_polynomials": report::exchange_polys_json(s)["exchange_polynomials"],
                    "acyclic": s.is_acyclic(),
                    "coprime": s.is_coprime(),
                    "class_group": class_group_payload(self, opts),
                })
            }
            SeedState::Lp { seed, cluster } => json!({
                "id": self.id,
                "kind": "lp",
                "seed": io::lp_seed_to_value(seed),
                "history": self.history,
                "graph": lp_graph(seed),
                "expressions": report::expressions_json(cluster, &initial_names(self)),
                "exchange_polynomials": seed.f.iter().map(|f| f.to_string_with(&seed.names)).collect::<Vec<_>>(),
                "exchange_laurent": report::exchange_laurent_json(seed).unwrap_or(Value::Null),
                "class_group": class_group_payload(self, FieldMode::Rational.into()),
            }),
        }
    }
}

/// Expressions are written in the initial cluster, whose names are the
/// initial seed's.
fn initial_names(s: &Session) -> Vec<String> {
    match &s.initial {
        SeedState::Generalized(t) => t.seed.names.clone(),
        SeedState::Lp { seed, .. } => seed.names.clone(),
    }
}

/// Edge `i -> j` when `F_j` involves `x_i`.
fn lp_graph(s: &LPSeed) -> Value {
    let edges: Vec<[usize; 2]> = (0..s.n)
        .flat_map(|j| {
            let f: &LaurentPoly = &s.f[j];
            (0..s.n).filter(move |&i| f.involves(i)).map(move |i| [i + 1, j + 1])
        })
        .collect();
    json!({ "vertices": s.n, "edges": edges })
}

fn class_group_payload(s: &Session, opts: ClassGroupOptions) -> Value {
    let SeedState::Generalized(t) = &s.current else {
        return json!({ "status": "preconditions-not-met", "unmet": ["generalized-seed"] });
    };
    let unmet = unmet_preconditions(&t.seed, opts);
    if !unmet.is_empty() {
        return json!({ "status": "preconditions-not-met", "unmet": unmet });
    }
    match report::class_group_json(&t.seed, opts) {
        Ok(v) => v,
        Err(e) => report::error_json(&e),
    }
}

struct AppState {
    sessions: Mutex<HashMap<u64, Arc<tokio::sync::Mutex<Session>>>>,
    next_id: AtomicU64,
}

type Shared = Arc<AppState>;

enum ApiError {
    NotFound(String),
    Math(Error),
}

impl From<Error> for ApiError {
    fn from(e: Error) -> Self {
        ApiError::Math(e)
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        match self {
            ApiError::NotFound(id) => (
                StatusCode::NOT_FOUND,
                Json(json!({ "error": "not-found", "message": format!("unknown session {id}") })),
            )
                .into_response(),
            ApiError::Math(e) => {
                let status = if report::exit_code(&e) == 1 {
                    StatusCode::INTERNAL_SERVER_ERROR
                } else {
                    StatusCode::UNPROCESSABLE_ENTITY
                };
                (status, Json(report::error_json(&e))).into_response()
            }
        }
    }
}

type ApiResult = std::result::Result<Json<Value>, ApiError>;

fn session(state: &AppState, id: &str) -> std::result::Result<Arc<tokio::sync::Mutex<Session>>, ApiError> {
    let key: u64 = id.parse().map_err(|_| ApiError::NotFound(id.to_string()))?;
    state
        .sessions
        .lock()
        .expect("session table poisoned")
        .get(&key)
        .cloned()
        .ok_or_else(|| ApiError::NotFound(id.to_string()))
}

fn parse_body<T: serde::de::DeserializeOwned>(body: &str) -> Result<T> {
    serde_json::from_str(body).map_err(io::document_error)
}

async fn create(State(state): State<Shared>, body: String) -> ApiResult {
    let seed = io::parse_any_seed(&body)?;
    let id = state.next_id.fetch_add(1, Ordering::Relaxed);
    let initial = SeedState::initial(seed);
    let s = Session {
        id,
        current: initial.clone(),
        initial,
        history: Vec::new(),
    };
    let view = s.view();
    state
        .sessions
        .lock()
        .expect("session table poisoned")
        .insert(id, Arc::new(tokio::sync::Mutex::new(s)));
    Ok(Json(view))
}

async fn show(State(state): State<Shared>, Path(id): Path<String>) -> ApiResult {
    let s = session(&state, &id)?;
    let s = s.lock().await;
    Ok(Json(s.view()))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MutateBody {
    direction: usize,
}

async fn mutate(State(state): State<Shared>, Path(id): Path<String>, body: String) -> ApiResult {
    let s = session(&state, &id)?;
    let mut s = s.lock().await;
    let MutateBody { direction } = parse_body(&body)?;
    s.current = s.current.step(direction)?;
    s.history.push(direction);
    Ok(Json(s.view()))
}

async fn undo(State(state): State<Shared>, Path(id): Path<String>) -> ApiResult {
    let s = session(&state, &id)?;
    let mut s = s.lock().await;
    if s.history.is_empty() {
        return Err(Error::Precondition("history-nonempty".into()).into());
    }
    s.history.pop();
    // Replay from the initial seed rather than inverting the last step.
    let mut cur = s.initial.clone();
    for &k in &s.history {
        cur = cur.step(k)?;
    }
    s.current = cur;
    Ok(Json(s.view()))
}

#[derive(Deserialize)]
struct ModeQuery {
    mode: Option<String>,
}

async fn classgroup(
    State(state): State<Shared>,
    Path(id): Path<String>,
    Query(q): Query<ModeQuery>,
) -> ApiResult {
    let s = session(&state, &id)?;
    let s = s.lock().await;
    let mode = match (q.mode.as_deref(), &s.current) {
        (Some("rational"), _) => FieldMode::Rational,
        (Some("closed"), _) => FieldMode::AlgebraicallyClosed,
        (Some(other), _) => return Err(Error::Document(format!("mode: unknown value {other:?}")).into()),
        (None, SeedState::Generalized(t)) => report::default_mode(t.seed.ring),
        (None, SeedState::Lp { .. }) => FieldMode::Rational,
    };
    Ok(Json(class_group_payload(&s, mode.into())))
}

async fn realize(body: String) -> ApiResult {
    let doc: io::GroupDocument = parse_body(&body)?;
    let g = crate::realize::AbelianGroupSpec::new(doc.free_rank, doc.torsion)?;
    Ok(Json(report::realize_json(&g)?))
}

/// The service routes, with a fresh session table.
pub fn router() -> Router {
    let state = Arc::new(AppState {
        sessions: Mutex::new(HashMap::new()),
        next_id: AtomicU64::new(1),
    });
    Router::new()
        .route("/session", post(create))
        .route("/session/{id}", get(show))
        .route("/session/{id}/mutate", post(mutate))
        .route("/session/{id}/undo", post(undo))
        .route("/session/{id}/classgroup", get(classgroup))
        .route("/realize", post(realize))
        .with_state(state)
}

async fn run(listener: tokio::net::TcpListener) -> std::io::Result<()> {
    axum::serve(listener, router()).await
}

/// Serves on `127.0.0.1:port` until the process exits.
pub fn serve_blocking(port: u16) -> std::io::Result<()> {
    let rt = tokio::runtime::Runtime::new()?;
    rt.block_on(async {
        let listener = tokio::net::TcpListener::bind(("127.0.0.1", port)).await?;
        log::info!("listening on {}", listener.local_addr()?);
        run(listener).await
    })
}

/// Starts the service on its own thread and runtime. Port 0 picks a free
/// port; the bound address is returned.
pub fn serve_in_background(port: u16) -> std::io::Result<SocketAddr> {
    let listener = std::net::TcpListener::bind(("127.0.0.1", port))?;
    listener.set_nonblocking(true)?;
    let addr = listener.local_addr()?;
    std::thread::spawn(move || {
        let rt = tokio::runtime::Runtime::new().expect("tokio runtime");
        rt.block_on(async move {
            let listener = tokio::net::TcpListener::from_std(listener).expect("listener");
            if let Err(e) = run(listener).await {
                log::error!("service stopped: {e}");
            }
        });
    });
    Ok(addr)
}
