//! Stateless HTTP facade over the tiling billiards engine.
//!
//! Each request is pure: it parses its parameters, runs one computation on
//! a blocking worker and returns JSON. A semaphore bounds the number of
//! computations running at once.

use std::net::SocketAddr;
use std::sync::Arc;

use axum::extract::rejection::{JsonRejection, QueryRejection};
use axum::extract::{Query, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::{Deserialize, Serialize};
use serde_json::json;
use tiling_billiards::export::TrajectoryExport;
use tiling_billiards::geometry::{fold_scene, FoldedScene};
use tiling_billiards::pet::pet_regions;
use tiling_billiards::rauzy::{rauzy_gasket_expand, RauzyExpansion};
use tiling_billiards::scalar::parse_angle;
use tiling_billiards::trajectory::trace;
use tiling_billiards::{ChordState, Classification, Error, TilingModel, TriangleAngles, TriangleCoord};
use tokio::sync::Semaphore;
use tower_http::cors::{AllowOrigin, CorsLayer};

#[derive(Clone, Debug)]
pub struct ServiceConfig {
    pub max_crossings_cap: usize,
    pub rauzy_iters_cap: usize,
    /// Number of computations allowed to run at once.
    pub workers: usize,
    /// Origin allowed by CORS; `None` allows any.
    pub allowed_origin: Option<String>,
}

impl Default for ServiceConfig {
    fn default() -> Self {
        Self {
            max_crossings_cap: 200_000,
            rauzy_iters_cap: 10_000,
            workers: std::thread::available_parallelism().map_or(4, |n| n.get()),
            allowed_origin: None,
        }
    }
}

#[derive(Clone)]
struct AppState {
    config: Arc<ServiceConfig>,
    pool: Arc<Semaphore>,
}

#[derive(Debug)]
pub enum ApiError {
    BadRequest(String),
    TooLarge(String),
    Unprocessable { message: String, step: Option<usize>, trajectory: Option<Box<TrajectoryExport>> },
    Internal(String),
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let (status, body) = match self {
            ApiError::BadRequest(m) => (StatusCode::BAD_REQUEST, json!({ "error": m })),
            ApiError::TooLarge(m) => (StatusCode::PAYLOAD_TOO_LARGE, json!({ "error": m })),
            ApiError::Unprocessable { message, step, trajectory } => (
                StatusCode::UNPROCESSABLE_ENTITY,
                json!({ "error": message, "step": step, "trajectory": trajectory }),
            ),
            ApiError::Internal(m) => (StatusCode::INTERNAL_SERVER_ERROR, json!({ "error": m })),
        };
        (status, Json(body)).into_response()
    }
}

impl From<Error> for ApiError {
    fn from(e: Error) -> Self {
        match e {
            Error::VertexHit { step } => ApiError::Unprocessable { message: e.to_string(), step: Some(step), trajectory: None },
            Error::DegenerateAngles(_) | Error::Parse(_) | Error::InvalidSimplexPoint(_) => ApiError::BadRequest(e.to_string()),
            other => ApiError::Unprocessable { message: other.to_string(), step: None, trajectory: None },
        }
    }
}

/// An angle as a number of radians or a string such as `"pi/3"`.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum AngleInput {
    Radians(f64),
    Text(String),
}

impl AngleInput {
    fn value(&self) -> Result<f64, ApiError> {
        match self {
            AngleInput::Radians(v) => Ok(*v),
            AngleInput::Text(t) => parse_angle::<f64>(t).map_err(ApiError::from),
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TraceRequest {
    pub alpha: AngleInput,
    pub beta: AngleInput,
    pub gamma: AngleInput,
    pub tau: AngleInput,
    pub x: AngleInput,
    pub max_crossings: Option<usize>,
    #[serde(default)]
    pub include_folded: bool,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct TraceResponse {
    #[serde(flatten)]
    export: TrajectoryExport,
    #[serde(skip_serializing_if = "Option::is_none")]
    folded: Option<FoldedScene<f64>>,
}

#[derive(Deserialize)]
struct AnglesQuery {
    alpha: String,
    beta: String,
    gamma: String,
}

#[derive(Deserialize)]
struct RauzyQuery {
    x1: f64,
    x2: f64,
    x3: f64,
    iters: usize,
}

fn angles_from(alpha: f64, beta: f64, gamma: f64) -> Result<TriangleAngles<f64>, ApiError> {
    TriangleAngles::new(alpha, beta, gamma).map_err(ApiError::from)
}

/// Runs `f` on a blocking thread once a pool permit is free.
async fn compute<T, F>(state: &AppState, f: F) -> Result<T, ApiError>
where
    T: Send + 'static,
    F: FnOnce() -> Result<T, ApiError> + Send + 'static,
{
    let _permit = state.pool.clone().acquire_owned().await.map_err(|e| ApiError::Internal(e.to_string()))?;
    tokio::task::spawn_blocking(f).await.map_err(|e| ApiError::Internal(e.to_string()))?
}

async fn trace_handler(
    State(state): State<AppState>,
    body: Result<Json<TraceRequest>, JsonRejection>,
) -> Result<Json<TraceResponse>, ApiError> {
    let Json(req) = body.map_err(|e| ApiError::BadRequest(e.body_text()))?;
    let cap = state.config.max_crossings_cap;
    let max_crossings = req.max_crossings.unwrap_or(cap.min(100_000));
    if max_crossings > cap {
        return Err(ApiError::TooLarge(format!("maxCrossings {max_crossings} exceeds the cap of {cap}")));
    }
    let angles = angles_from(req.alpha.value()?, req.beta.value()?, req.gamma.value()?)?;
    let (x, tau) = (req.x.value()?, req.tau.value()?);
    tracing::info!(?angles, x, tau, max_crossings, "trace");
    let response = compute(&state, move || {
        let tiling = TilingModel::new(angles);
        let t = trace(&tiling, TriangleCoord::ORIGIN, ChordState::new(x, tau), max_crossings)?;
        let export = TrajectoryExport::new(&tiling, &t, max_crossings)?;
        if let Classification::VertexHit { step } = t.verdict {
            return Err(ApiError::Unprocessable {
                message: format!("trajectory hits a tiling vertex at step {step}"),
                step: Some(step),
                trajectory: Some(Box::new(export)),
            });
        }
        let folded = req.include_folded.then(|| fold_scene(&tiling, &t));
        Ok(TraceResponse { export, folded })
    })
    .await?;
    Ok(Json(response))
}

async fn pet_handler(
    State(state): State<AppState>,
    query: Result<Query<AnglesQuery>, QueryRejection>,
) -> Result<Json<serde_json::Value>, ApiError> {
    let Query(q) = query.map_err(|e| ApiError::BadRequest(e.body_text()))?;
    let angles = angles_from(parse_angle(&q.alpha)?, parse_angle(&q.beta)?, parse_angle(&q.gamma)?)?;
    compute(&state, move || {
        let regions: Vec<serde_json::Value> = pet_regions(&angles)
            .into_iter()
            .map(|r| json!({ "label": r.label.to_string(), "polygon": r.polygon, "shift": r.shift }))
            .collect();
        Ok(Json(json!({ "regions": regions })))
    })
    .await
}

async fn rauzy_handler(
    State(state): State<AppState>,
    query: Result<Query<RauzyQuery>, QueryRejection>,
) -> Result<Json<RauzyExpansion<f64>>, ApiError> {
    let Query(q) = query.map_err(|e| ApiError::BadRequest(e.body_text()))?;
    let cap = state.config.rauzy_iters_cap;
    if q.iters > cap {
        return Err(ApiError::TooLarge(format!("iters {} exceeds the cap of {cap}", q.iters)));
    }
    compute(&state, move || Ok(Json(rauzy_gasket_expand([q.x1, q.x2, q.x3], q.iters)?))).await
}

async fn health() -> Json<serde_json::Value> {
    Json(json!({ "ok": true }))
}

/// The service routes with CORS applied.
pub fn router(config: ServiceConfig) -> Router {
    let cors = match &config.allowed_origin {
        Some(origin) => match origin.parse() {
            Ok(value) => CorsLayer::new().allow_origin(AllowOrigin::exact(value)),
            Err(_) => CorsLayer::new(),
        },
        None => CorsLayer::new().allow_origin(AllowOrigin::any()),
    }
    .allow_methods([axum::http::Method::GET, axum::http::Method::POST])
    .allow_headers([axum::http::header::CONTENT_TYPE]);
    let state = AppState { pool: Arc::new(Semaphore::new(config.workers.max(1))), config: Arc::new(config) };
    Router::new()
        .route("/api/health", get(health))
        .route("/api/trace", post(trace_handler))
        .route("/api/pet", get(pet_handler))
        .route("/api/rauzy/expand", get(rauzy_handler))
        .layer(cors)
        .with_state(state)
}

/// Serves the API on `addr` until the process ends.
pub async fn serve(addr: SocketAddr, config: ServiceConfig) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    tracing::info!("listening on {}", listener.local_addr()?);
    axum::serve(listener, router(config)).await
}
