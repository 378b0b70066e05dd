//! Local JSON service over the configuration kernel.
//!
//! Every handler is a pure function of its request; the router holds no
//! state besides the optional static asset directory.

use std::net::SocketAddr;
use std::path::PathBuf;

use axum::body::Bytes;
use axum::extract::Query;
use axum::http::{header, HeaderValue, Method, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::Router;
use serde::Deserialize;
use serde_json::{json, Value};
use tower_http::cors::{AllowOrigin, CorsLayer};
use tower_http::services::ServeDir;

use zigg_core::constructions::Family;
use zigg_core::figures::{render_svg, FigureStyle};
use zigg_core::numeric::{parse_rational, Rational};
use zigg_core::report::{to_stable_json, ConfigRequest, ConfigResponse};
use zigg_core::symbolic::{prove_text, ProverError, RuleSet};

pub const DEFAULT_PORT: u16 = 8642;
pub const DEFAULT_HOST: &str = "127.0.0.1";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// JSON error body with a 400 status.
#[derive(Debug)]
pub struct ApiError {
    message: String,
    column: Option<usize>,
}

impl ApiError {
    fn new(message: impl Into<String>) -> Self {
        Self {
            message: message.into(),
            column: None,
        }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let mut body = json!({ "error": self.message });
        if let Some(c) = self.column {
            body["column"] = json!(c);
        }
        (StatusCode::BAD_REQUEST, json_body(&body)).into_response()
    }
}

fn json_body(value: &impl serde::Serialize) -> ([(header::HeaderName, &'static str); 1], String) {
    ([(header::CONTENT_TYPE, "application/json")], to_stable_json(value))
}

#[derive(Debug, Deserialize)]
pub struct ConfigQuery {
    pub a: Option<String>,
    pub b: Option<String>,
    pub theta: Option<String>,
    pub family: Option<String>,
    pub exact: Option<bool>,
}

fn positive(name: &str, text: Option<&str>) -> Result<Rational, ApiError> {
    let text = text.ok_or_else(|| ApiError::new(format!("missing parameter `{name}`")))?;
    let v = parse_rational(text).map_err(|e| ApiError::new(format!("parameter `{name}`: {e}")))?;
    if v <= Rational::from_integer(0.into()) {
        return Err(ApiError::new(format!("parameter `{name}` must be positive")));
    }
    Ok(v)
}

/// Validates query parameters into a request for the ziggurat or pyramid family.
pub fn parse_config_query(q: &ConfigQuery) -> Result<ConfigRequest, ApiError> {
    let family = match q.family.as_deref().unwrap_or("ziggurat") {
        "ziggurat" => Family::Ziggurat,
        "pyramid" => Family::Pyramid,
        other => return Err(ApiError::new(format!("unknown family `{other}`"))),
    };
    let theta_text = q.theta.as_deref().ok_or_else(|| ApiError::new("missing parameter `theta`"))?;
    let theta = parse_rational(theta_text).map_err(|e| ApiError::new(format!("parameter `theta`: {e}")))?;
    Ok(ConfigRequest {
        family,
        a: positive("a", q.a.as_deref())?,
        b: positive("b", q.b.as_deref())?,
        theta,
        exact: q.exact.unwrap_or(false),
    })
}

async fn config(Query(q): Query<ConfigQuery>) -> Result<impl IntoResponse, ApiError> {
    let req = parse_config_query(&q)?;
    let resp = ConfigResponse::from_request(&req).map_err(|e| ApiError::new(e.to_string()))?;
    Ok(json_body(&resp))
}

async fn figure(Query(q): Query<ConfigQuery>) -> Result<impl IntoResponse, ApiError> {
    let req = parse_config_query(&q)?;
    let doc = req.build().map_err(|e| ApiError::new(e.to_string()))?;
    let svg = render_svg(&doc, &FigureStyle::default()).map_err(|e| ApiError::new(e.to_string()))?;
    Ok(([(header::CONTENT_TYPE, "image/svg+xml")], svg))
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProveRequest {
    pub identity: String,
    #[serde(default)]
    pub rules: RuleSet,
}

async fn prove(body: Bytes) -> Result<impl IntoResponse, ApiError> {
    let req: ProveRequest =
        serde_json::from_slice(&body).map_err(|e| ApiError::new(format!("invalid request body: {e}")))?;
    match prove_text(&req.identity, req.rules) {
        Ok(report) => Ok(json_body(&report)),
        Err(ProverError::Parse(e)) => Err(ApiError {
            message: e.to_string(),
            column: Some(e.column),
        }),
        Err(e) => Err(ApiError::new(e.to_string())),
    }
}

pub fn health_body() -> Value {
    json!({ "status": "ok", "version": VERSION })
}

async fn health() -> impl IntoResponse {
    json_body(&health_body())
}

fn is_local_origin(origin: &HeaderValue) -> bool {
    let Ok(text) = origin.to_str() else { return false };
    let Some(rest) = text.strip_prefix("http://").or_else(|| text.strip_prefix("https://")) else {
        return false;
    };
    let host = rest.rsplit_once(':').map_or(rest, |(h, port)| {
        if port.chars().all(|c| c.is_ascii_digit()) {
            h
        } else {
            rest
        }
    });
    matches!(host, "localhost" | "127.0.0.1" | "[::1]")
}

/// The API router, with CORS opened to localhost origins.
pub fn router() -> Router {
    let cors = CorsLayer::new()
        .allow_origin(AllowOrigin::predicate(|origin, _| is_local_origin(origin)))
        .allow_methods([Method::GET, Method::HEAD, Method::POST])
        .allow_headers([header::CONTENT_TYPE]);
    Router::new()
        .route("/api/health", get(health))
        .route("/api/config", get(config))
        .route("/api/figure.svg", get(figure))
        .route("/api/prove", post(prove))
        .layer(cors)
}

/// The API router plus static files (for example a built explorer) at `/`.
pub fn router_with_static(dir: PathBuf) -> Router {
    router().fallback_service(ServeDir::new(dir))
}

/// Binds and serves until the process is stopped.
pub async fn serve(host: &str, port: u16, static_dir: Option<PathBuf>) -> std::io::Result<()> {
    let addr: SocketAddr = format!("{host}:{port}")
        .parse()
        .map_err(|e| std::io::Error::new(std::io::ErrorKind::InvalidInput, format!("{host}:{port}: {e}")))?;
    let app = match static_dir {
        Some(dir) => router_with_static(dir),
        None => router(),
    };
    let listener = tokio::net::TcpListener::bind(addr).await?;
    eprintln!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, app).await
}
