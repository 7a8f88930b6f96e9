//! Stateless HTTP front end.
//!
//! * `POST /api/convert` converts one snippet and returns the envelope (and
//!   DOT text for graph representations).
//! * `GET /api/examples?language=L` lists the bundled examples.
//! * `GET /api/health` reports liveness and the envelope schema version.
//!
//! The envelope inside a convert response is byte-identical to what the
//! command line prints for the same input.

use std::collections::BTreeMap;
use std::net::SocketAddr;
use std::sync::Arc;
use std::time::Duration;

use axum::body::Bytes;
use axum::extract::{DefaultBodyLimit, Query, State};
use axum::http::{header, HeaderValue, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::Router;
use codelens_core::corpus::{self, Example};
use codelens_core::{
    convert, ConvertError, ConvertOptions, Diagnostic, Language, Limits, RepresentationKind, SourceUnit, Vocabulary,
    SCHEMA_VERSION,
};
use serde::{Deserialize, Serialize};
use tower_http::cors::{AllowOrigin, Any, CorsLayer};

pub const DEFAULT_VOCAB_ID: &str = "default";

#[derive(Debug, Clone)]
pub struct Config {
    pub limits: Limits,
    /// End-to-end budget for one conversion.
    pub request_timeout: Duration,
    /// Named vocabularies selectable through `options.vocab`. `default` is
    /// used when the request names none; when absent, the bundled vocabulary.
    pub vocabularies: BTreeMap<String, Arc<Vocabulary>>,
    /// `None` allows every origin.
    pub allowed_origins: Option<Vec<String>>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            limits: Limits::default(),
            request_timeout: Duration::from_secs(10),
            vocabularies: BTreeMap::new(),
            allowed_origins: None,
        }
    }
}

impl Config {
    /// Reads `CODELENS_VOCAB` (a vocabulary file used as the default, as the
    /// command line does) and `CODELENS_ALLOWED_ORIGINS` (comma-separated).
    pub fn from_env() -> Result<Self, String> {
        let mut config = Config::default();
        if let Some(path) = std::env::var_os("CODELENS_VOCAB") {
            let vocab = Vocabulary::load(&path).map_err(|e| format!("{}: {e}", path.to_string_lossy()))?;
            config.vocabularies.insert(DEFAULT_VOCAB_ID.to_string(), Arc::new(vocab));
        }
        if let Ok(origins) = std::env::var("CODELENS_ALLOWED_ORIGINS") {
            let list: Vec<String> =
                origins.split(',').map(str::trim).filter(|s| !s.is_empty()).map(String::from).collect();
            if !list.is_empty() {
                config.allowed_origins = Some(list);
            }
        }
        Ok(config)
    }
}

/// `CODELENS_ADDR` (default 127.0.0.1) and `CODELENS_PORT` (default 8080).
pub fn bind_addr_from_env() -> Result<SocketAddr, String> {
    let addr = std::env::var("CODELENS_ADDR").unwrap_or_else(|_| "127.0.0.1".to_string());
    let port = std::env::var("CODELENS_PORT").unwrap_or_else(|_| "8080".to_string());
    let port: u16 = port.parse().map_err(|_| format!("invalid CODELENS_PORT `{port}`"))?;
    let ip = addr.parse().map_err(|_| format!("invalid CODELENS_ADDR `{addr}`"))?;
    Ok(SocketAddr::new(ip, port))
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConvertRequest {
    pub language: String,
    pub representation: String,
    pub code: String,
    #[serde(default)]
    pub options: RequestOptions,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RequestOptions {
    #[serde(default)]
    pub strict: bool,
    #[serde(default)]
    pub pretty: bool,
    #[serde(default)]
    pub vocab: Option<String>,
}

#[derive(Debug, Serialize)]
struct ErrorBody<'a> {
    error: &'a str,
    diagnostics: &'a [Diagnostic],
}

#[derive(Debug, Serialize)]
struct Health {
    status: &'static str,
    schema_version: &'static str,
}

#[derive(Debug, Deserialize)]
struct ExamplesQuery {
    language: Option<String>,
}

pub fn app(config: Config) -> Router {
    let cors = match &config.allowed_origins {
        None => CorsLayer::new().allow_origin(Any),
        Some(list) => {
            CorsLayer::new().allow_origin(AllowOrigin::list(list.iter().filter_map(|o| HeaderValue::from_str(o).ok())))
        }
    }
    .allow_methods(Any)
    .allow_headers(Any);
    // Leave room for JSON escaping so oversize code reaches the size check
    // and gets a diagnostic rather than a bare rejection.
    let body_limit = config.limits.max_source_bytes.saturating_mul(4).max(64 * 1024);
    Router::new()
        .route("/api/convert", post(convert_handler))
        .route("/api/examples", get(examples_handler))
        .route("/api/health", get(health_handler))
        .layer(DefaultBodyLimit::max(body_limit))
        .layer(cors)
        .with_state(Arc::new(config))
}

pub async fn serve(addr: SocketAddr, config: Config) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    eprintln!("listening on http://{}", listener.local_addr()?);
    serve_listener(listener, config).await
}

/// Serves on an already bound listener (for example one on port 0).
pub async fn serve_listener(listener: tokio::net::TcpListener, config: Config) -> std::io::Result<()> {
    axum::serve(listener, app(config)).await
}

fn json_response(status: StatusCode, body: Vec<u8>) -> Response {
    (status, [(header::CONTENT_TYPE, "application/json")], body).into_response()
}

fn error_response(status: StatusCode, message: &str, diagnostics: &[Diagnostic]) -> Response {
    let body = serde_json::to_vec(&ErrorBody { error: message, diagnostics }).expect("error body serializes");
    json_response(status, body)
}

async fn health_handler() -> Response {
    let body = serde_json::to_vec(&Health { status: "ok", schema_version: SCHEMA_VERSION }).expect("serializes");
    json_response(StatusCode::OK, body)
}

async fn examples_handler(Query(query): Query<ExamplesQuery>) -> Response {
    let Some(name) = query.language else {
        return error_response(StatusCode::BAD_REQUEST, "missing `language` query parameter", &[]);
    };
    match name.parse::<Language>() {
        Ok(language) => {
            let examples: &[Example] = corpus::examples(language);
            json_response(StatusCode::OK, serde_json::to_vec(examples).expect("examples serialize"))
        }
        Err(e) => error_response(StatusCode::BAD_REQUEST, &e.to_string(), &[]),
    }
}

async fn convert_handler(State(config): State<Arc<Config>>, body: Bytes) -> Response {
    let request: ConvertRequest = match serde_json::from_slice(&body) {
        Ok(r) => r,
        Err(e) => return error_response(StatusCode::BAD_REQUEST, &format!("malformed request: {e}"), &[]),
    };
    let language = match request.language.parse::<Language>() {
        Ok(l) => l,
        Err(e) => return error_response(StatusCode::BAD_REQUEST, &e.to_string(), &[]),
    };
    let representation = match request.representation.parse::<RepresentationKind>() {
        Ok(r) => r,
        Err(e) => return error_response(StatusCode::BAD_REQUEST, &e.to_string(), &[]),
    };
    let vocab = match request.options.vocab.as_deref() {
        None => config.vocabularies.get(DEFAULT_VOCAB_ID).cloned(),
        Some(id) => match config.vocabularies.get(id) {
            Some(v) => Some(v.clone()),
            None if id == DEFAULT_VOCAB_ID => None,
            None => return error_response(StatusCode::BAD_REQUEST, &format!("unknown vocabulary `{id}`"), &[]),
        },
    };
    let options =
        ConvertOptions { strict: request.options.strict, pretty: request.options.pretty, vocab, limits: config.limits };
    let unit = SourceUnit::new(language, request.code);
    let job = tokio::task::spawn_blocking(move || convert(&unit, representation, &options));
    let result = match tokio::time::timeout(config.request_timeout, job).await {
        Err(_) => return error_response(StatusCode::GATEWAY_TIMEOUT, "request exceeded the time limit", &[]),
        Ok(Err(e)) => return error_response(StatusCode::INTERNAL_SERVER_ERROR, &e.to_string(), &[]),
        Ok(Ok(result)) => result,
    };
    match result {
        Ok(conversion) => {
            // The envelope bytes are spliced in verbatim so they match the
            // command line exactly, including `pretty` indentation.
            let mut body = Vec::with_capacity(conversion.json.len() + 32);
            body.extend_from_slice(b"{\"envelope\":");
            body.extend_from_slice(&conversion.json);
            if let Some(dot) = &conversion.dot {
                body.extend_from_slice(b",\"dot\":");
                body.extend_from_slice(&serde_json::to_vec(&dot.text).expect("string serializes"));
            }
            body.push(b'}');
            json_response(StatusCode::OK, body)
        }
        Err(e) => {
            let (status, diagnostics): (StatusCode, &[Diagnostic]) = match &e {
                ConvertError::Oversize { diagnostics } => (StatusCode::PAYLOAD_TOO_LARGE, diagnostics),
                ConvertError::StrictModeSyntaxError { diagnostics } => (StatusCode::UNPROCESSABLE_ENTITY, diagnostics),
                ConvertError::Timeout => (StatusCode::GATEWAY_TIMEOUT, &[]),
                ConvertError::Internal(_) => (StatusCode::INTERNAL_SERVER_ERROR, &[]),
            };
            error_response(status, &e.to_string(), diagnostics)
        }
    }
}

/// The envelope bytes exactly as embedded in a successful convert response.
pub fn envelope_bytes(response_body: &[u8]) -> Option<&[u8]> {
    #[derive(Deserialize)]
    struct Shape<'a> {
        #[serde(borrow)]
        envelope: &'a serde_json::value::RawValue,
    }
    let shape: Shape = serde_json::from_slice(response_body).ok()?;
    Some(shape.envelope.get().as_bytes())
}
