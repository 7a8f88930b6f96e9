//! One entry point from source text to serialized output.

use std::sync::Arc;

use crate::controlflow::extract_cfg;
use crate::dataflow::extract_dfg;
use crate::export::{to_dot, to_json, to_json_pretty, DotDocument, Envelope, Payload};
use crate::model::{validate_source, Diagnostic, Limits, RepresentationKind, SourceUnit};
use crate::syntax::{parse_with, ParseOptions, SyntaxError};
use crate::tokenizer::{encode, Vocabulary};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Json,
    Dot,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "dot" => Ok(OutputFormat::Dot),
            other => Err(format!("unknown format `{other}` (expected json or dot)")),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct ConvertOptions {
    /// Fail on any syntax error instead of returning a partial result.
    pub strict: bool,
    pub pretty: bool,
    /// Vocabulary for token output; the bundled one when `None`.
    pub vocab: Option<Arc<Vocabulary>>,
    pub limits: Limits,
}

#[derive(Debug, thiserror::Error)]
pub enum ConvertError {
    #[error("{}", diagnostics.first().map_or("source rejected", |d| d.message.as_str()))]
    Oversize { diagnostics: Vec<Diagnostic> },
    #[error("source has {} syntax error(s)", diagnostics.len())]
    StrictModeSyntaxError { diagnostics: Vec<Diagnostic> },
    #[error("parsing exceeded the time limit")]
    Timeout,
    #[error("{0}")]
    Internal(String),
}

impl From<SyntaxError> for ConvertError {
    fn from(e: SyntaxError) -> Self {
        match e {
            SyntaxError::Timeout => ConvertError::Timeout,
            SyntaxError::StrictModeSyntaxError { diagnostics } => ConvertError::StrictModeSyntaxError { diagnostics },
            SyntaxError::Parser(msg) => ConvertError::Internal(msg),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Conversion {
    pub envelope: Envelope,
    /// The serialized envelope, honouring `pretty`.
    pub json: Vec<u8>,
    /// Present for the graph-shaped representations.
    pub dot: Option<DotDocument>,
}

impl Conversion {
    pub fn output(&self, format: OutputFormat) -> Option<&[u8]> {
        match format {
            OutputFormat::Json => Some(&self.json),
            OutputFormat::Dot => self.dot.as_ref().map(|d| d.text.as_bytes()),
        }
    }
}

pub fn convert(
    unit: &SourceUnit,
    representation: RepresentationKind,
    options: &ConvertOptions,
) -> Result<Conversion, ConvertError> {
    let rejected = validate_source(unit, &options.limits);
    if !rejected.is_empty() {
        return Err(ConvertError::Oversize { diagnostics: rejected });
    }
    let parse_options = ParseOptions { strict: options.strict, timeout: Some(options.limits.parse_timeout) };
    let (payload, diagnostics) = match representation {
        RepresentationKind::Tokens => {
            // Tokenizing needs no tree, but strict mode still promises the
            // input is free of syntax errors.
            if options.strict {
                parse_with(unit, &parse_options)?;
            }
            let vocab = options.vocab.as_deref().unwrap_or_else(|| Vocabulary::default_code());
            (Payload::Tokens(encode(&unit.code, vocab)), Vec::new())
        }
        _ => {
            let ast = parse_with(unit, &parse_options)?;
            let diagnostics = ast.diagnostics.clone();
            let payload = match representation {
                RepresentationKind::Dfg => Payload::Dfg(extract_dfg(&ast, &unit.code)),
                RepresentationKind::Cfg => Payload::Cfg(extract_cfg(&ast, &unit.code)),
                _ => Payload::Ast(ast),
            };
            (payload, diagnostics)
        }
    };
    let envelope = Envelope::new(unit.language, payload, diagnostics);
    let json = if options.pretty { to_json_pretty(&envelope) } else { to_json(&envelope) };
    let dot = representation.is_graph().then(|| to_dot(&envelope.payload));
    Ok(Conversion { envelope, json, dot })
}
