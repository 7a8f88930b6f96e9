//! Shared vocabulary: languages, representation kinds, spans, source units
//! and diagnostics.

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use serde::{Deserialize, Serialize};

/// Version of the JSON envelope layout. Bumped on any payload shape change.
pub const SCHEMA_VERSION: &str = "1.0.0";

/// Default upper bound on accepted source size.
pub const DEFAULT_MAX_SOURCE_BYTES: usize = 1024 * 1024;

/// Default wall-clock budget for a single parse.
pub const DEFAULT_PARSE_TIMEOUT: Duration = Duration::from_secs(5);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Language {
    Java,
    Python,
    JavaScript,
}

impl Language {
    pub const ALL: [Language; 3] = [Language::Java, Language::Python, Language::JavaScript];

    pub fn as_str(self) -> &'static str {
        match self {
            Language::Java => "java",
            Language::Python => "python",
            Language::JavaScript => "javascript",
        }
    }

    /// Conventional file extension, without the dot.
    pub fn extension(self) -> &'static str {
        match self {
            Language::Java => "java",
            Language::Python => "py",
            Language::JavaScript => "js",
        }
    }
}

impl fmt::Display for Language {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unsupported language `{0}` (expected java, python or javascript)")]
pub struct UnsupportedLanguage(pub String);

impl FromStr for Language {
    type Err = UnsupportedLanguage;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "java" => Ok(Language::Java),
            "python" | "py" => Ok(Language::Python),
            "javascript" | "js" => Ok(Language::JavaScript),
            _ => Err(UnsupportedLanguage(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RepresentationKind {
    Tokens,
    Ast,
    Dfg,
    Cfg,
}

impl RepresentationKind {
    pub const ALL: [RepresentationKind; 4] = [
        RepresentationKind::Tokens,
        RepresentationKind::Ast,
        RepresentationKind::Dfg,
        RepresentationKind::Cfg,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RepresentationKind::Tokens => "tokens",
            RepresentationKind::Ast => "ast",
            RepresentationKind::Dfg => "dfg",
            RepresentationKind::Cfg => "cfg",
        }
    }

    /// Whether the representation is a graph and therefore has a DOT form.
    pub fn is_graph(self) -> bool {
        !matches!(self, RepresentationKind::Tokens)
    }
}

impl fmt::Display for RepresentationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown representation `{0}` (expected tokens, ast, dfg or cfg)")]
pub struct UnknownRepresentation(pub String);

impl FromStr for RepresentationKind {
    type Err = UnknownRepresentation;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "tokens" => Ok(RepresentationKind::Tokens),
            "ast" => Ok(RepresentationKind::Ast),
            "dfg" => Ok(RepresentationKind::Dfg),
            "cfg" => Ok(RepresentationKind::Cfg),
            _ => Err(UnknownRepresentation(s.to_string())),
        }
    }
}

/// A region of source text. Byte offsets index the UTF-8 encoding; lines and
/// columns are 0-based and columns count bytes from the start of the line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Span {
    pub start_byte: usize,
    pub end_byte: usize,
    pub start_line: usize,
    pub start_col: usize,
    pub end_line: usize,
    pub end_col: usize,
}

impl Span {
    pub fn len(&self) -> usize {
        self.end_byte - self.start_byte
    }

    pub fn is_empty(&self) -> bool {
        self.start_byte == self.end_byte
    }

    pub fn contains(&self, other: &Span) -> bool {
        self.start_byte <= other.start_byte && other.end_byte <= self.end_byte
    }

    /// Smallest span covering both.
    pub fn cover(&self, other: &Span) -> Span {
        let (start_byte, start_line, start_col) = if other.start_byte < self.start_byte {
            (other.start_byte, other.start_line, other.start_col)
        } else {
            (self.start_byte, self.start_line, self.start_col)
        };
        let (end_byte, end_line, end_col) = if other.end_byte > self.end_byte {
            (other.end_byte, other.end_line, other.end_col)
        } else {
            (self.end_byte, self.end_line, self.end_col)
        };
        Span { start_byte, end_byte, start_line, start_col, end_line, end_col }
    }
}

/// Maps byte offsets to (line, column) pairs.
#[derive(Debug, Clone)]
pub struct LineIndex {
    line_starts: Vec<usize>,
    len: usize,
}

impl LineIndex {
    pub fn new(text: &str) -> Self {
        let mut line_starts = vec![0];
        line_starts.extend(text.bytes().enumerate().filter(|(_, b)| *b == b'\n').map(|(i, _)| i + 1));
        LineIndex { line_starts, len: text.len() }
    }

    /// Line and byte column of `offset`, clamped to the end of the text.
    pub fn position(&self, offset: usize) -> (usize, usize) {
        let offset = offset.min(self.len);
        let line = self.line_starts.partition_point(|&s| s <= offset) - 1;
        (line, offset - self.line_starts[line])
    }

    pub fn span(&self, start_byte: usize, end_byte: usize) -> Span {
        let (start_line, start_col) = self.position(start_byte);
        let (end_line, end_col) = self.position(end_byte);
        Span {
            start_byte: start_byte.min(self.len),
            end_byte: end_byte.min(self.len),
            start_line,
            start_col,
            end_line,
            end_col,
        }
    }
}

/// Resource bounds applied to every request.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_source_bytes: usize,
    pub parse_timeout: Duration,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_source_bytes: DEFAULT_MAX_SOURCE_BYTES, parse_timeout: DEFAULT_PARSE_TIMEOUT }
    }
}

/// A code snippet together with its declared language.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SourceUnit {
    pub code: String,
    pub language: Language,
    /// File path the code was read from, or `None` for inline input.
    pub origin: Option<String>,
}

impl SourceUnit {
    pub fn new(language: Language, code: impl Into<String>) -> Self {
        SourceUnit { code: code.into(), language, origin: None }
    }

    pub fn with_origin(mut self, origin: impl Into<String>) -> Self {
        self.origin = Some(origin.into());
        self
    }

    /// Builds a unit from raw bytes, rejecting anything that is not UTF-8.
    pub fn from_bytes(language: Language, bytes: Vec<u8>) -> Result<Self, std::string::FromUtf8Error> {
        Ok(SourceUnit::new(language, String::from_utf8(bytes)?))
    }

    pub fn origin_label(&self) -> &str {
        self.origin.as_deref().unwrap_or("inline")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Error,
    Warning,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub severity: Severity,
    pub message: String,
    pub span: Span,
}

impl Diagnostic {
    pub fn error(message: impl Into<String>, span: Span) -> Self {
        Diagnostic { severity: Severity::Error, message: message.into(), span }
    }

    pub fn warning(message: impl Into<String>, span: Span) -> Self {
        Diagnostic { severity: Severity::Warning, message: message.into(), span }
    }

    pub fn is_error(&self) -> bool {
        self.severity == Severity::Error
    }
}

/// Checks `unit` against the configured limits. An empty result means the
/// unit is acceptable; nothing is ever mutated.
pub fn validate_source(unit: &SourceUnit, limits: &Limits) -> Vec<Diagnostic> {
    let mut diagnostics = Vec::new();
    let len = unit.code.len();
    if len > limits.max_source_bytes {
        let index = LineIndex::new(&unit.code);
        diagnostics.push(Diagnostic::error(
            format!("source exceeds size limit ({len} bytes > {} bytes)", limits.max_source_bytes),
            index.span(limits.max_source_bytes, len),
        ));
    }
    diagnostics
}
