//! Browser demo: list the bundled examples, convert code, and draw the
//! result as SVG. The conversion goes through the same engine call as the
//! CLI and the HTTP service, so the envelope bytes match theirs.
//!
//! The functions here are plain Rust and tested natively; the `web` module
//! only wraps them for JavaScript.

pub mod scene;

use std::fmt::Write as _;
use std::str::FromStr;

use codelens_core::{
    convert, corpus, ConvertError, ConvertOptions, Diagnostic, Language, Payload, RepresentationKind, SourceUnit,
};
use serde::Serialize;

pub use scene::Scene;

/// Everything the page shows for one conversion.
#[derive(Debug, Clone, Serialize)]
pub struct View {
    /// Envelope exactly as the engine serialized it.
    pub envelope: String,
    pub dot: Option<String>,
    pub svg: Option<String>,
    pub text: String,
    pub nodes: usize,
    pub edges: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub error: String,
    pub diagnostics: Vec<Diagnostic>,
    /// Diagnostic ranges in characters, for selecting in a textarea.
    pub highlights: Vec<(usize, usize)>,
}

impl Failure {
    fn message(error: impl ToString) -> Self {
        Failure { error: error.to_string(), diagnostics: Vec::new(), highlights: Vec::new() }
    }
}

/// Examples for `language` as a JSON array of `{id, title, code}`.
pub fn examples_json(language: &str) -> Result<String, Failure> {
    let language = Language::from_str(language).map_err(Failure::message)?;
    Ok(serde_json::to_string(corpus::examples(language)).expect("examples serialize"))
}

pub fn render(language: &str, representation: &str, code: &str, strict: bool) -> Result<View, Failure> {
    let language = Language::from_str(language).map_err(Failure::message)?;
    let representation = RepresentationKind::from_str(representation).map_err(Failure::message)?;
    let options = ConvertOptions { strict, ..ConvertOptions::default() };
    let conversion = convert(&SourceUnit::new(language, code), representation, &options).map_err(|e| {
        let diagnostics = match &e {
            ConvertError::Oversize { diagnostics } | ConvertError::StrictModeSyntaxError { diagnostics } => diagnostics.clone(),
            _ => Vec::new(),
        };
        let highlights = diagnostics
            .iter()
            .map(|d| (code[..d.span.start_byte].chars().count(), code[..d.span.end_byte].chars().count()))
            .collect();
        Failure { error: e.to_string(), diagnostics, highlights }
    })?;
    let payload = &conversion.envelope.payload;
    let scene = Scene::from_payload(payload, code);
    Ok(View {
        envelope: String::from_utf8(conversion.json.clone()).expect("JSON is UTF-8"),
        dot: conversion.dot.map(|d| d.text),
        svg: scene.as_ref().map(Scene::to_svg),
        text: text_view(payload),
        nodes: scene.as_ref().map_or(0, |s| s.nodes.len()),
        edges: scene.as_ref().map_or(0, |s| s.edges.len()),
    })
}

/// Plain-text rendering: one token per line with its id, or an indented
/// outline for the graph representations.
pub fn text_view(payload: &Payload) -> String {
    let mut out = String::new();
    match payload {
        Payload::Tokens(seq) => {
            for (piece, id) in seq.pieces.iter().zip(&seq.ids) {
                let _ = writeln!(out, "{id:>6}  {:<16} {}:{}", piece.text, piece.span.start_line + 1, piece.span.start_col + 1);
            }
        }
        Payload::Ast(ast) => {
            let mut stack = vec![(ast.root, 0)];
            while let Some((id, depth)) = stack.pop() {
                let node = ast.node(id);
                let _ = write!(out, "{:indent$}{}", "", node.kind, indent = depth * 2);
                if let Some(text) = node.text.as_ref().filter(|t| *t != node.kind) {
                    let _ = write!(out, " {text:?}");
                }
                out.push('\n');
                stack.extend(node.children.iter().rev().map(|&c| (c, depth + 1)));
            }
        }
        Payload::Dfg(dfg) => {
            for node in &dfg.nodes {
                let _ = write!(out, "n{} {}@{}", node.id, node.name, node.span.start_line + 1);
                for edge in dfg.edges.iter().filter(|e| e.src == node.id) {
                    let _ = write!(out, "  {} n{}", edge.kind.as_str(), edge.dst);
                }
                out.push('\n');
            }
        }
        Payload::Cfg(set) => {
            for cfg in &set.graphs {
                let _ = writeln!(out, "{}:", cfg.function_name);
                for block in &cfg.blocks {
                    let targets: Vec<String> = cfg.successors(block.id).map(|e| format!("b{} ({})", e.dst, e.label.as_str())).collect();
                    let _ = writeln!(out, "  b{} {:?} -> {}", block.id, block.kind, targets.join(", "));
                    for statement in &block.statements {
                        let _ = writeln!(out, "      {}", statement.text.lines().next().unwrap_or(""));
                    }
                }
            }
        }
    }
    out
}

#[cfg(target_arch = "wasm32")]
mod web {
    use wasm_bindgen::prelude::*;

    /// JSON array of the bundled examples for `language`.
    #[wasm_bindgen]
    pub fn examples(language: &str) -> Result<String, JsError> {
        super::examples_json(language).map_err(|f| JsError::new(&f.error))
    }

    /// JSON object: a `View` on success, a `Failure` (with `error`) otherwise.
    #[wasm_bindgen]
    pub fn convert(language: &str, representation: &str, code: &str, strict: bool) -> String {
        let result = match super::render(language, representation, code, strict) {
            Ok(view) => serde_json::to_string(&view),
            Err(failure) => serde_json::to_string(&failure),
        };
        result.expect("view serializes")
    }
}
