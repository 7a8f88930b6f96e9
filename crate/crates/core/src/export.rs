//! The JSON envelope and the DOT dialect shared by every front end.
//!
//! JSON keys come out in declaration order and arrays in source order, so
//! serializing the same value always yields the same bytes. DOT output uses
//! only the `label`, `shape` and `style` attributes.

use std::fmt::Write as _;

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::controlflow::{BlockKind, Cfg, CfgSet, EdgeLabel};
use crate::dataflow::{Dfg, FlowKind};
use crate::model::{Diagnostic, Language, RepresentationKind, SCHEMA_VERSION};
use crate::syntax::Ast;
use crate::tokenizer::TokenSequence;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Payload {
    Tokens(TokenSequence),
    Ast(Ast),
    Dfg(Dfg),
    Cfg(CfgSet),
}

impl Payload {
    pub fn kind(&self) -> RepresentationKind {
        match self {
            Payload::Tokens(_) => RepresentationKind::Tokens,
            Payload::Ast(_) => RepresentationKind::Ast,
            Payload::Dfg(_) => RepresentationKind::Dfg,
            Payload::Cfg(_) => RepresentationKind::Cfg,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Envelope {
    pub schema_version: &'static str,
    pub language: Language,
    pub representation: RepresentationKind,
    pub payload: Payload,
    pub diagnostics: Vec<Diagnostic>,
}

impl Envelope {
    pub fn new(language: Language, payload: Payload, diagnostics: Vec<Diagnostic>) -> Self {
        Envelope { schema_version: SCHEMA_VERSION, language, representation: payload.kind(), payload, diagnostics }
    }
}

/// Compact JSON, no trailing newline.
pub fn to_json(envelope: &Envelope) -> Vec<u8> {
    serde_json::to_vec(envelope).expect("envelope serialization is infallible")
}

/// JSON indented by two spaces, keys in the same order as [`to_json`].
pub fn to_json_pretty(envelope: &Envelope) -> Vec<u8> {
    serde_json::to_vec_pretty(envelope).expect("envelope serialization is infallible")
}

impl Serialize for Payload {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Payload::Tokens(tokens) => {
                let mut map = s.serialize_map(Some(1))?;
                map.serialize_entry("tokens", &TokensJson(tokens))?;
                map.end()
            }
            Payload::Ast(ast) => {
                let mut st = s.serialize_struct("Ast", 2)?;
                st.serialize_field("root", &ast.root)?;
                st.serialize_field("nodes", &ast.nodes)?;
                st.end()
            }
            Payload::Dfg(dfg) => {
                let mut st = s.serialize_struct("Dfg", 2)?;
                st.serialize_field("nodes", &dfg.nodes)?;
                st.serialize_field("edges", &dfg.edges)?;
                st.end()
            }
            Payload::Cfg(set) => {
                let mut map = s.serialize_map(Some(1))?;
                map.serialize_entry("graphs", &set.graphs.iter().map(CfgJson).collect::<Vec<_>>())?;
                map.end()
            }
        }
    }
}

struct TokensJson<'a>(&'a TokenSequence);

impl Serialize for TokensJson<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Token<'a> {
            text: &'a str,
            id: u32,
            span: crate::model::Span,
        }
        s.collect_seq(
            self.0.pieces.iter().zip(&self.0.ids).map(|(p, &id)| Token { text: &p.text, id, span: p.span }),
        )
    }
}

struct CfgJson<'a>(&'a Cfg);

impl Serialize for CfgJson<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let cfg = self.0;
        let mut st = s.serialize_struct("Cfg", 5)?;
        st.serialize_field("function", &cfg.function_name)?;
        st.serialize_field("entry", &cfg.entry)?;
        st.serialize_field("exit", &cfg.exit)?;
        st.serialize_field("blocks", &cfg.blocks)?;
        st.serialize_field("edges", &cfg.edges)?;
        st.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DotDocument {
    pub text: String,
}

impl DotDocument {
    pub fn as_str(&self) -> &str {
        &self.text
    }
}

/// Values that render to a DOT digraph.
pub trait ToDot {
    fn write_dot(&self, out: &mut String);
}

pub fn to_dot<T: ToDot + ?Sized>(value: &T) -> DotDocument {
    let mut text = String::new();
    value.write_dot(&mut text);
    DotDocument { text }
}

/// Quotes `s` as a DOT string literal.
fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => {}
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

impl ToDot for Ast {
    fn write_dot(&self, out: &mut String) {
        out.push_str("digraph ast {\n");
        for node in &self.nodes {
            let label = match &node.text {
                Some(text) if text != node.kind => format!("{}\n{}", node.kind, text),
                _ => node.kind.to_string(),
            };
            let shape = if node.named { "box" } else { "plaintext" };
            let _ = writeln!(out, "  n{} [label={}, shape={}];", node.id, quote(&label), shape);
        }
        for node in &self.nodes {
            for child in &node.children {
                let _ = writeln!(out, "  n{} -> n{};", node.id, child);
            }
        }
        out.push_str("}\n");
    }
}

impl ToDot for Dfg {
    fn write_dot(&self, out: &mut String) {
        out.push_str("digraph dfg {\n");
        for node in &self.nodes {
            let label = format!("{}@{}", node.name, node.span.start_line + 1);
            let _ = writeln!(out, "  n{} [label={}];", node.id, quote(&label));
        }
        for edge in &self.edges {
            let style = match edge.kind {
                FlowKind::ComesFrom => "solid",
                FlowKind::ComputedFrom => "dashed",
            };
            let _ = writeln!(
                out,
                "  n{} -> n{} [label={}, style={}];",
                edge.src,
                edge.dst,
                quote(edge.kind.as_str()),
                style
            );
        }
        out.push_str("}\n");
    }
}

fn write_cfg_body(cfg: &Cfg, prefix: &str, indent: &str, out: &mut String) {
    for block in &cfg.blocks {
        let (label, shape) = match block.kind {
            BlockKind::Entry => ("entry".to_string(), "doublecircle"),
            BlockKind::Exit => ("exit".to_string(), "doublecircle"),
            BlockKind::Condition => (statements_label(block), "diamond"),
            BlockKind::Body => (statements_label(block), "box"),
        };
        let style = if block.unreachable || block.approximate { ", style=dashed" } else { "" };
        let _ = writeln!(out, "{indent}{prefix}b{} [label={}, shape={}{}];", block.id, quote(&label), shape, style);
    }
    for edge in &cfg.edges {
        let attrs = match edge.label {
            EdgeLabel::Unconditional => String::new(),
            EdgeLabel::True | EdgeLabel::False => format!(" [label={}]", quote(edge.label.as_str())),
            EdgeLabel::LoopBack => format!(" [label={}, style=dashed]", quote(edge.label.as_str())),
        };
        let _ = writeln!(out, "{indent}{prefix}b{} -> {prefix}b{}{};", edge.src, edge.dst, attrs);
    }
}

fn statements_label(block: &crate::controlflow::BasicBlock) -> String {
    block.statements.iter().map(|s| s.text.as_str()).collect::<Vec<_>>().join("\n")
}

impl ToDot for Cfg {
    fn write_dot(&self, out: &mut String) {
        out.push_str("digraph cfg {\n");
        write_cfg_body(self, "", "  ", out);
        out.push_str("}\n");
    }
}

/// One cluster per function; node ids are prefixed with the graph index.
impl ToDot for CfgSet {
    fn write_dot(&self, out: &mut String) {
        out.push_str("digraph cfg {\n");
        for (i, cfg) in self.graphs.iter().enumerate() {
            let _ = writeln!(out, "  subgraph cluster_{i} {{");
            let _ = writeln!(out, "    label={};", quote(&cfg.function_name));
            write_cfg_body(cfg, &format!("g{i}_"), "    ", out);
            out.push_str("  }\n");
        }
        out.push_str("}\n");
    }
}

impl ToDot for Payload {
    /// Token sequences have no graph form and render as an empty digraph.
    fn write_dot(&self, out: &mut String) {
        match self {
            Payload::Tokens(_) => out.push_str("digraph tokens {\n}\n"),
            Payload::Ast(ast) => ast.write_dot(out),
            Payload::Dfg(dfg) => dfg.write_dot(out),
            Payload::Cfg(set) => set.write_dot(out),
        }
    }
}
