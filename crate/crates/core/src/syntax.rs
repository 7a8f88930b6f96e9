//! Parsing into a language-agnostic tree of typed, span-carrying nodes.
//!
//! Grammars come from tree-sitter; node kinds are the grammar's symbol names,
//! passed through verbatim. Comments are dropped, everything else the parser
//! produces (including punctuation, error and missing nodes) is kept.

use std::sync::OnceLock;
use std::time::Duration;

use serde::Serialize;

use crate::model::{Diagnostic, Language, LineIndex, SourceUnit, Span, DEFAULT_PARSE_TIMEOUT};

pub type NodeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AstNode {
    pub id: NodeId,
    pub kind: &'static str,
    pub named: bool,
    pub span: Span,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub text: Option<String>,
    pub children: Vec<NodeId>,
    /// Grammar field this node fills in its parent, if any.
    #[serde(skip)]
    pub field: Option<&'static str>,
    #[serde(skip)]
    pub parent: Option<NodeId>,
}

impl AstNode {
    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn is_error(&self) -> bool {
        self.kind == "ERROR"
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ast {
    pub root: NodeId,
    pub nodes: Vec<AstNode>,
    pub language: Language,
    pub diagnostics: Vec<Diagnostic>,
}

impl Ast {
    pub fn node(&self, id: NodeId) -> &AstNode {
        &self.nodes[id]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn has_errors(&self) -> bool {
        self.diagnostics.iter().any(Diagnostic::is_error)
    }

    /// Number of parent/child links.
    pub fn edge_count(&self) -> usize {
        self.nodes.iter().map(|n| n.children.len()).sum()
    }

    /// Longest root-to-leaf path, counted in nodes.
    pub fn depth(&self) -> usize {
        let mut depth = vec![0usize; self.nodes.len()];
        let mut best = 0;
        for node in &self.nodes {
            let d = node.parent.map_or(1, |p| depth[p] + 1);
            depth[node.id] = d;
            best = best.max(d);
        }
        best
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseOptions {
    /// Fail instead of returning a tree that carries error diagnostics.
    pub strict: bool,
    /// `None` disables the budget.
    pub timeout: Option<Duration>,
}

impl Default for ParseOptions {
    fn default() -> Self {
        ParseOptions { strict: false, timeout: Some(DEFAULT_PARSE_TIMEOUT) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SyntaxError {
    #[error("parsing exceeded the time limit")]
    Timeout,
    #[error("source has {} syntax error(s)", diagnostics.len())]
    StrictModeSyntaxError { diagnostics: Vec<Diagnostic> },
    #[error("parser failed: {0}")]
    Parser(String),
}

pub(crate) fn grammar(language: Language) -> tree_sitter::Language {
    match language {
        Language::Java => tree_sitter_java::LANGUAGE.into(),
        Language::Python => tree_sitter_python::LANGUAGE.into(),
        Language::JavaScript => tree_sitter_javascript::LANGUAGE.into(),
    }
}

/// Parses leniently with the default time budget.
pub fn parse(unit: &SourceUnit) -> Result<Ast, SyntaxError> {
    parse_with(unit, &ParseOptions::default())
}

pub fn parse_with(unit: &SourceUnit, options: &ParseOptions) -> Result<Ast, SyntaxError> {
    let mut parser = tree_sitter::Parser::new();
    parser.set_language(&grammar(unit.language)).map_err(|e| SyntaxError::Parser(e.to_string()))?;
    let tree = run_parser(&mut parser, &unit.code, options.timeout)?;
    let ast = build(&tree, &unit.code, unit.language);
    if options.strict && ast.has_errors() {
        return Err(SyntaxError::StrictModeSyntaxError { diagnostics: ast.diagnostics });
    }
    Ok(ast)
}

#[cfg(not(target_arch = "wasm32"))]
fn run_parser(parser: &mut tree_sitter::Parser, code: &str, timeout: Option<Duration>) -> Result<tree_sitter::Tree, SyntaxError> {
    use std::ops::ControlFlow;
    use std::time::Instant;

    let bytes = code.as_bytes();
    let mut read = |offset: usize, _: tree_sitter::Point| &bytes[offset.min(bytes.len())..];
    let Some(limit) = timeout else {
        return parser.parse_with_options(&mut read, None, None).ok_or_else(|| SyntaxError::Parser("no tree produced".into()));
    };
    let deadline = Instant::now() + limit;
    let mut timed_out = false;
    let mut progress = |_: &tree_sitter::ParseState| {
        if Instant::now() >= deadline {
            timed_out = true;
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    };
    let options = tree_sitter::ParseOptions::new().progress_callback(&mut progress);
    let tree = parser.parse_with_options(&mut read, None, Some(options));
    match tree {
        Some(tree) => Ok(tree),
        None if timed_out => Err(SyntaxError::Timeout),
        None => Err(SyntaxError::Parser("no tree produced".into())),
    }
}

// No monotonic clock on wasm32-unknown-unknown; the browser enforces its own
// limits on long-running scripts.
#[cfg(target_arch = "wasm32")]
fn run_parser(parser: &mut tree_sitter::Parser, code: &str, _timeout: Option<Duration>) -> Result<tree_sitter::Tree, SyntaxError> {
    parser.parse(code, None).ok_or_else(|| SyntaxError::Parser("no tree produced".into()))
}

/// Kind and field names of one grammar with a `'static` lifetime, so AST
/// nodes can borrow them without holding on to the parse tree.
struct Symbols {
    kinds: Vec<&'static str>,
    fields: Vec<&'static str>,
}

fn symbols(language: Language) -> &'static Symbols {
    static TABLES: [OnceLock<Symbols>; 3] = [OnceLock::new(), OnceLock::new(), OnceLock::new()];
    let slot = Language::ALL.iter().position(|&l| l == language).unwrap_or(0);
    TABLES[slot].get_or_init(|| {
        let g = grammar(language);
        let leak = |s: &str| -> &'static str { Box::leak(s.to_owned().into_boxed_str()) };
        let kinds = (0..g.node_kind_count() as u16).map(|id| leak(g.node_kind_for_id(id).unwrap_or(""))).collect();
        let fields = (0..=g.field_count() as u16).map(|id| leak(g.field_name_for_id(id).unwrap_or(""))).collect();
        Symbols { kinds, fields }
    })
}

fn is_comment(node: &tree_sitter::Node) -> bool {
    node.is_extra() && node.kind().ends_with("comment")
}

fn build(tree: &tree_sitter::Tree, code: &str, language: Language) -> Ast {
    let index = LineIndex::new(code);
    let table = symbols(language);
    let mut nodes: Vec<AstNode> = Vec::new();
    let mut diagnostics = Vec::new();
    let mut parents: Vec<NodeId> = Vec::new();
    let mut cursor = tree.walk();

    'walk: loop {
        let node = cursor.node();
        let skip = is_comment(&node) && !parents.is_empty();
        if !skip {
            let id = nodes.len();
            let span = if parents.is_empty() {
                index.span(0, code.len())
            } else {
                span_of(&node)
            };
            if node.is_error() {
                diagnostics.push(Diagnostic::error("syntax error", span));
            } else if node.is_missing() {
                diagnostics.push(Diagnostic::error(format!("missing `{}`", node.kind()), span));
            }
            let parent = parents.last().copied();
            let leaf = node.child_count() == 0;
            nodes.push(AstNode {
                id,
                kind: if node.is_error() { "ERROR" } else { table.kinds.get(node.kind_id() as usize).copied().unwrap_or("") },
                named: node.is_named(),
                span,
                text: leaf.then(|| code[node.start_byte()..node.end_byte()].to_string()),
                children: Vec::new(),
                field: cursor.field_id().and_then(|f| table.fields.get(f.get() as usize).copied()),
                parent,
            });
            if let Some(p) = parent {
                nodes[p].children.push(id);
            }
            if cursor.goto_first_child() {
                parents.push(id);
                continue;
            }
        }
        loop {
            if cursor.goto_next_sibling() {
                continue 'walk;
            }
            if !cursor.goto_parent() {
                break 'walk;
            }
            parents.pop();
        }
    }

    // A node whose only children were comments ends up a leaf too.
    for node in &mut nodes {
        if node.children.is_empty() && node.text.is_none() {
            node.text = Some(code[node.span.start_byte..node.span.end_byte].to_string());
        }
    }
    Ast { root: 0, nodes, language, diagnostics }
}

fn span_of(node: &tree_sitter::Node) -> Span {
    let start = node.start_position();
    let end = node.end_position();
    Span {
        start_byte: node.start_byte(),
        end_byte: node.end_byte(),
        start_line: start.row,
        start_col: start.column,
        end_line: end.row,
        end_col: end.column,
    }
}

/// The tree restricted to named nodes. Children of dropped nodes are
/// re-parented to the nearest kept ancestor; order and spans are preserved.
pub fn named_subtree(ast: &Ast) -> Ast {
    let mut nodes: Vec<AstNode> = Vec::new();
    // (old id, new parent id)
    let mut stack: Vec<(NodeId, Option<NodeId>)> = vec![(ast.root, None)];
    while let Some((old, parent)) = stack.pop() {
        let src = &ast.nodes[old];
        let keep = src.named || parent.is_none();
        let next_parent = if keep {
            let id = nodes.len();
            nodes.push(AstNode { id, children: Vec::new(), parent, ..src.clone() });
            if let Some(p) = parent {
                nodes[p].children.push(id);
            }
            Some(id)
        } else {
            parent
        };
        for &child in src.children.iter().rev() {
            stack.push((child, next_parent));
        }
    }
    // Leaves that lost all their children still carry no text; recover it so
    // the leaf-text rule holds in the reduced tree.
    for node in &mut nodes {
        if node.children.is_empty() && node.text.is_none() {
            node.text = Some(String::new());
        }
    }
    Ast { root: 0, nodes, language: ast.language, diagnostics: ast.diagnostics.clone() }
}
