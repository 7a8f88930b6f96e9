//! Lowers language-specific syntax trees to a small statement/event IR that
//! both graph extractors walk.
//!
//! Statements keep just enough structure for control flow (conditions,
//! loops, jumps). Each statement carries the identifier events it performs in
//! evaluation order: reads, writes, and nested scopes such as function
//! bodies, which the extractors handle separately.

mod java;
mod javascript;
mod python;

use crate::model::{Language, LineIndex, Span};
use crate::syntax::{Ast, NodeId};

/// A statement or condition as it appears in a control-flow block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Item {
    pub node: NodeId,
    pub span: Span,
    pub text: String,
}

#[derive(Debug, Clone)]
pub(crate) enum Event {
    Use(NodeId),
    /// `weak` definitions add to the reaching set instead of replacing it;
    /// they model writes through `a.b` or `a[i]`.
    Def { target: NodeId, sources: Vec<NodeId>, weak: bool },
    /// Read-modify-write of one occurrence (`x += 1`, `i++`): a use node and
    /// a definition node that share the identifier.
    Update { target: NodeId, sources: Vec<NodeId>, weak: bool },
    Scope(Box<Scope>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum ScopeKind {
    Function,
    /// `members_visible`: member functions see every name the class body
    /// defines (Java fields), rather than the class's surroundings.
    Class { members_visible: bool },
    Comprehension,
}

#[derive(Debug, Clone)]
pub(crate) struct Scope {
    pub kind: ScopeKind,
    pub node: NodeId,
    pub name: String,
    /// Parameter bindings, or the clauses of a comprehension.
    pub prologue: Vec<Event>,
    pub body: Vec<Stmt>,
    /// Class members analysed after the body.
    pub members: Vec<Scope>,
    /// Functions without a body (abstract or interface methods) get no graph.
    pub has_body: bool,
}

impl Scope {
    pub fn function(node: NodeId, name: impl Into<String>, prologue: Vec<Event>, body: Vec<Stmt>) -> Scope {
        Scope { kind: ScopeKind::Function, node, name: name.into(), prologue, body, members: Vec::new(), has_body: true }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Cond {
    pub item: Item,
    pub events: Vec<Event>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum JumpKind {
    Break,
    Continue,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum LoopKind {
    While,
    DoWhile,
    For,
}

#[derive(Debug, Clone)]
pub(crate) struct Loop {
    pub kind: LoopKind,
    pub label: Option<String>,
    /// Condition or `for` header, evaluated before every iteration (after,
    /// for do-while).
    pub head: Cond,
    /// Evaluated once before the loop.
    pub init: Vec<Event>,
    /// Loop-variable bindings at the start of each iteration.
    pub bind: Vec<Event>,
    /// Evaluated at the end of each iteration.
    pub update: Vec<Event>,
    pub body: Vec<Stmt>,
    /// Python's `else` on loops: runs when the condition fails.
    pub orelse: Vec<Stmt>,
}

#[derive(Debug, Clone)]
pub(crate) struct Case {
    /// `None` for `default` / `case _`.
    pub test: Option<Cond>,
    pub body: Vec<Stmt>,
}

#[derive(Debug, Clone)]
pub(crate) struct Switch {
    pub label: Option<String>,
    pub header: Item,
    pub subject: Vec<Event>,
    pub cases: Vec<Case>,
    pub fallthrough: bool,
}

#[derive(Debug, Clone)]
pub(crate) struct Handler {
    pub header: Item,
    pub events: Vec<Event>,
    pub body: Vec<Stmt>,
}

#[derive(Debug, Clone)]
pub(crate) struct Try {
    pub header: Item,
    pub setup: Vec<Event>,
    pub body: Vec<Stmt>,
    pub handlers: Vec<Handler>,
    pub orelse: Vec<Stmt>,
    pub finally: Option<(Item, Vec<Stmt>)>,
}

#[derive(Debug, Clone)]
pub(crate) enum Stmt {
    Simple { item: Item, events: Vec<Event> },
    /// `return`, `throw`, `raise`.
    Exit { item: Item, events: Vec<Event> },
    Jump { item: Item, kind: JumpKind, label: Option<String> },
    If { cond: Cond, then: Vec<Stmt>, otherwise: Vec<Stmt> },
    Loop(Loop),
    Switch(Switch),
    Try(Try),
    Labeled { label: String, body: Vec<Stmt> },
}

impl Stmt {
    /// Attaches a statement label to a loop or switch; other statements get
    /// wrapped so `break label` still has a target.
    pub fn labeled(self, label: String) -> Stmt {
        match self {
            Stmt::Loop(mut l) => {
                l.label = Some(label);
                Stmt::Loop(l)
            }
            Stmt::Switch(mut s) => {
                s.label = Some(label);
                Stmt::Switch(s)
            }
            other => Stmt::Labeled { label, body: vec![other] },
        }
    }
}

/// Lowers a whole file. The result is the top-level scope, named `<module>`.
pub(crate) fn lower(ast: &Ast, code: &str) -> Scope {
    let cx = Cx::new(ast, code);
    let body = match ast.language {
        Language::Python => python::lower(&cx),
        Language::Java => java::lower(&cx),
        Language::JavaScript => javascript::lower(&cx),
    };
    Scope::function(ast.root, "<module>", Vec::new(), body)
}

/// Whether `kind` names an identifier leaf that can be a data-flow node.
pub(crate) fn is_identifier_kind(language: Language, kind: &str) -> bool {
    match language {
        Language::Python | Language::Java => kind == "identifier",
        Language::JavaScript => {
            matches!(kind, "identifier" | "shorthand_property_identifier" | "shorthand_property_identifier_pattern")
        }
    }
}

/// Read occurrences among `events`, including those inside comprehensions
/// (which evaluate inline) but not inside function or class bodies.
pub(crate) fn direct_uses(events: &[Event]) -> Vec<NodeId> {
    let mut out = Vec::new();
    collect_uses(events, &mut out);
    out
}

fn collect_uses(events: &[Event], out: &mut Vec<NodeId>) {
    for event in events {
        match event {
            Event::Use(n) | Event::Update { target: n, .. } => out.push(*n),
            Event::Scope(scope) if scope.kind == ScopeKind::Comprehension => collect_uses(&scope.prologue, out),
            _ => {}
        }
    }
}

/// Read-only view of a tree with the helpers lowering needs.
pub(crate) struct Cx<'a> {
    pub ast: &'a Ast,
    pub code: &'a str,
    index: LineIndex,
}

impl<'a> Cx<'a> {
    fn new(ast: &'a Ast, code: &'a str) -> Self {
        Cx { ast, code, index: LineIndex::new(code) }
    }

    pub fn kind(&self, n: NodeId) -> &'static str {
        self.ast.nodes[n].kind
    }

    pub fn span(&self, n: NodeId) -> Span {
        self.ast.nodes[n].span
    }

    pub fn text(&self, n: NodeId) -> &'a str {
        let span = self.ast.nodes[n].span;
        &self.code[span.start_byte..span.end_byte]
    }

    pub fn children(&self, n: NodeId) -> &'a [NodeId] {
        &self.ast.nodes[n].children
    }

    pub fn named(&self, n: NodeId) -> impl Iterator<Item = NodeId> + 'a {
        let ast = self.ast;
        ast.nodes[n].children.iter().copied().filter(move |&c| ast.nodes[c].named)
    }

    pub fn field(&self, n: NodeId, name: &str) -> Option<NodeId> {
        self.children(n).iter().copied().find(|&c| self.ast.nodes[c].field == Some(name))
    }

    pub fn fields(&self, n: NodeId, name: &str) -> Vec<NodeId> {
        self.children(n).iter().copied().filter(|&c| self.ast.nodes[c].field == Some(name)).collect()
    }

    /// Named children that fill no grammar field.
    pub fn unfielded(&self, n: NodeId) -> Vec<NodeId> {
        self.named(n).filter(|&c| self.ast.nodes[c].field.is_none()).collect()
    }

    pub fn child_of_kind(&self, n: NodeId, kind: &str) -> Option<NodeId> {
        self.named(n).find(|&c| self.kind(c) == kind)
    }

    pub fn is_identifier(&self, n: NodeId) -> bool {
        let node = &self.ast.nodes[n];
        node.is_leaf() && is_identifier_kind(self.ast.language, node.kind)
    }

    /// Strips any number of enclosing parentheses.
    pub fn unparen(&self, mut n: NodeId) -> NodeId {
        while self.kind(n) == "parenthesized_expression" {
            match self.named(n).next() {
                Some(inner) => n = inner,
                None => break,
            }
        }
        n
    }

    pub fn item(&self, n: NodeId) -> Item {
        Item { node: n, span: self.span(n), text: self.text(n).trim().to_string() }
    }

    /// The text of `n` up to the start of `body`, minus a trailing `:` or
    /// `{`. Used for compound statements whose bodies are graphed elsewhere.
    pub fn header(&self, n: NodeId, body: Option<NodeId>) -> Item {
        let span = self.span(n);
        let end = body.map_or(span.end_byte, |b| self.span(b).start_byte.max(span.start_byte));
        let raw = &self.code[span.start_byte..end];
        let trimmed = raw.trim_end();
        let trimmed = trimmed.strip_suffix(':').unwrap_or(trimmed).trim_end();
        let text = if trimmed.is_empty() { self.text(n).trim() } else { trimmed };
        let end_byte = if trimmed.is_empty() { span.end_byte } else { span.start_byte + trimmed.len() };
        Item { node: n, span: self.index.span(span.start_byte, end_byte), text: text.to_string() }
    }
}
