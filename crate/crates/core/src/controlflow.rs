//! Per-function control-flow graphs over basic blocks.
//!
//! Straight-line statements accumulate into maximal body blocks. Every
//! branch condition (including loop headers and switch cases) gets its own
//! condition block with exactly one `true` and one `false` successor.
//! `try` bodies are treated as ordinary flow; each handler hangs off the
//! block holding the `try` and is marked approximate. Blocks that no path
//! from entry reaches are kept and flagged.

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use crate::lower::{self, Event, Item, JumpKind, Loop, LoopKind, Scope, ScopeKind, Stmt, Switch, Try};
use crate::model::Span;
use crate::syntax::{Ast, NodeId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BlockKind {
    Entry,
    Exit,
    Body,
    Condition,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgeLabel {
    Unconditional,
    True,
    False,
    LoopBack,
}

impl EdgeLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            EdgeLabel::Unconditional => "unconditional",
            EdgeLabel::True => "true",
            EdgeLabel::False => "false",
            EdgeLabel::LoopBack => "loop-back",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Statement {
    pub ast_node: NodeId,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasicBlock {
    pub id: usize,
    pub kind: BlockKind,
    /// `None` for entry and exit.
    pub span: Option<Span>,
    pub statements: Vec<Statement>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub unreachable: bool,
    /// Exception handler reached by an assumed edge from the `try`.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub approximate: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CfgEdge {
    pub src: usize,
    pub dst: usize,
    pub label: EdgeLabel,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cfg {
    /// Qualified name, `<module>` for top-level code.
    pub function_name: String,
    pub blocks: Vec<BasicBlock>,
    /// Sorted by `(src, dst, label)`.
    pub edges: Vec<CfgEdge>,
    pub entry: usize,
    pub exit: usize,
}

impl Cfg {
    pub fn successors(&self, block: usize) -> impl Iterator<Item = &CfgEdge> {
        self.edges.iter().filter(move |e| e.src == block)
    }

    pub fn in_degree(&self, block: usize) -> usize {
        self.edges.iter().filter(|e| e.dst == block).count()
    }

    pub fn out_degree(&self, block: usize) -> usize {
        self.edges.iter().filter(|e| e.src == block).count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CfgSet {
    /// Top-level code first, then functions in source order.
    pub graphs: Vec<Cfg>,
}

pub fn extract_cfg(ast: &Ast, code: &str) -> CfgSet {
    let module = lower::lower(ast, code);
    extract_from(ast, &module)
}

pub(crate) fn extract_from(ast: &Ast, module: &Scope) -> CfgSet {
    let mut functions = Vec::new();
    functions.push((module.name.clone(), module));
    for scope in nested_scopes(module) {
        collect_functions(scope, "", &mut functions);
    }
    let mut rest = functions.split_off(1);
    rest.sort_by_key(|(_, s)| (ast.nodes[s.node].span.start_byte, s.node));
    functions.extend(rest);

    let mut seen: BTreeMap<String, usize> = BTreeMap::new();
    let graphs = functions
        .into_iter()
        .map(|(name, scope)| {
            let count = seen.entry(name.clone()).or_insert(0);
            *count += 1;
            let name = if *count == 1 { name } else { format!("{name}#{count}") };
            build(name, &scope.body)
        })
        .collect();
    CfgSet { graphs }
}

fn collect_functions<'s>(scope: &'s Scope, prefix: &str, out: &mut Vec<(String, &'s Scope)>) {
    let qualified = if prefix.is_empty() { scope.name.clone() } else { format!("{prefix}.{}", scope.name) };
    let child_prefix = match scope.kind {
        ScopeKind::Comprehension => prefix.to_string(),
        _ => qualified.clone(),
    };
    if scope.kind == ScopeKind::Function && scope.has_body {
        out.push((qualified, scope));
    }
    for child in nested_scopes(scope) {
        collect_functions(child, &child_prefix, out);
    }
}

/// Scopes directly nested in `scope`, in no particular order.
fn nested_scopes(scope: &Scope) -> Vec<&Scope> {
    let mut out = Vec::new();
    events_scopes(&scope.prologue, &mut out);
    stmts_scopes(&scope.body, &mut out);
    out.extend(scope.members.iter());
    out
}

fn events_scopes<'s>(events: &'s [Event], out: &mut Vec<&'s Scope>) {
    for e in events {
        if let Event::Scope(s) = e {
            out.push(s);
        }
    }
}

fn stmts_scopes<'s>(stmts: &'s [Stmt], out: &mut Vec<&'s Scope>) {
    for s in stmts {
        match s {
            Stmt::Simple { events, .. } | Stmt::Exit { events, .. } => events_scopes(events, out),
            Stmt::Jump { .. } => {}
            Stmt::If { cond, then, otherwise } => {
                events_scopes(&cond.events, out);
                stmts_scopes(then, out);
                stmts_scopes(otherwise, out);
            }
            Stmt::Loop(l) => {
                events_scopes(&l.init, out);
                events_scopes(&l.head.events, out);
                events_scopes(&l.bind, out);
                events_scopes(&l.update, out);
                stmts_scopes(&l.body, out);
                stmts_scopes(&l.orelse, out);
            }
            Stmt::Switch(sw) => {
                events_scopes(&sw.subject, out);
                for c in &sw.cases {
                    if let Some(t) = &c.test {
                        events_scopes(&t.events, out);
                    }
                    stmts_scopes(&c.body, out);
                }
            }
            Stmt::Try(t) => {
                events_scopes(&t.setup, out);
                stmts_scopes(&t.body, out);
                for h in &t.handlers {
                    events_scopes(&h.events, out);
                    stmts_scopes(&h.body, out);
                }
                stmts_scopes(&t.orelse, out);
                if let Some((_, body)) = &t.finally {
                    stmts_scopes(body, out);
                }
            }
            Stmt::Labeled { body, .. } => stmts_scopes(body, out),
        }
    }
}

type Pending = Vec<(usize, EdgeLabel)>;

struct Block {
    kind: BlockKind,
    items: Vec<Item>,
    approximate: bool,
}

struct Frame {
    label: Option<String>,
    is_loop: bool,
    accepts_plain_break: bool,
    breaks: Pending,
    continues: Pending,
}

struct Builder {
    blocks: Vec<Block>,
    edges: Vec<CfgEdge>,
    out_degree: Vec<usize>,
    /// Dangling edges that lead to whatever block comes next.
    frontier: Pending,
    /// Makes the next statement start a new block even if it could extend
    /// the current one (it is a jump target).
    force_new: bool,
    frames: Vec<Frame>,
}

const ENTRY: usize = 0;
const EXIT: usize = 1;

fn build(function_name: String, body: &[Stmt]) -> Cfg {
    let mut b = Builder {
        blocks: Vec::new(),
        edges: Vec::new(),
        out_degree: Vec::new(),
        frontier: Vec::new(),
        force_new: false,
        frames: Vec::new(),
    };
    b.new_block(BlockKind::Entry);
    b.new_block(BlockKind::Exit);
    b.frontier = vec![(ENTRY, EdgeLabel::Unconditional)];
    b.stmts(body);
    let frontier = std::mem::take(&mut b.frontier);
    b.connect(frontier, EXIT);
    b.finish(function_name)
}

impl Builder {
    fn new_block(&mut self, kind: BlockKind) -> usize {
        self.blocks.push(Block { kind, items: Vec::new(), approximate: false });
        self.out_degree.push(0);
        self.blocks.len() - 1
    }

    fn connect(&mut self, pending: Pending, dst: usize) {
        for (src, label) in pending {
            self.edges.push(CfgEdge { src, dst, label });
            self.out_degree[src] += 1;
        }
    }

    /// Appends a statement, extending the current block when control can
    /// only arrive from it. Returns the block holding the statement.
    fn statement(&mut self, item: &Item) -> usize {
        let force = std::mem::take(&mut self.force_new);
        if let [(prev, EdgeLabel::Unconditional)] = self.frontier[..] {
            if !force && self.blocks[prev].kind == BlockKind::Body && self.out_degree[prev] == 0 {
                self.blocks[prev].items.push(item.clone());
                return prev;
            }
        }
        let block = self.new_block(BlockKind::Body);
        self.blocks[block].items.push(item.clone());
        let frontier = std::mem::take(&mut self.frontier);
        self.connect(frontier, block);
        self.frontier = vec![(block, EdgeLabel::Unconditional)];
        block
    }

    fn condition(&mut self, item: &Item) -> usize {
        self.force_new = false;
        let block = self.new_block(BlockKind::Condition);
        self.blocks[block].items.push(item.clone());
        let frontier = std::mem::take(&mut self.frontier);
        self.connect(frontier, block);
        block
    }

    fn stmts(&mut self, stmts: &[Stmt]) {
        for s in stmts {
            self.stmt(s);
        }
    }

    fn stmt(&mut self, stmt: &Stmt) {
        match stmt {
            Stmt::Simple { item, .. } => {
                self.statement(item);
            }
            Stmt::Exit { item, .. } => {
                let block = self.statement(item);
                self.connect(vec![(block, EdgeLabel::Unconditional)], EXIT);
                self.frontier.clear();
            }
            Stmt::Jump { item, kind, label } => {
                let block = self.statement(item);
                self.frontier.clear();
                let target = self.frames.iter_mut().rev().find(|f| match (label, kind) {
                    (Some(l), _) => f.label.as_deref() == Some(l.as_str()),
                    (None, JumpKind::Break) => f.accepts_plain_break,
                    (None, JumpKind::Continue) => f.is_loop,
                });
                if let Some(frame) = target {
                    match kind {
                        JumpKind::Break => frame.breaks.push((block, EdgeLabel::Unconditional)),
                        JumpKind::Continue => frame.continues.push((block, EdgeLabel::Unconditional)),
                    }
                }
            }
            Stmt::If { cond, then, otherwise } => {
                let c = self.condition(&cond.item);
                self.frontier = vec![(c, EdgeLabel::True)];
                self.stmts(then);
                let after_then = std::mem::take(&mut self.frontier);
                self.frontier = vec![(c, EdgeLabel::False)];
                self.stmts(otherwise);
                let mut join = after_then;
                join.append(&mut self.frontier);
                self.frontier = join;
            }
            Stmt::Loop(l) => self.looping(l),
            Stmt::Switch(sw) => self.switch(sw),
            Stmt::Try(t) => self.try_stmt(t),
            Stmt::Labeled { label, body } => {
                self.frames.push(Frame {
                    label: Some(label.clone()),
                    is_loop: false,
                    accepts_plain_break: false,
                    breaks: Vec::new(),
                    continues: Vec::new(),
                });
                self.stmts(body);
                let frame = self.frames.pop().expect("frame pushed above");
                self.frontier.extend(frame.breaks);
            }
        }
    }

    fn push_loop_frame(&mut self, label: &Option<String>) {
        self.frames.push(Frame {
            label: label.clone(),
            is_loop: true,
            accepts_plain_break: true,
            breaks: Vec::new(),
            continues: Vec::new(),
        });
    }

    fn looping(&mut self, l: &Loop) {
        if l.kind == LoopKind::DoWhile {
            self.push_loop_frame(&l.label);
            self.force_new = true;
            let first = self.blocks.len();
            self.stmts(&l.body);
            let body_created = self.blocks.len() > first;
            let frame = self.frames.pop().expect("loop frame");
            self.frontier.extend(frame.continues);
            let c = self.condition(&l.head.item);
            let target = if body_created { first } else { c };
            self.connect(vec![(c, EdgeLabel::True)], target);
            self.frontier = vec![(c, EdgeLabel::False)];
            self.frontier.extend(frame.breaks);
            return;
        }

        let c = self.condition(&l.head.item);
        self.push_loop_frame(&l.label);
        self.frontier = vec![(c, EdgeLabel::True)];
        self.stmts(&l.body);
        let frame = self.frames.pop().expect("loop frame");
        let mut back: Pending = std::mem::take(&mut self.frontier)
            .into_iter()
            .chain(frame.continues)
            .map(|(src, label)| (src, if label == EdgeLabel::Unconditional { EdgeLabel::LoopBack } else { label }))
            .collect();
        back.sort();
        self.connect(back, c);
        self.frontier = vec![(c, EdgeLabel::False)];
        self.stmts(&l.orelse);
        self.frontier.extend(frame.breaks);
    }

    fn switch(&mut self, sw: &Switch) {
        self.statement(&sw.header);
        self.frames.push(Frame {
            label: sw.label.clone(),
            is_loop: false,
            accepts_plain_break: true,
            breaks: Vec::new(),
            continues: Vec::new(),
        });
        let mut entries: Vec<Pending> = Vec::with_capacity(sw.cases.len());
        for case in &sw.cases {
            match &case.test {
                Some(test) => {
                    let c = self.condition(&test.item);
                    entries.push(vec![(c, EdgeLabel::True)]);
                    self.frontier = vec![(c, EdgeLabel::False)];
                }
                None => entries.push(Vec::new()),
            }
        }
        let mut unmatched = std::mem::take(&mut self.frontier);
        let mut exits = Vec::new();
        let mut fall = Vec::new();
        for (case, mut entry) in sw.cases.iter().zip(entries) {
            if case.test.is_none() {
                entry = std::mem::take(&mut unmatched);
            }
            if sw.fallthrough {
                entry.append(&mut fall);
            }
            self.frontier = entry;
            self.stmts(&case.body);
            if sw.fallthrough {
                fall = std::mem::take(&mut self.frontier);
            } else {
                exits.append(&mut self.frontier);
            }
        }
        exits.append(&mut fall);
        exits.append(&mut unmatched);
        let frame = self.frames.pop().expect("switch frame");
        exits.extend(frame.breaks);
        self.frontier = exits;
    }

    fn try_stmt(&mut self, t: &Try) {
        let entry = self.statement(&t.header);
        if !t.handlers.is_empty() {
            self.force_new = true;
        }
        self.stmts(&t.body);
        self.force_new = false;
        self.stmts(&t.orelse);
        let mut done = std::mem::take(&mut self.frontier);
        for h in &t.handlers {
            self.frontier = vec![(entry, EdgeLabel::Unconditional)];
            self.force_new = true;
            let block = self.statement(&h.header);
            self.blocks[block].approximate = true;
            self.stmts(&h.body);
            done.append(&mut self.frontier);
        }
        self.frontier = done;
        if let Some((item, body)) = &t.finally {
            self.statement(item);
            self.stmts(body);
        }
    }

    fn finish(self, function_name: String) -> Cfg {
        // Exit moves to the end so block ids follow creation order.
        let n = self.blocks.len();
        let renumber = |old: usize| match old {
            ENTRY => 0,
            EXIT => n - 1,
            other => other - 1,
        };
        let mut edges: Vec<CfgEdge> = self
            .edges
            .iter()
            .map(|e| CfgEdge { src: renumber(e.src), dst: renumber(e.dst), label: e.label })
            .collect();
        edges.sort();
        edges.dedup();

        let mut reached = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        reached[0] = true;
        while let Some(b) = queue.pop_front() {
            for e in edges.iter().filter(|e| e.src == b) {
                if !reached[e.dst] {
                    reached[e.dst] = true;
                    queue.push_back(e.dst);
                }
            }
        }

        let mut blocks: Vec<BasicBlock> = Vec::with_capacity(n);
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&old| renumber(old));
        for old in order {
            let block = &self.blocks[old];
            let id = renumber(old);
            let span = block.items.iter().map(|i| i.span).reduce(|a, b| a.cover(&b));
            blocks.push(BasicBlock {
                id,
                kind: block.kind,
                span,
                statements: block.items.iter().map(|i| Statement { ast_node: i.node, text: i.text.clone() }).collect(),
                unreachable: !reached[id],
                approximate: block.approximate,
            });
        }
        Cfg { function_name, blocks, edges, entry: 0, exit: n - 1 }
    }
}
