//! Intraprocedural reaching definitions over identifier occurrences.
//!
//! Every identifier occurrence becomes a node, either a definition or a use.
//! A use gets a `comesFrom` edge to each definition of the same name that may
//! reach it; a definition gets `computedFrom` edges to the uses in its
//! right-hand side. Loop bodies are walked twice so values defined late in an
//! iteration reach uses at the loop head. Nested functions start from the
//! definitions visible where they are defined and do not leak their own.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use crate::lower::{self, Event, JumpKind, Loop, LoopKind, Scope, ScopeKind, Stmt, Switch, Try};
use crate::model::{Language, Span};
use crate::syntax::{Ast, NodeId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Use,
    Definition,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum FlowKind {
    #[serde(rename = "comesFrom")]
    ComesFrom,
    #[serde(rename = "computedFrom")]
    ComputedFrom,
}

impl FlowKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FlowKind::ComesFrom => "comesFrom",
            FlowKind::ComputedFrom => "computedFrom",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DfgNode {
    pub id: usize,
    pub name: String,
    pub role: Role,
    pub ast_node: NodeId,
    pub span: Span,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DfgEdge {
    pub src: usize,
    pub dst: usize,
    pub kind: FlowKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfg {
    pub nodes: Vec<DfgNode>,
    /// Sorted by `(src, dst, kind)`.
    pub edges: Vec<DfgEdge>,
    pub language: Language,
}

pub fn extract_dfg(ast: &Ast, code: &str) -> Dfg {
    let module = lower::lower(ast, code);
    extract_from(ast, &module)
}

pub(crate) fn extract_from(ast: &Ast, module: &Scope) -> Dfg {
    let mut occurrences = BTreeSet::new();
    collect_scope(module, &mut occurrences);
    let mut ordered: Vec<(NodeId, Role)> = occurrences.into_iter().collect();
    ordered.sort_by_key(|&(n, role)| (ast.nodes[n].span.start_byte, n, role));

    let mut nodes = Vec::with_capacity(ordered.len());
    let mut index = HashMap::with_capacity(ordered.len());
    for (id, &(n, role)) in ordered.iter().enumerate() {
        let leaf = &ast.nodes[n];
        nodes.push(DfgNode {
            id,
            name: leaf.text.clone().unwrap_or_default(),
            role,
            ast_node: n,
            span: leaf.span,
        });
        index.insert((n, role), id);
    }

    let mut walker = Walker { nodes: &nodes, index, edges: BTreeSet::new(), frames: Vec::new(), capture: None };
    walker.function(module, Env::default());
    let edges = walker.edges.into_iter().collect();
    Dfg { nodes, edges, language: ast.language }
}

fn collect_scope(scope: &Scope, out: &mut BTreeSet<(NodeId, Role)>) {
    collect_events(&scope.prologue, out);
    collect_stmts(&scope.body, out);
    for m in &scope.members {
        collect_scope(m, out);
    }
}

fn collect_events(events: &[Event], out: &mut BTreeSet<(NodeId, Role)>) {
    for e in events {
        match e {
            Event::Use(n) => {
                out.insert((*n, Role::Use));
            }
            Event::Def { target, .. } => {
                out.insert((*target, Role::Definition));
            }
            Event::Update { target, .. } => {
                out.insert((*target, Role::Use));
                out.insert((*target, Role::Definition));
            }
            Event::Scope(s) => collect_scope(s, out),
        }
    }
}

fn collect_stmts(stmts: &[Stmt], out: &mut BTreeSet<(NodeId, Role)>) {
    for s in stmts {
        match s {
            Stmt::Simple { events, .. } | Stmt::Exit { events, .. } => collect_events(events, out),
            Stmt::Jump { .. } => {}
            Stmt::If { cond, then, otherwise } => {
                collect_events(&cond.events, out);
                collect_stmts(then, out);
                collect_stmts(otherwise, out);
            }
            Stmt::Loop(l) => {
                collect_events(&l.init, out);
                collect_events(&l.head.events, out);
                collect_events(&l.bind, out);
                collect_events(&l.update, out);
                collect_stmts(&l.body, out);
                collect_stmts(&l.orelse, out);
            }
            Stmt::Switch(sw) => {
                collect_events(&sw.subject, out);
                for c in &sw.cases {
                    if let Some(t) = &c.test {
                        collect_events(&t.events, out);
                    }
                    collect_stmts(&c.body, out);
                }
            }
            Stmt::Try(t) => {
                collect_events(&t.setup, out);
                collect_stmts(&t.body, out);
                for h in &t.handlers {
                    collect_events(&h.events, out);
                    collect_stmts(&h.body, out);
                }
                collect_stmts(&t.orelse, out);
                if let Some((_, body)) = &t.finally {
                    collect_stmts(body, out);
                }
            }
            Stmt::Labeled { body, .. } => collect_stmts(body, out),
        }
    }
}

/// Reaching definitions per name. `None` marks an unreachable program point.
type Env = BTreeMap<String, BTreeSet<usize>>;
type State = Option<Env>;

fn join(a: State, b: State) -> State {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(mut a), Some(b)) => {
            for (name, defs) in b {
                a.entry(name).or_default().extend(defs);
            }
            Some(a)
        }
    }
}

struct Frame {
    label: Option<String>,
    is_loop: bool,
    /// Plain labeled statements only accept labeled breaks.
    accepts_plain_break: bool,
    breaks: State,
    continues: State,
}

struct Walker<'n> {
    nodes: &'n [DfgNode],
    index: HashMap<(NodeId, Role), usize>,
    edges: BTreeSet<DfgEdge>,
    frames: Vec<Frame>,
    /// Environment captured by functions defined directly in a class body
    /// whose members do not see the class's own names.
    capture: Option<Env>,
}

impl Walker<'_> {
    fn id(&self, n: NodeId, role: Role) -> usize {
        self.index[&(n, role)]
    }

    fn edge(&mut self, src: usize, dst: usize, kind: FlowKind) {
        self.edges.insert(DfgEdge { src, dst, kind });
    }

    fn use_of(&mut self, n: NodeId, state: &State) -> usize {
        let u = self.id(n, Role::Use);
        if let Some(env) = state {
            if let Some(defs) = env.get(&self.nodes[u].name) {
                for &d in defs.clone().iter() {
                    self.edge(u, d, FlowKind::ComesFrom);
                }
            }
        }
        u
    }

    fn define(&mut self, n: NodeId, sources: &[usize], weak: bool, state: &mut State) {
        let d = self.id(n, Role::Definition);
        for &s in sources {
            self.edge(d, s, FlowKind::ComputedFrom);
        }
        if let Some(env) = state {
            let entry = env.entry(self.nodes[d].name.clone()).or_default();
            if !weak {
                entry.clear();
            }
            entry.insert(d);
        }
    }

    fn events(&mut self, events: &[Event], state: &mut State) {
        for e in events {
            match e {
                Event::Use(n) => {
                    self.use_of(*n, state);
                }
                Event::Def { target, sources, weak } => {
                    let sources: Vec<usize> = sources.iter().map(|&s| self.id(s, Role::Use)).collect();
                    self.define(*target, &sources, *weak, state);
                }
                Event::Update { target, sources, weak } => {
                    let u = self.use_of(*target, state);
                    let mut all = vec![u];
                    all.extend(sources.iter().map(|&s| self.id(s, Role::Use)));
                    self.define(*target, &all, *weak, state);
                }
                Event::Scope(scope) => self.nested(scope, state),
            }
        }
    }

    fn nested(&mut self, scope: &Scope, state: &State) {
        let here = state.clone().unwrap_or_default();
        match scope.kind {
            ScopeKind::Function => {
                let start = self.capture.clone().unwrap_or(here);
                self.function(scope, start);
            }
            ScopeKind::Comprehension => {
                let mut inner = Some(here);
                self.events(&scope.prologue, &mut inner);
            }
            ScopeKind::Class { members_visible } => {
                let saved = self.capture.take();
                if !members_visible {
                    self.capture = Some(here.clone());
                }
                let mut inner = Some(here.clone());
                self.events(&scope.prologue, &mut inner);
                self.stmts(&scope.body, &mut inner);
                self.capture = None;
                let member_env = if members_visible { inner.unwrap_or_default() } else { here };
                for m in &scope.members {
                    self.nested(m, &Some(member_env.clone()));
                }
                self.capture = saved;
            }
        }
    }

    fn function(&mut self, scope: &Scope, start: Env) {
        let saved_frames = std::mem::take(&mut self.frames);
        let saved_capture = self.capture.take();
        let mut state = Some(start);
        self.events(&scope.prologue, &mut state);
        self.stmts(&scope.body, &mut state);
        self.frames = saved_frames;
        self.capture = saved_capture;
    }

    fn stmts(&mut self, stmts: &[Stmt], state: &mut State) {
        for s in stmts {
            self.stmt(s, state);
        }
    }

    fn stmt(&mut self, stmt: &Stmt, state: &mut State) {
        match stmt {
            Stmt::Simple { events, .. } => self.events(events, state),
            Stmt::Exit { events, .. } => {
                self.events(events, state);
                *state = None;
            }
            Stmt::Jump { kind, label, .. } => {
                let current = state.take();
                let target = self.frames.iter_mut().rev().find(|f| match (label, kind) {
                    (Some(l), _) => f.label.as_deref() == Some(l.as_str()),
                    (None, JumpKind::Break) => f.accepts_plain_break,
                    (None, JumpKind::Continue) => f.is_loop,
                });
                if let Some(frame) = target {
                    match kind {
                        JumpKind::Break => frame.breaks = join(frame.breaks.take(), current),
                        JumpKind::Continue => frame.continues = join(frame.continues.take(), current),
                    }
                }
            }
            Stmt::If { cond, then, otherwise } => {
                self.events(&cond.events, state);
                let mut t = state.clone();
                self.stmts(then, &mut t);
                let mut f = state.take();
                self.stmts(otherwise, &mut f);
                *state = join(t, f);
            }
            Stmt::Loop(l) => self.looping(l, state),
            Stmt::Switch(sw) => self.switch(sw, state),
            Stmt::Try(t) => self.try_stmt(t, state),
            Stmt::Labeled { label, body } => {
                self.frames.push(Frame {
                    label: Some(label.clone()),
                    is_loop: false,
                    accepts_plain_break: false,
                    breaks: None,
                    continues: None,
                });
                self.stmts(body, state);
                let frame = self.frames.pop().expect("frame pushed above");
                *state = join(state.take(), frame.breaks);
            }
        }
    }

    fn looping(&mut self, l: &Loop, state: &mut State) {
        self.events(&l.init, state);
        let entry = state.clone();
        let mut head_in = entry.clone();
        let mut exit = None;
        for _pass in 0..2 {
            self.frames.push(Frame {
                label: l.label.clone(),
                is_loop: true,
                accepts_plain_break: true,
                breaks: None,
                continues: None,
            });
            let (after_head, back) = if l.kind == LoopKind::DoWhile {
                let mut body = head_in.clone();
                self.events(&l.bind, &mut body);
                self.stmts(&l.body, &mut body);
                let continues = self.frames.last_mut().expect("loop frame").continues.take();
                let mut cond = join(body, continues);
                self.events(&l.head.events, &mut cond);
                (cond.clone(), cond)
            } else {
                let mut head = head_in.clone();
                self.events(&l.head.events, &mut head);
                let mut body = head.clone();
                self.events(&l.bind, &mut body);
                self.stmts(&l.body, &mut body);
                let continues = self.frames.last_mut().expect("loop frame").continues.take();
                let mut back = join(body, continues);
                self.events(&l.update, &mut back);
                (head, back)
            };
            let frame = self.frames.pop().expect("loop frame");
            let mut normal = after_head;
            self.stmts(&l.orelse, &mut normal);
            exit = join(normal, frame.breaks);
            head_in = join(entry.clone(), back);
        }
        *state = exit;
    }

    fn switch(&mut self, sw: &Switch, state: &mut State) {
        self.events(&sw.subject, state);
        self.frames.push(Frame {
            label: sw.label.clone(),
            is_loop: false,
            accepts_plain_break: true,
            breaks: None,
            continues: None,
        });
        let mut test = state.take();
        let mut entries = Vec::with_capacity(sw.cases.len());
        for case in &sw.cases {
            match &case.test {
                Some(cond) => {
                    let mut t = test.clone();
                    self.events(&cond.events, &mut t);
                    // A failed test still ran its side effects.
                    test = t.clone();
                    entries.push(Some(t));
                }
                None => entries.push(None),
            }
        }
        let has_default = sw.cases.iter().any(|c| c.test.is_none());
        let mut exit = None;
        let mut fall = None;
        for (case, entry) in sw.cases.iter().zip(entries) {
            let entry = entry.unwrap_or_else(|| test.clone());
            let mut body = if sw.fallthrough { join(entry, fall.take()) } else { entry };
            self.stmts(&case.body, &mut body);
            if sw.fallthrough {
                fall = body;
            } else {
                exit = join(exit, body);
            }
        }
        exit = join(exit, fall);
        if !has_default {
            exit = join(exit, test);
        }
        let frame = self.frames.pop().expect("switch frame");
        *state = join(exit, frame.breaks);
    }

    fn try_stmt(&mut self, t: &Try, state: &mut State) {
        self.events(&t.setup, state);
        let start = state.clone();
        let mut body = state.take();
        self.stmts(&t.body, &mut body);
        // Any statement of the body may raise, so handlers see both the
        // state on entry and the state at the end of the body.
        let handler_in = join(start, body.clone());
        let mut handled = None;
        for h in &t.handlers {
            let mut s = handler_in.clone();
            self.events(&h.events, &mut s);
            self.stmts(&h.body, &mut s);
            handled = join(handled, s);
        }
        self.stmts(&t.orelse, &mut body);
        let mut out = join(body, handled);
        if let Some((_, fin)) = &t.finally {
            self.stmts(fin, &mut out);
        }
        *state = out;
    }
}
