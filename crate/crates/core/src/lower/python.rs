use super::{direct_uses, Case, Cond, Cx, Event, Handler, JumpKind, Loop, LoopKind, Scope, ScopeKind, Stmt, Switch, Try};
use crate::syntax::NodeId;

pub(super) fn lower(cx: &Cx) -> Vec<Stmt> {
    Py { cx }.block(cx.ast.root)
}

struct Py<'c, 'a> {
    cx: &'c Cx<'a>,
}

impl Py<'_, '_> {
    fn block(&self, n: NodeId) -> Vec<Stmt> {
        let mut out = Vec::new();
        for c in self.cx.named(n) {
            self.stmt(c, &mut out);
        }
        out
    }

    fn opt_block(&self, n: Option<NodeId>) -> Vec<Stmt> {
        n.map(|n| self.block(n)).unwrap_or_default()
    }

    fn stmt(&self, n: NodeId, out: &mut Vec<Stmt>) {
        let cx = self.cx;
        match cx.kind(n) {
            "block" => out.extend(self.block(n)),
            "if_statement" => out.push(self.if_stmt(n)),
            "while_statement" => {
                let cond = cx.field(n, "condition").map(|c| self.cond(c)).unwrap_or_else(|| self.empty_cond(n));
                out.push(Stmt::Loop(Loop {
                    kind: LoopKind::While,
                    label: None,
                    head: cond,
                    init: Vec::new(),
                    bind: Vec::new(),
                    update: Vec::new(),
                    body: self.opt_block(cx.field(n, "body")),
                    orelse: self.else_body(cx.field(n, "alternative")),
                }));
            }
            "for_statement" => out.push(self.for_stmt(n)),
            "try_statement" => out.push(self.try_stmt(n)),
            "with_statement" => {
                let body = cx.field(n, "body");
                let mut events = Vec::new();
                for clause in cx.named(n).filter(|&c| cx.kind(c) == "with_clause") {
                    for item in cx.named(clause) {
                        for value in cx.fields(item, "value") {
                            self.with_value(value, &mut events);
                        }
                    }
                }
                out.push(Stmt::Simple { item: cx.header(n, body), events });
                out.extend(self.opt_block(body));
            }
            "function_definition" => out.push(self.function_def(n, n, Vec::new())),
            "class_definition" => out.push(self.class_def(n, n, Vec::new())),
            "decorated_definition" => {
                let mut events = Vec::new();
                for d in cx.named(n).filter(|&c| cx.kind(c) == "decorator") {
                    self.exprs(d, &mut events);
                }
                match cx.field(n, "definition") {
                    Some(def) if cx.kind(def) == "class_definition" => out.push(self.class_def(n, def, events)),
                    Some(def) => out.push(self.function_def(n, def, events)),
                    None => out.push(Stmt::Simple { item: cx.item(n), events }),
                }
            }
            "match_statement" => out.push(self.match_stmt(n)),
            "return_statement" | "raise_statement" => {
                let mut events = Vec::new();
                self.exprs(n, &mut events);
                out.push(Stmt::Exit { item: cx.item(n), events });
            }
            "break_statement" => out.push(Stmt::Jump { item: cx.item(n), kind: JumpKind::Break, label: None }),
            "continue_statement" => out.push(Stmt::Jump { item: cx.item(n), kind: JumpKind::Continue, label: None }),
            "import_statement" | "import_from_statement" => {
                let mut events = Vec::new();
                for name in cx.fields(n, "name") {
                    self.import_name(name, &mut events);
                }
                out.push(Stmt::Simple { item: cx.item(n), events });
            }
            "future_import_statement" | "global_statement" | "nonlocal_statement" | "pass_statement" => {
                out.push(Stmt::Simple { item: cx.item(n), events: Vec::new() });
            }
            _ => {
                let mut events = Vec::new();
                self.exprs(n, &mut events);
                out.push(Stmt::Simple { item: cx.item(n), events });
            }
        }
    }

    fn cond(&self, n: NodeId) -> Cond {
        let mut events = Vec::new();
        self.expr(n, &mut events);
        Cond { item: self.cx.item(n), events }
    }

    fn empty_cond(&self, n: NodeId) -> Cond {
        Cond { item: self.cx.header(n, None), events: Vec::new() }
    }

    fn else_body(&self, clause: Option<NodeId>) -> Vec<Stmt> {
        clause.map(|c| self.opt_block(self.cx.field(c, "body"))).unwrap_or_default()
    }

    fn if_stmt(&self, n: NodeId) -> Stmt {
        let cx = self.cx;
        let cond = cx.field(n, "condition").map(|c| self.cond(c)).unwrap_or_else(|| self.empty_cond(n));
        let then = self.opt_block(cx.field(n, "consequence"));
        let mut otherwise = Vec::new();
        for alt in cx.fields(n, "alternative").into_iter().rev() {
            if cx.kind(alt) == "elif_clause" {
                let cond = cx.field(alt, "condition").map(|c| self.cond(c)).unwrap_or_else(|| self.empty_cond(alt));
                let then = self.opt_block(cx.field(alt, "consequence"));
                otherwise = vec![Stmt::If { cond, then, otherwise }];
            } else {
                otherwise = self.opt_block(cx.field(alt, "body"));
            }
        }
        Stmt::If { cond, then, otherwise }
    }

    fn for_stmt(&self, n: NodeId) -> Stmt {
        let cx = self.cx;
        let body = cx.field(n, "body");
        let mut init = Vec::new();
        for right in cx.fields(n, "right") {
            self.expr(right, &mut init);
        }
        let sources = direct_uses(&init);
        let mut bind = Vec::new();
        if let Some(left) = cx.field(n, "left") {
            self.targets(left, &sources, &mut bind);
        }
        Stmt::Loop(Loop {
            kind: LoopKind::For,
            label: None,
            head: Cond { item: cx.header(n, body), events: Vec::new() },
            init,
            bind,
            update: Vec::new(),
            body: self.opt_block(body),
            orelse: self.else_body(cx.field(n, "alternative")),
        })
    }

    fn try_stmt(&self, n: NodeId) -> Stmt {
        let cx = self.cx;
        let body = cx.field(n, "body");
        let mut handlers = Vec::new();
        let mut orelse = Vec::new();
        let mut finally = None;
        for c in cx.named(n) {
            match cx.kind(c) {
                "except_clause" | "except_group_clause" => {
                    let block = cx.child_of_kind(c, "block");
                    let mut events = Vec::new();
                    for v in cx.named(c).filter(|&v| Some(v) != block) {
                        self.with_value(v, &mut events);
                    }
                    handlers.push(Handler { header: cx.header(c, block), events, body: self.opt_block(block) });
                }
                "else_clause" => orelse = self.opt_block(cx.field(c, "body")),
                "finally_clause" => {
                    let block = cx.child_of_kind(c, "block");
                    finally = Some((cx.header(c, block), self.opt_block(block)));
                }
                _ => {}
            }
        }
        Stmt::Try(Try { header: cx.header(n, body), setup: Vec::new(), body: self.opt_block(body), handlers, orelse, finally })
    }

    /// `value` or `value as target`, as found in `with` items and handlers.
    fn with_value(&self, n: NodeId, events: &mut Vec<Event>) {
        let cx = self.cx;
        if cx.kind(n) != "as_pattern" {
            self.expr(n, events);
            return;
        }
        let alias = cx.field(n, "alias");
        let mut value = Vec::new();
        for c in cx.named(n).filter(|&c| Some(c) != alias) {
            self.expr(c, &mut value);
        }
        let sources = direct_uses(&value);
        events.extend(value);
        if let Some(alias) = alias {
            self.targets(alias, &sources, events);
        }
    }

    fn function_def(&self, stmt: NodeId, def: NodeId, mut events: Vec<Event>) -> Stmt {
        let cx = self.cx;
        let body = cx.field(def, "body");
        let name = cx.field(def, "name");
        let prologue = match cx.field(def, "parameters") {
            Some(p) => self.params(p, &mut events),
            None => Vec::new(),
        };
        let scope_name = name.map_or("<anonymous>", |n| cx.text(n));
        events.push(Event::Scope(Box::new(Scope::function(def, scope_name, prologue, self.opt_block(body)))));
        if let Some(name) = name {
            events.push(Event::Def { target: name, sources: Vec::new(), weak: false });
        }
        Stmt::Simple { item: cx.header(stmt, body), events }
    }

    fn class_def(&self, stmt: NodeId, def: NodeId, mut events: Vec<Event>) -> Stmt {
        let cx = self.cx;
        let body = cx.field(def, "body");
        let name = cx.field(def, "name");
        if let Some(supers) = cx.field(def, "superclasses") {
            self.exprs(supers, &mut events);
        }
        events.push(Event::Scope(Box::new(Scope {
            kind: ScopeKind::Class { members_visible: false },
            node: def,
            name: name.map_or("<anonymous>", |n| cx.text(n)).to_string(),
            prologue: Vec::new(),
            body: self.opt_block(body),
            members: Vec::new(),
            has_body: true,
        })));
        if let Some(name) = name {
            events.push(Event::Def { target: name, sources: Vec::new(), weak: false });
        }
        Stmt::Simple { item: cx.header(stmt, body), events }
    }

    fn match_stmt(&self, n: NodeId) -> Stmt {
        let cx = self.cx;
        let body = cx.field(n, "body");
        let mut subject = Vec::new();
        for s in cx.fields(n, "subject") {
            self.expr(s, &mut subject);
        }
        let sources = direct_uses(&subject);
        let mut cases = Vec::new();
        for clause in body.into_iter().flat_map(|b| cx.named(b)).filter(|&c| cx.kind(c) == "case_clause") {
            let consequence = cx.field(clause, "consequence");
            let guard = cx.field(clause, "guard");
            let patterns: Vec<NodeId> = cx.named(clause).filter(|&c| cx.kind(c) == "case_pattern").collect();
            let wildcard = guard.is_none() && patterns.len() == 1 && cx.named(patterns[0]).next().is_none();
            let test = if wildcard {
                None
            } else {
                let mut events = Vec::new();
                for p in patterns {
                    self.case_pattern(p, &sources, &mut events);
                }
                if let Some(g) = guard {
                    self.exprs(g, &mut events);
                }
                Some(Cond { item: cx.header(clause, consequence), events })
            };
            cases.push(Case { test, body: self.opt_block(consequence) });
        }
        Stmt::Switch(Switch { label: None, header: cx.header(n, body), subject, cases, fallthrough: false })
    }

    fn case_pattern(&self, n: NodeId, sources: &[NodeId], events: &mut Vec<Event>) {
        let cx = self.cx;
        match cx.kind(n) {
            "identifier" => events.push(Event::Def { target: n, sources: sources.to_vec(), weak: false }),
            "dotted_name" => {
                let parts: Vec<NodeId> = cx.named(n).collect();
                match parts.as_slice() {
                    [single] => events.push(Event::Def { target: *single, sources: sources.to_vec(), weak: false }),
                    [first, ..] => events.push(Event::Use(*first)),
                    [] => {}
                }
            }
            "class_pattern" => {
                for c in cx.named(n) {
                    if cx.kind(c) == "dotted_name" {
                        if let Some(first) = cx.named(c).next() {
                            events.push(Event::Use(first));
                        }
                    } else {
                        self.case_pattern(c, sources, events);
                    }
                }
            }
            "keyword_pattern" => {
                for c in cx.named(n).skip(1) {
                    self.case_pattern(c, sources, events);
                }
            }
            _ => {
                for c in cx.named(n) {
                    self.case_pattern(c, sources, events);
                }
            }
        }
    }

    fn import_name(&self, n: NodeId, events: &mut Vec<Event>) {
        let cx = self.cx;
        let target = match cx.kind(n) {
            "aliased_import" => cx.field(n, "alias"),
            "dotted_name" => cx.named(n).next(),
            "identifier" => Some(n),
            _ => None,
        };
        if let Some(t) = target {
            events.push(Event::Def { target: t, sources: Vec::new(), weak: false });
        }
    }

    /// Parameter bindings inside the function; default values are evaluated
    /// outside, into `outside`.
    fn params(&self, n: NodeId, outside: &mut Vec<Event>) -> Vec<Event> {
        let cx = self.cx;
        let mut inside = Vec::new();
        for p in cx.named(n) {
            match cx.kind(p) {
                "identifier" => inside.push(Event::Def { target: p, sources: Vec::new(), weak: false }),
                "default_parameter" | "typed_default_parameter" => {
                    let mut value = Vec::new();
                    if let Some(v) = cx.field(p, "value") {
                        self.expr(v, &mut value);
                    }
                    let sources = direct_uses(&value);
                    outside.extend(value);
                    if let Some(name) = cx.field(p, "name") {
                        self.targets(name, &sources, &mut inside);
                    }
                }
                "typed_parameter" => {
                    for c in cx.named(p).filter(|&c| cx.kind(c) != "type") {
                        self.targets(c, &[], &mut inside);
                    }
                }
                "list_splat_pattern" | "dictionary_splat_pattern" | "tuple_pattern" => self.targets(p, &[], &mut inside),
                _ => {}
            }
        }
        inside
    }

    fn assignment(&self, n: NodeId, events: &mut Vec<Event>) {
        let cx = self.cx;
        let mut value = Vec::new();
        let right = cx.field(n, "right");
        if let Some(r) = right {
            self.expr(r, &mut value);
        }
        let sources = direct_uses(&value);
        events.extend(value);
        if let Some(left) = cx.field(n, "left") {
            self.targets(left, &sources, events);
        }
    }

    fn targets(&self, t: NodeId, sources: &[NodeId], events: &mut Vec<Event>) {
        let cx = self.cx;
        match cx.kind(t) {
            "identifier" => events.push(Event::Def { target: t, sources: sources.to_vec(), weak: false }),
            "attribute" | "subscript" => self.base(t, sources, false, events),
            "pattern_list" | "tuple_pattern" | "list_pattern" | "tuple" | "list" | "expression_list" | "list_splat_pattern"
            | "dictionary_splat_pattern" | "list_splat" | "parenthesized_expression" | "as_pattern_target" => {
                for c in cx.named(t) {
                    self.targets(c, sources, events);
                }
            }
            _ => self.expr(t, events),
        }
    }

    /// A write through `a.b` or `a[i]` weakly (re)defines the base `a`.
    fn base(&self, t: NodeId, sources: &[NodeId], update: bool, events: &mut Vec<Event>) {
        let cx = self.cx;
        let t = cx.unparen(t);
        match cx.kind(t) {
            "identifier" if update => events.push(Event::Update { target: t, sources: sources.to_vec(), weak: true }),
            "identifier" => events.push(Event::Def { target: t, sources: sources.to_vec(), weak: true }),
            "attribute" => {
                if let Some(obj) = cx.field(t, "object") {
                    self.base(obj, sources, update, events);
                }
            }
            "subscript" => {
                for s in cx.fields(t, "subscript") {
                    self.expr(s, events);
                }
                if let Some(v) = cx.field(t, "value") {
                    self.base(v, sources, update, events);
                }
            }
            _ => self.expr(t, events),
        }
    }

    fn exprs(&self, n: NodeId, events: &mut Vec<Event>) {
        for c in self.cx.named(n) {
            self.expr(c, events);
        }
    }

    fn expr(&self, n: NodeId, events: &mut Vec<Event>) {
        let cx = self.cx;
        match cx.kind(n) {
            "identifier" => events.push(Event::Use(n)),
            "type" | "keyword_separator" | "positional_separator" => {}
            "assignment" => self.assignment(n, events),
            "augmented_assignment" => {
                let mut value = Vec::new();
                if let Some(r) = cx.field(n, "right") {
                    self.expr(r, &mut value);
                }
                let sources = direct_uses(&value);
                events.extend(value);
                if let Some(left) = cx.field(n, "left") {
                    let left = cx.unparen(left);
                    if cx.kind(left) == "identifier" {
                        events.push(Event::Update { target: left, sources, weak: false });
                    } else {
                        self.base(left, &sources, true, events);
                    }
                }
            }
            "named_expression" => {
                let mut value = Vec::new();
                if let Some(v) = cx.field(n, "value") {
                    self.expr(v, &mut value);
                }
                let sources = direct_uses(&value);
                events.extend(value);
                if let Some(name) = cx.field(n, "name") {
                    events.push(Event::Def { target: name, sources, weak: false });
                }
            }
            "lambda" => {
                let prologue = match cx.field(n, "parameters") {
                    Some(p) => self.params(p, events),
                    None => Vec::new(),
                };
                let mut body = Vec::new();
                if let Some(b) = cx.field(n, "body") {
                    let mut inner = Vec::new();
                    self.expr(b, &mut inner);
                    body.push(Stmt::Simple { item: cx.item(b), events: inner });
                }
                events.push(Event::Scope(Box::new(Scope::function(n, "<lambda>", prologue, body))));
            }
            "list_comprehension" | "set_comprehension" | "dictionary_comprehension" | "generator_expression" => {
                let mut inner = Vec::new();
                for c in cx.named(n).filter(|&c| cx.ast.nodes[c].field != Some("body")) {
                    match cx.kind(c) {
                        "for_in_clause" => {
                            let mut value = Vec::new();
                            for r in cx.fields(c, "right") {
                                self.expr(r, &mut value);
                            }
                            let sources = direct_uses(&value);
                            inner.extend(value);
                            if let Some(left) = cx.field(c, "left") {
                                self.targets(left, &sources, &mut inner);
                            }
                        }
                        _ => self.exprs(c, &mut inner),
                    }
                }
                if let Some(body) = cx.field(n, "body") {
                    self.expr(body, &mut inner);
                }
                events.push(Event::Scope(Box::new(Scope {
                    kind: ScopeKind::Comprehension,
                    node: n,
                    name: "<comprehension>".to_string(),
                    prologue: inner,
                    body: Vec::new(),
                    members: Vec::new(),
                    has_body: false,
                })));
            }
            "attribute" => {
                if let Some(obj) = cx.field(n, "object") {
                    self.expr(obj, events);
                }
            }
            "keyword_argument" => {
                if let Some(v) = cx.field(n, "value") {
                    self.expr(v, events);
                }
            }
            "dotted_name" => {
                if let Some(first) = cx.named(n).next() {
                    events.push(Event::Use(first));
                }
            }
            _ => self.exprs(n, events),
        }
    }
}
