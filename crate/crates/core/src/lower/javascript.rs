use super::{direct_uses, Case, Cond, Cx, Event, Handler, JumpKind, Loop, LoopKind, Scope, ScopeKind, Stmt, Switch, Try};
use crate::syntax::NodeId;

pub(super) fn lower(cx: &Cx) -> Vec<Stmt> {
    Js { cx }.block(cx.ast.root)
}

struct Js<'c, 'a> {
    cx: &'c Cx<'a>,
}

const FUNCTION_KINDS: [&str; 4] = ["arrow_function", "function_expression", "function", "generator_function"];

impl Js<'_, '_> {
    fn block(&self, n: NodeId) -> Vec<Stmt> {
        let mut out = Vec::new();
        for c in self.cx.named(n) {
            self.stmt(c, &mut out);
        }
        out
    }

    /// A statement in a body position: a block or a single statement.
    fn body(&self, n: Option<NodeId>) -> Vec<Stmt> {
        let mut out = Vec::new();
        if let Some(n) = n {
            self.stmt(n, &mut out);
        }
        out
    }

    fn simple(&self, n: NodeId, out: &mut Vec<Stmt>) {
        let mut events = Vec::new();
        self.exprs(n, &mut events);
        out.push(Stmt::Simple { item: self.cx.item(n), events });
    }

    fn stmt(&self, n: NodeId, out: &mut Vec<Stmt>) {
        let cx = self.cx;
        match cx.kind(n) {
            "statement_block" | "program" => out.extend(self.block(n)),
            "hash_bang_line" => {}
            "variable_declaration" | "lexical_declaration" => {
                let mut events = Vec::new();
                self.declaration(n, &mut events);
                out.push(Stmt::Simple { item: cx.item(n), events });
            }
            "if_statement" => {
                let cond = self.cond(n, cx.field(n, "condition"));
                let then = self.body(cx.field(n, "consequence"));
                let otherwise = match cx.field(n, "alternative") {
                    Some(alt) => self.body(cx.named(alt).next()),
                    None => Vec::new(),
                };
                out.push(Stmt::If { cond, then, otherwise });
            }
            "while_statement" | "do_statement" => {
                let kind = if cx.kind(n) == "do_statement" { LoopKind::DoWhile } else { LoopKind::While };
                out.push(Stmt::Loop(Loop {
                    kind,
                    label: None,
                    head: self.cond(n, cx.field(n, "condition")),
                    init: Vec::new(),
                    bind: Vec::new(),
                    update: Vec::new(),
                    body: self.body(cx.field(n, "body")),
                    orelse: Vec::new(),
                }));
            }
            "for_statement" => {
                let body = cx.field(n, "body");
                let mut init = Vec::new();
                if let Some(i) = cx.field(n, "initializer") {
                    match cx.kind(i) {
                        "variable_declaration" | "lexical_declaration" => self.declaration(i, &mut init),
                        _ => self.expr(i, &mut init),
                    }
                }
                let mut test = Vec::new();
                for c in cx.fields(n, "condition") {
                    self.expr(c, &mut test);
                }
                let mut update = Vec::new();
                for c in cx.fields(n, "increment") {
                    self.expr(c, &mut update);
                }
                out.push(Stmt::Loop(Loop {
                    kind: LoopKind::For,
                    label: None,
                    head: Cond { item: cx.header(n, body), events: test },
                    init,
                    bind: Vec::new(),
                    update,
                    body: self.body(body),
                    orelse: Vec::new(),
                }));
            }
            "for_in_statement" => {
                let body = cx.field(n, "body");
                let mut init = Vec::new();
                if let Some(r) = cx.field(n, "right") {
                    self.expr(r, &mut init);
                }
                let sources = direct_uses(&init);
                let mut bind = Vec::new();
                if let Some(l) = cx.field(n, "left") {
                    self.targets(l, &sources, &mut bind);
                }
                out.push(Stmt::Loop(Loop {
                    kind: LoopKind::For,
                    label: None,
                    head: Cond { item: cx.header(n, body), events: Vec::new() },
                    init,
                    bind,
                    update: Vec::new(),
                    body: self.body(body),
                    orelse: Vec::new(),
                }));
            }
            "switch_statement" => out.push(self.switch(n)),
            "try_statement" => out.push(self.try_stmt(n)),
            "return_statement" | "throw_statement" => {
                let mut events = Vec::new();
                self.exprs(n, &mut events);
                out.push(Stmt::Exit { item: cx.item(n), events });
            }
            "break_statement" | "continue_statement" => {
                let kind = if cx.kind(n) == "break_statement" { JumpKind::Break } else { JumpKind::Continue };
                let label = cx.field(n, "label").map(|l| cx.text(l).to_string());
                out.push(Stmt::Jump { item: cx.item(n), kind, label });
            }
            "labeled_statement" => {
                let label = cx.field(n, "label").map(|l| cx.text(l).to_string()).unwrap_or_default();
                let mut inner = self.body(cx.field(n, "body"));
                if inner.len() == 1 {
                    out.push(inner.pop().expect("one statement").labeled(label));
                } else {
                    out.push(Stmt::Labeled { label, body: inner });
                }
            }
            "function_declaration" | "generator_function_declaration" => {
                let body = cx.field(n, "body");
                let mut events = Vec::new();
                let name = cx.field(n, "name");
                events.push(Event::Scope(Box::new(self.function(n, name.map(|x| cx.text(x)).unwrap_or("<anonymous>")))));
                if let Some(name) = name {
                    events.push(Event::Def { target: name, sources: Vec::new(), weak: false });
                }
                out.push(Stmt::Simple { item: cx.header(n, body), events });
            }
            "class_declaration" => {
                let body = cx.field(n, "body");
                let mut events = Vec::new();
                self.class(n, &mut events);
                if let Some(name) = cx.field(n, "name") {
                    events.push(Event::Def { target: name, sources: Vec::new(), weak: false });
                }
                out.push(Stmt::Simple { item: cx.header(n, body), events });
            }
            "import_statement" => {
                let mut events = Vec::new();
                if let Some(clause) = cx.child_of_kind(n, "import_clause") {
                    self.import_clause(clause, &mut events);
                }
                out.push(Stmt::Simple { item: cx.item(n), events });
            }
            "export_statement" => match cx.field(n, "declaration") {
                Some(decl) => self.stmt(decl, out),
                None => {
                    let mut events = Vec::new();
                    for c in cx.named(n) {
                        match cx.kind(c) {
                            "export_clause" => {
                                for spec in cx.named(c) {
                                    if let Some(name) = cx.field(spec, "name").filter(|&x| cx.is_identifier(x)) {
                                        events.push(Event::Use(name));
                                    }
                                }
                            }
                            "string" => {}
                            _ => self.expr(c, &mut events),
                        }
                    }
                    out.push(Stmt::Simple { item: cx.item(n), events });
                }
            },
            "with_statement" => {
                let body = cx.field(n, "body");
                let mut events = Vec::new();
                if let Some(obj) = cx.field(n, "object") {
                    self.expr(obj, &mut events);
                }
                out.push(Stmt::Simple { item: cx.header(n, body), events });
                out.extend(self.body(body));
            }
            _ => self.simple(n, out),
        }
    }

    fn cond(&self, stmt: NodeId, condition: Option<NodeId>) -> Cond {
        let cx = self.cx;
        match condition {
            Some(c) => {
                let inner = cx.unparen(c);
                let mut events = Vec::new();
                self.expr(inner, &mut events);
                Cond { item: cx.item(inner), events }
            }
            None => Cond { item: cx.header(stmt, None), events: Vec::new() },
        }
    }

    fn switch(&self, n: NodeId) -> Stmt {
        let cx = self.cx;
        let body = cx.field(n, "body");
        let mut subject = Vec::new();
        if let Some(v) = cx.field(n, "value") {
            self.expr(cx.unparen(v), &mut subject);
        }
        let mut cases = Vec::new();
        for case in body.into_iter().flat_map(|b| cx.named(b)) {
            let stmts = cx.fields(case, "body");
            let mut body_stmts = Vec::new();
            for s in &stmts {
                self.stmt(*s, &mut body_stmts);
            }
            let test = match (cx.kind(case), cx.field(case, "value")) {
                ("switch_case", Some(value)) => {
                    let mut events = Vec::new();
                    self.expr(value, &mut events);
                    Some(Cond { item: cx.header(case, stmts.first().copied()), events })
                }
                _ => None,
            };
            cases.push(Case { test, body: body_stmts });
        }
        Stmt::Switch(Switch { label: None, header: cx.header(n, body), subject, cases, fallthrough: true })
    }

    fn try_stmt(&self, n: NodeId) -> Stmt {
        let cx = self.cx;
        let body = cx.field(n, "body");
        let mut handlers = Vec::new();
        if let Some(h) = cx.field(n, "handler") {
            let hbody = cx.field(h, "body");
            let mut events = Vec::new();
            if let Some(p) = cx.field(h, "parameter") {
                self.targets(p, &[], &mut events);
            }
            handlers.push(Handler { header: cx.header(h, hbody), events, body: self.body(hbody) });
        }
        let finally = cx.field(n, "finalizer").map(|f| {
            let fbody = cx.field(f, "body");
            (cx.header(f, fbody), self.body(fbody))
        });
        Stmt::Try(Try { header: cx.header(n, body), setup: Vec::new(), body: self.body(body), handlers, orelse: Vec::new(), finally })
    }

    fn declaration(&self, n: NodeId, events: &mut Vec<Event>) {
        let cx = self.cx;
        for d in cx.named(n).filter(|&d| cx.kind(d) == "variable_declarator") {
            let name = cx.field(d, "name");
            let hint = name.filter(|&x| cx.kind(x) == "identifier").map(|x| cx.text(x));
            let mut value = Vec::new();
            if let Some(v) = cx.field(d, "value") {
                self.value(v, hint, &mut value);
            }
            let sources = direct_uses(&value);
            events.extend(value);
            if let Some(name) = name {
                self.targets(name, &sources, events);
            }
        }
    }

    fn import_clause(&self, n: NodeId, events: &mut Vec<Event>) {
        let cx = self.cx;
        for c in cx.named(n) {
            match cx.kind(c) {
                "identifier" => events.push(Event::Def { target: c, sources: Vec::new(), weak: false }),
                "namespace_import" => {
                    if let Some(id) = cx.child_of_kind(c, "identifier") {
                        events.push(Event::Def { target: id, sources: Vec::new(), weak: false });
                    }
                }
                "named_imports" => {
                    for spec in cx.named(c) {
                        let local = cx.field(spec, "alias").or_else(|| cx.field(spec, "name"));
                        if let Some(local) = local.filter(|&x| cx.is_identifier(x)) {
                            events.push(Event::Def { target: local, sources: Vec::new(), weak: false });
                        }
                    }
                }
                _ => {}
            }
        }
    }

    fn function(&self, n: NodeId, name: &str) -> Scope {
        let cx = self.cx;
        let mut prologue = Vec::new();
        if let Some(p) = cx.field(n, "parameter") {
            self.targets(p, &[], &mut prologue);
        }
        if let Some(params) = cx.field(n, "parameters") {
            for p in cx.named(params) {
                self.targets(p, &[], &mut prologue);
            }
        }
        let body = match cx.field(n, "body") {
            Some(b) if cx.kind(b) == "statement_block" => self.block(b),
            Some(b) => {
                let mut events = Vec::new();
                self.expr(b, &mut events);
                vec![Stmt::Simple { item: cx.item(b), events }]
            }
            None => Vec::new(),
        };
        Scope::function(n, name, prologue, body)
    }

    fn class(&self, n: NodeId, events: &mut Vec<Event>) {
        let cx = self.cx;
        if let Some(h) = cx.child_of_kind(n, "class_heritage") {
            self.exprs(h, events);
        }
        let name = cx.field(n, "name").map_or("<anonymous>", |x| cx.text(x));
        let mut body = Vec::new();
        let mut members = Vec::new();
        for m in cx.field(n, "body").into_iter().flat_map(|b| cx.named(b)) {
            match cx.kind(m) {
                "method_definition" => {
                    let mname = cx.field(m, "name").map_or("<anonymous>", |x| cx.text(x));
                    members.push(self.function(m, mname));
                }
                "class_static_block" => {
                    let block = cx.field(m, "body");
                    members.push(Scope::function(m, "<static>", Vec::new(), self.body(block)));
                }
                "field_definition" => {
                    let mut ev = Vec::new();
                    for c in cx.fields(m, "property") {
                        if cx.kind(c) == "computed_property_name" {
                            self.exprs(c, &mut ev);
                        }
                    }
                    if let Some(v) = cx.field(m, "value") {
                        self.expr(v, &mut ev);
                    }
                    body.push(Stmt::Simple { item: cx.item(m), events: ev });
                }
                _ => {}
            }
        }
        events.push(Event::Scope(Box::new(Scope {
            kind: ScopeKind::Class { members_visible: false },
            node: n,
            name: name.to_string(),
            prologue: Vec::new(),
            body,
            members,
            has_body: true,
        })));
    }

    fn targets(&self, t: NodeId, sources: &[NodeId], events: &mut Vec<Event>) {
        let cx = self.cx;
        match cx.kind(t) {
            "identifier" | "shorthand_property_identifier_pattern" => {
                events.push(Event::Def { target: t, sources: sources.to_vec(), weak: false })
            }
            "object_pattern" | "array_pattern" | "rest_pattern" | "parenthesized_expression" => {
                for c in cx.named(t) {
                    self.targets(c, sources, events);
                }
            }
            "pair_pattern" => {
                if let Some(k) = cx.field(t, "key").filter(|&k| cx.kind(k) == "computed_property_name") {
                    self.exprs(k, events);
                }
                if let Some(v) = cx.field(t, "value") {
                    self.targets(v, sources, events);
                }
            }
            "assignment_pattern" | "object_assignment_pattern" => {
                let left = cx.field(t, "left");
                let hint = left.filter(|&x| cx.kind(x) == "identifier").map(|x| cx.text(x));
                let mut default = Vec::new();
                if let Some(r) = cx.field(t, "right") {
                    self.value(r, hint, &mut default);
                }
                let mut all = sources.to_vec();
                all.extend(direct_uses(&default));
                events.extend(default);
                if let Some(l) = left {
                    self.targets(l, &all, events);
                }
            }
            "member_expression" | "subscript_expression" => self.base(t, sources, false, events),
            _ => self.expr(t, events),
        }
    }

    fn base(&self, t: NodeId, sources: &[NodeId], update: bool, events: &mut Vec<Event>) {
        let cx = self.cx;
        let t = cx.unparen(t);
        match cx.kind(t) {
            "identifier" if update => events.push(Event::Update { target: t, sources: sources.to_vec(), weak: true }),
            "identifier" => events.push(Event::Def { target: t, sources: sources.to_vec(), weak: true }),
            "member_expression" => {
                if let Some(obj) = cx.field(t, "object") {
                    self.base(obj, sources, update, events);
                }
            }
            "subscript_expression" => {
                if let Some(i) = cx.field(t, "index") {
                    self.expr(i, events);
                }
                if let Some(obj) = cx.field(t, "object") {
                    self.base(obj, sources, update, events);
                }
            }
            _ => self.expr(t, events),
        }
    }

    fn update(&self, target: NodeId, sources: Vec<NodeId>, events: &mut Vec<Event>) {
        let cx = self.cx;
        let target = cx.unparen(target);
        if cx.kind(target) == "identifier" {
            events.push(Event::Update { target, sources, weak: false });
        } else {
            self.base(target, &sources, true, events);
        }
    }

    /// An expression that may be an anonymous function taking its name from
    /// the binding it initialises.
    fn value(&self, n: NodeId, hint: Option<&str>, events: &mut Vec<Event>) {
        let cx = self.cx;
        if FUNCTION_KINDS.contains(&cx.kind(n)) {
            let own = cx.field(n, "name").map(|x| cx.text(x));
            let fallback = if cx.kind(n) == "arrow_function" { "<lambda>" } else { "<anonymous>" };
            let name = own.or(hint).unwrap_or(fallback);
            events.push(Event::Scope(Box::new(self.function(n, name))));
        } else {
            self.expr(n, events);
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
            "identifier" | "shorthand_property_identifier" => events.push(Event::Use(n)),
            "assignment_expression" => {
                let left = cx.field(n, "left");
                let hint = left.filter(|&x| cx.kind(x) == "identifier").map(|x| cx.text(x));
                let mut value = Vec::new();
                if let Some(r) = cx.field(n, "right") {
                    self.value(r, hint, &mut value);
                }
                let sources = direct_uses(&value);
                events.extend(value);
                if let Some(l) = left {
                    self.targets(l, &sources, events);
                }
            }
            "augmented_assignment_expression" => {
                let mut value = Vec::new();
                if let Some(r) = cx.field(n, "right") {
                    self.expr(r, &mut value);
                }
                let sources = direct_uses(&value);
                events.extend(value);
                if let Some(l) = cx.field(n, "left") {
                    self.update(l, sources, events);
                }
            }
            "update_expression" => {
                if let Some(arg) = cx.field(n, "argument") {
                    self.update(arg, Vec::new(), events);
                }
            }
            "member_expression" => {
                if let Some(obj) = cx.field(n, "object") {
                    self.expr(obj, events);
                }
            }
            "pair" => {
                if let Some(k) = cx.field(n, "key").filter(|&k| cx.kind(k) == "computed_property_name") {
                    self.exprs(k, events);
                }
                if let Some(v) = cx.field(n, "value") {
                    let hint = cx.field(n, "key").map(|k| cx.text(k));
                    self.value(v, hint, events);
                }
            }
            "method_definition" => {
                let name = cx.field(n, "name").map_or("<anonymous>", |x| cx.text(x));
                events.push(Event::Scope(Box::new(self.function(n, name))));
            }
            "class" => self.class(n, events),
            kind if FUNCTION_KINDS.contains(&kind) => self.value(n, None, events),
            "statement_identifier" | "property_identifier" | "private_property_identifier" => {}
            _ => self.exprs(n, events),
        }
    }
}
