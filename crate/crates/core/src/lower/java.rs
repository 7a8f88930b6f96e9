use super::{direct_uses, Case, Cond, Cx, Event, Handler, JumpKind, Loop, LoopKind, Scope, ScopeKind, Stmt, Switch, Try};
use crate::syntax::NodeId;

pub(super) fn lower(cx: &Cx) -> Vec<Stmt> {
    Java { cx }.block(cx.ast.root)
}

struct Java<'c, 'a> {
    cx: &'c Cx<'a>,
}

const CLASS_KINDS: [&str; 5] =
    ["class_declaration", "interface_declaration", "enum_declaration", "record_declaration", "annotation_type_declaration"];

impl Java<'_, '_> {
    fn block(&self, n: NodeId) -> Vec<Stmt> {
        let mut out = Vec::new();
        for c in self.cx.named(n) {
            self.stmt(c, &mut out);
        }
        out
    }

    fn body(&self, n: Option<NodeId>) -> Vec<Stmt> {
        let mut out = Vec::new();
        if let Some(n) = n {
            self.stmt(n, &mut out);
        }
        out
    }

    fn stmt(&self, n: NodeId, out: &mut Vec<Stmt>) {
        let cx = self.cx;
        match cx.kind(n) {
            "block" | "program" | "constructor_body" => out.extend(self.block(n)),
            "local_variable_declaration" | "field_declaration" | "constant_declaration" => {
                let mut events = Vec::new();
                self.declarators(n, &mut events);
                out.push(Stmt::Simple { item: cx.item(n), events });
            }
            "if_statement" => {
                let cond = self.cond(n, cx.field(n, "condition"));
                let then = self.body(cx.field(n, "consequence"));
                let otherwise = self.body(cx.field(n, "alternative"));
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
                for i in cx.fields(n, "init") {
                    if cx.kind(i) == "local_variable_declaration" {
                        self.declarators(i, &mut init);
                    } else {
                        self.expr(i, &mut init);
                    }
                }
                let mut test = Vec::new();
                for c in cx.fields(n, "condition") {
                    self.expr(c, &mut test);
                }
                let mut update = Vec::new();
                for u in cx.fields(n, "update") {
                    self.expr(u, &mut update);
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
            "enhanced_for_statement" => {
                let body = cx.field(n, "body");
                let mut init = Vec::new();
                if let Some(v) = cx.field(n, "value") {
                    self.expr(v, &mut init);
                }
                let sources = direct_uses(&init);
                let mut bind = Vec::new();
                if let Some(name) = cx.field(n, "name") {
                    self.pattern(name, &sources, &mut bind);
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
            "switch_expression" | "switch_statement" => out.push(self.switch(n)),
            "try_statement" | "try_with_resources_statement" => out.push(self.try_stmt(n)),
            "return_statement" | "throw_statement" => {
                let mut events = Vec::new();
                self.exprs(n, &mut events);
                out.push(Stmt::Exit { item: cx.item(n), events });
            }
            "break_statement" | "continue_statement" => {
                let kind = if cx.kind(n) == "break_statement" { JumpKind::Break } else { JumpKind::Continue };
                let label = cx.child_of_kind(n, "identifier").map(|l| cx.text(l).to_string());
                out.push(Stmt::Jump { item: cx.item(n), kind, label });
            }
            "labeled_statement" => {
                let mut named = cx.named(n);
                let label = named.next().map(|l| cx.text(l).to_string()).unwrap_or_default();
                let mut inner = self.body(named.next());
                if inner.len() == 1 {
                    out.push(inner.pop().expect("one statement").labeled(label));
                } else {
                    out.push(Stmt::Labeled { label, body: inner });
                }
            }
            "synchronized_statement" => {
                let body = cx.field(n, "body");
                let mut events = Vec::new();
                for c in cx.named(n).filter(|&c| Some(c) != body) {
                    self.expr(c, &mut events);
                }
                out.push(Stmt::Simple { item: cx.header(n, body), events });
                out.extend(self.body(body));
            }
            "method_declaration" | "constructor_declaration" | "compact_constructor_declaration" => {
                let body = cx.field(n, "body");
                let events = vec![Event::Scope(Box::new(self.method(n)))];
                out.push(Stmt::Simple { item: cx.header(n, body), events });
            }
            kind if CLASS_KINDS.contains(&kind) => {
                let body = cx.field(n, "body");
                let mut events = Vec::new();
                self.class(n, &mut events);
                out.push(Stmt::Simple { item: cx.header(n, body), events });
            }
            "package_declaration" | "import_declaration" | "module_declaration" => {
                out.push(Stmt::Simple { item: cx.item(n), events: Vec::new() });
            }
            _ => {
                let mut events = Vec::new();
                self.exprs(n, &mut events);
                out.push(Stmt::Simple { item: cx.item(n), events });
            }
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
        if let Some(c) = cx.field(n, "condition") {
            self.expr(cx.unparen(c), &mut subject);
        }
        let sources = direct_uses(&subject);
        let groups: Vec<NodeId> = body.into_iter().flat_map(|b| cx.named(b)).collect();
        let fallthrough = !groups.iter().any(|&g| cx.kind(g) == "switch_rule");
        let mut cases = Vec::new();
        for group in groups {
            let labels: Vec<NodeId> = cx.named(group).filter(|&c| cx.kind(c) == "switch_label").collect();
            let mut stmts = Vec::new();
            for s in cx.named(group).filter(|&c| cx.kind(c) != "switch_label") {
                self.stmt(s, &mut stmts);
            }
            // `case 1: case 2:` inside one group behaves like separate empty
            // cases falling into the shared body.
            let count = labels.len();
            for (i, label) in labels.into_iter().enumerate() {
                let body = if i + 1 == count { std::mem::take(&mut stmts) } else { Vec::new() };
                let is_default = cx.named(label).next().is_none();
                let test = (!is_default).then(|| {
                    let mut events = Vec::new();
                    for c in cx.named(label) {
                        self.label_value(c, &sources, &mut events);
                    }
                    Cond { item: cx.item(label), events }
                });
                cases.push(Case { test, body });
            }
        }
        Stmt::Switch(Switch { label: None, header: cx.header(n, body), subject, cases, fallthrough })
    }

    fn label_value(&self, n: NodeId, sources: &[NodeId], events: &mut Vec<Event>) {
        let cx = self.cx;
        match cx.kind(n) {
            "type_pattern" | "record_pattern" | "pattern" | "record_pattern_component" => {
                for c in cx.named(n) {
                    self.label_value(c, sources, events);
                }
            }
            "identifier" if cx.ast.nodes[n].parent.is_some_and(|p| cx.kind(p) != "switch_label") => {
                events.push(Event::Def { target: n, sources: sources.to_vec(), weak: false })
            }
            _ => self.expr(n, events),
        }
    }

    fn try_stmt(&self, n: NodeId) -> Stmt {
        let cx = self.cx;
        let body = cx.field(n, "body");
        let mut setup = Vec::new();
        if let Some(resources) = cx.field(n, "resources") {
            for r in cx.named(resources) {
                if cx.kind(r) == "resource" {
                    let mut value = Vec::new();
                    if let Some(v) = cx.field(r, "value") {
                        self.expr(v, &mut value);
                    }
                    let sources = direct_uses(&value);
                    setup.extend(value);
                    match cx.field(r, "name") {
                        Some(name) => setup.push(Event::Def { target: name, sources, weak: false }),
                        None => {
                            for c in cx.named(r).filter(|&c| cx.ast.nodes[c].field.is_none()) {
                                self.expr(c, &mut setup);
                            }
                        }
                    }
                }
            }
        }
        let mut handlers = Vec::new();
        let mut finally = None;
        for c in cx.named(n) {
            match cx.kind(c) {
                "catch_clause" => {
                    let hbody = cx.field(c, "body");
                    let mut events = Vec::new();
                    if let Some(param) = cx.child_of_kind(c, "catch_formal_parameter") {
                        if let Some(name) = cx.field(param, "name") {
                            events.push(Event::Def { target: name, sources: Vec::new(), weak: false });
                        }
                    }
                    handlers.push(Handler { header: cx.header(c, hbody), events, body: self.body(hbody) });
                }
                "finally_clause" => {
                    let block = cx.child_of_kind(c, "block");
                    finally = Some((cx.header(c, block), self.body(block)));
                }
                _ => {}
            }
        }
        Stmt::Try(Try { header: cx.header(n, body), setup, body: self.body(body), handlers, orelse: Vec::new(), finally })
    }

    fn declarators(&self, n: NodeId, events: &mut Vec<Event>) {
        let cx = self.cx;
        for d in cx.fields(n, "declarator") {
            let mut value = Vec::new();
            if let Some(v) = cx.field(d, "value") {
                self.expr(v, &mut value);
            }
            let sources = direct_uses(&value);
            events.extend(value);
            if let Some(name) = cx.field(d, "name") {
                self.pattern(name, &sources, events);
            }
        }
    }

    fn pattern(&self, n: NodeId, sources: &[NodeId], events: &mut Vec<Event>) {
        let cx = self.cx;
        if cx.kind(n) == "identifier" {
            events.push(Event::Def { target: n, sources: sources.to_vec(), weak: false });
        } else {
            for c in cx.named(n) {
                self.pattern(c, sources, events);
            }
        }
    }

    fn params(&self, n: NodeId) -> Vec<Event> {
        let cx = self.cx;
        let mut events = Vec::new();
        match cx.kind(n) {
            "identifier" => events.push(Event::Def { target: n, sources: Vec::new(), weak: false }),
            _ => {
                for p in cx.named(n) {
                    match cx.kind(p) {
                        "identifier" => events.push(Event::Def { target: p, sources: Vec::new(), weak: false }),
                        "formal_parameter" => {
                            if let Some(name) = cx.field(p, "name") {
                                self.pattern(name, &[], &mut events);
                            }
                        }
                        "spread_parameter" => {
                            if let Some(d) = cx.child_of_kind(p, "variable_declarator") {
                                if let Some(name) = cx.field(d, "name") {
                                    self.pattern(name, &[], &mut events);
                                }
                            }
                        }
                        _ => {}
                    }
                }
            }
        }
        events
    }

    fn method(&self, n: NodeId) -> Scope {
        let cx = self.cx;
        let name = cx.field(n, "name").map_or("<anonymous>", |x| cx.text(x));
        let prologue = cx.field(n, "parameters").map(|p| self.params(p)).unwrap_or_default();
        let body = cx.field(n, "body");
        let mut scope = Scope::function(n, name, prologue, self.body(body));
        scope.has_body = body.is_some();
        scope
    }

    fn class(&self, n: NodeId, events: &mut Vec<Event>) {
        let cx = self.cx;
        let name = cx.field(n, "name").map_or("<anonymous>", |x| cx.text(x));
        let mut prologue = Vec::new();
        if cx.kind(n) == "record_declaration" {
            if let Some(p) = cx.field(n, "parameters") {
                prologue = self.params(p);
            }
        }
        let mut scope = self.class_body(n, name, cx.field(n, "body"));
        scope.prologue = prologue;
        events.push(Event::Scope(Box::new(scope)));
    }

    fn class_body(&self, n: NodeId, name: &str, body: Option<NodeId>) -> Scope {
        let mut scope = Scope {
            kind: ScopeKind::Class { members_visible: true },
            node: n,
            name: name.to_string(),
            prologue: Vec::new(),
            body: Vec::new(),
            members: Vec::new(),
            has_body: true,
        };
        if let Some(b) = body {
            self.members(b, &mut scope);
        }
        scope
    }

    fn members(&self, body: NodeId, scope: &mut Scope) {
        let cx = self.cx;
        for m in cx.named(body) {
            match cx.kind(m) {
                "field_declaration" | "constant_declaration" => self.stmt(m, &mut scope.body),
                "method_declaration" | "constructor_declaration" | "compact_constructor_declaration" => {
                    scope.members.push(self.method(m))
                }
                "static_initializer" => {
                    let block = cx.child_of_kind(m, "block");
                    scope.members.push(Scope::function(m, "<static>", Vec::new(), self.body(block)));
                }
                "block" => scope.members.push(Scope::function(m, "<init>", Vec::new(), self.block(m))),
                "enum_constant" => {
                    let mut events = Vec::new();
                    if let Some(args) = cx.field(m, "arguments") {
                        self.exprs(args, &mut events);
                    }
                    if let Some(name) = cx.field(m, "name") {
                        events.push(Event::Def { target: name, sources: Vec::new(), weak: false });
                    }
                    if let Some(b) = cx.field(m, "body") {
                        let inner = self.class_body(m, cx.field(m, "name").map_or("<anonymous>", |x| cx.text(x)), Some(b));
                        events.push(Event::Scope(Box::new(inner)));
                    }
                    scope.body.push(Stmt::Simple { item: cx.item(m), events });
                }
                "enum_body_declarations" => self.members(m, scope),
                kind if CLASS_KINDS.contains(&kind) => {
                    let mut events = Vec::new();
                    self.class(m, &mut events);
                    for e in events {
                        if let Event::Scope(s) = e {
                            scope.members.push(*s);
                        }
                    }
                }
                _ => {}
            }
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

    fn base(&self, t: NodeId, sources: &[NodeId], update: bool, events: &mut Vec<Event>) {
        let cx = self.cx;
        let t = cx.unparen(t);
        match cx.kind(t) {
            "identifier" if update => events.push(Event::Update { target: t, sources: sources.to_vec(), weak: true }),
            "identifier" => events.push(Event::Def { target: t, sources: sources.to_vec(), weak: true }),
            "field_access" => {
                if let Some(obj) = cx.field(t, "object") {
                    self.base(obj, sources, update, events);
                }
            }
            "array_access" => {
                if let Some(i) = cx.field(t, "index") {
                    self.expr(i, events);
                }
                if let Some(a) = cx.field(t, "array") {
                    self.base(a, sources, update, events);
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
            "assignment_expression" => {
                let mut value = Vec::new();
                if let Some(r) = cx.field(n, "right") {
                    self.expr(r, &mut value);
                }
                let sources = direct_uses(&value);
                events.extend(value);
                let compound = cx.field(n, "operator").is_some_and(|op| cx.text(op) != "=");
                if let Some(left) = cx.field(n, "left") {
                    if compound {
                        self.update(left, sources, events);
                    } else if cx.kind(cx.unparen(left)) == "identifier" {
                        events.push(Event::Def { target: cx.unparen(left), sources, weak: false });
                    } else {
                        self.base(left, &sources, false, events);
                    }
                }
            }
            "update_expression" => {
                if let Some(arg) = cx.named(n).next() {
                    self.update(arg, Vec::new(), events);
                }
            }
            "field_access" => {
                if let Some(obj) = cx.field(n, "object") {
                    self.expr(obj, events);
                }
            }
            "method_invocation" => {
                if let Some(obj) = cx.field(n, "object") {
                    self.expr(obj, events);
                }
                if let Some(args) = cx.field(n, "arguments") {
                    self.exprs(args, events);
                }
            }
            "object_creation_expression" => {
                if let Some(obj) = cx.unfielded(n).into_iter().find(|&c| cx.kind(c) != "class_body") {
                    self.expr(obj, events);
                }
                if let Some(args) = cx.field(n, "arguments") {
                    self.exprs(args, events);
                }
                if let Some(body) = cx.child_of_kind(n, "class_body") {
                    events.push(Event::Scope(Box::new(self.class_body(n, "<anonymous>", Some(body)))));
                }
            }
            "lambda_expression" => {
                let prologue = cx.field(n, "parameters").map(|p| self.params(p)).unwrap_or_default();
                let body = match cx.field(n, "body") {
                    Some(b) if cx.kind(b) == "block" => self.block(b),
                    Some(b) => {
                        let mut inner = Vec::new();
                        self.expr(b, &mut inner);
                        vec![Stmt::Simple { item: cx.item(b), events: inner }]
                    }
                    None => Vec::new(),
                };
                events.push(Event::Scope(Box::new(Scope::function(n, "<lambda>", prologue, body))));
            }
            "method_reference" => {
                if let Some(first) = cx.named(n).next() {
                    self.expr(first, events);
                }
            }
            "cast_expression" => {
                if let Some(v) = cx.field(n, "value") {
                    self.expr(v, events);
                }
            }
            "instanceof_expression" => {
                let mut value = Vec::new();
                if let Some(l) = cx.field(n, "left") {
                    self.expr(l, &mut value);
                }
                let sources = direct_uses(&value);
                events.extend(value);
                if let Some(name) = cx.field(n, "name") {
                    events.push(Event::Def { target: name, sources: sources.clone(), weak: false });
                }
                if let Some(p) = cx.field(n, "pattern") {
                    self.label_value(p, &sources, events);
                }
            }
            "array_creation_expression" => {
                for c in cx.named(n) {
                    if matches!(cx.kind(c), "dimensions_expr" | "array_initializer") {
                        self.exprs(c, events);
                    }
                }
            }
            "local_variable_declaration" => self.declarators(n, events),
            "modifiers" | "marker_annotation" | "annotation" | "scoped_identifier" | "type_arguments" | "dimensions" => {}
            _ => self.exprs(n, events),
        }
    }
}
