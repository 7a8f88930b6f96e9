//! Shared helpers for the integration tests: a compact text notation for
//! expected graphs, the corpus of source files, and a snippet generator.
//!
//! DFG notation. A node is `name@line:col` plus `d` (definition) or `u`
//! (use); lines and columns are 1-based. `a@2:5u -> a@1:1d` is a comesFrom
//! edge and `b@2:1d => a@2:5u` a computedFrom edge.
//!
//! CFG notation. Blocks are named by content: `ENTRY`, `EXIT`, `?cond` for
//! condition blocks, and the statement texts joined by ` | ` for body blocks.
//! A `!` prefix marks an unreachable block, `~` an approximate one. Edges are
//! `A -> B`, `A -T-> B`, `A -F-> B` and `A -L-> B` (loop-back).

#![allow(dead_code)]

pub mod cfg_fixtures;
pub mod snippets;

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use codelens_core::{
    extract_cfg, extract_dfg, parse, Ast, BlockKind, Cfg, EdgeLabel, FlowKind, Language, Payload, Role, SourceUnit,
    Span,
};

pub struct DfgFixture {
    pub name: &'static str,
    pub lang: Language,
    pub code: &'static str,
    pub nodes: &'static [&'static str],
    pub edges: &'static [&'static str],
}

pub struct CfgFixture {
    pub name: &'static str,
    pub lang: Language,
    pub code: &'static str,
    /// `(function name, edges)` in graph order.
    pub graphs: &'static [(&'static str, &'static [&'static str])],
}

fn position(code: &str, byte: usize) -> (usize, usize) {
    let before = &code[..byte];
    let line = before.matches('\n').count() + 1;
    let col = byte - before.rfind('\n').map_or(0, |i| i + 1) + 1;
    (line, col)
}

/// Actual DFG in fixture notation: (nodes in payload order, edge set).
pub fn render_dfg(lang: Language, code: &str) -> (Vec<String>, BTreeSet<String>) {
    let ast = parse(&SourceUnit::new(lang, code)).expect("fixture parses");
    let dfg = extract_dfg(&ast, code);
    let keys: Vec<String> = dfg
        .nodes
        .iter()
        .map(|n| {
            let (line, col) = position(code, n.span.start_byte);
            let role = match n.role {
                Role::Definition => 'd',
                Role::Use => 'u',
            };
            format!("{}@{line}:{col}{role}", n.name)
        })
        .collect();
    let edges = dfg
        .edges
        .iter()
        .map(|e| {
            let arrow = match e.kind {
                FlowKind::ComesFrom => "->",
                FlowKind::ComputedFrom => "=>",
            };
            format!("{} {arrow} {}", keys[e.src], keys[e.dst])
        })
        .collect();
    (keys, edges)
}

/// Why a DFG fixture does not match, or `None`.
pub fn check_dfg(f: &DfgFixture) -> Option<String> {
    let (nodes, edges) = render_dfg(f.lang, f.code);
    let expected_nodes: Vec<String> = f.nodes.iter().map(|s| s.to_string()).collect();
    let expected_edges: BTreeSet<String> = f.edges.iter().map(|s| s.to_string()).collect();
    let mut problems = Vec::new();
    if nodes != expected_nodes {
        problems.push(format!("nodes\n  expected {expected_nodes:?}\n  actual   {nodes:?}"));
    }
    if edges != expected_edges {
        let missing: Vec<_> = expected_edges.difference(&edges).collect();
        let extra: Vec<_> = edges.difference(&expected_edges).collect();
        problems.push(format!("edges\n  missing {missing:?}\n  extra   {extra:?}"));
    }
    (!problems.is_empty()).then(|| format!("{} ({:?}): {}", f.name, f.lang, problems.join("\n")))
}

fn block_label(cfg: &Cfg, id: usize) -> String {
    let block = &cfg.blocks[id];
    let mut label = String::new();
    if block.unreachable {
        label.push('!');
    }
    if block.approximate {
        label.push('~');
    }
    match block.kind {
        BlockKind::Entry => label.push_str("ENTRY"),
        BlockKind::Exit => label.push_str("EXIT"),
        BlockKind::Condition => {
            label.push('?');
            label.push_str(&block.statements[0].text);
        }
        BlockKind::Body => {
            label.push_str(&block.statements.iter().map(|s| s.text.as_str()).collect::<Vec<_>>().join(" | "))
        }
    }
    label
}

/// Actual CFGs in fixture notation: `(name, edge set, block labels)`.
pub fn render_cfg(lang: Language, code: &str) -> Vec<(String, BTreeSet<String>, Vec<String>)> {
    let ast = parse(&SourceUnit::new(lang, code)).expect("fixture parses");
    let set = extract_cfg(&ast, code);
    set.graphs
        .iter()
        .map(|cfg| {
            let labels: Vec<String> = (0..cfg.blocks.len()).map(|i| block_label(cfg, i)).collect();
            let edges = cfg
                .edges
                .iter()
                .map(|e| {
                    let arrow = match e.label {
                        EdgeLabel::Unconditional => "->",
                        EdgeLabel::True => "-T->",
                        EdgeLabel::False => "-F->",
                        EdgeLabel::LoopBack => "-L->",
                    };
                    format!("{} {arrow} {}", labels[e.src], labels[e.dst])
                })
                .collect();
            (cfg.function_name.clone(), edges, labels)
        })
        .collect()
}

/// Why a CFG fixture does not match up to block renumbering, or `None`.
pub fn check_cfg(f: &CfgFixture) -> Option<String> {
    let actual = render_cfg(f.lang, f.code);
    let mut problems = Vec::new();
    let actual_names: Vec<&str> = actual.iter().map(|g| g.0.as_str()).collect();
    let expected_names: Vec<&str> = f.graphs.iter().map(|g| g.0).collect();
    if actual_names != expected_names {
        problems.push(format!("graphs: expected {expected_names:?}, actual {actual_names:?}"));
    }
    for ((name, expected), (_, edges, labels)) in f.graphs.iter().zip(&actual) {
        let expected_edges: BTreeSet<String> = expected.iter().map(|s| s.to_string()).collect();
        let unique: BTreeSet<&str> = labels.iter().map(String::as_str).collect();
        if unique.len() != labels.len() {
            problems.push(format!("{name}: duplicate block labels {labels:?}"));
        }
        // Equal edge sets fix every block that has an edge; this catches
        // blocks the expectation never mentions.
        for label in &unique {
            let (head, tail) = (format!("{label} -"), format!("> {label}"));
            if !expected.iter().any(|e| e.starts_with(&head) || e.ends_with(&tail)) {
                problems.push(format!("{name}: block `{label}` is in no expected edge"));
            }
        }
        if edges != &expected_edges {
            let missing: Vec<_> = expected_edges.difference(edges).collect();
            let extra: Vec<_> = edges.difference(&expected_edges).collect();
            problems.push(format!("{name}: edges\n  missing {missing:?}\n  extra   {extra:?}"));
        }
    }
    (!problems.is_empty()).then(|| format!("{} ({:?}): {}", f.name, f.lang, problems.join("\n")))
}

pub fn core_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core")
}

/// Every source file shipped with the crate: the bundled examples and the
/// extra vocabulary-training snippets, sorted by path.
pub fn data_files() -> Vec<(Language, PathBuf)> {
    let mut out = Vec::new();
    for dir in ["data/examples/java", "data/examples/javascript", "data/examples/python", "data/snippets"] {
        for entry in std::fs::read_dir(core_dir().join(dir)).expect("data directory exists") {
            let path = entry.expect("readable entry").path();
            let lang = match path.extension().and_then(|e| e.to_str()) {
                Some("py") => Language::Python,
                Some("java") => Language::Java,
                Some("js") => Language::JavaScript,
                _ => continue,
            };
            out.push((lang, path));
        }
    }
    out.sort_by(|a, b| a.1.cmp(&b.1));
    out
}

/// Data files, fixtures and generated snippets: everything the property
/// checks run over.
pub fn corpus() -> Vec<(Language, String)> {
    let mut out: Vec<(Language, String)> =
        data_files().into_iter().map(|(l, p)| (l, std::fs::read_to_string(p).expect("utf-8 file"))).collect();
    out.extend(dfg_fixtures::ALL.iter().map(|f| (f.lang, f.code.to_string())));
    out.extend(cfg_fixtures::ALL.iter().map(|f| (f.lang, f.code.to_string())));
    for lang in Language::ALL {
        out.extend(snippets::generate(lang).into_iter().map(|s| (lang, s)));
    }
    out
}

/// Line and byte column of `byte`, both 0-based, counted directly.
pub fn line_col(code: &str, byte: usize) -> (usize, usize) {
    let before = &code.as_bytes()[..byte];
    let line = before.iter().filter(|&&b| b == b'\n').count();
    let col = byte - before.iter().rposition(|&b| b == b'\n').map_or(0, |i| i + 1);
    (line, col)
}

/// Checks a span against the source it claims to describe. Token pieces from
/// byte fallback may cover part of a character; see [`char_span_problem`].
pub fn span_problem(code: &str, span: &Span) -> Option<String> {
    if span.start_byte > span.end_byte || span.end_byte > code.len() {
        return Some(format!("span {}..{} out of bounds", span.start_byte, span.end_byte));
    }
    let start = line_col(code, span.start_byte);
    let end = line_col(code, span.end_byte);
    if (span.start_line, span.start_col) != start || (span.end_line, span.end_col) != end {
        return Some(format!("span {}..{} has wrong line/column", span.start_byte, span.end_byte));
    }
    None
}

/// As [`span_problem`], also requiring both ends on character boundaries.
pub fn char_span_problem(code: &str, span: &Span) -> Option<String> {
    span_problem(code, span).or_else(|| {
        (!code.is_char_boundary(span.start_byte) || !code.is_char_boundary(span.end_byte))
            .then(|| format!("span {}..{} splits a character", span.start_byte, span.end_byte))
    })
}

/// Every violated tree invariant of `ast`, described.
pub fn ast_violations(ast: &Ast, code: &str) -> Vec<String> {
    let mut out = Vec::new();
    let n = ast.nodes.len();
    if n == 0 {
        return vec!["empty tree".into()];
    }
    if ast.edge_count() != n - 1 {
        out.push(format!("{n} nodes but {} edges", ast.edge_count()));
    }
    let mut parents: Vec<Option<usize>> = vec![None; n];
    let mut parent_count = vec![0usize; n];
    for (i, node) in ast.nodes.iter().enumerate() {
        if node.id != i {
            out.push(format!("node at index {i} has id {}", node.id));
        }
        for &c in &node.children {
            if c >= n {
                out.push(format!("node {i} has dangling child {c}"));
                continue;
            }
            parent_count[c] += 1;
            parents[c] = Some(i);
        }
        match (node.children.is_empty(), &node.text) {
            (true, None) => out.push(format!("leaf {i} ({}) has no text", node.kind)),
            (false, Some(_)) => out.push(format!("interior node {i} ({}) has text", node.kind)),
            _ => {}
        }
        if let Some(p) = char_span_problem(code, &node.span) {
            out.push(format!("node {i} ({}): {p}", node.kind));
        }
    }
    let roots: Vec<usize> = (0..n).filter(|&i| parent_count[i] == 0).collect();
    if roots != [ast.root] {
        out.push(format!("roots {roots:?}, declared root {}", ast.root));
    }
    for i in 0..n {
        if parent_count[i] > 1 {
            out.push(format!("node {i} has {} parents", parent_count[i]));
        }
        if ast.nodes[i].parent != parents[i] {
            out.push(format!("node {i} parent link {:?} disagrees with children lists", ast.nodes[i].parent));
        }
    }
    // Reachability: with N-1 edges and one parent each, everything must hang
    // off the root, otherwise there is a cycle.
    let mut seen = vec![false; n];
    let mut stack = vec![ast.root];
    while let Some(i) = stack.pop() {
        if std::mem::replace(&mut seen[i], true) {
            out.push(format!("node {i} reached twice"));
            continue;
        }
        stack.extend(ast.nodes[i].children.iter().copied().filter(|&c| c < n));
    }
    if let Some(i) = seen.iter().position(|s| !s) {
        out.push(format!("node {i} unreachable from the root"));
    }
    for node in &ast.nodes {
        for &c in &node.children {
            if c < n && !node.span.contains(&ast.nodes[c].span) {
                out.push(format!("child {c} escapes parent {}", node.id));
            }
        }
        for pair in node.children.windows(2) {
            if pair[0] < n && pair[1] < n && ast.nodes[pair[0]].span.end_byte > ast.nodes[pair[1]].span.start_byte {
                out.push(format!("children {} and {} of {} overlap or are out of order", pair[0], pair[1], node.id));
            }
        }
    }
    let trimmed_start = code.len() - code.trim_start().len();
    let trimmed_end = code.trim_end().len();
    let root = &ast.nodes[ast.root].span;
    if trimmed_start < trimmed_end && !(root.start_byte <= trimmed_start && trimmed_end <= root.end_byte) {
        out.push(format!("root {}..{} does not cover {trimmed_start}..{trimmed_end}", root.start_byte, root.end_byte));
    }
    out
}

const LOOP_KINDS: &[&str] = &[
    "for_statement",
    "while_statement",
    "do_statement",
    "enhanced_for_statement",
    "for_in_statement",
    "list_comprehension",
    "set_comprehension",
    "dictionary_comprehension",
    "generator_expression",
];

fn ancestors(ast: &Ast, id: usize) -> impl Iterator<Item = &codelens_core::AstNode> {
    std::iter::successors(Some(&ast.nodes[id]), |n| n.parent.map(|p| &ast.nodes[p]))
}

/// Is there a loop enclosing both nodes, so a value can travel backwards?
fn share_loop(ast: &Ast, a: usize, b: usize) -> bool {
    let b_span = ast.nodes[b].span;
    ancestors(ast, a).any(|n| LOOP_KINDS.contains(&n.kind) && n.span.contains(&b_span))
}

/// Java methods see every field of their class, wherever it is declared.
fn is_class_member(ast: &Ast, def: usize, usage: usize) -> bool {
    ast.language == Language::Java
        && ancestors(ast, def).any(|n| n.kind == "field_declaration" || n.kind == "record_declaration")
        && ancestors(ast, def)
            .filter(|n| n.kind == "class_body" || n.kind == "record_declaration" || n.kind == "enum_body")
            .any(|n| n.span.contains(&ast.nodes[usage].span))
}

/// Every violated data-flow invariant.
pub fn dfg_violations(ast: &Ast, code: &str) -> Vec<String> {
    let dfg = extract_dfg(ast, code);
    let mut out = Vec::new();
    let n = dfg.nodes.len();
    for (i, node) in dfg.nodes.iter().enumerate() {
        if node.id != i {
            out.push(format!("node at {i} has id {}", node.id));
        }
        let Some(leaf) = ast.nodes.get(node.ast_node) else {
            out.push(format!("node {i} points at missing ast node {}", node.ast_node));
            continue;
        };
        if !leaf.is_leaf() || !leaf.named || leaf.span != node.span || leaf.text.as_deref() != Some(node.name.as_str()) {
            out.push(format!("node {i} `{}` is not an identifier leaf ({} {:?})", node.name, leaf.kind, leaf.text));
        }
        if let Some(p) = char_span_problem(code, &node.span) {
            out.push(format!("node {i}: {p}"));
        }
    }
    if dfg.edges.windows(2).any(|w| w[0] >= w[1]) {
        out.push("edges not strictly sorted".into());
    }
    for e in &dfg.edges {
        if e.src >= n || e.dst >= n {
            out.push(format!("edge {e:?} has a dangling endpoint"));
            continue;
        }
        let (src, dst) = (&dfg.nodes[e.src], &dfg.nodes[e.dst]);
        match e.kind {
            FlowKind::ComesFrom => {
                if src.name != dst.name {
                    out.push(format!("comesFrom joins `{}` and `{}`", src.name, dst.name));
                }
                if src.role != Role::Use || dst.role != Role::Definition {
                    out.push(format!("comesFrom {e:?} runs {:?} -> {:?}", src.role, dst.role));
                }
                if dst.span.start_byte > src.span.start_byte
                    && !share_loop(ast, src.ast_node, dst.ast_node)
                    && !is_class_member(ast, dst.ast_node, src.ast_node)
                {
                    let (l, c) = line_col(code, src.span.start_byte);
                    out.push(format!("`{}` at {}:{} comes from a later definition", src.name, l + 1, c + 1));
                }
            }
            FlowKind::ComputedFrom => {
                if src.role != Role::Definition || dst.role != Role::Use {
                    out.push(format!("computedFrom {e:?} runs {:?} -> {:?}", src.role, dst.role));
                }
            }
        }
    }
    if extract_dfg(ast, code) != dfg {
        out.push("second extraction differs".into());
    }
    out
}

/// Every violated control-flow invariant.
pub fn cfg_violations(ast: &Ast, code: &str) -> Vec<String> {
    let set = extract_cfg(ast, code);
    let mut out = Vec::new();
    if set.graphs.first().map(|g| g.function_name.as_str()) != Some("<module>") {
        out.push("first graph is not <module>".into());
    }
    let mut owners: std::collections::HashMap<usize, String> = std::collections::HashMap::new();
    for g in &set.graphs {
        let name = &g.function_name;
        let n = g.blocks.len();
        if g.edges.iter().any(|e| e.src >= n || e.dst >= n) {
            out.push(format!("{name}: dangling edge"));
            continue;
        }
        if g.edges.windows(2).any(|w| w[0] >= w[1]) {
            out.push(format!("{name}: edges not strictly sorted"));
        }
        let inputs = |b: usize| g.edges.iter().filter(move |e| e.dst == b);
        let outputs = |b: usize| g.edges.iter().filter(move |e| e.src == b);
        for (i, b) in g.blocks.iter().enumerate() {
            if b.id != i {
                out.push(format!("{name}: block at {i} has id {}", b.id));
            }
            let expected = match b.kind {
                BlockKind::Entry => i == g.entry,
                BlockKind::Exit => i == g.exit,
                _ => i != g.entry && i != g.exit,
            };
            if !expected {
                out.push(format!("{name}: block {i} kind {:?} disagrees with entry/exit", b.kind));
            }
            let statements_ok = match b.kind {
                BlockKind::Entry | BlockKind::Exit => b.statements.is_empty() && b.span.is_none(),
                BlockKind::Condition => b.statements.len() == 1,
                BlockKind::Body => !b.statements.is_empty(),
            };
            if !statements_ok {
                out.push(format!("{name}: block {i} ({:?}) has {} statements", b.kind, b.statements.len()));
            }
            for s in &b.statements {
                let Some(node) = ast.nodes.get(s.ast_node) else {
                    out.push(format!("{name}: statement points at missing ast node"));
                    continue;
                };
                // Compound statements (loops, `try`, classes) contribute only
                // their header, so only the start is pinned down.
                let start = node.span.start_byte;
                if !b.span.is_some_and(|span| span.start_byte <= start && start < span.end_byte.max(start + 1)) {
                    out.push(format!("{name}: block {i} span does not cover the start of `{}`", s.text));
                }
                if !code[node.span.start_byte..node.span.end_byte].trim_start().starts_with(s.text.split(" | ").next().unwrap_or("")) {
                    out.push(format!("{name}: statement text `{}` is not a prefix of its source", s.text));
                }
                if let Some(previous) = owners.insert(s.ast_node, name.clone()) {
                    out.push(format!("{name}: `{}` also appears in {previous}", s.text));
                }
            }
            if let Some(p) = b.span.and_then(|span| char_span_problem(code, &span)) {
                out.push(format!("{name}: block {i}: {p}"));
            }
            let succ: Vec<_> = outputs(i).collect();
            match b.kind {
                BlockKind::Condition => {
                    let mut labels: Vec<EdgeLabel> = succ.iter().map(|e| e.label).collect();
                    labels.sort();
                    if labels != [EdgeLabel::True, EdgeLabel::False] {
                        out.push(format!("{name}: condition `{}` has successors {labels:?}", b.statements[0].text));
                    }
                }
                _ => {
                    if succ.iter().any(|e| matches!(e.label, EdgeLabel::True | EdgeLabel::False)) {
                        out.push(format!("{name}: non-condition block {i} has a labelled branch"));
                    }
                    if succ.iter().filter(|e| !g.blocks[e.dst].approximate).count() > 1 {
                        out.push(format!("{name}: block {i} has several ordinary successors"));
                    }
                }
            }
        }
        if inputs(g.entry).count() != 0 {
            out.push(format!("{name}: entry has predecessors"));
        }
        if outputs(g.exit).count() != 0 {
            out.push(format!("{name}: exit has successors"));
        }
        // Maximality: a body block whose only successor is a body block
        // with no other predecessor should have absorbed it.
        for (i, b) in g.blocks.iter().enumerate() {
            let succ: Vec<_> = outputs(i).collect();
            if b.kind != BlockKind::Body || succ.len() != 1 {
                continue;
            }
            let next = &g.blocks[succ[0].dst];
            if next.kind == BlockKind::Body
                && succ[0].dst != i
                && !next.approximate
                && next.unreachable == b.unreachable
                && inputs(succ[0].dst).count() == 1
            {
                out.push(format!("{name}: blocks {i} and {} form an unmerged chain", succ[0].dst));
            }
        }
        // Reachability by breadth-first search from entry.
        let mut reached = vec![false; n];
        let mut queue = std::collections::VecDeque::from([g.entry]);
        while let Some(b) = queue.pop_front() {
            if !std::mem::replace(&mut reached[b], true) {
                queue.extend(outputs(b).map(|e| e.dst));
            }
        }
        for (i, b) in g.blocks.iter().enumerate() {
            if b.kind == BlockKind::Exit {
                continue;
            }
            if b.unreachable == reached[i] {
                out.push(format!("{name}: block {i} unreachable flag {} but reached {}", b.unreachable, reached[i]));
            }
            if i != g.entry && inputs(i).count() == 0 && !b.unreachable {
                out.push(format!("{name}: block {i} has no predecessors and is not flagged"));
            }
        }
    }
    if extract_cfg(ast, code) != set {
        out.push("second extraction differs".into());
    }
    out
}

/// Mismatches between a payload and the DOT text rendered from it, read
/// back with an independent parser. Labels drop carriage returns.
pub fn dot_violations(payload: &Payload, text: &str) -> Vec<String> {
    let graph = match dot::parse(text) {
        Ok(g) => g,
        Err(e) => return vec![format!("unparseable DOT: {e}")],
    };
    let mut out = Vec::new();
    let attr = |attrs: &dot::Attrs, key: &str| attrs.get(key).cloned();
    type Expected<'a> = Vec<(&'a str, String)>;
    let mut expect_nodes: Vec<(String, Expected)> = Vec::new();
    let mut expect_edges: Vec<(String, String, Expected)> = Vec::new();
    match payload {
        Payload::Tokens(_) => {}
        Payload::Ast(ast) => {
            for n in &ast.nodes {
                let label = match &n.text {
                    Some(t) if t != n.kind => format!("{}\n{t}", n.kind),
                    _ => n.kind.to_string(),
                };
                let shape = if n.named { "box" } else { "plaintext" };
                expect_nodes.push((format!("n{}", n.id), vec![("label", label), ("shape", shape.into())]));
                for c in &n.children {
                    expect_edges.push((format!("n{}", n.id), format!("n{c}"), vec![]));
                }
            }
        }
        Payload::Dfg(dfg) => {
            for n in &dfg.nodes {
                let label = format!("{}@{}", n.name, n.span.start_line + 1);
                expect_nodes.push((format!("n{}", n.id), vec![("label", label)]));
            }
            for e in &dfg.edges {
                let (label, style) = match e.kind {
                    FlowKind::ComesFrom => ("comesFrom", "solid"),
                    FlowKind::ComputedFrom => ("computedFrom", "dashed"),
                };
                expect_edges.push((
                    format!("n{}", e.src),
                    format!("n{}", e.dst),
                    vec![("label", label.into()), ("style", style.into())],
                ));
            }
        }
        Payload::Cfg(set) => {
            let names: Vec<Option<String>> = graph.subgraphs.iter().map(|s| s.1.clone()).collect();
            let expected: Vec<Option<String>> = set.graphs.iter().map(|g| Some(g.function_name.clone())).collect();
            if names != expected {
                out.push(format!("clusters {names:?}, functions {expected:?}"));
            }
            for (i, g) in set.graphs.iter().enumerate() {
                for b in &g.blocks {
                    let (label, shape) = match b.kind {
                        BlockKind::Entry => ("entry".to_string(), "doublecircle"),
                        BlockKind::Exit => ("exit".to_string(), "doublecircle"),
                        BlockKind::Condition => (b.statements[0].text.clone(), "diamond"),
                        BlockKind::Body => {
                            (b.statements.iter().map(|s| s.text.as_str()).collect::<Vec<_>>().join("\n"), "box")
                        }
                    };
                    let mut attrs = vec![("label", label), ("shape", shape.to_string())];
                    if b.unreachable || b.approximate {
                        attrs.push(("style", "dashed".into()));
                    }
                    expect_nodes.push((format!("g{i}_b{}", b.id), attrs));
                }
                for e in &g.edges {
                    let attrs = match e.label {
                        EdgeLabel::Unconditional => vec![],
                        EdgeLabel::True => vec![("label", "true".into())],
                        EdgeLabel::False => vec![("label", "false".into())],
                        EdgeLabel::LoopBack => vec![("label", "loop-back".into()), ("style", "dashed".into())],
                    };
                    expect_edges.push((format!("g{i}_b{}", e.src), format!("g{i}_b{}", e.dst), attrs));
                }
            }
        }
    }
    if graph.nodes.len() != expect_nodes.len() {
        out.push(format!("{} DOT nodes for {} payload nodes", graph.nodes.len(), expect_nodes.len()));
    }
    if graph.edges.len() != expect_edges.len() {
        out.push(format!("{} DOT edges for {} payload edges", graph.edges.len(), expect_edges.len()));
    }
    for ((id, attrs), (eid, eattrs)) in graph.nodes.iter().zip(&expect_nodes) {
        if id != eid {
            out.push(format!("node `{id}` where `{eid}` was expected"));
        }
        if attrs.len() != eattrs.len() || eattrs.iter().any(|(k, v)| attr(attrs, k) != Some(v.replace('\r', ""))) {
            out.push(format!("node `{id}` attributes {attrs:?}, expected {eattrs:?}"));
        }
    }
    for ((src, dst, attrs), (es, ed, eattrs)) in graph.edges.iter().zip(&expect_edges) {
        if (src, dst) != (es, ed) {
            out.push(format!("edge {src}->{dst} where {es}->{ed} was expected"));
        }
        if attrs.len() != eattrs.len() || eattrs.iter().any(|(k, v)| attr(attrs, k).as_ref() != Some(v)) {
            out.push(format!("edge {src}->{dst} attributes {attrs:?}, expected {eattrs:?}"));
        }
    }
    out
}
