//! Layered drawing of AST, DFG and CFG payloads, serialized as SVG.
//!
//! Nodes are assigned to layers by longest path once cycle-closing edges
//! are set aside, then ordered inside each layer by the mean position of their already
//! placed predecessors, with the node id breaking ties. Nothing depends on
//! hashing or timing, so the same payload always yields the same SVG.

use std::collections::VecDeque;
use std::fmt::Write as _;

use codelens_core::controlflow::{BlockKind, Cfg, EdgeLabel};
use codelens_core::{Ast, Dfg, FlowKind, Payload, Span};

const LINE_HEIGHT: f64 = 16.0;
const CHAR_WIDTH: f64 = 7.2;
const H_GAP: f64 = 24.0;
const V_GAP: f64 = 48.0;
const MARGIN: f64 = 16.0;
const CLUSTER_PAD: f64 = 14.0;
const CLUSTER_TITLE: f64 = 22.0;
const MAX_LABEL_LINES: usize = 6;
const MAX_LINE_CHARS: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    Box,
    Plain,
    Ellipse,
    Diamond,
    DoubleCircle,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Node {
    /// Same identifier the DOT output uses.
    pub key: String,
    pub label: String,
    pub shape: Shape,
    pub dashed: bool,
    /// Source range in characters, for highlighting in a text editor.
    pub chars: Option<(usize, usize)>,
    pub x: f64,
    pub y: f64,
    pub width: f64,
    pub height: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub label: Option<String>,
    pub dashed: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Cluster {
    pub title: String,
    pub x: f64,
    pub y: f64,
    pub width: f64,
    pub height: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Scene {
    pub nodes: Vec<Node>,
    pub edges: Vec<Edge>,
    pub clusters: Vec<Cluster>,
    pub width: f64,
    pub height: f64,
}

impl Scene {
    /// `None` for token sequences, which have no graph view.
    pub fn from_payload(payload: &Payload, code: &str) -> Option<Scene> {
        let offsets = CharOffsets::new(code);
        match payload {
            Payload::Tokens(_) => None,
            Payload::Ast(ast) => Some(ast_part(ast, &offsets).place(MARGIN, MARGIN).into_scene()),
            Payload::Dfg(dfg) => Some(dfg_part(dfg, &offsets).place(MARGIN, MARGIN).into_scene()),
            Payload::Cfg(set) => {
                let mut scene = Scene::default();
                let mut x = MARGIN;
                for (i, cfg) in set.graphs.iter().enumerate() {
                    let part = cfg_part(cfg, i, &offsets).place(x + CLUSTER_PAD, MARGIN + CLUSTER_TITLE);
                    let cluster = Cluster {
                        title: cfg.function_name.clone(),
                        x,
                        y: MARGIN,
                        width: part.width + 2.0 * CLUSTER_PAD,
                        height: part.height + CLUSTER_TITLE + CLUSTER_PAD,
                    };
                    x += cluster.width + H_GAP;
                    let base = scene.nodes.len();
                    scene.edges.extend(part.edges.into_iter().map(|e| Edge { src: e.src + base, dst: e.dst + base, ..e }));
                    scene.nodes.extend(part.nodes);
                    scene.height = scene.height.max(cluster.y + cluster.height + MARGIN);
                    scene.clusters.push(cluster);
                }
                scene.width = x - H_GAP + MARGIN;
                Some(scene)
            }
        }
    }

    pub fn to_svg(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {w:.1} {h:.1}" width="{w:.1}" height="{h:.1}" font-family="monospace" font-size="12">"#,
            w = self.width,
            h = self.height
        );
        out.push_str(concat!(
            r#"<defs><marker id="arrow" viewBox="0 0 10 10" refX="10" refY="5" markerWidth="7" markerHeight="7" orient="auto">"#,
            r#"<path d="M0,0L10,5L0,10z"/></marker></defs>"#,
            "\n"
        ));
        for c in &self.clusters {
            let _ = writeln!(
                out,
                r##"<g class="cluster"><rect x="{:.1}" y="{:.1}" width="{:.1}" height="{:.1}" fill="none" stroke="#999"/><text x="{:.1}" y="{:.1}">{}</text></g>"##,
                c.x,
                c.y,
                c.width,
                c.height,
                c.x + CLUSTER_PAD,
                c.y + 15.0,
                escape(&c.title)
            );
        }
        for edge in &self.edges {
            self.write_edge(edge, &mut out);
        }
        for node in &self.nodes {
            write_node(node, &mut out);
        }
        out.push_str("</svg>\n");
        out
    }

    fn write_edge(&self, edge: &Edge, out: &mut String) {
        let (a, b) = (&self.nodes[edge.src], &self.nodes[edge.dst]);
        let dash = if edge.dashed { r#" stroke-dasharray="5,4""# } else { "" };
        let _ = write!(out, r#"<g class="edge" data-src="{}" data-dst="{}">"#, a.key, b.key);
        if edge.src == edge.dst {
            let (x, y) = (a.x + a.width / 2.0, a.y);
            let _ = write!(
                out,
                r#"<path d="M{:.1},{:.1} c 30,-10 30,30 0,20" fill="none" stroke="black"{dash} marker-end="url(#arrow)"/>"#,
                x,
                y + a.height / 2.0 - 10.0
            );
            if let Some(label) = &edge.label {
                let _ = write!(out, r#"<text x="{:.1}" y="{:.1}">{}</text>"#, x + 26.0, y + a.height / 2.0, escape(label));
            }
        } else {
            let (x1, y1) = clip(a, b);
            let (x2, y2) = clip(b, a);
            let _ = write!(
                out,
                r#"<line x1="{x1:.1}" y1="{y1:.1}" x2="{x2:.1}" y2="{y2:.1}" stroke="black"{dash} marker-end="url(#arrow)"/>"#
            );
            if let Some(label) = &edge.label {
                let _ = write!(
                    out,
                    r##"<text x="{:.1}" y="{:.1}" fill="#555">{}</text>"##,
                    (x1 + x2) / 2.0 + 4.0,
                    (y1 + y2) / 2.0,
                    escape(label)
                );
            }
        }
        out.push_str("</g>\n");
    }
}

fn center(n: &Node) -> (f64, f64) {
    (n.x + n.width / 2.0, n.y + n.height / 2.0)
}

/// Where the segment from `from`'s center toward `to`'s center leaves `from`'s
/// bounding box.
fn clip(from: &Node, to: &Node) -> (f64, f64) {
    let (cx, cy) = center(from);
    let (tx, ty) = center(to);
    let (dx, dy) = (tx - cx, ty - cy);
    let sx = if dx == 0.0 { f64::INFINITY } else { (from.width / 2.0) / dx.abs() };
    let sy = if dy == 0.0 { f64::INFINITY } else { (from.height / 2.0) / dy.abs() };
    let t = sx.min(sy).min(1.0);
    (cx + dx * t, cy + dy * t)
}

fn write_node(node: &Node, out: &mut String) {
    let _ = write!(out, r#"<g class="node" id="{}""#, node.key);
    if let Some((from, to)) = node.chars {
        let _ = write!(out, r#" data-from="{from}" data-to="{to}""#);
    }
    out.push('>');
    let dash = if node.dashed { r#" stroke-dasharray="5,4""# } else { "" };
    let (cx, cy) = center(node);
    let (x, y, w, h) = (node.x, node.y, node.width, node.height);
    match node.shape {
        Shape::Box => {
            let _ = write!(out, r#"<rect x="{x:.1}" y="{y:.1}" width="{w:.1}" height="{h:.1}" fill="white" stroke="black"{dash}/>"#);
        }
        Shape::Plain => {}
        Shape::Ellipse => {
            let _ = write!(
                out,
                r#"<ellipse cx="{cx:.1}" cy="{cy:.1}" rx="{:.1}" ry="{:.1}" fill="white" stroke="black"{dash}/>"#,
                w / 2.0,
                h / 2.0
            );
        }
        Shape::Diamond => {
            let _ = write!(
                out,
                r#"<polygon points="{cx:.1},{y:.1} {:.1},{cy:.1} {cx:.1},{:.1} {x:.1},{cy:.1}" fill="white" stroke="black"{dash}/>"#,
                x + w,
                y + h
            );
        }
        Shape::DoubleCircle => {
            let r = w / 2.0;
            let _ = write!(
                out,
                r#"<circle cx="{cx:.1}" cy="{cy:.1}" r="{r:.1}" fill="white" stroke="black"/><circle cx="{cx:.1}" cy="{cy:.1}" r="{:.1}" fill="none" stroke="black"/>"#,
                r - 3.0
            );
        }
    }
    let lines = label_lines(&node.label);
    let top = cy - (lines.len() as f64 - 1.0) * LINE_HEIGHT / 2.0 + 4.0;
    out.push_str(r#"<text text-anchor="middle">"#);
    for (i, line) in lines.iter().enumerate() {
        let _ = write!(out, r#"<tspan x="{cx:.1}" y="{:.1}">{}</tspan>"#, top + i as f64 * LINE_HEIGHT, escape(line));
    }
    out.push_str("</text></g>\n");
}

fn label_lines(label: &str) -> Vec<String> {
    let mut lines: Vec<String> = label
        .lines()
        .take(MAX_LABEL_LINES)
        .map(|l| {
            if l.chars().count() > MAX_LINE_CHARS {
                l.chars().take(MAX_LINE_CHARS - 1).chain(['…']).collect()
            } else {
                l.to_string()
            }
        })
        .collect();
    if label.lines().count() > MAX_LABEL_LINES {
        lines.push("…".into());
    }
    if lines.is_empty() {
        lines.push(String::new());
    }
    lines
}

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\r' => {}
            c => out.push(c),
        }
    }
    out
}

/// Byte offset to character offset.
struct CharOffsets(Vec<usize>);

impl CharOffsets {
    fn new(code: &str) -> Self {
        let mut table = Vec::with_capacity(code.len() + 1);
        let mut chars = 0;
        for i in 0..=code.len() {
            table.push(chars);
            if i < code.len() && code.is_char_boundary(i) {
                chars += 1;
            }
        }
        CharOffsets(table)
    }

    fn span(&self, span: &Span) -> (usize, usize) {
        (self.0[span.start_byte], self.0[span.end_byte])
    }
}

/// A graph not yet positioned.
struct Part {
    nodes: Vec<Node>,
    edges: Vec<Edge>,
    width: f64,
    height: f64,
}

fn node(key: String, label: String, shape: Shape, dashed: bool, chars: Option<(usize, usize)>) -> Node {
    let lines = label_lines(&label);
    let widest = lines.iter().map(|l| l.chars().count()).max().unwrap_or(0) as f64;
    let (mut width, mut height) = (widest * CHAR_WIDTH + 20.0, lines.len() as f64 * LINE_HEIGHT + 12.0);
    match shape {
        Shape::Diamond => {
            width = width * 1.4 + 10.0;
            height *= 1.8;
        }
        Shape::DoubleCircle => {
            width = width.max(height) + 6.0;
            height = width;
        }
        Shape::Ellipse => width += 12.0,
        _ => {}
    }
    Node { key, label, shape, dashed, chars, x: 0.0, y: 0.0, width, height }
}

fn ast_part(ast: &Ast, offsets: &CharOffsets) -> Part {
    let nodes = ast
        .nodes
        .iter()
        .map(|n| {
            let label = match &n.text {
                Some(text) if text != n.kind => format!("{}\n{}", n.kind, text),
                _ => n.kind.to_string(),
            };
            let shape = if n.named { Shape::Box } else { Shape::Plain };
            node(format!("n{}", n.id), label, shape, false, Some(offsets.span(&n.span)))
        })
        .collect();
    let edges = ast
        .nodes
        .iter()
        .flat_map(|n| n.children.iter().map(move |&c| Edge { src: n.id, dst: c, label: None, dashed: false }))
        .collect();
    Part { nodes, edges, width: 0.0, height: 0.0 }
}

fn dfg_part(dfg: &Dfg, offsets: &CharOffsets) -> Part {
    let nodes = dfg
        .nodes
        .iter()
        .map(|n| {
            let label = format!("{}@{}", n.name, n.span.start_line + 1);
            node(format!("n{}", n.id), label, Shape::Ellipse, false, Some(offsets.span(&n.span)))
        })
        .collect();
    let edges = dfg
        .edges
        .iter()
        .map(|e| Edge {
            src: e.src,
            dst: e.dst,
            label: Some(e.kind.as_str().to_string()),
            dashed: e.kind == FlowKind::ComputedFrom,
        })
        .collect();
    Part { nodes, edges, width: 0.0, height: 0.0 }
}

fn cfg_part(cfg: &Cfg, index: usize, offsets: &CharOffsets) -> Part {
    let nodes = cfg
        .blocks
        .iter()
        .map(|b| {
            let text = || b.statements.iter().map(|s| s.text.as_str()).collect::<Vec<_>>().join("\n");
            let (label, shape) = match b.kind {
                BlockKind::Entry => ("entry".to_string(), Shape::DoubleCircle),
                BlockKind::Exit => ("exit".to_string(), Shape::DoubleCircle),
                BlockKind::Condition => (text(), Shape::Diamond),
                BlockKind::Body => (text(), Shape::Box),
            };
            let chars = b.span.as_ref().map(|s| offsets.span(s));
            node(format!("g{index}_b{}", b.id), label, shape, b.unreachable || b.approximate, chars)
        })
        .collect();
    let edges = cfg
        .edges
        .iter()
        .map(|e| Edge {
            src: e.src,
            dst: e.dst,
            label: (e.label != EdgeLabel::Unconditional).then(|| e.label.as_str().to_string()),
            dashed: e.label == EdgeLabel::LoopBack,
        })
        .collect();
    Part { nodes, edges, width: 0.0, height: 0.0 }
}

/// Layer index of every node. Edges that close a cycle in a depth-first
/// walk (started from the nodes without predecessors, then by id) are set
/// aside; on what remains each node sits one layer below its deepest
/// predecessor.
pub fn layers(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut succ = vec![Vec::new(); n];
    let mut has_pred = vec![false; n];
    for &(a, b) in edges {
        if a != b {
            succ[a].push(b);
            has_pred[b] = true;
        }
    }
    // 0 unvisited, 1 on the stack, 2 finished.
    let mut state = vec![0u8; n];
    let mut forward = vec![Vec::new(); n];
    let roots = (0..n).filter(|&v| !has_pred[v]).chain(0..n);
    for root in roots {
        if state[root] != 0 {
            continue;
        }
        state[root] = 1;
        let mut stack = vec![(root, 0usize)];
        while let Some((v, i)) = stack.pop() {
            let Some(&w) = succ[v].get(i) else {
                state[v] = 2;
                continue;
            };
            stack.push((v, i + 1));
            match state[w] {
                0 => {
                    forward[v].push(w);
                    state[w] = 1;
                    stack.push((w, 0));
                }
                2 => forward[v].push(w),
                _ => {}
            }
        }
    }
    let mut indegree = vec![0usize; n];
    for targets in &forward {
        for &w in targets {
            indegree[w] += 1;
        }
    }
    let mut layer = vec![0usize; n];
    let mut ready: VecDeque<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
    while let Some(v) = ready.pop_front() {
        for &w in &forward[v] {
            layer[w] = layer[w].max(layer[v] + 1);
            indegree[w] -= 1;
            if indegree[w] == 0 {
                ready.push_back(w);
            }
        }
    }
    layer
}

/// Nodes of each layer, left to right.
pub fn order(layer: &[usize], edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let depth = layer.iter().max().map_or(0, |&d| d + 1);
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); depth];
    for (v, &l) in layer.iter().enumerate() {
        rows[l].push(v);
    }
    let mut position = vec![0.0f64; layer.len()];
    for row in &mut rows {
        let key = |v: usize| {
            let preds: Vec<f64> =
                edges.iter().filter(|&&(a, b)| b == v && a != v && layer[a] < layer[v]).map(|&(a, _)| position[a]).collect();
            if preds.is_empty() {
                v as f64
            } else {
                preds.iter().sum::<f64>() / preds.len() as f64
            }
        };
        let mut keyed: Vec<(f64, usize)> = row.iter().map(|&v| (key(v), v)).collect();
        keyed.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        *row = keyed.into_iter().map(|(_, v)| v).collect();
        for (i, &v) in row.iter().enumerate() {
            position[v] = i as f64;
        }
    }
    rows
}

impl Part {
    /// Positions every node with the top-left corner of the part at `(x0, y0)`.
    fn place(mut self, x0: f64, y0: f64) -> Part {
        let pairs: Vec<(usize, usize)> = self.edges.iter().map(|e| (e.src, e.dst)).collect();
        let rows = order(&layers(self.nodes.len(), &pairs), &pairs);
        let row_widths: Vec<f64> = rows
            .iter()
            .map(|row| row.iter().map(|&v| self.nodes[v].width).sum::<f64>() + H_GAP * row.len().saturating_sub(1) as f64)
            .collect();
        let width = row_widths.iter().copied().fold(0.0, f64::max);
        let mut y = y0;
        for (row, row_width) in rows.iter().zip(&row_widths) {
            let height = row.iter().map(|&v| self.nodes[v].height).fold(0.0, f64::max);
            let mut x = x0 + (width - row_width) / 2.0;
            for &v in row {
                let node = &mut self.nodes[v];
                node.x = x;
                node.y = y + (height - node.height) / 2.0;
                x += node.width + H_GAP;
            }
            y += height + V_GAP;
        }
        self.width = width;
        self.height = if rows.is_empty() { 0.0 } else { y - V_GAP - y0 };
        self
    }

    fn into_scene(self) -> Scene {
        Scene {
            width: self.width + 2.0 * MARGIN,
            height: self.height + 2.0 * MARGIN,
            nodes: self.nodes,
            edges: self.edges,
            clusters: Vec::new(),
        }
    }
}
