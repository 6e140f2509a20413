//! Line-oriented diagram files and monospace rendering.
//!
//! File grammar:
//!
//! ```text
//! n=<int> loops=<int>
//! edge N<i>-S<j> deco=<letters>     (one line per edge, sorted)
//! order (e<k>,b<m>) ...             (a-value 1 with decorated propagating edges)
//! ```
//!
//! Decoration letters are `b B o O`; the blocks of an edge are separated by
//! `|`. Edge and block indices in the order line are 0-based.

use super::{AdmissibleDiagram, DiagramEdge, Face, NodeRef, RawDiagram};
use crate::error::{Error, Result};
use crate::verlinde::{format_deco_word, is_alternating, parse_deco_word};

/// Serializes a diagram in the file grammar (trailing newline included).
pub fn print_diagram(d: &RawDiagram) -> String {
    let mut out = format!("n={} loops={}\n", d.n, d.loops);
    for e in &d.edges {
        let blocks: Vec<String> = e.blocks.iter().map(|b| format_deco_word(b)).collect();
        out.push_str(&format!("edge {}-{} deco={}\n", e.a, e.b, blocks.join("|")));
    }
    if let Some(order) = &d.block_order {
        if !order.is_empty() {
            let items: Vec<String> = order.iter().map(|(e, b)| format!("(e{e},b{b})")).collect();
            out.push_str(&format!("order {}\n", items.join(" ")));
        }
    }
    out
}

fn parse_node(text: &str) -> Result<NodeRef> {
    let bad = || Error::Parse(format!("node '{text}'"));
    let (face, digits) = match text.chars().next() {
        Some('N') => (Face::North, &text[1..]),
        Some('S') => (Face::South, &text[1..]),
        _ => return Err(bad()),
    };
    let index = digits.parse().map_err(|_| bad())?;
    Ok(NodeRef { face, index })
}

fn parse_key<'a>(field: &'a str, key: &str) -> Result<&'a str> {
    field
        .strip_prefix(key)
        .and_then(|r| r.strip_prefix('='))
        .ok_or_else(|| Error::Parse(format!("expected '{key}=' in '{field}'")))
}

fn parse_order_item(item: &str) -> Result<(usize, usize)> {
    let bad = || Error::Parse(format!("order entry '{item}'"));
    let inner = item
        .strip_prefix("(e")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(bad)?;
    let (e, b) = inner.split_once(",b").ok_or_else(bad)?;
    Ok((e.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?))
}

/// Parses the file grammar into a structurally checked diagram. Edges may
/// appear in any order and are sorted; order-line edge indices refer to the
/// edges as listed in the file.
pub fn parse_diagram(text: &str) -> Result<RawDiagram> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty diagram file".into()))?;
    let mut fields = header.split_whitespace();
    let n = parse_key(fields.next().unwrap_or(""), "n")?
        .parse()
        .map_err(|_| Error::Parse(format!("header '{header}'")))?;
    let loops = parse_key(fields.next().unwrap_or(""), "loops")?
        .parse()
        .map_err(|_| Error::Parse(format!("header '{header}'")))?;
    if fields.next().is_some() {
        return Err(Error::Parse(format!("header '{header}'")));
    }
    let mut edges = Vec::new();
    let mut order = None;
    for line in lines {
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("edge") => {
                let ends = parts
                    .next()
                    .ok_or_else(|| Error::Parse(format!("line '{line}'")))?;
                let deco = parse_key(parts.next().unwrap_or(""), "deco")?;
                if parts.next().is_some() {
                    return Err(Error::Parse(format!("line '{line}'")));
                }
                let (x, y) = ends
                    .split_once('-')
                    .ok_or_else(|| Error::Parse(format!("edge '{ends}'")))?;
                let (x, y) = (parse_node(x)?, parse_node(y)?);
                let mut blocks = Vec::new();
                if !deco.is_empty() {
                    for b in deco.split('|') {
                        let word = parse_deco_word(b)?;
                        if word.is_empty() || !is_alternating(&word) {
                            return Err(Error::MalformedDiagram(format!(
                                "block '{b}' is empty or not normal"
                            )));
                        }
                        blocks.push(word);
                    }
                }
                if x > y {
                    return Err(Error::MalformedDiagram(format!(
                        "edge {x}-{y} must list its smaller end first"
                    )));
                }
                edges.push(DiagramEdge { a: x, b: y, blocks });
            }
            Some("order") => {
                if order.is_some() {
                    return Err(Error::Parse("repeated order line".into()));
                }
                order = Some(parts.map(parse_order_item).collect::<Result<Vec<_>>>()?);
            }
            _ => return Err(Error::Parse(format!("line '{line}'"))),
        }
    }
    let mut d = RawDiagram {
        n,
        edges,
        loops,
        block_order: order,
    };
    if d.a_value() == 1 && d.block_order.is_none() {
        d.block_order = Some(Vec::new());
    }
    if let Some(o) = &d.block_order {
        if o.iter().any(|&(e, _)| e >= d.edges.len()) {
            return Err(Error::MalformedDiagram(
                "order refers to a missing edge".into(),
            ));
        }
    }
    d.canonicalize();
    d.check_structure()?;
    Ok(d)
}

/// Column of node j in the picture.
fn col(j: usize) -> usize {
    4 * (j - 1) + 1
}

struct Canvas {
    width: usize,
    rows: Vec<Vec<char>>,
    notes: Vec<String>,
}

impl Canvas {
    fn row(&self) -> Vec<char> {
        vec![' '; self.width]
    }

    fn push(&mut self, row: Vec<char>) {
        self.rows.push(row);
    }

    /// Writes `text` starting at `at` if it fits before `limit`; otherwise
    /// writes a footnote marker and records the text.
    fn label(&mut self, row: &mut [char], at: usize, limit: usize, text: &str, what: String) {
        let chars: Vec<char> = text.chars().collect();
        if at + chars.len() <= limit {
            row[at..at + chars.len()].copy_from_slice(&chars);
        } else {
            let mark = format!("*{}", self.notes.len() + 1);
            self.notes.push(format!("{mark} {what}: {text}"));
            for (k, c) in mark.chars().enumerate() {
                if at + k < row.len() {
                    row[at + k] = c;
                }
            }
        }
    }
}

/// Nesting depth of each arc of one face: 0 for arcs containing no other
/// arc.
fn arc_depths(d: &RawDiagram, face: Face) -> Vec<(usize, &DiagramEdge)> {
    let arcs: Vec<&DiagramEdge> = d
        .edges
        .iter()
        .filter(|e| e.a.face == face && e.b.face == face)
        .collect();
    let mut depth: Vec<usize> = vec![0; arcs.len()];
    let mut by_span: Vec<usize> = (0..arcs.len()).collect();
    by_span.sort_by_key(|&k| arcs[k].b.index - arcs[k].a.index);
    for &k in &by_span {
        let (p, q) = (arcs[k].a.index, arcs[k].b.index);
        depth[k] = arcs
            .iter()
            .enumerate()
            .filter(|(_, x)| p < x.a.index && x.b.index < q)
            .map(|(j, _)| depth[j] + 1)
            .max()
            .unwrap_or(0);
    }
    by_span.into_iter().map(|k| (depth[k], arcs[k])).collect()
}

fn arc_rows(canvas: &mut Canvas, d: &RawDiagram, face: Face) -> Vec<Vec<char>> {
    let arcs = arc_depths(d, face);
    let max_depth = arcs.iter().map(|a| a.0).max();
    let mut rows = Vec::new();
    let Some(max_depth) = max_depth else {
        return rows;
    };
    let (left, right, fill) = match face {
        Face::North => ('\\', '/', '_'),
        Face::South => ('/', '\\', '-'),
    };
    for level in 0..=max_depth {
        let mut row = canvas.row();
        for e in &d.edges {
            let open = match (e.a.face == face, e.b.face == face) {
                (true, true) => arcs
                    .iter()
                    .any(|(dep, x)| std::ptr::eq(*x, e) && *dep > level),
                (true, false) | (false, true) => true,
                (false, false) => false,
            };
            if open {
                for node in [e.a, e.b].into_iter().filter(|x| x.face == face) {
                    row[col(node.index)] = '|';
                }
            }
        }
        for (_, e) in arcs.iter().filter(|(dep, _)| *dep == level) {
            let (p, q) = (col(e.a.index), col(e.b.index));
            row[p] = left;
            row[q] = right;
            for c in row.iter_mut().take(q).skip(p + 1) {
                *c = fill;
            }
            let text = e
                .blocks
                .iter()
                .map(|b| format_deco_word(b))
                .collect::<Vec<_>>()
                .join("|");
            if !text.is_empty() {
                let span = q - p - 1;
                let at = p + 1 + span.saturating_sub(text.chars().count()) / 2;
                canvas.label(&mut row, at, q, &text, format!("{}-{}", e.a, e.b));
            }
        }
        rows.push(row);
    }
    if face == Face::South {
        rows.reverse();
    }
    rows
}

/// A deterministic monospace picture: north labels, north arcs (cups drawn
/// as `\__/`), propagating edges with their decorations and slants, south
/// arcs (`/--\`), south labels and the loop count.
pub fn render_diagram(d: &AdmissibleDiagram) -> String {
    let raw = d.raw();
    let w = raw.width();
    let mut canvas = Canvas {
        width: col(w) + 4,
        rows: Vec::new(),
        notes: Vec::new(),
    };
    let mut labels = canvas.row();
    for j in 1..=w {
        for (k, c) in j.to_string().chars().enumerate() {
            labels[col(j) + k] = c;
        }
    }
    canvas.push(labels);
    for row in arc_rows(&mut canvas, raw, Face::North) {
        canvas.push(row);
    }

    let props: Vec<(usize, &DiagramEdge)> = raw
        .edges
        .iter()
        .enumerate()
        .filter(|(_, e)| e.is_propagating())
        .collect();
    let bars = |canvas: &Canvas, except: Option<usize>| {
        let mut row = canvas.row();
        for (k, e) in &props {
            if Some(*k) != except {
                row[col(e.a.index)] = '|';
            }
        }
        row
    };
    if !props.is_empty() {
        canvas.push(bars(&canvas, None));
        let mut decorated: Vec<(usize, String)> = Vec::new();
        match &raw.block_order {
            Some(order) => {
                for &(k, b) in order {
                    decorated.push((k, format_deco_word(&raw.edges[k].blocks[b])));
                }
            }
            None => {
                for (k, e) in &props {
                    if e.is_decorated() {
                        let text = e
                            .blocks
                            .iter()
                            .map(|b| format_deco_word(b))
                            .collect::<Vec<_>>()
                            .join("|");
                        decorated.push((*k, text));
                    }
                }
            }
        }
        for (k, text) in decorated {
            let e = &raw.edges[k];
            let mut row = bars(&canvas, Some(k));
            let limit = props
                .iter()
                .map(|(_, x)| col(x.a.index))
                .filter(|&c| c > col(e.a.index))
                .min()
                .unwrap_or(canvas.width);
            canvas.label(
                &mut row,
                col(e.a.index),
                limit,
                &text,
                format!("{}-{}", e.a, e.b),
            );
            canvas.push(row);
        }
        let steps = props
            .iter()
            .map(|(_, e)| col(e.a.index).abs_diff(col(e.b.index)))
            .max()
            .unwrap_or(0);
        for t in 1..=steps.div_ceil(2) {
            let mut row = canvas.row();
            for (_, e) in &props {
                let (from, to) = (col(e.a.index), col(e.b.index));
                let dist = from.abs_diff(to);
                let moved = (2 * t).min(dist);
                let slant = 2 * t <= dist;
                let (x, c) = if to > from {
                    (from + moved, if slant { '\\' } else { '|' })
                } else if to < from {
                    (from - moved, if slant { '/' } else { '|' })
                } else {
                    (from, '|')
                };
                row[x] = c;
            }
            canvas.push(row);
        }
        let mut row = canvas.row();
        for (_, e) in &props {
            row[col(e.b.index)] = '|';
        }
        canvas.push(row);
    }

    for row in arc_rows(&mut canvas, raw, Face::South) {
        canvas.push(row);
    }
    let mut south = canvas.row();
    for j in 1..=w {
        for (k, c) in format!("{j}'").chars().enumerate() {
            south[col(j) + k] = c;
        }
    }
    canvas.push(south);
    let mut out: Vec<String> = canvas
        .rows
        .iter()
        .map(|r| r.iter().collect::<String>().trim_end().to_string())
        .collect();
    if raw.loops > 0 {
        out.push(format!("loops: {} x BO", raw.loops));
    }
    out.extend(canvas.notes);
    out.join("\n")
}
