//! Diagram concatenation by path tracing, with block conjoining, decoration
//! reduction and loop evaluation.
//!
//! Stacking `top` over `bottom` identifies the south nodes of `top` with the
//! north nodes of `bottom`. Every edge of the product is a path alternating
//! between the two layers; its decorations are the pieces met along the way.

use super::{
    check_graph, identity_raw, simple_raw, AdmissibleDiagram, DiagramEdge, DiagramResult, Face,
    NodeRef, RawDiagram,
};
use crate::coxeter::{CoxeterGraph, Side};
use crate::error::{Error, Result};
use crate::verlinde::{combine, deco_normal_form, DecoWord, Decoration};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Layer {
    Top,
    Bottom,
}

/// One traversal of a factor edge.
#[derive(Clone, Copy)]
struct Piece {
    layer: Layer,
    edge: usize,
    reversed: bool,
}

struct Traced {
    /// Endpoints of the product edge (in traversal order) and its pieces.
    edges: Vec<(NodeRef, NodeRef, Vec<Piece>)>,
    loops: Vec<Vec<Piece>>,
}

fn trace(top: &RawDiagram, bottom: &RawDiagram) -> Traced {
    let w = top.width();
    let layer = |l: Layer| if l == Layer::Top { top } else { bottom };
    let mut used = [vec![false; w + 2], vec![false; w + 2]];
    let slot = |l: Layer| usize::from(l == Layer::Bottom);

    // Follows the path entering `layer` at `node`; returns the pieces and
    // the terminal product node, or None when the path closes into a loop.
    let walk = |mut l: Layer,
                mut node: NodeRef,
                used: &mut [Vec<bool>; 2],
                stop_at: Option<(Layer, NodeRef)>| {
        let mut pieces = Vec::new();
        loop {
            let d = layer(l);
            let k = d.edge_at(node).expect("perfect matching");
            let e = &d.edges[k];
            used[slot(l)][k] = true;
            let reversed = e.b == node;
            pieces.push(Piece {
                layer: l,
                edge: k,
                reversed,
            });
            let other = if reversed { e.a } else { e.b };
            let terminal = matches!(
                (l, other.face),
                (Layer::Top, Face::North) | (Layer::Bottom, Face::South)
            );
            if terminal {
                return (pieces, Some(other));
            }
            let (nl, nn) = match l {
                Layer::Top => (Layer::Bottom, NodeRef::north(other.index)),
                Layer::Bottom => (Layer::Top, NodeRef::south(other.index)),
            };
            if Some((nl, nn)) == stop_at {
                return (pieces, None);
            }
            l = nl;
            node = nn;
        }
    };

    let mut edges = Vec::new();
    for j in 1..=w {
        let start = NodeRef::north(j);
        let k = top.edge_at(start).expect("perfect matching");
        if used[0][k] {
            continue;
        }
        let (pieces, end) = walk(Layer::Top, start, &mut used, None);
        edges.push((start, end.expect("open path"), pieces));
    }
    for j in 1..=w {
        let start = NodeRef::south(j);
        let k = bottom.edge_at(start).expect("perfect matching");
        if used[1][k] {
            continue;
        }
        let (pieces, end) = walk(Layer::Bottom, start, &mut used, None);
        edges.push((start, end.expect("open path"), pieces));
    }
    let mut loops = Vec::new();
    for j in 1..=w {
        let start = NodeRef::south(j);
        let k = top.edge_at(start).expect("perfect matching");
        if used[0][k] {
            continue;
        }
        let (pieces, _) = walk(Layer::Top, start, &mut used, Some((Layer::Top, start)));
        loops.push(pieces);
    }
    Traced { edges, loops }
}

impl Piece {
    fn blocks(&self, top: &RawDiagram, bottom: &RawDiagram) -> Vec<DecoWord> {
        let d = if self.layer == Layer::Top {
            top
        } else {
            bottom
        };
        let blocks = &d.edges[self.edge].blocks;
        if self.reversed {
            super::reverse_blocks(blocks)
        } else {
            blocks.clone()
        }
    }

    /// Vertical sort key of the piece's blocks: north arcs of the top, top
    /// propagating blocks by rank, the middle, bottom propagating blocks by
    /// rank, south arcs of the bottom.
    fn keys(&self, top: &RawDiagram, bottom: &RawDiagram) -> Vec<(u8, usize)> {
        let d = if self.layer == Layer::Top {
            top
        } else {
            bottom
        };
        let e = &d.edges[self.edge];
        let base = if self.layer == Layer::Top { 0 } else { 2 };
        let n = e.blocks.len();
        if e.is_propagating() {
            let rank = |b: usize| {
                d.block_order
                    .as_ref()
                    .and_then(|o| o.iter().position(|&x| x == (self.edge, b)))
                    .unwrap_or(0)
            };
            (0..n).map(|b| (base + 1, rank(b))).collect()
        } else {
            let key = match (self.layer, e.a.face) {
                (Layer::Top, Face::North) => 0,
                (Layer::Bottom, Face::South) => 4,
                _ => 2,
            };
            vec![(key, 0); n]
        }
    }
}

/// Cyclic normal form of a loop's decorations.
fn reduce_loop(word: &[Decoration]) -> (u32, DecoWord) {
    let nd = deco_normal_form(word);
    let (mut e, mut w) = (nd.two_exp, nd.word);
    while w.len() >= 2 && w[0].family() == w[w.len() - 1].family() {
        let last = w.pop().expect("non-empty");
        let (x, c) = combine(last, w[0]);
        e += x;
        w[0] = c;
    }
    (e, w)
}

fn is_c1_loop(w: &[Decoration]) -> bool {
    matches!(
        w,
        [Decoration::ClosedTri, Decoration::OpenTri] | [Decoration::OpenTri, Decoration::ClosedTri]
    )
}

/// Stacks `top` over `bottom`, returning (2-exponent, δ-exponent, product).
pub fn stack(top: &RawDiagram, bottom: &RawDiagram) -> Result<(u32, u32, RawDiagram)> {
    if top.n != bottom.n {
        return Err(Error::Precondition(format!(
            "diagram ranks {} and {} differ",
            top.n, bottom.n
        )));
    }
    let traced = trace(top, bottom);
    let mut two = 0;
    let mut delta = 0;
    let mut loops = top.loops + bottom.loops;
    for lp in &traced.loops {
        let word: DecoWord = lp
            .iter()
            .flat_map(|p| p.blocks(top, bottom))
            .flatten()
            .collect();
        let (e, w) = reduce_loop(&word);
        two += e;
        if w.len() <= 1 {
            delta += 1;
        } else if is_c1_loop(&w) {
            loops += 1;
        } else {
            return Err(Error::Inadmissible(format!(
                "loop decorated by {}",
                crate::verlinde::unicode_deco_word(&w)
            )));
        }
    }
    let north_arcs = traced
        .edges
        .iter()
        .filter(|(x, y, _)| x.face == Face::North && y.face == Face::North)
        .count();
    let mut edges: Vec<DiagramEdge> = Vec::new();
    let mut vertical: Vec<((u8, usize), usize, DecoWord)> = Vec::new();
    for (x, y, pieces) in &traced.edges {
        let idx = edges.len();
        let propagating = x.face != y.face;
        if north_arcs == 1 && propagating {
            for p in pieces {
                for (key, block) in p.keys(top, bottom).into_iter().zip(p.blocks(top, bottom)) {
                    vertical.push((key, idx, block));
                }
            }
            edges.push(DiagramEdge {
                a: *x,
                b: *y,
                blocks: Vec::new(),
            });
        } else {
            let word: DecoWord = pieces
                .iter()
                .flat_map(|p| p.blocks(top, bottom))
                .flatten()
                .collect();
            let nd = deco_normal_form(&word);
            two += nd.two_exp;
            let blocks = if nd.word.is_empty() {
                Vec::new()
            } else {
                vec![nd.word]
            };
            edges.push(DiagramEdge::new(*x, *y, blocks));
        }
    }
    let block_order = if north_arcs == 1 {
        // Conjoin vertically adjacent blocks of the same edge.
        vertical.sort_by_key(|v| v.0);
        let mut merged: Vec<(usize, DecoWord)> = Vec::new();
        for (_, idx, block) in vertical {
            match merged.last_mut() {
                Some((last, word)) if *last == idx => word.extend(block),
                _ => merged.push((idx, block)),
            }
        }
        let mut order = Vec::new();
        for (idx, word) in merged {
            let nd = deco_normal_form(&word);
            two += nd.two_exp;
            order.push((idx, edges[idx].blocks.len()));
            edges[idx].blocks.push(nd.word);
        }
        Some(order)
    } else {
        None
    };
    let mut raw = RawDiagram {
        n: top.n,
        edges,
        loops,
        block_order,
    };
    raw.canonicalize();
    if north_arcs == 0 && (raw.edges.iter().any(|e| e.is_decorated()) || raw.loops > 0) {
        return Err(Error::Inadmissible(
            "decorated diagram with a-value 0".into(),
        ));
    }
    Ok((two, delta, raw))
}

fn checked(raw: RawDiagram) -> Result<AdmissibleDiagram> {
    if cfg!(debug_assertions) {
        AdmissibleDiagram::new(raw).map_err(|e| {
            Error::InvariantViolation(format!("generator action left the admissible set: {e}"))
        })
    } else {
        Ok(AdmissibleDiagram(raw))
    }
}

/// Multiplies 2^k δ^m d by the simple diagram d_i on the given side
/// (`Left`: d_i · d, `Right`: d · d_i).
pub fn act_simple(side: Side, i: usize, r: &DiagramResult) -> Result<DiagramResult> {
    let d = r.diagram.raw();
    if i == 0 || i > d.n + 1 {
        return Err(Error::InvalidGenerator {
            index: i,
            graph: format!("diagrams on {} nodes", d.width()),
        });
    }
    let s = simple_raw(d.n, i);
    let (two, delta, raw) = match side {
        Side::Left => stack(&s, d)?,
        Side::Right => stack(d, &s)?,
    };
    Ok(DiagramResult {
        two_exp: r.two_exp + two,
        delta_exp: r.delta_exp + delta,
        diagram: checked(raw)?,
    })
}

/// d_{g1} d_{g2} ⋯ d_{gr} with its accumulated scalar.
pub fn from_generator_word(graph: &CoxeterGraph, gens: &[usize]) -> Result<DiagramResult> {
    check_graph(graph)?;
    graph.check_word(gens)?;
    let mut r = DiagramResult::unscaled(AdmissibleDiagram(identity_raw(graph.n())));
    for &g in gens {
        r = act_simple(Side::Right, g, &r)?;
    }
    Ok(r)
}

/// The product d1 · d2, computed by factoring d1 into simple diagrams and
/// letting them act on d2 from the left.
pub fn multiply(d1: &AdmissibleDiagram, d2: &AdmissibleDiagram) -> Result<DiagramResult> {
    if d1.n() != d2.n() {
        return Err(Error::Precondition(format!(
            "diagram ranks {} and {} differ",
            d1.n(),
            d2.n()
        )));
    }
    let word = super::factor_into_simples(d1)?;
    let mut r = DiagramResult::unscaled(d2.clone());
    for &g in word.iter().rev() {
        r = act_simple(Side::Left, g, &r)?;
    }
    Ok(r)
}
