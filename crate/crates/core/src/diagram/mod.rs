//! Decorated planar diagrams for the affine C Temperley–Lieb algebra.
//!
//! A diagram on N = n+2 columns is stored as a canonical combinatorial
//! record: a non-crossing perfect matching of the north nodes 1..N and the
//! south nodes 1′..N′, a sequence of decoration blocks on each edge, a count
//! of ▲△-decorated loops, and (only when exactly one north edge is
//! non-propagating) the global top-to-bottom order of the blocks on
//! propagating edges. No curve geometry is stored; isotopy classes are
//! represented by this canonical form.

mod factor;
mod format;
mod stack;
mod validate;

use std::collections::BTreeMap;
use std::fmt;

pub use factor::factor_into_simples;
pub use format::{parse_diagram, print_diagram, render_diagram};
pub use stack::{act_simple, from_generator_word, multiply, stack};
pub use validate::{validate_admissible, Rule, Violation};

use crate::coxeter::{CoxeterGraph, GraphKind};
use crate::error::{Error, Result};
use crate::poly::DeltaPoly;
use crate::verlinde::{DecoWord, Decoration};

/// Top or bottom face of the diagram box.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Face {
    North,
    South,
}

/// A boundary node: `North i` is node i, `South i` is node i′.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeRef {
    pub face: Face,
    pub index: usize,
}

impl NodeRef {
    pub fn north(index: usize) -> NodeRef {
        NodeRef {
            face: Face::North,
            index,
        }
    }

    pub fn south(index: usize) -> NodeRef {
        NodeRef {
            face: Face::South,
            index,
        }
    }

    /// Position on the boundary circle: north j at j−1, south j at 2N−j.
    pub(crate) fn circle_pos(self, width: usize) -> usize {
        match self.face {
            Face::North => self.index - 1,
            Face::South => 2 * width - self.index,
        }
    }
}

impl fmt::Display for NodeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.face {
            Face::North => write!(f, "N{}", self.index),
            Face::South => write!(f, "S{}", self.index),
        }
    }
}

/// An edge with endpoints `a < b` and its decoration blocks, read from `a`
/// to `b`. Blocks are non-empty normal (alternating) words.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagramEdge {
    pub a: NodeRef,
    pub b: NodeRef,
    pub blocks: Vec<DecoWord>,
}

impl DiagramEdge {
    pub fn new(x: NodeRef, y: NodeRef, blocks: Vec<DecoWord>) -> DiagramEdge {
        if x <= y {
            DiagramEdge { a: x, b: y, blocks }
        } else {
            DiagramEdge {
                a: y,
                b: x,
                blocks: reverse_blocks(&blocks),
            }
        }
    }

    pub fn is_propagating(&self) -> bool {
        self.a.face != self.b.face
    }

    pub fn touches(&self, node: NodeRef) -> bool {
        self.a == node || self.b == node
    }

    /// All decorations in reading order.
    pub fn symbols(&self) -> DecoWord {
        self.blocks.concat()
    }

    pub fn is_decorated(&self) -> bool {
        !self.blocks.is_empty()
    }
}

/// Blocks and symbols in reverse order (the same edge read backwards).
pub fn reverse_blocks(blocks: &[DecoWord]) -> Vec<DecoWord> {
    blocks
        .iter()
        .rev()
        .map(|b| b.iter().rev().copied().collect())
        .collect()
}

/// A decorated diagram in canonical form, not necessarily admissible.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RawDiagram {
    /// Rank parameter; the diagram has n+2 nodes on each face.
    pub n: usize,
    /// Edges sorted by endpoint `a`.
    pub edges: Vec<DiagramEdge>,
    /// Number of ▲△-decorated loops.
    pub loops: u32,
    /// For a-value 1: all blocks on propagating edges as (edge, block)
    /// pairs from top to bottom.
    pub block_order: Option<Vec<(usize, usize)>>,
}

impl RawDiagram {
    /// Number of nodes per face.
    pub fn width(&self) -> usize {
        self.n + 2
    }

    /// Sorts edges and remaps the block order accordingly.
    pub(crate) fn canonicalize(&mut self) {
        let mut idx: Vec<usize> = (0..self.edges.len()).collect();
        idx.sort_by(|&x, &y| self.edges[x].a.cmp(&self.edges[y].a));
        let mut new_pos = vec![0; idx.len()];
        for (pos, &old) in idx.iter().enumerate() {
            new_pos[old] = pos;
        }
        let edges = idx.iter().map(|&i| self.edges[i].clone()).collect();
        self.edges = edges;
        if let Some(order) = &mut self.block_order {
            for entry in order.iter_mut() {
                entry.0 = new_pos[entry.0];
            }
        }
    }

    /// The edge with an endpoint at `node`.
    pub fn edge_at(&self, node: NodeRef) -> Option<usize> {
        self.edges.iter().position(|e| e.touches(node))
    }

    /// Number of north–north edges.
    pub fn a_value(&self) -> usize {
        self.edges
            .iter()
            .filter(|e| e.a.face == Face::North && e.b.face == Face::North)
            .count()
    }

    /// Structural checks: every node used exactly once, endpoints distinct
    /// and in range, blocks non-empty, edges sorted, block order present
    /// exactly when a = 1 and listing every propagating block once.
    pub fn check_structure(&self) -> Result<()> {
        let w = self.width();
        let bad = |why: String| Err(Error::MalformedDiagram(why));
        let mut seen = BTreeMap::new();
        for (k, e) in self.edges.iter().enumerate() {
            if e.a >= e.b {
                return bad(format!("edge {k} endpoints not increasing"));
            }
            for node in [e.a, e.b] {
                if node.index == 0 || node.index > w {
                    return bad(format!("node {node} out of range"));
                }
                if seen.insert(node, k).is_some() {
                    return bad(format!("node {node} used twice"));
                }
            }
            if e.blocks.iter().any(|b| b.is_empty()) {
                return bad(format!("edge {k} has an empty block"));
            }
        }
        if seen.len() != 2 * w {
            return bad(format!("{} of {} nodes matched", seen.len(), 2 * w));
        }
        if self.edges.windows(2).any(|p| p[0].a >= p[1].a) {
            return bad("edges not sorted".into());
        }
        let expected: usize = self
            .edges
            .iter()
            .filter(|e| e.is_propagating())
            .map(|e| e.blocks.len())
            .sum();
        match (&self.block_order, self.a_value() == 1) {
            (Some(order), true) => {
                let mut listed: Vec<(usize, usize)> = order.clone();
                listed.sort_unstable();
                listed.dedup();
                let valid = listed.len() == order.len()
                    && order.len() == expected
                    && order.iter().all(|&(e, b)| {
                        e < self.edges.len()
                            && self.edges[e].is_propagating()
                            && b < self.edges[e].blocks.len()
                    });
                if !valid {
                    return bad("block order does not list each propagating block once".into());
                }
                for k in 0..self.edges.len() {
                    let pos: Vec<usize> = order.iter().filter(|x| x.0 == k).map(|x| x.1).collect();
                    if pos.windows(2).any(|p| p[0] > p[1]) {
                        return bad(format!("block order reverses blocks of edge {k}"));
                    }
                }
            }
            (None, false) => {}
            (Some(_), false) => return bad("block order given but a-value is not 1".into()),
            (None, true) => return bad("a-value 1 diagram needs a block order".into()),
        }
        Ok(())
    }
}

/// A diagram that has passed admissibility validation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdmissibleDiagram(RawDiagram);

impl AdmissibleDiagram {
    /// Validates a raw diagram.
    pub fn new(raw: RawDiagram) -> Result<AdmissibleDiagram> {
        raw.check_structure()?;
        let violations = validate_admissible(&raw)?;
        if violations.is_empty() {
            Ok(AdmissibleDiagram(raw))
        } else {
            let list: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
            Err(Error::Inadmissible(list.join("; ")))
        }
    }

    /// Wraps a diagram already known to be admissible (checked in debug
    /// builds).
    pub(crate) fn trusted(raw: RawDiagram) -> AdmissibleDiagram {
        #[cfg(debug_assertions)]
        {
            raw.check_structure().expect("well-formed diagram");
            let v = validate_admissible(&raw).expect("well-formed diagram");
            assert!(
                v.is_empty(),
                "closure violated: {v:?}\n{}",
                print_diagram(&raw)
            );
        }
        AdmissibleDiagram(raw)
    }

    pub fn raw(&self) -> &RawDiagram {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.n
    }

    pub fn a_value(&self) -> usize {
        self.0.a_value()
    }
}

impl fmt::Display for AdmissibleDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_diagram(&self.0))
    }
}

/// 2^two_exp · δ^delta_exp · diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagramResult {
    pub two_exp: u32,
    pub delta_exp: u32,
    pub diagram: AdmissibleDiagram,
}

impl DiagramResult {
    pub fn unscaled(diagram: AdmissibleDiagram) -> DiagramResult {
        DiagramResult {
            two_exp: 0,
            delta_exp: 0,
            diagram,
        }
    }
}

/// A ℤ[δ]-linear combination of admissible diagrams.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DiagramElement {
    terms: BTreeMap<AdmissibleDiagram, DeltaPoly>,
}

impl DiagramElement {
    pub fn terms(&self) -> &BTreeMap<AdmissibleDiagram, DeltaPoly> {
        &self.terms
    }

    pub fn add_term(&mut self, d: AdmissibleDiagram, c: &DeltaPoly) {
        let slot = self.terms.entry(d.clone()).or_default();
        *slot = &*slot + c;
        if slot.is_zero() {
            self.terms.remove(&d);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

fn check_graph(graph: &CoxeterGraph) -> Result<()> {
    if graph.kind() == GraphKind::A {
        return Err(Error::Unsupported("diagrams for type A graphs".into()));
    }
    Ok(())
}

/// The diagram with only vertical undecorated edges.
pub fn identity_diagram(graph: &CoxeterGraph) -> Result<AdmissibleDiagram> {
    check_graph(graph)?;
    Ok(AdmissibleDiagram::trusted(identity_raw(graph.n())))
}

pub(crate) fn identity_raw(n: usize) -> RawDiagram {
    RawDiagram {
        n,
        edges: (1..=n + 2)
            .map(|j| DiagramEdge::new(NodeRef::north(j), NodeRef::south(j), Vec::new()))
            .collect(),
        loops: 0,
        block_order: None,
    }
}

/// The decoration carried by the cup and cap of d_i: • for i = 1, ○ for
/// i = n+1, nothing otherwise.
pub(crate) fn simple_decoration(n: usize, i: usize) -> Option<Decoration> {
    if i == 1 {
        Some(Decoration::ClosedDot)
    } else if i == n + 1 {
        Some(Decoration::OpenDot)
    } else {
        None
    }
}

pub(crate) fn simple_raw(n: usize, i: usize) -> RawDiagram {
    let blocks: Vec<DecoWord> = simple_decoration(n, i)
        .map(|d| vec![d])
        .into_iter()
        .collect();
    let mut edges = vec![
        DiagramEdge::new(NodeRef::north(i), NodeRef::north(i + 1), blocks.clone()),
        DiagramEdge::new(NodeRef::south(i), NodeRef::south(i + 1), blocks),
    ];
    for j in (1..=n + 2).filter(|&j| j != i && j != i + 1) {
        edges.push(DiagramEdge::new(
            NodeRef::north(j),
            NodeRef::south(j),
            Vec::new(),
        ));
    }
    let mut raw = RawDiagram {
        n,
        edges,
        loops: 0,
        block_order: Some(Vec::new()),
    };
    raw.canonicalize();
    raw
}

/// The simple diagram d_i.
pub fn simple_diagram(graph: &CoxeterGraph, i: usize) -> Result<AdmissibleDiagram> {
    check_graph(graph)?;
    graph.check_generator(i)?;
    Ok(AdmissibleDiagram::trusted(simple_raw(graph.n(), i)))
}

/// a(d): the number of north–north edges.
pub fn a_value(d: &AdmissibleDiagram) -> usize {
    d.a_value()
}

/// Indices i such that the edge joining columns i and i+1 on the given face
/// is simple: present and decorated exactly as in d_i.
pub fn simple_edges(d: &RawDiagram, face: Face) -> Vec<usize> {
    let node = |i| NodeRef { face, index: i };
    (1..=d.n + 1)
        .filter(|&i| {
            let expected: Vec<DecoWord> = simple_decoration(d.n, i)
                .map(|c| vec![c])
                .into_iter()
                .collect();
            d.edges
                .iter()
                .any(|e| e.a == node(i) && e.b == node(i + 1) && e.blocks == expected)
        })
        .collect()
}

/// r(d), the undecorated loop-free shape, and h(d), the number of
/// decorations plus the number of loops (each stored loop carries ▲△).
pub fn shape_and_stat(d: &AdmissibleDiagram) -> (RawDiagram, usize) {
    let raw = d.raw();
    let decorations: usize = raw.edges.iter().map(|e| e.symbols().len()).sum();
    let h = decorations + 3 * raw.loops as usize;
    let mut shape = raw.clone();
    for e in &mut shape.edges {
        e.blocks.clear();
    }
    shape.loops = 0;
    shape.block_order = if shape.a_value() == 1 {
        Some(Vec::new())
    } else {
        None
    };
    (shape, h)
}

#[cfg(test)]
mod tests;
