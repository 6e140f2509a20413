//! Admissibility checks: planarity, LR-exposure, the loop rule, the end
//! conditions for undammed, single-edge, dammed and a-value-1 diagrams, and
//! the vertical block order.

use std::fmt;

use super::{DiagramEdge, Face, NodeRef, RawDiagram};
use crate::error::Result;
use crate::verlinde::{is_alternating, DecoWord, Decoration, Family};

use Decoration::{ClosedDot, ClosedTri, OpenDot, OpenTri};

/// The rule a violation breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    NonCrossing,
    Normal,
    Loops,
    LeftRight,
    Undammed,
    SingleEdge,
    Dammed,
    ValueOne,
    BlockOrder,
    Identity,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::NonCrossing => "non-crossing",
            Rule::Normal => "normal blocks",
            Rule::Loops => "C1",
            Rule::LeftRight => "LR",
            Rule::Undammed => "C2",
            Rule::SingleEdge => "C3",
            Rule::Dammed => "C4",
            Rule::ValueOne => "C5",
            Rule::BlockOrder => "block order",
            Rule::Identity => "a-value 0",
        })
    }
}

/// One failed admissibility condition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Violation {
    pub rule: Rule,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.rule, self.detail)
    }
}

struct Report(Vec<Violation>);

impl Report {
    fn fail(&mut self, rule: Rule, detail: impl Into<String>) {
        self.0.push(Violation {
            rule,
            detail: detail.into(),
        });
    }
}

/// Checks a structurally well-formed diagram against the admissibility
/// axioms. Returns the (possibly empty) list of violations; malformed
/// matchings are reported as errors instead.
pub fn validate_admissible(d: &RawDiagram) -> Result<Vec<Violation>> {
    d.check_structure()?;
    let mut r = Report(Vec::new());
    check_non_crossing(d, &mut r);
    check_normal(d, &mut r);
    let a = d.a_value();
    let props = d.edges.iter().filter(|e| e.is_propagating()).count();
    let undammed = props == 0;
    if d.loops > 0 && !undammed {
        r.fail(
            Rule::Loops,
            format!("{} loops on a dammed diagram", d.loops),
        );
    }
    if a == 0 {
        if d.edges.iter().any(|e| e.is_decorated()) || d.loops > 0 {
            r.fail(
                Rule::Identity,
                "a-value 0 diagram must be undecorated and loop-free",
            );
        }
        return Ok(r.0);
    }
    check_left_right(d, undammed, &mut r);
    if undammed {
        check_undammed(d, &mut r);
    } else if props == 1 {
        check_single_edge(d, &mut r);
    } else if a > 1 {
        check_dammed(d, &mut r);
    } else {
        check_value_one(d, &mut r);
    }
    Ok(r.0)
}

fn chord(e: &DiagramEdge, width: usize) -> (usize, usize) {
    let (p, q) = (e.a.circle_pos(width), e.b.circle_pos(width));
    (p.min(q), p.max(q))
}

fn check_non_crossing(d: &RawDiagram, r: &mut Report) {
    let w = d.width();
    let chords: Vec<_> = d.edges.iter().map(|e| chord(e, w)).collect();
    for (x, &(p1, q1)) in chords.iter().enumerate() {
        for &(p2, q2) in &chords[x + 1..] {
            if (p1 < p2 && p2 < q1 && q1 < q2) || (p2 < p1 && p1 < q2 && q2 < q1) {
                r.fail(
                    Rule::NonCrossing,
                    format!("chords {p1}-{q1} and {p2}-{q2} cross"),
                );
            }
        }
    }
}

fn check_normal(d: &RawDiagram, r: &mut Report) {
    let a1 = d.a_value() == 1;
    for e in &d.edges {
        if e.blocks.iter().any(|b| !is_alternating(b)) {
            r.fail(Rule::Normal, format!("edge {} has a reducible block", e.a));
        }
        if e.blocks.len() > 1 && !(a1 && e.is_propagating()) {
            r.fail(Rule::Normal, format!("edge {} has unconjoined blocks", e.a));
        }
    }
}

/// An edge is exposed to a wall when no other chord separates it from that
/// wall. The left wall sits between 1′ and 1 on the boundary circle; the
/// right wall between N and N′.
fn exposed(d: &RawDiagram, k: usize, right: bool) -> bool {
    let w = d.width();
    let shift = |p: usize| if right { (p + w) % (2 * w) } else { p };
    let pos = |e: &DiagramEdge| {
        let (p, q) = (shift(e.a.circle_pos(w)), shift(e.b.circle_pos(w)));
        (p.min(q), p.max(q))
    };
    let (p, q) = pos(&d.edges[k]);
    d.edges.iter().enumerate().all(|(j, e)| {
        let (x, y) = pos(e);
        j == k || !(x < p && q < y)
    })
}

pub(crate) fn is_left_exposed(d: &RawDiagram, k: usize) -> bool {
    exposed(d, k, false)
}

pub(crate) fn is_right_exposed(d: &RawDiagram, k: usize) -> bool {
    exposed(d, k, true)
}

fn has_family(word: &[Decoration], f: Family) -> bool {
    word.iter().any(|s| s.family() == f)
}

fn check_left_right(d: &RawDiagram, undammed: bool, r: &mut Report) {
    let props = d.edges.iter().filter(|e| e.is_propagating()).count();
    for (k, e) in d.edges.iter().enumerate() {
        let syms = e.symbols();
        let closed = has_family(&syms, Family::Closed);
        let open = has_family(&syms, Family::Open);
        if closed && !is_left_exposed(d, k) {
            r.fail(
                Rule::LeftRight,
                format!(
                    "closed decoration on {}-{} away from the left wall",
                    e.a, e.b
                ),
            );
        }
        if open && !is_right_exposed(d, k) {
            r.fail(
                Rule::LeftRight,
                format!(
                    "open decoration on {}-{} away from the right wall",
                    e.a, e.b
                ),
            );
        }
        if closed && open {
            if undammed {
                let first_open = syms
                    .iter()
                    .position(|s| s.family() == Family::Open)
                    .unwrap_or(0);
                if syms[first_open..]
                    .iter()
                    .any(|s| s.family() == Family::Closed)
                {
                    r.fail(
                        Rule::LeftRight,
                        format!("open before closed on {}-{}", e.a, e.b),
                    );
                }
            } else if !(e.is_propagating() && props == 1) {
                r.fail(
                    Rule::LeftRight,
                    format!("both families on {}-{} of a dammed diagram", e.a, e.b),
                );
            }
        }
    }
    if undammed {
        for face in [Face::North, Face::South] {
            let mut seen_open = false;
            for e in d.edges.iter().filter(|e| e.a.face == face) {
                let syms = e.symbols();
                if seen_open && has_family(&syms, Family::Closed) {
                    r.fail(
                        Rule::LeftRight,
                        format!("closed decoration right of an open one on the {face:?} face"),
                    );
                }
                seen_open |= has_family(&syms, Family::Open);
            }
        }
    }
}

fn count(d: &RawDiagram, sym: Decoration) -> usize {
    d.edges
        .iter()
        .map(|e| e.symbols().iter().filter(|&&s| s == sym).count())
        .sum()
}

fn edge_at(d: &RawDiagram, node: NodeRef) -> &DiagramEdge {
    &d.edges[d.edge_at(node).expect("perfect matching")]
}

fn check_undammed(d: &RawDiagram, r: &mut Report) {
    let w = d.width();
    for (family, index, first) in [(Family::Closed, 1, true), (Family::Open, w, false)] {
        let dot = Decoration::dot(family);
        let mut expected = 0;
        let north = edge_at(d, NodeRef::north(index));
        let south = edge_at(d, NodeRef::south(index));
        for e in [north, south] {
            let syms = e.symbols();
            let end = if first { syms.first() } else { syms.last() };
            if end != Some(&dot) {
                r.fail(
                    Rule::Undammed,
                    format!(
                        "edge {}-{} must carry {} at its end",
                        e.a,
                        e.b,
                        dot.unicode()
                    ),
                );
            }
        }
        expected += 1 + usize::from(north != south);
        if count(d, dot) != expected {
            r.fail(
                Rule::Undammed,
                format!("unexpected {} decorations", dot.unicode()),
            );
        }
    }
}

fn check_single_edge(d: &RawDiagram, r: &mut Report) {
    let w = d.width();
    let e = d
        .edges
        .iter()
        .find(|e| e.is_propagating())
        .expect("one propagating edge");
    let syms = e.symbols();
    let (top, bottom) = (e.a.index, e.b.index);
    let last = syms.len().saturating_sub(1);
    for (p, &s) in syms.iter().enumerate() {
        let ok = match s {
            ClosedTri | OpenTri => true,
            ClosedDot => (p == 0 && top == 1) || (p == last && bottom == 1),
            OpenDot => (p == 0 && top == w) || (p == last && bottom == w),
        };
        if !ok {
            r.fail(
                Rule::SingleEdge,
                format!("misplaced {} on the propagating edge", s.unicode()),
            );
        }
    }
    let both = has_family(&syms, Family::Closed) && has_family(&syms, Family::Open);
    if both {
        for (cond, end, sym) in [
            (top == 1, syms.first(), ClosedDot),
            (bottom == 1, syms.last(), ClosedDot),
            (top == w, syms.first(), OpenDot),
            (bottom == w, syms.last(), OpenDot),
        ] {
            if cond && end != Some(&sym) {
                r.fail(
                    Rule::SingleEdge,
                    format!("propagating edge must end in {}", sym.unicode()),
                );
            }
        }
    }
    if syms.len() == 1 {
        if top == 1 && bottom == 1 && syms[0] != ClosedTri {
            r.fail(Rule::SingleEdge, "a lone decoration on 1-1′ must be ▲");
        }
        if top == w && bottom == w && syms[0] != OpenTri {
            r.fail(Rule::SingleEdge, "a lone decoration on N-N′ must be △");
        }
    }
    let mut dots = [0usize; 2];
    for s in &syms {
        match s {
            ClosedDot => dots[0] += 1,
            OpenDot => dots[1] += 1,
            _ => {}
        }
    }
    for arc in d.edges.iter().filter(|x| !x.is_propagating()) {
        let west = arc.a.index == 1 || arc.b.index == 1;
        let east = arc.a.index == w || arc.b.index == w;
        let syms = arc.symbols();
        if west && syms != [ClosedDot] {
            r.fail(
                Rule::SingleEdge,
                format!("arc {}-{} must carry a single •", arc.a, arc.b),
            );
        }
        if east && syms != [OpenDot] {
            r.fail(
                Rule::SingleEdge,
                format!("arc {}-{} must carry a single ○", arc.a, arc.b),
            );
        }
        if west {
            dots[0] += 1;
        }
        if east {
            dots[1] += 1;
        }
    }
    if count(d, ClosedDot) != dots[0] || count(d, OpenDot) != dots[1] {
        r.fail(Rule::SingleEdge, "• or ○ away from the ends");
    }
}

fn check_dammed(d: &RawDiagram, r: &mut Report) {
    let w = d.width();
    for (index, tri, dot) in [(1, ClosedTri, ClosedDot), (w, OpenTri, OpenDot)] {
        let north = edge_at(d, NodeRef::north(index));
        let south = edge_at(d, NodeRef::south(index));
        let expected = if north == south {
            let syms = north.symbols();
            if !(syms.is_empty() || syms == [tri]) {
                r.fail(
                    Rule::Dammed,
                    format!(
                        "edge {}-{} must be bare or carry a single {}",
                        north.a,
                        north.b,
                        tri.unicode()
                    ),
                );
            }
            0
        } else {
            for e in [north, south] {
                if e.symbols() != [dot] {
                    r.fail(
                        Rule::Dammed,
                        format!("edge {}-{} must carry a single {}", e.a, e.b, dot.unicode()),
                    );
                }
            }
            2
        };
        if count(d, dot) != expected {
            r.fail(
                Rule::Dammed,
                format!("unexpected {} decorations", dot.unicode()),
            );
        }
    }
}

/// Reflects the diagram left to right, swapping the decoration families.
fn mirror(d: &RawDiagram) -> RawDiagram {
    let w = d.width();
    let flip = |x: NodeRef| NodeRef {
        face: x.face,
        index: w + 1 - x.index,
    };
    let swap = |s: &Decoration| match s {
        ClosedDot => OpenDot,
        ClosedTri => OpenTri,
        OpenDot => ClosedDot,
        OpenTri => ClosedTri,
    };
    let mut out = RawDiagram {
        n: d.n,
        edges: d
            .edges
            .iter()
            .map(|e| {
                let blocks: Vec<DecoWord> = e
                    .blocks
                    .iter()
                    .map(|b| b.iter().map(swap).collect())
                    .collect();
                if e.is_propagating() {
                    DiagramEdge {
                        a: flip(e.a),
                        b: flip(e.b),
                        blocks,
                    }
                } else {
                    DiagramEdge::new(flip(e.a), flip(e.b), blocks)
                }
            })
            .collect(),
        loops: d.loops,
        block_order: d.block_order.clone(),
    };
    out.canonicalize();
    out
}

fn check_value_one(d: &RawDiagram, r: &mut Report) {
    check_block_order(d, r);
    if let Err(why) = west_end(d) {
        r.fail(Rule::ValueOne, format!("west end: {why}"));
    }
    if let Err(why) = west_end(&mirror(d)) {
        r.fail(Rule::ValueOne, format!("east end: {why}"));
    }
}

fn check_block_order(d: &RawDiagram, r: &mut Report) {
    let order = d.block_order.as_deref().unwrap_or(&[]);
    if order.windows(2).any(|p| p[0].0 == p[1].0) {
        r.fail(
            Rule::BlockOrder,
            "adjacent blocks of one edge are not conjoined",
        );
    }
}

fn all_tri(blocks: &[DecoWord]) -> bool {
    blocks.iter().all(|b| b == &[ClosedTri])
}

/// Matches the western end of an a-value-1 diagram against the five
/// permitted configurations and checks that no other • occurs.
fn west_end(d: &RawDiagram) -> std::result::Result<(), String> {
    let order = d.block_order.as_deref().unwrap_or(&[]);
    let n1 = d.edge_at(NodeRef::north(1)).expect("matched");
    let s1 = d.edge_at(NodeRef::south(1)).expect("matched");
    let e1 = &d.edges[n1];
    let e1s = &d.edges[s1];
    let dot_arc = |e: &DiagramEdge| !e.is_propagating() && e.symbols() == [ClosedDot];
    let topmost = |k: usize| order.first() == Some(&(k, 0));
    let bottommost = |k: usize, b: usize| order.last() == Some(&(k, b));
    let dots;
    if n1 == s1 {
        // (i) a vertical edge at the wall carrying only ▲ blocks.
        if !all_tri(&e1.blocks) {
            return Err("edge 1-1′ must carry only ▲ blocks".into());
        }
        dots = 0;
    } else if !e1.is_propagating() && !e1s.is_propagating() {
        if !(dot_arc(e1) && dot_arc(e1s) && e1.b == NodeRef::north(2) && e1s.b == NodeRef::south(2))
        {
            return Err("arcs at 1 and 1′ must be simple •-arcs".into());
        }
        let k = d.edge_at(NodeRef::north(3)).expect("matched");
        let wedge = &d.edges[k];
        if wedge.b != NodeRef::south(3) {
            return Err("edge at 3 must end at 3′".into());
        }
        let b = &wedge.blocks;
        let no_open = d
            .edges
            .iter()
            .all(|e| !has_family(&e.symbols(), Family::Open));
        if b.len() <= 1 && all_tri(b) {
            // (ii) only possible without open decorations.
            if !no_open {
                return Err("bare end pattern with open decorations present".into());
            }
            dots = 2;
        } else if b.len() >= 2
            && b[0] == [ClosedDot]
            && b[b.len() - 1] == [ClosedDot]
            && all_tri(&b[1..b.len() - 1])
            && topmost(k)
            && bottommost(k, b.len() - 1)
        {
            // (iii); the ▲ run may be empty when an open block separates
            // the two • blocks.
            dots = 4;
        } else {
            return Err("edge 3-3′ has an unexpected decoration pattern".into());
        }
    } else if !e1.is_propagating() {
        // (iv) cup at 1–2, the edge from 3 runs to 1′.
        if !(dot_arc(e1) && e1.b == NodeRef::north(2)) {
            return Err("arc at 1 must be a simple •-arc".into());
        }
        if e1s.a != NodeRef::north(3) {
            return Err("edge at 1′ must start at 3".into());
        }
        let b = &e1s.blocks;
        if b.is_empty() || b[0] != [ClosedDot] || !all_tri(&b[1..]) || !topmost(s1) {
            return Err("edge 3-1′ must carry a topmost • then ▲ blocks".into());
        }
        dots = 2;
    } else {
        // (v) cap at 1′–2′, the edge from 1 runs to 3′.
        if !(dot_arc(e1s) && e1s.b == NodeRef::south(2)) {
            return Err("arc at 1′ must be a simple •-arc".into());
        }
        if e1.b != NodeRef::south(3) {
            return Err("edge at 1 must end at 3′".into());
        }
        let b = &e1.blocks;
        let last = b.len().wrapping_sub(1);
        if b.is_empty() || b[last] != [ClosedDot] || !all_tri(&b[..last]) || !bottommost(n1, last) {
            return Err("edge 1-3′ must carry ▲ blocks then a bottommost •".into());
        }
        dots = 2;
    }
    if count(d, ClosedDot) != dots {
        return Err("unexpected • decorations".into());
    }
    Ok(())
}

#[cfg(test)]
pub(crate) fn mirror_for_tests(d: &RawDiagram) -> RawDiagram {
    mirror(d)
}
