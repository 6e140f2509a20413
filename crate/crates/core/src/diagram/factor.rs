//! Factorization of admissible diagrams into simple diagrams.
//!
//! Diagrams with a-value 1 are matched against the images of the
//! zigzag-shaped (type I) elements, which are exactly the a-value-1
//! monomials. Larger a-values are peeled from the top: a simple north edge
//! at (i, i+1) means d = d_i · d′, and the candidates for d′ are obtained by
//! cutting the edge that runs through the cap of d_i, or by opening one of
//! the stored loops into an arc. Every candidate is verified by stacking
//! d_i back on top, so a returned word always reproduces the diagram.

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap};

use super::stack::stack;
use super::{
    identity_raw, shape_and_stat, simple_decoration, simple_edges, simple_raw, validate_admissible,
    AdmissibleDiagram, DiagramEdge, Face, NodeRef, RawDiagram,
};
use crate::coxeter::CoxeterGraph;
use crate::error::{Error, Result};
use crate::heap::type_i_elements;
use crate::verlinde::{is_alternating, DecoWord, Decoration};

/// Maximum number of diagrams expanded by one factorization.
const NODE_LIMIT: usize = 200_000;

/// Images of the type I elements, keyed by diagram, with one word each.
type ImageTable = HashMap<RawDiagram, Vec<usize>>;

thread_local! {
    /// Per rank: the largest length enumerated and the table up to that length.
    static TYPE_I: RefCell<HashMap<usize, (usize, ImageTable)>> = RefCell::new(HashMap::new());
}

fn length_bound(d: &RawDiagram) -> usize {
    let h = shape_and_stat(&AdmissibleDiagram(d.clone())).1;
    (h + 2) * (d.n + 1) + d.n + 1
}

/// Runs `f` on the table of type I images up to `max_len`.
fn with_type_i<T>(n: usize, max_len: usize, f: impl FnOnce(&ImageTable) -> T) -> Result<T> {
    TYPE_I.with(|cell| {
        let mut cache = cell.borrow_mut();
        let stale = cache.get(&n).is_none_or(|(len, _)| *len < max_len);
        if stale {
            let graph = CoxeterGraph::affine(n)?;
            let mut table = HashMap::new();
            for e in type_i_elements(&graph, max_len) {
                let word = e.word();
                let r = super::from_generator_word(&graph, &word)?;
                if r.two_exp != 0 || r.delta_exp != 0 {
                    return Err(Error::InvariantViolation(format!(
                        "type I monomial {word:?} picked up a scalar"
                    )));
                }
                table.entry(r.diagram.0).or_insert(word);
            }
            cache.insert(n, (max_len, table));
        }
        Ok(f(&cache[&n].1))
    })
}

/// A word g with d_{g1} ⋯ d_{gr} = d exactly (no scalar).
pub fn factor_into_simples(d: &AdmissibleDiagram) -> Result<Vec<usize>> {
    let mut search = Search {
        visited: BTreeSet::new(),
        expanded: 0,
    };
    search
        .solve(d.raw())?
        .ok_or_else(|| Error::Inadmissible("diagram is not a product of simple diagrams".into()))
}

struct Search {
    visited: BTreeSet<RawDiagram>,
    expanded: usize,
}

impl Search {
    fn solve(&mut self, d: &RawDiagram) -> Result<Option<Vec<usize>>> {
        match d.a_value() {
            0 => return Ok((*d == identity_raw(d.n)).then(Vec::new)),
            1 => return with_type_i(d.n, length_bound(d), |t| t.get(d).cloned()),
            _ => {}
        }
        if !self.visited.insert(d.clone()) {
            return Ok(None);
        }
        self.expanded += 1;
        if self.expanded > NODE_LIMIT {
            return Err(Error::SearchLimit(format!(
                "factorization expanded {NODE_LIMIT} diagrams"
            )));
        }
        for i in simple_edges(d, Face::North) {
            let mut found: Vec<(usize, RawDiagram)> = predecessors(d, i)
                .into_iter()
                .filter(|p| verifies(d, i, p))
                .map(|p| (measure(&p), p))
                .collect();
            found.sort();
            for (_, p) in found {
                if let Some(mut word) = self.solve(&p)? {
                    word.insert(0, i);
                    return Ok(Some(word));
                }
            }
            if d.a_value() == 2 {
                let bound = length_bound(d);
                let hits: Vec<Vec<usize>> = with_type_i(d.n, bound, |t| {
                    let s = simple_raw(d.n, i);
                    t.iter()
                        .filter(|(img, _)| matches!(stack(&s, img), Ok((0, 0, ref r)) if r == d))
                        .map(|(_, w)| w.clone())
                        .collect()
                })?;
                if let Some(word) = hits.into_iter().min() {
                    let mut out = vec![i];
                    out.extend(word);
                    return Ok(Some(out));
                }
            }
        }
        Ok(None)
    }
}

/// Size measure used to try smaller predecessors first.
fn measure(d: &RawDiagram) -> usize {
    let spans: usize = d.edges.iter().map(|e| e.a.index.abs_diff(e.b.index)).sum();
    let decorations: usize = d.edges.iter().map(|e| e.symbols().len()).sum();
    spans + 2 * decorations + 10 * d.loops as usize
}

fn verifies(d: &RawDiagram, i: usize, p: &RawDiagram) -> bool {
    if p.check_structure().is_err() || !matches!(validate_admissible(p), Ok(v) if v.is_empty()) {
        return false;
    }
    matches!(stack(&simple_raw(d.n, i), p), Ok((0, 0, ref r)) if r == d)
}

fn blocks_of(word: DecoWord) -> Vec<DecoWord> {
    if word.is_empty() {
        Vec::new()
    } else {
        vec![word]
    }
}

/// Ways to write `w` as w1 · c · w2 with w1, w2 normal.
fn splits(w: &[Decoration], c: Option<Decoration>) -> Vec<(DecoWord, DecoWord)> {
    let mut out = Vec::new();
    match c {
        None => {
            for p in 0..=w.len() {
                out.push((w[..p].to_vec(), w[p..].to_vec()));
            }
        }
        Some(dot) => {
            let tri = Decoration::tri(dot.family());
            for (p, &s) in w.iter().enumerate() {
                if s == dot {
                    out.push((w[..p].to_vec(), w[p + 1..].to_vec()));
                } else if s == tri {
                    let mut left = w[..p].to_vec();
                    left.push(dot);
                    out.push((left, w[p + 1..].to_vec()));
                    let mut right = vec![dot];
                    right.extend_from_slice(&w[p + 1..]);
                    out.push((w[..p].to_vec(), right));
                }
            }
        }
    }
    out.retain(|(a, b)| is_alternating(a) && is_alternating(b));
    out
}

/// All normal decoration words of length at most 3.
fn short_words() -> Vec<DecoWord> {
    let symbols = [
        Decoration::ClosedDot,
        Decoration::ClosedTri,
        Decoration::OpenDot,
        Decoration::OpenTri,
    ];
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..3 {
        let mut next = Vec::new();
        for w in &frontier {
            for &s in &symbols {
                let mut x: DecoWord = w.clone();
                x.push(s);
                if is_alternating(&x) {
                    next.push(x);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Candidate diagrams d′ with d_i · d′ possibly equal to d (unverified).
fn predecessors(d: &RawDiagram, i: usize) -> Vec<RawDiagram> {
    let (ni, nj) = (NodeRef::north(i), NodeRef::north(i + 1));
    let Some(simple) = d.edges.iter().position(|e| e.a == ni && e.b == nj) else {
        return Vec::new();
    };
    let rest: Vec<DiagramEdge> = d
        .edges
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != simple)
        .map(|(_, e)| e.clone())
        .collect();
    let c = simple_decoration(d.n, i);
    let mut out = Vec::new();
    let mut emit = |edges: Vec<DiagramEdge>, loops: u32| {
        let mut raw = RawDiagram {
            n: d.n,
            edges,
            loops,
            block_order: None,
        };
        raw.canonicalize();
        if raw.a_value() >= 2 {
            out.push(raw);
        }
    };
    for (k, e) in rest.iter().enumerate() {
        let others: Vec<DiagramEdge> = rest
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, x)| x.clone())
            .collect();
        for (w1, w2) in splits(&e.symbols(), c) {
            for (p, q) in [(ni, nj), (nj, ni)] {
                let mut edges = others.clone();
                edges.push(DiagramEdge::new(e.a, p, blocks_of(w1.clone())));
                edges.push(DiagramEdge::new(q, e.b, blocks_of(w2.clone())));
                emit(edges, d.loops);
            }
        }
    }
    if d.loops > 0 {
        for u in short_words() {
            let mut edges = rest.clone();
            edges.push(DiagramEdge::new(ni, nj, blocks_of(u)));
            emit(edges, d.loops - 1);
        }
    }
    out
}
