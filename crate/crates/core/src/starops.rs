//! Star and weak star reductions of fully commutative elements,
//! irreducibility, deterministic reduction traces, and generators for the
//! classified sets of irreducible elements in types B, B′ and affine C.

use std::collections::BTreeSet;
use std::fmt;

use crate::coxeter::{canonical_unchecked, CoxeterGraph, FcElement, GraphKind, Side};
use crate::error::{Error, Result};
use crate::heap::{
    make_type_i, make_type_ii, TypeIDescriptor, TypeIFamily, TypeIIDescriptor, TypeIIForm,
};

/// A (weak) star operation: remove `s` from the given side of w, with `t`
/// the non-commuting witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StarMove {
    pub side: Side,
    pub s: usize,
    pub t: usize,
    pub weak: bool,
}

impl fmt::Display for StarMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = match self.side {
            Side::Left => "L",
            Side::Right => "R",
        };
        let kind = if self.weak { "weak" } else { "star" };
        write!(f, "{side} s={} t={} {kind}", self.s, self.t)
    }
}

impl std::str::FromStr for StarMove {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("star move '{text}'"));
        let parts: Vec<&str> = text.split_whitespace().collect();
        let [side, s, t, kind] = parts.as_slice() else {
            return Err(bad());
        };
        let side = match *side {
            "L" => Side::Left,
            "R" => Side::Right,
            _ => return Err(bad()),
        };
        let num = |p: &str, key: &str| -> Result<usize> {
            p.strip_prefix(key)
                .and_then(|v| v.parse().ok())
                .ok_or_else(bad)
        };
        let weak = match *kind {
            "weak" => true,
            "star" => false,
            _ => return Err(bad()),
        };
        Ok(StarMove {
            side,
            s: num(s, "s=")?,
            t: num(t, "t=")?,
            weak,
        })
    }
}

/// A sequence of weak star reductions from `start` to `end`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub start: FcElement,
    pub moves: Vec<StarMove>,
    pub end: FcElement,
}

impl ReductionTrace {
    /// Replays the moves from `start`, checking each is defined and that the
    /// result is `end`.
    pub fn replay(&self) -> Result<FcElement> {
        let mut cur = self.start.clone();
        for m in &self.moves {
            cur = apply_weak_star(&cur, m)
                .ok_or_else(|| Error::InvariantViolation(format!("move {m} undefined on {cur}")))?;
        }
        if cur != self.end {
            return Err(Error::InvariantViolation(format!(
                "trace ends at {cur}, not {}",
                self.end
            )));
        }
        Ok(cur)
    }

    /// One move per line.
    pub fn to_text(&self) -> String {
        self.moves.iter().map(|m| format!("{m}\n")).collect()
    }
}

fn remove(e: &FcElement, side: Side, s: usize) -> Option<FcElement> {
    match side {
        Side::Left => e.left_remove(s),
        Side::Right => e.right_remove(s),
    }
}

fn valid_pair(e: &FcElement, m: &StarMove) -> bool {
    let g = e.graph();
    g.is_generator(m.s) && g.is_generator(m.t) && g.bond(m.s, m.t) >= 3
}

/// Weak star reduction: defined when w = s t v (bond 3) or w = s t s v
/// (bond 4) as reduced products on the given side, returning the element
/// with that leading s removed.
pub fn apply_weak_star(e: &FcElement, m: &StarMove) -> Option<FcElement> {
    if !m.weak || !valid_pair(e, m) {
        return None;
    }
    let sw = remove(e, m.side, m.s)?;
    let tsw = remove(&sw, m.side, m.t)?;
    if e.graph().bond(m.s, m.t) == 4 {
        remove(&tsw, m.side, m.s)?;
    }
    Some(sw)
}

/// Star reduction: defined when s is a descent of w and t is a descent
/// of sw (on the same side), returning sw.
pub fn apply_star(e: &FcElement, m: &StarMove) -> Option<FcElement> {
    if m.weak || !valid_pair(e, m) {
        return None;
    }
    let sw = remove(e, m.side, m.s)?;
    remove(&sw, m.side, m.t)?;
    Some(sw)
}

/// All candidate weak moves in the deterministic order: Left before Right,
/// then by s, then by t.
pub fn candidate_moves(graph: &CoxeterGraph) -> Vec<StarMove> {
    let mut moves = Vec::new();
    for side in [Side::Left, Side::Right] {
        for s in graph.generators() {
            for t in graph.generators() {
                if graph.bond(s, t) >= 3 && s != t {
                    moves.push(StarMove {
                        side,
                        s,
                        t,
                        weak: true,
                    });
                }
            }
        }
    }
    moves
}

/// True when no weak star reduction applies on either side.
pub fn is_irreducible(e: &FcElement) -> bool {
    candidate_moves(&e.graph())
        .iter()
        .all(|m| apply_weak_star(e, m).is_none())
}

/// Repeatedly applies the least defined weak move until none applies.
pub fn reduce_to_irreducible(e: &FcElement) -> ReductionTrace {
    let moves_all = candidate_moves(&e.graph());
    let mut cur = e.clone();
    let mut moves = Vec::new();
    'outer: loop {
        for m in &moves_all {
            if let Some(next) = apply_weak_star(&cur, m) {
                moves.push(*m);
                cur = next;
                continue 'outer;
            }
        }
        break;
    }
    ReductionTrace {
        start: e.clone(),
        moves,
        end: cur,
    }
}

/// All sets of pairwise commuting generators among `gens` (the empty set
/// included), as sorted vectors.
fn commuting_products(graph: &CoxeterGraph, gens: &[usize], max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &g in gens {
        let extra: Vec<Vec<usize>> = out
            .iter()
            .filter(|p| p.len() < max_len && p.iter().all(|&x| graph.commutes(x, g) && x != g))
            .map(|p| {
                let mut q = p.clone();
                q.push(g);
                q
            })
            .collect();
        out.extend(extra);
    }
    out
}

/// Words of the B-type list (or its mirror when `mirror` is set) inside
/// `graph`, using generators `lo..=hi` of the B-type subgraph; `end` is the
/// end node with the 4-bond.
fn b_list_words(graph: &CoxeterGraph, mirror: bool, max_len: usize) -> Vec<Vec<usize>> {
    let n = graph.n();
    let (gens, a, b, c): (Vec<usize>, usize, usize, usize) = if mirror {
        ((2..=n + 1).collect(), n + 1, n, n.wrapping_sub(1))
    } else {
        ((1..=n).collect(), 1, 2, 3)
    };
    let mut words = commuting_products(graph, &gens, max_len);
    if max_len >= 2 {
        let rest: Vec<usize> = gens
            .iter()
            .copied()
            .filter(|&g| g != a && g != b && g != c)
            .collect();
        for p in commuting_products(graph, &rest, max_len - 2) {
            words.push([vec![a, b], p.clone()].concat());
            words.push([vec![b, a], p].concat());
        }
    }
    words
}

/// Every element of the classified irreducible list of length ≤ `max_len`,
/// generated from the list itself rather than by filtering.
pub fn classified_irreducibles(graph: &CoxeterGraph, max_len: usize) -> Result<Vec<FcElement>> {
    let mut set: BTreeSet<FcElement> = BTreeSet::new();
    let add = |word: &[usize], set: &mut BTreeSet<FcElement>| {
        if word.len() <= max_len && crate::coxeter::fc_reduced_unchecked(graph, word) {
            set.insert(canonical_unchecked(*graph, word));
        }
    };
    match graph.kind() {
        GraphKind::A => return Err(Error::Unsupported("classification for type A".into())),
        GraphKind::B => {
            for w in b_list_words(graph, false, max_len) {
                add(&w, &mut set);
            }
        }
        GraphKind::Bprime => {
            for w in b_list_words(graph, true, max_len) {
                add(&w, &mut set);
            }
        }
        GraphKind::Caffine => {
            let us = b_list_words(graph, false, max_len);
            let vs = b_list_words(graph, true, max_len);
            for u in &us {
                for v in &vs {
                    // Disjoint supports alone is not enough (s_2 s_3 is reducible
                    // in rank 3); the factors must commute letter by letter.
                    let commute = u
                        .iter()
                        .all(|&x| v.iter().all(|&y| x != y && graph.commutes(x, y)));
                    if u.len() + v.len() <= max_len && commute {
                        add(&[u.clone(), v.clone()].concat(), &mut set);
                    }
                }
            }
            let n = graph.n();
            // With k = 0 the two odd families are the monotone runs, whose
            // canonical descriptors are of the plain zigzag family.
            add(&(1..=n + 1).collect::<Vec<_>>(), &mut set);
            add(&(1..=n + 1).rev().collect::<Vec<_>>(), &mut set);
            for k in 0..=max_len {
                let descs = [
                    (TypeIFamily::ZREven, 1, 1),
                    (TypeIFamily::ZLEven, n + 1, n + 1),
                    (TypeIFamily::ZLOdd, n + 1, 1),
                    (TypeIFamily::ZROdd, 1, n + 1),
                ];
                for (family, i, j) in descs {
                    let d = TypeIDescriptor { family, i, j, k };
                    if let Ok(e) = make_type_i(graph, &d) {
                        if e.len() <= max_len {
                            set.insert(e);
                        }
                    }
                }
                let forms: &[TypeIIForm] = if k == 0 {
                    &[TypeIIForm::XO, TypeIIForm::XE, TypeIIForm::XEYXO]
                } else {
                    &[
                        TypeIIForm::Y,
                        TypeIIForm::XEY,
                        TypeIIForm::XEYXO,
                        TypeIIForm::YXO,
                    ]
                };
                for &form in forms {
                    let e = make_type_ii(graph, &TypeIIDescriptor { form, k })?;
                    if e.len() <= max_len {
                        set.insert(e);
                    }
                }
            }
        }
    }
    Ok(set.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{canonical_form, enumerate_fc};
    use crate::heap::n_value;

    fn el(g: &CoxeterGraph, word: &[usize]) -> FcElement {
        canonical_form(g, word).unwrap()
    }

    fn caff(n: usize) -> CoxeterGraph {
        CoxeterGraph::affine(n).unwrap()
    }

    fn weak(side: Side, s: usize, t: usize) -> StarMove {
        StarMove {
            side,
            s,
            t,
            weak: true,
        }
    }

    #[test]
    fn weak_star_examples() {
        let g = caff(4);
        let w = el(&g, &[1, 2, 1]);
        assert_eq!(
            apply_weak_star(&w, &weak(Side::Left, 1, 2)).unwrap().word(),
            vec![2, 1]
        );
        assert_eq!(apply_weak_star(&w, &weak(Side::Left, 2, 1)), None);
        let w = el(&g, &[1, 2]);
        assert!(candidate_moves(&g)
            .iter()
            .all(|m| apply_weak_star(&w, m).is_none()));
    }

    #[test]
    fn only_left_move_by_three() {
        let g = caff(5);
        let w = el(&g, &[3, 5, 2, 4, 6, 1, 2]);
        let left: Vec<StarMove> = candidate_moves(&g)
            .into_iter()
            .filter(|m| m.side == Side::Left && apply_weak_star(&w, m).is_some())
            .collect();
        assert_eq!(left, vec![weak(Side::Left, 3, 2)]);
    }

    #[test]
    fn star_examples() {
        let g = CoxeterGraph::new(GraphKind::B, 3).unwrap();
        let star = |side, s, t| StarMove {
            side,
            s,
            t,
            weak: false,
        };
        let w = el(&g, &[1, 2]);
        assert_eq!(
            apply_star(&w, &star(Side::Left, 1, 2)).unwrap().word(),
            vec![2]
        );
        let w = el(&g, &[1, 3]);
        for side in [Side::Left, Side::Right] {
            for s in 1..=3 {
                for t in 1..=3 {
                    assert_eq!(apply_star(&w, &star(side, s, t)), None);
                }
            }
        }
        let g = caff(4);
        let w = el(&g, &[1, 3, 5, 2, 4, 1, 3, 5]);
        for m in candidate_moves(&g) {
            assert_eq!(apply_star(&w, &StarMove { weak: false, ..m }), None);
        }
    }

    #[test]
    fn irreducibility_examples() {
        let b2 = CoxeterGraph::new(GraphKind::B, 2).unwrap();
        for e in enumerate_fc(&b2, 10).into_iter().skip(1) {
            let expected = [vec![1], vec![2], vec![1, 2], vec![2, 1]].contains(&e.word());
            assert_eq!(is_irreducible(&e), expected, "{e}");
        }
        let g = caff(4);
        assert!(is_irreducible(&el(&g, &[1, 2, 3, 4, 5, 4, 3, 2, 1])));
        assert!(!is_irreducible(&el(&g, &[1, 2, 1])));
    }

    #[test]
    fn reduction_traces() {
        let g = caff(4);
        let t = reduce_to_irreducible(&el(&g, &[1, 2, 1]));
        assert_eq!(t.moves.len(), 1);
        assert_eq!(t.end.len(), 2);
        assert!(is_irreducible(&t.end));
        let t = reduce_to_irreducible(&el(&g, &[1, 3]));
        assert!(t.moves.is_empty());
        let t = reduce_to_irreducible(&el(&g, &[1, 2, 1, 3]));
        assert_eq!(t.moves.len(), 2);
        assert_eq!(t.end.word(), vec![1, 3]);
        assert_eq!(t.replay().unwrap(), t.end);
        let text = t.to_text();
        let parsed: Vec<StarMove> = text.lines().map(|l| l.parse().unwrap()).collect();
        assert_eq!(parsed, t.moves);
    }

    #[test]
    fn weak_star_properties_on_enumeration() {
        for g in [
            caff(2),
            caff(3),
            caff(4),
            CoxeterGraph::new(GraphKind::B, 4).unwrap(),
        ] {
            for e in enumerate_fc(&g, 8).into_iter().skip(1) {
                for m in candidate_moves(&g) {
                    let strong = StarMove { weak: false, ..m };
                    if let Some(u) = apply_weak_star(&e, &m) {
                        assert_eq!(apply_star(&e, &strong), Some(u.clone()));
                        assert_eq!(u.len() + 1, e.len());
                        assert_eq!(n_value(&e).unwrap(), n_value(&u).unwrap());
                    }
                    if g.bond(m.s, m.t) == 3 {
                        assert_eq!(apply_weak_star(&e, &m), apply_star(&e, &strong));
                    }
                }
            }
        }
    }

    #[test]
    fn classified_examples() {
        let b2 = CoxeterGraph::new(GraphKind::B, 2).unwrap();
        let words: Vec<Vec<usize>> = classified_irreducibles(&b2, 2)
            .unwrap()
            .iter()
            .map(|e| e.word())
            .collect();
        assert_eq!(
            words,
            vec![vec![], vec![1], vec![2], vec![1, 2], vec![2, 1]]
        );
        let c2 = classified_irreducibles(&caff(2), 3).unwrap();
        assert!(c2.contains(&el(&caff(2), &[1, 3, 2])));
        let c4 = classified_irreducibles(&caff(4), 9).unwrap();
        assert!(c4.contains(&el(&caff(4), &[1, 2, 3, 4, 5, 4, 3, 2, 1])));
    }

    #[test]
    fn classification_matches_brute_force() {
        let graphs = [
            CoxeterGraph::new(GraphKind::B, 2).unwrap(),
            CoxeterGraph::new(GraphKind::B, 3).unwrap(),
            CoxeterGraph::new(GraphKind::B, 4).unwrap(),
            CoxeterGraph::new(GraphKind::Bprime, 3).unwrap(),
            caff(2),
            caff(3),
            caff(4),
        ];
        for g in graphs {
            let brute: Vec<FcElement> = enumerate_fc(&g, 9)
                .into_iter()
                .filter(is_irreducible)
                .collect();
            let listed = classified_irreducibles(&g, 9).unwrap();
            let extra: Vec<String> = listed
                .iter()
                .filter(|e| !brute.contains(e))
                .map(|e| e.to_string())
                .collect();
            let missing: Vec<String> = brute
                .iter()
                .filter(|e| !listed.contains(e))
                .map(|e| e.to_string())
                .collect();
            assert!(
                extra.is_empty() && missing.is_empty(),
                "{g}: extra {extra:?} missing {missing:?}"
            );
        }
    }
}
