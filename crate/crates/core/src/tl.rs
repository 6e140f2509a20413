//! The generalized Temperley–Lieb algebra on its monomial basis
//! {b_w : w fully commutative}, with coefficients in ℤ[δ].
//!
//! Multiplying a monomial by a generator always gives a single monomial
//! times 2^k δ^m; [`mult_generator`] computes that product from the heap,
//! and linear combinations are handled by [`TLElement`].

use std::collections::BTreeMap;
use std::fmt;

use crate::coxeter::{canonical_form, format_word, parse_word, CoxeterGraph, FcElement, Side};
use crate::error::{Error, Result};
use crate::poly::DeltaPoly;
use crate::starops::{apply_weak_star, StarMove};

/// The monomial 2^two_exp · δ^delta_exp · b_element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TLMonomialResult {
    pub two_exp: u32,
    pub delta_exp: u32,
    pub element: FcElement,
}

impl TLMonomialResult {
    /// The basis element b_e, with no scalar.
    pub fn basis(element: FcElement) -> Self {
        TLMonomialResult {
            two_exp: 0,
            delta_exp: 0,
            element,
        }
    }

    pub fn coefficient(&self) -> DeltaPoly {
        DeltaPoly::scalar_term(self.two_exp, self.delta_exp)
    }
}

impl fmt::Display for TLMonomialResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", TLElement::from_monomial(self))
    }
}

/// b_s · b_w for a generator s acting on the left.
fn left_generator(s: usize, w: &FcElement) -> TLMonomialResult {
    if let Some(sw) = w.left_extend(s) {
        return TLMonomialResult::basis(sw);
    }
    if w.left_descents().contains(&s) {
        return TLMonomialResult {
            two_exp: 0,
            delta_exp: 1,
            element: w.clone(),
        };
    }
    let graph = w.graph();
    // Peel off the maximal top part u whose letters all commute with s, so
    // that b_s b_w = b_u b_s b_rest with s not commuting with any top of rest.
    let mut u = Vec::new();
    let mut rest = w.clone();
    while let Some(&x) = rest
        .left_descents()
        .iter()
        .find(|&&x| graph.commutes(x, s) && x != s)
    {
        u.push(x);
        rest = rest.left_remove(x).expect("descent");
    }
    // rest = t·s·v (bond 3) or t·s·t·v (bond 4) for a top t adjacent to s;
    // then b_s b_rest = b_{s v} or 2 b_{s t v}, i.e. rest with that top t
    // removed.
    let found = rest.left_descents().into_iter().find_map(|t| {
        let bond = graph.bond(s, t);
        if bond < 3 {
            return None;
        }
        let without_t = rest.left_remove(t)?;
        let v = without_t.left_remove(s)?;
        if bond == 4 {
            v.left_remove(t)?;
        }
        Some((u32::from(bond == 4), without_t))
    });
    let (two, reduced) = found.unwrap_or_else(|| panic!("no braid found for b_{s} on {w}"));
    let mut result = TLMonomialResult {
        two_exp: two,
        delta_exp: 0,
        element: reduced,
    };
    for &x in u.iter().rev() {
        let next = left_generator(x, &result.element);
        result.two_exp += next.two_exp;
        result.delta_exp += next.delta_exp;
        result.element = next.element;
    }
    result
}

/// Multiplies a scaled monomial by the generator b_i on the given side.
pub fn mult_generator(side: Side, i: usize, m: &TLMonomialResult) -> Result<TLMonomialResult> {
    m.element.graph().check_generator(i)?;
    let prod = match side {
        Side::Left => left_generator(i, &m.element),
        Side::Right => {
            let r = left_generator(i, &m.element.inverse());
            TLMonomialResult {
                element: r.element.inverse(),
                ..r
            }
        }
    };
    Ok(TLMonomialResult {
        two_exp: m.two_exp + prod.two_exp,
        delta_exp: m.delta_exp + prod.delta_exp,
        element: prod.element,
    })
}

/// b_{i_1} b_{i_2} ⋯ b_{i_p} = 2^k δ^m b_w.
pub fn normalize_word(graph: &CoxeterGraph, gens: &[usize]) -> Result<TLMonomialResult> {
    graph.check_word(gens)?;
    let mut acc = TLMonomialResult::basis(FcElement::identity(*graph));
    for &g in gens.iter().rev() {
        acc = mult_generator(Side::Left, g, &acc)?;
    }
    Ok(acc)
}

/// A linear combination of monomial basis elements over ℤ[δ].
///
/// Terms are kept in a map ordered by length and then canonical word; zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TLElement {
    graph: CoxeterGraph,
    terms: BTreeMap<FcElement, DeltaPoly>,
}

impl TLElement {
    pub fn zero(graph: CoxeterGraph) -> Self {
        TLElement {
            graph,
            terms: BTreeMap::new(),
        }
    }

    /// The unit b_e.
    pub fn one(graph: CoxeterGraph) -> Self {
        Self::basis(FcElement::identity(graph))
    }

    pub fn basis(e: FcElement) -> Self {
        let mut out = Self::zero(e.graph());
        out.add_term(e, &DeltaPoly::one());
        out
    }

    pub fn generator(graph: CoxeterGraph, i: usize) -> Result<Self> {
        Ok(Self::basis(FcElement::from_word(graph, &[i])?))
    }

    pub fn from_monomial(m: &TLMonomialResult) -> Self {
        let mut out = Self::zero(m.element.graph());
        out.add_term(m.element.clone(), &m.coefficient());
        out
    }

    pub fn graph(&self) -> CoxeterGraph {
        self.graph
    }

    pub fn terms(&self) -> &BTreeMap<FcElement, DeltaPoly> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, e: &FcElement) -> DeltaPoly {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, e: FcElement, c: &DeltaPoly) {
        debug_assert_eq!(e.graph(), self.graph);
        let slot = self.terms.entry(e.clone()).or_default();
        *slot = &*slot + c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &TLElement) -> Result<TLElement> {
        check_same(self.graph, other.graph)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &DeltaPoly) -> TLElement {
        let mut out = Self::zero(self.graph);
        for (e, d) in &self.terms {
            out.add_term(e.clone(), &(c * d));
        }
        out
    }

    /// Parses the format produced by `Display`. A basis element may also be
    /// given by its canonical rows separated by `|`.
    pub fn parse(graph: CoxeterGraph, text: &str) -> Result<TLElement> {
        let bad = |why: &str| Error::Parse(format!("TL element '{text}': {why}"));
        let text = text.trim();
        let mut out = Self::zero(graph);
        if text == "0" {
            return Ok(out);
        }
        for term in text.split(" + ") {
            let (coeff, basis) = match term.rsplit_once(" * ") {
                Some((c, b)) => {
                    let c = c.trim();
                    let c = c
                        .strip_prefix('(')
                        .and_then(|c| c.strip_suffix(')'))
                        .unwrap_or(c);
                    (c.parse::<DeltaPoly>()?, b)
                }
                None => (DeltaPoly::one(), term),
            };
            let rows = basis
                .trim()
                .strip_prefix("b[")
                .and_then(|b| b.strip_suffix(']'))
                .ok_or_else(|| bad("basis element must look like b[word]"))?;
            let e = if rows.contains('|') {
                FcElement::parse_rows(graph, rows)?
            } else {
                canonical_form(&graph, &parse_word(rows)?)?
            };
            out.add_term(e, &coeff);
        }
        Ok(out)
    }
}

fn check_same(a: CoxeterGraph, b: CoxeterGraph) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::GraphMismatch {
            left: a.to_string(),
            right: b.to_string(),
        })
    }
}

impl fmt::Display for TLElement {
    /// Terms `coeff * b[word]` joined by ` + `, in basis order, where `word`
    /// is the canonical reduced word; a unit coefficient is omitted and
    /// multi-term coefficients are parenthesized, e.g.
    /// `b[1] + 2 * b[1 3 2] + (d+1) * b[2]`. The zero element is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let basis = format!("b[{}]", format_word(&e.word()));
                if *c == DeltaPoly::one() {
                    basis
                } else if c.terms().count() > 1 {
                    format!("({c}) * {basis}")
                } else {
                    format!("{c} * {basis}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Product of two TL elements, extended bilinearly from monomials.
pub fn tl_multiply(a: &TLElement, b: &TLElement) -> Result<TLElement> {
    check_same(a.graph, b.graph)?;
    let mut out = TLElement::zero(a.graph);
    for (x, cx) in &a.terms {
        for (y, cy) in &b.terms {
            let word = [x.word(), y.word()].concat();
            let m = normalize_word(&a.graph, &word)?;
            out.add_term(m.element.clone(), &(&(cx * cy) * &m.coefficient()));
        }
    }
    Ok(out)
}

/// Checks b_s b_t b_w = b_w (bond 3) or 2 b_w (bond 4) when w is weak star
/// reducible by s with respect to t (on the move's side).
pub fn weak_star_reverse_check(e: &FcElement, m: &StarMove) -> Result<bool> {
    let weak = StarMove { weak: true, ..*m };
    if apply_weak_star(e, &weak).is_none() {
        return Err(Error::Precondition(format!(
            "move {weak} is undefined on {e}"
        )));
    }
    let start = TLMonomialResult::basis(e.clone());
    let after_t = mult_generator(m.side, m.t, &start)?;
    let after_s = mult_generator(m.side, m.s, &after_t)?;
    let two = u32::from(e.graph().bond(m.s, m.t) == 4);
    Ok(after_s
        == TLMonomialResult {
            two_exp: two,
            delta_exp: 0,
            element: e.clone(),
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{canonical_form, enumerate_fc, is_fc_reduced, GraphKind};
    use crate::starops::candidate_moves;
    use std::collections::{BTreeSet, VecDeque};

    fn caff(n: usize) -> CoxeterGraph {
        CoxeterGraph::affine(n).unwrap()
    }

    fn el(g: &CoxeterGraph, w: &[usize]) -> FcElement {
        canonical_form(g, w).unwrap()
    }

    fn mono(two: u32, delta: u32, e: FcElement) -> TLMonomialResult {
        TLMonomialResult {
            two_exp: two,
            delta_exp: delta,
            element: e,
        }
    }

    #[test]
    fn generator_action_examples() {
        let g = caff(4);
        let w = TLMonomialResult::basis(el(&g, &[1, 2, 1, 3]));
        let r = mult_generator(Side::Left, 2, &w).unwrap();
        assert_eq!(r, mono(1, 0, el(&g, &[2, 1, 3])));
        let r = mult_generator(Side::Left, 3, &r).unwrap();
        assert_eq!(r, mono(1, 0, el(&g, &[1, 3])));
        let w = TLMonomialResult::basis(el(&g, &[1, 2, 3, 4]));
        assert_eq!(
            mult_generator(Side::Left, 3, &w).unwrap(),
            mono(0, 0, el(&g, &[1, 3, 4]))
        );
        let e = TLMonomialResult::basis(FcElement::identity(g));
        assert_eq!(
            mult_generator(Side::Left, 4, &e).unwrap(),
            mono(0, 0, el(&g, &[4]))
        );
        assert!(mult_generator(Side::Left, 9, &e).is_err());
    }

    #[test]
    fn defining_relations() {
        let g = caff(4);
        assert_eq!(
            normalize_word(&g, &[1, 2, 1, 2]).unwrap(),
            mono(1, 0, el(&g, &[1, 2]))
        );
        assert_eq!(
            normalize_word(&g, &[3, 3]).unwrap(),
            mono(0, 1, el(&g, &[3]))
        );
        assert_eq!(
            normalize_word(&g, &[2, 3, 2]).unwrap(),
            mono(0, 0, el(&g, &[2]))
        );
        assert_eq!(
            normalize_word(&g, &[4, 5, 4, 5]).unwrap(),
            mono(1, 0, el(&g, &[4, 5]))
        );
        assert_eq!(
            normalize_word(&g, &[1, 3]).unwrap(),
            normalize_word(&g, &[3, 1]).unwrap()
        );
    }

    /// Independent oracle: rewrite generator words with the defining
    /// relations, exploring the whole commutation class at every step.
    fn oracle(g: &CoxeterGraph, word: &[usize]) -> (u32, u32, Vec<usize>) {
        let (mut two, mut delta) = (0, 0);
        let mut cur = word.to_vec();
        'outer: loop {
            let mut seen = BTreeSet::new();
            let mut queue = VecDeque::from([cur.clone()]);
            seen.insert(cur.clone());
            while let Some(w) = queue.pop_front() {
                for p in 0..w.len() {
                    let (a, rest) = (w[p], &w[p + 1..]);
                    if rest.first() == Some(&a) {
                        delta += 1;
                        cur = [&w[..p], &w[p + 1..]].concat();
                        continue 'outer;
                    }
                    if rest.len() >= 2 && rest[1] == a && g.bond(a, rest[0]) == 3 {
                        cur = [&w[..p], &w[p + 2..]].concat();
                        continue 'outer;
                    }
                    if rest.len() >= 3
                        && rest[1] == a
                        && rest[2] == rest[0]
                        && g.bond(a, rest[0]) == 4
                    {
                        two += 1;
                        cur = [&w[..p], &w[p + 2..]].concat();
                        continue 'outer;
                    }
                }
                for p in 0..w.len().saturating_sub(1) {
                    if w[p] != w[p + 1] && g.commutes(w[p], w[p + 1]) {
                        let mut v = w.clone();
                        v.swap(p, p + 1);
                        if seen.insert(v.clone()) {
                            queue.push_back(v);
                        }
                    }
                }
            }
            return (two, delta, cur);
        }
    }

    #[test]
    fn normalize_matches_rewriting_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..600 {
            let n = rng.gen_range(2..=4);
            let g = caff(n);
            let len = rng.gen_range(0..=9);
            let word: Vec<usize> = (0..len).map(|_| rng.gen_range(1..=n + 1)).collect();
            let (two, delta, w) = oracle(&g, &word);
            assert!(is_fc_reduced(&g, &w).unwrap());
            assert_eq!(
                normalize_word(&g, &word).unwrap(),
                mono(two, delta, el(&g, &w)),
                "{word:?}"
            );
        }
    }

    #[test]
    fn right_action_matches_word_order() {
        let g = caff(3);
        for e in enumerate_fc(&g, 6) {
            for s in g.generators() {
                let r =
                    mult_generator(Side::Right, s, &TLMonomialResult::basis(e.clone())).unwrap();
                let word = [e.word(), vec![s]].concat();
                assert_eq!(r, normalize_word(&g, &word).unwrap());
            }
        }
    }

    #[test]
    fn multiply_examples() {
        let g = caff(3);
        let b1 = TLElement::generator(g, 1).unwrap();
        let b2 = TLElement::generator(g, 2).unwrap();
        let one = TLElement::one(g);
        assert_eq!(tl_multiply(&one, &b1).unwrap(), b1);
        let sum = b1.add(&b2).unwrap();
        let prod = tl_multiply(&sum, &b1).unwrap();
        assert_eq!(prod.to_string(), "d * b[1] + b[2 1]");
        let b12 = TLElement::basis(el(&g, &[1, 2]));
        assert_eq!(
            tl_multiply(&b12, &b1).unwrap(),
            TLElement::basis(el(&g, &[1, 2, 1]))
        );
        let other = TLElement::one(caff(4));
        assert!(tl_multiply(&one, &other).is_err());
    }

    #[test]
    fn text_format_round_trip() {
        let g = caff(2);
        let x = TLElement::parse(g, "b[] + 2 * b[1 3|2] + (d+1) * b[2]").unwrap();
        assert_eq!(x.to_string(), "b[] + (d+1) * b[2] + 2 * b[1 3 2]");
        assert_eq!(TLElement::parse(g, &x.to_string()).unwrap(), x);
        assert_eq!(TLElement::parse(g, "0").unwrap(), TLElement::zero(g));
        assert!(TLElement::parse(g, "2 * c[1]").is_err());
        assert!(TLElement::parse(g, "b[1 2 1 2]").is_err());
    }

    #[test]
    fn multiplication_is_associative() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let g = caff(3);
        let pool = enumerate_fc(&g, 5);
        let random = |rng: &mut rand_chacha::ChaCha8Rng| {
            let mut x = TLElement::zero(g);
            for _ in 0..rng.gen_range(1..=4) {
                let e = pool[rng.gen_range(0..pool.len())].clone();
                x.add_term(
                    e,
                    &DeltaPoly::monomial(rng.gen_range(-3..=3), rng.gen_range(0..2)),
                );
            }
            x
        };
        for _ in 0..50 {
            let (a, b, c) = (random(&mut rng), random(&mut rng), random(&mut rng));
            let left = tl_multiply(&tl_multiply(&a, &b).unwrap(), &c).unwrap();
            let right = tl_multiply(&a, &tl_multiply(&b, &c).unwrap()).unwrap();
            assert_eq!(left, right);
        }
    }

    #[test]
    fn weak_star_reversal() {
        let g = caff(4);
        let w = el(&g, &[1, 2, 1]);
        let m = StarMove {
            side: Side::Left,
            s: 1,
            t: 2,
            weak: true,
        };
        assert!(weak_star_reverse_check(&w, &m).unwrap());
        assert!(weak_star_reverse_check(&el(&g, &[1, 3]), &m).is_err());
        for e in enumerate_fc(&g, 7) {
            for m in candidate_moves(&g) {
                if let Some(u) = apply_weak_star(&e, &m) {
                    assert!(weak_star_reverse_check(&e, &m).unwrap());
                    // b_t b_w has length l(w) − 1 and a factor 2 for bond 4.
                    let r =
                        mult_generator(m.side, m.t, &TLMonomialResult::basis(e.clone())).unwrap();
                    assert_eq!(r.element.len() + 1, e.len());
                    assert_eq!(r.two_exp, u32::from(g.bond(m.s, m.t) == 4));
                    assert_eq!(r.delta_exp, 0);
                    let _ = u;
                }
            }
        }
    }

    #[test]
    fn finite_b_relations() {
        let g = CoxeterGraph::new(GraphKind::B, 3).unwrap();
        assert_eq!(
            normalize_word(&g, &[2, 1, 2, 1]).unwrap(),
            mono(1, 0, el(&g, &[2, 1]))
        );
        assert_eq!(
            normalize_word(&g, &[3, 2, 3]).unwrap(),
            mono(0, 0, el(&g, &[3]))
        );
    }
}
