//! Heaps of fully commutative elements: the labelled poset of a reduced
//! word, its covering relation, the n-value (maximum antichain size), the
//! rigid zigzag elements of type I, the alternating odd/even stacks of
//! type II, and a monospace rendering of the canonical row picture.

use std::collections::BTreeSet;
use std::fmt;

use crate::coxeter::{canonical_form, word_order, CoxeterGraph, FcElement, GraphKind};
use crate::error::{Error, Result};

/// One entry of a heap: the letter at a given position of the underlying
/// reduced word, together with its canonical row (0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HeapEntry {
    pub label: usize,
    pub row: usize,
}

/// The heap poset of a fully commutative reduced word.
///
/// Entries are indexed by their position in the word; entry `p` lies above
/// entry `q` when `p < q` and a chain of non-commuting letters joins them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Heap {
    entries: Vec<HeapEntry>,
    above: Vec<Vec<bool>>,
    covers: BTreeSet<(usize, usize)>,
}

impl Heap {
    /// Heap of an arbitrary fully commutative reduced word, entries in word
    /// order.
    pub fn from_word(graph: &CoxeterGraph, word: &[usize]) -> Result<Heap> {
        let element = canonical_form(graph, word)?;
        let above = word_order(graph, word);
        let len = word.len();
        // Row of an entry = length of the longest chain from the top.
        let mut row = vec![0usize; len];
        for q in 0..len {
            row[q] = (0..q)
                .filter(|&p| above[p][q])
                .map(|p| row[p] + 1)
                .max()
                .unwrap_or(0);
        }
        debug_assert_eq!(row.iter().max().map_or(0, |r| r + 1), element.rows().len());
        let entries = word
            .iter()
            .zip(&row)
            .map(|(&label, &row)| HeapEntry { label, row })
            .collect();
        let mut covers = BTreeSet::new();
        for p in 0..len {
            for q in p + 1..len {
                if above[p][q] && !(p + 1..q).any(|r| above[p][r] && above[r][q]) {
                    covers.insert((p, q));
                }
            }
        }
        Ok(Heap {
            entries,
            above,
            covers,
        })
    }

    pub fn entries(&self) -> &[HeapEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Covering pairs `(upper, lower)`: `lower ⋖ upper` with nothing between.
    pub fn covers(&self) -> &BTreeSet<(usize, usize)> {
        &self.covers
    }

    /// True when entry `upper` lies strictly above entry `lower`.
    pub fn is_above(&self, upper: usize, lower: usize) -> bool {
        upper < lower && self.above[upper][lower]
    }

    /// True when the two entries are incomparable.
    pub fn incomparable(&self, p: usize, q: usize) -> bool {
        p != q && !self.is_above(p, q) && !self.is_above(q, p)
    }

    /// Maximum antichain size via Dilworth's theorem: the number of entries
    /// minus a maximum matching of the strict comparability graph.
    pub fn max_antichain(&self) -> usize {
        let len = self.len();
        let mut match_of_lower: Vec<Option<usize>> = vec![None; len];
        let mut matched = 0;
        for p in 0..len {
            let mut seen = vec![false; len];
            if self.augment(p, &mut seen, &mut match_of_lower) {
                matched += 1;
            }
        }
        len - matched
    }

    fn augment(&self, p: usize, seen: &mut [bool], match_of_lower: &mut [Option<usize>]) -> bool {
        for q in p + 1..self.len() {
            if self.above[p][q] && !seen[q] {
                seen[q] = true;
                let free = match match_of_lower[q] {
                    None => true,
                    Some(other) => self.augment(other, seen, match_of_lower),
                };
                if free {
                    match_of_lower[q] = Some(p);
                    return true;
                }
            }
        }
        false
    }
}

/// Heap of an element, built on its canonical word.
pub fn build_heap(e: &FcElement) -> Heap {
    Heap::from_word(&e.graph(), &e.word()).expect("canonical words are fully commutative")
}

/// n(w): the maximum size of an antichain in the heap. Undefined for the
/// identity.
pub fn n_value(e: &FcElement) -> Result<usize> {
    if e.is_identity() {
        return Err(Error::IdentityElement("n-value"));
    }
    Ok(build_heap(e).max_antichain())
}

/// The zigzag word z_{i,j}: s_i s_{i±1} ... s_j, or s_i when i = j.
fn zigzag(i: usize, j: usize) -> Vec<usize> {
    if i <= j {
        (i..=j).collect()
    } else {
        (j..=i).rev().collect()
    }
}

/// The families of rigid zigzag elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TypeIFamily {
    /// z_{i,j}, a monotone run.
    Zij,
    /// z^{L,2k}_{i,j}, starting downwards with an even number of end turns.
    ZLEven,
    /// z^{L,2k+1}_{i,j}.
    ZLOdd,
    /// z^{R,2k}_{i,j}, starting upwards.
    ZREven,
    /// z^{R,2k+1}_{i,j}.
    ZROdd,
    /// s_1 s_2 s_1 (i = j = 1) or s_{n+1} s_n s_{n+1} (i = j = n+1): the two
    /// rigid elements that turn at a generator adjacent to an end node.
    EndBounce,
}

/// Descriptor of a type I element.
///
/// Valid descriptors are canonical: each type I element has exactly one.
/// For the odd families with `k = 0` this excludes the end index that
/// would reproduce a monotone run (j = 1 for ZLOdd, j = n+1 for ZROdd); the
/// even families need `k ≥ 1`; `Zij` and `EndBounce` use `k = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeIDescriptor {
    pub family: TypeIFamily,
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

impl fmt::Display for TypeIDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (name, exp) = match self.family {
            TypeIFamily::Zij => return write!(f, "z[{},{}]", self.i, self.j),
            TypeIFamily::EndBounce => return write!(f, "bounce[{}]", self.i),
            TypeIFamily::ZLEven => ("L", 2 * self.k),
            TypeIFamily::ZLOdd => ("L", 2 * self.k + 1),
            TypeIFamily::ZREven => ("R", 2 * self.k),
            TypeIFamily::ZROdd => ("R", 2 * self.k + 1),
        };
        write!(f, "z^{{{name},{exp}}}[{},{}]", self.i, self.j)
    }
}

fn check_type_i_bounds(n: usize, d: &TypeIDescriptor) -> Result<()> {
    let top = n + 1;
    let (i, j, k) = (d.i, d.j, d.k);
    let ok = match d.family {
        TypeIFamily::Zij => (1..=top).contains(&i) && (1..=top).contains(&j) && k == 0,
        TypeIFamily::ZLEven => i > 1 && i <= top && j > 1 && j <= top && k >= 1,
        TypeIFamily::ZLOdd => i > 1 && i <= top && j >= 1 && j < top && (k >= 1 || j >= 2),
        TypeIFamily::ZREven => i >= 1 && i < top && j >= 1 && j < top && k >= 1,
        TypeIFamily::ZROdd => i >= 1 && i < top && j > 1 && j <= top && (k >= 1 || j <= n),
        TypeIFamily::EndBounce => (i == 1 || i == top) && i == j && k == 0,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidDescriptor(format!(
            "{d} out of bounds for n={n}"
        )))
    }
}

/// The word of a type I descriptor (bounds assumed checked).
fn type_i_word(n: usize, d: &TypeIDescriptor) -> Vec<usize> {
    let top = n + 1;
    let mut w = Vec::new();
    match d.family {
        TypeIFamily::Zij => w.extend(zigzag(d.i, d.j)),
        TypeIFamily::ZLEven => {
            w.extend(zigzag(d.i, 2));
            for _ in 1..d.k {
                w.extend(zigzag(1, n));
                w.extend(zigzag(top, 2));
            }
            w.extend(zigzag(1, n));
            w.extend(zigzag(top, d.j));
        }
        TypeIFamily::ZLOdd => {
            w.extend(zigzag(d.i, 2));
            for _ in 0..d.k {
                w.extend(zigzag(1, n));
                w.extend(zigzag(top, 2));
            }
            w.extend(zigzag(1, d.j));
        }
        TypeIFamily::ZREven => {
            w.extend(zigzag(d.i, n));
            for _ in 1..d.k {
                w.extend(zigzag(top, 2));
                w.extend(zigzag(1, n));
            }
            w.extend(zigzag(top, 2));
            w.extend(zigzag(1, d.j));
        }
        TypeIFamily::ZROdd => {
            w.extend(zigzag(d.i, n));
            for _ in 0..d.k {
                w.extend(zigzag(top, 2));
                w.extend(zigzag(1, n));
            }
            w.extend(zigzag(top, d.j));
        }
        TypeIFamily::EndBounce => {
            let other = if d.i == 1 { 2 } else { n };
            w.extend([d.i, other, d.i]);
        }
    }
    w
}

/// Builds the type I element named by a descriptor.
///
/// The graph must be of kind B, B′ or C̃ (the zigzags live on the affine
/// index set 1..n+1); every letter must be a generator of the graph.
pub fn make_type_i(graph: &CoxeterGraph, desc: &TypeIDescriptor) -> Result<FcElement> {
    if graph.kind() == GraphKind::A {
        return Err(Error::Unsupported(
            "type I descriptors on type A graphs".into(),
        ));
    }
    check_type_i_bounds(graph.n(), desc)?;
    canonical_form(graph, &type_i_word(graph.n(), desc))
}

/// Every type I element of length at most `max_len`, in element order.
pub fn type_i_elements(graph: &CoxeterGraph, max_len: usize) -> Vec<FcElement> {
    if graph.kind() == GraphKind::A {
        return Vec::new();
    }
    let top = graph.n() + 1;
    let families = [
        TypeIFamily::Zij,
        TypeIFamily::EndBounce,
        TypeIFamily::ZLEven,
        TypeIFamily::ZLOdd,
        TypeIFamily::ZREven,
        TypeIFamily::ZROdd,
    ];
    let mut out = BTreeSet::new();
    for family in families {
        for i in 1..=top {
            for j in 1..=top {
                for k in 0..=max_len / graph.n().max(1) + 1 {
                    let desc = TypeIDescriptor { family, i, j, k };
                    if check_type_i_bounds(graph.n(), &desc).is_err() {
                        continue;
                    }
                    let word = type_i_word(graph.n(), &desc);
                    if word.len() > max_len {
                        continue;
                    }
                    if let Ok(e) = canonical_form(graph, &word) {
                        out.insert(e);
                    }
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Recognizes a type I element, returning its canonical descriptor.
///
/// Returns `None` for the identity, for elements with n-value other than 1,
/// and for type A graphs.
pub fn is_type_i(e: &FcElement) -> Option<TypeIDescriptor> {
    let graph = e.graph();
    if e.is_identity() || graph.kind() == GraphKind::A {
        return None;
    }
    // n-value 1 means every canonical row is a singleton.
    if e.rows().iter().any(|r| r.len() != 1) {
        return None;
    }
    let word = e.word();
    let (i, j) = (word[0], word[word.len() - 1]);
    let families = [
        TypeIFamily::Zij,
        TypeIFamily::EndBounce,
        TypeIFamily::ZLEven,
        TypeIFamily::ZLOdd,
        TypeIFamily::ZREven,
        TypeIFamily::ZROdd,
    ];
    for family in families {
        for k in 0..=word.len() {
            let desc = TypeIDescriptor { family, i, j, k };
            if check_type_i_bounds(graph.n(), &desc).is_ok()
                && type_i_word(graph.n(), &desc) == word
            {
                return Some(desc);
            }
        }
    }
    None
}

/// The six shapes of type II elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TypeIIForm {
    /// x_𝒪, the product of all odd-indexed generators.
    XO,
    /// x_ℰ, the product of all even-indexed generators.
    XE,
    /// y_k = (x_𝒪 x_ℰ)^k.
    Y,
    /// x_ℰ y_k.
    XEY,
    /// x_ℰ y_k x_𝒪.
    XEYXO,
    /// y_k x_𝒪.
    YXO,
}

/// Descriptor of a type II element; `k` is 0 for the forms `XO` and `XE`,
/// at least 0 for `XEYXO` (k = 0 gives x_ℰ x_𝒪), and at least 1 otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeIIDescriptor {
    pub form: TypeIIForm,
    pub k: usize,
}

impl fmt::Display for TypeIIDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.k;
        match self.form {
            TypeIIForm::XO => write!(f, "xO"),
            TypeIIForm::XE => write!(f, "xE"),
            TypeIIForm::Y => write!(f, "y_{k}"),
            TypeIIForm::XEY => write!(f, "xE y_{k}"),
            TypeIIForm::XEYXO => write!(f, "xE y_{k} xO"),
            TypeIIForm::YXO => write!(f, "y_{k} xO"),
        }
    }
}

/// Odd generator indices of C̃_n (the set 𝒪).
pub fn odd_indices(n: usize) -> Vec<usize> {
    (1..=n + 1).filter(|i| i % 2 == 1).collect()
}

/// Even generator indices of C̃_n (the set ℰ).
pub fn even_indices(n: usize) -> Vec<usize> {
    (1..=n + 1).filter(|i| i % 2 == 0).collect()
}

/// Sequence of x_𝒪 / x_ℰ factors (true = 𝒪) of a type II descriptor.
fn type_ii_factors(desc: &TypeIIDescriptor) -> Vec<bool> {
    let y: Vec<bool> = (0..desc.k).flat_map(|_| [true, false]).collect();
    match desc.form {
        TypeIIForm::XO => vec![true],
        TypeIIForm::XE => vec![false],
        TypeIIForm::Y => y,
        TypeIIForm::XEY => [vec![false], y].concat(),
        TypeIIForm::XEYXO => [vec![false], y, vec![true]].concat(),
        TypeIIForm::YXO => [y, vec![true]].concat(),
    }
}

/// Builds the type II element of a descriptor on a C̃ graph.
pub fn make_type_ii(graph: &CoxeterGraph, desc: &TypeIIDescriptor) -> Result<FcElement> {
    if graph.kind() != GraphKind::Caffine {
        return Err(Error::Unsupported(
            "type II elements need an affine C graph".into(),
        ));
    }
    let ok = match desc.form {
        TypeIIForm::XO | TypeIIForm::XE => desc.k == 0,
        // x_ℰ y_0 x_𝒪 = x_ℰ x_𝒪 is an alternating product too.
        TypeIIForm::XEYXO => true,
        TypeIIForm::Y | TypeIIForm::XEY | TypeIIForm::YXO => desc.k >= 1,
    };
    if !ok {
        return Err(Error::InvalidDescriptor(format!(
            "{desc} with k={}",
            desc.k
        )));
    }
    let n = graph.n();
    let word: Vec<usize> = type_ii_factors(desc)
        .into_iter()
        .flat_map(|odd| if odd { odd_indices(n) } else { even_indices(n) })
        .collect();
    canonical_form(graph, &word)
}

/// Recognizes a type II element from its canonical rows, which must
/// alternate between the full odd row and the full even row.
pub fn is_type_ii(e: &FcElement) -> Option<TypeIIDescriptor> {
    let graph = e.graph();
    if graph.kind() != GraphKind::Caffine || e.is_identity() {
        return None;
    }
    let (odd, even) = (odd_indices(graph.n()), even_indices(graph.n()));
    let mut factors = Vec::new();
    for row in e.rows() {
        if *row == odd {
            factors.push(true);
        } else if *row == even {
            factors.push(false);
        } else {
            return None;
        }
    }
    if factors.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    let rows = factors.len();
    let starts_odd = factors[0];
    let ends_odd = factors[rows - 1];
    let desc = match (rows, starts_odd, ends_odd) {
        (1, true, _) => TypeIIDescriptor {
            form: TypeIIForm::XO,
            k: 0,
        },
        (1, false, _) => TypeIIDescriptor {
            form: TypeIIForm::XE,
            k: 0,
        },
        (_, true, false) => TypeIIDescriptor {
            form: TypeIIForm::Y,
            k: rows / 2,
        },
        (_, false, false) => TypeIIDescriptor {
            form: TypeIIForm::XEY,
            k: rows / 2,
        },
        (_, false, true) => TypeIIDescriptor {
            form: TypeIIForm::XEYXO,
            k: (rows - 2) / 2,
        },
        (_, true, true) => TypeIIDescriptor {
            form: TypeIIForm::YXO,
            k: rows / 2,
        },
    };
    Some(desc)
}

/// Monospace picture of the canonical rows: one text line per row, with
/// the label of generator i starting at character column 2i. Trailing
/// spaces are trimmed; the identity renders as the empty string.
pub fn render_heap(e: &FcElement) -> String {
    let mut lines = Vec::new();
    for row in e.rows() {
        let mut line = String::new();
        for &i in row {
            let col = 2 * i;
            while line.len() < col {
                line.push(' ');
            }
            line.push_str(&i.to_string());
        }
        lines.push(line);
    }
    lines.join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::enumerate_fc;

    fn caff(n: usize) -> CoxeterGraph {
        CoxeterGraph::affine(n).unwrap()
    }

    fn el(n: usize, word: &[usize]) -> FcElement {
        canonical_form(&caff(n), word).unwrap()
    }

    #[test]
    fn third_letter_is_covered_by_the_second() {
        let heap = Heap::from_word(&caff(5), &[3, 2, 1, 2, 5, 4, 6, 5]).unwrap();
        assert!(heap.covers().contains(&(1, 2)));
        assert!(heap.is_above(1, 2));
    }

    #[test]
    fn trivial_heaps() {
        let single = build_heap(&el(3, &[2]));
        assert_eq!(single.len(), 1);
        assert!(single.covers().is_empty());
        let pair = build_heap(&el(3, &[1, 3]));
        assert!(pair.incomparable(0, 1));
    }

    #[test]
    fn covers_join_adjacent_labels_only() {
        for e in enumerate_fc(&caff(3), 7) {
            let heap = build_heap(&e);
            for &(a, b) in heap.covers() {
                let (la, lb) = (heap.entries()[a].label, heap.entries()[b].label);
                assert!(e.graph().bond(la, lb) >= 3);
                assert!(!(a + 1..b).any(|r| {
                    let l = heap.entries()[r].label;
                    l == la || l == lb
                }));
            }
        }
    }

    #[test]
    fn n_values_of_examples() {
        assert_eq!(n_value(&el(4, &[2, 1, 3, 5])).unwrap(), 3);
        assert_eq!(n_value(&el(4, &[1, 3, 5])).unwrap(), 3);
        assert_eq!(n_value(&el(4, &[2])).unwrap(), 1);
        assert!(n_value(&FcElement::identity(caff(4))).is_err());
    }

    /// Brute force: largest pairwise-incomparable subset.
    fn brute_antichain(heap: &Heap) -> usize {
        let len = heap.len();
        (0u32..1 << len)
            .filter(|mask| {
                (0..len).all(|p| {
                    (p + 1..len).all(|q| {
                        mask & (1 << p) == 0 || mask & (1 << q) == 0 || heap.incomparable(p, q)
                    })
                })
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn antichain_matches_brute_force() {
        for e in enumerate_fc(&caff(3), 8) {
            assert_eq!(
                build_heap(&e).max_antichain(),
                brute_antichain(&build_heap(&e))
            );
        }
    }

    #[test]
    fn type_i_examples() {
        let g = caff(4);
        let d = TypeIDescriptor {
            family: TypeIFamily::ZLEven,
            i: 2,
            j: 3,
            k: 1,
        };
        let e = make_type_i(&g, &d).unwrap();
        assert_eq!(e.word(), vec![2, 1, 2, 3, 4, 5, 4, 3]);
        assert_eq!(is_type_i(&e), Some(d));
        let r = TypeIDescriptor {
            family: TypeIFamily::ZREven,
            i: 1,
            j: 1,
            k: 1,
        };
        assert_eq!(
            make_type_i(&g, &r).unwrap().word(),
            vec![1, 2, 3, 4, 5, 4, 3, 2, 1]
        );
        let single = TypeIDescriptor {
            family: TypeIFamily::Zij,
            i: 3,
            j: 3,
            k: 0,
        };
        assert_eq!(make_type_i(&g, &single).unwrap().word(), vec![3]);
        assert_eq!(is_type_i(&el(4, &[1, 3])), None);
        assert_eq!(is_type_i(&el(4, &[2, 1, 3, 5])), None);
    }

    #[test]
    fn out_of_bounds_descriptors_are_rejected() {
        let g = caff(4);
        let bad = TypeIDescriptor {
            family: TypeIFamily::ZLEven,
            i: 1,
            j: 3,
            k: 1,
        };
        assert!(make_type_i(&g, &bad).is_err());
        let duplicate = TypeIDescriptor {
            family: TypeIFamily::ZLOdd,
            i: 3,
            j: 1,
            k: 0,
        };
        assert!(make_type_i(&g, &duplicate).is_err());
    }

    #[test]
    fn every_n_value_one_element_is_type_i() {
        for n in 2..=4 {
            for e in enumerate_fc(&caff(n), 10).into_iter().skip(1) {
                let n1 = n_value(&e).unwrap() == 1;
                let desc = is_type_i(&e);
                assert_eq!(n1, desc.is_some(), "{e}");
                if let Some(d) = desc {
                    assert_eq!(make_type_i(&e.graph(), &d).unwrap(), e);
                }
            }
        }
    }

    #[test]
    fn type_i_enumeration_matches_n_value_filter() {
        for n in 2..=4 {
            let g = caff(n);
            let listed = type_i_elements(&g, 9);
            let brute: Vec<FcElement> = enumerate_fc(&g, 9)
                .into_iter()
                .skip(1)
                .filter(|e| n_value(e).unwrap() == 1)
                .collect();
            assert_eq!(listed, brute);
        }
        let b = is_type_i(&el(3, &[1, 2, 1])).unwrap();
        assert_eq!(b.family, TypeIFamily::EndBounce);
    }

    #[test]
    fn type_ii_examples() {
        let xe = TypeIIDescriptor {
            form: TypeIIForm::XE,
            k: 0,
        };
        assert_eq!(make_type_ii(&caff(2), &xe).unwrap().word(), vec![2]);
        let xo = TypeIIDescriptor {
            form: TypeIIForm::XO,
            k: 0,
        };
        assert_eq!(make_type_ii(&caff(3), &xo).unwrap().word(), vec![1, 3]);
        let y1 = TypeIIDescriptor {
            form: TypeIIForm::Y,
            k: 1,
        };
        let e = make_type_ii(&caff(2), &y1).unwrap();
        assert_eq!(e.word(), vec![1, 3, 2]);
        assert_eq!(e.rows(), &[vec![1, 3], vec![2]]);
        assert_eq!(is_type_ii(&e), Some(y1));
        assert_eq!(is_type_ii(&el(4, &[2, 1, 3, 5])), None);
        assert_eq!(is_type_ii(&FcElement::identity(caff(4))), None);
    }

    #[test]
    fn type_ii_row_counts_and_round_trip() {
        for n in 2..=5 {
            let g = caff(n);
            let d = TypeIIDescriptor {
                form: TypeIIForm::XEYXO,
                k: 0,
            };
            let e = make_type_ii(&g, &d).unwrap();
            assert_eq!(e.rows().len(), 2);
            assert_eq!(is_type_ii(&e), Some(d));
            for k in 1..=3 {
                for (form, rows) in [
                    (TypeIIForm::Y, 2 * k),
                    (TypeIIForm::XEY, 2 * k + 1),
                    (TypeIIForm::XEYXO, 2 * k + 2),
                    (TypeIIForm::YXO, 2 * k + 1),
                ] {
                    let d = TypeIIDescriptor { form, k };
                    let e = make_type_ii(&g, &d).unwrap();
                    assert_eq!(e.rows().len(), rows);
                    assert_eq!(is_type_ii(&e), Some(d));
                }
            }
        }
    }

    #[test]
    fn render_examples() {
        assert_eq!(render_heap(&el(3, &[1, 3])), "  1   3");
        assert_eq!(
            render_heap(&el(5, &[3, 2, 1, 2, 5, 4, 6, 5])),
            "      3   5\n    2   4   6\n  1       5\n    2"
        );
        assert_eq!(render_heap(&FcElement::identity(caff(3))), "");
    }
}
