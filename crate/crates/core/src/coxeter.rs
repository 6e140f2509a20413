//! Coxeter graphs of types A, B, B′ and affine C, words in their generators,
//! the fully-commutative test, Cartier–Foata normal forms, descent sets,
//! enumeration of fully commutative elements, and a brute-force signed
//! permutation oracle for the finite groups of type B.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The four families of Coxeter graphs handled by the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphKind {
    /// Type A_n: generators s_1..s_n, every adjacent bond equal to 3.
    A,
    /// Type B_n: generators s_1..s_n with m(s_1, s_2) = 4.
    B,
    /// Type B′_n: generators s_2..s_{n+1} with m(s_n, s_{n+1}) = 4.
    Bprime,
    /// Affine type C̃_n: generators s_1..s_{n+1}, bonds 4 at both ends.
    Caffine,
}

impl GraphKind {
    /// Lower-case name used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            GraphKind::A => "a",
            GraphKind::B => "b",
            GraphKind::Bprime => "bprime",
            GraphKind::Caffine => "caffine",
        }
    }
}

impl FromStr for GraphKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a" => Ok(GraphKind::A),
            "b" => Ok(GraphKind::B),
            "bprime" | "b'" => Ok(GraphKind::Bprime),
            "caffine" | "c" | "affine-c" => Ok(GraphKind::Caffine),
            other => Err(Error::Parse(format!("unknown graph kind '{other}'"))),
        }
    }
}

/// A Coxeter graph together with its rank parameter.
///
/// The rank parameter follows the affine convention throughout: C̃_n has
/// generators s_1..s_{n+1}, B_n has s_1..s_n and B′_n has s_2..s_{n+1}, so
/// that B_n and B′_n are parabolic subgraphs of C̃_n with the same `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoxeterGraph {
    kind: GraphKind,
    n: usize,
}

impl CoxeterGraph {
    /// Builds a graph, rejecting ranks below the supported minimum
    /// (n ≥ 1 for type A, n ≥ 2 otherwise).
    pub fn new(kind: GraphKind, n: usize) -> Result<Self> {
        let min = if kind == GraphKind::A { 1 } else { 2 };
        if n < min {
            return Err(Error::InvalidRank {
                kind: kind.name().to_string(),
                n,
            });
        }
        Ok(CoxeterGraph { kind, n })
    }

    /// Shorthand for `new(GraphKind::Caffine, n)`.
    pub fn affine(n: usize) -> Result<Self> {
        Self::new(GraphKind::Caffine, n)
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The generator indices of the graph, in increasing order.
    pub fn generators(&self) -> RangeInclusive<usize> {
        match self.kind {
            GraphKind::A | GraphKind::B => 1..=self.n,
            GraphKind::Bprime => 2..=self.n + 1,
            GraphKind::Caffine => 1..=self.n + 1,
        }
    }

    /// Number of generators.
    pub fn rank(&self) -> usize {
        self.generators().count()
    }

    pub fn is_generator(&self, i: usize) -> bool {
        self.generators().contains(&i)
    }

    /// Errors unless `i` is a generator of this graph.
    pub fn check_generator(&self, i: usize) -> Result<()> {
        if self.is_generator(i) {
            Ok(())
        } else {
            Err(Error::InvalidGenerator {
                index: i,
                graph: self.to_string(),
            })
        }
    }

    /// Errors unless every letter of `word` is a generator of this graph.
    pub fn check_word(&self, word: &[usize]) -> Result<()> {
        word.iter().try_for_each(|&i| self.check_generator(i))
    }

    /// The bond m(s_i, s_j) ∈ {1, 2, 3, 4}.
    ///
    /// Indices are expected to be generators of the graph; for B and B′ the
    /// value is the affine bond restricted to the generator subset.
    pub fn bond(&self, i: usize, j: usize) -> u8 {
        if i == j {
            return 1;
        }
        if i.abs_diff(j) > 1 {
            return 2;
        }
        if self.kind == GraphKind::A {
            return 3;
        }
        let lo = i.min(j);
        if lo == 1 || lo == self.n {
            4
        } else {
            3
        }
    }

    /// True when s_i and s_j are distinct commuting generators.
    pub fn commutes(&self, i: usize, j: usize) -> bool {
        self.bond(i, j) == 2
    }
}

impl fmt::Display for CoxeterGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GraphKind::A => write!(f, "A{}", self.n),
            GraphKind::B => write!(f, "B{}", self.n),
            GraphKind::Bprime => write!(f, "B'{}", self.n),
            GraphKind::Caffine => write!(f, "C~{}", self.n),
        }
    }
}

/// A word in the generators: a sequence of 1-based generator indices.
pub type Word = Vec<usize>;

/// Parses a whitespace-separated word such as `"1 3 2 1"`.
pub fn parse_word(text: &str) -> Result<Word> {
    text.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| Error::Parse(format!("invalid generator index '{tok}'")))
        })
        .collect()
}

/// Formats a word as whitespace-separated indices.
pub fn format_word(word: &[usize]) -> String {
    word.iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Strict precedence relation of the heap of a word, transitively closed:
/// `reach[p][q]` holds when position p lies above position q.
pub(crate) fn word_order(graph: &CoxeterGraph, word: &[usize]) -> Vec<Vec<bool>> {
    let len = word.len();
    let mut reach = vec![vec![false; len]; len];
    for q in 0..len {
        for p in (0..q).rev() {
            reach[p][q] =
                !graph.commutes(word[p], word[q]) || (p + 1..q).any(|r| reach[p][r] && reach[r][q]);
        }
    }
    reach
}

/// True iff `word` is reduced and fully commutative: it has no two equal
/// letters separated only by commuting letters, and its heap has no convex
/// chain s t s with m(s,t) = 3 or s t s t with m(s,t) = 4.
pub fn is_fc_reduced(graph: &CoxeterGraph, word: &[usize]) -> Result<bool> {
    graph.check_word(word)?;
    Ok(fc_reduced_unchecked(graph, word))
}

pub(crate) fn fc_reduced_unchecked(graph: &CoxeterGraph, word: &[usize]) -> bool {
    let len = word.len();
    let reach = word_order(graph, word);
    for p in 0..len {
        for q in p + 1..len {
            if !reach[p][q] {
                continue;
            }
            let interval: Vec<usize> = (p..=q)
                .filter(|&r| (r == p || reach[p][r]) && (r == q || reach[r][q]))
                .collect();
            let s = word[p];
            if interval.len() == 2 && word[q] == s {
                return false;
            }
            if interval.len() < 3 {
                continue;
            }
            let t = word[interval[1]];
            let m = graph.bond(s, t) as usize;
            if m < 3 || interval.len() != m {
                continue;
            }
            let is_chain = interval.windows(2).all(|w| reach[w[0]][w[1]]);
            let alternates = interval
                .iter()
                .enumerate()
                .all(|(k, &r)| word[r] == if k % 2 == 0 { s } else { t });
            if is_chain && alternates {
                return false;
            }
        }
    }
    true
}

/// A fully commutative element stored in canonical (Cartier–Foata) form.
///
/// Row 1 is the left descent set; every later letter sits as high as the
/// heap allows. Rows are strictly increasing. The identity has no rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FcElement {
    graph: CoxeterGraph,
    rows: Vec<Vec<usize>>,
}

impl FcElement {
    /// The identity element of `graph`.
    pub fn identity(graph: CoxeterGraph) -> Self {
        FcElement {
            graph,
            rows: Vec::new(),
        }
    }

    /// Canonical form of an fc-reduced word; see [`canonical_form`].
    pub fn from_word(graph: CoxeterGraph, word: &[usize]) -> Result<Self> {
        canonical_form(&graph, word)
    }

    /// Parses canonical row text such as `"3 5|2 4 6|1 5|2"` (empty text is
    /// the identity). The rows are re-canonicalized, so any fc-reduced word
    /// split at arbitrary `|` marks is accepted.
    pub fn parse_rows(graph: CoxeterGraph, text: &str) -> Result<Self> {
        let word: Vec<usize> = text
            .split('|')
            .map(parse_word)
            .collect::<Result<Vec<_>>>()?
            .concat();
        canonical_form(&graph, &word)
    }

    pub fn graph(&self) -> CoxeterGraph {
        self.graph
    }

    /// The canonical rows r_1, r_2, ...
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// The canonical reduced word: the rows concatenated top to bottom.
    pub fn word(&self) -> Word {
        self.rows.concat()
    }

    /// Coxeter length l(w).
    #[allow(clippy::len_without_is_empty)] // `is_identity` plays that role
    pub fn len(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.rows.is_empty()
    }

    /// supp(w): the generators occurring in any reduced word.
    pub fn support(&self) -> BTreeSet<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// 𝓛(w), the first canonical row.
    pub fn left_descents(&self) -> BTreeSet<usize> {
        self.rows.first().into_iter().flatten().copied().collect()
    }

    /// 𝓡(w), the first canonical row of the inverse.
    pub fn right_descents(&self) -> BTreeSet<usize> {
        self.inverse().left_descents()
    }

    /// w⁻¹, whose reduced words are the reversals of those of w.
    pub fn inverse(&self) -> FcElement {
        let mut word = self.word();
        word.reverse();
        canonical_unchecked(self.graph, &word)
    }

    /// s·w when that product is reduced and fully commutative.
    pub fn left_extend(&self, s: usize) -> Option<FcElement> {
        let mut word = Vec::with_capacity(self.len() + 1);
        word.push(s);
        word.extend(self.word());
        fc_reduced_unchecked(&self.graph, &word).then(|| canonical_unchecked(self.graph, &word))
    }

    /// w·s when that product is reduced and fully commutative.
    pub fn right_extend(&self, s: usize) -> Option<FcElement> {
        let mut word = self.word();
        word.push(s);
        fc_reduced_unchecked(&self.graph, &word).then(|| canonical_unchecked(self.graph, &word))
    }

    /// s·w for s ∈ 𝓛(w) (deleting s from the first row).
    pub fn left_remove(&self, s: usize) -> Option<FcElement> {
        if !self.left_descents().contains(&s) {
            return None;
        }
        let mut word = self.word();
        let pos = word.iter().position(|&x| x == s)?;
        word.remove(pos);
        Some(canonical_unchecked(self.graph, &word))
    }

    /// w·s for s ∈ 𝓡(w).
    pub fn right_remove(&self, s: usize) -> Option<FcElement> {
        self.inverse().left_remove(s).map(|e| e.inverse())
    }
}

impl PartialOrd for FcElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FcElement {
    /// Graph first, then length, then the canonical word lexicographically.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.graph
            .cmp(&other.graph)
            .then(self.len().cmp(&other.len()))
            .then_with(|| self.word().cmp(&other.word()))
    }
}

impl fmt::Display for FcElement {
    /// Canonical-form text: rows joined by `|`, letters by spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(|r| format_word(r)).collect();
        write!(f, "{}", rows.join("|"))
    }
}

/// Cartier–Foata normal form of an fc-reduced word.
pub fn canonical_form(graph: &CoxeterGraph, word: &[usize]) -> Result<FcElement> {
    if !is_fc_reduced(graph, word)? {
        return Err(Error::NotFullyCommutative {
            word: format_word(word),
        });
    }
    Ok(canonical_unchecked(*graph, word))
}

/// Row decomposition of a word without checking full commutativity.
pub(crate) fn canonical_unchecked(graph: CoxeterGraph, word: &[usize]) -> FcElement {
    let mut depth = vec![0usize; word.len()];
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for q in 0..word.len() {
        let d = (0..q)
            .filter(|&p| !graph.commutes(word[p], word[q]))
            .map(|p| depth[p] + 1)
            .max()
            .unwrap_or(0);
        depth[q] = d;
        if rows.len() <= d {
            rows.resize(d + 1, Vec::new());
        }
        rows[d].push(word[q]);
    }
    for row in &mut rows {
        row.sort_unstable();
    }
    FcElement { graph, rows }
}

/// Which side of an element an operation acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

/// 𝓛(w) or 𝓡(w).
pub fn descents(e: &FcElement, side: Side) -> BTreeSet<usize> {
    match side {
        Side::Left => e.left_descents(),
        Side::Right => e.right_descents(),
    }
}

/// All fully commutative elements of length ≤ `max_len`, each exactly once,
/// ordered by length and then lexicographically by canonical word.
///
/// Breadth-first by length; every element of length k+1 is reached from one
/// of length k by extending on the left or on the right.
pub fn enumerate_fc(graph: &CoxeterGraph, max_len: usize) -> Vec<FcElement> {
    let mut all: Vec<FcElement> = vec![FcElement::identity(*graph)];
    let mut frontier: BTreeSet<FcElement> = all.iter().cloned().collect();
    for _ in 0..max_len {
        let mut next = BTreeSet::new();
        for e in &frontier {
            for s in graph.generators() {
                if let Some(x) = e.left_extend(s) {
                    next.insert(x);
                }
                if let Some(x) = e.right_extend(s) {
                    next.insert(x);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all
}

/// The hyperoctahedral group W(B_n) as signed permutations with Coxeter
/// lengths obtained by breadth-first search of the Cayley graph.
///
/// A signed permutation is stored as the image sequence σ(1..n). Right
/// multiplication by s_1 negates position 1; by s_i (i ≥ 2) it swaps
/// positions i−1 and i.
#[derive(Debug, Clone)]
pub struct SignedPermTable {
    n: usize,
    lengths: HashMap<Vec<i8>, usize>,
}

impl SignedPermTable {
    /// Largest rank for which the table is built (2^6·6! = 46080 elements).
    pub const MAX_RANK: usize = 6;

    pub fn new(n: usize) -> Result<Self> {
        if !(1..=Self::MAX_RANK).contains(&n) {
            return Err(Error::Unsupported(format!(
                "signed permutation table for n={n} (supported 1..={})",
                Self::MAX_RANK
            )));
        }
        let identity: Vec<i8> = (1..=n as i8).collect();
        let mut lengths = HashMap::new();
        lengths.insert(identity.clone(), 0);
        let mut queue = VecDeque::from([identity]);
        while let Some(sigma) = queue.pop_front() {
            let l = lengths[&sigma];
            for s in 1..=n {
                let next = Self::right_mul(&sigma, s);
                if !lengths.contains_key(&next) {
                    lengths.insert(next.clone(), l + 1);
                    queue.push_back(next);
                }
            }
        }
        Ok(SignedPermTable { n, lengths })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.lengths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lengths.is_empty()
    }

    /// The identity image sequence.
    pub fn identity(&self) -> Vec<i8> {
        (1..=self.n as i8).collect()
    }

    /// Coxeter length of an element.
    pub fn length(&self, sigma: &[i8]) -> Option<usize> {
        self.lengths.get(sigma).copied()
    }

    /// Iterates over (element, length) pairs in unspecified order.
    pub fn iter(&self) -> impl Iterator<Item = (&Vec<i8>, &usize)> {
        self.lengths.iter()
    }

    /// σ·s_i, acting on positions.
    pub fn right_mul(sigma: &[i8], s: usize) -> Vec<i8> {
        let mut out = sigma.to_vec();
        if s == 1 {
            out[0] = -out[0];
        } else {
            out.swap(s - 2, s - 1);
        }
        out
    }

    /// s_i·σ, acting on values.
    pub fn left_mul(s: usize, sigma: &[i8]) -> Vec<i8> {
        sigma
            .iter()
            .map(|&v| {
                let a = v.unsigned_abs() as usize;
                if s == 1 {
                    if a == 1 {
                        -v
                    } else {
                        v
                    }
                } else if a == s - 1 {
                    v.signum() * s as i8
                } else if a == s {
                    v.signum() * (s as i8 - 1)
                } else {
                    v
                }
            })
            .collect()
    }
}

/// Length-by-length counts of fully commutative elements of W(B_n),
/// computed by brute force over [`SignedPermTable`].
///
/// An element fails to be fully commutative exactly when one of its reduced
/// expressions contains an alternating factor of length m(s,t) ≥ 3. The
/// search peels left descents one at a time (exploring every reduced prefix)
/// and tests at each stage whether the remaining element has a reduced
/// expression beginning with such a braid.
pub fn bn_oracle_counts(n: usize, max_len: usize) -> Result<BTreeMap<usize, usize>> {
    if !(2..=4).contains(&n) {
        return Err(Error::Unsupported(format!(
            "type B oracle for n={n} (supported 2..=4)"
        )));
    }
    let graph = CoxeterGraph::new(GraphKind::B, n)?;
    let table = SignedPermTable::new(n)?;
    let mut elements: Vec<(&Vec<i8>, usize)> = table.iter().map(|(k, &v)| (k, v)).collect();
    elements.sort_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(b.0)));

    let mut braids: Vec<Vec<usize>> = Vec::new();
    for s in 1..=n {
        for t in 1..=n {
            let m = graph.bond(s, t) as usize;
            if s != t && m >= 3 {
                braids.push((0..m).map(|k| if k % 2 == 0 { s } else { t }).collect());
            }
        }
    }

    let mut not_fc: HashMap<Vec<i8>, bool> = HashMap::new();
    let mut counts = BTreeMap::new();
    for (sigma, l) in elements {
        let starts_with_braid = braids.iter().any(|b| {
            let mut u = sigma.clone();
            for &x in b {
                u = SignedPermTable::left_mul(x, &u);
            }
            l >= b.len() && table.length(&u) == Some(l - b.len())
        });
        let bad = starts_with_braid
            || (1..=n).any(|s| {
                let u = SignedPermTable::left_mul(s, sigma);
                l >= 1 && table.length(&u) == Some(l - 1) && not_fc[&u]
            });
        not_fc.insert(sigma.clone(), bad);
        if !bad && l <= max_len {
            *counts.entry(l).or_insert(0) += 1;
        }
    }
    Ok(counts)
}
