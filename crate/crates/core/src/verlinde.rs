//! The decoration algebra 𝒱: the free product of two copies of the rank-3
//! Verlinde algebra, one generated by the closed decorations (•, ▲) and one
//! by the open decorations (○, △). Words reduce to alternating closed/open
//! products times a power of two.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A single decoration symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Decoration {
    /// •, ASCII `b`.
    ClosedDot,
    /// ▲, ASCII `B`.
    ClosedTri,
    /// ○, ASCII `o`.
    OpenDot,
    /// △, ASCII `O`.
    OpenTri,
}

/// Which factor of the free product a decoration belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Closed,
    Open,
}

impl Decoration {
    pub fn family(self) -> Family {
        match self {
            Decoration::ClosedDot | Decoration::ClosedTri => Family::Closed,
            Decoration::OpenDot | Decoration::OpenTri => Family::Open,
        }
    }

    /// True for • and ○.
    pub fn is_dot(self) -> bool {
        matches!(self, Decoration::ClosedDot | Decoration::OpenDot)
    }

    pub fn dot(family: Family) -> Decoration {
        match family {
            Family::Closed => Decoration::ClosedDot,
            Family::Open => Decoration::OpenDot,
        }
    }

    pub fn tri(family: Family) -> Decoration {
        match family {
            Family::Closed => Decoration::ClosedTri,
            Family::Open => Decoration::OpenTri,
        }
    }

    pub fn ascii(self) -> char {
        match self {
            Decoration::ClosedDot => 'b',
            Decoration::ClosedTri => 'B',
            Decoration::OpenDot => 'o',
            Decoration::OpenTri => 'O',
        }
    }

    pub fn from_ascii(c: char) -> Option<Decoration> {
        match c {
            'b' => Some(Decoration::ClosedDot),
            'B' => Some(Decoration::ClosedTri),
            'o' => Some(Decoration::OpenDot),
            'O' => Some(Decoration::OpenTri),
            _ => None,
        }
    }

    pub fn unicode(self) -> char {
        match self {
            Decoration::ClosedDot => '•',
            Decoration::ClosedTri => '▲',
            Decoration::OpenDot => '○',
            Decoration::OpenTri => '△',
        }
    }
}

/// Product of two same-family decorations: (two-exponent, symbol).
///
/// •• = ▲, •▲ = ▲• = 2•, ▲▲ = 2▲, and likewise for the open family.
pub fn combine(a: Decoration, b: Decoration) -> (u32, Decoration) {
    debug_assert_eq!(a.family(), b.family());
    let f = a.family();
    match (a.is_dot(), b.is_dot()) {
        (true, true) => (0, Decoration::tri(f)),
        (true, false) | (false, true) => (1, Decoration::dot(f)),
        (false, false) => (1, Decoration::tri(f)),
    }
}

/// A raw, possibly non-normal word of decorations.
pub type DecoWord = Vec<Decoration>;

/// Parses an ASCII decoration word such as `bBo`.
pub fn parse_deco_word(text: &str) -> Result<DecoWord> {
    text.chars()
        .map(|c| {
            Decoration::from_ascii(c)
                .ok_or_else(|| Error::Parse(format!("decoration '{c}' in '{text}'")))
        })
        .collect()
}

/// ASCII rendering of a decoration word.
pub fn format_deco_word(word: &[Decoration]) -> String {
    word.iter().map(|d| d.ascii()).collect()
}

/// Unicode rendering of a decoration word.
pub fn unicode_deco_word(word: &[Decoration]) -> String {
    word.iter().map(|d| d.unicode()).collect()
}

/// A normal element 2^two_exp · word, with `word` alternating between
/// families.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalDeco {
    pub two_exp: u32,
    pub word: DecoWord,
}

impl NormalDeco {
    pub fn is_alternating(&self) -> bool {
        is_alternating(&self.word)
    }
}

impl fmt::Display for NormalDeco {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.two_exp > 0 {
            write!(f, "2^{} ", self.two_exp)?;
        }
        f.write_str(&format_deco_word(&self.word))
    }
}

impl FromStr for NormalDeco {
    type Err = Error;

    /// Parses a raw ASCII word and normalizes it.
    fn from_str(text: &str) -> Result<NormalDeco> {
        Ok(deco_normal_form(&parse_deco_word(text)?))
    }
}

/// True when no two adjacent symbols share a family.
pub fn is_alternating(word: &[Decoration]) -> bool {
    word.windows(2).all(|w| w[0].family() != w[1].family())
}

/// Positions `i` where `word[i]` and `word[i+1]` can be rewritten.
pub fn redexes(word: &[Decoration]) -> Vec<usize> {
    (0..word.len().saturating_sub(1))
        .filter(|&i| word[i].family() == word[i + 1].family())
        .collect()
}

/// Rewrites the pair at position `i`, returning the produced power of 2.
pub fn rewrite_at(word: &mut DecoWord, i: usize) -> u32 {
    let (e, d) = combine(word[i], word[i + 1]);
    word[i] = d;
    word.remove(i + 1);
    e
}

/// Normal form by a single left-to-right stack pass. Because the stack is
/// always alternating, each incoming symbol combines with at most one.
pub fn deco_normal_form(word: &[Decoration]) -> NormalDeco {
    let mut out = NormalDeco::default();
    push_all(&mut out, word);
    out
}

fn push_all(acc: &mut NormalDeco, word: &[Decoration]) {
    for &d in word {
        match acc.word.last_mut() {
            Some(top) if top.family() == d.family() => {
                let (e, c) = combine(*top, d);
                *top = c;
                acc.two_exp += e;
            }
            _ => acc.word.push(d),
        }
    }
}

/// Product in 𝒱 of two normal elements.
pub fn deco_concat(a: &NormalDeco, b: &NormalDeco) -> NormalDeco {
    let mut out = a.clone();
    out.two_exp += b.two_exp;
    push_all(&mut out, &b.word);
    out
}

/// The reversed word, which is still normal.
pub fn deco_reverse(a: &NormalDeco) -> NormalDeco {
    NormalDeco {
        two_exp: a.two_exp,
        word: a.word.iter().rev().copied().collect(),
    }
}
