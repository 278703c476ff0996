//! Words over `X ∪ X⁻¹` and free reduction.
//!
//! Text encoding: `a`..`z` are the generators `x_1`..`x_26`, `A`..`Z` their
//! inverses, and the empty word is written `1`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Pow};

use crate::error::{Error, Result};

/// A generator `x_i` or its inverse.
///
/// The derived order is `x_1 < x_1⁻¹ < x_2 < x_2⁻¹ < …`, which is the order
/// used for every canonical traversal and serialization in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    index: u32,
    inverse: bool,
}

impl Letter {
    /// `index` is 1-based.
    pub fn new(index: u32, inverse: bool) -> Self {
        assert!(index >= 1, "letter indices are 1-based");
        Self { index, inverse }
    }

    pub fn generator(index: u32) -> Self {
        Self::new(index, false)
    }

    pub fn index(self) -> u32 {
        self.index
    }

    pub fn is_inverse(self) -> bool {
        self.inverse
    }

    pub fn inverse(self) -> Self {
        Self { index: self.index, inverse: !self.inverse }
    }

    /// Position in the canonical letter order, starting at 0.
    pub fn ordinal(self) -> u32 {
        2 * (self.index - 1) + u32::from(self.inverse)
    }

    pub fn check_rank(self, rank: u32) -> Result<()> {
        if self.index > rank {
            return Err(Error::LetterOutOfRange { index: self.index, rank });
        }
        Ok(())
    }

    /// All `2·rank` letters in canonical order.
    pub fn alphabet(rank: u32) -> impl Iterator<Item = Letter> {
        (1..=rank).flat_map(|i| [Letter::new(i, false), Letter::new(i, true)])
    }

    pub fn from_char(c: char) -> Result<Self> {
        match c {
            'a'..='z' => Ok(Letter::new(c as u32 - 'a' as u32 + 1, false)),
            'A'..='Z' => Ok(Letter::new(c as u32 - 'A' as u32 + 1, true)),
            _ => Err(Error::Parse { input: c.to_string(), reason: "not a letter".into() }),
        }
    }

    pub fn to_char(self) -> Option<char> {
        if self.index > 26 {
            return None;
        }
        let base = if self.inverse { b'A' } else { b'a' };
        Some((base + (self.index - 1) as u8) as char)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_char() {
            Some(c) => write!(f, "{c}"),
            None if self.inverse => write!(f, "x{}^-1", self.index),
            None => write!(f, "x{}", self.index),
        }
    }
}

/// Parses the text encoding into raw (unreduced) letters. `1` and the empty
/// string both denote the empty word.
pub fn parse_letters(text: &str) -> Result<Vec<Letter>> {
    let text = text.trim();
    if text == "1" || text.is_empty() {
        return Ok(Vec::new());
    }
    text.chars()
        .map(|c| {
            Letter::from_char(c).map_err(|_| Error::Parse {
                input: text.to_string(),
                reason: format!("unexpected character {c:?}"),
            })
        })
        .collect()
}

/// Text encoding of a raw letter sequence.
pub fn format_letters(letters: &[Letter]) -> String {
    if letters.is_empty() {
        return "1".to_string();
    }
    letters.iter().map(ToString::to_string).collect()
}

/// Inverse of a raw word: reversed, with every letter inverted.
pub fn inverse_letters(letters: &[Letter]) -> Vec<Letter> {
    letters.iter().rev().map(|l| l.inverse()).collect()
}

/// A freely reduced word over an alphabet of fixed rank; an element of the
/// free group `FG(X)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ReducedWord {
    rank: u32,
    letters: Vec<Letter>,
}

/// Free reduction with a stack. Fails on letters outside the alphabet.
pub fn reduce(rank: u32, word: &[Letter]) -> Result<ReducedWord> {
    let mut out: Vec<Letter> = Vec::with_capacity(word.len());
    for &letter in word {
        letter.check_rank(rank)?;
        if out.last() == Some(&letter.inverse()) {
            out.pop();
        } else {
            out.push(letter);
        }
    }
    Ok(ReducedWord { rank, letters: out })
}

impl ReducedWord {
    pub fn identity(rank: u32) -> Self {
        Self { rank, letters: Vec::new() }
    }

    pub fn parse(rank: u32, text: &str) -> Result<Self> {
        reduce(rank, &parse_letters(text)?)
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn last(&self) -> Option<Letter> {
        self.letters.last().copied()
    }

    /// Right multiplication by a single letter, reduced. The letter must be
    /// within the rank.
    pub fn times(&self, letter: Letter) -> ReducedWord {
        debug_assert!(letter.index() <= self.rank);
        let mut letters = self.letters.clone();
        if letters.last() == Some(&letter.inverse()) {
            letters.pop();
        } else {
            letters.push(letter);
        }
        ReducedWord { rank: self.rank, letters }
    }

    /// Free-group product `reduce(self · other)`.
    pub fn concat(&self, other: &ReducedWord) -> Result<ReducedWord> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { left: self.rank, right: other.rank });
        }
        // Cancellation only happens at the junction.
        let mut cancel = 0;
        while cancel < self.len().min(other.len())
            && self.letters[self.len() - 1 - cancel] == other.letters[cancel].inverse()
        {
            cancel += 1;
        }
        let mut letters = Vec::with_capacity(self.len() + other.len() - 2 * cancel);
        letters.extend_from_slice(&self.letters[..self.len() - cancel]);
        letters.extend_from_slice(&other.letters[cancel..]);
        Ok(ReducedWord { rank: self.rank, letters })
    }

    pub fn inverse(&self) -> ReducedWord {
        ReducedWord { rank: self.rank, letters: inverse_letters(&self.letters) }
    }

    /// The `|w| + 1` prefixes from the empty word up to `w` itself.
    pub fn prefixes(&self) -> Vec<ReducedWord> {
        (0..=self.len())
            .map(|j| ReducedWord { rank: self.rank, letters: self.letters[..j].to_vec() })
            .collect()
    }

    /// The prefix obtained by dropping the last letter, or `None` for the
    /// empty word.
    pub fn parent(&self) -> Option<ReducedWord> {
        if self.is_empty() {
            return None;
        }
        Some(ReducedWord { rank: self.rank, letters: self.letters[..self.len() - 1].to_vec() })
    }

    pub fn is_prefix_of(&self, other: &ReducedWord) -> bool {
        other.letters.starts_with(&self.letters)
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_letters(&self.letters))
    }
}

/// Number of freely reduced words of length `t`: `1` for `t = 0`, otherwise
/// `(p+1)·p^(t-1)` with `p = 2·rank - 1`.
pub fn count_reduced_words(rank: u32, t: u32) -> BigUint {
    if t == 0 {
        return BigUint::one();
    }
    let p = BigUint::from(2 * rank as u64 - 1);
    (&p + 1u32) * Pow::pow(&p, t - 1)
}
