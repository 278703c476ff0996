//! The Munn-tree model of the free inverse monoid.
//!
//! An element is a pair `(T, g)`: `T` is a finite subtree of the Cayley graph
//! of the free group containing `1`, stored as its (prefix-closed) vertex set
//! of reduced words, and `g ∈ T` is the designated vertex. The product is
//! `(T1 ∪ g1·T2, g1·g2)`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::words::{parse_letters, Letter, ReducedWord};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MunnTree {
    rank: u32,
    vertices: BTreeSet<ReducedWord>,
    designated: ReducedWord,
}

fn check_rank(rank: u32) -> Result<()> {
    if rank == 0 {
        return Err(Error::InvalidRank { rank, min: 1 });
    }
    Ok(())
}

impl MunnTree {
    /// The identity element `({1}, 1)`.
    pub fn identity(rank: u32) -> Self {
        let one = ReducedWord::identity(rank);
        Self { rank, vertices: BTreeSet::from([one.clone()]), designated: one }
    }

    /// Builds a tree from parts, checking every structural invariant.
    pub fn new(
        rank: u32,
        vertices: impl IntoIterator<Item = ReducedWord>,
        designated: ReducedWord,
    ) -> Result<Self> {
        check_rank(rank)?;
        let vertices: BTreeSet<ReducedWord> = vertices.into_iter().collect();
        for v in vertices.iter().chain(std::iter::once(&designated)) {
            if v.rank() != rank {
                return Err(Error::RankMismatch { left: rank, right: v.rank() });
            }
        }
        let tree = Self { rank, vertices, designated };
        if !tree.vertices.contains(&ReducedWord::identity(rank)) {
            return Err(Error::InvalidTree("vertex set does not contain 1".into()));
        }
        if !tree.vertices.contains(&tree.designated) {
            return Err(Error::InvalidTree(format!(
                "designated vertex {} is not a vertex",
                tree.designated
            )));
        }
        if !tree.is_prefix_closed() {
            return Err(Error::InvalidTree("vertex set is not prefix-closed".into()));
        }
        Ok(tree)
    }

    /// The Munn tree of a word: the subtree spanned by the path the word
    /// labels from `1`, with the path's endpoint designated.
    pub fn eval(rank: u32, word: &[Letter]) -> Result<Self> {
        check_rank(rank)?;
        let mut tree = Self::identity(rank);
        for &letter in word {
            letter.check_rank(rank)?;
            tree.step(letter);
        }
        Ok(tree)
    }

    /// [`MunnTree::eval`] on the text encoding.
    pub fn eval_text(rank: u32, word: &str) -> Result<Self> {
        Self::eval(rank, &parse_letters(word)?)
    }

    fn step(&mut self, letter: Letter) {
        let next = self.designated.times(letter);
        if !self.vertices.contains(&next) {
            self.vertices.insert(next.clone());
        }
        self.designated = next;
    }

    /// Right multiplication by a single generator or inverse generator.
    pub fn times_letter(&self, letter: Letter) -> Result<Self> {
        letter.check_rank(self.rank)?;
        let mut out = self.clone();
        out.step(letter);
        Ok(out)
    }

    pub fn multiply(&self, rhs: &MunnTree) -> Result<Self> {
        if self.rank != rhs.rank {
            return Err(Error::RankMismatch { left: self.rank, right: rhs.rank });
        }
        let mut vertices = self.vertices.clone();
        for v in &rhs.vertices {
            vertices.insert(self.designated.concat(v)?);
        }
        let designated = self.designated.concat(&rhs.designated)?;
        let out = Self { rank: self.rank, vertices, designated };
        debug_assert!(out.is_prefix_closed());
        Ok(out)
    }

    /// The inverse `(g⁻¹·T, g⁻¹)`.
    pub fn invert(&self) -> Self {
        let g_inv = self.designated.inverse();
        let vertices = self
            .vertices
            .iter()
            .map(|v| g_inv.concat(v).expect("same rank"))
            .collect();
        let out = Self { rank: self.rank, vertices, designated: g_inv };
        debug_assert!(out.is_prefix_closed());
        out
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn vertices(&self) -> &BTreeSet<ReducedWord> {
        &self.vertices
    }

    pub fn designated(&self) -> &ReducedWord {
        &self.designated
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_idempotent(&self) -> bool {
        self.designated.is_empty()
    }

    /// `(t, k)`: edges on the trunk from `1` to `g`, and all other edges.
    pub fn trunk_branch_counts(&self) -> (usize, usize) {
        let t = self.designated.len();
        (t, self.edge_count() - t)
    }

    /// Length of the shortest word representing this element, `t + 2k`.
    pub fn length(&self) -> usize {
        let (t, k) = self.trunk_branch_counts();
        t + 2 * k
    }

    pub fn is_prefix_closed(&self) -> bool {
        self.vertices
            .iter()
            .all(|v| v.parent().is_none_or(|parent| self.vertices.contains(&parent)))
    }

    /// A shortest word evaluating to this element.
    ///
    /// At each trunk vertex in turn, the branch subtrees hanging there are
    /// traversed depth-first (children in letter order, returning to the
    /// trunk vertex), then the walk advances one trunk edge.
    pub fn geodesic_word(&self) -> Vec<Letter> {
        let trunk = self.designated.prefixes();
        let on_trunk: BTreeSet<&ReducedWord> = trunk.iter().collect();
        let mut word = Vec::with_capacity(self.length());
        for (j, vertex) in trunk.iter().enumerate() {
            for letter in Letter::alphabet(self.rank) {
                let child = vertex.times(letter);
                if self.vertices.contains(&child) && !on_trunk.contains(&child) {
                    word.push(letter);
                    self.walk_branch(&child, vertex, &mut word);
                    word.push(letter.inverse());
                }
            }
            if let Some(&next) = self.designated.letters().get(j) {
                word.push(next);
            }
        }
        debug_assert_eq!(word.len(), self.length());
        word
    }

    fn walk_branch(&self, at: &ReducedWord, from: &ReducedWord, word: &mut Vec<Letter>) {
        for letter in Letter::alphabet(self.rank) {
            let child = at.times(letter);
            if &child != from && self.vertices.contains(&child) {
                word.push(letter);
                self.walk_branch(&child, at, word);
                word.push(letter.inverse());
            }
        }
    }

    /// Byte key, injective on trees of a fixed rank.
    ///
    /// The vertex set in sorted order is a depth-first preorder, so it is
    /// fixed by the `(depth, last letter)` pairs of the non-root vertices.
    /// Those are written as LEB128 varints, then a zero byte, then the
    /// designated vertex's letter ordinals.
    pub fn canonical_key(&self) -> Vec<u8> {
        let mut key = Vec::with_capacity(2 * self.vertices.len() + self.designated.len() + 1);
        for v in self.vertices.iter().skip(1) {
            push_varint(&mut key, v.len() as u64);
            push_varint(&mut key, u64::from(v.last().expect("non-root").ordinal()));
        }
        key.push(0);
        for letter in self.designated.letters() {
            push_varint(&mut key, u64::from(letter.ordinal()));
        }
        key
    }

    /// Parses the canonical text form `{v1,v2,...}|g`.
    pub fn parse(rank: u32, text: &str) -> Result<Self> {
        let bad = |reason: &str| Error::Parse { input: text.to_string(), reason: reason.into() };
        let (set, g) = text.trim().split_once('|').ok_or_else(|| bad("missing '|'"))?;
        let inner = set
            .trim()
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .ok_or_else(|| bad("vertex set must be braced"))?;
        let vertices = inner
            .split(',')
            .map(|v| ReducedWord::parse(rank, v))
            .collect::<Result<Vec<_>>>()?;
        Self::new(rank, vertices, ReducedWord::parse(rank, g)?)
    }
}

fn push_varint(out: &mut Vec<u8>, mut value: u64) {
    loop {
        let byte = (value & 0x7f) as u8;
        value >>= 7;
        if value == 0 {
            out.push(byte);
            return;
        }
        out.push(byte | 0x80);
    }
}

impl fmt::Display for MunnTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}|{}", self.designated)
    }
}
