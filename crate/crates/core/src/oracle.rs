//! Brute-force enumerators used as ground truth for the closed forms.
//!
//! Nothing in this module calls into [`crate::counting`].

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::munn::MunnTree;
use crate::words::Letter;

/// Default ceiling on `(2·rank)^K`, the number of raw words of the largest
/// radius explored.
pub const DEFAULT_WORK_BUDGET: u64 = 10_000_000;

/// Raw words of length `radius`, saturating.
fn words_at(rank: u32, radius: usize) -> u64 {
    (2 * u64::from(rank)).saturating_pow(radius as u32)
}

/// Element counts by length and by `(t, k)`, found by breadth-first search
/// of the right Cayley graph of the monoid from the identity.
///
/// An element's length is the first level at which its canonical key
/// appears; keys are deduplicated across all levels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub rank: u32,
    pub requested: usize,
    /// `levels[K]` maps `(t, k)` to the number of elements of length `K`
    /// with that trunk/branch split.
    pub levels: Vec<BTreeMap<(usize, usize), u64>>,
}

impl Census {
    /// Largest radius whose level is complete.
    pub fn completed(&self) -> Option<usize> {
        self.levels.len().checked_sub(1)
    }

    pub fn is_complete(&self) -> bool {
        self.levels.len() == self.requested + 1
    }

    pub fn sphere(&self, radius: usize) -> Option<u64> {
        self.levels.get(radius).map(|level| level.values().sum())
    }

    pub fn spheres(&self) -> Vec<BigUint> {
        self.levels.iter().map(|level| BigUint::from(level.values().sum::<u64>())).collect()
    }

    pub fn munn_trees(&self, t: usize, k: usize) -> Option<u64> {
        self.levels.get(t + 2 * k).map(|level| level.get(&(t, k)).copied().unwrap_or(0))
    }

    pub fn idempotents(&self, radius: usize) -> Option<u64> {
        self.levels.get(radius).map(|level| {
            level.iter().filter(|((t, _), _)| *t == 0).map(|(_, n)| n).sum()
        })
    }
}

/// Runs the breadth-first search up to `max_radius`, stopping early (with an
/// incomplete census) once `(2·rank)^K` would exceed `budget`.
pub fn census(rank: u32, max_radius: usize, budget: u64) -> Result<Census> {
    if rank == 0 {
        return Err(Error::InvalidRank { rank, min: 1 });
    }
    let alphabet: Vec<Letter> = Letter::alphabet(rank).collect();
    let identity = MunnTree::identity(rank);
    let mut seen: HashSet<Vec<u8>> = HashSet::from([identity.canonical_key()]);
    let mut frontier = vec![identity];
    let mut levels = vec![BTreeMap::from([((0, 0), 1)])];

    for radius in 1..=max_radius {
        if words_at(rank, radius) > budget {
            break;
        }
        let mut next = Vec::new();
        let mut level = BTreeMap::new();
        for element in &frontier {
            for &letter in &alphabet {
                let candidate = element.times_letter(letter)?;
                if seen.insert(candidate.canonical_key()) {
                    *level.entry(candidate.trunk_branch_counts()).or_insert(0) += 1;
                    next.push(candidate);
                }
            }
        }
        levels.push(level);
        frontier = next;
    }
    Ok(Census { rank, requested: max_radius, levels })
}

fn complete(census: Census, budget: u64) -> Result<Census> {
    if census.is_complete() {
        Ok(census)
    } else {
        Err(Error::BudgetExceeded { budget, completed: census.completed() })
    }
}

/// `[|S(0)|, …, |S(K_max)|]` by breadth-first search.
pub fn enumerate_sphere_sizes(rank: u32, max_radius: usize, budget: u64) -> Result<Vec<BigUint>> {
    Ok(complete(census(rank, max_radius, budget)?, budget)?.spheres())
}

/// `|M(t,k)|` by grouping the search results by trunk/branch counts.
pub fn enumerate_munn_trees(rank: u32, t: usize, k: usize, budget: u64) -> Result<BigUint> {
    let census = complete(census(rank, t + 2 * k, budget)?, budget)?;
    Ok(BigUint::from(census.munn_trees(t, k).expect("complete census")))
}

type DiagramVisitor<'a> = dyn FnMut(&[Vec<u32>]) + 'a;

/// A vertex of the infinite tree `T_{p,q}` created during enumeration: its
/// parent's arena id and which child slot of the parent it occupies.
#[derive(Debug, Clone, Copy)]
struct DiagramNode {
    parent: u32,
    slot: u32,
}

struct DiagramWalk<'a> {
    p: u32,
    arena: Vec<DiagramNode>,
    chosen: Vec<u32>,
    visited: u64,
    budget: u64,
    visit: Option<&'a mut DiagramVisitor<'a>>,
}

impl DiagramWalk<'_> {
    /// Slot sequence from the root down to arena node `id`.
    fn path(&self, mut id: u32) -> Vec<u32> {
        let mut path = Vec::new();
        while id != 0 {
            let node = self.arena[id as usize];
            path.push(node.slot);
            id = node.parent;
        }
        path.reverse();
        path
    }

    /// Each subtree is produced once: a node can only be added after every
    /// earlier candidate in the list has been passed over for good.
    fn extend(&mut self, candidates: &[u32], remaining: u64) -> Result<()> {
        if remaining == 0 {
            self.visited += 1;
            if self.visited > self.budget {
                return Err(Error::BudgetExceeded { budget: self.budget, completed: None });
            }
            if self.visit.is_some() {
                let paths: Vec<Vec<u32>> = self.chosen.iter().map(|&id| self.path(id)).collect();
                if let Some(visit) = self.visit.as_mut() {
                    visit(&paths);
                }
            }
            return Ok(());
        }
        for (i, &node) in candidates.iter().enumerate() {
            let mark = self.arena.len();
            let mut next: Vec<u32> = candidates[i + 1..].to_vec();
            for slot in 0..self.p {
                next.push(self.arena.len() as u32);
                self.arena.push(DiagramNode { parent: node, slot });
            }
            self.chosen.push(node);
            self.extend(&next, remaining - 1)?;
            self.chosen.pop();
            self.arena.truncate(mark);
        }
        Ok(())
    }
}

fn walk_diagrams<'a>(
    p: u32,
    q: u32,
    k: u64,
    budget: u64,
    visit: Option<&'a mut DiagramVisitor<'a>>,
) -> Result<u64> {
    assert!(p >= 1 && q >= 1, "branching must be at least 1");
    let mut walk = DiagramWalk {
        p,
        arena: vec![DiagramNode { parent: 0, slot: 0 }],
        chosen: Vec::new(),
        visited: 0,
        budget,
        visit,
    };
    for slot in 0..q {
        walk.arena.push(DiagramNode { parent: 0, slot });
    }
    let root_children: Vec<u32> = (1..=q).collect();
    walk.extend(&root_children, k)?;
    Ok(walk.visited)
}

/// Calls `visit` once for every rooted subtree of `T_{p,q}` with exactly `k`
/// edges, where the root has `q` child slots and every other vertex `p`.
/// Children are distinguishable, so diagrams are subgraphs, not isomorphism
/// classes. A diagram is handed over as the list of its non-root vertices,
/// each given by its slot sequence from the root. Returns the count.
pub fn for_each_tree_diagram(
    p: u32,
    q: u32,
    k: u64,
    budget: u64,
    mut visit: impl FnMut(&[Vec<u32>]),
) -> Result<u64> {
    walk_diagrams(p, q, k, budget, Some(&mut visit))
}

/// Number of tree diagrams with branching `(p, q)` on `k` edges.
pub fn enumerate_tree_diagrams(p: u32, q: u32, k: u64, budget: u64) -> Result<BigUint> {
    walk_diagrams(p, q, k, budget, None).map(BigUint::from)
}
