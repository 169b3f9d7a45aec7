//! Partial matchings on [n]: collections of disjoint arcs (i, j) with i < j,
//! the unmatched points being singletons. A partial matching is the same
//! thing as an involution of [n] (arcs are the 2-cycles), and it is
//! noncrossing when no two arcs (i1, j1), (i2, j2) satisfy i1 < i2 < j1 < j2.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

use crate::error::{Error, Result};
use crate::permutation::Permutation;

/// A partial matching on `{1, ..., n}`, arcs kept sorted by left endpoint.
///
/// Serialized as `{"n": 8, "arcs": [[1,5],[3,4],[7,8]]}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartialMatching {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl PartialMatching {
    pub fn new(n: usize, arcs: Vec<(usize, usize)>) -> Result<Self> {
        let mut used = vec![false; n + 1];
        for &(i, j) in &arcs {
            if i == 0 || j == 0 || i > n || j > n {
                return Err(Error::Matching(format!(
                    "arc ({}, {}) out of range 1..{}",
                    i, j, n
                )));
            }
            if i >= j {
                return Err(Error::Matching(format!(
                    "arc ({}, {}) must have left endpoint first",
                    i, j
                )));
            }
            if used[i] || used[j] {
                return Err(Error::Matching(format!(
                    "arc ({}, {}) reuses a matched point",
                    i, j
                )));
            }
            used[i] = true;
            used[j] = true;
        }
        let mut arcs = arcs;
        arcs.sort_unstable();
        Ok(PartialMatching { n, arcs })
    }

    pub fn empty(n: usize) -> Self {
        PartialMatching { n, arcs: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn singletons(&self) -> Vec<usize> {
        let mut matched = vec![false; self.n + 1];
        for &(i, j) in &self.arcs {
            matched[i] = true;
            matched[j] = true;
        }
        (1..=self.n).filter(|&i| !matched[i]).collect()
    }

    /// The involution with the arcs as 2-cycles.
    pub fn to_involution(&self) -> Permutation {
        let mut images: Vec<usize> = (1..=self.n).collect();
        for &(i, j) in &self.arcs {
            images[i - 1] = j;
            images[j - 1] = i;
        }
        Permutation::from_images_unchecked(images)
    }

    pub fn from_involution(w: &Permutation) -> Result<Self> {
        if !w.is_involution() {
            return Err(Error::Involution(format!("{} is not an involution", w)));
        }
        let arcs = (1..=w.n())
            .filter(|&i| w.apply(i) > i)
            .map(|i| (i, w.apply(i)))
            .collect();
        Ok(PartialMatching { n: w.n(), arcs })
    }

    /// Pairs of arcs (a, b) with a1 < b1 < a2 < b2.
    pub fn crossing_pairs(&self) -> Vec<((usize, usize), (usize, usize))> {
        let mut out = Vec::new();
        for (x, &a) in self.arcs.iter().enumerate() {
            for &b in &self.arcs[x + 1..] {
                if a.0 < b.0 && b.0 < a.1 && a.1 < b.1 {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Pairs of arcs (a, b) with a1 < b1 < b2 < a2.
    pub fn nesting_pairs(&self) -> Vec<((usize, usize), (usize, usize))> {
        let mut out = Vec::new();
        for (x, &a) in self.arcs.iter().enumerate() {
            for &b in &self.arcs[x + 1..] {
                if a.0 < b.0 && b.1 < a.1 {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn is_noncrossing(&self) -> bool {
        self.crossing_pairs().is_empty()
    }
}

impl fmt::Display for PartialMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}:", self.n)?;
        if self.arcs.is_empty() {
            write!(f, " -")?;
        }
        for &(i, j) in &self.arcs {
            write!(f, " ({},{})", i, j)?;
        }
        Ok(())
    }
}

impl fmt::Debug for PartialMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PartialMatching({})", self)
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl Serialize for PartialMatching {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Wire { n: self.n, arcs: self.arcs.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PartialMatching {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = Wire::deserialize(d)?;
        PartialMatching::new(w.n, w.arcs).map_err(D::Error::custom)
    }
}

/// Streaming enumeration of all partial matchings on [n]. The smallest
/// undecided point is made a singleton first, then paired with each larger
/// free point in increasing order.
pub struct PartialMatchings {
    n: usize,
    // partner[i] = 0 undecided, i singleton, j the matched partner
    partner: Vec<usize>,
    stack: Vec<(usize, usize)>, // (point, choice); choice 0 = singleton
    started: bool,
    done: bool,
}

impl PartialMatchings {
    pub fn new(n: usize) -> Self {
        PartialMatchings {
            n,
            partner: vec![0; n + 1],
            stack: Vec::new(),
            started: false,
            done: false,
        }
    }

    fn smallest_free(&self) -> Option<usize> {
        (1..=self.n).find(|&i| self.partner[i] == 0)
    }

    fn free_after(&self, i: usize) -> Vec<usize> {
        ((i + 1)..=self.n).filter(|&j| self.partner[j] == 0).collect()
    }

    fn apply(&mut self, i: usize, choice: usize) -> bool {
        if choice == 0 {
            self.partner[i] = i;
            return true;
        }
        let free = self.free_after(i);
        match free.get(choice - 1) {
            Some(&j) => {
                self.partner[i] = j;
                self.partner[j] = i;
                true
            }
            None => false,
        }
    }

    fn undo(&mut self, i: usize) {
        let j = self.partner[i];
        self.partner[i] = 0;
        if j != i {
            self.partner[j] = 0;
        }
    }

    fn descend(&mut self) {
        while let Some(i) = self.smallest_free() {
            self.partner[i] = i;
            self.stack.push((i, 0));
        }
    }

    fn advance(&mut self) -> bool {
        while let Some((i, choice)) = self.stack.pop() {
            self.undo(i);
            if self.apply(i, choice + 1) {
                self.stack.push((i, choice + 1));
                self.descend();
                return true;
            }
        }
        false
    }

    fn current(&self) -> PartialMatching {
        let arcs = (1..=self.n)
            .filter(|&i| self.partner[i] > i)
            .map(|i| (i, self.partner[i]))
            .collect();
        PartialMatching { n: self.n, arcs }
    }
}

impl Iterator for PartialMatchings {
    type Item = PartialMatching;

    fn next(&mut self) -> Option<PartialMatching> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.descend();
        } else if !self.advance() {
            self.done = true;
            return None;
        }
        Some(self.current())
    }
}

/// All involutions of [n], in the enumeration order of the matchings they
/// correspond to.
pub fn involutions(n: usize) -> impl Iterator<Item = Permutation> {
    PartialMatchings::new(n).map(|m| m.to_involution())
}

/// Bound-checked enumeration of partial matchings on [n].
pub fn enumerate_matchings(n: usize, limit: usize) -> Result<PartialMatchings> {
    crate::check_limit(n, limit)?;
    Ok(PartialMatchings::new(n))
}
