//! Permutations of [n] in one-line notation, 1-based.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{1, ..., n}` stored in one-line notation.
///
/// Serialized as the plain image array, e.g. `[5,2,4,3,1,6,8,7]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PermutationStatistics {
    pub descent_set: Vec<usize>,
    pub ascent_set: Vec<usize>,
    pub maj: usize,
    pub comaj: usize,
    pub fixed_points: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::Permutation(format!(
                    "{:?} is not a rearrangement of 1..{}",
                    images, n
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `w(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    pub fn is_involution(&self) -> bool {
        (1..=self.n()).all(|i| self.apply(self.apply(i)) == i)
    }

    /// Places `other` after `self`, acting on shifted letters.
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let n = self.n();
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|&v| v + n));
        Permutation { images }
    }

    /// Conjugation by the longest element: `(w0 w w0)(i) = n + 1 - w(n + 1 - i)`.
    /// On involutions this mirrors the arc diagram left to right.
    pub fn conjugate_by_w0(&self) -> Permutation {
        let n = self.n();
        let images = (1..=n).map(|i| n + 1 - self.apply(n + 1 - i)).collect();
        Permutation { images }
    }

    pub fn statistics(&self) -> PermutationStatistics {
        let n = self.n();
        let mut descent_set = Vec::new();
        let mut ascent_set = Vec::new();
        for i in 1..n {
            if self.apply(i) > self.apply(i + 1) {
                descent_set.push(i);
            } else {
                ascent_set.push(i);
            }
        }
        PermutationStatistics {
            maj: descent_set.iter().sum(),
            comaj: ascent_set.iter().sum(),
            fixed_points: (1..=n).filter(|&i| self.apply(i) == i).collect(),
            descent_set,
            ascent_set,
        }
    }

    /// Splits at every prefix `{1..p}` mapped to itself; the pieces are the
    /// finest direct-sum factorization.
    pub fn prime_decompose(&self) -> Vec<Permutation> {
        let mut pieces = Vec::new();
        let mut start = 0;
        let mut max = 0;
        for (i, &v) in self.images.iter().enumerate() {
            max = max.max(v);
            if max == i + 1 {
                let piece = self.images[start..=i].iter().map(|&v| v - start).collect();
                pieces.push(Permutation { images: piece });
                start = i + 1;
            }
        }
        pieces
    }

    /// True when the permutation is not a direct sum of two nonempty ones.
    pub fn is_prime(&self) -> bool {
        self.n() > 0 && self.prime_decompose().len() == 1
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v)?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({})", self)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.images.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let images = Vec::<usize>::deserialize(d)?;
        Permutation::new(images).map_err(D::Error::custom)
    }
}

/// All permutations of [n] in lexicographic order.
pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Permutations {
    pub fn new(n: usize) -> Self {
        Permutations { next: Some((1..=n).collect()) }
    }
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        // standard next-permutation step
        let advanced = (|| {
            let i = (1..succ.len()).rev().find(|&i| succ[i - 1] < succ[i])?;
            let j = (i..succ.len()).rev().find(|&j| succ[j] > succ[i - 1])?;
            succ.swap(i - 1, j);
            succ[i..].reverse();
            Some(())
        })()
        .is_some();
        if advanced {
            self.next = Some(succ);
        }
        Some(Permutation::from_images_unchecked(current))
    }
}
