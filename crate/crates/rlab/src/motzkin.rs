//! Motzkin paths: lattice paths of up (U), down (D), and flat (H) steps that
//! never dip below the axis and end on it. Dyck paths are the flat-free ones.
//!
//! Reading a partial matching left to right (U at a left endpoint, D at a
//! right endpoint, H at a singleton) is a bijection onto Motzkin paths whose
//! inverse matches each D with the most recent open U.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

use crate::error::{Error, Result};
use crate::matching::PartialMatching;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Up,
    Down,
    Flat,
}

impl Step {
    fn letter(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Down => 'D',
            Step::Flat => 'H',
        }
    }
}

/// A Motzkin path, serialized as its step word, e.g. `"UHUDDHUD"`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MotzkinPath {
    steps: Vec<Step>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathStatistics {
    pub valley_points: Vec<usize>,
    pub path_maj: usize,
}

impl MotzkinPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height = 0i64;
        for (i, s) in steps.iter().enumerate() {
            match s {
                Step::Up => height += 1,
                Step::Down => height -= 1,
                Step::Flat => {}
            }
            if height < 0 {
                return Err(Error::Path(format!("path dips below the axis at step {}", i + 1)));
            }
        }
        if height != 0 {
            return Err(Error::Path(format!("path ends at height {}", height)));
        }
        Ok(MotzkinPath { steps })
    }

    pub fn parse(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .map(|c| match c {
                'U' => Ok(Step::Up),
                'D' => Ok(Step::Down),
                'H' => Ok(Step::Flat),
                other => Err(Error::Path(format!("unknown step character {:?}", other))),
            })
            .collect::<Result<Vec<Step>>>()?;
        MotzkinPath::new(steps)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// No flat steps.
    pub fn is_dyck(&self) -> bool {
        self.steps.iter().all(|&s| s != Step::Flat)
    }

    /// 1-based positions i with a down step at i and an up step at i + 1.
    pub fn valley_points(&self) -> Vec<usize> {
        self.steps
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] == Step::Down && w[1] == Step::Up)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Sum of the valley points.
    pub fn path_maj(&self) -> usize {
        self.valley_points().iter().sum()
    }

    pub fn statistics(&self, dyck_required: bool) -> Result<PathStatistics> {
        if dyck_required && !self.is_dyck() {
            return Err(Error::Path("path has flat steps".into()));
        }
        Ok(PathStatistics {
            valley_points: self.valley_points(),
            path_maj: self.path_maj(),
        })
    }
}

impl fmt::Display for MotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.letter())?;
        }
        Ok(())
    }
}

impl fmt::Debug for MotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MotzkinPath({})", self)
    }
}

impl Serialize for MotzkinPath {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_string().serialize(s)
    }
}

impl<'de> Deserialize<'de> for MotzkinPath {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        MotzkinPath::parse(&s).map_err(D::Error::custom)
    }
}

/// Left endpoints become U, right endpoints D, singletons H. Requires a
/// noncrossing matching.
pub fn matching_to_motzkin(m: &PartialMatching) -> Result<MotzkinPath> {
    if !m.is_noncrossing() {
        let (a, b) = m.crossing_pairs()[0];
        return Err(Error::NotNoncrossing(format!(
            "arcs ({},{}) and ({},{}) cross",
            a.0, a.1, b.0, b.1
        )));
    }
    let mut steps = vec![Step::Flat; m.n()];
    for &(i, j) in m.arcs() {
        steps[i - 1] = Step::Up;
        steps[j - 1] = Step::Down;
    }
    MotzkinPath::new(steps)
}

/// Inverse of `matching_to_motzkin`: each D closes the most recent open U.
pub fn motzkin_to_matching(p: &MotzkinPath) -> PartialMatching {
    let mut open = Vec::new();
    let mut arcs = Vec::new();
    for (i, &s) in p.steps().iter().enumerate() {
        match s {
            Step::Up => open.push(i + 1),
            Step::Down => {
                let left = open.pop().expect("valid path has an open up step");
                arcs.push((left, i + 1));
            }
            Step::Flat => {}
        }
    }
    PartialMatching::new(p.len(), arcs).expect("stack decode yields disjoint arcs")
}

/// Streaming enumeration of Motzkin paths with `n` steps (or Dyck paths when
/// `flat_allowed` is false), trying U, then H, then D at every position.
pub struct MotzkinPaths {
    n: usize,
    flat_allowed: bool,
    steps: Vec<Step>,
    height: usize,
    started: bool,
    done: bool,
}

impl MotzkinPaths {
    pub fn all(n: usize) -> Self {
        MotzkinPaths {
            n,
            flat_allowed: true,
            steps: Vec::new(),
            height: 0,
            started: false,
            done: false,
        }
    }

    pub fn dyck(n: usize) -> Self {
        MotzkinPaths { flat_allowed: false, ..MotzkinPaths::all(n) }
    }

    fn feasible(&self, s: Step) -> bool {
        let remaining = self.n - self.steps.len();
        match s {
            Step::Up => remaining >= self.height + 2,
            Step::Flat => self.flat_allowed && remaining >= self.height + 1,
            Step::Down => self.height >= 1,
        }
    }

    fn push(&mut self, s: Step) {
        match s {
            Step::Up => self.height += 1,
            Step::Down => self.height -= 1,
            Step::Flat => {}
        }
        self.steps.push(s);
    }

    fn pop(&mut self) -> Step {
        let s = self.steps.pop().expect("nonempty step stack");
        match s {
            Step::Up => self.height -= 1,
            Step::Down => self.height += 1,
            Step::Flat => {}
        }
        s
    }

    const ORDER: [Step; 3] = [Step::Up, Step::Flat, Step::Down];

    fn search(&mut self, mut resume: Option<Step>) -> bool {
        loop {
            if resume.is_none() && self.steps.len() == self.n {
                return true;
            }
            let start = match resume.take() {
                Some(prev) => Self::ORDER.iter().position(|&s| s == prev).unwrap() + 1,
                None => 0,
            };
            let next = Self::ORDER[start..]
                .iter()
                .copied()
                .find(|&s| self.feasible(s));
            match next {
                Some(s) => self.push(s),
                None => {
                    if self.steps.is_empty() {
                        return false;
                    }
                    resume = Some(self.pop());
                }
            }
        }
    }
}

impl Iterator for MotzkinPaths {
    type Item = MotzkinPath;

    fn next(&mut self) -> Option<MotzkinPath> {
        if self.done {
            return None;
        }
        let found = if !self.started {
            self.started = true;
            self.search(None)
        } else if self.steps.is_empty() {
            false
        } else {
            let last = self.pop();
            self.search(Some(last))
        };
        if !found {
            self.done = true;
            return None;
        }
        Some(MotzkinPath { steps: self.steps.clone() })
    }
}

/// All noncrossing partial matchings on [n], decoded from Motzkin paths.
pub fn noncrossing_matchings(n: usize) -> impl Iterator<Item = PartialMatching> {
    MotzkinPaths::all(n).map(|p| motzkin_to_matching(&p))
}

/// Bound-checked enumeration of Motzkin paths with `n` steps.
pub fn enumerate_motzkin(n: usize, limit: usize) -> Result<MotzkinPaths> {
    crate::check_limit(n, limit)?;
    Ok(MotzkinPaths::all(n))
}
