//! Young tableaux with positive integer entries, weakly increasing along
//! rows and strictly increasing down columns. A tableau is *standard* when
//! its entries are exactly 1..n with no repeats.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A semistandard Young tableau. Construction validates shape and order;
/// every value of this type satisfies them.
///
/// Serialized as `{"rows": [[1, 3], [2, 4]]}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

/// Descent/ascent data of a standard tableau. Position `i` (1-based,
/// `i < n`) is a descent when `i + 1` sits in a strictly lower row than `i`,
/// and an ascent otherwise. `maj` and `comaj` sum the two sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableauStatistics {
    pub descent_set: Vec<usize>,
    pub ascent_set: Vec<usize>,
    pub maj: usize,
    pub comaj: usize,
    pub odd_columns: usize,
}

fn validate_semistandard(rows: &[Vec<u32>]) -> Result<()> {
    for (r, row) in rows.iter().enumerate() {
        if row.is_empty() {
            return Err(Error::Shape(format!("row {} is empty", r + 1)));
        }
        if row.iter().any(|&e| e == 0) {
            return Err(Error::Order(format!("row {} contains a zero entry", r + 1)));
        }
        if row.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Order(format!("row {} is not weakly increasing", r + 1)));
        }
        if r > 0 {
            if rows[r - 1].len() < row.len() {
                return Err(Error::Shape(format!(
                    "row {} is longer than the row above",
                    r + 1
                )));
            }
            for c in 0..row.len() {
                if rows[r - 1][c] >= row[c] {
                    return Err(Error::Order(format!(
                        "column {} is not strictly increasing at row {}",
                        c + 1,
                        r + 1
                    )));
                }
            }
        }
    }
    Ok(())
}

impl Tableau {
    /// Validates a semistandard tableau: partition shape, rows weakly
    /// increasing, columns strictly increasing, entries positive.
    pub fn semistandard(rows: Vec<Vec<u32>>) -> Result<Self> {
        validate_semistandard(&rows)?;
        Ok(Tableau { rows })
    }

    /// Validates a standard tableau: semistandard with entries exactly 1..n.
    pub fn standard(rows: Vec<Vec<u32>>) -> Result<Self> {
        let t = Tableau::semistandard(rows)?;
        if !t.is_standard() {
            return Err(Error::Standardness(format!(
                "entries of {} are not exactly 1..{}",
                t,
                t.size()
            )));
        }
        Ok(t)
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u32>>) -> Self {
        debug_assert!(validate_semistandard(&rows).is_ok());
        Tableau { rows }
    }

    pub fn empty() -> Self {
        Tableau { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect())
            .expect("tableau row lengths form a partition")
    }

    pub fn is_standard(&self) -> bool {
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for row in &self.rows {
            for &e in row {
                let e = e as usize;
                if e > n || seen[e] {
                    return false;
                }
                seen[e] = true;
            }
        }
        true
    }

    /// The subtableau of a standard tableau formed by the entries `<= j`.
    pub fn restrict_leq(&self, j: usize) -> Result<Tableau> {
        if j > self.size() {
            return Err(Error::Range(format!(
                "restriction bound {} exceeds size {}",
                j,
                self.size()
            )));
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let k = row.partition_point(|&e| (e as usize) <= j);
                row[..k].to_vec()
            })
            .filter(|row| !row.is_empty())
            .collect();
        Ok(Tableau::from_rows_unchecked(rows))
    }

    /// 1-based row index of the entry `j` in a standard tableau.
    pub fn row_of_entry(&self, j: u32) -> Result<usize> {
        for (r, row) in self.rows.iter().enumerate() {
            if row.binary_search(&j).is_ok() {
                return Ok(r + 1);
            }
        }
        Err(Error::Range(format!("entry {} not present", j)))
    }

    /// For a standard tableau, `row_of[e]` = 0-based row of entry `e`.
    pub(crate) fn row_index_by_entry(&self) -> Vec<usize> {
        let top = self
            .rows
            .iter()
            .flatten()
            .map(|&e| e as usize)
            .max()
            .unwrap_or(0);
        let mut row_of = vec![0usize; top.max(self.size()) + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for &e in row {
                row_of[e as usize] = r;
            }
        }
        row_of
    }

    /// Descents, ascents, maj, comaj, and odd-column count of a standard
    /// tableau.
    pub fn statistics(&self) -> TableauStatistics {
        let n = self.size();
        let row_of = self.row_index_by_entry();
        let mut descent_set = Vec::new();
        let mut ascent_set = Vec::new();
        for i in 1..n {
            if row_of[i + 1] > row_of[i] {
                descent_set.push(i);
            } else {
                ascent_set.push(i);
            }
        }
        TableauStatistics {
            maj: descent_set.iter().sum(),
            comaj: ascent_set.iter().sum(),
            odd_columns: self.shape().odd_columns(),
            descent_set,
            ascent_set,
        }
    }

    /// Row-wise concatenation: row i of the result is row i of `self`
    /// followed by row i of `other` with every entry shifted up by
    /// `self.size()`.
    pub fn concat(&self, other: &Tableau) -> Result<Tableau> {
        let m = self.size() as u32;
        let depth = self.rows.len().max(other.rows.len());
        let mut rows = Vec::with_capacity(depth);
        for r in 0..depth {
            let mut row = self.rows.get(r).cloned().unwrap_or_default();
            if let Some(extra) = other.rows.get(r) {
                row.extend(extra.iter().map(|&e| e + m));
            }
            rows.push(row);
        }
        Tableau::standard(rows)
    }

    /// Splits a standard tableau at `m` boxes if the row-wise split is again
    /// a pair of standard tableaux.
    fn try_split(&self, m: usize) -> Option<(Tableau, Tableau)> {
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (r, row) in self.rows.iter().enumerate() {
            let k = row.partition_point(|&e| (e as usize) <= m);
            if k > 0 {
                left.push(row[..k].to_vec());
            }
            if k < row.len() {
                // suffixes must fill the topmost rows consecutively so that
                // concat puts them back where they came from
                if r != right.len() {
                    return None;
                }
                right.push(row[k..].iter().map(|&e| e - m as u32).collect());
            }
        }
        let right = Tableau::standard(right).ok()?;
        let left = Tableau::from_rows_unchecked(left);
        Some((left, right))
    }

    /// Unique factorization into prime tableaux under `concat`; the list has
    /// length 1 exactly when the tableau is prime.
    pub fn prime_decompose(&self) -> Vec<Tableau> {
        let mut pieces = Vec::new();
        let mut rest = self.clone();
        while rest.size() > 0 {
            let n = rest.size();
            let split = (1..n).find_map(|m| rest.try_split(m));
            match split {
                Some((left, right)) => {
                    pieces.push(left);
                    rest = right;
                }
                None => {
                    pieces.push(rest);
                    break;
                }
            }
        }
        pieces
    }

    /// A nonempty tableau is prime when it is not a concatenation of two
    /// smaller ones.
    pub fn is_prime(&self) -> bool {
        let n = self.size();
        n > 0 && (1..n).all(|m| self.try_split(m).is_none())
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (c, e) in row.iter().enumerate() {
                if c > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", e)?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau({})", self)
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    rows: Vec<Vec<u32>>,
}

impl Serialize for Tableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Wire { rows: self.rows.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = Wire::deserialize(d)?;
        Tableau::semistandard(w.rows).map_err(D::Error::custom)
    }
}

/// Relabels distinct entries by rank, preserving positions. The input must
/// already be weakly increasing along rows and strictly increasing down
/// columns; the result is standard.
pub fn standardize(rows: &[Vec<u32>]) -> Result<Tableau> {
    let mut entries: Vec<u32> = rows.iter().flatten().copied().collect();
    entries.sort_unstable();
    if entries.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Order("entries are not distinct".into()));
    }
    let relabeled = rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|e| (entries.binary_search(e).unwrap() + 1) as u32)
                .collect()
        })
        .collect();
    Tableau::standard(relabeled)
}

/// Streaming enumeration of all standard Young tableaux with `n` boxes, in
/// the canonical growth order: entries 1..n are placed depth-first, trying
/// addable corners from the top row downward.
pub struct StandardTableaux {
    n: usize,
    rows: Vec<Vec<u32>>,
    // row index where each entry so far was placed
    placed: Vec<usize>,
    started: bool,
    done: bool,
}

impl StandardTableaux {
    pub fn new(n: usize) -> Self {
        StandardTableaux {
            n,
            rows: Vec::new(),
            placed: Vec::new(),
            started: false,
            done: false,
        }
    }

    fn addable(&self, r: usize) -> bool {
        if r == self.rows.len() {
            return true;
        }
        r == 0 || self.rows[r - 1].len() > self.rows[r].len()
    }

    fn place(&mut self, r: usize) {
        let entry = (self.placed.len() + 1) as u32;
        if r == self.rows.len() {
            self.rows.push(vec![entry]);
        } else {
            self.rows[r].push(entry);
        }
        self.placed.push(r);
    }

    fn unplace(&mut self) -> usize {
        let r = self.placed.pop().expect("nonempty placement stack");
        self.rows[r].pop();
        if self.rows[r].is_empty() {
            self.rows.pop();
        }
        r
    }

    fn descend(&mut self) {
        while self.placed.len() < self.n {
            let r = (0..=self.rows.len())
                .find(|&r| self.addable(r))
                .expect("a corner is always addable");
            self.place(r);
        }
    }

    fn advance(&mut self) -> bool {
        while !self.placed.is_empty() {
            let prev = self.unplace();
            if let Some(r) = ((prev + 1)..=self.rows.len()).find(|&r| self.addable(r)) {
                self.place(r);
                self.descend();
                return true;
            }
        }
        false
    }
}

impl Iterator for StandardTableaux {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
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
        if self.n == 0 {
            self.done = true;
            return Some(Tableau::empty());
        }
        Some(Tableau::from_rows_unchecked(self.rows.clone()))
    }
}

/// Bound-checked enumeration of standard tableaux with `n` boxes.
pub fn enumerate_standard(n: usize, limit: usize) -> Result<StandardTableaux> {
    crate::check_limit(n, limit)?;
    Ok(StandardTableaux::new(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(rows: &[&[u32]]) -> Tableau {
        Tableau::standard(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn test_validation() {
        assert!(Tableau::standard(vec![vec![1, 3], vec![2, 4]]).is_ok());
        assert!(Tableau::semistandard(vec![vec![1, 1, 2], vec![2, 3]]).is_ok());
        // duplicate entry in standard mode
        assert!(matches!(
            Tableau::standard(vec![vec![1, 1], vec![2, 2]]),
            Err(Error::Standardness(_))
        ));
        // column not strictly increasing
        assert!(matches!(
            Tableau::semistandard(vec![vec![2, 3], vec![1, 4]]),
            Err(Error::Order(_))
        ));
        // row lengths increase
        assert!(matches!(
            Tableau::standard(vec![vec![1], vec![2, 3]]),
            Err(Error::Shape(_))
        ));
        // skipped entry
        assert!(matches!(
            Tableau::standard(vec![vec![1, 2], vec![4]]),
            Err(Error::Standardness(_))
        ));
        assert!(Tableau::standard(vec![]).is_ok());
    }

    #[test]
    fn test_restrict_leq() {
        let x = t(&[&[1, 2], &[3, 4]]);
        assert_eq!(x.restrict_leq(3).unwrap(), t(&[&[1, 2], &[3]]));
        assert_eq!(x.restrict_leq(0).unwrap(), Tableau::empty());
        assert_eq!(x.restrict_leq(4).unwrap(), x);
        assert!(matches!(x.restrict_leq(5), Err(Error::Range(_))));
        let y = t(&[&[1, 4, 6], &[2, 7], &[3], &[5], &[8]]);
        assert_eq!(y.restrict_leq(5).unwrap(), t(&[&[1, 4], &[2], &[3], &[5]]));
    }

    #[test]
    fn test_row_of_entry() {
        let y = t(&[&[1, 4, 6], &[2, 7], &[3], &[5], &[8]]);
        assert_eq!(y.row_of_entry(7).unwrap(), 2);
        assert_eq!(y.row_of_entry(8).unwrap(), 5);
        assert_eq!(y.row_of_entry(1).unwrap(), 1);
        assert!(matches!(y.row_of_entry(9), Err(Error::Range(_))));
    }

    #[test]
    fn test_statistics() {
        let x = t(&[&[1, 3], &[2, 4]]);
        let s = x.statistics();
        assert_eq!(s.descent_set, vec![1, 3]);
        assert_eq!(s.ascent_set, vec![2]);
        assert_eq!(s.maj, 4);
        assert_eq!(s.comaj, 2);
        assert_eq!(s.odd_columns, 0);

        let row = t(&[&[1, 2, 3, 4]]);
        assert_eq!(row.statistics().odd_columns, 4);
        assert_eq!(row.statistics().comaj, 6);

        let col = t(&[&[1], &[2], &[3], &[4]]);
        assert_eq!(col.statistics().odd_columns, 0);
        assert_eq!(col.statistics().maj, 6);
        assert_eq!(col.statistics().comaj, 0);

        assert_eq!(Tableau::empty().statistics().comaj, 0);
    }

    #[test]
    fn test_statistics_tolerates_large_entries() {
        let x = Tableau::semistandard(vec![vec![5]]).unwrap();
        let s = x.statistics();
        assert_eq!(s.descent_set, Vec::<usize>::new());
        assert_eq!(s.odd_columns, 1);
    }

    #[test]
    fn test_maj_plus_comaj() {
        for x in StandardTableaux::new(6) {
            let s = x.statistics();
            assert_eq!(s.maj + s.comaj, 15);
        }
    }

    #[test]
    fn test_concat() {
        let a = t(&[&[1, 4, 5], &[2, 6], &[3], &[7]]);
        let b = t(&[&[1, 4], &[2, 5], &[3], &[6], &[7]]);
        let c = a.concat(&b).unwrap();
        assert_eq!(
            c,
            t(&[&[1, 4, 5, 8, 11], &[2, 6, 9, 12], &[3, 10], &[7, 13], &[14]])
        );
        assert_eq!(t(&[&[1]]).concat(&t(&[&[1]])).unwrap(), t(&[&[1, 2]]));
        assert_eq!(
            t(&[&[1], &[2]]).concat(&t(&[&[1], &[2]])).unwrap(),
            t(&[&[1, 3], &[2, 4]])
        );
        assert_eq!(Tableau::empty().concat(&t(&[&[1]])).unwrap(), t(&[&[1]]));
    }

    #[test]
    fn test_prime_decompose() {
        let x = t(&[&[1, 3, 6, 7], &[2, 8], &[4], &[5]]);
        let pieces = x.prime_decompose();
        assert_eq!(
            pieces,
            vec![
                t(&[&[1, 3], &[2], &[4], &[5]]),
                t(&[&[1]]),
                t(&[&[1], &[2]]),
            ]
        );
        assert_eq!(t(&[&[1, 2]]).prime_decompose(), vec![t(&[&[1]]), t(&[&[1]])]);
        // mirrors 2143 = 21 + 21 as a direct sum
        assert_eq!(
            t(&[&[1, 3], &[2, 4]]).prime_decompose(),
            vec![t(&[&[1], &[2]]), t(&[&[1], &[2]])]
        );
        assert!(t(&[&[1, 3], &[2], &[4]]).is_prime());
        assert!(t(&[&[1], &[2], &[3], &[4]]).is_prime());
        assert!(!t(&[&[1, 3], &[2, 4]]).is_prime());
        assert!(!Tableau::empty().is_prime());
        assert_eq!(Tableau::empty().prime_decompose(), Vec::<Tableau>::new());
    }

    #[test]
    fn test_prime_decompose_roundtrip() {
        for x in StandardTableaux::new(7) {
            let pieces = x.prime_decompose();
            assert!(pieces.iter().all(Tableau::is_prime));
            let mut acc = Tableau::empty();
            for p in &pieces {
                acc = acc.concat(p).unwrap();
            }
            assert_eq!(acc, x);
        }
    }

    #[test]
    fn test_standardize() {
        assert_eq!(
            standardize(&[vec![2, 4], vec![3, 7], vec![5]]).unwrap(),
            t(&[&[1, 3], &[2, 5], &[4]])
        );
        assert_eq!(standardize(&[vec![10]]).unwrap(), t(&[&[1]]));
        assert!(standardize(&[vec![2, 2]]).is_err());
        // relabeling must still produce a valid tableau
        assert!(standardize(&[vec![5], vec![2]]).is_err());
    }

    #[test]
    fn test_enumeration_counts() {
        // numbers of standard Young tableaux = numbers of involutions
        let expected = [1usize, 1, 2, 4, 10, 26, 76, 232, 764];
        for (n, &count) in expected.iter().enumerate() {
            assert_eq!(StandardTableaux::new(n).count(), count);
        }
    }

    #[test]
    fn test_enumeration_is_canonical_and_distinct() {
        let all: Vec<Tableau> = StandardTableaux::new(3).collect();
        assert_eq!(
            all,
            vec![
                t(&[&[1, 2, 3]]),
                t(&[&[1, 2], &[3]]),
                t(&[&[1, 3], &[2]]),
                t(&[&[1], &[2], &[3]]),
            ]
        );
        let mut seen = std::collections::BTreeSet::new();
        for x in StandardTableaux::new(7) {
            assert!(x.is_standard());
            assert!(seen.insert(x));
        }
        assert_eq!(seen.len(), 232);
    }

    #[test]
    fn test_enumerate_standard_respects_limit() {
        assert!(matches!(
            enumerate_standard(17, 16),
            Err(Error::Resource { n: 17, limit: 16 })
        ));
        assert!(enumerate_standard(4, 16).is_ok());
    }

    #[test]
    fn test_json_roundtrip() {
        let x = t(&[&[1, 3], &[2, 4]]);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"rows":[[1,3],[2,4]]}"#);
        let back: Tableau = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
        assert!(serde_json::from_str::<Tableau>(r#"{"rows":[[2,1]]}"#).is_err());
        assert!(serde_json::from_str::<Tableau>(r#"{"rows":[[1],[2,3]]}"#).is_err());
    }
}
