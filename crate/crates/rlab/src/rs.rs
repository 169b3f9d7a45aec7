//! Row insertion, the Robinson-Schensted correspondence, and evacuation.
//!
//! Insertion bumps along rows: a value lands at the end of a row if it is at
//! least every entry there, and otherwise displaces the leftmost strictly
//! larger entry into the next row. Feeding a permutation through insertion
//! while recording where each new cell appears yields the standard pair
//! (P, Q); the correspondence is inverted by reverse bumping.
//!
//! Evacuation repeatedly deletes the smallest entry, slides the hole to a
//! corner (always moving toward the smaller neighbor), and records the freed
//! corner. The hole trajectories are exposed as slide routes.

use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::tableau::Tableau;

fn insert_into_rows(rows: &mut Vec<Vec<u32>>, mut v: u32) -> (usize, usize) {
    for r in 0..rows.len() {
        let row = &mut rows[r];
        let idx = row.partition_point(|&x| x <= v);
        if idx == row.len() {
            row.push(v);
            return (r, idx);
        }
        std::mem::swap(&mut row[idx], &mut v);
    }
    rows.push(vec![v]);
    (rows.len() - 1, 0)
}

/// Inserts one value, returning the grown tableau and the new cell.
pub fn rs_insert(t: &Tableau, v: u32) -> Result<(Tableau, (usize, usize))> {
    if v == 0 {
        return Err(Error::Order("inserted entries must be positive".into()));
    }
    let mut rows = t.rows().to_vec();
    let cell = insert_into_rows(&mut rows, v);
    Ok((Tableau::from_rows_unchecked(rows), cell))
}

/// The insertion tableau P and recording tableau Q of a permutation.
pub fn rs_pair(w: &Permutation) -> (Tableau, Tableau) {
    let mut p: Vec<Vec<u32>> = Vec::new();
    let mut q: Vec<Vec<u32>> = Vec::new();
    for (k, &img) in w.images().iter().enumerate() {
        let (r, _) = insert_into_rows(&mut p, img as u32);
        if r == q.len() {
            q.push(Vec::new());
        }
        q[r].push(k as u32 + 1);
    }
    (
        Tableau::from_rows_unchecked(p),
        Tableau::from_rows_unchecked(q),
    )
}

/// The insertion tableau alone.
pub fn insertion_tableau(w: &Permutation) -> Tableau {
    rs_pair(w).0
}

/// Recovers the permutation from its tableau pair by reverse bumping in
/// decreasing order of the recording entries.
pub fn rs_inverse(p: &Tableau, q: &Tableau) -> Result<Permutation> {
    if !p.is_standard() || !q.is_standard() {
        return Err(Error::Standardness(
            "both tableaux of a pair must be standard".into(),
        ));
    }
    if p.shape() != q.shape() {
        return Err(Error::ShapeMismatch(format!(
            "insertion shape {} differs from recording shape {}",
            p.shape(),
            q.shape()
        )));
    }
    let n = p.size();
    let row_of = q.row_index_by_entry();
    let mut rows = p.rows().to_vec();
    let mut letters = vec![0usize; n];
    for k in (1..=n).rev() {
        let r = row_of[k];
        let mut v = rows[r].pop().expect("recording entry marks a corner");
        if rows[r].is_empty() {
            debug_assert_eq!(r + 1, rows.len());
            rows.pop();
        }
        for upper in (0..r).rev() {
            let row = &mut rows[upper];
            let idx = row.partition_point(|&x| x < v);
            std::mem::swap(&mut row[idx - 1], &mut v);
        }
        letters[k - 1] = v as usize;
    }
    Permutation::new(letters)
}

fn delta_slide_rows(rows: &mut Vec<Vec<u32>>) -> Vec<(usize, usize)> {
    let (mut r, mut c) = (0usize, 0usize);
    let mut route = vec![(r, c)];
    loop {
        let below = rows.get(r + 1).and_then(|row| row.get(c)).copied();
        let right = rows[r].get(c + 1).copied();
        let down = match (below, right) {
            (None, None) => break,
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (Some(b), Some(x)) => b < x,
        };
        if down {
            rows[r][c] = below.unwrap();
            r += 1;
        } else {
            rows[r][c] = right.unwrap();
            c += 1;
        }
        route.push((r, c));
    }
    rows[r].pop();
    if rows[r].is_empty() {
        debug_assert_eq!(r + 1, rows.len());
        rows.pop();
    }
    for row in rows.iter_mut() {
        for e in row {
            *e -= 1;
        }
    }
    route
}

/// One evacuation slide: deletes the smallest entry, slides the hole to a
/// corner, removes that corner, and shifts the remaining entries down by one.
/// Returns the shrunken tableau and the hole route.
pub fn delta_slide(t: &Tableau) -> Result<(Tableau, Vec<(usize, usize)>)> {
    if !t.is_standard() {
        return Err(Error::Standardness("slides act on standard tableaux".into()));
    }
    if t.size() == 0 {
        return Err(Error::Shape("cannot slide an empty tableau".into()));
    }
    let mut rows = t.rows().to_vec();
    let route = delta_slide_rows(&mut rows);
    Ok((Tableau::from_rows_unchecked(rows), route))
}

/// The evacuation tableau: the corner freed by the k-th slide receives
/// n + 1 - k. Evacuation preserves shape and is an involution.
pub fn evacuation(t: &Tableau) -> Result<Tableau> {
    if !t.is_standard() {
        return Err(Error::Standardness(
            "evacuation acts on standard tableaux".into(),
        ));
    }
    let n = t.size();
    let mut out: Vec<Vec<u32>> = t.rows().iter().map(|row| vec![0; row.len()]).collect();
    let mut rows = t.rows().to_vec();
    for k in 1..=n {
        let route = delta_slide_rows(&mut rows);
        let &(r, c) = route.last().expect("route starts at the origin");
        out[r][c] = (n + 1 - k) as u32;
    }
    Tableau::standard(out)
}

/// Hole routes of all n evacuation slides, in slide order. Each route lists
/// the cells visited, beginning at (0, 0) and ending at the freed corner.
pub fn evacuation_routes(t: &Tableau) -> Vec<Vec<(usize, usize)>> {
    debug_assert!(t.is_standard());
    let mut rows = t.rows().to_vec();
    (0..t.size()).map(|_| delta_slide_rows(&mut rows)).collect()
}
