//! Recognition of Richardson tableaux among standard Young tableaux.
//!
//! A standard tableau T is Richardson when for every entry j sitting in row
//! r >= 2, the largest entry of the subtableau T_{<=j} in row r - 1 exceeds
//! every entry smaller than j lying in row r or below. The empty tableau and
//! every single-row tableau are Richardson.
//!
//! Two further characterizations are implemented and kept in exact agreement
//! with the first (the agreement itself is part of the verification suite):
//!
//! - recursive: every second-row entry j has j - 1 in the first row, and the
//!   tableau obtained by deleting the first row and standardizing is again
//!   Richardson;
//! - slide routes: every hole route traced by the iterated evacuation slides
//!   is an L (all downward moves before all rightward moves).

use crate::rs::evacuation_routes;
use crate::tableau::{standardize, Tableau};

/// Which characterization to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RichardsonMethod {
    /// Largest-entry prefix condition (the definition; the default).
    Condition,
    /// First-row peeling recursion.
    Recursive,
    /// All evacuation slide routes are L-shaped.
    SlideRoutes,
}

/// Tests the defining prefix condition.
pub fn is_richardson(t: &Tableau) -> bool {
    is_richardson_by(t, RichardsonMethod::Condition)
}

pub fn is_richardson_by(t: &Tableau, method: RichardsonMethod) -> bool {
    debug_assert!(t.is_standard());
    match method {
        RichardsonMethod::Condition => condition_check(t),
        RichardsonMethod::Recursive => recursive_check(t),
        RichardsonMethod::SlideRoutes => {
            evacuation_routes(t).iter().all(|r| is_l_route(r))
        }
    }
}

/// A slide route is an L when its downward moves all precede its rightward
/// moves; straight segments are degenerate Ls.
pub fn is_l_route(route: &[(usize, usize)]) -> bool {
    let mut seen_right = false;
    for w in route.windows(2) {
        let down = w[1].0 > w[0].0;
        if down && seen_right {
            return false;
        }
        if !down {
            seen_right = true;
        }
    }
    true
}

fn condition_check(t: &Tableau) -> bool {
    let n = t.size();
    let row_of = t.row_index_by_entry();
    // row_max[r] = largest entry placed so far in row r
    let mut row_max = vec![0u32; t.rows().len()];
    for j in 1..=n {
        let r = row_of[j];
        if r >= 1 {
            let above = row_max[r - 1];
            let below = row_max[r..].iter().copied().max().unwrap_or(0);
            if above <= below {
                return false;
            }
        }
        row_max[r] = j as u32;
    }
    true
}

fn recursive_check(t: &Tableau) -> bool {
    let mut t = t.clone();
    while t.rows().len() > 1 {
        let first: &Vec<u32> = &t.rows()[0];
        for &j in &t.rows()[1] {
            if j == 1 || first.binary_search(&(j - 1)).is_err() {
                return false;
            }
        }
        t = standardize(&t.rows()[1..]).expect("rows of a standard tableau standardize");
    }
    true
}
