//! Combinatorics of Richardson tableaux: Robinson-Schensted insertion and
//! evacuation, noncrossing partial matchings, Motzkin and Dyck paths, exact
//! q-polynomial arithmetic, and a verification suite that checks the
//! counting and q-series identities tying these families together.

pub mod count;
pub mod error;
pub mod matching;
pub mod motzkin;
pub mod partition;
pub mod permutation;
pub mod qpoly;
pub mod richardson;
pub mod rs;
pub mod tableau;
pub mod verify;

pub use error::{Error, Result};
pub use matching::PartialMatching;
pub use motzkin::MotzkinPath;
pub use partition::Partition;
pub use permutation::Permutation;
pub use qpoly::QPolynomial;
pub use tableau::Tableau;

/// Default ceiling for exhaustive enumeration sizes.
pub const DEFAULT_MAX_N: usize = 16;

/// Refuses sizes beyond the configured enumeration limit.
pub fn check_limit(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return Err(Error::Resource { n, limit });
    }
    Ok(())
}
