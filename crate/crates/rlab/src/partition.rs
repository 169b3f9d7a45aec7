use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

use crate::error::{Error, Result};

/// An integer partition: a weakly decreasing list of positive parts.
///
/// Serialized as `{"parts": [2, 2]}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Shape(format!("zero part in {:?}", parts)));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Shape(format!(
                "parts not weakly decreasing: {:?}",
                parts
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The conjugate partition (column lengths of the Young diagram).
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=cols)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// Number of columns of odd length.
    pub fn odd_columns(&self) -> usize {
        self.conjugate().parts.iter().filter(|&&h| h % 2 == 1).count()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    parts: Vec<usize>,
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Wire { parts: self.parts.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = Wire::deserialize(d)?;
        Partition::new(w.parts).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn test_rejects_increasing_parts() {
        assert!(Partition::new(vec![2, 3]).is_err());
        assert!(Partition::new(vec![3, 1, 2]).is_err());
        assert!(Partition::new(vec![1, 0]).is_err());
    }

    #[test]
    fn test_accepts_weakly_decreasing_parts() {
        let p = Partition::new(vec![4, 2, 2, 1]).unwrap();
        assert_eq!(p.size(), 9);
        assert_eq!(p.len(), 4);
    }

    #[test]
    fn test_conjugate() {
        let p = Partition::new(vec![4, 2, 1, 1]).unwrap();
        assert_eq!(p.conjugate().parts(), &[4, 2, 1, 1]);
        let q = Partition::new(vec![3, 1]).unwrap();
        assert_eq!(q.conjugate().parts(), &[2, 1, 1]);
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn test_odd_columns() {
        assert_eq!(Partition::new(vec![2, 2]).unwrap().odd_columns(), 0);
        assert_eq!(Partition::new(vec![1, 1, 1, 1]).unwrap().odd_columns(), 0);
        assert_eq!(Partition::new(vec![4]).unwrap().odd_columns(), 4);
        assert_eq!(Partition::new(vec![3, 1]).unwrap().odd_columns(), 2);
    }

    #[test]
    fn test_json_roundtrip() {
        let p = Partition::new(vec![2, 2]).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"parts":[2,2]}"#);
        let back: Partition = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<Partition>(r#"{"parts":[1,2]}"#).is_err());
    }
}
