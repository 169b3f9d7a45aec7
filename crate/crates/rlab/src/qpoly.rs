//! Exact polynomial arithmetic in the variable q, and the classical
//! q-analogues built from it:
//!
//! - `[m]_q = 1 + q + ... + q^(m-1)`
//! - `[m]_q! = [1]_q [2]_q ... [m]_q`
//! - Gaussian binomial `[n choose k]_q = [n]_q! / ([k]_q! [n-k]_q!)`
//! - q-Catalan `C_m(q) = (1/[m+1]_q) [2m choose m]_q`
//! - q-Narayana `N_q(n, m) = (1/[n]_q) [n choose m]_q [n choose m+1]_q q^(m^2+m)`
//!
//! Quotients are computed by exact polynomial division; a nonzero remainder
//! is reported as an error rather than truncated. Coefficients are checked
//! 128-bit integers, so any overflow surfaces as an error instead of wrapping.

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

use crate::error::{Error, Result};
use crate::tableau::Tableau;

/// A polynomial in q with integer coefficients, stored dense from degree 0
/// upward with no trailing zero coefficients.
///
/// Serialized as `{"coeffs": [1, 0, 1]}` (meaning `1 + q^2`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPolynomial {
    coeffs: Vec<i128>,
}

fn cadd(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b).ok_or(Error::Overflow("polynomial addition"))
}

fn cmul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow("polynomial multiplication"))
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPolynomial { coeffs: vec![1] }
    }

    /// `coeff * q^power`.
    pub fn monomial(coeff: i128, power: usize) -> Self {
        if coeff == 0 {
            return Self::zero();
        }
        let mut coeffs = vec![0; power + 1];
        coeffs[power] = coeff;
        QPolynomial { coeffs }
    }

    /// Builds from coefficients listed from degree 0 upward; trailing zeros
    /// are trimmed so equality is structural.
    pub fn from_coeffs(coeffs: Vec<i128>) -> Self {
        let mut coeffs = coeffs;
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, power: usize) -> i128 {
        self.coeffs.get(power).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &QPolynomial) -> Result<QPolynomial> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(cadd(self.coeff(i), other.coeff(i))?);
        }
        Ok(QPolynomial::from_coeffs(out))
    }

    pub fn sub(&self, other: &QPolynomial) -> Result<QPolynomial> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let b = other
                .coeff(i)
                .checked_neg()
                .ok_or(Error::Overflow("polynomial subtraction"))?;
            out.push(cadd(self.coeff(i), b)?);
        }
        Ok(QPolynomial::from_coeffs(out))
    }

    pub fn mul(&self, other: &QPolynomial) -> Result<QPolynomial> {
        if self.is_zero() || other.is_zero() {
            return Ok(QPolynomial::zero());
        }
        let mut out = vec![0i128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = cadd(out[i + j], cmul(a, b)?)?;
            }
        }
        Ok(QPolynomial::from_coeffs(out))
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> QPolynomial {
        if self.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        QPolynomial { coeffs }
    }

    /// Exact quotient `self / divisor`; errors if the division leaves a
    /// remainder or a coefficient quotient is inexact.
    pub fn exact_div(&self, divisor: &QPolynomial) -> Result<QPolynomial> {
        if divisor.is_zero() {
            return Err(Error::Divisibility);
        }
        if self.is_zero() {
            return Ok(QPolynomial::zero());
        }
        if self.coeffs.len() < divisor.coeffs.len() {
            return Err(Error::Divisibility);
        }
        let lead = *divisor.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let qlen = self.coeffs.len() - divisor.coeffs.len() + 1;
        let mut quot = vec![0i128; qlen];
        for i in (0..qlen).rev() {
            let top = rem[i + divisor.coeffs.len() - 1];
            if top % lead != 0 {
                return Err(Error::Divisibility);
            }
            let c = top / lead;
            quot[i] = c;
            if c != 0 {
                for (j, &d) in divisor.coeffs.iter().enumerate() {
                    let t = cmul(c, d)?;
                    rem[i + j] = rem[i + j]
                        .checked_sub(t)
                        .ok_or(Error::Overflow("polynomial division"))?;
                }
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return Err(Error::Divisibility);
        }
        Ok(QPolynomial::from_coeffs(quot))
    }

    /// Value at q = 1, i.e. the sum of the coefficients.
    pub fn eval_at_one(&self) -> Result<i128> {
        let mut acc = 0i128;
        for &c in &self.coeffs {
            acc = cadd(acc, c)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (p, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (c, p) {
                (c, 0) => write!(f, "{}", c)?,
                (1, 1) => write!(f, "q")?,
                (1, p) => write!(f, "q^{}", p)?,
                (c, 1) => write!(f, "{}q", c)?,
                (c, p) => write!(f, "{}q^{}", c, p)?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    coeffs: Vec<i64>,
}

impl Serialize for QPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs: std::result::Result<Vec<i64>, _> =
            self.coeffs.iter().map(|&c| i64::try_from(c)).collect();
        match coeffs {
            Ok(coeffs) => Wire { coeffs }.serialize(s),
            Err(_) => Err(serde::ser::Error::custom("coefficient exceeds i64")),
        }
    }
}

impl<'de> Deserialize<'de> for QPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = Wire::deserialize(d)?;
        Ok(QPolynomial::from_coeffs(
            w.coeffs.into_iter().map(i128::from).collect(),
        ))
    }
}

/// The q-integer `[m]_q = 1 + q + ... + q^(m-1)`; `[0]_q = 0`.
pub fn q_int(m: usize) -> QPolynomial {
    QPolynomial::from_coeffs(vec![1; m])
}

/// The q-factorial `[m]_q!`.
pub fn q_factorial(m: usize) -> Result<QPolynomial> {
    let mut acc = QPolynomial::one();
    for i in 1..=m {
        acc = acc.mul(&q_int(i))?;
    }
    Ok(acc)
}

/// The Gaussian binomial coefficient `[n choose k]_q`.
pub fn q_binomial(n: usize, k: usize) -> Result<QPolynomial> {
    if k > n {
        return Ok(QPolynomial::zero());
    }
    q_factorial(n)?
        .exact_div(&q_factorial(k)?)?
        .exact_div(&q_factorial(n - k)?)
}

/// The q-Catalan polynomial `C_m(q) = (1/[m+1]_q) [2m choose m]_q`.
pub fn q_catalan(m: usize) -> Result<QPolynomial> {
    q_binomial(2 * m, m)?.exact_div(&q_int(m + 1))
}

/// The q-Narayana polynomial
/// `N_q(n, m) = (1/[n]_q) [n choose m]_q [n choose m+1]_q q^(m^2+m)`.
pub fn q_narayana(n: usize, m: usize) -> Result<QPolynomial> {
    let prod = q_binomial(n, m)?.mul(&q_binomial(n, m + 1)?)?;
    Ok(prod.exact_div(&q_int(n))?.shift(m * m + m))
}

/// Comajor-index generating function `sum q^comaj(T)` over a family of
/// tableaux.
pub fn comaj_gf<'a, I>(tableaux: I) -> Result<QPolynomial>
where
    I: IntoIterator<Item = &'a Tableau>,
{
    let mut acc = QPolynomial::zero();
    for t in tableaux {
        acc = acc.add(&QPolynomial::monomial(1, t.statistics().comaj))?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(cs: &[i128]) -> QPolynomial {
        QPolynomial::from_coeffs(cs.to_vec())
    }

    #[test]
    fn test_ring_ops() {
        let a = poly(&[1, 1]); // 1 + q
        let sq = a.mul(&a).unwrap();
        assert_eq!(sq, poly(&[1, 2, 1]));
        assert_eq!(sq.sub(&a).unwrap(), poly(&[0, 1, 1]));
        assert_eq!(a.shift(2), poly(&[0, 0, 1, 1]));
        assert_eq!(sq.eval_at_one().unwrap(), 4);
        assert_eq!(sq.exact_div(&a).unwrap(), a);
    }

    #[test]
    fn test_exact_div_remainder_is_error() {
        let a = poly(&[1, 0, 1]); // 1 + q^2
        let b = poly(&[1, 1]); // 1 + q
        assert!(matches!(a.exact_div(&b), Err(Error::Divisibility)));
        assert!(matches!(a.exact_div(&QPolynomial::zero()), Err(Error::Divisibility)));
    }

    #[test]
    fn test_q_int_and_factorial() {
        assert_eq!(q_int(0), QPolynomial::zero());
        assert_eq!(q_int(3), poly(&[1, 1, 1]));
        assert_eq!(q_factorial(3).unwrap(), poly(&[1, 2, 2, 1]));
    }

    #[test]
    fn test_q_binomial() {
        assert_eq!(q_binomial(4, 2).unwrap(), poly(&[1, 1, 2, 1, 1]));
        assert_eq!(q_binomial(3, 1).unwrap(), poly(&[1, 1, 1]));
        assert_eq!(q_binomial(5, 5).unwrap(), QPolynomial::one());
        assert_eq!(q_binomial(2, 5).unwrap(), QPolynomial::zero());
    }

    #[test]
    fn test_q_binomial_symmetry() {
        for n in 0..=10 {
            for k in 0..=n {
                assert_eq!(q_binomial(n, k).unwrap(), q_binomial(n, n - k).unwrap());
            }
        }
    }

    #[test]
    fn test_q_catalan() {
        assert_eq!(q_catalan(0).unwrap(), QPolynomial::one());
        assert_eq!(q_catalan(2).unwrap(), poly(&[1, 0, 1]));
        assert_eq!(q_catalan(3).unwrap(), poly(&[1, 0, 1, 1, 1, 0, 1]));
    }

    #[test]
    fn test_q_catalan_evaluates_to_catalan_number() {
        let catalan = [1i128, 1, 2, 5, 14, 42, 132, 429, 1430];
        for (m, &c) in catalan.iter().enumerate() {
            assert_eq!(q_catalan(m).unwrap().eval_at_one().unwrap(), c);
        }
    }

    #[test]
    fn test_q_narayana() {
        assert_eq!(q_narayana(2, 0).unwrap(), QPolynomial::one());
        assert_eq!(q_narayana(2, 1).unwrap(), poly(&[0, 0, 1]));
        assert_eq!(q_narayana(3, 1).unwrap(), poly(&[0, 0, 1, 1, 1]));
    }

    #[test]
    fn test_q_narayana_sums_to_q_catalan() {
        for n in 1..=8 {
            let mut acc = QPolynomial::zero();
            for m in 0..n {
                acc = acc.add(&q_narayana(n, m).unwrap()).unwrap();
            }
            assert_eq!(acc, q_catalan(n).unwrap());
        }
    }

    #[test]
    fn test_json_roundtrip() {
        let p = poly(&[1, 0, 1]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"coeffs":[1,0,1]}"#);
        let back: QPolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        // trailing zeros are normalized away on the way in
        let trimmed: QPolynomial = serde_json::from_str(r#"{"coeffs":[1,0]}"#).unwrap();
        assert_eq!(trimmed, QPolynomial::one());
    }

    fn small_poly() -> impl Strategy<Value = QPolynomial> {
        proptest::collection::vec(-50i128..50, 0..8).prop_map(QPolynomial::from_coeffs)
    }

    proptest! {
        #[test]
        fn prop_mul_distributes_over_add(a in small_poly(), b in small_poly(), c in small_poly()) {
            let lhs = a.add(&b).unwrap().mul(&c).unwrap();
            let rhs = a.mul(&c).unwrap().add(&b.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn prop_exact_div_inverts_mul(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            let prod = a.mul(&b).unwrap();
            prop_assert_eq!(prod.exact_div(&b).unwrap(), a);
        }

        #[test]
        fn prop_eval_at_one_is_multiplicative(a in small_poly(), b in small_poly()) {
            let prod = a.mul(&b).unwrap();
            prop_assert_eq!(
                prod.eval_at_one().unwrap(),
                a.eval_at_one().unwrap() * b.eval_at_one().unwrap()
            );
        }
    }
}
