//! Closed-form and recurrence counters, all in checked `u128` arithmetic.

use crate::error::{Error, Result};

/// Binomial coefficient by the multiplicative formula.
pub fn binomial(n: u128, k: u128) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul(n - i)
            .ok_or(Error::Overflow("binomial"))?
            / (i + 1);
    }
    Ok(acc)
}

/// Catalan number C_n = binomial(2n, n) / (n + 1).
pub fn catalan_number(n: usize) -> Result<u128> {
    let n = n as u128;
    Ok(binomial(2 * n, n)? / (n + 1))
}

/// Motzkin number by the recurrence
/// M_{n+1} = M_n + sum_{i=0}^{n-1} M_i M_{n-1-i}.
pub fn motzkin_number(n: usize) -> Result<u128> {
    let mut m: Vec<u128> = Vec::with_capacity(n + 1);
    m.push(1);
    for t in 1..=n {
        let mut next = m[t - 1];
        for i in 0..t - 1 {
            let prod = m[i]
                .checked_mul(m[t - 2 - i])
                .ok_or(Error::Overflow("motzkin"))?;
            next = next.checked_add(prod).ok_or(Error::Overflow("motzkin"))?;
        }
        m.push(next);
    }
    Ok(m[n])
}

/// Number of involutions by I_n = I_{n-1} + (n - 1) I_{n-2}.
pub fn involution_number(n: usize) -> Result<u128> {
    let (mut prev, mut cur): (u128, u128) = (1, 1);
    for t in 2..=n {
        let step = prev
            .checked_mul(t as u128 - 1)
            .ok_or(Error::Overflow("involution"))?;
        let next = cur.checked_add(step).ok_or(Error::Overflow("involution"))?;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn test_binomial() {
        assert_eq!(binomial(0, 0).unwrap(), 1);
        assert_eq!(binomial(5, 2).unwrap(), 10);
        assert_eq!(binomial(5, 6).unwrap(), 0);
        assert_eq!(binomial(16, 8).unwrap(), 12870);
        assert_eq!(binomial(100, 50).unwrap(), 100891344545564193334812497256);
    }

    #[test]
    fn test_catalan() {
        let expected = [1u128, 1, 2, 5, 14, 42, 132, 429, 1430];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(catalan_number(n).unwrap(), c, "n = {}", n);
        }
    }

    #[test]
    fn test_motzkin() {
        let expected = [
            1u128, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798, 15511, 41835, 113634,
            310572, 853467,
        ];
        for (n, &m) in expected.iter().enumerate() {
            assert_eq!(motzkin_number(n).unwrap(), m, "n = {}", n);
        }
    }

    #[test]
    fn test_involutions() {
        let expected = [
            1u128, 1, 2, 4, 10, 26, 76, 232, 764, 2620, 9496, 35696, 140152, 568504, 2390480,
        ];
        for (n, &i) in expected.iter().enumerate() {
            assert_eq!(involution_number(n).unwrap(), i, "n = {}", n);
        }
    }

    #[test]
    fn test_overflow_detection() {
        assert!(matches!(binomial(300, 150), Err(Error::Overflow(_))));
        assert!(matches!(motzkin_number(200), Err(Error::Overflow(_))));
    }
}
