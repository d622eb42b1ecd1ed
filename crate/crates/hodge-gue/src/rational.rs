//! Exact rational scalars and small number-theoretic helpers.
//!
//! `Rational` is the universal scalar of the crate: arbitrary-precision,
//! always reduced, denominator positive. Serialization is the string `p/q`
//! (or just `p` when the denominator is 1); that format is shared by the
//! table files and every CLI report.

use num::bigint::Sign;
use num::{BigInt, BigRational, One, Signed, Zero};

pub type Rational = BigRational;

/// `n/d` as a rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// An integer as a rational.
pub fn rat_i(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Canonical `p/q` form (`p` alone when `q == 1`).
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses the `p/q` form produced by [`format_rational`].
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
        Some((p, q)) => {
            let p = p.parse::<BigInt>().ok()?;
            let q = q.parse::<BigInt>().ok()?;
            if q.is_zero() || q.sign() == Sign::Minus {
                return None;
            }
            Some(Rational::new(p, q))
        }
    }
}

pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// m-th harmonic number `1 + 1/2 + … + 1/m` (0 for m = 0).
pub fn harmonic(m: u32) -> Rational {
    (1..=m).map(|k| rat(1, k as i64)).sum()
}

/// Double factorial `(2e-1)!! = 1·3·5···(2e-1)`, the number of perfect
/// matchings of `2e` labeled points.
pub fn double_factorial_odd(e: u32) -> u64 {
    (0..e).map(|i| 2 * i as u64 + 1).product()
}

/// Bernoulli numbers `B_0 … B_n` by the defining recurrence
/// `sum_{j<=m} C(m+1, j) B_j = 0` (B_1 = -1/2 convention).
pub fn bernoulli_numbers(n: u32) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(n as usize + 1);
    b.push(Rational::one());
    for m in 1..=n {
        let mut acc = Rational::zero();
        for (j, bj) in b.iter().enumerate() {
            acc += Rational::from_integer(binomial(m + 1, j as u32)) * bj;
        }
        b.push(-acc / Rational::from_integer(BigInt::from(m + 1)));
    }
    b
}

pub fn bernoulli(n: u32) -> Rational {
    bernoulli_numbers(n).pop().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_and_parse_roundtrip() {
        let v = rat(-22, 8);
        assert_eq!(format_rational(&v), "-11/4");
        assert_eq!(parse_rational("-11/4").unwrap(), v);
        assert_eq!(format_rational(&rat_i(5)), "5");
        assert_eq!(parse_rational("5").unwrap(), rat_i(5));
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("1/-2").is_none());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(2, 1), BigInt::from(2));
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(3, 5), BigInt::zero());
    }

    #[test]
    fn harmonics() {
        assert_eq!(harmonic(0), rat_i(0));
        assert_eq!(harmonic(3), rat(11, 6));
    }

    #[test]
    fn bernoulli_values() {
        // cross-check of the recurrence against the classical values
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(6), rat(1, 42));
        assert_eq!(bernoulli(8), rat(-1, 30));
        assert_eq!(bernoulli(10), rat(5, 66));
        assert_eq!(bernoulli(3), rat_i(0));
    }

    #[test]
    fn double_factorials() {
        assert_eq!(double_factorial_odd(0), 1);
        assert_eq!(double_factorial_odd(2), 3);
        assert_eq!(double_factorial_odd(8), 2_027_025);
    }
}
