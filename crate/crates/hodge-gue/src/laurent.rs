//! The coefficient ring: Laurent polynomials in `x` plus a Laurent polynomial
//! multiplying `log x`.
//!
//! Elements look like `sum a_n x^n + (sum b_n x^n) log x`. Addition and
//! differentiation are unrestricted; multiplication is defined as long as at
//! most one factor carries a log part (`log^2 x` never arises in any formula
//! in scope, and the type refuses to create it). Zero coefficients are never
//! stored, so equality is plain map equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};

use crate::rational::{format_rational, Rational};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentLog {
    poly: BTreeMap<i64, Rational>,
    logpart: BTreeMap<i64, Rational>,
}

fn insert_nonzero(map: &mut BTreeMap<i64, Rational>, exp: i64, c: Rational) {
    if !c.is_zero() {
        map.insert(exp, c);
    }
}

fn add_into(map: &mut BTreeMap<i64, Rational>, exp: i64, c: &Rational) {
    if c.is_zero() {
        return;
    }
    let entry = map.entry(exp).or_insert_with(Rational::zero);
    *entry += c;
    if entry.is_zero() {
        map.remove(&exp);
    }
}

impl LaurentLog {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, Rational::one())
    }

    /// `c * x^exp`.
    pub fn monomial(exp: i64, c: Rational) -> Self {
        let mut poly = BTreeMap::new();
        insert_nonzero(&mut poly, exp, c);
        LaurentLog { poly, logpart: BTreeMap::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, c)
    }

    /// `c * x^exp * log x`.
    pub fn log_monomial(exp: i64, c: Rational) -> Self {
        let mut logpart = BTreeMap::new();
        insert_nonzero(&mut logpart, exp, c);
        LaurentLog { poly: BTreeMap::new(), logpart }
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_empty() && self.logpart.is_empty()
    }

    pub fn is_log_free(&self) -> bool {
        self.logpart.is_empty()
    }

    /// The coefficient of `x^exp` in the log-free part.
    pub fn coeff(&self, exp: i64) -> Rational {
        self.poly.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    /// The coefficient of `x^exp log x`.
    pub fn log_coeff(&self, exp: i64) -> Rational {
        self.logpart.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    /// The scalar part: coefficient of `x^0` with no log.
    pub fn constant_coeff(&self) -> Rational {
        self.coeff(0)
    }

    /// `Some((exp, c))` when the element is the single log-free monomial
    /// `c x^exp` (with `c != 0`).
    pub fn as_monomial(&self) -> Option<(i64, Rational)> {
        if !self.logpart.is_empty() || self.poly.len() != 1 {
            return None;
        }
        let (&exp, c) = self.poly.iter().next().unwrap();
        Some((exp, c.clone()))
    }

    pub fn scalar_mul(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let map = |m: &BTreeMap<i64, Rational>| m.iter().map(|(&e, v)| (e, v * c)).collect();
        LaurentLog { poly: map(&self.poly), logpart: map(&self.logpart) }
    }

    /// Multiplication by `x^k`.
    pub fn mul_xpow(&self, k: i64) -> Self {
        let shift = |m: &BTreeMap<i64, Rational>| m.iter().map(|(&e, v)| (e + k, v.clone())).collect();
        LaurentLog { poly: shift(&self.poly), logpart: shift(&self.logpart) }
    }

    /// d/dx, with `(x^n)' = n x^(n-1)` and `(x^n log x)' = n x^(n-1) log x + x^(n-1)`.
    pub fn ddx(&self) -> Self {
        let mut out = LaurentLog::default();
        for (&e, c) in &self.poly {
            add_into(&mut out.poly, e - 1, &(c * Rational::from_integer(e.into())));
        }
        for (&e, c) in &self.logpart {
            add_into(&mut out.logpart, e - 1, &(c * Rational::from_integer(e.into())));
            add_into(&mut out.poly, e - 1, c);
        }
        out
    }

    /// Renders with a custom symbol for the variable, e.g. `w`.
    pub fn to_string_with(&self, sym: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        let render = |e: i64, c: &Rational, log: bool| {
            let mut s = format_rational(c);
            if e != 0 {
                s.push_str(&format!("*{sym}^{e}"));
            }
            if log {
                s.push_str(&format!("*log({sym})"));
            }
            s
        };
        for (&e, c) in &self.poly {
            parts.push(render(e, c, false));
        }
        for (&e, c) in &self.logpart {
            parts.push(render(e, c, true));
        }
        parts.join(" + ")
    }
}

impl Add for &LaurentLog {
    type Output = LaurentLog;
    fn add(self, rhs: &LaurentLog) -> LaurentLog {
        let mut out = self.clone();
        for (&e, c) in &rhs.poly {
            add_into(&mut out.poly, e, c);
        }
        for (&e, c) in &rhs.logpart {
            add_into(&mut out.logpart, e, c);
        }
        out
    }
}

impl Sub for &LaurentLog {
    type Output = LaurentLog;
    fn sub(self, rhs: &LaurentLog) -> LaurentLog {
        self + &(-rhs)
    }
}

impl Neg for &LaurentLog {
    type Output = LaurentLog;
    fn neg(self) -> LaurentLog {
        let map = |m: &BTreeMap<i64, Rational>| m.iter().map(|(&e, v)| (e, -v.clone())).collect();
        LaurentLog { poly: map(&self.poly), logpart: map(&self.logpart) }
    }
}

impl Mul for &LaurentLog {
    type Output = LaurentLog;
    fn mul(self, rhs: &LaurentLog) -> LaurentLog {
        assert!(
            self.logpart.is_empty() || rhs.logpart.is_empty(),
            "log^2 x is outside the coefficient ring"
        );
        let mut out = LaurentLog::default();
        for (&ea, ca) in &self.poly {
            for (&eb, cb) in &rhs.poly {
                add_into(&mut out.poly, ea + eb, &(ca * cb));
            }
            for (&eb, cb) in &rhs.logpart {
                add_into(&mut out.logpart, ea + eb, &(ca * cb));
            }
        }
        for (&ea, ca) in &self.logpart {
            for (&eb, cb) in &rhs.poly {
                add_into(&mut out.logpart, ea + eb, &(ca * cb));
            }
        }
        out
    }
}

impl fmt::Display for LaurentLog {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with("x"))
    }
}

impl fmt::Debug for LaurentLog {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_i};

    fn x(e: i64) -> LaurentLog {
        LaurentLog::monomial(e, rat_i(1))
    }

    #[test]
    fn arithmetic_cancels_to_canonical_form() {
        let a = &x(2) + &x(-1);
        let b = &LaurentLog::monomial(2, rat_i(-1)) + &x(0);
        let sum = &a + &b;
        assert_eq!(sum.coeff(2), rat_i(0));
        assert_eq!(sum.coeff(-1), rat_i(1));
        assert_eq!(sum.coeff(0), rat_i(1));
        assert_eq!(&sum - &sum, LaurentLog::zero());
    }

    #[test]
    fn multiplication_mixes_log_linearly() {
        let a = &x(2) + &LaurentLog::log_monomial(0, rat(1, 2));
        let b = &x(1) + &x(0);
        let p = &a * &b;
        assert_eq!(p.coeff(3), rat_i(1));
        assert_eq!(p.log_coeff(1), rat(1, 2));
        assert_eq!(p.log_coeff(0), rat(1, 2));
    }

    #[test]
    #[should_panic(expected = "log^2")]
    fn log_squared_is_rejected() {
        let l = LaurentLog::log_monomial(0, rat_i(1));
        let _ = &l * &l;
    }

    #[test]
    fn derivative_of_log_monomial() {
        // (x^2/2 * log x)' = x log x + x/2
        let a = LaurentLog::log_monomial(2, rat(1, 2));
        let d = a.ddx();
        assert_eq!(d.log_coeff(1), rat_i(1));
        assert_eq!(d.coeff(1), rat(1, 2));
        // (log x)' = 1/x
        let l = LaurentLog::log_monomial(0, rat_i(1));
        assert_eq!(l.ddx(), LaurentLog::monomial(-1, rat_i(1)));
    }

    #[test]
    fn monomial_detection() {
        assert_eq!(x(3).as_monomial(), Some((3, rat_i(1))));
        assert_eq!((&x(3) + &x(0)).as_monomial(), None);
        assert_eq!(LaurentLog::log_monomial(0, rat_i(1)).as_monomial(), None);
    }
}
