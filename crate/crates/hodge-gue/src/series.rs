//! Truncated multivariate power series over the Laurent-plus-log ring.
//!
//! A [`SeriesRing`] fixes the variable names, a weight per variable, the
//! maximum stored total weight, and optional per-variable degree caps; a
//! [`SeriesElement`] is a sparse term map living in one such ring. For the
//! common case every weight is 1 and the total weight is the total degree.
//! Weights/caps exist for the intersection-number expansions, where the
//! natural grading gives variable `t_j` weight `j - 1` and the jet-producing
//! shift variable weight 0 with a hard degree cap.
//!
//! Truncation is a ring quotient: multiplication drops any monomial that
//! exceeds the weight bound or a cap, so all operations stay consistent.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num::{One, Signed, Zero};
use thiserror::Error;

use crate::laurent::LaurentLog;
use crate::rational::{rat_i, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("non-unital leading term: degree-0 coefficient must be a monomial x^m with coefficient 1")]
    NonUnitalLeadingTerm,
    #[error("leading term is not invertible (degree-0 coefficient must be a nonzero monomial)")]
    NonInvertibleLeading,
    #[error("degree-0 coefficient {0} cannot be exponentiated inside the ring")]
    NonExponentiableConstant(String),
    #[error("series has logarithmic corrections where a log-free tail is required")]
    LogTail,
    #[error("tail of the series has a weight-0 term; log/exp/inverse would not terminate")]
    WeightZeroTail,
    #[error("multi-index {0:?} is beyond the truncation of the ring")]
    BeyondTruncation(Vec<u32>),
    #[error("fixed-point map failed to contract (residual weight stuck after {0} iterations)")]
    NonContracting(u32),
}

/// The ambient ring of a family of series: variables, grading, truncation.
#[derive(Debug, PartialEq, Eq)]
pub struct SeriesRing {
    vars: Vec<String>,
    weights: Vec<u32>,
    caps: Vec<Option<u32>>,
    max_weight: u32,
}

impl SeriesRing {
    /// Ring truncated at plain total degree `max_degree` (all weights 1).
    pub fn total_degree(vars: &[&str], max_degree: u32) -> Arc<Self> {
        let weights = vec![1; vars.len()];
        let caps = vec![None; vars.len()];
        Arc::new(SeriesRing {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            weights,
            caps,
            max_weight: max_degree,
        })
    }

    /// Ring with per-variable weights and optional per-variable degree caps.
    /// A weight-0 variable must be capped, otherwise monomial sets at fixed
    /// weight would be infinite.
    pub fn weighted(vars: &[(&str, u32, Option<u32>)], max_weight: u32) -> Arc<Self> {
        for (name, w, cap) in vars {
            assert!(*w > 0 || cap.is_some(), "weight-0 variable {name} needs a cap");
        }
        Arc::new(SeriesRing {
            vars: vars.iter().map(|(s, _, _)| s.to_string()).collect(),
            weights: vars.iter().map(|(_, w, _)| *w).collect(),
            caps: vars.iter().map(|(_, _, c)| *c).collect(),
            max_weight,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn max_weight(&self) -> u32 {
        self.max_weight
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn weight(&self, idx: &[u32]) -> u32 {
        idx.iter().zip(&self.weights).map(|(e, w)| e * w).sum()
    }

    fn admits(&self, idx: &[u32]) -> bool {
        self.weight(idx) <= self.max_weight
            && idx
                .iter()
                .zip(&self.caps)
                .all(|(e, cap)| cap.map_or(true, |c| *e <= c))
    }

    fn zero_index(&self) -> Vec<u32> {
        vec![0; self.vars.len()]
    }

    pub fn monomial_name(&self, idx: &[u32]) -> String {
        let mut parts = Vec::new();
        for (i, &e) in idx.iter().enumerate() {
            if e == 1 {
                parts.push(self.vars[i].clone());
            } else if e > 1 {
                parts.push(format!("{}^{}", self.vars[i], e));
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

fn same_ring(a: &SeriesElement, b: &SeriesElement) {
    assert!(
        Arc::ptr_eq(&a.ring, &b.ring) || a.ring == b.ring,
        "series belong to different rings"
    );
}

#[derive(Clone, PartialEq, Eq)]
pub struct SeriesElement {
    ring: Arc<SeriesRing>,
    terms: BTreeMap<Vec<u32>, LaurentLog>,
}

impl SeriesElement {
    pub fn zero(ring: &Arc<SeriesRing>) -> Self {
        SeriesElement { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ring: &Arc<SeriesRing>, c: LaurentLog) -> Self {
        let mut s = Self::zero(ring);
        if !c.is_zero() {
            s.terms.insert(ring.zero_index(), c);
        }
        s
    }

    pub fn one(ring: &Arc<SeriesRing>) -> Self {
        Self::constant(ring, LaurentLog::one())
    }

    /// The constant series `x^m`.
    pub fn x_pow(ring: &Arc<SeriesRing>, m: i64) -> Self {
        Self::constant(ring, LaurentLog::monomial(m, Rational::one()))
    }

    pub fn scalar(ring: &Arc<SeriesRing>, c: Rational) -> Self {
        Self::constant(ring, LaurentLog::constant(c))
    }

    /// The series consisting of the single variable `var`.
    pub fn var(ring: &Arc<SeriesRing>, var: usize) -> Self {
        let mut idx = ring.zero_index();
        idx[var] = 1;
        assert!(ring.admits(&idx), "variable exceeds ring truncation");
        let mut s = Self::zero(ring);
        s.terms.insert(idx, LaurentLog::one());
        s
    }

    pub fn ring(&self) -> &Arc<SeriesRing> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &LaurentLog)> {
        self.terms.iter()
    }

    /// Exact coefficient of the monomial `idx`; zero when absent, error when
    /// the monomial lies beyond the ring truncation.
    pub fn coefficient(&self, idx: &[u32]) -> Result<LaurentLog, SeriesError> {
        if idx.len() != self.ring.num_vars() || !self.ring.admits(idx) {
            return Err(SeriesError::BeyondTruncation(idx.to_vec()));
        }
        Ok(self.terms.get(idx).cloned().unwrap_or_else(LaurentLog::zero))
    }

    /// Coefficient lookup by `(variable name, exponent)` pairs.
    pub fn coefficient_named(&self, monomial: &[(&str, u32)]) -> Result<LaurentLog, SeriesError> {
        let mut idx = self.ring.zero_index();
        for (name, e) in monomial {
            let i = self
                .ring
                .var_index(name)
                .unwrap_or_else(|| panic!("unknown variable {name}"));
            idx[i] = *e;
        }
        self.coefficient(&idx)
    }

    fn insert(&mut self, idx: Vec<u32>, c: LaurentLog) {
        if !c.is_zero() && self.ring.admits(&idx) {
            self.terms.insert(idx, c);
        }
    }

    fn add_term(&mut self, idx: &[u32], c: &LaurentLog) {
        if c.is_zero() || !self.ring.admits(idx) {
            return;
        }
        match self.terms.get_mut(idx) {
            Some(existing) => {
                let sum = &*existing + c;
                if sum.is_zero() {
                    self.terms.remove(idx);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(idx.to_vec(), c.clone());
            }
        }
    }

    pub fn scalar_mul(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let mut out = Self::zero(&self.ring);
        for (idx, l) in &self.terms {
            out.terms.insert(idx.clone(), l.scalar_mul(c));
        }
        out
    }

    pub fn coeff_mul(&self, c: &LaurentLog) -> Self {
        let mut out = Self::zero(&self.ring);
        for (idx, l) in &self.terms {
            let prod = l * c;
            if !prod.is_zero() {
                out.terms.insert(idx.clone(), prod);
            }
        }
        out
    }

    /// Smallest total weight among stored terms.
    pub fn min_weight(&self) -> Option<u32> {
        self.terms.keys().map(|idx| self.ring.weight(idx)).min()
    }

    /// Drops all terms of weight greater than `w` (a projection inside the
    /// same ring; useful when comparing derivatives that are exact only up to
    /// a smaller weight).
    pub fn truncate_above(&self, w: u32) -> Self {
        let mut out = Self::zero(&self.ring);
        for (idx, c) in &self.terms {
            if self.ring.weight(idx) <= w {
                out.terms.insert(idx.clone(), c.clone());
            }
        }
        out
    }

    /// Coefficient-wise d/dx.
    pub fn ddx(&self) -> Self {
        let mut out = Self::zero(&self.ring);
        for (idx, c) in &self.terms {
            let d = c.ddx();
            if !d.is_zero() {
                out.terms.insert(idx.clone(), d);
            }
        }
        out
    }

    /// Partial derivative with respect to ring variable `var`.
    pub fn d_var(&self, var: usize) -> Self {
        let mut out = Self::zero(&self.ring);
        for (idx, c) in &self.terms {
            let e = idx[var];
            if e == 0 {
                continue;
            }
            let mut idx2 = idx.clone();
            idx2[var] = e - 1;
            out.add_term(&idx2, &c.scalar_mul(&rat_i(e as i64)));
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one(&self.ring);
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Integer power, negative exponents via series inversion.
    pub fn pow_i(&self, n: i64) -> Result<Self, SeriesError> {
        if n >= 0 {
            Ok(self.pow(n as u32))
        } else {
            Ok(self.invert()?.pow((-n) as u32))
        }
    }

    /// Splits off the leading monomial: `self = c x^m (1 + r)` with `r` of
    /// positive weight. Errors unless the degree-0 coefficient is a single
    /// log-free monomial.
    fn normalize_leading(&self) -> Result<(i64, Rational, SeriesElement), SeriesError> {
        let lead = self
            .terms
            .get(&self.ring.zero_index())
            .cloned()
            .unwrap_or_else(LaurentLog::zero);
        let (m, c) = lead.as_monomial().ok_or(SeriesError::NonInvertibleLeading)?;
        let inv_lead = LaurentLog::monomial(-m, c.recip());
        let mut r = self.coeff_mul(&inv_lead);
        r.terms.remove(&self.ring.zero_index());
        for (idx, coef) in &r.terms {
            if self.ring.weight(idx) == 0 {
                return Err(SeriesError::WeightZeroTail);
            }
            if !coef.is_log_free() {
                return Err(SeriesError::LogTail);
            }
        }
        Ok((m, c, r))
    }

    /// Multiplicative inverse; requires the degree-0 coefficient to be a
    /// nonzero monomial `c x^m` and the tail to be log-free.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let (m, c, r) = self.normalize_leading()?;
        // (1 + r)^{-1} = sum (-r)^k
        let neg_r = -&r;
        let mut geom = Self::one(&self.ring);
        let mut rpow = Self::one(&self.ring);
        loop {
            rpow = &rpow * &neg_r;
            if rpow.is_zero() {
                break;
            }
            geom = &geom + &rpow;
        }
        Ok(geom.coeff_mul(&LaurentLog::monomial(-m, c.recip())))
    }

    /// Formal logarithm. The degree-0 coefficient must be exactly `x^m`; the
    /// result is `m log x + log(1 + r)` expanded to the ring truncation.
    pub fn log(&self) -> Result<Self, SeriesError> {
        let (m, c, r) = self.normalize_leading().map_err(|e| match e {
            SeriesError::NonInvertibleLeading => SeriesError::NonUnitalLeadingTerm,
            other => other,
        })?;
        if !c.is_one() {
            return Err(SeriesError::NonUnitalLeadingTerm);
        }
        let mut out = Self::constant(&self.ring, LaurentLog::log_monomial(0, rat_i(m)));
        // log(1+r) = sum_{k>=1} (-1)^{k+1} r^k / k
        let mut rpow = Self::one(&self.ring);
        let mut k: i64 = 0;
        loop {
            rpow = &rpow * &r;
            k += 1;
            if rpow.is_zero() {
                break;
            }
            let c = Rational::new((if k % 2 == 1 { 1 } else { -1 }).into(), k.into());
            out = &out + &rpow.scalar_mul(&c);
        }
        Ok(out)
    }

    /// Formal exponential. The degree-0 coefficient must be `m log x` for an
    /// integer `m` (possibly zero); the result is `x^m exp(rest)`.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        let lead = self
            .terms
            .get(&self.ring.zero_index())
            .cloned()
            .unwrap_or_else(LaurentLog::zero);
        let pure_log = LaurentLog::log_monomial(0, lead.log_coeff(0));
        if lead != pure_log || !lead.log_coeff(0).denom().is_one() {
            return Err(SeriesError::NonExponentiableConstant(lead.to_string()));
        }
        let m: i64 = {
            let n = lead.log_coeff(0);
            let n = n.numer();
            i64::try_from(n.clone()).map_err(|_| {
                SeriesError::NonExponentiableConstant(lead.to_string())
            })?
        };
        let mut rest = self.clone();
        rest.terms.remove(&self.ring.zero_index());
        for (idx, coef) in &rest.terms {
            if self.ring.weight(idx) == 0 {
                return Err(SeriesError::WeightZeroTail);
            }
            if !coef.is_log_free() {
                return Err(SeriesError::LogTail);
            }
        }
        let mut out = Self::one(&self.ring);
        let mut term = Self::one(&self.ring);
        let mut k: i64 = 0;
        loop {
            term = &term * &rest;
            k += 1;
            if term.is_zero() {
                break;
            }
            term = term.scalar_mul(&Rational::new(1.into(), k.into()));
            out = &out + &term;
        }
        Ok(out.coeff_mul(&LaurentLog::monomial(m, Rational::one())))
    }

    /// Subtracts the scalar part (the rational constant with no x and no log)
    /// of the degree-0 coefficient. Used for comparisons modulo additive
    /// constants.
    pub fn strip_constant(&self) -> Self {
        let mut out = self.clone();
        let zero_idx = self.ring.zero_index();
        if let Some(c) = out.terms.get(&zero_idx) {
            let stripped = c - &LaurentLog::constant(c.constant_coeff());
            if stripped.is_zero() {
                out.terms.remove(&zero_idx);
            } else {
                out.terms.insert(zero_idx, stripped);
            }
        }
        out
    }

    /// Groups term references by total weight, ascending.
    fn weight_buckets(&self) -> BTreeMap<u32, Vec<(&Vec<u32>, &LaurentLog)>> {
        let mut buckets: BTreeMap<u32, Vec<_>> = BTreeMap::new();
        for (idx, c) in &self.terms {
            buckets.entry(self.ring.weight(idx)).or_default().push((idx, c));
        }
        buckets
    }
}

impl Add for &SeriesElement {
    type Output = SeriesElement;
    fn add(self, rhs: &SeriesElement) -> SeriesElement {
        same_ring(self, rhs);
        let mut out = self.clone();
        for (idx, c) in &rhs.terms {
            out.add_term(idx, c);
        }
        out
    }
}

impl Sub for &SeriesElement {
    type Output = SeriesElement;
    fn sub(self, rhs: &SeriesElement) -> SeriesElement {
        self + &(-rhs)
    }
}

impl Neg for &SeriesElement {
    type Output = SeriesElement;
    fn neg(self) -> SeriesElement {
        let mut out = SeriesElement::zero(&self.ring);
        for (idx, c) in &self.terms {
            out.terms.insert(idx.clone(), -c);
        }
        out
    }
}

impl Mul for &SeriesElement {
    type Output = SeriesElement;
    fn mul(self, rhs: &SeriesElement) -> SeriesElement {
        same_ring(self, rhs);
        let max = self.ring.max_weight;
        let a = self.weight_buckets();
        let b = rhs.weight_buckets();
        let mut out = SeriesElement::zero(&self.ring);
        let mut idx = Vec::new();
        for (wa, terms_a) in &a {
            if *wa > max {
                break;
            }
            for (wb, terms_b) in &b {
                if wa + wb > max {
                    break;
                }
                for (ia, ca) in terms_a {
                    for (ib, cb) in terms_b {
                        idx.clear();
                        idx.extend(ia.iter().zip(ib.iter()).map(|(x, y)| x + y));
                        if !self.ring.admits(&idx) {
                            continue;
                        }
                        let prod = *ca * *cb;
                        out.add_term(&idx, &prod);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for SeriesElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(idx, c)| format!("({}) {}", c, self.ring.monomial_name(idx)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Solves `s = map(s)` in the ring of `seed` by graded fixed-point iteration.
///
/// The map must be a graded contraction: images of series agreeing up to
/// weight `d` agree up to weight `d + 1`. The residual `map(s) - s` of the
/// returned series has no terms within the ring truncation. Errors when the
/// residual weight stops increasing.
pub fn fixed_point_solve<F>(seed: &SeriesElement, map: F) -> Result<SeriesElement, SeriesError>
where
    F: Fn(&SeriesElement) -> SeriesElement,
{
    let max_iters = seed.ring.max_weight + 2;
    let mut cur = seed.clone();
    let mut last_resid_weight: Option<u32> = None;
    for _ in 0..max_iters {
        let next = map(&cur);
        let resid = &next - &cur;
        match resid.min_weight() {
            None => return Ok(next),
            Some(w) => {
                if let Some(prev) = last_resid_weight {
                    if w <= prev {
                        return Err(SeriesError::NonContracting(max_iters));
                    }
                }
                last_resid_weight = Some(w);
            }
        }
        cur = next;
    }
    Err(SeriesError::NonContracting(max_iters))
}

/// A genus-indexed family of series, representing `sum_g eps^{2g-2} entry_g`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GenusSeries {
    entries: BTreeMap<u32, SeriesElement>,
}

impl GenusSeries {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, genus: u32, s: SeriesElement) {
        if s.is_zero() {
            self.entries.remove(&genus);
        } else {
            self.entries.insert(genus, s);
        }
    }

    pub fn get(&self, genus: u32) -> Option<&SeriesElement> {
        self.entries.get(&genus)
    }

    pub fn genera(&self) -> impl Iterator<Item = u32> + '_ {
        self.entries.keys().copied()
    }

    pub fn add(&self, rhs: &GenusSeries) -> GenusSeries {
        let mut out = self.clone();
        for (&g, s) in &rhs.entries {
            let sum = match out.entries.get(&g) {
                Some(cur) => cur + s,
                None => s.clone(),
            };
            out.insert(g, sum);
        }
        out
    }

    pub fn scalar_mul(&self, c: &Rational) -> GenusSeries {
        let mut out = GenusSeries::new();
        for (&g, s) in &self.entries {
            out.insert(g, s.scalar_mul(c));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use proptest::prelude::*;

    fn ring2(d: u32) -> Arc<SeriesRing> {
        SeriesRing::total_degree(&["s1", "s2"], d)
    }

    fn x(ring: &Arc<SeriesRing>) -> SeriesElement {
        SeriesElement::x_pow(ring, 1)
    }

    #[test]
    fn geometric_fixed_point_matches_closed_form() {
        // w = x + s1*w  =>  w = x/(1-s1) = x(1 + s1 + s1^2 + ...)
        let ring = ring2(5);
        let s1 = SeriesElement::var(&ring, 0);
        let seed = x(&ring);
        let w = fixed_point_solve(&seed, |w| &x(&ring) + &(&s1 * w)).unwrap();
        for d in 0..=5u32 {
            let c = w.coefficient(&[d, 0]).unwrap();
            assert_eq!(c.as_monomial(), Some((1, rat(1, 1))));
        }
        assert!(w.coefficient(&[1, 1]).unwrap().is_zero());
    }

    #[test]
    fn quadratic_fixed_point_first_terms() {
        // w = x + 2 s2 w^2: iterating by hand to degree 2 gives
        // x + 2x^2 s2 + 8x^3 s2^2.
        let ring = ring2(2);
        let s2 = SeriesElement::var(&ring, 1);
        let two = rat(2, 1);
        let w = fixed_point_solve(&x(&ring), |w| {
            &x(&ring) + &(&s2 * &(w * w)).scalar_mul(&two)
        })
        .unwrap();
        assert_eq!(w.coefficient(&[0, 0]).unwrap().as_monomial(), Some((1, rat(1, 1))));
        assert_eq!(w.coefficient(&[0, 1]).unwrap().as_monomial(), Some((2, rat(2, 1))));
        assert_eq!(w.coefficient(&[0, 2]).unwrap().as_monomial(), Some((3, rat(8, 1))));
    }

    #[test]
    fn constant_fixed_point_is_linear_case() {
        // v = t0 (the map has only the constant term)
        let ring = SeriesRing::total_degree(&["t0"], 4);
        let t0 = SeriesElement::var(&ring, 0);
        let v = fixed_point_solve(&SeriesElement::zero(&ring), |_| t0.clone()).unwrap();
        assert_eq!(v, t0);
    }

    #[test]
    fn non_contracting_map_errors() {
        let ring = ring2(3);
        let err = fixed_point_solve(&SeriesElement::zero(&ring), |w| {
            &w.clone() + &SeriesElement::one(&ring)
        })
        .unwrap_err();
        assert!(matches!(err, SeriesError::NonContracting(_)));
    }

    #[test]
    fn log_of_plain_x() {
        let ring = ring2(3);
        let l = x(&ring).log().unwrap();
        let expect = SeriesElement::constant(&ring, LaurentLog::log_monomial(0, rat(1, 1)));
        assert_eq!(l, expect);
    }

    #[test]
    fn log_of_geometric_series() {
        // log(x/(1-s1)) = log x + s1 + s1^2/2 + s1^3/3
        let ring = ring2(3);
        let s1 = SeriesElement::var(&ring, 0);
        let w = fixed_point_solve(&x(&ring), |w| &x(&ring) + &(&s1 * w)).unwrap();
        let l = w.log().unwrap();
        assert_eq!(l.coefficient(&[0, 0]).unwrap(), LaurentLog::log_monomial(0, rat(1, 1)));
        for d in 1..=3u32 {
            assert_eq!(
                l.coefficient(&[d, 0]).unwrap(),
                LaurentLog::constant(rat(1, d as i64))
            );
        }
    }

    #[test]
    fn log_rejects_non_unital_leading_term() {
        let ring = ring2(3);
        let bad = SeriesElement::x_pow(&ring, 1).scalar_mul(&rat(2, 1));
        assert_eq!(bad.log().unwrap_err(), SeriesError::NonUnitalLeadingTerm);
        let also_bad = &x(&ring) + &SeriesElement::one(&ring);
        assert_eq!(also_bad.log().unwrap_err(), SeriesError::NonUnitalLeadingTerm);
    }

    #[test]
    fn coefficient_beyond_truncation_errors() {
        let ring = ring2(3);
        let s = SeriesElement::one(&ring);
        assert!(matches!(
            s.coefficient(&[4, 0]),
            Err(SeriesError::BeyondTruncation(_))
        ));
    }

    #[test]
    fn exp_undoes_log_with_x_powers() {
        let ring = ring2(4);
        let s1 = SeriesElement::var(&ring, 0);
        let w = fixed_point_solve(&x(&ring), |w| &x(&ring) + &(&s1 * w)).unwrap();
        let roundtrip = w.log().unwrap().exp().unwrap();
        assert_eq!(roundtrip, w);
    }

    #[test]
    fn exp_requires_integer_log_leading() {
        let ring = ring2(2);
        let half_log = SeriesElement::constant(&ring, LaurentLog::log_monomial(0, rat(1, 2)));
        assert!(matches!(
            half_log.exp(),
            Err(SeriesError::NonExponentiableConstant(_))
        ));
        let plain = SeriesElement::one(&ring);
        assert!(matches!(
            plain.exp(),
            Err(SeriesError::NonExponentiableConstant(_))
        ));
    }

    #[test]
    fn weighted_ring_respects_caps() {
        // t0 weight 0 capped at 2; t2 weight 1
        let ring = SeriesRing::weighted(&[("t0", 0, Some(2)), ("t2", 1, None)], 3);
        let t0 = SeriesElement::var(&ring, 0);
        let t2 = SeriesElement::var(&ring, 1);
        let p = &t0.pow(2) * &t0; // t0^3 exceeds the cap
        assert!(p.is_zero());
        let q = &t0.pow(2) * &t2.pow(3);
        assert_eq!(q.num_terms(), 1);
        let r = &q * &t2; // weight 4 > 3
        assert!(r.is_zero());
    }

    #[test]
    fn derivative_by_variable() {
        let ring = ring2(4);
        let s1 = SeriesElement::var(&ring, 0);
        let s2 = SeriesElement::var(&ring, 1);
        let f = &(&s1.pow(2) * &s2) + &s1;
        let df = f.d_var(0);
        let expect = &(&s1 * &s2).scalar_mul(&rat(2, 1)) + &SeriesElement::one(&ring);
        assert_eq!(df, expect);
    }

    // ---- randomized ring laws -------------------------------------------

    fn arb_laurent() -> impl Strategy<Value = LaurentLog> {
        proptest::collection::vec((-3i64..4, -9i64..10, 1i64..5), 0..3).prop_map(|entries| {
            let mut acc = LaurentLog::zero();
            for (e, n, d) in entries {
                acc = &acc + &LaurentLog::monomial(e, rat(n, d));
            }
            acc
        })
    }

    prop_compose! {
        fn arb_series(d: u32)(
            entries in proptest::collection::vec(
                ((0u32..3, 0u32..3), arb_laurent()),
                0..6,
            )
        ) -> SeriesElement {
            let ring = ring2(d);
            let mut s = SeriesElement::zero(&ring);
            for ((e1, e2), c) in entries {
                s.add_term(&[e1, e2], &c);
            }
            s
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn addition_is_associative(a in arb_series(4), b in arb_series(4), c in arb_series(4)) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        }

        #[test]
        fn multiplication_commutes(a in arb_series(4), b in arb_series(4)) {
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn multiplication_distributes(a in arb_series(4), b in arb_series(4), c in arb_series(4)) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn multiplication_is_associative(a in arb_series(4), b in arb_series(4), c in arb_series(4)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn ddx_is_a_derivation(a in arb_series(4), b in arb_series(4)) {
            let lhs = (&a * &b).ddx();
            let rhs = &(&a.ddx() * &b) + &(&a * &b.ddx());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn log_exp_roundtrip_on_admissible_series(r in arb_series(4), m in -2i64..3) {
            // a = x^m (1 + r_+) with r_+ the positive-degree, log-free part of r
            let ring = r.ring().clone();
            let mut tail = SeriesElement::zero(&ring);
            for (idx, c) in r.terms() {
                if ring.weight(idx) >= 1 && c.is_log_free() {
                    tail.add_term(idx, c);
                }
            }
            let a = &SeriesElement::x_pow(&ring, m) * &(&SeriesElement::one(&ring) + &tail);
            let log = a.log().unwrap();
            prop_assert_eq!(log.exp().unwrap(), a.clone());
            // and exp . log is the identity the other way around on log-images
            let exp = log.exp().unwrap().log().unwrap();
            prop_assert_eq!(exp, log);
        }
    }
}
