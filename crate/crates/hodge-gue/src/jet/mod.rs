//! Differential polynomials in jet variables and the genus free energies.
//!
//! A [`JetFunction`] is an element of `Q[v, v2, v3, …][v1, v1^-1]` plus an
//! optional rational multiple of `log v1`. The variables stand for a function
//! and its successive x-derivatives treated as independent indeterminates;
//! the GUE formulas name the same jets `u, u1, u2, …`, and a single namespace
//! is used for both sides.
//!
//! The module owns:
//! * the total-derivative operator `v1 d/dv + sum v_{k+1} d/dv_k`;
//! * the built-in free energies (genus 1–2 on the Hodge side, 1–5 on the
//!   GUE side) as exact coefficient tables;
//! * substitution of series jets for the variables;
//! * the `cosh` half-derivative operator mixing a genus family.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed, Zero};
use thiserror::Error;

use crate::par::map_merge;
use crate::rational::{format_rational, rat, Rational};
use crate::series::{GenusSeries, SeriesElement, SeriesError};

mod data;

#[derive(Debug, Error)]
pub enum JetError {
    #[error("genus {0} has no built-in closed form")]
    NoBuiltin(u32),
    #[error("jet image of v1 is not invertible")]
    NonInvertibleJet,
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// `v^a * v1^b * prod v_k^{e_k}` with `a, e_k >= 0` and `b` of any sign.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct JetMonomial {
    v_exp: u32,
    v1_exp: i32,
    higher: Vec<(u32, u32)>,
}

impl JetMonomial {
    /// Builds from `(jet index, exponent)` pairs; index 0 is `v` itself.
    pub fn new(powers: &[(u32, i32)]) -> Self {
        let mut v_exp = 0u32;
        let mut v1_exp = 0i32;
        let mut map: BTreeMap<u32, i32> = BTreeMap::new();
        for &(k, e) in powers {
            match k {
                0 => v_exp += u32::try_from(e).expect("v exponent must be >= 0"),
                1 => v1_exp += e,
                _ => *map.entry(k).or_insert(0) += e,
            }
        }
        let higher = map
            .into_iter()
            .filter(|&(_, e)| e != 0)
            .map(|(k, e)| (k, u32::try_from(e).expect("jet exponents must be >= 0")))
            .collect();
        JetMonomial { v_exp, v1_exp, higher }
    }

    pub fn one() -> Self {
        Self::default()
    }

    pub fn is_one(&self) -> bool {
        self.v_exp == 0 && self.v1_exp == 0 && self.higher.is_empty()
    }

    fn mul(&self, rhs: &JetMonomial) -> JetMonomial {
        let mut map: BTreeMap<u32, u32> = self.higher.iter().copied().collect();
        for &(k, e) in &rhs.higher {
            *map.entry(k).or_insert(0) += e;
        }
        JetMonomial {
            v_exp: self.v_exp + rhs.v_exp,
            v1_exp: self.v1_exp + rhs.v1_exp,
            higher: map.into_iter().collect(),
        }
    }

    pub fn max_jet_index(&self) -> u32 {
        if let Some(&(k, _)) = self.higher.last() {
            k
        } else if self.v1_exp != 0 {
            1
        } else {
            0
        }
    }

    /// Degree under the grading `deg v_k = k`, `deg v = 0`.
    pub fn degree(&self) -> i64 {
        let hi: i64 = self.higher.iter().map(|&(k, e)| k as i64 * e as i64).sum();
        hi + self.v1_exp as i64
    }

    fn render(&self) -> String {
        let mut parts = Vec::new();
        if self.v_exp > 0 {
            parts.push(if self.v_exp == 1 { "v".into() } else { format!("v^{}", self.v_exp) });
        }
        if self.v1_exp != 0 {
            parts.push(if self.v1_exp == 1 { "v1".into() } else { format!("v1^{}", self.v1_exp) });
        }
        for &(k, e) in &self.higher {
            parts.push(if e == 1 { format!("v{k}") } else { format!("v{k}^{e}") });
        }
        parts.join("*")
    }
}

/// A differential polynomial with an optional `log v1` term.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct JetFunction {
    terms: BTreeMap<JetMonomial, Rational>,
    log_v1: Rational,
}

impl JetFunction {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.log_v1.is_zero()
    }

    pub fn monomial(powers: &[(u32, i32)], coef: Rational) -> Self {
        let mut f = Self::zero();
        f.add_term(JetMonomial::new(powers), &coef);
        f
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(&[], c)
    }

    /// The bare variable `v_k` (`v` for k = 0).
    pub fn var(k: u32) -> Self {
        Self::monomial(&[(k, 1)], Rational::one())
    }

    /// `c * log v1`.
    pub fn log_v1(c: Rational) -> Self {
        JetFunction { terms: BTreeMap::new(), log_v1: c }
    }

    pub fn log_coefficient(&self) -> &Rational {
        &self.log_v1
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len() + usize::from(!self.log_v1.is_zero())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&JetMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, powers: &[(u32, i32)]) -> Rational {
        self.terms
            .get(&JetMonomial::new(powers))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, m: JetMonomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            let key = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .unwrap();
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, rhs: &JetFunction) -> JetFunction {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        out.log_v1 += &rhs.log_v1;
        out
    }

    pub fn sub(&self, rhs: &JetFunction) -> JetFunction {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> JetFunction {
        self.scalar_mul(&-Rational::one())
    }

    pub fn scalar_mul(&self, c: &Rational) -> JetFunction {
        if c.is_zero() {
            return Self::zero();
        }
        JetFunction {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
            log_v1: &self.log_v1 * c,
        }
    }

    /// Ring product. `log v1` mixes linearly: a log-carrying factor may only
    /// be multiplied by a scalar, and two log-carrying factors are rejected
    /// (`log^2 v1` is outside the type).
    pub fn mul(&self, rhs: &JetFunction) -> JetFunction {
        assert!(
            self.log_v1.is_zero() || rhs.log_v1.is_zero(),
            "log^2 v1 is outside the jet ring"
        );
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        let log_cases = [(&self.log_v1, rhs), (&rhs.log_v1, self)];
        for (lc, other) in log_cases {
            if lc.is_zero() {
                continue;
            }
            let scalar = other
                .terms
                .iter()
                .all(|(m, _)| m.is_one())
                .then(|| other.coefficient(&[]))
                .expect("log v1 may only be scaled by constants");
            out.log_v1 += lc * &scalar;
        }
        out
    }

    /// The total x-derivative on jets: `v1 d/dv + sum_k v_{k+1} d/dv_k`,
    /// with `log v1 -> v2/v1`.
    pub fn total_derivative(&self) -> JetFunction {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            if m.v_exp > 0 {
                let mut m2 = m.clone();
                m2.v_exp -= 1;
                m2.v1_exp += 1;
                out.add_term(m2, &(c * rat(m.v_exp as i64, 1)));
            }
            if m.v1_exp != 0 {
                let mut m2 = m.clone();
                m2.v1_exp -= 1;
                m2 = m2.mul(&JetMonomial::new(&[(2, 1)]));
                out.add_term(m2, &(c * rat(m.v1_exp as i64, 1)));
            }
            for (i, &(k, e)) in m.higher.iter().enumerate() {
                let mut m2 = m.clone();
                if e == 1 {
                    m2.higher.remove(i);
                } else {
                    m2.higher[i].1 -= 1;
                }
                m2 = m2.mul(&JetMonomial::new(&[(k + 1, 1)]));
                out.add_term(m2, &(c * rat(e as i64, 1)));
            }
        }
        if !self.log_v1.is_zero() {
            out.add_term(JetMonomial::new(&[(1, -1), (2, 1)]), &self.log_v1);
        }
        out
    }

    /// n-fold total derivative.
    pub fn total_derivative_n(&self, n: u32) -> JetFunction {
        let mut cur = self.clone();
        for _ in 0..n {
            cur = cur.total_derivative();
        }
        cur
    }

    pub fn max_jet_index(&self) -> u32 {
        let base = self.terms.keys().map(|m| m.max_jet_index()).max().unwrap_or(0);
        if self.log_v1.is_zero() {
            base
        } else {
            base.max(1)
        }
    }

    pub fn depends_on_v(&self) -> bool {
        self.terms.keys().any(|m| m.v_exp > 0)
    }

    pub fn has_log(&self) -> bool {
        !self.log_v1.is_zero()
    }

    pub fn min_v1_exponent(&self) -> Option<i32> {
        self.terms.keys().map(|m| m.v1_exp).min()
    }

    /// True when every monomial has degree `d` under `deg v_k = k`.
    pub fn is_homogeneous_of(&self, d: i64) -> bool {
        self.log_v1.is_zero() && self.terms.keys().all(|m| m.degree() == d)
    }

    /// Canonical text form: monomials in the fixed term order, `p/q` scalars,
    /// the log term last. Used by the golden-file tests.
    pub fn canonical_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if m.is_one() {
                    format_rational(c)
                } else {
                    format!("{}*{}", format_rational(c), m.render())
                }
            })
            .collect();
        if !self.log_v1.is_zero() {
            parts.push(format!("{}*log(v1)", format_rational(&self.log_v1)));
        }
        parts.join(" + ")
    }

    /// Evaluates on explicit jet images: `jets[k]` replaces `v_k` (so
    /// `jets[0]` replaces `v`), `log v1` becomes `jets[1].log()`.
    pub fn eval_on_jets(&self, jets: &[SeriesElement]) -> Result<SeriesElement, JetError> {
        let max_k = self.max_jet_index() as usize;
        assert!(jets.len() > max_k, "need jet images up to index {max_k}");
        let ring = jets[0].ring().clone();

        // power caches, one vector per jet index (and inverse powers of v1)
        let mut max_pos = vec![0u32; max_k + 1];
        let mut max_neg = 0u32;
        for m in self.terms.keys() {
            max_pos[0] = max_pos[0].max(m.v_exp);
            if m.v1_exp >= 0 {
                max_pos.get_mut(1).map(|p| *p = (*p).max(m.v1_exp as u32));
            } else {
                max_neg = max_neg.max(m.v1_exp.unsigned_abs());
            }
            for &(k, e) in &m.higher {
                max_pos[k as usize] = max_pos[k as usize].max(e);
            }
        }
        let mut pos: Vec<Vec<SeriesElement>> = Vec::with_capacity(max_k + 1);
        for (k, &top) in max_pos.iter().enumerate() {
            let mut pows = vec![SeriesElement::one(&ring)];
            for e in 1..=top {
                let next = &pows[(e - 1) as usize] * &jets[k];
                pows.push(next);
            }
            pos.push(pows);
        }
        let mut neg: Vec<SeriesElement> = vec![SeriesElement::one(&ring)];
        if max_neg > 0 {
            let inv = jets[1].invert().map_err(|_| JetError::NonInvertibleJet)?;
            for e in 1..=max_neg {
                let next = &neg[(e - 1) as usize] * &inv;
                neg.push(next);
            }
        }

        let term_list: Vec<(&JetMonomial, &Rational)> = self.terms.iter().collect();
        let mut sum = map_merge(
            term_list,
            |(m, c)| {
                let mut acc = match m.v1_exp {
                    0 => SeriesElement::one(&ring),
                    e if e > 0 => pos[1][e as usize].clone(),
                    e => neg[e.unsigned_abs() as usize].clone(),
                };
                if m.v_exp > 0 {
                    acc = &acc * &pos[0][m.v_exp as usize];
                }
                for &(k, e) in &m.higher {
                    acc = &acc * &pos[k as usize][e as usize];
                }
                acc.scalar_mul(c)
            },
            || SeriesElement::zero(&ring),
            |a, b| &a + &b,
        );
        if !self.log_v1.is_zero() {
            let logv1 = jets[1].log()?;
            sum = &sum + &logv1.scalar_mul(&self.log_v1);
        }
        Ok(sum)
    }

    /// Substitutes `v_k <- d^k u / dx^k`. This makes the total derivative and
    /// d/dx commute past each other.
    pub fn substitute(&self, u: &SeriesElement) -> Result<SeriesElement, JetError> {
        let max_k = self.max_jet_index() as usize;
        let mut jets = Vec::with_capacity(max_k + 1);
        jets.push(u.clone());
        for k in 1..=max_k.max(1) {
            let d = jets[k - 1].ddx();
            jets.push(d);
        }
        self.eval_on_jets(&jets)
    }
}

impl fmt::Display for JetFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_text())
    }
}

fn from_raw(terms: &[data::RawTerm]) -> JetFunction {
    let mut f = JetFunction::zero();
    for &(num, den, powers) in terms {
        let m: Vec<(u32, i32)> = powers.iter().map(|&(k, e)| (k as u32, e as i32)).collect();
        f.add_term(JetMonomial::new(&m), &Rational::new(num.into(), den.into()));
    }
    f
}

/// Built-in special cubic Hodge free energies, genus 1 and 2 only; the higher
/// ones are produced by inverting the correspondence (see `correspond`).
pub fn builtin_hodge(g: u32) -> Result<JetFunction, JetError> {
    match g {
        1 => Ok(JetFunction::var(0)
            .scalar_mul(&rat(-1, 16))
            .add(&JetFunction::log_v1(rat(1, 24)))),
        2 => Ok(from_raw(data::H2_TERMS)),
        _ => Err(JetError::NoBuiltin(g)),
    }
}

/// Built-in GUE free energies with even couplings, genus 1 through 5.
/// Additive constants outside the rationals are dropped; every identity that
/// uses these is asserted modulo constants.
pub fn builtin_gue(g: u32) -> Result<JetFunction, JetError> {
    match g {
        1 => Ok(JetFunction::log_v1(rat(1, 12))),
        2 => Ok(from_raw(data::F2_TERMS)),
        3 => Ok(from_raw(data::F3_TERMS)),
        4 => Ok(from_raw(data::F4_TERMS)),
        5 => Ok(from_raw(data::F5_TERMS)),
        _ => Err(JetError::NoBuiltin(g)),
    }
}

/// Applies `cosh(eps d_x / 2)` to a genus family: the genus-g output entry is
/// `sum_{n=0}^{g} d_x^{2n} G_{g-n} / (4^n (2n)!)`, computed for every
/// `g <= max_genus` (the operator produces contributions at all genera, so
/// the output must be truncated explicitly).
pub fn cosh_apply(gs: &GenusSeries, max_genus: u32) -> GenusSeries {
    let mut out = GenusSeries::new();
    for g in 0..=max_genus {
        let mut acc: Option<SeriesElement> = None;
        for n in 0..=g {
            let Some(entry) = gs.get(g - n) else { continue };
            let mut d = entry.clone();
            for _ in 0..2 * n {
                d = d.ddx();
            }
            let c = Rational::new(1.into(), (num::BigInt::from(4).pow(n) * crate::rational::factorial(2 * n)).into());
            let scaled = d.scalar_mul(&c);
            acc = Some(match acc {
                None => scaled,
                Some(cur) => &cur + &scaled,
            });
        }
        if let Some(acc) = acc {
            out.insert(g, acc);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_i;
    use crate::series::{fixed_point_solve, SeriesRing};
    use proptest::prelude::*;

    #[test]
    fn hodge_genus_one_form() {
        let h1 = builtin_hodge(1).unwrap();
        assert_eq!(h1.coefficient(&[(0, 1)]), rat(-1, 16));
        assert_eq!(*h1.log_coefficient(), rat(1, 24));
        assert_eq!(h1.num_terms(), 2);
    }

    #[test]
    fn hodge_genus_two_pinned_values() {
        let h2 = builtin_hodge(2).unwrap();
        assert_eq!(h2.terms.len(), 7);
        assert_eq!(h2.coefficient(&[(2, 3), (1, -4)]), rat(1, 360));
        assert_eq!(h2.coefficient(&[(2, 1)]), rat(7, 2560));
        assert!(!h2.has_log() && !h2.depends_on_v());
        assert!(h2.is_homogeneous_of(2));
    }

    #[test]
    fn gue_pinned_values() {
        assert_eq!(builtin_gue(1).unwrap().canonical_text(), "1/12*log(v1)");
        let f2 = builtin_gue(2).unwrap();
        assert_eq!(f2.coefficient(&[(2, 3), (1, -4)]), rat(1, 90));
        let f3 = builtin_gue(3).unwrap();
        assert_eq!(f3.coefficient(&[(4, 1)]), rat(13, 120960));
        let f4 = builtin_gue(4).unwrap();
        assert_eq!(f4.coefficient(&[(10, 1), (1, -4)]), rat(1, 497664));
        let f5 = builtin_gue(5).unwrap();
        assert_eq!(f5.coefficient(&[(13, 1), (1, -5)]), rat(1, 29859840));
        assert!(builtin_gue(6).is_err());
        assert!(builtin_hodge(3).is_err());
    }

    #[test]
    fn gue_energies_are_graded() {
        for g in 2..=5 {
            let f = builtin_gue(g).unwrap();
            assert!(f.is_homogeneous_of(2 * g as i64 - 2), "genus {g}");
            assert!(!f.depends_on_v() && !f.has_log());
        }
    }

    #[test]
    fn total_derivative_basics() {
        assert_eq!(JetFunction::var(0).total_derivative(), JetFunction::var(1));
        let dlog = JetFunction::log_v1(rat_i(1)).total_derivative();
        assert_eq!(dlog, JetFunction::monomial(&[(2, 1), (1, -1)], rat_i(1)));
    }

    #[test]
    fn second_derivative_of_genus_one_hodge() {
        // two applications by hand: -v2/16 + v3/(24 v1) - v2^2/(24 v1^2)
        let h1 = builtin_hodge(1).unwrap();
        let d2 = h1.total_derivative_n(2);
        let expect = JetFunction::monomial(&[(2, 1)], rat(-1, 16))
            .add(&JetFunction::monomial(&[(3, 1), (1, -1)], rat(1, 24)))
            .add(&JetFunction::monomial(&[(2, 2), (1, -2)], rat(-1, 24)));
        assert_eq!(d2, expect);
    }

    #[test]
    fn substitute_log_x_jets_into_genus_one() {
        // u = log x gives u1 = 1/x, so F_1 = (1/12) log(1/x) = -(1/12) log x
        let ring = SeriesRing::total_degree(&[], 0);
        let u = SeriesElement::constant(&ring, crate::laurent::LaurentLog::log_monomial(0, rat_i(1)));
        let f1 = builtin_gue(1).unwrap().substitute(&u).unwrap();
        let expect =
            SeriesElement::constant(&ring, crate::laurent::LaurentLog::log_monomial(0, rat(-1, 12)));
        assert_eq!(f1, expect);
    }

    #[test]
    fn substitute_log_x_jets_into_genus_two() {
        let ring = SeriesRing::total_degree(&[], 0);
        let u = SeriesElement::constant(&ring, crate::laurent::LaurentLog::log_monomial(0, rat_i(1)));
        let f2 = builtin_gue(2).unwrap().substitute(&u).unwrap();
        let expect = SeriesElement::constant(
            &ring,
            crate::laurent::LaurentLog::monomial(-2, rat(-1, 240)),
        );
        assert_eq!(f2, expect);
    }

    #[test]
    fn cosh_weights() {
        use crate::laurent::LaurentLog;
        let ring = SeriesRing::total_degree(&[], 0);
        // G supported at genus 0 with entry x^4: derivatives survive to g=1,2
        let mut gs = GenusSeries::new();
        gs.insert(0, SeriesElement::x_pow(&ring, 4));
        let out = cosh_apply(&gs, 2);
        assert_eq!(out.get(0).unwrap(), &SeriesElement::x_pow(&ring, 4));
        // n=1 weight 1/8: (x^4)'' = 12 x^2
        assert_eq!(
            out.get(1).unwrap(),
            &SeriesElement::constant(&ring, LaurentLog::monomial(2, rat(12, 8)))
        );
        // n=2 weight 1/384: (x^4)'''' = 24
        assert_eq!(
            out.get(2).unwrap(),
            &SeriesElement::constant(&ring, LaurentLog::constant(rat(24, 384)))
        );
    }

    #[test]
    fn cosh_is_identity_on_x_independent_genus_zero() {
        let ring = SeriesRing::total_degree(&["s1"], 3);
        let mut gs = GenusSeries::new();
        gs.insert(0, SeriesElement::var(&ring, 0));
        assert_eq!(cosh_apply(&gs, 0), gs);
    }

    // random small log-free jet functions
    fn arb_jet() -> impl Strategy<Value = JetFunction> {
        proptest::collection::vec(
            (
                proptest::collection::vec((0u32..5, 1i32..3), 0..3),
                (-20i64..21, 1i64..7),
            ),
            0..5,
        )
        .prop_map(|terms| {
            let mut f = JetFunction::zero();
            for (powers, (n, d)) in terms {
                let fixed: Vec<(u32, i32)> = powers
                    .into_iter()
                    .map(|(k, e)| if k == 1 { (1, e - 2) } else { (k, e) })
                    .collect();
                f = f.add(&JetFunction::monomial(&fixed, rat(n, d)));
            }
            f
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn total_derivative_is_a_derivation(a in arb_jet(), b in arb_jet()) {
            let lhs = a.mul(&b).total_derivative();
            let rhs = a.total_derivative().mul(&b).add(&a.mul(&b.total_derivative()));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn substitution_commutes_with_total_derivative(a in arb_jet()) {
            // log-free u with invertible u1: u = x^2 + s * (1 + x)
            let ring = SeriesRing::total_degree(&["s"], 3);
            let s = SeriesElement::var(&ring, 0);
            let u = &SeriesElement::x_pow(&ring, 2)
                + &(&s * &(&SeriesElement::one(&ring) + &SeriesElement::x_pow(&ring, 1)));
            let lhs = a.total_derivative().substitute(&u).unwrap();
            let rhs = a.substitute(&u).unwrap().ddx();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
