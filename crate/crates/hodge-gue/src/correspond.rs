//! The genus-by-genus correspondence between the GUE and cubic Hodge free
//! energies: jet-level identities, derivation of the higher Hodge energies,
//! Bernoulli constant checks, and the full series comparison.
//!
//! At the jet level the correspondence says, with `D` the total derivative,
//!
//! * genus 1: `F_1 = 2 H_1 + v/8` up to an additive constant;
//! * genus g >= 2:
//!   `F_g = v_{2g-2}/(2^{2g}(2g)!) + D^{2g-2}H_1/(2^{2g-3}(2g-2)!)
//!          + sum_{m=2}^{g} 2^{3m-2g}/(2g-2m)! D^{2(g-m)} H_m`.
//!
//! Genus 1 and 2 use built-in data on both sides; for genus 3–5 the Hodge
//! energies are *derived* by inverting the relation (the m = g term enters
//! with coefficient `2^g`), so higher-genus series checks validate internal
//! consistency. The independent evidence for the higher GUE energies comes
//! from the Bernoulli constant terms and the ribbon-graph oracle.

use std::collections::BTreeMap;

use num::{BigInt, One, Zero};
use thiserror::Error;

use crate::genus0::{coupling_correction, coupling_ring, f0_from_w, h0_substituted, solve_w};
use crate::jet::{builtin_gue, builtin_hodge, cosh_apply, JetError, JetFunction};
use crate::laurent::LaurentLog;
use crate::rational::{bernoulli, factorial, format_rational, rat, Rational};
use crate::report::{ConjectureReport, GenusCheck, MonomialRow};
use crate::series::{GenusSeries, SeriesElement, SeriesError, SeriesRing};

#[derive(Debug, Error)]
pub enum CorrespondError {
    #[error("missing Hodge free energy for genus {0}")]
    MissingHodgeEnergy(u32),
    #[error("derived Hodge energy at genus {0} fails the round trip")]
    RoundTripFailure(u32),
    #[error("genus {0} is outside the supported range")]
    UnsupportedGenus(u32),
    #[error("constant term at genus {genus}: expected {expected}, computed {computed}")]
    BernoulliMismatch {
        genus: u32,
        expected: String,
        computed: String,
    },
    #[error(transparent)]
    Jet(#[from] JetError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// `2^e` as a rational, for any sign of `e`.
fn pow2(e: i64) -> Rational {
    let p = BigInt::from(2).pow(e.unsigned_abs() as u32);
    if e >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(BigInt::one(), p)
    }
}

/// The jet-level right-hand side of the correspondence at genus `g`, given
/// Hodge energies for m = 1 … g.
pub fn conjecture_jet_rhs(
    g: u32,
    h: &BTreeMap<u32, JetFunction>,
) -> Result<JetFunction, CorrespondError> {
    let get = |m: u32| h.get(&m).ok_or(CorrespondError::MissingHodgeEnergy(m));
    match g {
        0 => Err(CorrespondError::UnsupportedGenus(0)),
        1 => Ok(get(1)?
            .scalar_mul(&rat(2, 1))
            .add(&JetFunction::var(0).scalar_mul(&rat(1, 8)))),
        _ => {
            let mut rhs = JetFunction::var(2 * g - 2).scalar_mul(&Rational::new(
                BigInt::one(),
                BigInt::from(2).pow(2 * g) * factorial(2 * g),
            ));
            let h1_term = get(1)?
                .total_derivative_n(2 * g - 2)
                .scalar_mul(&Rational::new(
                    BigInt::one(),
                    BigInt::from(2).pow(2 * g - 3) * factorial(2 * g - 2),
                ));
            rhs = rhs.add(&h1_term);
            for m in 2..=g {
                let c = pow2(3 * (m as i64) - 2 * (g as i64))
                    / Rational::from_integer(factorial(2 * g - 2 * m));
                rhs = rhs.add(&get(m)?.total_derivative_n(2 * (g - m)).scalar_mul(&c));
            }
            Ok(rhs)
        }
    }
}

/// Inverts the correspondence at genus `g` (3–5) to produce the Hodge free
/// energy from the GUE one; the m = g term enters with coefficient `2^g`.
/// The round trip through [`conjecture_jet_rhs`] is asserted exactly.
pub fn derive_hodge(
    g: u32,
    f_g: &JetFunction,
    lower: &BTreeMap<u32, JetFunction>,
) -> Result<JetFunction, CorrespondError> {
    if !(2..=5).contains(&g) {
        return Err(CorrespondError::UnsupportedGenus(g));
    }
    // rhs with the m = g term removed equals conjecture_jet_rhs over lower
    // genera only, shifted by 2^g H_g; build it by reusing the full formula
    // with a zero placeholder at genus g.
    let mut padded = lower.clone();
    padded.insert(g, JetFunction::zero());
    let without_top = conjecture_jet_rhs(g, &padded)?;
    let h_g = f_g.sub(&without_top).scalar_mul(&pow2(-(g as i64)));

    let mut full = lower.clone();
    full.insert(g, h_g.clone());
    if conjecture_jet_rhs(g, &full)? != *f_g {
        return Err(CorrespondError::RoundTripFailure(g));
    }
    Ok(h_g)
}

/// Hodge free energies for genus 1 … `g_max`: built-in data for genus 1–2,
/// derived from the built-in GUE energies beyond.
pub fn hodge_tower(g_max: u32) -> Result<BTreeMap<u32, JetFunction>, CorrespondError> {
    let mut h = BTreeMap::new();
    for g in 1..=g_max.min(2) {
        h.insert(g, builtin_hodge(g)?);
    }
    for g in 3..=g_max.max(2).min(5) {
        if g > g_max {
            break;
        }
        let derived = derive_hodge(g, &builtin_gue(g)?, &h)?;
        h.insert(g, derived);
    }
    Ok(h)
}

/// `B_{2g} / (4g(g-1))`, the expected coupling-free constant of the genus-g
/// GUE energy (as coefficient of `x^{2-2g}`).
pub fn bernoulli_expected(g: u32) -> Rational {
    bernoulli(2 * g) / rat(4 * g as i64 * (g as i64 - 1), 1)
}

/// Substitutes the zero-coupling jets (`u = log x`) into the genus-g energy
/// and checks the result is exactly `B_{2g}/(4g(g-1)) x^{2-2g}`.
pub fn bernoulli_check(g: u32) -> Result<Rational, CorrespondError> {
    if !(2..=5).contains(&g) {
        return Err(CorrespondError::UnsupportedGenus(g));
    }
    let ring = SeriesRing::total_degree(&[], 0);
    let u = SeriesElement::constant(&ring, LaurentLog::log_monomial(0, Rational::one()));
    let value = builtin_gue(g)?.substitute(&u)?;
    let expected = bernoulli_expected(g);
    let coeff = value.coefficient(&[]).unwrap_or_else(|_| LaurentLog::zero());
    let ok = coeff.as_monomial() == Some((2 - 2 * g as i64, expected.clone()));
    if !ok {
        return Err(CorrespondError::BernoulliMismatch {
            genus: g,
            expected: format!("{} * x^{}", format_rational(&expected), 2 - 2 * g as i64),
            computed: coeff.to_string_with("x"),
        });
    }
    Ok(expected)
}

/// Parameters of the full series comparison.
#[derive(Clone, Copy, Debug)]
pub struct SeriesCheckOptions {
    pub max_genus: u32,
    pub couplings: u32,
    pub degree: u32,
}

impl Default for SeriesCheckOptions {
    fn default() -> Self {
        SeriesCheckOptions { max_genus: 5, couplings: 4, degree: 6 }
    }
}

fn genus_rows(
    ring: &SeriesRing,
    genus: u32,
    lhs: &SeriesElement,
    rhs: &SeriesElement,
) -> Vec<MonomialRow> {
    let lhs = lhs.strip_constant();
    let rhs = rhs.strip_constant();
    let mut monomials: Vec<Vec<u32>> = lhs.terms().map(|(idx, _)| idx.clone()).collect();
    for (idx, _) in rhs.terms() {
        if !monomials.contains(idx) {
            monomials.push(idx.clone());
        }
    }
    monomials.sort();
    monomials
        .into_iter()
        .map(|idx| {
            let l = lhs.coefficient(&idx).unwrap_or_else(|_| LaurentLog::zero());
            let r = rhs.coefficient(&idx).unwrap_or_else(|_| LaurentLog::zero());
            MonomialRow {
                genus,
                monomial: ring.monomial_name(&idx),
                equal: l == r,
                lhs: l.to_string_with("x"),
                rhs: r.to_string_with("x"),
            }
        })
        .collect()
}

/// The full series comparison: per genus and per coupling monomial, the GUE
/// side (free energies plus the coupling-only bracket at genus 0) against
/// the `cosh`-averaged, coupling-substituted Hodge side, modulo additive
/// constants.
pub fn full_series_check(opts: SeriesCheckOptions) -> Result<ConjectureReport, CorrespondError> {
    let SeriesCheckOptions { max_genus, couplings, degree } = opts;
    if max_genus > 5 {
        return Err(CorrespondError::UnsupportedGenus(max_genus));
    }
    let ring = coupling_ring(couplings, degree);
    let w = solve_w(&ring)?;
    let u = w.log()?;

    let h = hodge_tower(max_genus)?;

    // GUE side
    let mut lhs = GenusSeries::new();
    let f0 = f0_from_w(&ring, &w)?;
    lhs.insert(0, &f0 + &coupling_correction(&ring));
    for g in 1..=max_genus {
        lhs.insert(g, builtin_gue(g)?.substitute(&u)?);
    }

    // Hodge side before averaging: 2^g H_g(t(x, s))
    let mut pre = GenusSeries::new();
    pre.insert(0, h0_substituted(&ring, &u)?);
    for g in 1..=max_genus {
        let sub = h[&g].substitute(&u)?;
        pre.insert(g, sub.scalar_mul(&pow2(g as i64)));
    }
    let rhs = cosh_apply(&pre, max_genus);

    let zero = SeriesElement::zero(&ring);
    let mut genera = Vec::new();
    for g in 0..=max_genus {
        let l = lhs.get(g).unwrap_or(&zero);
        let r = rhs.get(g).unwrap_or(&zero);
        let rows = genus_rows(&ring, g, l, r);
        let pass = rows.iter().all(|row| row.equal);
        genera.push(GenusCheck { genus: g, independent: g <= 2, pass, rows });
    }
    let all_pass = genera.iter().all(|g| g.pass);
    Ok(ConjectureReport {
        max_genus,
        couplings,
        degree,
        note: "genus 0-2 entries compare independently transcribed data; genus >= 3 Hodge energies are derived from the correspondence, so those entries check internal consistency".into(),
        genera,
        all_pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jet::JetFunction;
    use crate::rational::rat_i;

    #[test]
    fn genus_one_difference_is_constant() {
        let h = hodge_tower(1).unwrap();
        let rhs = conjecture_jet_rhs(1, &h).unwrap();
        let diff = builtin_gue(1).unwrap().sub(&rhs);
        // with the paper constants dropped, the difference is exactly zero,
        // and in particular its total derivative vanishes
        assert!(diff.total_derivative().is_zero());
        assert!(diff.is_zero());
    }

    #[test]
    fn genus_two_identity_exact() {
        let h = hodge_tower(2).unwrap();
        // intermediate: (1/4) D^2 H_1 = -v2/64 + v3/(96 v1) - v2^2/(96 v1^2)
        let quarter_d2h1 = h[&1].total_derivative_n(2).scalar_mul(&rat(1, 4));
        let expect = JetFunction::monomial(&[(2, 1)], rat(-1, 64))
            .add(&JetFunction::monomial(&[(3, 1), (1, -1)], rat(1, 96)))
            .add(&JetFunction::monomial(&[(2, 2), (1, -2)], rat(-1, 96)));
        assert_eq!(quarter_d2h1, expect);
        assert_eq!(
            conjecture_jet_rhs(2, &h).unwrap(),
            builtin_gue(2).unwrap()
        );
    }

    #[test]
    fn inverting_genus_two_recovers_builtin() {
        let mut lower = BTreeMap::new();
        lower.insert(1, builtin_hodge(1).unwrap());
        let derived = derive_hodge(2, &builtin_gue(2).unwrap(), &lower).unwrap();
        assert_eq!(derived, builtin_hodge(2).unwrap());
    }

    #[test]
    fn derived_tower_structure() {
        let h = hodge_tower(5).unwrap();
        for g in 3..=5u32 {
            let hg = &h[&g];
            assert!(!hg.depends_on_v(), "genus {g} must not depend on v");
            assert!(!hg.has_log(), "genus {g} must be log-free");
            assert_eq!(hg.max_jet_index(), 3 * g - 2, "genus {g} jet span");
            assert!(hg.is_homogeneous_of(2 * g as i64 - 2), "genus {g} grading");
            assert!(hg.min_v1_exponent().unwrap() >= -(4 * g as i64 - 4) as i32);
        }
    }

    #[test]
    fn missing_energy_is_reported() {
        let mut h = BTreeMap::new();
        h.insert(1, builtin_hodge(1).unwrap());
        assert!(matches!(
            conjecture_jet_rhs(3, &h),
            Err(CorrespondError::MissingHodgeEnergy(2))
        ));
    }

    #[test]
    fn bernoulli_constants() {
        assert_eq!(bernoulli_check(2).unwrap(), rat(-1, 240));
        assert_eq!(bernoulli_check(3).unwrap(), rat(1, 1008));
        assert_eq!(bernoulli_check(4).unwrap(), rat(-1, 1440));
        assert_eq!(bernoulli_check(5).unwrap(), rat(1, 1056));
        assert!(bernoulli_check(1).is_err());
    }

    #[test]
    fn series_check_small() {
        let report = full_series_check(SeriesCheckOptions {
            max_genus: 2,
            couplings: 2,
            degree: 4,
        })
        .unwrap();
        assert!(report.all_pass);
        assert_eq!(report.genera.len(), 3);
        assert!(report.genera.iter().all(|g| g.independent == (g.genus <= 2)));
    }

    #[test]
    fn genus_one_single_coupling_coefficient_vanishes() {
        // u1 = 1/x is independent of sbar_1, so both sides have zero
        // linear coefficient at genus 1
        let report = full_series_check(SeriesCheckOptions {
            max_genus: 1,
            couplings: 1,
            degree: 4,
        })
        .unwrap();
        assert!(report.all_pass);
        let g1 = &report.genera[1];
        for row in &g1.rows {
            if row.monomial == "sb1" {
                assert_eq!(row.lhs, "0");
                assert_eq!(row.rhs, "0");
            }
        }
        // stronger: the substituted genus-1 energy has no sb1 term at all
        let ring = coupling_ring(1, 4);
        let u = solve_w(&ring).unwrap().log().unwrap();
        let f1 = builtin_gue(1).unwrap().substitute(&u).unwrap();
        assert!(f1.coefficient(&[1]).unwrap().is_zero());
        let d = rat_i(0);
        let _ = d;
    }
}
