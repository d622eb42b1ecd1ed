//! Genus zero: the planar string equations, closed forms for both free
//! energies, the coupling substitution, and the genus-zero identity.
//!
//! The GUE side lives in the ring of series in the rescaled couplings
//! `sb1 … sbK` (sbar_k = C(2k,k) s_k) with Laurent-in-x coefficients. The
//! planar resolvent datum is the series `w` solving
//! `w = x + sum_k k sbar_k w^k` with `w(x, 0) = x`, and `u = log w`.
//!
//! The Hodge side at genus zero is a series in independent times `t0 … tM`
//! built on the solution of `v = sum_i t_i v^i / i!`. Under the coupling
//! substitution `t_i = sum_k k^{i+1} sbar_k - 1 + δ_{i,1} + x δ_{i,0}` the
//! infinite time sums collapse to exponentials of `v`, and `e^v` satisfies
//! the same equation as `w`; the substituted Hodge free energy is therefore
//! evaluated through `exp(k·u)` (a genuinely different code path than the
//! powers `w^k`, which keeps the residual check meaningful).

use std::sync::Arc;

use num::BigInt;

use crate::laurent::LaurentLog;
use crate::rational::{binomial, factorial, rat, rat_i, Rational};
use crate::series::{fixed_point_solve, SeriesElement, SeriesError, SeriesRing};

/// Conversion data between raw couplings `s_k` and rescaled `sbar_k`.
#[derive(Clone, Copy, Debug)]
pub struct Couplings {
    pub count: u32,
}

impl Couplings {
    pub fn new(count: u32) -> Self {
        assert!(count >= 1);
        Couplings { count }
    }

    /// `sbar_k = C(2k, k) * s_k`; the factor is 2, 6, 20, … for k = 1, 2, 3.
    pub fn rescale_factor(k: u32) -> BigInt {
        binomial(2 * k, k)
    }
}

/// The ring of series in `sb1 … sbK` truncated at total degree `d`.
pub fn coupling_ring(k: u32, d: u32) -> Arc<SeriesRing> {
    let names: Vec<String> = (1..=k).map(|i| format!("sb{i}")).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    SeriesRing::total_degree(&refs, d)
}

fn x(ring: &Arc<SeriesRing>) -> SeriesElement {
    SeriesElement::x_pow(ring, 1)
}

/// Solves the planar string equation `w = x + sum_k k sbar_k w^k`.
pub fn solve_w(ring: &Arc<SeriesRing>) -> Result<SeriesElement, SeriesError> {
    let k_max = ring.num_vars() as u32;
    let x0 = x(ring);
    fixed_point_solve(&x0, |w| {
        let mut acc = x0.clone();
        let mut wpow = SeriesElement::one(ring);
        for k in 1..=k_max {
            wpow = &wpow * w;
            let sk = SeriesElement::var(ring, (k - 1) as usize);
            acc = &acc + &(&sk * &wpow).scalar_mul(&rat_i(k as i64));
        }
        acc
    })
}

/// The weighted-composition closed form of `w`, an independent route to the
/// same series: summing over multisets `lambda` of nonzero coupling indices,
/// the ordered tuples of the defining sum regroup into
/// `(n-1)!/((n-d)! prod m_r!) * prod(lambda_j) * x^{n-d} * prod sbar_{lambda_j}`
/// with `n = |lambda| + 1` and `d` the number of coupling factors.
pub fn w_explicit(ring: &Arc<SeriesRing>) -> SeriesElement {
    fn emit(ring: &Arc<SeriesRing>, out: &mut SeriesElement, stack: &[u32]) {
        let d = stack.len() as u32;
        let weight: u32 = stack.iter().sum();
        let n = weight + 1;
        if n < d {
            return;
        }
        let mut coef = Rational::new(factorial(n - 1), factorial(n - d));
        let mut run = 1u32;
        for i in 1..stack.len() {
            if stack[i] == stack[i - 1] {
                run += 1;
            } else {
                coef /= Rational::from_integer(factorial(run));
                run = 1;
            }
        }
        if !stack.is_empty() {
            coef /= Rational::from_integer(factorial(run));
        }
        for &p in stack {
            coef *= rat_i(p as i64);
        }
        let mut idx = vec![0u32; ring.num_vars()];
        for &p in stack {
            idx[(p - 1) as usize] += 1;
        }
        let mut term = SeriesElement::constant(ring, LaurentLog::monomial((n - d) as i64, coef));
        for (var, &e) in idx.iter().enumerate() {
            for _ in 0..e {
                term = &term * &SeriesElement::var(ring, var);
            }
        }
        *out = &*out + &term;
    }

    fn rec(
        ring: &Arc<SeriesRing>,
        out: &mut SeriesElement,
        stack: &mut Vec<u32>,
        next_max: u32,
        d_left: u32,
    ) {
        emit(ring, out, stack);
        if d_left == 0 {
            return;
        }
        for p in (1..=next_max).rev() {
            stack.push(p);
            rec(ring, out, stack, p, d_left - 1);
            stack.pop();
        }
    }

    let mut out = SeriesElement::zero(ring);
    let mut stack = Vec::new();
    rec(ring, &mut out, &mut stack, ring.num_vars() as u32, ring.max_weight());
    out
}

/// The genus-zero GUE free energy from a solved `w`:
/// `w^2/4 - x w + sum_k sbar_k (x w^k - k/(k+1) w^{k+1})
///  + 1/2 sum (k1 k2/(k1+k2)) sbar_{k1} sbar_{k2} w^{k1+k2} + x^2/2 log w`.
pub fn f0_from_w(ring: &Arc<SeriesRing>, w: &SeriesElement) -> Result<SeriesElement, SeriesError> {
    let k_max = ring.num_vars() as u32;
    let mut wpow = vec![SeriesElement::one(ring)];
    for e in 1..=(2 * k_max + 1).max(2) {
        let next = &wpow[(e - 1) as usize] * w;
        wpow.push(next);
    }
    let xs = x(ring);
    let mut f0 = wpow[2].scalar_mul(&rat(1, 4));
    f0 = &f0 - &(&xs * w);
    for k in 1..=k_max {
        let sk = SeriesElement::var(ring, (k - 1) as usize);
        let inner = &(&xs * &wpow[k as usize])
            - &wpow[(k + 1) as usize].scalar_mul(&rat(k as i64, k as i64 + 1));
        f0 = &f0 + &(&sk * &inner);
    }
    for k1 in 1..=k_max {
        for k2 in 1..=k_max {
            let c = rat((k1 as i64) * (k2 as i64), 2 * (k1 as i64 + k2 as i64));
            let s12 = &SeriesElement::var(ring, (k1 - 1) as usize)
                * &SeriesElement::var(ring, (k2 - 1) as usize);
            f0 = &f0 + &(&s12 * &wpow[(k1 + k2) as usize]).scalar_mul(&c);
        }
    }
    let logw = w.log()?;
    let half_x2 = SeriesElement::constant(ring, LaurentLog::monomial(2, rat(1, 2)));
    Ok(&f0 + &(&half_x2 * &logw))
}

/// Convenience: solve `w` and assemble the free energy.
pub fn f0_closed(ring: &Arc<SeriesRing>) -> Result<SeriesElement, SeriesError> {
    let w = solve_w(ring)?;
    f0_from_w(ring, &w)
}

/// The ring of series in independent times `t0 … tM`.
pub fn time_ring(max_index: u32, d: u32) -> Arc<SeriesRing> {
    let names: Vec<String> = (0..=max_index).map(|i| format!("t{i}")).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    SeriesRing::total_degree(&refs, d)
}

/// Solves `v = sum_i t_i v^i / i!` over the time ring.
pub fn solve_v(ring: &Arc<SeriesRing>) -> Result<SeriesElement, SeriesError> {
    let m_max = (ring.num_vars() - 1) as u32;
    fixed_point_solve(&SeriesElement::zero(ring), |v| {
        let mut acc = SeriesElement::zero(ring);
        let mut vpow = SeriesElement::one(ring);
        for i in 0..=m_max {
            if i > 0 {
                vpow = &vpow * v;
            }
            let ti = SeriesElement::var(ring, i as usize);
            let c = Rational::new(BigInt::from(1), factorial(i));
            acc = &acc + &(&ti * &vpow).scalar_mul(&c);
        }
        acc
    })
}

/// Genus-zero intersection-number generating series on the time ring:
/// `v^3/6 - sum_i t_i v^{i+2}/(i!(i+2))
///  + 1/2 sum_{i,j} t_i t_j v^{i+j+1}/((i+j+1) i! j!)`.
pub fn h0_time_series(ring: &Arc<SeriesRing>) -> Result<SeriesElement, SeriesError> {
    let m_max = (ring.num_vars() - 1) as u32;
    let v = solve_v(ring)?;
    let mut vpow = vec![SeriesElement::one(ring)];
    for e in 1..=(2 * m_max + 3) {
        let next = &vpow[(e - 1) as usize] * &v;
        vpow.push(next);
    }
    let mut h0 = vpow[3].scalar_mul(&rat(1, 6));
    for i in 0..=m_max {
        let ti = SeriesElement::var(ring, i as usize);
        let c = Rational::new(BigInt::from(1), factorial(i) * BigInt::from(i + 2));
        h0 = &h0 - &(&ti * &vpow[(i + 2) as usize]).scalar_mul(&c);
    }
    for i in 0..=m_max {
        for j in 0..=m_max {
            let tij = &SeriesElement::var(ring, i as usize) * &SeriesElement::var(ring, j as usize);
            let c = Rational::new(
                BigInt::from(1),
                BigInt::from(2 * (i + j + 1)) * factorial(i) * factorial(j),
            );
            h0 = &h0 + &(&tij * &vpow[(i + j + 1) as usize]).scalar_mul(&c);
        }
    }
    Ok(h0)
}

/// The substituted times `t_i(x, s) = sum_k k^{i+1} sbar_k - 1 + δ_{i,1} + x δ_{i,0}`
/// as series over the coupling ring, for `i = 0 … i_max`.
pub fn t_values(ring: &Arc<SeriesRing>, i_max: u32) -> Vec<SeriesElement> {
    let k_max = ring.num_vars() as u32;
    (0..=i_max)
        .map(|i| {
            let mut t = SeriesElement::zero(ring);
            for k in 1..=k_max {
                let c = Rational::from_integer(BigInt::from(k).pow(i + 1));
                t = &t + &SeriesElement::var(ring, (k - 1) as usize).scalar_mul(&c);
            }
            t = &t - &SeriesElement::one(ring);
            if i == 1 {
                t = &t + &SeriesElement::one(ring);
            }
            if i == 0 {
                t = &t + &x(ring);
            }
            t
        })
        .collect()
}

/// Powers `exp(0·u) … exp(n·u)` computed through the exponential.
fn exp_family(u: &SeriesElement, n: u32) -> Result<Vec<SeriesElement>, SeriesError> {
    let e1 = u.exp()?;
    let mut out = vec![SeriesElement::one(u.ring()), e1.clone()];
    for _ in 2..=n {
        let next = out.last().unwrap() * &e1;
        out.push(next);
    }
    Ok(out)
}

/// The substituted genus-zero Hodge free energy. The infinite time sums
/// collapse into exponentials of `v = u`:
/// `1/2 sum (k1k2/(k1+k2)) sb sb (e^{(k1+k2)u} - 1) - sum k/(1+k) sb_k (e^{(1+k)u} - 1)
///  + x sum sb_k (e^{k u} - 1) + (e^{2u} - 1)/4 - x (e^u - 1) + x^2 u / 2`.
pub fn h0_substituted(
    ring: &Arc<SeriesRing>,
    u: &SeriesElement,
) -> Result<SeriesElement, SeriesError> {
    let k_max = ring.num_vars() as u32;
    let e = exp_family(u, (2 * k_max).max(2))?;
    let one = SeriesElement::one(ring);
    let mut acc = SeriesElement::zero(ring);
    for k1 in 1..=k_max {
        for k2 in 1..=k_max {
            let c = rat((k1 as i64) * (k2 as i64), 2 * (k1 as i64 + k2 as i64));
            let s12 = &SeriesElement::var(ring, (k1 - 1) as usize)
                * &SeriesElement::var(ring, (k2 - 1) as usize);
            acc = &acc + &(&s12 * &(&e[(k1 + k2) as usize] - &one)).scalar_mul(&c);
        }
    }
    for k in 1..=k_max {
        let sk = SeriesElement::var(ring, (k - 1) as usize);
        let c = rat(k as i64, 1 + k as i64);
        acc = &acc - &(&sk * &(&e[(k + 1) as usize] - &one)).scalar_mul(&c);
        acc = &acc + &(&x(ring) * &(&sk * &(&e[k as usize] - &one)));
    }
    acc = &acc + &(&e[2] - &one).scalar_mul(&rat(1, 4));
    acc = &acc - &(&x(ring) * &(&e[1] - &one));
    let half_x2 = SeriesElement::constant(ring, LaurentLog::monomial(2, rat(1, 2)));
    Ok(&acc + &(&half_x2 * u))
}

/// The coupling-only bracket added to the GUE side of the main identity:
/// `-1/2 sum (k1k2/(k1+k2)) sb sb + sum k/(1+k) sb_k - x sum sb_k - 1/4 + x`.
pub fn coupling_correction(ring: &Arc<SeriesRing>) -> SeriesElement {
    let k_max = ring.num_vars() as u32;
    let mut acc = SeriesElement::zero(ring);
    for k1 in 1..=k_max {
        for k2 in 1..=k_max {
            let c = rat(-(k1 as i64) * (k2 as i64), 2 * (k1 as i64 + k2 as i64));
            let s12 = &SeriesElement::var(ring, (k1 - 1) as usize)
                * &SeriesElement::var(ring, (k2 - 1) as usize);
            acc = &acc + &s12.scalar_mul(&c);
        }
    }
    for k in 1..=k_max {
        let sk = SeriesElement::var(ring, (k - 1) as usize);
        acc = &acc + &sk.scalar_mul(&rat(k as i64, 1 + k as i64));
        acc = &acc - &(&x(ring) * &sk);
    }
    acc = &acc - &SeriesElement::scalar(ring, rat(1, 4));
    &acc + &x(ring)
}

/// Residual of the substituted string equation
/// `e^u - x - sum_k k sbar_k e^{k u}`; zero exactly when `u` is the logarithm
/// of the planar solution (this is the collapsed form of the statement that
/// `u` equals the substituted time solution `v(t(x, s))`).
pub fn string_equation_residual(
    ring: &Arc<SeriesRing>,
    u: &SeriesElement,
) -> Result<SeriesElement, SeriesError> {
    let k_max = ring.num_vars() as u32;
    let e = exp_family(u, k_max.max(1))?;
    let mut acc = &e[1] - &x(ring);
    for k in 1..=k_max {
        let sk = SeriesElement::var(ring, (k - 1) as usize);
        acc = &acc - &(&sk * &e[k as usize]).scalar_mul(&rat_i(k as i64));
    }
    Ok(acc)
}

/// The genus-zero identity residual
/// `H0(t(x,s)) - F0(x,s) - correction`. Identically zero; a nonzero value
/// signals an implementation bug in the series tower.
pub fn genus0_residual(couplings: u32, degree: u32) -> Result<SeriesElement, SeriesError> {
    let ring = coupling_ring(couplings, degree);
    let w = solve_w(&ring)?;
    let u = w.log()?;
    let h0s = h0_substituted(&ring, &u)?;
    let f0 = f0_from_w(&ring, &w)?;
    let corr = coupling_correction(&ring);
    Ok(&(&h0s - &f0) - &corr)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::Zero;

    #[test]
    fn solve_w_geometric_and_quadratic() {
        let ring = coupling_ring(1, 6);
        let w = solve_w(&ring).unwrap();
        for d in 0..=6u32 {
            assert_eq!(w.coefficient(&[d]).unwrap().as_monomial(), Some((1, rat_i(1))));
        }
        let ring2 = coupling_ring(2, 4);
        let w2 = solve_w(&ring2).unwrap();
        // one fixed-point iteration: coefficient of sb2 is 2 x^2
        assert_eq!(
            w2.coefficient_named(&[("sb2", 1)]).unwrap(),
            LaurentLog::monomial(2, rat_i(2))
        );
    }

    #[test]
    fn explicit_composition_formula_matches_solver() {
        for (k, d) in [(1u32, 5u32), (2, 4), (3, 3)] {
            let ring = coupling_ring(k, d);
            assert_eq!(w_explicit(&ring), solve_w(&ring).unwrap(), "K={k} D={d}");
        }
    }

    #[test]
    fn rescale_factors() {
        assert_eq!(Couplings::rescale_factor(1), BigInt::from(2));
        assert_eq!(Couplings::rescale_factor(2), BigInt::from(6));
        assert_eq!(Couplings::rescale_factor(3), BigInt::from(20));
    }

    #[test]
    fn f0_at_zero_couplings() {
        // x^2/2 (log x - 3/2)
        let ring = coupling_ring(2, 3);
        let f0 = f0_closed(&ring).unwrap();
        let c = f0.coefficient(&[0, 0]).unwrap();
        assert_eq!(c.log_coeff(2), rat(1, 2));
        assert_eq!(c.coeff(2), rat(-3, 4));
        assert!(c.coeff(0).is_zero() && c.coeff(1).is_zero());
    }

    #[test]
    fn f0_linear_coupling_coefficients() {
        let ring = coupling_ring(2, 3);
        let f0 = f0_closed(&ring).unwrap();
        // sbar_2 coefficient is x^3/3; in raw couplings s_2 it becomes 2x^3
        let c2 = f0.coefficient_named(&[("sb2", 1)]).unwrap();
        assert_eq!(c2, LaurentLog::monomial(3, rat(1, 3)));
        let s2 = c2.scalar_mul(&Rational::from_integer(Couplings::rescale_factor(2)));
        assert_eq!(s2, LaurentLog::monomial(3, rat_i(2)));
        // sbar_1 coefficient is x^2/2, i.e. s_1 coefficient x^2
        let c1 = f0.coefficient_named(&[("sb1", 1)]).unwrap();
        assert_eq!(
            c1.scalar_mul(&Rational::from_integer(Couplings::rescale_factor(1))),
            LaurentLog::monomial(2, rat_i(1))
        );
    }

    #[test]
    fn f0_second_x_derivative_is_u() {
        let ring = coupling_ring(3, 4);
        let w = solve_w(&ring).unwrap();
        let f0 = f0_from_w(&ring, &w).unwrap();
        assert_eq!(f0.ddx().ddx(), w.log().unwrap());
    }

    #[test]
    fn riemann_hopf_flow_for_w() {
        // dw/dsbar_k = k w^k dw/dx, exact up to one degree below truncation
        let ring = coupling_ring(3, 5);
        let w = solve_w(&ring).unwrap();
        let wx = w.ddx();
        for k in 1..=3u32 {
            let lhs = w.d_var((k - 1) as usize);
            let rhs = (&w.pow(k) * &wx).scalar_mul(&rat_i(k as i64));
            assert_eq!(lhs.truncate_above(4), rhs.truncate_above(4), "k={k}");
        }
    }

    #[test]
    fn v_solution_linear_case() {
        // with only t0 active, v = t0
        let ring = time_ring(2, 4);
        let v = solve_v(&ring).unwrap();
        assert_eq!(v.coefficient(&[1, 0, 0]).unwrap(), LaurentLog::one());
        for k in 2..=4u32 {
            assert!(v.coefficient(&[k, 0, 0]).unwrap().is_zero(), "t0^{k}");
        }
    }

    #[test]
    fn h0_pure_t0_is_cubic() {
        let ring = time_ring(0, 4);
        let h0 = h0_time_series(&ring).unwrap();
        let expect = SeriesElement::var(&ring, 0).pow(3).scalar_mul(&rat(1, 6));
        assert_eq!(h0, expect);
        // <tau_0^3> = 3! * (coefficient of t0^3) = 1
        assert_eq!(h0.coefficient(&[3]).unwrap(), LaurentLog::constant(rat(1, 6)));
    }

    #[test]
    fn riemann_hopf_flow_for_v() {
        // dv/dt_2 = (v^2/2) dv/dt_0 on the solution
        let ring = time_ring(3, 5);
        let v = solve_v(&ring).unwrap();
        let lhs = v.d_var(2);
        let rhs = &v.pow(2).scalar_mul(&rat(1, 2)) * &v.d_var(0);
        assert_eq!(lhs.truncate_above(4), rhs.truncate_above(4));
    }

    #[test]
    fn substituted_times_at_zero_coupling() {
        let ring = coupling_ring(2, 3);
        let ts = t_values(&ring, 3);
        // t0 = x - 1 + ..., t1 = 0 + ..., t_i = -1 + ... for i >= 2
        let zero_idx = [0u32, 0];
        let t0 = ts[0].coefficient(&zero_idx).unwrap();
        assert_eq!(t0.coeff(1), rat_i(1));
        assert_eq!(t0.coeff(0), rat_i(-1));
        assert!(ts[1].coefficient(&zero_idx).unwrap().is_zero());
        assert_eq!(ts[2].coefficient(&zero_idx).unwrap(), LaurentLog::constant(rat_i(-1)));
        assert_eq!(ts[3].coefficient(&zero_idx).unwrap(), LaurentLog::constant(rat_i(-1)));
        // linear coefficients are k^{i+1}
        assert_eq!(
            ts[2].coefficient_named(&[("sb2", 1)]).unwrap(),
            LaurentLog::constant(rat_i(8))
        );
    }

    #[test]
    fn string_equation_holds_for_log_w() {
        let ring = coupling_ring(3, 4);
        let u = solve_w(&ring).unwrap().log().unwrap();
        assert!(string_equation_residual(&ring, &u).unwrap().is_zero());
    }

    #[test]
    fn exp_log_recovers_w() {
        let ring = coupling_ring(2, 5);
        let w = solve_w(&ring).unwrap();
        assert_eq!(w.log().unwrap().exp().unwrap(), w);
    }

    #[test]
    fn h0_substituted_second_derivative_is_u() {
        let ring = coupling_ring(2, 4);
        let u = solve_w(&ring).unwrap().log().unwrap();
        let h0s = h0_substituted(&ring, &u).unwrap();
        assert_eq!(h0s.ddx().ddx(), u);
    }

    #[test]
    fn genus0_identity_residual_vanishes() {
        assert!(genus0_residual(1, 4).unwrap().is_zero());
        assert!(genus0_residual(2, 6).unwrap().is_zero());
    }
}
