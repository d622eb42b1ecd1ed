//! The two-point-function route to the genus-zero GUE free energy.
//!
//! Two families of deformed flat coordinates `theta_{1,p}`, `theta_{2,p}` are
//! generated in the flat coordinates `(u, v)` of the underlying
//! two-dimensional Frobenius structure. Here they are represented as series
//! in `v` whose coefficients live in the Laurent-plus-log ring in
//! `E := e^u` (so `u` itself appears as `log E`, and `d/du = E d/dE`).
//!
//! Their two-point functions `Omega_{a,p;b,q}` are extracted from the
//! generating identity
//! `sum Omega z^p y^q = [d_v theta_a(z) d_u theta_b(y) + d_u theta_a(z) d_v theta_b(y) - delta_{a+b,3}] / (z + y)`
//! by exact polynomial division (the numerator must vanish at `y = -z`;
//! failure is an error). The `(2,p;2,q)` family also has closed forms, which
//! the tests compare against the generating extraction.
//!
//! On the even-coupling solution branch the second flat coordinate vanishes,
//! `E` becomes the planar series `w`, and the free energy assembles from the
//! `Omega` values; agreement with the closed form of `genus0` is the
//! cross-check of this whole layer.

use std::sync::Arc;

use num::{BigInt, One, Zero};
use thiserror::Error;

use crate::genus0::solve_w;
use crate::laurent::LaurentLog;
use crate::rational::{factorial, harmonic, rat, Rational};
use crate::series::{SeriesElement, SeriesError, SeriesRing};

#[derive(Debug, Error)]
pub enum ThetaError {
    #[error("generating numerator is not divisible by z + y at z^{0} y^{1}")]
    DivisionFailure(usize, usize),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// `theta_{which,p}(u, v)` as a series in `v` (to degree `v_degree`) with
/// coefficients Laurent in `E = e^u`.
pub fn theta_series(which: u8, p: u32, v_degree: u32) -> SeriesElement {
    let ring = SeriesRing::total_degree(&["v"], v_degree);
    let mut out = SeriesElement::zero(&ring);
    match which {
        1 => {
            // -2 sum_{2m+j=p} (c_m - u/2) E^m v^j / ((m!)^2 j!)
            for m in 0..=(p / 2) {
                let j = p - 2 * m;
                if j > v_degree {
                    continue;
                }
                let denom = factorial(m) * factorial(m) * factorial(j);
                let scale = Rational::new(BigInt::from(-2), denom);
                let coef = &LaurentLog::monomial(m as i64, &harmonic(m) * &scale)
                    + &LaurentLog::log_monomial(m as i64, rat(-1, 2) * &scale);
                out = &out + &SeriesElement::var(&ring, 0).pow(j).coeff_mul(&coef);
            }
        }
        2 => {
            // sum_{2m+j-1=p, (m,j) != (0,0)} E^m v^j / ((m!)^2 j!)
            for m in 0..=((p + 1) / 2) {
                let Some(j) = (p + 1).checked_sub(2 * m) else { continue };
                if (m, j) == (0, 0) || j > v_degree {
                    continue;
                }
                let denom = factorial(m) * factorial(m) * factorial(j);
                let coef = LaurentLog::monomial(m as i64, Rational::new(BigInt::one(), denom));
                out = &out + &SeriesElement::var(&ring, 0).pow(j).coeff_mul(&coef);
            }
        }
        _ => panic!("theta family must be 1 or 2"),
    }
    out
}

/// `d/du` on the coefficient ring: `E d/dE`, with `log E -> 1`.
fn d_u(l: &LaurentLog) -> LaurentLog {
    l.ddx().mul_xpow(1)
}

/// `(d_v theta, d_u theta)` at `v = 0` for `p = 0 … p_max`.
fn theta_derivatives(which: u8, p_max: usize) -> (Vec<LaurentLog>, Vec<LaurentLog>) {
    let mut dv = Vec::with_capacity(p_max + 1);
    let mut du = Vec::with_capacity(p_max + 1);
    for p in 0..=p_max {
        let th = theta_series(which, p as u32, 1);
        dv.push(th.coefficient(&[1]).unwrap());
        du.push(d_u(&th.coefficient(&[0]).unwrap()));
    }
    (dv, du)
}

/// Two-point values `Omega_{alpha,p;beta,q}` for `p + q < total`, extracted
/// from the generating identity by exact division by `z + y`.
///
/// Returned as `table[p][q]`, coefficients Laurent(-plus-log) in `E`.
pub fn omega_table(
    alpha: u8,
    beta: u8,
    total: usize,
) -> Result<Vec<Vec<LaurentLog>>, ThetaError> {
    let (dv_a, du_a) = theta_derivatives(alpha, total);
    let (dv_b, du_b) = theta_derivatives(beta, total);
    let delta = alpha + beta == 3;

    let n = |p: usize, q: usize| -> LaurentLog {
        let mut v = &(&dv_a[p] * &du_b[q]) + &(&du_a[p] * &dv_b[q]);
        if delta && p == 0 && q == 0 {
            v = &v - &LaurentLog::one();
        }
        v
    };

    // division by (z + y): N_{p,q} = Omega_{p-1,q} + Omega_{p,q-1}
    let mut omega: Vec<Vec<LaurentLog>> = vec![vec![LaurentLog::zero(); total]; total];
    for d in 0..total {
        for q in 0..=d {
            let p = d - q;
            let val = if q == 0 {
                n(p + 1, 0)
            } else {
                &n(p + 1, q) - &omega[p + 1][q - 1]
            };
            omega[p][q] = val;
        }
    }
    // full consistency pass; failure means the numerator was not divisible
    for p in 0..=total {
        for q in 0..=total - p {
            let mut expect = LaurentLog::zero();
            if p >= 1 && p - 1 < total && q < total {
                expect = &expect + &omega[p - 1][q];
            }
            if q >= 1 && p < total && q - 1 < total {
                expect = &expect + &omega[p][q - 1];
            }
            if n(p, q) != expect {
                return Err(ThetaError::DivisionFailure(p, q));
            }
        }
    }
    Ok(omega)
}

/// Closed form of `Omega_{2,p;2,q}` on the even-coupling branch: zero for
/// odd `p + q`, otherwise an explicit multiple of `E^{(p+q)/2 + 1}`.
pub fn omega_even_closed(p: u32, q: u32) -> LaurentLog {
    if (p + q) % 2 == 1 {
        return LaurentLog::zero();
    }
    let half = ((p + q) / 2) as i64;
    if p % 2 == 0 {
        // p, q both even
        let denom = BigInt::from(half + 1)
            * factorial(p / 2).pow(2)
            * factorial(q / 2).pow(2);
        LaurentLog::monomial(half + 1, Rational::new(BigInt::one(), denom))
    } else {
        // p, q both odd
        let np = ((p + 1) / 2) as i64;
        let nq = ((q + 1) / 2) as i64;
        let denom = BigInt::from(half + 1)
            * factorial((p + 1) / 2).pow(2)
            * factorial((q + 1) / 2).pow(2);
        LaurentLog::monomial(half + 1, Rational::new(BigInt::from(np * nq), denom))
    }
}

/// Evaluates a Laurent(-plus-log) element of the `E` ring on the planar
/// series: `E^n -> w^n`, `log E -> u`.
fn eval_in_w(
    l: &LaurentLog,
    ring: &Arc<SeriesRing>,
    wpow: &[SeriesElement],
    u: &SeriesElement,
) -> SeriesElement {
    let mut acc = SeriesElement::zero(ring);
    let mut logpart = SeriesElement::zero(ring);
    for e in 0..wpow.len() as i64 {
        let c = l.coeff(e);
        if !c.is_zero() {
            acc = &acc + &wpow[e as usize].scalar_mul(&c);
        }
        let lc = l.log_coeff(e);
        if !lc.is_zero() {
            logpart = &logpart + &wpow[e as usize].scalar_mul(&lc);
        }
    }
    &acc + &(&logpart * u)
}

/// Assembles the genus-zero free energy from the two-point values on the
/// even-coupling branch (second flat coordinate forced to zero) and the
/// conversion `(2q)! s_q = (q!)^2 sbar_q`. Must equal the closed form.
pub fn f0_via_omega(ring: &Arc<SeriesRing>) -> Result<SeriesElement, ThetaError> {
    let k_max = ring.num_vars() as u32;
    let t22 = omega_table(2, 2, (4 * k_max) as usize)?;
    let t12 = omega_table(1, 2, (2 * k_max + 1) as usize)?;
    let t11 = omega_table(1, 1, 1)?;

    let w = solve_w(ring)?;
    let u = w.log()?;
    let mut wpow = vec![SeriesElement::one(ring)];
    for e in 1..=(2 * k_max + 1) {
        let next = &wpow[(e - 1) as usize] * &w;
        wpow.push(next);
    }
    let ev = |l: &LaurentLog| eval_in_w(l, ring, &wpow, &u);
    let sq_fact = |q: u32| Rational::from_integer(factorial(q) * factorial(q));
    let sbar = |q: u32| SeriesElement::var(ring, (q - 1) as usize);
    let xs = SeriesElement::x_pow(ring, 1);
    let one = SeriesElement::one(ring);

    let mut f0 = SeriesElement::zero(ring);
    // 1/2 sum_{p,q>=2} (2p)!(2q)! s_p s_q Omega_{2,2p-1;2,2q-1}
    for p in 2..=k_max {
        for q in 2..=k_max {
            let c = &sq_fact(p) * &sq_fact(q) * rat(1, 2);
            let spq = &sbar(p) * &sbar(q);
            f0 = &f0 + &(&spq * &ev(&t22[(2 * p - 1) as usize][(2 * q - 1) as usize])).scalar_mul(&c);
        }
    }
    // x sum_{q>=1} (2q)! s_q Omega_{1,0;2,2q-1}
    for q in 1..=k_max {
        let term = &(&xs * &sbar(q)) * &ev(&t12[0][(2 * q - 1) as usize]);
        f0 = &f0 + &term.scalar_mul(&sq_fact(q));
    }
    // - x Omega_{1,0;2,1}
    f0 = &f0 - &(&xs * &ev(&t12[0][1]));
    // 1/2 (1 - sbar_1)^2 Omega_{2,1;2,1}
    let one_minus = &one - &sbar(1);
    f0 = &f0 + &(&one_minus.pow(2) * &ev(&t22[1][1])).scalar_mul(&rat(1, 2));
    // sum_{q>=2} (sbar_1 - 1) (2q)! s_q Omega_{2,1;2,2q-1}
    for q in 2..=k_max {
        let term = &(&(&sbar(1) - &one) * &sbar(q)) * &ev(&t22[1][(2 * q - 1) as usize]);
        f0 = &f0 + &term.scalar_mul(&sq_fact(q));
    }
    // 1/2 x^2 Omega_{1,0;1,0}
    let half_x2 = SeriesElement::constant(ring, LaurentLog::monomial(2, rat(1, 2)));
    f0 = &f0 + &(&half_x2 * &ev(&t11[0][0]));
    Ok(f0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genus0::{coupling_ring, f0_closed};
    use crate::rational::rat_i;

    #[test]
    fn low_theta_coefficients() {
        // theta_{2,0} = v
        let t20 = theta_series(2, 0, 2);
        assert_eq!(t20.coefficient(&[1]).unwrap(), LaurentLog::one());
        assert!(t20.coefficient(&[0]).unwrap().is_zero());
        assert!(t20.coefficient(&[2]).unwrap().is_zero());
        // theta_{2,1} = v^2/2 + E
        let t21 = theta_series(2, 1, 2);
        assert_eq!(t21.coefficient(&[0]).unwrap(), LaurentLog::monomial(1, rat_i(1)));
        assert_eq!(t21.coefficient(&[2]).unwrap(), LaurentLog::constant(rat(1, 2)));
        // theta_{1,0} = u (harmonic c_0 = 0)
        let t10 = theta_series(1, 0, 1);
        assert_eq!(t10.coefficient(&[0]).unwrap(), LaurentLog::log_monomial(0, rat_i(1)));
        // theta_{1,1} = u v
        let t11 = theta_series(1, 1, 1);
        assert!(t11.coefficient(&[0]).unwrap().is_zero());
        assert_eq!(t11.coefficient(&[1]).unwrap(), LaurentLog::log_monomial(0, rat_i(1)));
    }

    #[test]
    fn omega_pinned_closed_forms() {
        assert_eq!(omega_even_closed(0, 0), LaurentLog::monomial(1, rat_i(1)));
        assert_eq!(omega_even_closed(1, 1), LaurentLog::monomial(2, rat(1, 2)));
        assert!(omega_even_closed(1, 0).is_zero());
    }

    #[test]
    fn generating_extraction_matches_closed_forms() {
        let table = omega_table(2, 2, 8).unwrap();
        for p in 0..=6usize {
            for q in 0..=6usize {
                if p + q >= 8 {
                    continue;
                }
                assert_eq!(
                    table[p][q],
                    omega_even_closed(p as u32, q as u32),
                    "p={p} q={q}"
                );
            }
        }
    }

    #[test]
    fn mixed_omega_values() {
        // Omega_{1,0;1,0} = u and Omega_{1,0;2,2q-1} = E^q/(q!)^2
        let t11 = omega_table(1, 1, 1).unwrap();
        assert_eq!(t11[0][0], LaurentLog::log_monomial(0, rat_i(1)));
        let t12 = omega_table(1, 2, 7).unwrap();
        for q in 1..=3u32 {
            let expect = LaurentLog::monomial(
                q as i64,
                Rational::new(BigInt::one(), factorial(q) * factorial(q)),
            );
            assert_eq!(t12[0][(2 * q - 1) as usize], expect, "q={q}");
        }
    }

    #[test]
    fn planar_equation_residual_vanishes() {
        // x - w + sum_m m sbar_m w^m = 0 on the solved series
        let ring = coupling_ring(3, 4);
        let w = solve_w(&ring).unwrap();
        let mut resid = &SeriesElement::x_pow(&ring, 1) - &w;
        for m in 1..=3u32 {
            let sm = SeriesElement::var(&ring, (m - 1) as usize);
            resid = &resid + &(&sm * &w.pow(m)).scalar_mul(&rat_i(m as i64));
        }
        assert!(resid.is_zero());
    }

    #[test]
    fn free_energy_via_two_point_functions_matches_closed_form() {
        for (k, d) in [(1u32, 4u32), (2, 5)] {
            let ring = coupling_ring(k, d);
            assert_eq!(
                f0_via_omega(&ring).unwrap(),
                f0_closed(&ring).unwrap(),
                "K={k} D={d}"
            );
        }
    }
}
