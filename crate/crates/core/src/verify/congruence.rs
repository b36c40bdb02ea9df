//! Congruences between the infinite quotients and their truncated versions.

use std::time::Instant;

use super::report::{DegreesChecked, FirstFailure, VerifyReport};
use super::Fault;
use crate::error::{Error, Result};
use crate::hypergeom::{dwork_prime, series_f, series_f_prime_frob, series_g_hat, series_g_log, CoeffTable, HGParams};
use crate::padic_core::{PadicBall, Rational};
use crate::series_ring::PowerSeries;

/// Compares `lhs` and `rhs` modulo `p^n` on degrees below `len`.
pub(crate) fn compare(lhs: &PowerSeries, rhs: &PowerSeries, n: u32, len: usize) -> (DegreesChecked, Option<FirstFailure>) {
    let degrees = DegreesChecked { lo: 0, hi: len as i64 - 1, count: len };
    let failure = lhs.first_disagreement(rhs, n, len).map(|k| FirstFailure {
        index: k as i64,
        other_index: None,
        lhs: lhs.coeff(k).and_then(|b| b.residue_mod(n)).unwrap_or(u64::MAX),
        rhs: rhs.coeff(k).and_then(|b| b.residue_mod(n)).unwrap_or(u64::MAX),
    });
    (degrees, failure)
}

pub(crate) fn perturb(f: &PowerSeries, fault: Option<Fault>, shift: u32) -> Result<PowerSeries> {
    let Some(Fault { index }) = fault else {
        return Ok(f.clone());
    };
    if index >= f.len() {
        return Err(Error::InvalidParameter(format!(
            "fault index {index} is outside the {} computed coefficients",
            f.len()
        )));
    }
    let mut coeffs = f.coeffs().to_vec();
    coeffs[index] = coeffs[index].perturbed(shift);
    if f.is_exact() {
        PowerSeries::polynomial(f.p(), coeffs)
    } else {
        PowerSeries::new(f.p(), coeffs)
    }
}

fn require_len(h: &HGParams) -> Result<usize> {
    let big = h.modulus() as usize;
    if h.m < big {
        return Err(Error::InvalidParameter(format!("M = {} is below p^n = {big}", h.m)));
    }
    Ok(big)
}

/// `num / den` against `num_{<p^n} / den_{<p^n}` on all computed degrees.
fn quotient_congruence(
    check: &str,
    h: &HGParams,
    num: &PowerSeries,
    den: &PowerSeries,
    lhs_num: &PowerSeries,
    lhs_den: &PowerSeries,
    started: Instant,
) -> Result<VerifyReport> {
    let big = require_len(h)?;
    let lhs = lhs_num.mul(&lhs_den.invert()?)?;
    let rhs = num.truncate_below(big)?.mul(&den.truncate_below(big)?.invert_to(h.m)?)?;
    let (degrees, failure) = compare(&lhs, &rhs, h.n, h.m);
    Ok(VerifyReport::new(check, h, h.modulus(), degrees, failure, started))
}

/// `G-hat / F` against `G-hat_{<p^n} / F_{<p^n}`.
pub fn check_congruence_hat(h: &HGParams, fault: Option<Fault>) -> Result<VerifyReport> {
    let started = Instant::now();
    let t = CoeffTable::build(h)?;
    let g = series_g_hat(&t)?;
    let f = series_f(&t)?;
    let g_faulty = perturb(&g, fault, h.n - 1)?;
    quotient_congruence("hat", h, &g, &f, &g_faulty, &f, started)
}

/// `F / F_{a'}(t^p)` against `F_{<p^n} / [F_{a'}(t^p)]_{<p^n}`.
pub fn check_congruence_dwork(h: &HGParams, fault: Option<Fault>) -> Result<VerifyReport> {
    let started = Instant::now();
    let t = CoeffTable::build(h)?;
    let f = series_f(&t)?;
    let d = series_f_prime_frob(&t)?;
    let d_faulty = perturb(&d, fault, h.n - 1)?;
    quotient_congruence("dwork", h, &f, &d, &f, &d_faulty, started)
}

/// `G / F` against `G_{<p^n} / F_{<p^n}`.
pub fn check_congruence_log(h: &HGParams, fault: Option<Fault>) -> Result<VerifyReport> {
    let started = Instant::now();
    let t = CoeffTable::build(h)?;
    let g = series_g_log(&t)?;
    let f = series_f(&t)?;
    let g_faulty = perturb(&g, fault, h.n - 1)?;
    quotient_congruence("log", h, &g, &f, &g_faulty, &f, started)
}

/// `F_{<p}` for parameter `a`, reduced mod `p`, as an exact polynomial.
pub(crate) fn low_truncation_mod_p(h: &HGParams, a: &Rational) -> Result<PowerSeries> {
    let hp = HGParams::with_all(h.p, a.clone(), h.s, h.c.clone(), 1, h.p as usize, h.nw.max(2))?;
    let t = CoeffTable::build(&hp)?;
    series_f(&t)?.truncate_below(h.p as usize).map(|f| f.truncate_precision(1))
}

fn poly_pow(f: &PowerSeries, mut e: u64) -> Result<PowerSeries> {
    let mut base = f.clone();
    let mut acc = PowerSeries::polynomial(f.p(), vec![PadicBall::one(f.p(), 1)?])?;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&base)?;
        }
        e >>= 1;
        if e > 0 {
            base = base.mul(&base)?;
        }
    }
    Ok(acc)
}

/// `F_{<p^n} = prod_{i<n} [F_{a^(i)}(t)_{<p}]^{p^i}` modulo `p`.
pub fn check_trunc_factorization(h: &HGParams, fault: Option<Fault>) -> Result<VerifyReport> {
    let started = Instant::now();
    let p = h.p;
    let big = h.modulus() as usize;
    let hb = HGParams::with_all(p, h.a.clone(), h.s, h.c.clone(), h.n, big, h.nw)?;
    let lhs = series_f(&CoeffTable::build(&hb)?)?.truncate_below(big)?.truncate_precision(1);
    let lhs = perturb(&lhs, fault, 0)?;
    let mut rhs = PowerSeries::polynomial(p, vec![PadicBall::one(p, 1)?])?;
    let mut a = h.a.clone();
    for i in 0..h.n {
        let factor = low_truncation_mod_p(h, &a)?;
        rhs = rhs.mul(&poly_pow(&factor, p.pow(i))?)?;
        a = dwork_prime(&a, p)?;
    }
    let lhs = lhs.extended(big)?;
    let rhs = rhs.extended(big.max(rhs.len()))?;
    let (degrees, mut failure) = compare(&lhs, &rhs, 1, big);
    if failure.is_none() {
        if let Some(k) = (big..rhs.len()).find(|&k| rhs.coeff(k).and_then(|b| b.residue_mod(1)) != Some(0)) {
            failure = Some(FirstFailure { index: k as i64, other_index: None, lhs: 0, rhs: rhs.coeff(k).unwrap().residue() });
        }
    }
    Ok(VerifyReport::new("factor", h, p, degrees, failure, started))
}
