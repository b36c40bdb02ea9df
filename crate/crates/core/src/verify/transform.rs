//! Transformation formulas under `t -> 1/t`, checked as finite Laurent identities.

use std::time::Instant;

use num_traits::{Signed, ToPrimitive};

use super::congruence::perturb;
use super::lemmas::check_reflection_unit;
use super::report::{DegreesChecked, FirstFailure, VerifyReport};
use super::Fault;
use crate::error::{Error, Result};
use crate::hypergeom::{dwork_orbit, series_f, series_f_prime_frob, series_g_hat, series_g_log, CoeffTable, HGParams};
use crate::padic_core::rational::int;
use crate::padic_core::PadicBall;
use crate::series_ring::{LaurentPoly, PowerSeries};

/// Whether the transformation formulas are theorems for these parameters:
/// `s = 2` and `a = A/N` with `0 < a < 1`, `N >= 2`, `p > N`.
pub fn is_proved_instance(h: &HGParams) -> bool {
    let den = h.a.denom().to_u64().unwrap_or(u64::MAX);
    h.s == 2 && h.a.is_positive() && h.a < int(1) && den >= 2 && h.p > den
}

/// Certifies that `F_{<p}` reflects to a unit for every orbit member.
fn certify_orbit(h: &HGParams) -> Result<Option<VerifyReport>> {
    let (orbit, period) = dwork_orbit(&h.a, h.p, 64)?;
    if period.is_none() {
        return Err(Error::InvalidParameter(format!(
            "a = {} has no Dwork orbit period; transformation checks need one",
            h.a
        )));
    }
    for a in orbit {
        let r = check_reflection_unit(&h.with_a(a)?, None)?;
        if !r.pass {
            return Ok(Some(r));
        }
    }
    Ok(None)
}

fn laurent(f: &PowerSeries, len: usize) -> Result<LaurentPoly> {
    LaurentPoly::from_series_prefix(f, len)
}

fn table_at(h: &HGParams, len: usize) -> Result<CoeffTable> {
    let hb = if h.m < len { HGParams::with_len(h.p, h.a.clone(), h.s, h.c.clone(), h.n, len)? } else { h.clone() };
    CoeffTable::build(&hb)
}

/// Compares the difference polynomial to zero on `lo..=hi`, recording residues.
fn zero_check(diff: &LaurentPoly, lhs: &LaurentPoly, rhs: &LaurentPoly, n: u32, lo: i64, hi: i64) -> (DegreesChecked, Option<FirstFailure>, Vec<u64>) {
    let res = diff.residues_mod(n, lo, hi);
    let failure = res.iter().position(|r| *r != Some(0)).map(|i| {
        let d = lo + i as i64;
        let get = |f: &LaurentPoly| f.coeff(d).map_or(Some(0), |b| b.residue_mod(n)).unwrap_or(u64::MAX);
        FirstFailure { index: d, other_index: None, lhs: get(lhs), rhs: get(rhs) }
    });
    let residues = res.iter().map(|r| r.unwrap_or(u64::MAX)).collect();
    (DegreesChecked { lo, hi, count: (hi - lo + 1) as usize }, failure, residues)
}

fn precondition_failure(check: &str, h: &HGParams, r: VerifyReport, started: Instant) -> VerifyReport {
    let mut out = VerifyReport::new(check, h, h.modulus(), r.degrees_checked, r.first_failure, started);
    out.conjectural = !is_proved_instance(h);
    out.note = Some(format!("reflection precondition failed for a = {}", r.params.a));
    out
}

/// `G_{<p^n}(t) F_{<p^n}(1/t) + G-hat_{<p^n}(1/t) F_{<p^n}(t) = 0 mod p^n`,
/// where `G-hat` uses `c^{-1}`.
pub fn check_transform_log(h: &HGParams, fault: Option<Fault>) -> Result<VerifyReport> {
    let started = Instant::now();
    let check = "transform-log";
    if let Some(r) = certify_orbit(h)? {
        return Ok(precondition_failure(check, h, r, started));
    }
    let big = h.modulus() as usize;
    let t = table_at(h, big)?;
    let t_hat = table_at(&h.with_inverse_c(), big)?;
    let f = laurent(&series_f(&t)?, big)?;
    let g = laurent(&perturb(&series_g_log(&t)?, fault, h.n - 1)?, big)?;
    let g_hat = laurent(&series_g_hat(&t_hat)?, big)?;
    let lhs = g.mul(&f.omega_invert())?;
    let rhs = g_hat.omega_invert().mul(&f)?.neg();
    let diff = lhs.sub(&rhs)?;
    let hi = big as i64 - 1;
    let (degrees, failure, residues) = zero_check(&diff, &lhs, &rhs, h.n, -hi, hi);
    let mut r = VerifyReport::new(check, h, h.modulus(), degrees, failure, started);
    r.conjectural = !is_proved_instance(h);
    r.residues = Some(residues);
    Ok(r)
}

/// `F_{<p^n}(t) D(1/t) = ((-1)^s t)^l F_{<p^n}(1/t) D(t) mod p^n`, with
/// `D = [F_{a'}(t^p)]_{<p^n}`. The Frobenius constant plays no part.
pub fn check_transform_dwork(h: &HGParams, fault: Option<Fault>) -> Result<VerifyReport> {
    let started = Instant::now();
    let check = "transform-dwork";
    if let Some(r) = certify_orbit(h)? {
        return Ok(precondition_failure(check, h, r, started));
    }
    let p = h.p;
    let big = h.modulus() as usize;
    let t = table_at(h, big)?;
    let f_series = series_f(&t)?;
    let f = laurent(&f_series, big)?;
    let f_lhs = laurent(&perturb(&f_series, fault, h.n - 1)?, big)?;
    let d = laurent(&series_f_prime_frob(&t)?, big)?;
    let l = h.branch().l as i64;
    let negative = (h.s as i64 * l) % 2 == 1;
    let sign = PadicBall::from_i64(p, if negative { -1 } else { 1 }, h.nw)?;
    let lhs = f_lhs.mul(&d.omega_invert())?;
    let rhs = f.omega_invert().mul(&d)?.shift(l).scale(&sign)?;
    let diff = lhs.sub(&rhs)?;
    let lo = lhs.min_degree().into_iter().chain(rhs.min_degree()).min().unwrap_or(0);
    let hi = lhs.max_degree().into_iter().chain(rhs.max_degree()).max().unwrap_or(0);
    let (degrees, failure, residues) = zero_check(&diff, &lhs, &rhs, h.n, lo, hi);
    let mut r = VerifyReport::new(check, h, h.modulus(), degrees, failure, started);
    r.conjectural = !is_proved_instance(h);
    r.residues = Some(residues);
    Ok(r)
}

/// `E(t) = G(t) + (-1)^{l s} t^l G-hat(1/t)` with both series cut at `p`.
pub fn example_polynomial(h: &HGParams) -> Result<LaurentPoly> {
    let p = h.p;
    let h1 = HGParams::with_all(p, h.a.clone(), h.s, h.c.clone(), 1, h.m.max(p as usize), h.nw)?;
    let t = CoeffTable::build(&h1)?;
    let t_hat = CoeffTable::build(&h1.with_inverse_c())?;
    let g = laurent(&series_g_log(&t)?, p as usize)?;
    let g_hat = laurent(&series_g_hat(&t_hat)?, p as usize)?;
    let l = h.branch().l as i64;
    let negative = (h.s as i64 * l) % 2 == 1;
    let sign = PadicBall::from_i64(p, if negative { -1 } else { 1 }, 1)?;
    g.add(&g_hat.omega_invert().shift(l).scale(&sign)?)
}

/// The mod-`p` identity `E(t) = 0` coefficient by coefficient.
pub fn check_example_mod_p(h: &HGParams) -> Result<VerifyReport> {
    let started = Instant::now();
    let e = example_polynomial(h)?;
    let lo = e.min_degree().unwrap_or(0);
    let hi = e.max_degree().unwrap_or(0);
    let zero = LaurentPoly::zero(h.p);
    let (degrees, failure, residues) = zero_check(&e, &e, &zero, 1, lo, hi);
    let h1 = HGParams::with_all(h.p, h.a.clone(), h.s, h.c.clone(), 1, h.m, h.nw)?;
    let mut r = VerifyReport::new("example", &h1, h.p, degrees, failure, started);
    r.conjectural = !is_proved_instance(h);
    r.residues = Some(residues);
    Ok(r)
}
