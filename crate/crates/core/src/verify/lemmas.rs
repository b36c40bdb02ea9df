//! Lemma-level checks on the coefficient tables.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::congruence::{low_truncation_mod_p, perturb};
use super::report::{DegreesChecked, FirstFailure, VerifyReport};
use super::Fault;
use crate::error::{Error, Result};
use crate::hypergeom::{CoeffTable, HGParams};
use crate::padic_core::rational::int;
use crate::padic_core::{psi_gamma, PadicBall};
use crate::series_ring::LaurentPoly;

/// `count` pairs `(k, k')` below `len` with `k = k' mod p^m`, reproducible from `seed`.
pub fn sample_pairs(len: usize, modulus: usize, count: usize, seed: u64) -> Vec<(usize, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let k = rng.gen_range(0..len);
            let steps = (len - 1 - k) / modulus;
            let j = rng.gen_range(0..=steps);
            (k, k + j * modulus)
        })
        .collect()
}

/// `v_p(B_k/A_k - B_{k'}/A_{k'}) >= m` for every pair.
pub fn check_lipschitz(h: &HGParams, m: u32, pairs: &[(usize, usize)], fault: Option<Fault>) -> Result<VerifyReport> {
    let started = Instant::now();
    let modulus = h.p.pow(m) as usize;
    if let Some(&(k, k2)) = pairs.iter().find(|&&(k, k2)| k.max(k2) >= h.m || k.abs_diff(k2) % modulus != 0) {
        return Err(Error::InvalidParameter(format!("pair ({k}, {k2}) is out of range or not congruent mod p^{m}")));
    }
    if let Some(Fault { index }) = fault {
        if index >= pairs.len() {
            return Err(Error::InvalidParameter(format!("fault index {index} exceeds {} pairs", pairs.len())));
        }
    }
    let t = CoeffTable::build(h)?;
    let mut failure = None;
    for (i, &(k, k2)) in pairs.iter().enumerate() {
        let mut x = t.hat_ratio(k)?;
        let y = t.hat_ratio(k2)?;
        if x.precision().min(y.precision()) < m {
            return Err(Error::InsufficientPrecision(format!(
                "B_k/A_k known to {} digits, need {m}",
                x.precision().min(y.precision())
            )));
        }
        if fault.map(|f| f.index) == Some(i) {
            x = x.perturbed(m - 1);
        }
        let (xr, yr) = (x.residue_mod(m).unwrap(), y.residue_mod(m).unwrap());
        if xr != yr {
            failure = Some(FirstFailure { index: k as i64, other_index: Some(k2 as i64), lhs: xr, rhs: yr });
            break;
        }
    }
    let degrees = DegreesChecked {
        lo: pairs.iter().map(|&(k, k2)| k.min(k2) as i64).min().unwrap_or(0),
        hi: pairs.iter().map(|&(k, k2)| k.max(k2) as i64).max().unwrap_or(-1),
        count: pairs.len(),
    };
    Ok(VerifyReport::new("lipschitz", h, modulus as u64, degrees, failure, started))
}

/// Parameters `a = d p^n - l`, `s = 1`, `c = 1` used by [`check_blal`].
pub fn blal_params(p: u64, n: u32, l: u64, d: i64) -> Result<HGParams> {
    if l >= p {
        return Err(Error::InvalidParameter(format!("l = {l} must be below p = {p}")));
    }
    if d % p as i64 == 0 {
        return Err(Error::InvalidParameter(format!("d = {d} must be prime to p = {p}")));
    }
    let a = d as i128 * p.pow(n) as i128 - l as i128;
    if a <= 0 {
        return Err(Error::InvalidParameter(format!("a = {a} is a non-positive integer")));
    }
    HGParams::with_len(p, int(a as i64), 1, int(1), n, l as usize + 1)
}

/// `B_l / A_l = Psi(a + l) - Psi(1 + l)` modulo `p^n` for `a = d p^n - l`.
pub fn check_blal(p: u64, n: u32, l: u64, d: i64, fault: Option<Fault>) -> Result<VerifyReport> {
    let started = Instant::now();
    let h = blal_params(p, n, l, d)?;
    let t = CoeffTable::build(&h)?;
    let mut lhs = t.hat_ratio(l as usize)?;
    if fault.is_some() {
        lhs = lhs.perturbed(n - 1);
    }
    let rhs = psi_gamma(&(&h.a + int(l as i64)), p, n)?.sub(&psi_gamma(&int(1 + l as i64), p, n)?)?;
    let (x, y) = (lhs.residue_mod(n), rhs.residue_mod(n));
    let failure = if x.is_some() && x == y {
        None
    } else {
        Some(FirstFailure { index: l as i64, other_index: None, lhs: x.unwrap_or(u64::MAX), rhs: y.unwrap_or(u64::MAX) })
    };
    let degrees = DegreesChecked { lo: l as i64, hi: l as i64, count: 1 };
    Ok(VerifyReport::new("blal", &h, h.modulus(), degrees, failure, started))
}

/// `S_m = sum_{i+j=m} A_{i+p^n} B_j - A_i B_{j+p^n} = 0 mod p^n` for `m <= m_max`.
pub fn check_sm(h: &HGParams, m_max: usize, fault: Option<Fault>) -> Result<VerifyReport> {
    let started = Instant::now();
    let big = h.modulus() as usize;
    let need = m_max + big + 1;
    let h = if h.m < need { HGParams::with_len(h.p, h.a.clone(), h.s, h.c.clone(), h.n, need)? } else { h.clone() };
    let t = CoeffTable::build(&h)?;
    let a = (0..need).map(|k| t.a_ball(k)).collect::<Result<Vec<_>>>()?;
    let mut b = t.b[..need].to_vec();
    if let Some(Fault { index }) = fault {
        if index > m_max {
            return Err(Error::InvalidParameter(format!("fault index {index} exceeds m = {m_max}")));
        }
        b[index + big] = b[index + big].perturbed(h.n - 1);
    }
    let mut failure = None;
    for m in 0..=m_max {
        let mut s = PadicBall::zero(h.p, h.nw)?;
        for i in 0..=m {
            let j = m - i;
            s = s.add(&a[i + big].mul(&b[j])?)?.sub(&a[i].mul(&b[j + big])?)?;
        }
        match s.residue_mod(h.n) {
            Some(0) => {}
            r => {
                failure = Some(FirstFailure { index: m as i64, other_index: None, lhs: r.unwrap_or(u64::MAX), rhs: 0 });
                break;
            }
        }
    }
    let degrees = DegreesChecked { lo: 0, hi: m_max as i64, count: m_max + 1 };
    Ok(VerifyReport::new("sm", &h, h.modulus(), degrees, failure, started))
}

/// `F_{<p}` has degree `l` and `F(t) = (-1)^{l s} t^l F(1/t)` over `F_p`.
pub fn check_reflection_unit(h: &HGParams, fault: Option<Fault>) -> Result<VerifyReport> {
    let started = Instant::now();
    let p = h.p;
    let l = h.branch().l as i64;
    let f = perturb(&low_truncation_mod_p(h, &h.a)?, fault, 0)?;
    let lhs = LaurentPoly::from_series_prefix(&f, f.len())?;
    let sign = if (l as u64 * h.s as u64) % 2 == 1 { p - 1 } else { 1 };
    let rhs = lhs.omega_invert().shift(l).scale(&PadicBall::new(p, sign, 1)?)?;
    let lo = -(p as i64 - 1);
    let hi = p as i64 - 1 + l;
    let x = lhs.residues_mod(1, lo, hi);
    let y = rhs.residues_mod(1, lo, hi);
    let mut failure = (0..x.len()).find(|&i| x[i] != y[i]).map(|i| FirstFailure {
        index: lo + i as i64,
        other_index: None,
        lhs: x[i].unwrap_or(u64::MAX),
        rhs: y[i].unwrap_or(u64::MAX),
    });
    let degree = f.coeffs().iter().rposition(|b| b.residue() != 0).map(|d| d as i64);
    if failure.is_none() && degree != Some(l) {
        failure = Some(FirstFailure { index: degree.unwrap_or(-1), other_index: None, lhs: degree.unwrap_or(-1) as u64, rhs: l as u64 });
    }
    let degrees = DegreesChecked { lo, hi, count: x.len() };
    Ok(VerifyReport::new("reflect", h, p, degrees, failure, started))
}
