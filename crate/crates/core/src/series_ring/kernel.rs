//! Residue-level convolution and inversion shared by both series types.

use crate::padic_core::modular::{inv_mod, mul_mod};
use crate::padic_core::PadicBall;

pub(crate) fn max_precision(xs: &[PadicBall]) -> u32 {
    xs.iter().map(|b| b.precision()).max().unwrap_or(0)
}

pub(crate) fn prefix_min(xs: &[PadicBall]) -> Vec<u32> {
    let mut out = Vec::with_capacity(xs.len());
    let mut cur = u32::MAX;
    for b in xs {
        cur = cur.min(b.precision());
        out.push(cur);
    }
    out
}

/// Cauchy product of `f` and `g` (each zero past its end) up to `out_len`.
///
/// The precision of coefficient `k` is the minimum precision over
/// `f_0..f_k` and `g_0..g_k`; exact zeros past the ends impose nothing.
pub(crate) fn convolve(p: u64, f: &[PadicBall], g: &[PadicBall], out_len: usize) -> Vec<PadicBall> {
    let top = max_precision(f).max(max_precision(g));
    let m = p.pow(top);
    let pf = prefix_min(f);
    let pg = prefix_min(g);
    let fr: Vec<u64> = f.iter().map(|b| b.residue()).collect();
    let gr: Vec<u64> = g.iter().map(|b| b.residue()).collect();
    let mut out = Vec::with_capacity(out_len);
    for k in 0..out_len {
        let lo = (k + 1).saturating_sub(g.len());
        let hi = k.min(f.len().saturating_sub(1));
        let mut acc: u64 = 0;
        if !f.is_empty() && !g.is_empty() && lo <= hi {
            if m < (1 << 32) {
                let mut s: u128 = 0;
                for i in lo..=hi {
                    s += (fr[i] * gr[k - i]) as u128;
                }
                acc = (s % m as u128) as u64;
            } else {
                let mut s: u128 = 0;
                for i in lo..=hi {
                    s += mul_mod(fr[i], gr[k - i], m) as u128;
                    if s >= (1u128 << 100) {
                        s %= m as u128;
                    }
                }
                acc = (s % m as u128) as u64;
            }
        }
        let mut prec = top;
        if let Some(&x) = pf.get(k.min(f.len().saturating_sub(1))) {
            prec = prec.min(x);
        }
        if let Some(&x) = pg.get(k.min(g.len().saturating_sub(1))) {
            prec = prec.min(x);
        }
        let pm = p.pow(prec);
        out.push(PadicBall::from_parts(p, acc % pm, prec));
    }
    out
}

/// Reciprocal of `f` to `out_len` terms; `None` when `f_0` is not a unit.
pub(crate) fn invert(p: u64, f: &[PadicBall], out_len: usize) -> Option<Vec<PadicBall>> {
    let f0 = f.first()?;
    if f0.precision() == 0 || f0.residue() % p == 0 {
        return None;
    }
    let top = max_precision(f);
    let m = p.pow(top);
    let pf = prefix_min(f);
    let fr: Vec<u64> = f.iter().map(|b| b.residue()).collect();
    let g0 = inv_mod(fr[0] % m, m)?;
    let mut g: Vec<u64> = Vec::with_capacity(out_len);
    g.push(g0);
    for k in 1..out_len {
        let hi = k.min(f.len() - 1);
        let mut s: u128 = 0;
        if m < (1 << 32) {
            for i in 1..=hi {
                s += (fr[i] * g[k - i]) as u128;
            }
        } else {
            for i in 1..=hi {
                s += mul_mod(fr[i], g[k - i], m) as u128;
                if s >= (1u128 << 100) {
                    s %= m as u128;
                }
            }
        }
        let s = (s % m as u128) as u64;
        g.push(mul_mod((m - s) % m, g0, m));
    }
    Some(
        g.into_iter()
            .enumerate()
            .map(|(k, r)| {
                let prec = pf[k.min(f.len() - 1)];
                PadicBall::from_parts(p, r % p.pow(prec), prec)
            })
            .collect(),
    )
}
