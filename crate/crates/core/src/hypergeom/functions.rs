//! The hypergeometric series and the three quotient functions built from them.

use super::coeffs::CoeffTable;
use super::params::HGParams;
use crate::error::Result;
use crate::padic_core::rational::int;
use crate::series_ring::PowerSeries;

/// `F(t)` to `M` terms.
pub fn series_f(t: &CoeffTable) -> Result<PowerSeries> {
    let coeffs = (0..t.params.m).map(|k| t.a_ball(k)).collect::<Result<Vec<_>>>()?;
    PowerSeries::new(t.params.p, coeffs)
}

/// `F_{a'}(t)` to `len` terms, `len` at most the stored table length.
pub fn series_f_prime(t: &CoeffTable, len: usize) -> Result<PowerSeries> {
    let coeffs = (0..len.min(t.a1.len())).map(|j| t.a1_ball(j)).collect::<Result<Vec<_>>>()?;
    PowerSeries::new(t.params.p, coeffs)
}

/// `F_{a'}(t^p)` to `M` terms.
pub fn series_f_prime_frob(t: &CoeffTable) -> Result<PowerSeries> {
    let p = t.params.p as usize;
    let m = t.params.m;
    series_f_prime(t, m.div_ceil(p))?.frobenius_substitute(&int(1), m)
}

/// `G-hat(t) = sum B_k t^k`.
pub fn series_g_hat(t: &CoeffTable) -> Result<PowerSeries> {
    PowerSeries::new(t.params.p, t.b.clone())
}

/// `G(t) = sum G_k t^k`.
pub fn series_g_log(t: &CoeffTable) -> Result<PowerSeries> {
    PowerSeries::new(t.params.p, t.g.clone())
}

/// `F(t) / F_{a'}(t^p)`.
pub fn fn_dwork(t: &CoeffTable) -> Result<PowerSeries> {
    series_f(t)?.mul(&series_f_prime_frob(t)?.invert()?)
}

/// `G(t) / F(t)`.
pub fn fn_log(t: &CoeffTable) -> Result<PowerSeries> {
    series_g_log(t)?.mul(&series_f(t)?.invert()?)
}

/// `G-hat(t) / F(t)`.
pub fn fn_hat(t: &CoeffTable) -> Result<PowerSeries> {
    series_g_hat(t)?.mul(&series_f(t)?.invert()?)
}

/// Which of the three quotient functions to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FnKind {
    Dwork,
    Log,
    Hat,
}

pub fn evaluate(kind: FnKind, params: &HGParams) -> Result<PowerSeries> {
    let t = CoeffTable::build(params)?;
    match kind {
        FnKind::Dwork => fn_dwork(&t),
        FnKind::Log => fn_log(&t),
        FnKind::Hat => fn_hat(&t),
    }
}
